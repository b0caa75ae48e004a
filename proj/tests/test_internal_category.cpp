#include "monocat/internal_category.hpp"

#include <functional>

#include "doctest.h"
#include "monocat/catalog.hpp"

using namespace monocat;

namespace {

CrossedSemiBimodule phi_z2_identity() {
  const FiniteMonoid z2 = cyclic_group(2);
  const CrossedSemiModule s = validate_xsmod(validate_hom({0, 1}, z2, z2),
                                             trivial_action(ActionSide::right, z2, z2));
  return phi(s);
}

CrossedSemiBimodule trivial_structure() {
  const FiniteMonoid z1 = cyclic_group(1);
  return validate_xbsmod(z1, z1, validate_set_action(z1, 1, {0}),
                         trivial_action(ActionSide::left, z1, z1),
                         trivial_action(ActionSide::right, z1, z1));
}

}  // namespace

TEST_CASE("bowtie: unit and the twist embedding (1,x)(1,y) = (1, x<>y)") {
  const CrossedSemiBimodule x = phi_z2_identity();
  const FiniteMonoid c1 = bowtie(x);
  CHECK(c1.size == 4);
  CHECK(c1.identity == 0);  // (identity_A, identity_K)

  const FiniteMonoid tw = twist_monoid(x);
  const Elem unit_a = x.a.identity;
  for (Elem e = 0; e < 2; ++e)
    for (Elem f = 0; f < 2; ++f)
      CHECK(c1.mul(unit_a * 2 + e, unit_a * 2 + f) == unit_a * 2 + tw.mul(e, f));
}

TEST_CASE("double_bowtie: trivial K collapses to A itself") {
  const FiniteMonoid z3 = cyclic_group(3);
  const FiniteMonoid z1 = cyclic_group(1);
  const CrossedSemiBimodule x =
      validate_xbsmod(z3, z1, validate_set_action(z1, 3, {0, 1, 2}),
                      trivial_action(ActionSide::left, z3, z1),
                      trivial_action(ActionSide::right, z3, z1));
  const FiniteMonoid c2 = double_bowtie(x);
  CHECK(c2.size == 3);
  CHECK(c2.table == z3.table);
}

TEST_CASE("build_internal_category on a small structure") {
  const CrossedSemiBimodule x = phi_z2_identity();
  const InternalCategory cat = build_internal_category(x);
  CHECK(cat.c0.size == 2);
  CHECK(cat.c1.size == 4);
  CHECK(cat.c2_size == 8);
  CHECK(cat.c2.has_value());

  // d11(a, e) = a o e = a + e
  CHECK(cat.d11 == std::vector<Elem>{0, 1, 1, 0});
  // d21(a, e, g) = (a, e + g)
  CHECK(cat.d21[6] == 2 + 1);  // (a,e,g) = (1,1,0) -> (1,1)

  const CheckReport rep = verify_internal_category(cat);
  INFO(rep.render());
  CHECK(rep.all_pass());
}

TEST_CASE("the trivial structure gives the one-point category") {
  const InternalCategory cat = build_internal_category(trivial_structure());
  CHECK(cat.c0.size == 1);
  CHECK(cat.c1.size == 1);
  CHECK(cat.c2_size == 1);
  CHECK(verify_internal_category(cat).all_pass());
}

TEST_CASE("mutating d21 to d20 is caught by the simplicial and map checks") {
  InternalCategory cat = build_internal_category(phi_z2_identity());
  cat.d21 = cat.d20;
  const CheckReport rep = verify_internal_category(cat);
  CHECK_FALSE(rep.all_pass());
  bool simplicial_failed = false, map_failed = false;
  for (const auto& line : rep.lines) {
    if (!line.pass && line.name.rfind("simplicial-", 0) == 0) simplicial_failed = true;
    if (!line.pass && line.name == "map-d21") map_failed = true;
    // the formula-level homomorphism facts still hold
    if (line.name.rfind("hom-", 0) == 0) CHECK(line.pass);
  }
  CHECK(simplicial_failed);
  CHECK(map_failed);
}

TEST_CASE("composing through the pullback: (f, g) with matching endpoints") {
  const InternalCategory cat = build_internal_category(phi_z2_identity());
  // every h in C2 is the unique composable-pair witness of (d20 h, d22 h)
  for (std::uint64_t h = 0; h < cat.c2_size; ++h)
    CHECK(cat.d11[cat.d20[h]] == cat.d10[cat.d22[h]]);
}

TEST_CASE("materialize_category: identities, endpoints, associativity") {
  const InternalCategory cat = build_internal_category(phi_z2_identity());
  const SmallCategory small = materialize_category(cat);
  CHECK(small.objects() == 2);
  CHECK(small.arrows() == 4);

  const CheckReport laws = small.law_report();
  INFO(laws.render());
  CHECK(laws.all_pass());

  // composable pair ((a,x), (a o x, y)) composes to (a, xy)
  for (std::uint64_t h = 0; h < cat.c2_size; ++h)
    CHECK(small.compose(cat.d20[h], cat.d22[h]) == cat.d21[h]);

  CHECK_THROWS_AS((void)small.compose(small.identity(0), 1 * 2 + 0), ValidationError);
}

TEST_CASE("internal functor from the identity weak morphism is the identity") {
  const CrossedSemiBimodule x = phi_z2_identity();
  const InternalCategory cat = build_internal_category(x);
  const InternalFunctor fun = internal_functor(identity_weak(x), cat, cat);
  for (Elem a = 0; a < cat.c0.size; ++a) CHECK(fun.f0[a] == a);
  for (Elem f = 0; f < cat.c1.size; ++f) CHECK(fun.f1[f] == f);
  for (std::uint64_t h = 0; h < cat.c2_size; ++h) CHECK(fun.f2[h] == h);
}

TEST_CASE("internal functor of a strictified morphism matches the direct one") {
  const CrossedSemiBimodule x = phi_z2_identity();
  const InternalCategory cat = build_internal_category(x);
  const XbsMorphism strict{identity_hom(x.k), identity_hom(x.a)};
  validate_morphism(strict, x, x);
  const InternalFunctor fun = internal_functor(weak_from_morphism(strict), cat, cat);
  // direct construction from (kappa, alpha): (a, e) -> (alpha a, kappa e)
  for (Elem a = 0; a < x.a.size; ++a)
    for (Elem e = 0; e < x.k.size; ++e)
      CHECK(fun.f1[a * x.k.size + e] ==
            strict.alpha.map[a] * x.k.size + strict.kappa.map[e]);
}

TEST_CASE("canonical weak iso induces an internal isomorphism") {
  const FiniteMonoid z2 = cyclic_group(2);
  const FiniteMonoid z4 = cyclic_group(4);
  const std::vector<Elem> neg = {0, 1, 2, 3, 0, 3, 2, 1};
  const CrossedSemiBimodule x = reconstruct_group_xbsmod(
      validate_monoid_action(ActionSide::left, z2, z4, neg),
      validate_monoid_action(ActionSide::right, z2, z4, neg), {0, 1, 0, 1});
  const CanonicalWeakIso iso = canonical_weak_iso(x);
  REQUIRE(iso.report.all_pass());

  const InternalCategory src = build_internal_category(iso.twisted);
  const InternalCategory dst = build_internal_category(x);
  const InternalFunctor fun = internal_functor(iso.forward, src, dst);

  auto bijective = [](const std::vector<Elem>& map) {
    std::vector<bool> hit(map.size(), false);
    for (Elem v : map) {
      if (v >= map.size() || hit[v]) return false;
      hit[v] = true;
    }
    return true;
  };
  CHECK(bijective(fun.f0));
  CHECK(bijective(fun.f1));
  CHECK(bijective(fun.f2));
}
