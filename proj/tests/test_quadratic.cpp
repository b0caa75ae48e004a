#include "monocat/quadratic.hpp"

#include <functional>

#include "doctest.h"
#include "monocat/internal_category.hpp"

using namespace monocat;

namespace {

Violation rejection(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.violation();
  }
  FAIL("expected a ValidationError");
  return {};
}

}  // namespace

TEST_CASE("parameter constraint pq + 2 = 0 (mod n)") {
  CHECK_NOTHROW(make_qu_params(2, 0, 0));
  CHECK_NOTHROW(make_qu_params(6, 1, 4));
  auto v = rejection([] { make_qu_params(5, 1, 1); });
  CHECK(v.check == "constraint-violated");
  CHECK(v.witness == std::vector<std::uint64_t>{3});
}

TEST_CASE("component monoids") {
  const QuComponents comp = build_qu_components(make_qu_params(6, 2, 2));
  CHECK(comp.k.size == 36);
  CHECK(comp.a.size == 36);

  // K identity is the identity matrix (r,s) = (0,1)
  CHECK(comp.k.identity == 1);
  // A unit is [1,0]
  CHECK(comp.a.identity == 6);
  // [2,1][3,2] = [0, 4*2 + 1*9 + 4*1*2 mod 6] = [0,1]
  CHECK(comp.a.mul(2 * 6 + 1, 3 * 6 + 2) == 0 * 6 + 1);
  // K multiplication is matrix multiplication: (r,s)(r',s') = (r' + r s', s s')
  CHECK(comp.k.mul(1 * 6 + 2, 3 * 6 + 5) == ((3 + 1 * 5) % 6) * 6 + (2 * 5) % 6);

  CHECK(is_commutative(comp.a));
  CHECK_FALSE(is_group(comp.k));
}

TEST_CASE("the circ action formula") {
  const CrossedSemiBimodule x = build_qu(make_qu_params(2, 0, 0));
  // [1,1] o (1,1) = [1*1 - 0, 1*1 - 0 - 1] = [1,0]
  CHECK(x.circ_at(1 * 2 + 1, 1 * 2 + 1) == 1 * 2 + 0);
  // m o identity-matrix = m
  for (Elem m = 0; m < 4; ++m) CHECK(x.circ_at(m, x.k.identity) == m);
  // boundary of the matrix (1,1) is [1,1]
  CHECK(boundary(x)[1 * 2 + 1] == 1 * 2 + 1);
}

TEST_CASE("lambda and rho coincide and commute with each other") {
  const CrossedSemiBimodule x = build_qu(make_qu_params(3, 1, 1));
  CHECK(x.lambda.table == x.rho.table);
  for (Elem m = 0; m < 9; ++m)
    for (Elem n1 = 0; n1 < 9; ++n1)
      for (Elem k = 0; k < 9; ++k)
        CHECK(x.lambda_at(m, x.rho_at(k, n1)) == x.rho_at(x.lambda_at(m, k), n1));
}

TEST_CASE("the interchange identity (mn) o (^m k) = m (n o k)") {
  const CrossedSemiBimodule x = build_qu(make_qu_params(4, 2, 1));
  for (Elem m = 0; m < 16; ++m)
    for (Elem n1 = 0; n1 < 16; ++n1)
      for (Elem k = 0; k < 16; ++k)
        CHECK(x.circ_at(x.a.mul(m, n1), x.lambda_at(m, k)) ==
              x.a.mul(m, x.circ_at(n1, k)));
}

TEST_CASE("every small parameter set validates and builds its category") {
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint32_t p = 0; p < n; ++p)
      for (std::uint32_t q = 0; q < n; ++q) {
        if ((p * q + 2) % n != 0) continue;
        const CrossedSemiBimodule x = build_qu(make_qu_params(n, p, q));
        CHECK(x.a.size == n * n);
        const InternalCategory cat = build_internal_category(x, VerifyOptions{64, 7, 20000});
        CHECK(cat.c1.size == n * n * n * n);
        CHECK(cat.c2_size == static_cast<std::uint64_t>(n) * n * n * n * n * n);
      }
}

TEST_CASE("a larger modulus goes through the sampled-associativity path") {
  const CrossedSemiBimodule x = build_qu(make_qu_params(5, 1, 3));
  const VerifyOptions opts{64, 11, 50000};
  const BuiltInternalCategory built = build_internal_category_reported(x, opts);
  CHECK(built.category.c2_size == 15625);
  CHECK_FALSE(built.category.c2.has_value());
  INFO(built.report.render());
  CHECK(built.report.all_pass());
  bool sampled_note = false;
  for (const auto& line : built.report.lines)
    if (line.name == "monoid-c2" && line.note.rfind("sampled", 0) == 0) sampled_note = true;
  CHECK(sampled_note);
}

TEST_CASE("Qu(2,0,0) category sizes and full verification") {
  const CrossedSemiBimodule x = build_qu(make_qu_params(2, 0, 0));
  const InternalCategory cat = build_internal_category(x);
  CHECK(cat.c0.size == 4);
  CHECK(cat.c1.size == 16);
  CHECK(cat.c2_size == 64);
  CHECK(cat.c2.has_value());  // exhaustively certified

  const CheckReport rep = verify_internal_category(cat);
  INFO(rep.render());
  CHECK(rep.all_pass());

  const SmallCategory small = materialize_category(cat);
  CHECK(small.law_report().all_pass());
}
