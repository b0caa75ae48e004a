#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocat/crossed.hpp"
#include "monocat/monoid.hpp"
#include "monocat/report.hpp"

namespace monocat {

struct VerifyOptions {
  /// C2 associativity is certified exhaustively when |C2| <= max_c2 (and the
  /// table is materialized); above that it follows from the homomorphism and
  /// pullback checks and is additionally spot-checked on seeded random triples.
  std::uint64_t max_c2 = 4096;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
};

/// The object-of-morphisms monoid A |x| K on pairs (a,x), numbered
/// index(a,x) = a*|K| + x, with (a,x)(b,y) = (ab, ^a y x^(b o y)).
/// Associativity is asserted exhaustively.
FiniteMonoid bowtie(const CrossedSemiBimodule& x);

/// The composable-pairs monoid A |x| K |x| K on triples, numbered
/// index(a,x,y) = (a*|K| + x)*|K| + y. Materializes the full table, so it
/// requires |A||K|^2 <= max_c2; build_internal_category handles larger sizes
/// through the product formula instead.
FiniteMonoid double_bowtie(const CrossedSemiBimodule& x, const VerifyOptions& opts = {});

/// A truncated internal category in monoids: C0, C1, C2 with the eight
/// structural maps stored as index arrays. C1 is always materialized; the C2
/// table only when |C2| <= max_c2, otherwise products come from the defining
/// formula over `base`.
struct InternalCategory {
  CrossedSemiBimodule base;
  FiniteMonoid c0;
  FiniteMonoid c1;
  std::optional<FiniteMonoid> c2;
  std::uint64_t c2_size = 0;

  std::vector<Elem> d10, d11;  // C1 -> C0
  std::vector<Elem> s00;       // C0 -> C1
  std::vector<Elem> d20, d21, d22;  // C2 -> C1
  std::vector<Elem> s10, s11;       // C1 -> C2

  Elem c1_mul(Elem f, Elem g) const { return c1.mul(f, g); }
  Elem c2_mul(Elem h, Elem hp) const;  // table when materialized, else formula
};

/// Builds the category with the structural maps
///   s00(a) = (a,1)   d10(a,x) = a      d11(a,x) = a o x
///   s10(a,x) = (a,x,1)   s11(a,x) = (a,1,x)
///   d20(a,x,y) = (a,x)   d21(a,x,y) = (a,xy)   d22(a,x,y) = (a o x, y)
/// and verifies every invariant; throws on the first failure.
InternalCategory build_internal_category(const CrossedSemiBimodule& x,
                                         const VerifyOptions& opts = {});

/// Same construction, returning the verification report instead of throwing;
/// the category is usable only when report.all_pass().
struct BuiltInternalCategory {
  InternalCategory category;
  CheckReport report;
};
BuiltInternalCategory build_internal_category_reported(const CrossedSemiBimodule& x,
                                                       const VerifyOptions& opts = {});

/// Full re-verification of an InternalCategory value: the three monoids, the
/// eight homomorphism checks, the simplicial identities and the pullback
/// count/uniqueness property. One deterministic line per check.
CheckReport verify_internal_category(const InternalCategory& cat,
                                     const VerifyOptions& opts = {});

/// An internal functor as three index maps; produced from a weak morphism by
///   f0 = kappa, f1(a,x) = (kappa(a), gamma(a,x)),
///   f2(a,x,y) = (kappa(a), gamma(a,x), gamma(a o x, y)).
struct InternalFunctor {
  std::vector<Elem> f0, f1, f2;
};

/// Asserts that all three maps are monoid homomorphisms and commute with the
/// structural maps; a violation means the weak morphism was invalid.
InternalFunctor internal_functor(const WeakMorphism& w, const InternalCategory& src,
                                 const InternalCategory& dst);

/// The underlying small category of a verified internal category: arrow (a,x)
/// has target d10(a,x) = a and source d11(a,x) = a o x; composition of
/// arrows f, g with source(f) = target(g) goes through the unique pullback
/// element and d21.
class SmallCategory {
 public:
  explicit SmallCategory(const InternalCategory& cat);

  Elem objects() const { return n_objects_; }
  Elem arrows() const { return n_arrows_; }
  Elem source(Elem f) const { return source_[f]; }
  Elem target(Elem f) const { return target_[f]; }
  Elem identity(Elem object) const { return identity_[object]; }
  /// Throws not-composable unless source(f) = target(g).
  Elem compose(Elem f, Elem g) const;

  /// Unit and associativity laws over all composable pairs/triples.
  CheckReport law_report() const;

 private:
  Elem n_objects_ = 0;
  Elem n_arrows_ = 0;
  std::vector<Elem> source_, target_, identity_;
  std::vector<Elem> pair_to_c2_;  // f*|C1|+g -> C2 element, or npos
  std::vector<Elem> d21_;
  static constexpr Elem npos = static_cast<Elem>(-1);
};

SmallCategory materialize_category(const InternalCategory& cat);

}  // namespace monocat
