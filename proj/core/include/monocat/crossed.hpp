#pragma once

#include <optional>
#include <vector>

#include "monocat/monoid.hpp"
#include "monocat/report.hpp"

namespace monocat {

/// Monoids A and K with a right K-set action `circ` on A, a left A-monoid
/// action `lambda` on K and a right A-monoid action `rho` on K, subject to
/// the four compatibility axioms checked by validate_xbsmod:
///   (1) (^a x)^b        = ^a(x^b)
///   (2) (ab) o (^a x)   = a (b o x)
///   (3) (ab) o (x^b)    = (a o x) b
///   (4) (^a y) x^(b o y) = x^b (^(a o x) y)
struct CrossedSemiBimodule {
  FiniteMonoid a;
  FiniteMonoid k;
  SetAction circ;       // circ.act(a, x) = a o x
  MonoidAction lambda;  // lambda.act(a, x) = ^a x
  MonoidAction rho;     // rho.act(a, x) = x^a

  Elem circ_at(Elem av, Elem x) const { return circ.act(av, x); }
  Elem lambda_at(Elem av, Elem x) const { return lambda.act(av, x); }
  Elem rho_at(Elem x, Elem av) const { return rho.act(av, x); }
  /// The derived boundary map, partial(x) = 1 o x.
  Elem boundary_at(Elem x) const { return circ.act(a.identity, x); }

  bool operator==(const CrossedSemiBimodule&) const = default;
};

/// Monoid homomorphism partial: K -> A with a right A-action on K satisfying
///   (i)  a partial(x^a) = partial(x) a
///   (ii) y x^(partial y) = x y
struct CrossedSemiModule {
  FiniteMonoid a;
  FiniteMonoid k;
  MonoidHom partial;  // K -> A
  MonoidAction rho;   // right action of A on K

  bool operator==(const CrossedSemiModule&) const = default;
};

/// Group homomorphism partial: K -> A with a right A-action on K satisfying
///   (1) partial(x^a) = a^-1 partial(x) a
///   (2) y^(partial x) = x^-1 y x
struct CrossedModule {
  FiniteMonoid a;
  FiniteMonoid k;
  MonoidHom partial;
  MonoidAction rho;

  bool operator==(const CrossedModule&) const = default;
};

/// A strict morphism (kappa: K -> K', alpha: A -> A') between crossed
/// semi-bimodules.
struct XbsMorphism {
  MonoidHom kappa;
  MonoidHom alpha;

  bool operator==(const XbsMorphism&) const = default;
};

/// A weak morphism (kappa: A -> A', gamma: A x K -> K').
/// gamma is |A| x |K| row-major with K'-indices; k_source/k_target carry the
/// K-monoids so composability is checkable from the morphism alone.
struct WeakMorphism {
  MonoidHom kappa;  // A -> A'
  FiniteMonoid k_source;
  FiniteMonoid k_target;
  std::vector<Elem> gamma;

  Elem gamma_at(Elem a, Elem x) const {
    return gamma[static_cast<std::size_t>(a) * k_source.size + x];
  }

  bool operator==(const WeakMorphism&) const = default;
};

// -- validators ---------------------------------------------------------------

/// Checks the four axioms exhaustively, in order, each lexicographic over its
/// quantified tuple. Violations: axiom-1 (a,b,x); axiom-2 (a,b,x);
/// axiom-3 (a,b,x); axiom-4 (a,b,x,y).
std::optional<Violation> check_xbsmod_axioms(const CrossedSemiBimodule& x);
CrossedSemiBimodule validate_xbsmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                    const SetAction& circ, const MonoidAction& lambda,
                                    const MonoidAction& rho);

/// Violations: axiom-i (a,x); axiom-ii (x,y).
std::optional<Violation> check_xsmod_axioms(const FiniteMonoid& a, const FiniteMonoid& k,
                                            const std::vector<Elem>& partial,
                                            const MonoidAction& rho);
CrossedSemiModule validate_xsmod(const MonoidHom& partial, const MonoidAction& rho);

/// Violations: not-a-group; axiom-1 (x,a); axiom-2 (x,y).
std::optional<Violation> check_xmod_axioms(const FiniteMonoid& a, const FiniteMonoid& k,
                                           const std::vector<Elem>& partial,
                                           const MonoidAction& rho);
CrossedModule validate_xmod(const MonoidHom& partial, const MonoidAction& rho);

// -- derived data -------------------------------------------------------------

/// The map partial(x) = 1 o x as a plain index array (not asserted to be a
/// homomorphism in general). Also verifies the exchange law
/// y x^(partial y) = x (^(partial x) y) for all x, y; a violation means the
/// input structure was invalid.
std::vector<Elem> boundary(const CrossedSemiBimodule& x);

/// The twist monoid K^tw on the elements of K with x <> y := y x^(partial y),
/// validated as a FiniteMonoid (same identity index as K).
FiniteMonoid twist_monoid(const CrossedSemiBimodule& x);

// -- the semi-module correspondence -------------------------------------------

/// Lambda trivial, a o x = a partial(x), rho kept; the result is validated.
CrossedSemiBimodule phi(const CrossedSemiModule& s);

/// Inverse of phi on the lambda-trivial subcategory. Throws
/// lambda-not-trivial (a,x) when lambda is not trivial; otherwise asserts
/// that partial = 1 o - is a homomorphism, that a o x = a partial(x), and
/// that the semi-module axioms hold.
CrossedSemiModule recover_xsmod(const CrossedSemiBimodule& x);

// -- the group correspondence --------------------------------------------------

/// A crossed module satisfies the semi-module axioms; route through them and
/// apply phi. The result is lambda-trivial.
CrossedSemiBimodule xmod_to_xbsmod(const CrossedModule& m);

/// For group-case X: the crossed module (K^tw, A, partial, *) with
/// x^{*a} = ^(a^-1) x^a. Asserts that K^tw is a group with inverse
/// x^flat = ^(partial(x)^-1)(x^-1), that partial: K^tw -> A is a
/// homomorphism conjugation-compatible with *, and the crossed-module axioms.
CrossedModule group_to_xmod(const CrossedSemiBimodule& x);

/// Rebuilds the group-case structure from (lambda, rho, partial) by
/// a o x := a partial(^(a^-1) x), after checking the three hypotheses
///   (i)   partial(xy) = partial(x) partial(^(partial(x)^-1) y)
///   (ii)  partial(^(b^-1) z^b) = b^-1 partial(z) b
///   (iii) y x^(partial y) = x ^(partial x) y
/// Violations: hypothesis-i (x,y); hypothesis-ii (b,z); hypothesis-iii (x,y).
CrossedSemiBimodule reconstruct_group_xbsmod(const MonoidAction& lambda,
                                             const MonoidAction& rho,
                                             const std::vector<Elem>& partial_map);

// -- morphisms -----------------------------------------------------------------

/// Violations: condition-1 (a,x); condition-2 (a,x); condition-3 (a,x).
std::optional<Violation> check_morphism(const XbsMorphism& m, const CrossedSemiBimodule& x,
                                        const CrossedSemiBimodule& y);
XbsMorphism validate_morphism(const XbsMorphism& m, const CrossedSemiBimodule& x,
                              const CrossedSemiBimodule& y);

/// The three weak-morphism conditions, exhaustively:
///   (1) each gamma(a,-) is a monoid homomorphism along the source twist:
///       gamma(a,1) = 1 and gamma(a, xy) = gamma(a,x) gamma(a o x, y)
///   (2) kappa(a) o' gamma(a,x) = kappa(a o x)
///   (3) ^kappa(a) gamma(b,y) * gamma(a,x)^(kappa(b) o' gamma(b,y))
///         = gamma(ab, ^a y x^(b o y))
/// Violations: condition-1 (a[,x,y]); condition-2 (a,x); condition-3 (a,b,x,y).
std::optional<Violation> check_weak_morphism(const WeakMorphism& w,
                                             const CrossedSemiBimodule& x,
                                             const CrossedSemiBimodule& y);
WeakMorphism validate_weak_morphism(const WeakMorphism& w, const CrossedSemiBimodule& x,
                                    const CrossedSemiBimodule& y);

/// Every strict morphism induces a weak one: kappa_w = alpha,
/// gamma(a, x) = kappa(x).
WeakMorphism weak_from_morphism(const XbsMorphism& m);
WeakMorphism identity_weak(const CrossedSemiBimodule& x);

/// Composite outer . inner: kappa = outer.kappa . inner.kappa and
/// gamma(a,x) = outer.gamma(inner.kappa(a), inner.gamma(a,x)).
/// Throws not-composable on endpoint mismatch.
WeakMorphism compose_weak(const WeakMorphism& outer, const WeakMorphism& inner);

/// The canonical weak isomorphism pair between xmod_to_xbsmod(group_to_xmod(X))
/// and X, with gamma(a,x) = ^a x forward and gamma(a,x) = ^(a^-1) x backward.
/// The report carries the validity of both maps and the two composite-equals-
/// identity checks; failures are findings about the input, not exceptions.
struct CanonicalWeakIso {
  CrossedSemiBimodule twisted;  // xmod_to_xbsmod(group_to_xmod(x))
  WeakMorphism forward;         // twisted -> x
  WeakMorphism backward;        // x -> twisted
  CheckReport report;
};
CanonicalWeakIso canonical_weak_iso(const CrossedSemiBimodule& x);

// -- semi-bimodules ------------------------------------------------------------

/// Commutative K with compatible left/right A-actions embeds with
/// a o x = a. Violations: not-commutative (x,y); compatibility-fails (a,b,x).
CrossedSemiBimodule semibimodule_embed(const MonoidAction& lambda, const MonoidAction& rho);

}  // namespace monocat
