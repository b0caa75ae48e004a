#pragma once

#include <cstdint>

#include "monocat/crossed.hpp"
#include "monocat/monoid.hpp"

namespace monocat {

/// Parameters for the rank-two-algebra structure over Z/nZ: residues p, q
/// with p*q + 2 = 0 (mod n).
struct QuParams {
  std::uint32_t n = 2;
  std::uint32_t p = 0;
  std::uint32_t q = 0;
};

/// Throws constraint-violated carrying (p*q + 2) mod n when the defining
/// relation fails.
QuParams make_qu_params(std::uint32_t n, std::uint32_t p, std::uint32_t q);

struct QuComponents {
  FiniteMonoid k;  // upper-triangular matrices (1 r; 0 s), index r*n + s
  FiniteMonoid a;  // bracket pairs [a,b], index a*n + b, unit [1,0]
};

/// K(R) under matrix multiplication, (r,s)(r',s') = (r' + r s', s s');
/// A(R) with [a,b][c,d] = [ac, a^2 d + b c^2 + p^2 b d]. Both are validated
/// exhaustively; |K| = |A| = n^2.
QuComponents build_qu_components(const QuParams& params);

/// The full crossed semi-bimodule: the set action
/// [a,b] o (r,s) = [as - pr, s^2 b - q r s a - r^2] and the coincident
/// left/right actions ^m k = k^m = (r a, s). All four axioms are checked
/// exhaustively; a failure is reported with its witness and would be a
/// finding about the parameter triple.
CrossedSemiBimodule build_qu(const QuParams& params);

}  // namespace monocat
