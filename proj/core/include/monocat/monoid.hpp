#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocat/report.hpp"

namespace monocat {

/// Dense element index. Elements of a monoid of size n are 0..n-1.
using Elem = std::uint32_t;

/// A finite monoid as an explicit multiplication table.
///
/// table is row-major with size*size entries; table[i*size + j] is the
/// product i*j ("i then j"). The identity index is stored explicitly so
/// imported tables need no renumbering. Values are immutable after
/// validation and safe to share across threads.
struct FiniteMonoid {
  Elem size = 0;
  Elem identity = 0;
  std::vector<Elem> table;

  Elem mul(Elem i, Elem j) const { return table[static_cast<std::size_t>(i) * size + j]; }
  const Elem* row(Elem i) const { return table.data() + static_cast<std::size_t>(i) * size; }

  bool operator==(const FiniteMonoid&) const = default;
};

/// A monoid homomorphism, carried with copies of its endpoints.
struct MonoidHom {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<Elem> map;  // length source.size

  Elem apply(Elem x) const { return map[x]; }

  bool operator==(const MonoidHom&) const = default;
};

enum class ActionSide { left, right };

/// A monoid action of `actor` A on `carrier` K, each a acting by a monoid
/// endomorphism of K. table is |A| x |K|, row a, column x. For the right
/// version table[a][x] = x^a; for the left version table[a][x] = ^a x.
struct MonoidAction {
  ActionSide side = ActionSide::right;
  FiniteMonoid actor;    // A
  FiniteMonoid carrier;  // K
  std::vector<Elem> table;

  Elem act(Elem a, Elem x) const {
    return table[static_cast<std::size_t>(a) * carrier.size + x];
  }

  bool operator==(const MonoidAction&) const = default;
};

/// A right action of the monoid `actor` K on a plain set of carrier_size
/// elements. table is carrier_size x |K|, row a, column x: table[a][x] = a o x.
struct SetAction {
  FiniteMonoid actor;  // K
  Elem carrier_size = 0;
  std::vector<Elem> table;

  Elem act(Elem a, Elem x) const {
    return table[static_cast<std::size_t>(a) * actor.size + x];
  }

  bool operator==(const SetAction&) const = default;
};

// -- validation -------------------------------------------------------------
//
// Every check_* function scans its laws exhaustively and returns the first
// violation in a fixed deterministic order (lexicographic in the quantified
// tuple, law order as documented per function), or nullopt. The validate_*
// companions return the validated value or throw ValidationError.

/// Laws, in check order: index-out-of-range (i,j); bad-identity (i);
/// not-associative (i,j,k).
std::optional<Violation> check_monoid(const std::vector<Elem>& table, Elem size, Elem identity);
FiniteMonoid validate_monoid(const std::vector<std::vector<Elem>>& rows, Elem identity);
FiniteMonoid validate_monoid(std::vector<Elem> table, Elem size, Elem identity);

/// True iff every element has a two-sided inverse.
bool is_group(const FiniteMonoid& m);
bool is_commutative(const FiniteMonoid& m);
std::optional<Elem> inverse_of(const FiniteMonoid& m, Elem x);
/// Inverse table for a group; throws if some element has no inverse.
std::vector<Elem> group_inverses(const FiniteMonoid& m);

/// Laws: identity-not-preserved; product-not-preserved (x,y).
std::optional<Violation> check_hom(const std::vector<Elem>& map, const FiniteMonoid& source,
                                   const FiniteMonoid& target);
MonoidHom validate_hom(std::vector<Elem> map, const FiniteMonoid& source,
                       const FiniteMonoid& target);
MonoidHom identity_hom(const FiniteMonoid& m);

/// Laws, in check order: unit-act-fails (x); then per actor element a:
/// not-endomorphism (a,x,y) and identity-not-fixed (a); then
/// composition-fails (x,a,b).
std::optional<Violation> check_monoid_action(ActionSide side, const FiniteMonoid& actor,
                                             const FiniteMonoid& carrier,
                                             const std::vector<Elem>& table);
MonoidAction validate_monoid_action(ActionSide side, const FiniteMonoid& actor,
                                    const FiniteMonoid& carrier, std::vector<Elem> table);
MonoidAction trivial_action(ActionSide side, const FiniteMonoid& actor,
                            const FiniteMonoid& carrier);

/// Laws: unit-act-fails (a); composition-fails (a,x,y).
std::optional<Violation> check_set_action(const FiniteMonoid& actor, Elem carrier_size,
                                          const std::vector<Elem>& table);
SetAction validate_set_action(const FiniteMonoid& actor, Elem carrier_size,
                              std::vector<Elem> table);

}  // namespace monocat
