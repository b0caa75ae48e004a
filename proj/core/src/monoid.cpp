#include "monocat/monoid.hpp"

#include <numeric>

namespace monocat {

std::optional<Violation> check_monoid(const std::vector<Elem>& table, Elem size, Elem identity) {
  if (size == 0 || identity >= size || table.size() != static_cast<std::size_t>(size) * size)
    return Violation{"index-out-of-range", {}, "bad dimensions"};
  for (Elem i = 0; i < size; ++i)
    for (Elem j = 0; j < size; ++j)
      if (table[static_cast<std::size_t>(i) * size + j] >= size)
        return Violation{"index-out-of-range", {i, j}};
  for (Elem i = 0; i < size; ++i) {
    if (table[static_cast<std::size_t>(identity) * size + i] != i ||
        table[static_cast<std::size_t>(i) * size + identity] != i)
      return Violation{"bad-identity", {i}};
  }
  // Row-major triple scan keeps both inner lookups on cached rows.
  const Elem* t = table.data();
  for (Elem i = 0; i < size; ++i) {
    const Elem* row_i = t + static_cast<std::size_t>(i) * size;
    for (Elem j = 0; j < size; ++j) {
      const Elem ij = row_i[j];
      const Elem* row_ij = t + static_cast<std::size_t>(ij) * size;
      const Elem* row_j = t + static_cast<std::size_t>(j) * size;
      for (Elem k = 0; k < size; ++k) {
        if (row_ij[k] != row_i[row_j[k]]) return Violation{"not-associative", {i, j, k}};
      }
    }
  }
  return std::nullopt;
}

FiniteMonoid validate_monoid(std::vector<Elem> table, Elem size, Elem identity) {
  if (auto v = check_monoid(table, size, identity)) throw ValidationError(*v);
  return FiniteMonoid{size, identity, std::move(table)};
}

FiniteMonoid validate_monoid(const std::vector<std::vector<Elem>>& rows, Elem identity) {
  const Elem size = static_cast<Elem>(rows.size());
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(size) * size);
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw ValidationError(Violation{"index-out-of-range", {}, "table is not square"});
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_monoid(std::move(flat), size, identity);
}

std::optional<Elem> inverse_of(const FiniteMonoid& m, Elem x) {
  for (Elem y = 0; y < m.size; ++y)
    if (m.mul(x, y) == m.identity && m.mul(y, x) == m.identity) return y;
  return std::nullopt;
}

bool is_group(const FiniteMonoid& m) {
  for (Elem x = 0; x < m.size; ++x)
    if (!inverse_of(m, x)) return false;
  return true;
}

bool is_commutative(const FiniteMonoid& m) {
  for (Elem x = 0; x < m.size; ++x)
    for (Elem y = 0; y < x; ++y)
      if (m.mul(x, y) != m.mul(y, x)) return false;
  return true;
}

std::vector<Elem> group_inverses(const FiniteMonoid& m) {
  std::vector<Elem> inv(m.size);
  for (Elem x = 0; x < m.size; ++x) {
    auto y = inverse_of(m, x);
    if (!y) throw ValidationError(Violation{"not-a-group", {x}});
    inv[x] = *y;
  }
  return inv;
}

std::optional<Violation> check_hom(const std::vector<Elem>& map, const FiniteMonoid& source,
                                   const FiniteMonoid& target) {
  if (map.size() != source.size) return Violation{"index-out-of-range", {}, "map length"};
  for (Elem x = 0; x < source.size; ++x)
    if (map[x] >= target.size) return Violation{"index-out-of-range", {x}};
  if (map[source.identity] != target.identity) return Violation{"identity-not-preserved", {}};
  for (Elem x = 0; x < source.size; ++x)
    for (Elem y = 0; y < source.size; ++y)
      if (map[source.mul(x, y)] != target.mul(map[x], map[y]))
        return Violation{"product-not-preserved", {x, y}};
  return std::nullopt;
}

MonoidHom validate_hom(std::vector<Elem> map, const FiniteMonoid& source,
                       const FiniteMonoid& target) {
  if (auto v = check_hom(map, source, target)) throw ValidationError(*v);
  return MonoidHom{source, target, std::move(map)};
}

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<Elem> map(m.size);
  std::iota(map.begin(), map.end(), 0);
  return MonoidHom{m, m, std::move(map)};
}

std::optional<Violation> check_monoid_action(ActionSide side, const FiniteMonoid& actor,
                                             const FiniteMonoid& carrier,
                                             const std::vector<Elem>& table) {
  const Elem na = actor.size, nk = carrier.size;
  if (table.size() != static_cast<std::size_t>(na) * nk)
    return Violation{"index-out-of-range", {}, "bad dimensions"};
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= nk)
      return Violation{"index-out-of-range", {static_cast<Elem>(i / nk), static_cast<Elem>(i % nk)}};
  auto at = [&](Elem a, Elem x) { return table[static_cast<std::size_t>(a) * nk + x]; };

  // unit act: the actor identity acts as the identity map
  for (Elem x = 0; x < nk; ++x)
    if (at(actor.identity, x) != x) return Violation{"unit-act-fails", {x}};
  // each a acts by a monoid endomorphism of the carrier
  for (Elem a = 0; a < na; ++a) {
    for (Elem x = 0; x < nk; ++x)
      for (Elem y = 0; y < nk; ++y)
        if (at(a, carrier.mul(x, y)) != carrier.mul(at(a, x), at(a, y)))
          return Violation{"not-endomorphism", {a, x, y}};
    if (at(a, carrier.identity) != carrier.identity) return Violation{"identity-not-fixed", {a}};
  }
  // composition: right (x^a)^b = x^(ab), left ^a(^b x) = ^(ab) x
  for (Elem x = 0; x < nk; ++x)
    for (Elem a = 0; a < na; ++a)
      for (Elem b = 0; b < na; ++b) {
        const Elem combined = at(actor.mul(a, b), x);
        const Elem stepwise = side == ActionSide::right ? at(b, at(a, x)) : at(a, at(b, x));
        if (combined != stepwise) return Violation{"composition-fails", {x, a, b}};
      }
  return std::nullopt;
}

MonoidAction validate_monoid_action(ActionSide side, const FiniteMonoid& actor,
                                    const FiniteMonoid& carrier, std::vector<Elem> table) {
  if (auto v = check_monoid_action(side, actor, carrier, table)) throw ValidationError(*v);
  return MonoidAction{side, actor, carrier, std::move(table)};
}

MonoidAction trivial_action(ActionSide side, const FiniteMonoid& actor,
                            const FiniteMonoid& carrier) {
  std::vector<Elem> table(static_cast<std::size_t>(actor.size) * carrier.size);
  for (Elem a = 0; a < actor.size; ++a)
    for (Elem x = 0; x < carrier.size; ++x)
      table[static_cast<std::size_t>(a) * carrier.size + x] = x;
  return MonoidAction{side, actor, carrier, std::move(table)};
}

std::optional<Violation> check_set_action(const FiniteMonoid& actor, Elem carrier_size,
                                          const std::vector<Elem>& table) {
  const Elem nk = actor.size, na = carrier_size;
  if (table.size() != static_cast<std::size_t>(na) * nk)
    return Violation{"index-out-of-range", {}, "bad dimensions"};
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= na)
      return Violation{"index-out-of-range", {static_cast<Elem>(i / nk), static_cast<Elem>(i % nk)}};
  auto at = [&](Elem a, Elem x) { return table[static_cast<std::size_t>(a) * nk + x]; };

  for (Elem a = 0; a < na; ++a)
    if (at(a, actor.identity) != a) return Violation{"unit-act-fails", {a}};
  // a o (xy) = (a o x) o y
  for (Elem a = 0; a < na; ++a)
    for (Elem x = 0; x < nk; ++x)
      for (Elem y = 0; y < nk; ++y)
        if (at(a, actor.mul(x, y)) != at(at(a, x), y))
          return Violation{"composition-fails", {a, x, y}};
  return std::nullopt;
}

SetAction validate_set_action(const FiniteMonoid& actor, Elem carrier_size,
                              std::vector<Elem> table) {
  if (auto v = check_set_action(actor, carrier_size, table)) throw ValidationError(*v);
  return SetAction{actor, carrier_size, std::move(table)};
}

}  // namespace monocat
