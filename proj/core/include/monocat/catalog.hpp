#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monocat/monoid.hpp"

namespace monocat {

struct CatalogEntry {
  std::string name;
  FiniteMonoid monoid;
};

FiniteMonoid cyclic_group(Elem n);
FiniteMonoid klein_four();

/// All monoids on {0..n-1} up to isomorphism, as canonical tables
/// (lexicographically least relabeling, identity at index 0), in
/// lexicographic order. Exhaustive search; intended for n <= 4.
std::vector<FiniteMonoid> monoid_census(Elem n);

/// The built-in catalog: z1, the order-2 census (m2_1, m2_2), the order-3
/// census (m3_1..m3_7), then z4, z5, z6 and klein4. Deterministic order.
/// "z2" and "z3" resolve as aliases of their census entries.
const std::vector<CatalogEntry>& catalog();
const FiniteMonoid* catalog_find(std::string_view name);

}  // namespace monocat
