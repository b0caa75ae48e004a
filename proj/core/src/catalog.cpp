#include "monocat/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace monocat {

FiniteMonoid cyclic_group(Elem n) {
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return validate_monoid(std::move(table), n, 0);
}

FiniteMonoid klein_four() {
  // xor on two bits
  std::vector<Elem> table(16);
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) table[static_cast<std::size_t>(i) * 4 + j] = i ^ j;
  return validate_monoid(std::move(table), 4, 0);
}

namespace {

// Lexicographically least relabeling of the table among permutations
// fixing the identity at 0.
std::vector<Elem> canonical_table(const std::vector<Elem>& table, Elem n) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best = table, relabeled(table.size());
  do {
    if (perm[0] != 0) continue;
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        relabeled[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
            perm[table[static_cast<std::size_t>(i) * n + j]];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteMonoid> monoid_census(Elem n) {
  // Identity fixed at 0, so row 0 and column 0 are forced; search the
  // remaining (n-1)^2 cells and keep associative tables up to relabeling.
  std::vector<FiniteMonoid> out;
  if (n == 0) return out;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n, 0);
  for (Elem i = 0; i < n; ++i) {
    table[i] = i;
    table[static_cast<std::size_t>(i) * n] = i;
  }
  std::vector<std::vector<Elem>> seen;
  std::vector<std::pair<Elem, Elem>> free_cells;
  for (Elem i = 1; i < n; ++i)
    for (Elem j = 1; j < n; ++j) free_cells.emplace_back(i, j);

  auto emit = [&]() {
    if (check_monoid(table, n, 0)) return;
    auto canon = canonical_table(table, n);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) return;
    seen.push_back(canon);
  };

  std::size_t total = 1;
  for (std::size_t c = 0; c < free_cells.size(); ++c) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto [i, j] : free_cells) {
      table[static_cast<std::size_t>(i) * n + j] = static_cast<Elem>(rest % n);
      rest /= n;
    }
    emit();
  }
  std::sort(seen.begin(), seen.end());
  out.reserve(seen.size());
  for (auto& t : seen) out.push_back(FiniteMonoid{n, 0, std::move(t)});
  return out;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"z1", cyclic_group(1)});
  auto order2 = monoid_census(2);
  for (std::size_t i = 0; i < order2.size(); ++i)
    entries.push_back({"m2_" + std::to_string(i + 1), order2[i]});
  auto order3 = monoid_census(3);
  for (std::size_t i = 0; i < order3.size(); ++i)
    entries.push_back({"m3_" + std::to_string(i + 1), order3[i]});
  entries.push_back({"z4", cyclic_group(4)});
  entries.push_back({"z5", cyclic_group(5)});
  entries.push_back({"z6", cyclic_group(6)});
  entries.push_back({"klein4", klein_four()});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const FiniteMonoid* catalog_find(std::string_view name) {
  // z2/z3 are census entries under canonical names; resolve the aliases.
  if (name == "z2" || name == "z3") {
    const Elem n = name == "z2" ? 2 : 3;
    const FiniteMonoid cyc = cyclic_group(n);
    for (const auto& e : catalog()) {
      if (e.monoid.size != n) continue;
      // census tables are canonical; the cyclic table relabels onto one of them
      if (e.monoid == cyc) return &e.monoid;
    }
    return nullptr;
  }
  for (const auto& e : catalog())
    if (e.name == name) return &e.monoid;
  return nullptr;
}

}  // namespace monocat
