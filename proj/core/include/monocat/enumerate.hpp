#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "monocat/crossed.hpp"
#include "monocat/monoid.hpp"
#include "monocat/report.hpp"

namespace monocat {

enum class StructureKind { xbsmod, xsmod, xmod };

struct EnumerationLimits {
  Elem max_a = 4;
  Elem max_k = 4;
  std::optional<std::uint64_t> node_budget;  // search-tree assignments
};

struct EnumerationTask {
  FiniteMonoid a;
  FiniteMonoid k;
  StructureKind kind = StructureKind::xbsmod;
  EnumerationLimits limits;
};

/// Result of run_enumeration: exactly one vector is populated, per task.kind.
struct EnumerationResult {
  std::vector<CrossedSemiBimodule> xbsmods;
  std::vector<CrossedSemiModule> xsmods;
  std::vector<CrossedModule> xmods;
  std::uint64_t nodes = 0;

  std::size_t count() const { return xbsmods.size() + xsmods.size() + xmods.size(); }
};

EnumerationResult run_enumeration(const EnumerationTask& task);

/// Complete, duplicate-free enumeration of all crossed semi-bimodules on the
/// pair (A, K) under fixed numbering, sorted lexicographically by the
/// flattened (lambda, rho, circ) tables. Search assigns lambda cell by cell
/// (pruning on the action laws), then rho (adding compatibility), then circ
/// (identity row first, pruning on the set-action laws and axioms 2-4 as
/// soon as every referenced cell is bound). Every output passes
/// validate_xbsmod. Throws cap-exceeded / budget-exceeded.
std::vector<CrossedSemiBimodule> enumerate_xbsmod(const FiniteMonoid& a,
                                                  const FiniteMonoid& k,
                                                  const EnumerationLimits& limits = {});

/// All crossed semi-modules (partial, rho) on (A, K), sorted by
/// (partial, rho) tables.
std::vector<CrossedSemiModule> enumerate_xsmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                               const EnumerationLimits& limits = {});

/// All crossed modules on (A, K); empty when either monoid is not a group.
std::vector<CrossedModule> enumerate_xmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                          const EnumerationLimits& limits = {});

/// All compatible (lambda, rho) action pairs on (A, K) (the semi-bimodule
/// data of constant-circ embeddings), sorted by (lambda, rho) tables.
std::vector<std::pair<MonoidAction, MonoidAction>> enumerate_compatible_action_pairs(
    const FiniteMonoid& a, const FiniteMonoid& k, const EnumerationLimits& limits = {});

/// Number of search-tree nodes spent by the last enumerate_* call on this
/// thread; exposed for the CLI summary and budget diagnostics.
std::uint64_t last_enumeration_nodes();

struct ClassifyReport {
  std::size_t total = 0;
  std::size_t lambda_trivial = 0;
  std::size_t circ_constant = 0;
  std::size_t group_case = 0;
  CheckReport checks;
};

/// Partitions the enumerated structures on (A, K) by the predicates
/// {lambda trivial}, {circ constant in x}, {A and K groups} and cross-checks
///   - lambda-trivial structures = image of phi over the enumerated crossed
///     semi-modules, as exact table sets;
///   - for commutative K, circ-constant structures = image of
///     semibimodule_embed over the enumerated compatible action pairs;
///   - for noncommutative K, the circ-constant class is empty.
/// Mismatches are reported as FAIL lines whose witness is the flattened
/// structure, one per missing/extra structure.
ClassifyReport classify_pair(const FiniteMonoid& a, const FiniteMonoid& k,
                             const EnumerationLimits& limits = {});

}  // namespace monocat
