#include "monocat/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace monocat {

namespace {

thread_local std::uint64_t g_last_nodes = 0;

struct SearchCtx {
  std::uint64_t nodes = 0;
  std::optional<std::uint64_t> budget;

  void tick() {
    ++nodes;
    if (budget && nodes > *budget)
      throw ValidationError(Violation{"budget-exceeded", {nodes}});
  }
};

// (y, z) pairs grouped by max(y, z, yz); when the column max(y,z,yz) of a row
// is assigned, the instance y*z of that row's endomorphism law is decidable.
std::vector<std::vector<std::pair<Elem, Elem>>> product_triggers(const FiniteMonoid& k) {
  std::vector<std::vector<std::pair<Elem, Elem>>> by_col(k.size);
  for (Elem y = 0; y < k.size; ++y)
    for (Elem z = 0; z < k.size; ++z)
      by_col[std::max({y, z, k.mul(y, z)})].emplace_back(y, z);
  return by_col;
}

/// Backtracking enumeration of monoid-action tables of A on K, row-major.
/// `extra` is the phase hook: extra(table, a, x) is called after each
/// assignment with every cell up to (a, x) bound and must return false to
/// prune. `emit` receives each completed, law-satisfying table.
class ActionSearch {
 public:
  ActionSearch(ActionSide side, const FiniteMonoid& a, const FiniteMonoid& k, SearchCtx& ctx)
      : side_(side), a_(a), k_(k), ctx_(ctx), prod_(product_triggers(k)) {
    table_.assign(static_cast<std::size_t>(a.size) * k.size, 0);
  }

  using Hook = std::function<bool(const std::vector<Elem>&, Elem, Elem)>;
  using Emit = std::function<void(const std::vector<Elem>&)>;

  void run(const Hook& extra, const Emit& emit) {
    extra_ = &extra;
    emit_ = &emit;
    descend(0);
  }

 private:
  Elem at(Elem a, Elem x) const { return table_[static_cast<std::size_t>(a) * k_.size + x]; }
  bool bound(Elem a, Elem x, Elem cur_a, Elem cur_x) const {
    return a < cur_a || (a == cur_a && x <= cur_x);
  }

  bool laws_hold(Elem a, Elem x) const {
    const Elem v = at(a, x);
    if (a == a_.identity && v != x) return false;
    if (x == k_.identity && v != k_.identity) return false;
    // row endomorphism law at newly decidable products
    for (auto [y, z] : prod_[x])
      if (at(a, k_.mul(y, z)) != k_.mul(at(a, y), at(a, z))) return false;
    // action composition across rows, wherever all three cells are bound
    for (Elem b = 0; b < a_.size; ++b)
      for (Elem c = 0; c < a_.size; ++c) {
        const Elem bc = a_.mul(b, c);
        if (b != a && c != a && bc != a) continue;
        for (Elem x0 = 0; x0 < k_.size; ++x0) {
          if (!bound(bc, x0, a, x)) continue;
          const Elem inner = side_ == ActionSide::left ? c : b;
          const Elem outer = side_ == ActionSide::left ? b : c;
          if (!bound(inner, x0, a, x)) continue;
          const Elem w = at(inner, x0);
          if (!bound(outer, w, a, x)) continue;
          if (at(bc, x0) != at(outer, w)) return false;
        }
      }
    return true;
  }

  void descend(Elem cell) {
    if (cell == a_.size * k_.size) {
      (*emit_)(table_);
      return;
    }
    const Elem a = cell / k_.size, x = cell % k_.size;
    Elem lo = 0, hi = k_.size;
    if (a == a_.identity) {
      lo = x;
      hi = x + 1;
    } else if (x == k_.identity) {
      lo = k_.identity;
      hi = k_.identity + 1;
    }
    for (Elem v = lo; v < hi; ++v) {
      ctx_.tick();
      table_[cell] = v;
      if (laws_hold(a, x) && (*extra_)(table_, a, x)) descend(cell + 1);
    }
  }

  ActionSide side_;
  const FiniteMonoid& a_;
  const FiniteMonoid& k_;
  SearchCtx& ctx_;
  std::vector<std::vector<std::pair<Elem, Elem>>> prod_;
  std::vector<Elem> table_;
  const Hook* extra_ = nullptr;
  const Emit* emit_ = nullptr;
};

bool always(const std::vector<Elem>&, Elem, Elem) { return true; }

/// The compatibility hook for the rho phase: (^a x)^b = ^a(x^b) against a
/// fixed lambda, checked at the moment both referenced rho cells are bound.
ActionSearch::Hook compat_hook(const FiniteMonoid& a, const FiniteMonoid& k,
                               const std::vector<Elem>& lambda) {
  const Elem nk = k.size;
  return [&a, &k, &lambda, nk](const std::vector<Elem>& rho, Elem b, Elem x) {
    auto lam = [&](Elem a1, Elem x1) {
      return lambda[static_cast<std::size_t>(a1) * nk + x1];
    };
    auto rh = [&](Elem b1, Elem x1) { return rho[static_cast<std::size_t>(b1) * nk + x1]; };
    for (Elem a1 = 0; a1 < a.size; ++a1) {
      const Elem w = lam(a1, x);
      if (w <= x && rh(b, w) != lam(a1, rh(b, x))) return false;
      for (Elem x0 = 0; x0 < x; ++x0)
        if (lam(a1, x0) == x && rh(b, x) != lam(a1, rh(b, x0))) return false;
    }
    return true;
  };
}

/// Backtracking enumeration of circ tables given lambda and rho. Cells are
/// assigned identity-row first (it determines every other row through axiom
/// (2)), then remaining rows in index order; the set-action laws and axioms
/// (2)-(4) prune each instance as soon as its last referenced cell binds.
class CircSearch {
 public:
  CircSearch(const FiniteMonoid& a, const FiniteMonoid& k, const std::vector<Elem>& lambda,
             const std::vector<Elem>& rho, SearchCtx& ctx)
      : a_(a), k_(k), lambda_(lambda), rho_(rho), ctx_(ctx) {
    table_.assign(static_cast<std::size_t>(a.size) * k.size, 0);
    rank_.assign(table_.size(), 0);
    for (Elem x = 0; x < k.size; ++x) order_.push_back(cell_of(a.identity, x));
    for (Elem av = 0; av < a.size; ++av) {
      if (av == a.identity) continue;
      for (Elem x = 0; x < k.size; ++x) order_.push_back(cell_of(av, x));
    }
    for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = static_cast<Elem>(r);
  }

  using Emit = std::function<void(const std::vector<Elem>&)>;

  void run(const Emit& emit) {
    emit_ = &emit;
    descend(0);
  }

 private:
  std::size_t cell_of(Elem av, Elem x) const {
    return static_cast<std::size_t>(av) * k_.size + x;
  }
  Elem at(Elem av, Elem x) const { return table_[cell_of(av, x)]; }
  Elem lam(Elem av, Elem x) const { return lambda_[cell_of(av, x)]; }
  Elem rh(Elem x, Elem av) const { return rho_[cell_of(av, x)]; }
  bool bound(Elem av, Elem x, Elem cur_rank) const {
    return rank_[cell_of(av, x)] <= cur_rank;
  }

  bool set_action_ok(Elem a0, Elem y, Elem z, Elem cur) const {
    // a0 o (yz) = (a0 o y) o z when all three cells are bound
    const Elem yz = k_.mul(y, z);
    if (!bound(a0, yz, cur) || !bound(a0, y, cur)) return true;
    const Elem w = at(a0, y);
    if (!bound(w, z, cur)) return true;
    return at(a0, yz) == at(w, z);
  }

  bool axiom2_ok(Elem a1, Elem b1, Elem x0, Elem cur) const {
    // (a1 b1) o (^a1 x0) = a1 (b1 o x0)
    const Elem ab = a_.mul(a1, b1);
    const Elem w = lam(a1, x0);
    if (!bound(ab, w, cur) || !bound(b1, x0, cur)) return true;
    return at(ab, w) == a_.mul(a1, at(b1, x0));
  }

  bool axiom3_ok(Elem a1, Elem b1, Elem x0, Elem cur) const {
    // (a1 b1) o (x0^b1) = (a1 o x0) b1
    const Elem ab = a_.mul(a1, b1);
    const Elem w = rh(x0, b1);
    if (!bound(ab, w, cur) || !bound(a1, x0, cur)) return true;
    return at(ab, w) == a_.mul(at(a1, x0), b1);
  }

  bool axiom4_ok(Elem a1, Elem b1, Elem x0, Elem y0, Elem cur) const {
    // (^a1 y0) x0^(b1 o y0) = x0^b1 (^(a1 o x0) y0)
    if (!bound(b1, y0, cur) || !bound(a1, x0, cur)) return true;
    const Elem lhs = k_.mul(lam(a1, y0), rh(x0, at(b1, y0)));
    const Elem rhs = k_.mul(rh(x0, b1), lam(at(a1, x0), y0));
    return lhs == rhs;
  }

  bool laws_hold(Elem av, Elem x, Elem cur) const {
    const Elem v = at(av, x);
    if (x == k_.identity && v != av) return false;

    // set-action composition instances touching (av, x)
    for (Elem z = 0; z < k_.size; ++z)
      if (!set_action_ok(av, x, z, cur)) return false;
    for (Elem y = 0; y < k_.size; ++y)
      for (Elem z = 0; z < k_.size; ++z)
        if (k_.mul(y, z) == x && !set_action_ok(av, y, z, cur)) return false;
    for (Elem a0 = 0; a0 < a_.size; ++a0)
      for (Elem y = 0; y < k_.size; ++y)
        if (bound(a0, y, cur) && at(a0, y) == av && !set_action_ok(a0, y, x, cur))
          return false;

    for (Elem a1 = 0; a1 < a_.size; ++a1)
      for (Elem b1 = 0; b1 < a_.size; ++b1) {
        // instances whose second cell is the current one
        if (b1 == av && !axiom2_ok(a1, b1, x, cur)) return false;
        if (a1 == av && !axiom3_ok(a1, b1, x, cur)) return false;
        if (a_.mul(a1, b1) == av) {
          for (Elem x0 = 0; x0 < k_.size; ++x0) {
            if (lam(a1, x0) == x && !axiom2_ok(a1, b1, x0, cur)) return false;
            if (rh(x0, b1) == x && !axiom3_ok(a1, b1, x0, cur)) return false;
          }
        }
      }

    for (Elem b1 = 0; b1 < a_.size; ++b1)
      for (Elem y0 = 0; y0 < k_.size; ++y0) {
        if (!axiom4_ok(av, b1, x, y0, cur)) return false;
        if (!axiom4_ok(b1, av, y0, x, cur)) return false;
      }
    return true;
  }

  void descend(std::size_t pos) {
    if (pos == order_.size()) {
      (*emit_)(table_);
      return;
    }
    const std::size_t cell = order_[pos];
    const Elem av = static_cast<Elem>(cell / k_.size), x = static_cast<Elem>(cell % k_.size);
    Elem lo = 0, hi = a_.size;
    if (x == k_.identity) {
      lo = av;
      hi = av + 1;
    }
    for (Elem v = lo; v < hi; ++v) {
      ctx_.tick();
      table_[cell] = v;
      if (laws_hold(av, x, static_cast<Elem>(pos))) descend(pos + 1);
    }
  }

  const FiniteMonoid& a_;
  const FiniteMonoid& k_;
  const std::vector<Elem>& lambda_;
  const std::vector<Elem>& rho_;
  SearchCtx& ctx_;
  std::vector<Elem> table_;
  std::vector<Elem> rank_;
  std::vector<std::size_t> order_;
  const Emit* emit_ = nullptr;
};

void check_caps(const FiniteMonoid& a, const FiniteMonoid& k, const EnumerationLimits& lim) {
  if (a.size > lim.max_a || k.size > lim.max_k)
    throw ValidationError(Violation{"cap-exceeded", {a.size, k.size}});
}

/// Backtracking enumeration of all maps partial: K -> A subject to the
/// homomorphism laws, then for each a rho-phase via ActionSearch.
void hom_search(const FiniteMonoid& k, const FiniteMonoid& a, SearchCtx& ctx,
                const std::function<void(const std::vector<Elem>&)>& emit) {
  const auto prod = product_triggers(k);
  std::vector<Elem> map(k.size, 0);
  std::function<void(Elem)> descend = [&](Elem x) {
    if (x == k.size) {
      emit(map);
      return;
    }
    Elem lo = 0, hi = a.size;
    if (x == k.identity) {
      lo = a.identity;
      hi = a.identity + 1;
    }
    for (Elem v = lo; v < hi; ++v) {
      ctx.tick();
      map[x] = v;
      bool ok = true;
      for (auto [y, z] : prod[x])
        if (map[k.mul(y, z)] != a.mul(map[y], map[z])) {
          ok = false;
          break;
        }
      if (ok) descend(x + 1);
    }
  };
  descend(0);
}

}  // namespace

std::uint64_t last_enumeration_nodes() { return g_last_nodes; }

EnumerationResult run_enumeration(const EnumerationTask& task) {
  EnumerationResult result;
  switch (task.kind) {
    case StructureKind::xbsmod:
      result.xbsmods = enumerate_xbsmod(task.a, task.k, task.limits);
      break;
    case StructureKind::xsmod:
      result.xsmods = enumerate_xsmod(task.a, task.k, task.limits);
      break;
    case StructureKind::xmod:
      result.xmods = enumerate_xmod(task.a, task.k, task.limits);
      break;
  }
  result.nodes = g_last_nodes;
  return result;
}

std::vector<CrossedSemiBimodule> enumerate_xbsmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                                  const EnumerationLimits& limits) {
  check_caps(a, k, limits);
  SearchCtx ctx{0, limits.node_budget};
  struct Raw {
    std::vector<Elem> lambda, rho, circ;
  };
  std::vector<Raw> found;

  ActionSearch lambda_search(ActionSide::left, a, k, ctx);
  lambda_search.run(always, [&](const std::vector<Elem>& lambda) {
    ActionSearch rho_search(ActionSide::right, a, k, ctx);
    const auto compat = compat_hook(a, k, lambda);
    rho_search.run(compat, [&](const std::vector<Elem>& rho) {
      CircSearch circ_search(a, k, lambda, rho, ctx);
      circ_search.run([&](const std::vector<Elem>& circ) {
        found.push_back(Raw{lambda, rho, circ});
      });
    });
  });
  g_last_nodes = ctx.nodes;

  std::sort(found.begin(), found.end(), [](const Raw& lhs, const Raw& rhs) {
    if (lhs.lambda != rhs.lambda) return lhs.lambda < rhs.lambda;
    if (lhs.rho != rhs.rho) return lhs.rho < rhs.rho;
    return lhs.circ < rhs.circ;
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Raw& lhs, const Raw& rhs) {
                            return lhs.lambda == rhs.lambda && lhs.rho == rhs.rho &&
                                   lhs.circ == rhs.circ;
                          }),
              found.end());

  std::vector<CrossedSemiBimodule> out;
  out.reserve(found.size());
  for (auto& raw : found) {
    SetAction circ{k, a.size, std::move(raw.circ)};
    MonoidAction lambda{ActionSide::left, a, k, std::move(raw.lambda)};
    MonoidAction rho{ActionSide::right, a, k, std::move(raw.rho)};
    out.push_back(validate_xbsmod(a, k, circ, lambda, rho));
  }
  return out;
}

std::vector<CrossedSemiModule> enumerate_xsmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                               const EnumerationLimits& limits) {
  check_caps(a, k, limits);
  SearchCtx ctx{0, limits.node_budget};
  struct Raw {
    std::vector<Elem> partial, rho;
  };
  std::vector<Raw> found;

  hom_search(k, a, ctx, [&](const std::vector<Elem>& partial) {
    ActionSearch rho_search(ActionSide::right, a, k, ctx);
    // semi-module axioms: (i) immediately on each cell, (ii) when the row
    // partial(y) binds at column x.
    ActionSearch::Hook hook = [&](const std::vector<Elem>& rho, Elem av, Elem x) {
      auto rh = [&](Elem b, Elem e) { return rho[static_cast<std::size_t>(b) * k.size + e]; };
      if (a.mul(av, partial[rh(av, x)]) != a.mul(partial[x], av)) return false;
      for (Elem y = 0; y < k.size; ++y)
        if (partial[y] == av && k.mul(y, rh(av, x)) != k.mul(x, y)) return false;
      return true;
    };
    rho_search.run(hook, [&](const std::vector<Elem>& rho) {
      found.push_back(Raw{partial, rho});
    });
  });
  g_last_nodes = ctx.nodes;

  std::sort(found.begin(), found.end(), [](const Raw& lhs, const Raw& rhs) {
    if (lhs.partial != rhs.partial) return lhs.partial < rhs.partial;
    return lhs.rho < rhs.rho;
  });

  std::vector<CrossedSemiModule> out;
  out.reserve(found.size());
  for (auto& raw : found) {
    MonoidHom partial{k, a, std::move(raw.partial)};
    MonoidAction rho{ActionSide::right, a, k, std::move(raw.rho)};
    out.push_back(validate_xsmod(partial, rho));
  }
  return out;
}

std::vector<CrossedModule> enumerate_xmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                          const EnumerationLimits& limits) {
  check_caps(a, k, limits);
  if (!is_group(a) || !is_group(k)) return {};
  const auto ainv = group_inverses(a);
  const auto kinv = group_inverses(k);
  SearchCtx ctx{0, limits.node_budget};
  struct Raw {
    std::vector<Elem> partial, rho;
  };
  std::vector<Raw> found;

  hom_search(k, a, ctx, [&](const std::vector<Elem>& partial) {
    ActionSearch rho_search(ActionSide::right, a, k, ctx);
    ActionSearch::Hook hook = [&](const std::vector<Elem>& rho, Elem av, Elem x) {
      auto rh = [&](Elem b, Elem e) { return rho[static_cast<std::size_t>(b) * k.size + e]; };
      // (1) partial(x^a) = a^-1 partial(x) a
      if (partial[rh(av, x)] != a.mul(a.mul(ainv[av], partial[x]), av)) return false;
      // (2) y^(partial x) = x^-1 y x at cells in row partial(x)
      for (Elem y = 0; y < k.size; ++y)
        if (partial[y] == av && rh(av, x) != k.mul(kinv[y], k.mul(x, y))) return false;
      return true;
    };
    rho_search.run(hook, [&](const std::vector<Elem>& rho) {
      found.push_back(Raw{partial, rho});
    });
  });
  g_last_nodes = ctx.nodes;

  std::sort(found.begin(), found.end(), [](const Raw& lhs, const Raw& rhs) {
    if (lhs.partial != rhs.partial) return lhs.partial < rhs.partial;
    return lhs.rho < rhs.rho;
  });

  std::vector<CrossedModule> out;
  out.reserve(found.size());
  for (auto& raw : found) {
    MonoidHom partial{k, a, std::move(raw.partial)};
    MonoidAction rho{ActionSide::right, a, k, std::move(raw.rho)};
    out.push_back(validate_xmod(partial, rho));
  }
  return out;
}

std::vector<std::pair<MonoidAction, MonoidAction>> enumerate_compatible_action_pairs(
    const FiniteMonoid& a, const FiniteMonoid& k, const EnumerationLimits& limits) {
  check_caps(a, k, limits);
  SearchCtx ctx{0, limits.node_budget};
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> found;

  ActionSearch lambda_search(ActionSide::left, a, k, ctx);
  lambda_search.run(always, [&](const std::vector<Elem>& lambda) {
    ActionSearch rho_search(ActionSide::right, a, k, ctx);
    const auto compat = compat_hook(a, k, lambda);
    rho_search.run(compat, [&](const std::vector<Elem>& rho) {
      found.emplace_back(lambda, rho);
    });
  });
  g_last_nodes = ctx.nodes;

  std::sort(found.begin(), found.end());
  std::vector<std::pair<MonoidAction, MonoidAction>> out;
  out.reserve(found.size());
  for (auto& [lambda, rho] : found)
    out.emplace_back(
        validate_monoid_action(ActionSide::left, a, k, std::move(lambda)),
        validate_monoid_action(ActionSide::right, a, k, std::move(rho)));
  return out;
}

namespace {

std::vector<Elem> flatten(const CrossedSemiBimodule& x) {
  std::vector<Elem> key;
  key.reserve(x.lambda.table.size() + x.rho.table.size() + x.circ.table.size());
  key.insert(key.end(), x.lambda.table.begin(), x.lambda.table.end());
  key.insert(key.end(), x.rho.table.begin(), x.rho.table.end());
  key.insert(key.end(), x.circ.table.begin(), x.circ.table.end());
  return key;
}

std::vector<std::uint64_t> widen(const std::vector<Elem>& key) {
  return {key.begin(), key.end()};
}

/// Set equality of two structure families up to table identity; emits one
/// FAIL line per one-sided structure, witness = flattened tables.
void cross_check(CheckReport& rep, const std::string& name,
                 std::vector<std::vector<Elem>> lhs, std::vector<std::vector<Elem>> rhs) {
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  bool ok = true;
  for (const auto& key : lhs)
    if (!std::binary_search(rhs.begin(), rhs.end(), key)) {
      rep.add_fail(name, widen(key), "missing from independent side");
      ok = false;
    }
  for (const auto& key : rhs)
    if (!std::binary_search(lhs.begin(), lhs.end(), key)) {
      rep.add_fail(name, widen(key), "extra on independent side");
      ok = false;
    }
  if (ok) rep.add_pass(name, "count=" + std::to_string(lhs.size()));
}

}  // namespace

ClassifyReport classify_pair(const FiniteMonoid& a, const FiniteMonoid& k,
                             const EnumerationLimits& limits) {
  ClassifyReport rep;
  const auto structures = enumerate_xbsmod(a, k, limits);
  rep.total = structures.size();

  const bool groups = is_group(a) && is_group(k);
  std::vector<std::vector<Elem>> lambda_trivial_keys, circ_constant_keys;
  for (const auto& x : structures) {
    bool lt = true, cc = true;
    for (Elem av = 0; av < a.size && (lt || cc); ++av)
      for (Elem e = 0; e < k.size; ++e) {
        if (x.lambda_at(av, e) != e) lt = false;
        if (x.circ_at(av, e) != av) cc = false;
      }
    if (lt) {
      ++rep.lambda_trivial;
      lambda_trivial_keys.push_back(flatten(x));
    }
    if (cc) {
      ++rep.circ_constant;
      circ_constant_keys.push_back(flatten(x));
    }
    if (groups) ++rep.group_case;
  }

  // independent side 1: phi over the enumerated crossed semi-modules
  std::vector<std::vector<Elem>> phi_keys;
  for (const auto& s : enumerate_xsmod(a, k, limits)) phi_keys.push_back(flatten(phi(s)));
  cross_check(rep.checks, "phi-image-equals-lambda-trivial", lambda_trivial_keys, phi_keys);

  // independent side 2: constant-circ embeddings over compatible action pairs
  if (is_commutative(k)) {
    std::vector<std::vector<Elem>> embed_keys;
    for (const auto& [lambda, rho] : enumerate_compatible_action_pairs(a, k, limits))
      embed_keys.push_back(flatten(semibimodule_embed(lambda, rho)));
    cross_check(rep.checks, "embed-image-equals-circ-constant", circ_constant_keys,
                embed_keys);
  } else {
    if (rep.circ_constant == 0)
      rep.checks.add_pass("circ-constant-empty-noncommutative");
    else
      rep.checks.add_fail("circ-constant-empty-noncommutative", {rep.circ_constant});
  }
  return rep;
}

}  // namespace monocat
