#include "monocat/internal_category.hpp"

#include <random>

#include "parallel.hpp"

namespace monocat {

namespace {

/// Raw-pointer view of the defining tables for the hot verification loops.
struct Tabs {
  const Elem* a_tab;
  const Elem* k_tab;
  const Elem* circ;
  const Elem* lam;
  const Elem* rho;
  Elem na, nk;

  explicit Tabs(const CrossedSemiBimodule& x)
      : a_tab(x.a.table.data()),
        k_tab(x.k.table.data()),
        circ(x.circ.table.data()),
        lam(x.lambda.table.data()),
        rho(x.rho.table.data()),
        na(x.a.size),
        nk(x.k.size) {}

  Elem amul(Elem a, Elem b) const { return a_tab[static_cast<std::size_t>(a) * na + b]; }
  Elem kmul(Elem e, Elem f) const { return k_tab[static_cast<std::size_t>(e) * nk + f]; }
  Elem cr(Elem a, Elem e) const { return circ[static_cast<std::size_t>(a) * nk + e]; }
  Elem la(Elem a, Elem e) const { return lam[static_cast<std::size_t>(a) * nk + e]; }
  Elem rh(Elem e, Elem a) const { return rho[static_cast<std::size_t>(a) * nk + e]; }

  // (a,x)(b,y) = (ab, ^a y x^(b o y))
  Elem pair_mul(Elem f, Elem g) const {
    const Elem a = f / nk, x = f % nk, b = g / nk, y = g % nk;
    return amul(a, b) * nk + kmul(la(a, y), rh(x, cr(b, y)));
  }
  // (a,x,y)(b,u,v) = (ab, ^a u x^(b o u), ^(a o x) v y^(b o u o v)).
  // The composable-pair reading forces the a o x exponent: the second arrow
  // of (a,x,y) is (a o x, y), and the last coordinate is the K-part of
  // (a o x, y)(b o u, v) in A |x| K. Only this exponent makes (1,1,1) a unit
  // and d21, d22 homomorphisms.
  Elem triple_mul(Elem h, Elem hp) const {
    const Elem a = h / (nk * nk), x = (h / nk) % nk, y = h % nk;
    const Elem b = hp / (nk * nk), u = (hp / nk) % nk, v = hp % nk;
    const Elem bu = cr(b, u);
    const Elem mid = kmul(la(a, u), rh(x, bu));
    const Elem last = kmul(la(cr(a, x), v), rh(y, cr(bu, v)));
    return (amul(a, b) * nk + mid) * nk + last;
  }
};

std::vector<Elem> make_c1_table(const CrossedSemiBimodule& x) {
  const Tabs t(x);
  const std::size_t n1 = static_cast<std::size_t>(t.na) * t.nk;
  std::vector<Elem> table(n1 * n1);
  for (Elem a = 0; a < t.na; ++a)
    for (Elem e = 0; e < t.nk; ++e) {
      Elem* row = table.data() + (static_cast<std::size_t>(a) * t.nk + e) * n1;
      for (Elem b = 0; b < t.na; ++b) {
        const Elem ab = t.amul(a, b);
        for (Elem f = 0; f < t.nk; ++f)
          row[static_cast<std::size_t>(b) * t.nk + f] =
              ab * t.nk + t.kmul(t.la(a, f), t.rh(e, t.cr(b, f)));
      }
    }
  return table;
}

std::optional<Violation> check_identity_and_range(const std::vector<Elem>& table, Elem size,
                                                  Elem identity) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= size)
      return Violation{"index-out-of-range",
                       {static_cast<Elem>(i / size), static_cast<Elem>(i % size)}};
  for (Elem i = 0; i < size; ++i)
    if (table[static_cast<std::size_t>(identity) * size + i] != i ||
        table[static_cast<std::size_t>(i) * size + identity] != i)
      return Violation{"bad-identity", {i}};
  return std::nullopt;
}

/// Exhaustive associativity over a materialized table, outer index parallel.
std::optional<Violation> check_assoc_parallel(const std::vector<Elem>& table, Elem size) {
  const Elem* t = table.data();
  const std::uint64_t inner = static_cast<std::uint64_t>(size) * size;
  return detail::parallel_first_violation(size, [&, t](std::uint64_t lo, std::uint64_t hi) {
    std::optional<Violation> bad;
    for (Elem i = static_cast<Elem>(lo); i < hi && !bad; ++i) {
      const Elem* row_i = t + static_cast<std::size_t>(i) * size;
      for (Elem j = 0; j < size; ++j) {
        const Elem* row_ij = t + static_cast<std::size_t>(row_i[j]) * size;
        const Elem* row_j = t + static_cast<std::size_t>(j) * size;
        for (Elem k = 0; k < size; ++k)
          if (row_ij[k] != row_i[row_j[k]]) {
            bad = Violation{"not-associative", {i, j, k}};
            break;
          }
        if (bad) break;
      }
    }
    return bad;
  }, inner);
}

}  // namespace

FiniteMonoid bowtie(const CrossedSemiBimodule& x) {
  const Elem n1 = x.a.size * x.k.size;
  const Elem unit = x.a.identity * x.k.size + x.k.identity;
  std::vector<Elem> table = make_c1_table(x);
  if (auto v = check_identity_and_range(table, n1, unit)) throw ValidationError(*v);
  if (auto v = check_assoc_parallel(table, n1)) throw ValidationError(*v);
  return FiniteMonoid{n1, unit, std::move(table)};
}

FiniteMonoid double_bowtie(const CrossedSemiBimodule& x, const VerifyOptions& opts) {
  const std::uint64_t n2 =
      static_cast<std::uint64_t>(x.a.size) * x.k.size * x.k.size;
  if (n2 > opts.max_c2 || n2 > 65536)
    throw ValidationError(Violation{"too-large", {n2}, "double_bowtie table"});
  const Tabs t(x);
  const Elem size = static_cast<Elem>(n2);
  std::vector<Elem> table(static_cast<std::size_t>(size) * size);
  for (Elem h = 0; h < size; ++h)
    for (Elem hp = 0; hp < size; ++hp)
      table[static_cast<std::size_t>(h) * size + hp] = t.triple_mul(h, hp);
  const Elem unit = (x.a.identity * x.k.size + x.k.identity) * x.k.size + x.k.identity;
  if (auto v = check_identity_and_range(table, size, unit)) throw ValidationError(*v);
  if (auto v = check_assoc_parallel(table, size)) throw ValidationError(*v);
  return FiniteMonoid{size, unit, std::move(table)};
}

Elem InternalCategory::c2_mul(Elem h, Elem hp) const {
  if (c2) return c2->mul(h, hp);
  return Tabs(base).triple_mul(h, hp);
}

InternalCategory build_internal_category(const CrossedSemiBimodule& x,
                                         const VerifyOptions& opts) {
  BuiltInternalCategory built = build_internal_category_reported(x, opts);
  built.report.require_all_pass();
  return std::move(built.category);
}

BuiltInternalCategory build_internal_category_reported(const CrossedSemiBimodule& x,
                                                       const VerifyOptions& opts) {
  InternalCategory cat;
  cat.base = x;
  cat.c0 = x.a;
  const Elem nk = x.k.size;
  const Elem n1 = x.a.size * nk;
  const Elem c1_unit = x.a.identity * nk + x.k.identity;
  cat.c1 = FiniteMonoid{n1, c1_unit, make_c1_table(x)};
  cat.c2_size = static_cast<std::uint64_t>(n1) * nk;

  if (cat.c2_size <= opts.max_c2 && cat.c2_size <= 65536) {
    const Tabs t(x);
    const Elem size = static_cast<Elem>(cat.c2_size);
    std::vector<Elem> table(static_cast<std::size_t>(size) * size);
    for (Elem h = 0; h < size; ++h)
      for (Elem hp = 0; hp < size; ++hp)
        table[static_cast<std::size_t>(h) * size + hp] = t.triple_mul(h, hp);
    cat.c2 = FiniteMonoid{size, c1_unit * nk + x.k.identity, std::move(table)};
  }

  cat.d10.resize(n1);
  cat.d11.resize(n1);
  cat.s10.resize(n1);
  cat.s11.resize(n1);
  for (Elem a = 0; a < x.a.size; ++a)
    for (Elem e = 0; e < nk; ++e) {
      const Elem f = a * nk + e;
      cat.d10[f] = a;
      cat.d11[f] = x.circ_at(a, e);
      cat.s10[f] = f * nk + x.k.identity;
      cat.s11[f] = (a * nk + x.k.identity) * nk + e;
    }
  cat.s00.resize(x.a.size);
  for (Elem a = 0; a < x.a.size; ++a) cat.s00[a] = a * nk + x.k.identity;

  cat.d20.resize(cat.c2_size);
  cat.d21.resize(cat.c2_size);
  cat.d22.resize(cat.c2_size);
  for (Elem a = 0; a < x.a.size; ++a)
    for (Elem e = 0; e < nk; ++e) {
      const Elem f = a * nk + e;
      const Elem ae = x.circ_at(a, e);
      for (Elem g = 0; g < nk; ++g) {
        const std::size_t h = static_cast<std::size_t>(f) * nk + g;
        cat.d20[h] = f;
        cat.d21[h] = a * nk + x.k.mul(e, g);
        cat.d22[h] = ae * nk + g;
      }
    }

  CheckReport report = verify_internal_category(cat, opts);
  return BuiltInternalCategory{std::move(cat), std::move(report)};
}

namespace {

// -- verification pieces ------------------------------------------------------

std::optional<Violation> check_c1_table(const InternalCategory& cat) {
  const Tabs t(cat.base);
  const Elem n1 = cat.c1.size;
  const Elem* table = cat.c1.table.data();
  return detail::parallel_first_violation(n1, [&, t, table](std::uint64_t lo, std::uint64_t hi) {
    std::optional<Violation> bad;
    for (Elem f = static_cast<Elem>(lo); f < hi && !bad; ++f)
      for (Elem g = 0; g < n1; ++g)
        if (table[static_cast<std::size_t>(f) * n1 + g] != t.pair_mul(f, g)) {
          bad = Violation{"table-formula-mismatch", {f, g}};
          break;
        }
    return bad;
  }, n1);
}

std::optional<Violation> check_c2_identity(const InternalCategory& cat) {
  const Elem unit =
      (cat.base.a.identity * cat.base.k.size + cat.base.k.identity) * cat.base.k.size +
      cat.base.k.identity;
  for (Elem h = 0; h < cat.c2_size; ++h)
    if (cat.c2_mul(unit, h) != h || cat.c2_mul(h, unit) != h)
      return Violation{"bad-identity", {h}};
  return std::nullopt;
}

std::optional<Violation> check_c2_assoc_sampled(const InternalCategory& cat,
                                                const VerifyOptions& opts) {
  const Tabs t(cat.base);
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t n2 = cat.c2_size;
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    const Elem h = static_cast<Elem>(rng() % n2);
    const Elem k = static_cast<Elem>(rng() % n2);
    const Elem m = static_cast<Elem>(rng() % n2);
    if (t.triple_mul(t.triple_mul(h, k), m) != t.triple_mul(h, t.triple_mul(k, m)))
      return Violation{"not-associative", {h, k, m}};
  }
  return std::nullopt;
}

struct HomWitnesses {
  std::optional<Violation> d20, d21, d22;
  bool all_found() const { return d20 && d21 && d22; }
};

/// One fused pass over C2 x C2 checking multiplicativity of d20, d21, d22
/// against the product formula. d20 factors out of the innermost loop since
/// neither side depends on the last coordinate.
HomWitnesses check_c2_face_homs(const InternalCategory& cat) {
  const Tabs t(cat.base);
  const Elem na = t.na, nk = t.nk;
  const std::uint64_t n2 = cat.c2_size;

  std::vector<HomWitnesses> partials(detail::worker_count(n2, n2));
  auto scan = [&](std::uint64_t lo, std::uint64_t hi, HomWitnesses& out) {
    for (std::uint64_t h = lo; h < hi; ++h) {
      const Elem a = static_cast<Elem>(h / (nk * nk));
      const Elem x = static_cast<Elem>((h / nk) % nk);
      const Elem y = static_cast<Elem>(h % nk);
      // images of h under the three face maps, decomposed
      const Elem f20a = a, f20k = x;
      const Elem f21a = a, f21k = t.kmul(x, y);
      const Elem f22a = t.cr(a, x), f22k = y;
      const Elem* lam_a = t.lam + static_cast<std::size_t>(a) * nk;
      const Elem* lam_f21a = lam_a;
      const Elem* lam_f22a = t.lam + static_cast<std::size_t>(f22a) * nk;
      const Elem* arow = t.a_tab + static_cast<std::size_t>(a) * na;
      const Elem* arow22 = t.a_tab + static_cast<std::size_t>(f22a) * na;

      for (Elem b = 0; b < na && !out.all_found(); ++b) {
        const Elem ab = arow[b];
        const Elem* circ_b = t.circ + static_cast<std::size_t>(b) * nk;
        for (Elem u = 0; u < nk; ++u) {
          const Elem bu = circ_b[u];
          const Elem mid = t.kmul(lam_a[u], t.rh(x, bu));
          const Elem* lam_ax = lam_f22a;  // the a o x row drives the last slot
          const Elem* circ_bu = t.circ + static_cast<std::size_t>(bu) * nk;
          const Elem d22_prod_a = t.cr(ab, mid);
          const Elem d22_rhs_a = arow22[bu];
          const Elem* krow_mid = t.k_tab + static_cast<std::size_t>(mid) * nk;
          const Elem* krow_u = t.k_tab + static_cast<std::size_t>(u) * nk;

          if (!out.d20) {
            // d20(h h') = (ab, mid); d20(h) d20(h') = (a,x)(b,u) via the
            // generic pair product path
            const Elem rhs = t.pair_mul(f20a * nk + f20k, b * nk + u);
            if (ab * nk + mid != rhs) {
              const std::uint64_t hp0 = (static_cast<std::uint64_t>(b) * nk + u) * nk;
              out.d20 = Violation{"hom-multiplicative", {h, hp0}};
            }
          }
          const bool need21 = !out.d21, need22 = !out.d22;
          if (!need21 && !need22) continue;
          for (Elem v = 0; v < nk; ++v) {
            const Elem buv = circ_bu[v];
            const Elem last = t.kmul(lam_ax[v], t.rh(y, buv));
            const std::uint64_t hp = (static_cast<std::uint64_t>(b) * nk + u) * nk + v;
            if (need21 && !out.d21) {
              // d21(h h') = (ab, mid*last); d21(h) d21(h') = (a, xy)(b, uv)
              const Elem uv = krow_u[v];
              const Elem rhs = ab * nk + t.kmul(lam_f21a[uv], t.rh(f21k, circ_b[uv]));
              if (ab * nk + krow_mid[last] != rhs)
                out.d21 = Violation{"hom-multiplicative", {h, hp}};
            }
            if (need22 && !out.d22) {
              // d22(h h') = (ab o mid, last); d22(h) d22(h') = (a o x, y)(b o u, v)
              const Elem rhs = d22_rhs_a * nk + t.kmul(lam_f22a[v], t.rh(f22k, buv));
              if (d22_prod_a * nk + last != rhs)
                out.d22 = Violation{"hom-multiplicative", {h, hp}};
            }
          }
        }
      }
      if (out.all_found()) return;
    }
  };

  const unsigned workers = static_cast<unsigned>(partials.size());
  if (workers <= 1) {
    HomWitnesses w;
    scan(0, n2, w);
    return w;
  }
  std::vector<std::thread> threads;
  const std::uint64_t per = (n2 + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = per * w, hi = std::min<std::uint64_t>(n2, lo + per);
    threads.emplace_back([&, w, lo, hi] {
      if (lo < hi) scan(lo, hi, partials[w]);
    });
  }
  for (auto& th : threads) th.join();
  HomWitnesses merged;
  for (const auto& p : partials) {
    if (!merged.d20 && p.d20) merged.d20 = p.d20;
    if (!merged.d21 && p.d21) merged.d21 = p.d21;
    if (!merged.d22 && p.d22) merged.d22 = p.d22;
  }
  return merged;
}

std::optional<Violation> check_pullback(const InternalCategory& cat) {
  const Elem n1 = cat.c1.size;
  std::vector<std::uint8_t> count(static_cast<std::size_t>(n1) * n1, 0);
  for (std::uint64_t h = 0; h < cat.c2_size; ++h) {
    auto& c = count[static_cast<std::size_t>(cat.d20[h]) * n1 + cat.d22[h]];
    if (c < 255) ++c;
  }
  for (Elem f = 0; f < n1; ++f)
    for (Elem g = 0; g < n1; ++g) {
      const std::uint8_t expect = cat.d11[f] == cat.d10[g] ? 1 : 0;
      const std::uint8_t got = count[static_cast<std::size_t>(f) * n1 + g];
      if (got != expect) return Violation{"pullback-count", {f, g, got}};
    }
  return std::nullopt;
}

}  // namespace

CheckReport verify_internal_category(const InternalCategory& cat, const VerifyOptions& opts) {
  CheckReport rep;
  const CrossedSemiBimodule& x = cat.base;
  const Tabs t(x);
  const Elem na = x.a.size, nk = x.k.size, n1 = cat.c1.size;

  rep.add("monoid-c0", check_monoid(cat.c0.table, cat.c0.size, cat.c0.identity));

  {
    auto v = check_identity_and_range(cat.c1.table, n1, cat.c1.identity);
    if (!v) v = check_assoc_parallel(cat.c1.table, n1);
    rep.add("monoid-c1", v, "exhaustive");
  }
  rep.add("c1-table", check_c1_table(cat));

  {
    auto v = check_c2_identity(cat);
    std::string note;
    if (cat.c2) {
      if (!v) v = check_assoc_parallel(cat.c2->table, cat.c2->size);
      note = "exhaustive";
    } else {
      if (!v) v = check_c2_assoc_sampled(cat, opts);
      note = "sampled n=" + std::to_string(opts.samples) +
             " seed=" + std::to_string(opts.seed);
    }
    rep.add("monoid-c2", v, note);
  }
  if (cat.c2) {
    std::optional<Violation> v;
    for (Elem h = 0; h < cat.c2->size && !v; ++h)
      for (Elem hp = 0; hp < cat.c2->size; ++hp)
        if (cat.c2->mul(h, hp) != t.triple_mul(h, hp)) {
          v = Violation{"table-formula-mismatch", {h, hp}};
          break;
        }
    rep.add("c2-table", v);
  }

  // stored index maps agree with their defining formulas
  {
    std::optional<Violation> v10, v11, v00, v10s, v11s;
    for (Elem f = 0; f < n1 && !(v10 && v11 && v10s && v11s); ++f) {
      const Elem a = f / nk, e = f % nk;
      if (!v10 && cat.d10[f] != a) v10 = Violation{"map-formula-mismatch", {f}};
      if (!v11 && cat.d11[f] != t.cr(a, e)) v11 = Violation{"map-formula-mismatch", {f}};
      if (!v10s && cat.s10[f] != static_cast<Elem>(f * nk + x.k.identity))
        v10s = Violation{"map-formula-mismatch", {f}};
      if (!v11s && cat.s11[f] != (a * nk + x.k.identity) * nk + e)
        v11s = Violation{"map-formula-mismatch", {f}};
    }
    for (Elem a = 0; a < na && !v00; ++a)
      if (cat.s00[a] != a * nk + x.k.identity) v00 = Violation{"map-formula-mismatch", {a}};
    rep.add("map-d10", v10);
    rep.add("map-d11", v11);
    rep.add("map-s00", v00);
    rep.add("map-s10", v10s);
    rep.add("map-s11", v11s);

    std::optional<Violation> v20, v21, v22;
    for (std::uint64_t h = 0; h < cat.c2_size && !(v20 && v21 && v22); ++h) {
      const Elem f = static_cast<Elem>(h / nk), g = static_cast<Elem>(h % nk);
      const Elem a = f / nk, e = f % nk;
      if (!v20 && cat.d20[h] != f) v20 = Violation{"map-formula-mismatch", {h}};
      if (!v21 && cat.d21[h] != a * nk + t.kmul(e, g))
        v21 = Violation{"map-formula-mismatch", {h}};
      if (!v22 && cat.d22[h] != t.cr(a, e) * nk + g)
        v22 = Violation{"map-formula-mismatch", {h}};
    }
    rep.add("map-d20", v20);
    rep.add("map-d21", v21);
    rep.add("map-d22", v22);
  }

  // homomorphism checks against the product formulas
  {
    std::optional<Violation> v;
    for (Elem a = 0; a < na && !v; ++a)
      for (Elem b = 0; b < na; ++b) {
        const Elem lhs = t.pair_mul(a * nk + x.k.identity, b * nk + x.k.identity);
        if (lhs != t.amul(a, b) * nk + x.k.identity) {
          v = Violation{"hom-multiplicative", {a, b}};
          break;
        }
      }
    rep.add("hom-s00", v);
  }
  {
    std::optional<Violation> v10, v11;
    if (t.cr(x.a.identity, x.k.identity) != x.a.identity)
      v11 = Violation{"hom-unit", {}};
    for (Elem f = 0; f < n1 && !(v10 && v11); ++f)
      for (Elem g = 0; g < n1; ++g) {
        const Elem p = t.pair_mul(f, g);
        const Elem pa = p / nk, pe = p % nk;
        if (!v10 && pa != t.amul(f / nk, g / nk))
          v10 = Violation{"hom-multiplicative", {f, g}};
        // d11(fg) = (a o x)(b o y): the product-compatibility identity for circ
        if (!v11 && t.cr(pa, pe) != t.amul(t.cr(f / nk, f % nk), t.cr(g / nk, g % nk)))
          v11 = Violation{"hom-multiplicative", {f, g}};
        if (v10 && v11) break;
      }
    rep.add("hom-d10", v10);
    rep.add("hom-d11", v11);
  }
  {
    // degeneracies C1 -> C2
    std::optional<Violation> v10, v11;
    for (Elem f = 0; f < n1 && !(v10 && v11); ++f)
      for (Elem g = 0; g < n1; ++g) {
        const Elem p = t.pair_mul(f, g);
        if (!v10) {
          const std::uint64_t lhs = t.triple_mul(
              static_cast<Elem>(static_cast<std::uint64_t>(f) * nk + x.k.identity),
              static_cast<Elem>(static_cast<std::uint64_t>(g) * nk + x.k.identity));
          if (lhs != static_cast<std::uint64_t>(p) * nk + x.k.identity)
            v10 = Violation{"hom-multiplicative", {f, g}};
        }
        if (!v11) {
          auto s11_of = [&](Elem q) {
            return static_cast<Elem>(((q / nk) * nk + x.k.identity) * nk + q % nk);
          };
          if (t.triple_mul(s11_of(f), s11_of(g)) != s11_of(p))
            v11 = Violation{"hom-multiplicative", {f, g}};
        }
        if (v10 && v11) break;
      }
    rep.add("hom-s10", v10);
    rep.add("hom-s11", v11);
  }
  {
    HomWitnesses fw = check_c2_face_homs(cat);
    rep.add("hom-d20", fw.d20);
    rep.add("hom-d21", fw.d21);
    rep.add("hom-d22", fw.d22);
  }

  // simplicial identities on the stored maps
  {
    auto id_check = [&](const char* name, auto&& fn, std::uint64_t domain) {
      std::optional<Violation> v;
      for (std::uint64_t i = 0; i < domain; ++i)
        if (!fn(i)) {
          v = Violation{"simplicial", {i}};
          break;
        }
      rep.add(name, v);
    };
    id_check("simplicial-d10s00-id", [&](std::uint64_t a) { return cat.d10[cat.s00[a]] == a; },
             na);
    id_check("simplicial-d11s00-id", [&](std::uint64_t a) { return cat.d11[cat.s00[a]] == a; },
             na);
    id_check("simplicial-d20s10-id", [&](std::uint64_t f) { return cat.d20[cat.s10[f]] == f; },
             n1);
    id_check("simplicial-d21s10-id", [&](std::uint64_t f) { return cat.d21[cat.s10[f]] == f; },
             n1);
    id_check("simplicial-d21s11-id", [&](std::uint64_t f) { return cat.d21[cat.s11[f]] == f; },
             n1);
    id_check("simplicial-d22s11-id", [&](std::uint64_t f) { return cat.d22[cat.s11[f]] == f; },
             n1);
    id_check("simplicial-d20s11-s00d10",
             [&](std::uint64_t f) { return cat.d20[cat.s11[f]] == cat.s00[cat.d10[f]]; }, n1);
    id_check("simplicial-d22s10-s00d11",
             [&](std::uint64_t f) { return cat.d22[cat.s10[f]] == cat.s00[cat.d11[f]]; }, n1);
    id_check("simplicial-d10d20-d10d21",
             [&](std::uint64_t h) { return cat.d10[cat.d20[h]] == cat.d10[cat.d21[h]]; },
             cat.c2_size);
    id_check("simplicial-d11d20-d10d22",
             [&](std::uint64_t h) { return cat.d11[cat.d20[h]] == cat.d10[cat.d22[h]]; },
             cat.c2_size);
    id_check("simplicial-d11d21-d11d22",
             [&](std::uint64_t h) { return cat.d11[cat.d21[h]] == cat.d11[cat.d22[h]]; },
             cat.c2_size);
    id_check("simplicial-s10s00-s11s00",
             [&](std::uint64_t a) { return cat.s10[cat.s00[a]] == cat.s11[cat.s00[a]]; }, na);
  }

  rep.add("pullback", check_pullback(cat));
  return rep;
}

InternalFunctor internal_functor(const WeakMorphism& w, const InternalCategory& src,
                                 const InternalCategory& dst) {
  if (w.kappa.source != src.c0 || w.kappa.target != dst.c0 || w.k_source != src.base.k ||
      w.k_target != dst.base.k)
    throw ValidationError(Violation{"component-mismatch", {}, "endpoints"});
  const Elem nk = src.base.k.size, nkd = dst.base.k.size;

  InternalFunctor fun;
  fun.f0 = w.kappa.map;
  fun.f1.resize(src.c1.size);
  for (Elem a = 0; a < src.c0.size; ++a)
    for (Elem e = 0; e < nk; ++e)
      fun.f1[a * nk + e] = w.kappa.map[a] * nkd + w.gamma_at(a, e);
  fun.f2.resize(src.c2_size);
  for (std::uint64_t h = 0; h < src.c2_size; ++h) {
    const Elem a = static_cast<Elem>(h / (nk * nk));
    const Elem e = static_cast<Elem>((h / nk) % nk);
    const Elem g = static_cast<Elem>(h % nk);
    fun.f2[h] = (w.kappa.map[a] * nkd + w.gamma_at(a, e)) * nkd +
                w.gamma_at(src.base.circ_at(a, e), g);
  }

  auto hom_fail = [](const char* which, std::uint64_t u, std::uint64_t v) {
    return ValidationError(Violation{"functor-not-hom", {u, v}, which});
  };
  // f0
  if (fun.f0[src.c0.identity] != dst.c0.identity) throw hom_fail("f0", 0, 0);
  for (Elem a = 0; a < src.c0.size; ++a)
    for (Elem b = 0; b < src.c0.size; ++b)
      if (fun.f0[src.c0.mul(a, b)] != dst.c0.mul(fun.f0[a], fun.f0[b]))
        throw hom_fail("f0", a, b);
  // f1
  if (fun.f1[src.c1.identity] != dst.c1.identity) throw hom_fail("f1", 0, 0);
  for (Elem f = 0; f < src.c1.size; ++f)
    for (Elem g = 0; g < src.c1.size; ++g)
      if (fun.f1[src.c1.mul(f, g)] != dst.c1.mul(fun.f1[f], fun.f1[g]))
        throw hom_fail("f1", f, g);
  // f2
  for (std::uint64_t h = 0; h < src.c2_size; ++h)
    for (std::uint64_t hp = 0; hp < src.c2_size; ++hp)
      if (fun.f2[src.c2_mul(static_cast<Elem>(h), static_cast<Elem>(hp))] !=
          dst.c2_mul(fun.f2[h], fun.f2[hp]))
        throw hom_fail("f2", h, hp);

  auto comm_fail = [](const char* which, std::uint64_t u) {
    return ValidationError(Violation{"functor-not-simplicial", {u}, which});
  };
  for (Elem f = 0; f < src.c1.size; ++f) {
    if (fun.f0[src.d10[f]] != dst.d10[fun.f1[f]]) throw comm_fail("d10", f);
    if (fun.f0[src.d11[f]] != dst.d11[fun.f1[f]]) throw comm_fail("d11", f);
    if (fun.f2[src.s10[f]] != dst.s10[fun.f1[f]]) throw comm_fail("s10", f);
    if (fun.f2[src.s11[f]] != dst.s11[fun.f1[f]]) throw comm_fail("s11", f);
  }
  for (Elem a = 0; a < src.c0.size; ++a)
    if (fun.f1[src.s00[a]] != dst.s00[fun.f0[a]]) throw comm_fail("s00", a);
  for (std::uint64_t h = 0; h < src.c2_size; ++h) {
    if (fun.f1[src.d20[h]] != dst.d20[fun.f2[h]]) throw comm_fail("d20", h);
    if (fun.f1[src.d21[h]] != dst.d21[fun.f2[h]]) throw comm_fail("d21", h);
    if (fun.f1[src.d22[h]] != dst.d22[fun.f2[h]]) throw comm_fail("d22", h);
  }
  return fun;
}

SmallCategory::SmallCategory(const InternalCategory& cat)
    : n_objects_(cat.c0.size),
      n_arrows_(cat.c1.size),
      source_(cat.d11),
      target_(cat.d10),
      identity_(cat.s00),
      d21_(cat.d21) {
  pair_to_c2_.assign(static_cast<std::size_t>(n_arrows_) * n_arrows_, npos);
  for (std::uint64_t h = 0; h < cat.c2_size; ++h) {
    const Elem f = cat.d20[h], g = cat.d22[h];
    pair_to_c2_[static_cast<std::size_t>(f) * n_arrows_ + g] = static_cast<Elem>(h);
  }
}

Elem SmallCategory::compose(Elem f, Elem g) const {
  if (source_[f] != target_[g])
    throw ValidationError(Violation{"not-composable", {f, g}});
  const Elem h = pair_to_c2_[static_cast<std::size_t>(f) * n_arrows_ + g];
  if (h == npos) throw ValidationError(Violation{"pullback-count", {f, g, 0}});
  return d21_[h];
}

CheckReport SmallCategory::law_report() const {
  CheckReport rep;
  std::optional<Violation> vid;
  for (Elem f = 0; f < n_arrows_ && !vid; ++f) {
    if (compose(f, identity_[source_[f]]) != f || compose(identity_[target_[f]], f) != f)
      vid = Violation{"category-identity", {f}};
  }
  rep.add("category-identity", vid);

  std::vector<std::vector<Elem>> by_target(n_objects_);
  for (Elem f = 0; f < n_arrows_; ++f) by_target[target_[f]].push_back(f);

  std::optional<Violation> vend;
  for (Elem f = 0; f < n_arrows_ && !vend; ++f)
    for (Elem g : by_target[source_[f]]) {
      const Elem c = compose(f, g);
      if (source_[c] != source_[g] || target_[c] != target_[f]) {
        vend = Violation{"category-endpoints", {f, g}};
        break;
      }
    }
  rep.add("category-endpoints", vend);

  std::optional<Violation> vass;
  for (Elem f = 0; f < n_arrows_ && !vass; ++f)
    for (Elem g : by_target[source_[f]]) {
      for (Elem h : by_target[source_[g]])
        if (compose(compose(f, g), h) != compose(f, compose(g, h))) {
          vass = Violation{"category-associativity", {f, g, h}};
          break;
        }
      if (vass) break;
    }
  rep.add("category-associativity", vass);
  return rep;
}

SmallCategory materialize_category(const InternalCategory& cat) { return SmallCategory(cat); }

}  // namespace monocat
