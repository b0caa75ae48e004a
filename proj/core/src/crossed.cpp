#include "monocat/crossed.hpp"

namespace monocat {

namespace {

void require(bool cond, const char* check, std::string note = {}) {
  if (!cond) throw ValidationError(Violation{check, {}, std::move(note)});
}

void require_components(const FiniteMonoid& a, const FiniteMonoid& k, const SetAction& circ,
                        const MonoidAction& lambda, const MonoidAction& rho) {
  require(circ.actor == k && circ.carrier_size == a.size, "component-mismatch", "circ");
  require(lambda.side == ActionSide::left && lambda.actor == a && lambda.carrier == k,
          "component-mismatch", "lambda");
  require(rho.side == ActionSide::right && rho.actor == a && rho.carrier == k,
          "component-mismatch", "rho");
  if (auto v = check_monoid(a.table, a.size, a.identity)) throw ValidationError(*v);
  if (auto v = check_monoid(k.table, k.size, k.identity)) throw ValidationError(*v);
  if (auto v = check_set_action(k, a.size, circ.table)) throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::left, a, k, lambda.table))
    throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::right, a, k, rho.table))
    throw ValidationError(*v);
}

}  // namespace

std::optional<Violation> check_xbsmod_axioms(const CrossedSemiBimodule& x) {
  const FiniteMonoid& A = x.a;
  const FiniteMonoid& K = x.k;
  const Elem na = A.size, nk = K.size;
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b)
      for (Elem e = 0; e < nk; ++e)
        if (x.rho_at(x.lambda_at(a, e), b) != x.lambda_at(a, x.rho_at(e, b)))
          return Violation{"axiom-1", {a, b, e}};
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b) {
      const Elem ab = A.mul(a, b);
      for (Elem e = 0; e < nk; ++e)
        if (x.circ_at(ab, x.lambda_at(a, e)) != A.mul(a, x.circ_at(b, e)))
          return Violation{"axiom-2", {a, b, e}};
    }
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b) {
      const Elem ab = A.mul(a, b);
      for (Elem e = 0; e < nk; ++e)
        if (x.circ_at(ab, x.rho_at(e, b)) != A.mul(x.circ_at(a, e), b))
          return Violation{"axiom-3", {a, b, e}};
    }
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b)
      for (Elem e = 0; e < nk; ++e)
        for (Elem f = 0; f < nk; ++f) {
          // (^a f) e^(b o f) = e^b (^(a o e) f)
          const Elem lhs = K.mul(x.lambda_at(a, f), x.rho_at(e, x.circ_at(b, f)));
          const Elem rhs = K.mul(x.rho_at(e, b), x.lambda_at(x.circ_at(a, e), f));
          if (lhs != rhs) return Violation{"axiom-4", {a, b, e, f}};
        }
  return std::nullopt;
}

CrossedSemiBimodule validate_xbsmod(const FiniteMonoid& a, const FiniteMonoid& k,
                                    const SetAction& circ, const MonoidAction& lambda,
                                    const MonoidAction& rho) {
  require_components(a, k, circ, lambda, rho);
  CrossedSemiBimodule x{a, k, circ, lambda, rho};
  if (auto v = check_xbsmod_axioms(x)) throw ValidationError(*v);
  return x;
}

std::optional<Violation> check_xsmod_axioms(const FiniteMonoid& a, const FiniteMonoid& k,
                                            const std::vector<Elem>& partial,
                                            const MonoidAction& rho) {
  auto rho_at = [&](Elem x, Elem av) { return rho.act(av, x); };
  for (Elem av = 0; av < a.size; ++av)
    for (Elem x = 0; x < k.size; ++x)
      if (a.mul(av, partial[rho_at(x, av)]) != a.mul(partial[x], av))
        return Violation{"axiom-i", {av, x}};
  for (Elem x = 0; x < k.size; ++x)
    for (Elem y = 0; y < k.size; ++y)
      if (k.mul(y, rho_at(x, partial[y])) != k.mul(x, y)) return Violation{"axiom-ii", {x, y}};
  return std::nullopt;
}

CrossedSemiModule validate_xsmod(const MonoidHom& partial, const MonoidAction& rho) {
  const FiniteMonoid& k = partial.source;
  const FiniteMonoid& a = partial.target;
  require(rho.side == ActionSide::right && rho.actor == a && rho.carrier == k,
          "component-mismatch", "rho");
  if (auto v = check_hom(partial.map, k, a)) throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::right, a, k, rho.table))
    throw ValidationError(*v);
  if (auto v = check_xsmod_axioms(a, k, partial.map, rho)) throw ValidationError(*v);
  return CrossedSemiModule{a, k, partial, rho};
}

std::optional<Violation> check_xmod_axioms(const FiniteMonoid& a, const FiniteMonoid& k,
                                           const std::vector<Elem>& partial,
                                           const MonoidAction& rho) {
  if (!is_group(k)) return Violation{"not-a-group", {}, "K"};
  if (!is_group(a)) return Violation{"not-a-group", {}, "A"};
  const auto ainv = group_inverses(a);
  const auto kinv = group_inverses(k);
  auto rho_at = [&](Elem x, Elem av) { return rho.act(av, x); };
  for (Elem x = 0; x < k.size; ++x)
    for (Elem av = 0; av < a.size; ++av)
      if (partial[rho_at(x, av)] != a.mul(a.mul(ainv[av], partial[x]), av))
        return Violation{"axiom-1", {x, av}};
  for (Elem x = 0; x < k.size; ++x)
    for (Elem y = 0; y < k.size; ++y)
      if (rho_at(y, partial[x]) != k.mul(kinv[x], k.mul(y, x)))
        return Violation{"axiom-2", {x, y}};
  return std::nullopt;
}

CrossedModule validate_xmod(const MonoidHom& partial, const MonoidAction& rho) {
  const FiniteMonoid& k = partial.source;
  const FiniteMonoid& a = partial.target;
  require(rho.side == ActionSide::right && rho.actor == a && rho.carrier == k,
          "component-mismatch", "rho");
  if (auto v = check_hom(partial.map, k, a)) throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::right, a, k, rho.table))
    throw ValidationError(*v);
  if (auto v = check_xmod_axioms(a, k, partial.map, rho)) throw ValidationError(*v);
  return CrossedModule{a, k, partial, rho};
}

std::vector<Elem> boundary(const CrossedSemiBimodule& x) {
  std::vector<Elem> partial(x.k.size);
  for (Elem e = 0; e < x.k.size; ++e) partial[e] = x.boundary_at(e);
  // exchange law y x^(partial y) = x (^(partial x) y), from axiom (4) at a=b=1
  for (Elem e = 0; e < x.k.size; ++e)
    for (Elem f = 0; f < x.k.size; ++f)
      if (x.k.mul(f, x.rho_at(e, partial[f])) != x.k.mul(e, x.lambda_at(partial[e], f)))
        throw ValidationError(Violation{"exchange-law", {e, f}});
  return partial;
}

FiniteMonoid twist_monoid(const CrossedSemiBimodule& x) {
  const auto partial = boundary(x);
  const Elem n = x.k.size;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem e = 0; e < n; ++e)
    for (Elem f = 0; f < n; ++f)
      table[static_cast<std::size_t>(e) * n + f] = x.k.mul(f, x.rho_at(e, partial[f]));
  return validate_monoid(std::move(table), n, x.k.identity);
}

CrossedSemiBimodule phi(const CrossedSemiModule& s) {
  const FiniteMonoid& a = s.a;
  const FiniteMonoid& k = s.k;
  std::vector<Elem> circ(static_cast<std::size_t>(a.size) * k.size);
  for (Elem av = 0; av < a.size; ++av)
    for (Elem x = 0; x < k.size; ++x)
      circ[static_cast<std::size_t>(av) * k.size + x] = a.mul(av, s.partial.map[x]);
  SetAction circ_action = validate_set_action(k, a.size, std::move(circ));
  MonoidAction lambda = trivial_action(ActionSide::left, a, k);
  return validate_xbsmod(a, k, circ_action, lambda, s.rho);
}

CrossedSemiModule recover_xsmod(const CrossedSemiBimodule& x) {
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (x.lambda_at(av, e) != e)
        throw ValidationError(Violation{"lambda-not-trivial", {av, e}});
  auto partial = boundary(x);
  MonoidHom hom = validate_hom(std::move(partial), x.k, x.a);
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (x.circ_at(av, e) != x.a.mul(av, hom.map[e]))
        throw ValidationError(Violation{"circ-not-boundary", {av, e}});
  return validate_xsmod(hom, x.rho);
}

CrossedSemiBimodule xmod_to_xbsmod(const CrossedModule& m) {
  CrossedSemiModule s = validate_xsmod(m.partial, m.rho);
  CrossedSemiBimodule x = phi(s);
  return x;
}

CrossedModule group_to_xmod(const CrossedSemiBimodule& x) {
  if (!is_group(x.k)) throw ValidationError(Violation{"not-a-group", {}, "K"});
  if (!is_group(x.a)) throw ValidationError(Violation{"not-a-group", {}, "A"});
  const auto ainv = group_inverses(x.a);
  const auto kinv = group_inverses(x.k);
  const auto partial = boundary(x);
  FiniteMonoid ktw = twist_monoid(x);

  // <>-inverse x^flat = ^(partial(x)^-1)(x^-1), two-sided
  for (Elem e = 0; e < ktw.size; ++e) {
    const Elem flat = x.lambda_at(ainv[partial[e]], kinv[e]);
    if (ktw.mul(e, flat) != ktw.identity || ktw.mul(flat, e) != ktw.identity)
      throw ValidationError(Violation{"twist-not-a-group", {e}});
  }

  std::vector<Elem> star(static_cast<std::size_t>(x.a.size) * ktw.size);
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < ktw.size; ++e)
      star[static_cast<std::size_t>(av) * ktw.size + e] =
          x.lambda_at(ainv[av], x.rho_at(e, av));

  MonoidHom hom = validate_hom(partial, ktw, x.a);
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < ktw.size; ++e) {
      const Elem starred = star[static_cast<std::size_t>(av) * ktw.size + e];
      if (hom.map[starred] != x.a.mul(x.a.mul(ainv[av], hom.map[e]), av))
        throw ValidationError(Violation{"star-not-equivariant", {av, e}});
    }
  MonoidAction star_action =
      validate_monoid_action(ActionSide::right, x.a, ktw, std::move(star));
  return validate_xmod(hom, star_action);
}

CrossedSemiBimodule reconstruct_group_xbsmod(const MonoidAction& lambda,
                                             const MonoidAction& rho,
                                             const std::vector<Elem>& partial_map) {
  const FiniteMonoid& a = lambda.actor;
  const FiniteMonoid& k = lambda.carrier;
  require(lambda.side == ActionSide::left, "component-mismatch", "lambda");
  require(rho.side == ActionSide::right && rho.actor == a && rho.carrier == k,
          "component-mismatch", "rho");
  require(partial_map.size() == k.size, "component-mismatch", "partial");
  if (!is_group(k)) throw ValidationError(Violation{"not-a-group", {}, "K"});
  if (!is_group(a)) throw ValidationError(Violation{"not-a-group", {}, "A"});
  if (auto v = check_monoid_action(ActionSide::left, a, k, lambda.table))
    throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::right, a, k, rho.table))
    throw ValidationError(*v);
  const auto ainv = group_inverses(a);
  for (Elem av = 0; av < a.size; ++av)
    for (Elem bv = 0; bv < a.size; ++bv)
      for (Elem e = 0; e < k.size; ++e)
        if (rho.act(bv, lambda.act(av, e)) != lambda.act(av, rho.act(bv, e)))
          throw ValidationError(Violation{"compatibility-fails", {av, bv, e}});

  for (Elem e = 0; e < k.size; ++e)
    for (Elem f = 0; f < k.size; ++f) {
      const Elem rhs = a.mul(partial_map[e], partial_map[lambda.act(ainv[partial_map[e]], f)]);
      if (partial_map[k.mul(e, f)] != rhs)
        throw ValidationError(Violation{"hypothesis-i", {e, f}});
    }
  for (Elem bv = 0; bv < a.size; ++bv)
    for (Elem z = 0; z < k.size; ++z) {
      const Elem lhs = partial_map[lambda.act(ainv[bv], rho.act(bv, z))];
      if (lhs != a.mul(a.mul(ainv[bv], partial_map[z]), bv))
        throw ValidationError(Violation{"hypothesis-ii", {bv, z}});
    }
  for (Elem e = 0; e < k.size; ++e)
    for (Elem f = 0; f < k.size; ++f)
      if (k.mul(f, rho.act(partial_map[f], e)) != k.mul(e, lambda.act(partial_map[e], f)))
        throw ValidationError(Violation{"hypothesis-iii", {e, f}});

  std::vector<Elem> circ(static_cast<std::size_t>(a.size) * k.size);
  for (Elem av = 0; av < a.size; ++av)
    for (Elem e = 0; e < k.size; ++e)
      circ[static_cast<std::size_t>(av) * k.size + e] =
          a.mul(av, partial_map[lambda.act(ainv[av], e)]);
  SetAction circ_action = validate_set_action(k, a.size, std::move(circ));
  CrossedSemiBimodule x = validate_xbsmod(a, k, circ_action, lambda, rho);
  if (boundary(x) != partial_map)
    throw ValidationError(Violation{"boundary-mismatch", {}});
  return x;
}

std::optional<Violation> check_morphism(const XbsMorphism& m, const CrossedSemiBimodule& x,
                                        const CrossedSemiBimodule& y) {
  if (m.kappa.source != x.k || m.kappa.target != y.k || m.alpha.source != x.a ||
      m.alpha.target != y.a)
    return Violation{"component-mismatch", {}, "endpoints"};
  if (auto v = check_hom(m.kappa.map, x.k, y.k)) return *v;
  if (auto v = check_hom(m.alpha.map, x.a, y.a)) return *v;
  const auto& ka = m.kappa.map;
  const auto& al = m.alpha.map;
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (al[x.circ_at(av, e)] != y.circ_at(al[av], ka[e]))
        return Violation{"condition-1", {av, e}};
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (ka[x.lambda_at(av, e)] != y.lambda_at(al[av], ka[e]))
        return Violation{"condition-2", {av, e}};
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (ka[x.rho_at(e, av)] != y.rho_at(ka[e], al[av]))
        return Violation{"condition-3", {av, e}};
  return std::nullopt;
}

XbsMorphism validate_morphism(const XbsMorphism& m, const CrossedSemiBimodule& x,
                              const CrossedSemiBimodule& y) {
  if (auto v = check_morphism(m, x, y)) throw ValidationError(*v);
  return m;
}

std::optional<Violation> check_weak_morphism(const WeakMorphism& w,
                                             const CrossedSemiBimodule& x,
                                             const CrossedSemiBimodule& y) {
  if (w.kappa.source != x.a || w.kappa.target != y.a || w.k_source != x.k ||
      w.k_target != y.k)
    return Violation{"component-mismatch", {}, "endpoints"};
  if (w.gamma.size() != static_cast<std::size_t>(x.a.size) * x.k.size)
    return Violation{"component-mismatch", {}, "gamma dimensions"};
  for (Elem v : w.gamma)
    if (v >= y.k.size) return Violation{"component-mismatch", {}, "gamma range"};
  if (auto v = check_hom(w.kappa.map, x.a, y.a)) return *v;
  const auto& ka = w.kappa.map;

  // (1) gamma(a,-) is unital and multiplicative along the source twist:
  //     gamma(a,1) = 1, gamma(a, ef) = gamma(a,e) gamma(a o e, f)
  for (Elem av = 0; av < x.a.size; ++av)
    if (w.gamma_at(av, x.k.identity) != y.k.identity) return Violation{"condition-1", {av}};
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      for (Elem f = 0; f < x.k.size; ++f)
        if (w.gamma_at(av, x.k.mul(e, f)) !=
            y.k.mul(w.gamma_at(av, e), w.gamma_at(x.circ_at(av, e), f)))
          return Violation{"condition-1", {av, e, f}};
  // (2)
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      if (y.circ_at(ka[av], w.gamma_at(av, e)) != ka[x.circ_at(av, e)])
        return Violation{"condition-2", {av, e}};
  // (3)
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem bv = 0; bv < x.a.size; ++bv)
      for (Elem e = 0; e < x.k.size; ++e)
        for (Elem f = 0; f < x.k.size; ++f) {
          const Elem gb = w.gamma_at(bv, f);
          const Elem lhs =
              y.k.mul(y.lambda_at(ka[av], gb),
                      y.rho_at(w.gamma_at(av, e), y.circ_at(ka[bv], gb)));
          const Elem src = x.k.mul(x.lambda_at(av, f), x.rho_at(e, x.circ_at(bv, f)));
          if (lhs != w.gamma_at(x.a.mul(av, bv), src))
            return Violation{"condition-3", {av, bv, e, f}};
        }
  return std::nullopt;
}

WeakMorphism validate_weak_morphism(const WeakMorphism& w, const CrossedSemiBimodule& x,
                                    const CrossedSemiBimodule& y) {
  if (auto v = check_weak_morphism(w, x, y)) throw ValidationError(*v);
  return w;
}

WeakMorphism weak_from_morphism(const XbsMorphism& m) {
  const Elem na = m.alpha.source.size, nk = m.kappa.source.size;
  std::vector<Elem> gamma(static_cast<std::size_t>(na) * nk);
  for (Elem av = 0; av < na; ++av)
    for (Elem e = 0; e < nk; ++e)
      gamma[static_cast<std::size_t>(av) * nk + e] = m.kappa.map[e];
  return WeakMorphism{m.alpha, m.kappa.source, m.kappa.target, std::move(gamma)};
}

WeakMorphism identity_weak(const CrossedSemiBimodule& x) {
  std::vector<Elem> gamma(static_cast<std::size_t>(x.a.size) * x.k.size);
  for (Elem av = 0; av < x.a.size; ++av)
    for (Elem e = 0; e < x.k.size; ++e)
      gamma[static_cast<std::size_t>(av) * x.k.size + e] = e;
  return WeakMorphism{identity_hom(x.a), x.k, x.k, std::move(gamma)};
}

WeakMorphism compose_weak(const WeakMorphism& outer, const WeakMorphism& inner) {
  if (inner.kappa.target != outer.kappa.source || inner.k_target != outer.k_source)
    throw ValidationError(Violation{"not-composable", {}});
  std::vector<Elem> kmap(inner.kappa.map.size());
  for (std::size_t i = 0; i < kmap.size(); ++i) kmap[i] = outer.kappa.map[inner.kappa.map[i]];
  MonoidHom kappa{inner.kappa.source, outer.kappa.target, std::move(kmap)};

  const Elem na = inner.kappa.source.size, nk = inner.k_source.size;
  std::vector<Elem> gamma(static_cast<std::size_t>(na) * nk);
  for (Elem av = 0; av < na; ++av)
    for (Elem e = 0; e < nk; ++e)
      gamma[static_cast<std::size_t>(av) * nk + e] =
          outer.gamma_at(inner.kappa.map[av], inner.gamma_at(av, e));
  return WeakMorphism{std::move(kappa), inner.k_source, outer.k_target, std::move(gamma)};
}

CanonicalWeakIso canonical_weak_iso(const CrossedSemiBimodule& x) {
  CrossedModule m = group_to_xmod(x);  // throws not-a-group as needed
  CrossedSemiBimodule tw = xmod_to_xbsmod(m);
  const auto ainv = group_inverses(x.a);

  const Elem na = x.a.size, nk = x.k.size;
  std::vector<Elem> gfwd(static_cast<std::size_t>(na) * nk), gbwd(gfwd.size());
  for (Elem av = 0; av < na; ++av)
    for (Elem e = 0; e < nk; ++e) {
      gfwd[static_cast<std::size_t>(av) * nk + e] = x.lambda_at(av, e);
      gbwd[static_cast<std::size_t>(av) * nk + e] = x.lambda_at(ainv[av], e);
    }
  WeakMorphism forward{identity_hom(x.a), tw.k, x.k, std::move(gfwd)};
  WeakMorphism backward{identity_hom(x.a), x.k, tw.k, std::move(gbwd)};

  CheckReport report;
  report.add("canonical-forward-valid", check_weak_morphism(forward, tw, x));
  report.add("canonical-backward-valid", check_weak_morphism(backward, x, tw));
  const bool fb = compose_weak(forward, backward) == identity_weak(x);
  const bool bf = compose_weak(backward, forward) == identity_weak(tw);
  if (fb)
    report.add_pass("canonical-forward-backward-identity");
  else
    report.add_fail("canonical-forward-backward-identity", {});
  if (bf)
    report.add_pass("canonical-backward-forward-identity");
  else
    report.add_fail("canonical-backward-forward-identity", {});
  return CanonicalWeakIso{std::move(tw), std::move(forward), std::move(backward),
                          std::move(report)};
}

CrossedSemiBimodule semibimodule_embed(const MonoidAction& lambda, const MonoidAction& rho) {
  const FiniteMonoid& a = lambda.actor;
  const FiniteMonoid& k = lambda.carrier;
  require(lambda.side == ActionSide::left, "component-mismatch", "lambda");
  require(rho.side == ActionSide::right && rho.actor == a && rho.carrier == k,
          "component-mismatch", "rho");
  for (Elem e = 0; e < k.size; ++e)
    for (Elem f = 0; f < k.size; ++f)
      if (k.mul(e, f) != k.mul(f, e))
        throw ValidationError(Violation{"not-commutative", {e, f}});
  if (auto v = check_monoid_action(ActionSide::left, a, k, lambda.table))
    throw ValidationError(*v);
  if (auto v = check_monoid_action(ActionSide::right, a, k, rho.table))
    throw ValidationError(*v);
  for (Elem av = 0; av < a.size; ++av)
    for (Elem bv = 0; bv < a.size; ++bv)
      for (Elem e = 0; e < k.size; ++e)
        if (rho.act(bv, lambda.act(av, e)) != lambda.act(av, rho.act(bv, e)))
          throw ValidationError(Violation{"compatibility-fails", {av, bv, e}});

  std::vector<Elem> circ(static_cast<std::size_t>(a.size) * k.size);
  for (Elem av = 0; av < a.size; ++av)
    for (Elem e = 0; e < k.size; ++e) circ[static_cast<std::size_t>(av) * k.size + e] = av;
  SetAction circ_action = validate_set_action(k, a.size, std::move(circ));
  return validate_xbsmod(a, k, circ_action, lambda, rho);
}

}  // namespace monocat
