#include "monocat/quadratic.hpp"

namespace monocat {

namespace {

// all arithmetic on residues; operands are < n so products fit in uint64
struct Mod {
  std::uint64_t n;
  Elem add(std::uint64_t a, std::uint64_t b) const { return static_cast<Elem>((a + b) % n); }
  Elem sub(std::uint64_t a, std::uint64_t b) const {
    return static_cast<Elem>((a + n - b % n) % n);
  }
  Elem mul(std::uint64_t a, std::uint64_t b) const { return static_cast<Elem>(a * b % n); }
};

}  // namespace

QuParams make_qu_params(std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  if (n < 1) throw ValidationError(Violation{"constraint-violated", {}, "n must be >= 1"});
  const Mod m{n};
  const Elem residue = m.add(m.mul(p % n, q % n), 2);
  if (residue != 0)
    throw ValidationError(Violation{"constraint-violated", {residue}, "pq+2 mod n"});
  return QuParams{n, p % n, q % n};
}

QuComponents build_qu_components(const QuParams& params) {
  const std::uint32_t n = params.n;
  const Mod md{n};
  const Elem size = static_cast<Elem>(n * n);

  // K(R): (r,s) at index r*n + s, identity matrix at (0,1)
  std::vector<Elem> ktab(static_cast<std::size_t>(size) * size);
  for (Elem r = 0; r < n; ++r)
    for (Elem s = 0; s < n; ++s) {
      Elem* row = ktab.data() + static_cast<std::size_t>(r * n + s) * size;
      for (Elem r1 = 0; r1 < n; ++r1)
        for (Elem s1 = 0; s1 < n; ++s1)
          row[r1 * n + s1] = md.add(r1, md.mul(r, s1)) * n + md.mul(s, s1);
    }
  const Elem k_identity = n == 1 ? 0 : 1;  // (r,s) = (0,1)
  FiniteMonoid k = validate_monoid(std::move(ktab), size, k_identity);

  // A(R): [a,b] at index a*n + b, [a,b][c,d] = [ac, a^2 d + b c^2 + p^2 b d]
  const Elem p2 = md.mul(params.p, params.p);
  std::vector<Elem> atab(static_cast<std::size_t>(size) * size);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem* row = atab.data() + static_cast<std::size_t>(a * n + b) * size;
      const Elem a2 = md.mul(a, a);
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          const Elem second =
              md.add(md.add(md.mul(a2, d), md.mul(b, md.mul(c, c))), md.mul(p2, md.mul(b, d)));
          row[c * n + d] = md.mul(a, c) * n + second;
        }
    }
  const Elem a_identity = n == 1 ? 0 : static_cast<Elem>(n);  // [1,0]
  FiniteMonoid a = validate_monoid(std::move(atab), size, a_identity);
  return QuComponents{std::move(k), std::move(a)};
}

CrossedSemiBimodule build_qu(const QuParams& params) {
  const std::uint32_t n = params.n;
  const Mod md{n};
  QuComponents comp = build_qu_components(params);
  const Elem size = static_cast<Elem>(n * n);

  // [a,b] o (r,s) = [as - pr, s^2 b - q r s a - r^2]
  std::vector<Elem> circ(static_cast<std::size_t>(size) * size);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem* row = circ.data() + static_cast<std::size_t>(a * n + b) * size;
      for (Elem r = 0; r < n; ++r)
        for (Elem s = 0; s < n; ++s) {
          const Elem first = md.sub(md.mul(a, s), md.mul(params.p, r));
          const Elem second = md.sub(
              md.sub(md.mul(md.mul(s, s), b), md.mul(md.mul(params.q, md.mul(r, s)), a)),
              md.mul(r, r));
          row[r * n + s] = first * n + second;
        }
    }

  // ^m k = k^m = (r a, s) for m = [a,b]: both actions scale r by a
  std::vector<Elem> act(static_cast<std::size_t>(size) * size);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem* row = act.data() + static_cast<std::size_t>(a * n + b) * size;
      for (Elem r = 0; r < n; ++r)
        for (Elem s = 0; s < n; ++s) row[r * n + s] = md.mul(r, a) * n + s;
    }

  SetAction circ_action = validate_set_action(comp.k, size, std::move(circ));
  MonoidAction lambda =
      validate_monoid_action(ActionSide::left, comp.a, comp.k, act);
  MonoidAction rho =
      validate_monoid_action(ActionSide::right, comp.a, comp.k, std::move(act));
  return validate_xbsmod(comp.a, comp.k, circ_action, lambda, rho);
}

}  // namespace monocat
