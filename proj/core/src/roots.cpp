#include "hamcurve/roots.hpp"

#include <algorithm>

namespace hamcurve {

std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw PolyError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;

  const UniPoly dp = p.derivative();
  const UniPoly b = gcd(p, dp);
  UniPoly c = divide_exact(p, b);
  UniPoly d = divide_exact(dp, b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = divide_exact(c, a);
    d = divide_exact(d, a) - c.derivative();
    ++i;
  }
  return out;
}

SturmSequence::SturmSequence(const UniPoly& p) {
  auto normalized = [](const UniPoly& q) {
    if (q.is_zero()) return q;
    const Rational scale = abs(q.leading());
    std::vector<Rational> c = q.coefficients();
    for (auto& v : c) v /= scale;
    return UniPoly(std::move(c), q.variable());
  };
  chain_.push_back(normalized(p));
  if (p.degree() < 1) return;
  chain_.push_back(normalized(p.derivative()));
  while (chain_.back().degree() > 0) {
    UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(normalized(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / lead));
  return m + 1;
}

namespace {

// Isolates the roots of a squarefree polynomial of degree >= 2.
void isolate_squarefree(const UniPoly& f, int multiplicity, std::vector<RootInterval>& out) {
  const SturmSequence sturm(f);
  const Rational bound = cauchy_bound(f);

  struct Job {
    Rational a, b;
    int va, vb;
  };
  std::vector<Job> stack{{-bound, bound, sturm.variations(-bound), sturm.variations(bound)}};
  std::vector<RootInterval> found;

  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    const int n = job.va - job.vb;
    if (n <= 0) continue;
    if (n == 1) {
      // Exactly one root in (a, b].
      if (f.sign_at(job.b) == 0) {
        found.push_back({job.b, job.b, multiplicity});
        continue;
      }
      Rational a = job.a;
      Rational b = job.b;
      while (f.sign_at(a) == 0) {
        const Rational m = (a + b) / 2;
        if (f.sign_at(m) == 0) {
          a = b = m;
          break;
        }
        if (sturm.count(m, b) == 1)
          a = m;
        else
          b = m;
      }
      found.push_back({a, b, multiplicity});
      continue;
    }
    const Rational m = (job.a + job.b) / 2;
    const int vm = sturm.variations(m);
    stack.push_back({m, job.b, vm, job.vb});
    stack.push_back({job.a, m, job.va, vm});
  }
  out.insert(out.end(), found.begin(), found.end());
}

RootInterval bisect_once(const UniPoly& f, RootInterval iv) {
  if (iv.is_exact()) return iv;
  const Rational m = iv.midpoint();
  const int sm = f.sign_at(m);
  if (sm == 0) return {m, m, iv.multiplicity};
  if (f.sign_at(iv.lo) * sm < 0)
    iv.hi = m;
  else
    iv.lo = m;
  return iv;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw PolyError("root isolation of the zero polynomial");
  struct Tagged {
    RootInterval iv;
    std::size_t factor;
  };
  const auto factors = squarefree_decompose(p);
  std::vector<Tagged> all;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& [f, m] = factors[k];
    std::vector<RootInterval> ivs;
    if (f.degree() == 1) {
      const Rational r = -f.coeff(0) / f.coeff(1);
      ivs.push_back({r, r, m});
    } else {
      isolate_squarefree(f, m, ivs);
    }
    for (auto& iv : ivs) all.push_back({iv, k});
  }

  // Roots of different factors are distinct; shrink until pairwise disjoint.
  auto by_lo = [](const Tagged& a, const Tagged& b) {
    if (a.iv.lo != b.iv.lo) return a.iv.lo < b.iv.lo;
    return a.iv.hi < b.iv.hi;
  };
  for (;;) {
    std::sort(all.begin(), all.end(), by_lo);
    bool changed = false;
    for (std::size_t k = 0; k + 1 < all.size(); ++k) {
      auto& a = all[k];
      auto& b = all[k + 1];
      if (a.iv.hi < b.iv.lo) continue;
      if (!a.iv.is_exact()) a.iv = bisect_once(factors[a.factor].factor, a.iv);
      if (!b.iv.is_exact()) b.iv = bisect_once(factors[b.factor].factor, b.iv);
      changed = true;
    }
    if (!changed) break;
  }

  std::vector<RootInterval> out;
  out.reserve(all.size());
  for (auto& t : all) out.push_back(t.iv);
  return out;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw PolyError("empty root search interval");
  const UniPoly sqf = squarefree_part(p);
  std::vector<RootInterval> out;
  for (RootInterval iv : isolate_real_roots(p)) {
    for (;;) {
      if (iv.hi < lo || iv.lo > hi) break;
      if (iv.lo >= lo && iv.hi <= hi) {
        out.push_back(iv);
        break;
      }
      // Straddles a boundary: the boundary itself may be the root.
      if (iv.lo <= lo && lo <= iv.hi && sqf.sign_at(lo) == 0) {
        out.push_back({lo, lo, iv.multiplicity});
        break;
      }
      if (iv.lo <= hi && hi <= iv.hi && sqf.sign_at(hi) == 0) {
        out.push_back({hi, hi, iv.multiplicity});
        break;
      }
      iv = bisect_once(sqf, iv);
    }
  }
  return out;
}

RootInterval refine_interval(const UniPoly& sqfree, RootInterval iv, const Rational& width) {
  while (!iv.is_exact() && iv.hi - iv.lo > width) iv = bisect_once(sqfree, iv);
  return iv;
}

double refine_root(const UniPoly& p, const RootInterval& iv, double tol) {
  if (!(tol > 0)) throw PolyError("refinement tolerance must be positive");
  if (iv.is_exact()) return to_double(iv.lo);
  const UniPoly sqf = squarefree_part(p);
  if (sqf.sign_at(iv.lo) * sqf.sign_at(iv.hi) >= 0)
    throw PolyError("interval does not bracket a sign change of the squarefree part");
  const RootInterval r = refine_interval(sqf, iv, from_double(tol));
  return to_double(r.midpoint());
}

int sign_at_root(const UniPoly& g, const UniPoly& f, RootInterval iv) {
  if (iv.is_exact()) {
    const int s = g.sign_at(iv.lo);
    if (s == 0) throw PolyError("sign_at_root: g vanishes at the root");
    return s;
  }
  const UniPoly gs = squarefree_part(g);
  if (gs.degree() <= 0) return sgn(g.leading());
  const SturmSequence sturm(gs);
  for (int guard = 0; guard < 4000; ++guard) {
    if (!iv.is_exact() && gs.sign_at(iv.lo) != 0 && sturm.count(iv.lo, iv.hi) == 0) return g.sign_at(iv.lo);
    if (iv.is_exact()) {
      const int s = g.sign_at(iv.lo);
      if (s == 0) throw PolyError("sign_at_root: g vanishes at the root");
      return s;
    }
    iv = bisect_once(f, iv);
  }
  throw PolyError("sign_at_root: g vanishes at the root");
}

}  // namespace hamcurve
