#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "logdiv/budget.hpp"
#include "logdiv/poly.hpp"

namespace logdiv {

/// Exact relation among a fixed generator sequence g: sum coords[j]*g[j] == 0.
struct SyzygyVector {
  std::vector<Poly> coords;
};

namespace gb_detail {

// Working representation: terms sorted in strictly descending active order.
using OrdTerms = std::vector<Term>;

inline OrdTerms to_ord(const Poly& p, const MonomialOrder& ord) {
  OrdTerms t = p.terms();
  if (ord.kind != MonomialOrder::Kind::degrevlex)
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

inline Poly to_poly(const VarContext& ctx, const OrdTerms& t) { return Poly::from_terms(ctx, t); }

// a - c * x^m * b, all lists descending in ord.
inline OrdTerms sub_mul(const OrdTerms& a, const Rational& c, const Monomial& m, const OrdTerms& b,
                        const MonomialOrder& ord) {
  OrdTerms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) { out.push_back(a[i++]); continue; }
    Monomial bm = b[j].mono.times(m);
    if (i == a.size()) {
      out.push_back({std::move(bm), -(b[j].coeff * c)});
      ++j;
      continue;
    }
    int cmp = ord.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(b[j].coeff * c)});
      ++j;
    } else {
      Rational nc = a[i].coeff - b[j].coeff * c;
      if (!nc.is_zero()) out.push_back({a[i].mono, std::move(nc)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Elem {
  OrdTerms p;                 // non-empty while in the basis
  std::vector<Poly> coords;   // expression over the original generators (tracked mode)
};

inline void scale(Elem& e, const Rational& c) {
  for (Term& t : e.p) t.coeff *= c;
  for (Poly& q : e.coords) q = q * c;
}

inline void make_monic(Elem& e) {
  if (e.p.empty()) return;
  Rational lc = e.p.front().coeff;
  if (!lc.is_one()) scale(e, Rational(1) / lc);
}

// Full reduction of f (heads and tails) modulo the basis; coords, when given,
// are kept consistent with the invariant poly == sum coords[k] * gen[k].
inline OrdTerms reduce_full(OrdTerms f, std::vector<Poly>* coords, const std::vector<Elem>& basis,
                            const VarContext& ctx, const MonomialOrder& ord, Budget& budget) {
  OrdTerms done;
  std::size_t cursor = 0;  // terms before cursor are irreducible
  while (cursor < f.size()) {
    bool reduced = false;
    for (const Elem& g : basis) {
      if (g.p.empty()) continue;
      if (!g.p.front().mono.divides(f[cursor].mono)) continue;
      Monomial q = f[cursor].mono.quotient(g.p.front().mono);
      Rational c = f[cursor].coeff / g.p.front().coeff;
      OrdTerms rest(f.begin() + static_cast<std::ptrdiff_t>(cursor), f.end());
      rest = sub_mul(rest, c, q, g.p, ord);
      f.resize(cursor);
      f.insert(f.end(), rest.begin(), rest.end());
      if (coords) {
        Poly mult = Poly::from_term(ctx, q, c);
        for (std::size_t k = 0; k < coords->size(); ++k)
          if (!g.coords[k].is_zero()) (*coords)[k] = (*coords)[k] - mult * g.coords[k];
      }
      budget.step();
      reduced = true;
      break;
    }
    if (!reduced) ++cursor;
  }
  return f;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int deg;
};

struct BuchbergerResult {
  std::vector<Elem> basis;
  std::vector<SyzygyVector> syzygies;
};

// Buchberger's algorithm. Pair selection: minimal lcm degree, ties by pair
// index (normal strategy). In tracked mode every pair is processed and each
// zero reduction emits its accumulated coordinate vector, which by Schreyer's
// construction yields a generating set of the syzygy module of the seeds.
inline BuchbergerResult buchberger(const VarContext& ctx, const std::vector<Poly>& gens,
                                   const MonomialOrder& ord, Budget& budget, bool track) {
  BuchbergerResult res;
  std::vector<Elem>& basis = res.basis;
  const std::size_t m = gens.size();

  std::vector<Elem> seeds;
  for (std::size_t i = 0; i < m; ++i) {
    Elem e;
    e.p = to_ord(gens[i], ord);
    if (track) {
      e.coords.assign(m, Poly::zero(ctx));
      e.coords[i] = Poly::constant(ctx, Rational(1));
    }
    if (e.p.empty()) {
      if (track) res.syzygies.push_back({e.coords});  // a zero generator is its own relation
      continue;
    }
    seeds.push_back(std::move(e));
  }

  if (!track) {
    // Deterministic inter-reduction of the input set; large minor families
    // collapse to a few independent generators before pairing starts.
    std::stable_sort(seeds.begin(), seeds.end(), [&](const Elem& a, const Elem& b) {
      return ord.compare(a.p.front().mono, b.p.front().mono) < 0;
    });
    for (Elem& e : seeds) {
      OrdTerms r = reduce_full(std::move(e.p), nullptr, basis, ctx, ord, budget);
      if (r.empty()) continue;
      Elem ne;
      ne.p = std::move(r);
      make_monic(ne);
      basis.push_back(std::move(ne));
    }
  } else {
    for (Elem& e : seeds) basis.push_back(std::move(e));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].p.front().mono.lcm_with(basis[j].p.front().mono);
      int d = l.degree();
      pending.push_back({i, j, std::move(l), d});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair &a = pending[k], &b = pending[best];
      if (a.deg != b.deg ? a.deg < b.deg : (a.i != b.i ? a.i < b.i : a.j < b.j)) best = k;
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    const Monomial& lmi = basis[pr.i].p.front().mono;
    const Monomial& lmj = basis[pr.j].p.front().mono;
    if (!track) {
      if (lmi.coprime_with(lmj)) {  // product criterion: the S-polynomial reduces to zero
        done.insert({pr.i, pr.j});
        continue;
      }
      bool chain = false;  // chain criterion, certified by two already-processed pairs
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].p.front().mono.divides(pr.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chain = true;
      }
      if (chain) continue;
    }

    Elem sp;
    {
      const Elem &f = basis[pr.i], &g = basis[pr.j];
      Monomial qf = pr.lcm.quotient(lmi), qg = pr.lcm.quotient(lmj);
      Rational cf = Rational(1) / f.p.front().coeff;
      OrdTerms lhs = sub_mul(OrdTerms{}, -cf, qf, f.p, ord);  // cf * x^qf * f
      sp.p = sub_mul(lhs, Rational(1) / g.p.front().coeff, qg, g.p, ord);
      if (track) {
        sp.coords.assign(m, Poly::zero(ctx));
        Poly mf = Poly::from_term(ctx, qf, cf);
        Poly mg = Poly::from_term(ctx, qg, Rational(1) / g.p.front().coeff);
        for (std::size_t k = 0; k < m; ++k)
          sp.coords[k] = mf * f.coords[k] - mg * g.coords[k];
      }
    }
    sp.p = reduce_full(std::move(sp.p), track ? &sp.coords : nullptr, basis, ctx, ord, budget);
    done.insert({pr.i, pr.j});
    if (sp.p.empty()) {
      if (track) res.syzygies.push_back({std::move(sp.coords)});
      continue;
    }
    make_monic(sp);
    basis.push_back(std::move(sp));
    add_pairs_for(basis.size() - 1);
  }
  return res;
}

// Unique reduced basis: minimal, auto-reduced, monic, sorted descending by
// leading monomial.
inline std::vector<Poly> reduced_basis(const VarContext& ctx, std::vector<Elem> basis,
                                       const MonomialOrder& ord, Budget& budget) {
  std::stable_sort(basis.begin(), basis.end(), [&](const Elem& a, const Elem& b) {
    return ord.compare(a.p.front().mono, b.p.front().mono) < 0;
  });
  std::vector<Elem> minimal;
  for (Elem& e : basis) {
    bool redundant = false;
    for (const Elem& k : minimal)
      if (k.p.front().mono.divides(e.p.front().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(e));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Elem> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      OrdTerms r = reduce_full(minimal[i].p, nullptr, others, ctx, ord, budget);
      if (r != minimal[i].p) {
        if (r.empty()) raise(errc::internal_error, "minimal basis element reduced to zero");
        minimal[i].p = std::move(r);
        make_monic(minimal[i]);
        changed = true;
      }
    }
  }
  for (Elem& e : minimal) make_monic(e);
  std::stable_sort(minimal.begin(), minimal.end(), [&](const Elem& a, const Elem& b) {
    return ord.compare(a.p.front().mono, b.p.front().mono) > 0;
  });
  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (const Elem& e : minimal) out.push_back(to_poly(ctx, e.p));
  return out;
}

}  // namespace gb_detail

/// Reduced Groebner basis of the ideal generated by `gens`. The result is
/// unique for a fixed order; the zero ideal yields an empty basis.
inline std::vector<Poly> groebner_basis(const VarContext& ctx, const std::vector<Poly>& gens,
                                        const MonomialOrder& ord, Budget& budget) {
  auto res = gb_detail::buchberger(ctx, gens, ord, budget, /*track=*/false);
  if (res.basis.empty()) return {};
  return gb_detail::reduced_basis(ctx, std::move(res.basis), ord, budget);
}

/// Remainder of multivariate division of f by G with respect to ord.
inline Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
  const VarContext& ctx = f.context();
  for (const Poly& g : basis) f.check_same_context(g);
  std::vector<gb_detail::Elem> elems;
  for (const Poly& g : basis) {
    if (g.is_zero()) continue;
    gb_detail::Elem e;
    e.p = gb_detail::to_ord(g, ord);
    elems.push_back(std::move(e));
  }
  Budget budget;
  auto r = gb_detail::reduce_full(gb_detail::to_ord(f, ord), nullptr, elems, ctx, ord, budget);
  return gb_detail::to_poly(ctx, r);
}

/// Ideal of a polynomial ring: generator list plus cached reduced Groebner
/// bases per order. Immutable as a value; the cache fill is mutex-guarded.
class Ideal {
 public:
  Ideal(VarContext ctx, std::vector<Poly> gens)
      : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    if (gens.empty()) raise(errc::schema_error, "ideal needs at least one generator");
    for (const Poly& g : gens) {
      if (g.context() != ctx_) raise(errc::context_mismatch, "ideal generator context");
      if (!g.is_zero()) gens_.push_back(g);
    }
    if (gens_.empty()) gens_.push_back(Poly::zero(ctx_));  // the zero ideal
  }

  const VarContext& context() const { return ctx_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  const std::vector<Poly>& groebner_basis(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    auto key = std::make_pair(static_cast<int>(ord.kind), ord.block_size);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
    Budget budget;
    std::vector<Poly> gb =
        is_zero_ideal() ? std::vector<Poly>{} : logdiv::groebner_basis(ctx_, gens_, ord, budget);
    return cache_->by_order.emplace(key, std::move(gb)).first->second;
  }

  /// True iff the reduced basis contains a non-zero constant.
  bool is_unit_ideal() const {
    for (const Poly& g : groebner_basis())
      if (g.is_nonzero_constant()) return true;
    return false;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::size_t>, std::vector<Poly>> by_order;
  };
  VarContext ctx_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool ideal_membership(const Poly& f, const Ideal& I) {
  if (f.context() != I.context()) raise(errc::context_mismatch, "membership across contexts");
  if (f.is_zero()) return true;
  return normal_form(f, I.groebner_basis(), MonomialOrder::degrevlex()).is_zero();
}

/// f in sqrt(I), decided by the Rabinowitsch trick: 1 in I + (1 - w*f) in an
/// extended ring. Plain membership is checked first as a fast path.
inline bool radical_membership(const Poly& f, const Ideal& I) {
  if (f.context() != I.context()) raise(errc::context_mismatch, "membership across contexts");
  if (f.is_zero()) return true;
  if (ideal_membership(f, I)) return true;
  VarContext ext = I.context().appended(I.context().fresh_name("w"));
  std::vector<Poly> gens;
  for (const Poly& g : I.groebner_basis()) gens.push_back(g.appended_var(ext));
  Poly w = Poly::variable(ext, ext.size() - 1);
  gens.push_back(Poly::constant(ext, Rational(1)) - w * f.appended_var(ext));
  Budget budget;
  for (const Poly& g : groebner_basis(ext, gens, MonomialOrder::degrevlex(), budget))
    if (g.is_nonzero_constant()) return true;
  return false;
}

/// I ∩ k[x_{k+1},...,x_n] via the block elimination order; the returned
/// generators live in the same context but avoid the first k variables.
inline Ideal eliminate(const Ideal& I, std::size_t k) {
  const std::size_t n = I.context().size();
  if (k == 0 || k >= n) raise(errc::index_out_of_range, "eliminate count " + std::to_string(k));
  std::vector<Poly> kept;
  for (const Poly& g : I.groebner_basis(MonomialOrder::block(k))) {
    bool uses_front = false;
    for (const Term& t : g.terms())
      for (std::size_t i = 0; i < k && !uses_front; ++i)
        if (t.mono[i] > 0) uses_front = true;
    if (!uses_front) kept.push_back(g);
  }
  if (kept.empty()) kept.push_back(Poly::zero(I.context()));
  return Ideal(I.context(), std::move(kept));
}

/// I ∩ J via eliminating a fresh t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.context() != J.context()) raise(errc::context_mismatch, "intersecting across contexts");
  const VarContext& ctx = I.context();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(ctx, {Poly::zero(ctx)});
  VarContext ext = ctx.prepended(ctx.fresh_name("t"));
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, Rational(1)) - t;
  std::vector<Poly> gens;
  for (const Poly& g : I.generators()) gens.push_back(t * g.prepended_var(ext));
  for (const Poly& h : J.generators()) gens.push_back(one_minus_t * h.prepended_var(ext));
  Budget budget;
  std::vector<Poly> kept;
  for (const Poly& g : groebner_basis(ext, gens, MonomialOrder::block(1), budget)) {
    bool uses_t = false;
    for (const Term& term : g.terms())
      if (term.mono[0] > 0) uses_t = true;
    if (!uses_t) kept.push_back(g.dropped_front_var(ctx));
  }
  if (kept.empty()) kept.push_back(Poly::zero(ctx));
  return Ideal(ctx, std::move(kept));
}

/// Colon ideal I : f = { g | g*f in I }, as (I ∩ (f)) / f.
inline Ideal colon(const Ideal& I, const Poly& f) {
  if (f.context() != I.context()) raise(errc::context_mismatch, "colon across contexts");
  if (f.is_zero()) raise(errc::division_by_zero, "colon by the zero polynomial");
  if (I.is_zero_ideal()) return Ideal(I.context(), {Poly::zero(I.context())});
  Ideal K = intersect(I, Ideal(I.context(), {f}));
  std::vector<Poly> gens;
  for (const Poly& g : K.generators()) {
    if (g.is_zero()) continue;
    gens.push_back(exact_divide(g, f));
  }
  if (gens.empty()) gens.push_back(Poly::zero(I.context()));
  return Ideal(I.context(), std::move(gens));
}

/// Krull dimension of V(I): the largest variable set supporting no leading
/// monomial of the reduced degrevlex basis; -1 for the unit ideal.
inline int krull_dimension(const Ideal& I) {
  const std::size_t n = I.context().size();
  if (n > 31) raise(errc::internal_error, "dimension computation limited to 31 variables");
  const std::vector<Poly>& gb = I.groebner_basis();
  std::vector<Monomial> lms;
  for (const Poly& g : gb) {
    if (g.is_nonzero_constant()) return -1;
    if (!g.is_zero()) lms.push_back(g.leading_term().mono);
  }
  for (std::size_t size = n + 1; size-- > 0;) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      if (static_cast<std::size_t>(__builtin_popcount(s)) != size) continue;
      bool independent = true;
      for (const Monomial& m : lms)
        if (m.supported_in(s)) {
          independent = false;
          break;
        }
      if (independent) return static_cast<int>(size);
    }
  }
  return -1;  // unreachable: the empty set is independent unless 1 is in the ideal
}

/// True iff sqrt(I) == sqrt(J), tested on the reduced bases elementwise.
inline bool radical_equal(const Ideal& I, const Ideal& J) {
  if (I.context() != J.context()) raise(errc::context_mismatch, "radical comparison across contexts");
  for (const Poly& g : I.groebner_basis())
    if (!radical_membership(g, J)) return false;
  for (const Poly& h : J.groebner_basis())
    if (!radical_membership(h, I)) return false;
  return true;
}

/// True iff every generator vanishes at the origin, i.e. I is contained in
/// the maximal ideal of 0 (equivalently 0 in V(I)).
inline bool contained_in_maximal(const Ideal& I) {
  for (const Poly& g : I.generators())
    if (!g.constant_term().is_zero()) return false;
  return true;
}

/// Generating set of the module of relations among `gens`, via Buchberger
/// with tracked transformation coefficients (Schreyer's construction).
inline std::vector<SyzygyVector> syzygies(const VarContext& ctx, const std::vector<Poly>& gens) {
  if (gens.empty()) raise(errc::schema_error, "syzygies of an empty sequence");
  bool any_nonzero = false;
  for (const Poly& g : gens) {
    if (g.context() != ctx) raise(errc::context_mismatch, "syzygy generator context");
    if (!g.is_zero()) any_nonzero = true;
  }
  if (!any_nonzero) raise(errc::schema_error, "syzygies of the zero sequence");
  Budget budget;
  auto res = gb_detail::buchberger(ctx, gens, MonomialOrder::degrevlex(), budget, /*track=*/true);
  std::vector<SyzygyVector> out;
  for (SyzygyVector& s : res.syzygies) {
    bool zero = true;
    for (const Poly& c : s.coords)
      if (!c.is_zero()) zero = false;
    if (zero) continue;
    bool dup = false;
    for (const SyzygyVector& seen : out)
      if (seen.coords == s.coords) dup = true;
    if (!dup) out.push_back(std::move(s));
  }
  return out;
}

/// lcm of two polynomials as the generator of (a) ∩ (b), monic.
inline Poly poly_lcm(const Poly& a, const Poly& b) {
  a.check_same_context(b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.context());
  Ideal K = intersect(Ideal(a.context(), {a}), Ideal(a.context(), {b}));
  const std::vector<Poly>& gb = K.groebner_basis();
  if (gb.size() != 1)
    raise(errc::internal_error, "intersection of principal ideals is not principal");
  return gb[0];
}

/// gcd of two polynomials (monic), via gcd * lcm = a * b up to a constant.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  a.check_same_context(b);
  auto monic = [](const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_term().coeff);
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  Poly l = poly_lcm(a, b);
  return monic(exact_divide(a * b, l));
}

/// Squarefreeness over the rationals: gcd(f, all partial derivatives) is
/// constant. Characteristic 0, so this detects exactly the repeated factors.
inline bool is_squarefree(const Poly& f) {
  if (f.is_zero()) raise(errc::division_by_zero, "squarefreeness of the zero polynomial");
  if (f.is_constant()) return true;
  Poly g = f;
  for (std::size_t i = 0; i < f.context().size(); ++i) {
    Poly d = f.partial_derivative(i);
    if (d.is_zero()) continue;
    g = poly_gcd(g, d);
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

}  // namespace logdiv
