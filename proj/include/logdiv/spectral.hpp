#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logdiv/derivation.hpp"
#include "logdiv/poly_matrix.hpp"
#include "logdiv/rat_matrix.hpp"

namespace logdiv {

namespace spectral_detail {

// Dense univariate rational polynomial, coeffs[i] the coefficient of x^i,
// trailing zeros stripped.
using UniPoly = std::vector<Rational>;

inline void strip(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  strip(d);
  return d;
}

inline UniPoly monic(UniPoly p) {
  strip(p);
  if (p.empty()) return p;
  Rational inv = Rational(1) / p.back();
  for (Rational& c : p) c *= inv;
  return p;
}

// Remainder of a modulo b (b non-zero).
inline UniPoly rem(UniPoly a, const UniPoly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    strip(a);
  }
  return a;
}

inline UniPoly gcd_monic(UniPoly a, UniPoly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

// Exact quotient a / b; the remainder must vanish.
inline UniPoly div_exact(UniPoly a, const UniPoly& b) {
  strip(a);
  if (b.empty()) raise(errc::division_by_zero, "univariate division by zero");
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    strip(a);
  }
  if (!a.empty()) raise(errc::internal_error, "univariate division left a remainder");
  strip(q);
  return q;
}

inline RatMatrix eval_matrix(const UniPoly& p, const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += p[i];
  }
  return acc;
}

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence.
inline UniPoly charpoly(const RatMatrix& m) {
  m.require_square();
  const std::size_t n = m.rows();
  UniPoly chi(n + 1, Rational(0));
  chi[n] = Rational(1);
  RatMatrix N = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix MN = m * N;
    Rational a = -(MN.trace() / Rational(static_cast<long>(k)));
    chi[n - k] = a;
    N = MN;
    for (std::size_t d = 0; d < n; ++d) N.at(d, d) += a;
  }
  return chi;
}

}  // namespace spectral_detail

/// Matrix of the linear part: entry (i, j) is the coefficient of x_i in the
/// j-th coefficient of d, so the degree-zero homogeneous component of d is
/// sum_{i,j} A[i][j] x_i d/dx_j.
inline RatMatrix linear_part(const Derivation& d) {
  const std::size_t n = d.context().size();
  RatMatrix A(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const Term& t : d.coeff(j).terms())
      if (t.mono.degree() == 1)
        for (std::size_t i = 0; i < n; ++i)
          if (t.mono[i] == 1) A.at(i, j) = t.coeff;
  return A;
}

inline Rational trace_of(const Derivation& d) { return linear_part(d).trace(); }

/// Topological nilpotency of a singular derivation: its linear part is a
/// nilpotent matrix.
inline bool is_top_nilpotent(const Derivation& d) {
  if (!d.is_singular()) raise(errc::not_singular, "derivation has a constant part");
  const std::size_t n = d.context().size();
  return linear_part(d).pow(n).is_zero();
}

/// Additive Jordan-Chevalley decomposition of a rational matrix: S + N with
/// S semisimple, N nilpotent, SN = NS.
struct ChevalleyPair {
  RatMatrix S;
  RatMatrix N;
};

/// Newton iteration toward the squarefree part p of the characteristic
/// polynomial: A <- A - p(A) p'(A)^{-1}. Converges in at most
/// ceil(log2 n) + 1 steps; p'(A) stays invertible because p is squarefree
/// and p(A) nilpotent.
inline ChevalleyPair chevalley(const RatMatrix& m) {
  m.require_square();
  using namespace spectral_detail;
  const std::size_t n = m.rows();
  UniPoly chi = charpoly(m);
  UniPoly p = div_exact(chi, gcd_monic(chi, derivative(chi)));
  UniPoly dp = derivative(p);

  std::size_t limit = 1;
  while ((std::size_t{1} << limit) < n) ++limit;  // ceil(log2 n) for n >= 2
  limit += 1;

  RatMatrix A = m;
  for (std::size_t it = 0; it <= limit; ++it) {
    RatMatrix pa = eval_matrix(p, A);
    if (pa.is_zero()) return {A, m - A};
    if (it == limit) break;
    A = A - pa * eval_matrix(dp, A).inverse();
  }
  raise(errc::internal_error, "Jordan-Chevalley iteration did not terminate");
}

/// Splits f into sigma-homogeneous components by the weighted degree of each
/// monomial, sigma = sum w_i x_i d/dx_i. Components sum back to f.
inline std::map<Rational, Poly> sigma_decompose(const Poly& f, const std::vector<Rational>& w) {
  if (w.size() != f.context().size()) raise(errc::dimension_mismatch, "weight count");
  std::map<Rational, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) buckets[t.mono.weighted_degree(w)].push_back(t);
  std::map<Rational, Poly> out;
  for (auto& [deg, terms] : buckets) out.emplace(deg, Poly::from_terms(f.context(), terms));
  return out;
}

/// The scalar c with [sigma, d] = c * d for sigma = sum w_i x_i d/dx_i, when
/// one exists.
inline std::optional<Rational> sigma_degree(const Derivation& d, const std::vector<Rational>& w) {
  if (d.is_zero()) raise(errc::internal_error, "sigma-degree of the zero derivation");
  Derivation sigma = Derivation::diagonal(d.context(), w);
  Derivation b = lie_bracket(sigma, d);
  Rational c(0);
  for (std::size_t j = 0; j < d.coeffs().size(); ++j) {
    if (d.coeff(j).is_zero()) continue;
    const Term& lt = d.coeff(j).leading_term();
    c = b.coeff(j).coefficient_of(lt.mono) / lt.coeff;
    break;
  }
  Derivation scaled = c * d;
  if (b == scaled) return c;
  return std::nullopt;
}

/// Whether the linear span of the given matrices contains a non-nilpotent
/// element. Over characteristic zero a matrix is nilpotent iff all power
/// traces vanish, so the generic combination M(t) = sum t_k M_k decides the
/// whole span at once: the span is all-nilpotent iff tr(M(t)^k) = 0 for
/// k = 1..n identically in t.
inline bool span_has_non_nilpotent(const std::vector<RatMatrix>& ms) {
  if (ms.empty()) return false;
  const std::size_t n = ms[0].rows();
  for (const RatMatrix& m : ms) {
    m.require_square();
    if (m.rows() != n) raise(errc::size_mismatch, "span matrices of different sizes");
  }
  std::vector<std::string> names;
  names.reserve(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) names.push_back("t" + std::to_string(k + 1));
  VarContext ctx(std::move(names));

  PolyMatrix M(ctx, n, n);
  for (std::size_t k = 0; k < ms.size(); ++k) {
    Poly tk = Poly::variable(ctx, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!ms[k].at(i, j).is_zero()) M.at(i, j) = M.at(i, j) + tk * ms[k].at(i, j);
  }

  PolyMatrix P = M;
  for (std::size_t k = 1; k <= n; ++k) {
    Poly tr = Poly::zero(ctx);
    for (std::size_t i = 0; i < n; ++i) tr = tr + P.at(i, i);
    if (!tr.is_zero()) return true;
    if (k == n) break;
    PolyMatrix Q(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Poly acc = Poly::zero(ctx);
        for (std::size_t l = 0; l < n; ++l)
          if (!P.at(i, l).is_zero() && !M.at(l, j).is_zero()) acc = acc + P.at(i, l) * M.at(l, j);
        Q.at(i, j) = acc;
      }
    P = Q;
  }
  return false;
}

}  // namespace logdiv
