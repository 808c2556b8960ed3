#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logdiv/logderiv.hpp"
#include "logdiv/spectral.hpp"

namespace logdiv {

/// Pointwise strong Euler-homogeneity via the rank criterion
/// rank Atilde(p) = rank A(p) + 1.
struct SehPointResult {
  bool seh;
  std::size_t rank_A;
  std::size_t rank_Atilde;
};

inline SehPointResult seh_at_point(const LogBasis& L, const std::vector<Rational>& p) {
  if (!L.f.evaluate(p).is_zero()) raise(errc::point_not_on_divisor, "f(p) != 0");
  auto [A, At] = saito_matrices(L);
  std::size_t ra = A.evaluate(p).rank();
  std::size_t rt = At.evaluate(p).rank();
  return {rt == ra + 1, ra, rt};
}

/// Strata-level strong Euler-homogeneity from the Fitting chain: on the
/// deepest stratum D_0 it holds iff Itilde_1 is not contained in the maximal
/// ideal; off D_0 iff sqrt(Itilde_{i+1}) = sqrt(I_i) for i = 1..n-2.
/// germ_caveat marks inhomogeneous data, where the affine radical checks are
/// only conservative for the germ statement.
struct SehClassification {
  bool seh_on_D0;
  bool seh_off_D0;
  bool seh_everywhere;
  std::vector<std::pair<int, bool>> per_level_equalities;  // i = 1..n-2
  bool germ_caveat;
};

inline SehClassification seh_classification(const FittingChain& C) {
  const std::size_t n = C.dimension();
  if (n < 2) raise(errc::dimension_mismatch, "classification needs n >= 2");
  SehClassification out{};
  out.seh_on_D0 = !contained_in_maximal(C.Itilde[0]);
  out.seh_off_D0 = true;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    bool eq = radical_equal(C.Itilde[i], C.I[i - 1]);
    out.per_level_equalities.emplace_back(static_cast<int>(i), eq);
    out.seh_off_D0 = out.seh_off_D0 && eq;
  }
  out.seh_everywhere = out.seh_on_D0 && out.seh_off_D0;
  out.germ_caveat = false;
  auto inhomogeneous = [](const Ideal& I) {
    for (const Poly& g : I.generators())
      if (!g.is_homogeneous()) return true;
    return false;
  };
  for (const Ideal& I : C.I) out.germ_caveat = out.germ_caveat || inhomogeneous(I);
  for (const Ideal& I : C.Itilde) out.germ_caveat = out.germ_caveat || inhomogeneous(I);
  return out;
}

/// Koszul / weak Koszul flags from the stratum dimensions: dim D_i <= i and
/// dim Dtilde_i <= i for i = 0..n-3, vacuously true when n <= 2.
struct KoszulFlags {
  bool koszul;
  bool weakly_koszul;
};

inline KoszulFlags koszul_check(const FittingChain& C) {
  const std::size_t n = C.dimension();
  KoszulFlags out{true, true};
  for (std::size_t i = 0; i + 3 <= n; ++i) {
    if (C.dims[i] > static_cast<int>(i)) out.koszul = false;
    if (C.dims_tilde[i] > static_cast<int>(i)) out.weakly_koszul = false;
  }
  return out;
}

enum class ColonConsistency { consistent, inconsistent, precondition_not_met };

inline const char* to_string(ColonConsistency c) {
  switch (c) {
    case ColonConsistency::consistent: return "CONSISTENT";
    case ColonConsistency::inconsistent: return "INCONSISTENT";
    case ColonConsistency::precondition_not_met: return "PRECONDITION_NOT_MET";
  }
  return "?";
}

/// When strong Euler-homogeneity holds outside D_0, the cofactor ideal
/// Itilde_1 and the colon ideal (df : f) have equal radicals; tested only
/// when the per-level equalities certify that precondition.
inline ColonConsistency colon_consistency(const LogBasis& L, const FittingChain& C) {
  const std::size_t n = C.dimension();
  for (std::size_t i = 1; i + 2 <= n; ++i)
    if (!radical_equal(C.Itilde[i], C.I[i - 1])) return ColonConsistency::precondition_not_met;
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(L.f.partial_derivative(i));
  Ideal jac(L.context(), std::move(partials));
  Ideal rhs = colon(jac, L.f);
  return radical_equal(C.Itilde[0], rhs) ? ColonConsistency::consistent
                                         : ColonConsistency::inconsistent;
}

enum class Obstruction { obstructed, not_obstructed, not_applicable };

inline const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::obstructed: return "OBSTRUCTED";
    case Obstruction::not_obstructed: return "NOT_OBSTRUCTED";
    case Obstruction::not_applicable: return "NOT_APPLICABLE";
  }
  return "?";
}

/// LCT forces a singular logarithmic derivation with non-zero trace. When the
/// divisor is not a product at the origin every logarithmic derivation is a
/// module combination of the basis, so all traces vanish iff every basis
/// linear part is traceless.
inline Obstruction trace_obstruction(const LogBasis& L) {
  std::vector<Rational> origin(L.dimension(), Rational(0));
  if (saito_rank_at(L, origin) >= 1) return Obstruction::not_applicable;
  for (const Derivation& d : L.basis)
    if (!trace_of(d).is_zero()) return Obstruction::not_obstructed;
  return Obstruction::obstructed;
}

/// Every singular logarithmic derivation is topologically nilpotent iff the
/// span of the basis linear parts is all-nilpotent (the linear part of
/// sum g_i delta_i is sum g_i(0) L_i when the basis is singular).
inline Obstruction nilpotent_span_obstruction(const LogBasis& L) {
  std::vector<Rational> origin(L.dimension(), Rational(0));
  if (saito_rank_at(L, origin) >= 1) return Obstruction::not_applicable;
  std::vector<RatMatrix> parts;
  parts.reserve(L.basis.size());
  for (const Derivation& d : L.basis) parts.push_back(linear_part(d));
  return span_has_non_nilpotent(parts) ? Obstruction::not_obstructed : Obstruction::obstructed;
}

/// Outcome of the positive-weight search: weights with f quasihomogeneous of
/// the given degree, a proof of absence, or undecided (high-dimensional
/// weight cone with no positive candidate found).
struct Quasihomogeneity {
  enum class Status { found, absent, undecided };
  Status status = Status::absent;
  std::vector<Rational> weights;  // integral after rescaling
  Rational degree;
};

inline const char* to_string(Quasihomogeneity::Status s) {
  switch (s) {
    case Quasihomogeneity::Status::found: return "QUASIHOMOGENEOUS";
    case Quasihomogeneity::Status::absent: return "NOT_QUASIHOMOGENEOUS";
    case Quasihomogeneity::Status::undecided: return "UNDECIDED";
  }
  return "?";
}

namespace criteria_detail {

// One inequality sum coeffs[v] * s_v + eps_coeff * eps >= rhs.
struct FmRow {
  std::vector<Rational> coeffs;
  Rational eps_coeff;
  Rational rhs;
};

// Fourier-Motzkin elimination of the s variables, keeping eps. Every derived
// row has eps_coeff <= 0, so the surviving rows are upper bounds on eps plus
// constant feasibility rows.
struct FmResult {
  bool feasible = false;
  Rational eps_max;                       // capped at 1
  std::vector<Rational> s;                // a witness, valid when feasible
};

inline FmResult fm_solve(std::vector<FmRow> rows, std::size_t nvars) {
  std::vector<std::vector<FmRow>> stages;
  for (std::size_t v = 0; v < nvars; ++v) {
    stages.push_back(rows);
    std::vector<FmRow> next;
    std::vector<const FmRow*> lower, upper;
    for (const FmRow& r : rows) {
      int s = r.coeffs[v].sign();
      if (s > 0) lower.push_back(&r);
      else if (s < 0) upper.push_back(&r);
      else next.push_back(r);
    }
    for (const FmRow* lo : lower)
      for (const FmRow* up : upper) {
        // (-up.c_v) * lo + (lo.c_v) * up cancels s_v; both multipliers positive.
        Rational a = -up->coeffs[v], b = lo->coeffs[v];
        FmRow r;
        r.coeffs.resize(nvars, Rational(0));
        for (std::size_t k = 0; k < nvars; ++k) r.coeffs[k] = a * lo->coeffs[k] + b * up->coeffs[k];
        r.eps_coeff = a * lo->eps_coeff + b * up->eps_coeff;
        r.rhs = a * lo->rhs + b * up->rhs;
        next.push_back(std::move(r));
      }
    rows = std::move(next);
  }

  FmResult res;
  Rational eps_max(1);
  for (const FmRow& r : rows) {
    if (r.eps_coeff.is_zero()) {
      if (Rational(0) < r.rhs) return res;  // infeasible for every eps
      continue;
    }
    // eps_coeff < 0: eps <= rhs / eps_coeff.
    Rational bound = r.rhs / r.eps_coeff;
    if (bound < eps_max) eps_max = bound;
  }
  res.feasible = true;
  res.eps_max = eps_max;

  // Back-substitution at eps = eps_max, latest eliminated variable first.
  res.s.assign(nvars, Rational(0));
  for (std::size_t v = nvars; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const FmRow& r : stages[v]) {
      int sign = r.coeffs[v].sign();
      if (sign == 0) continue;
      Rational rest = r.rhs - r.eps_coeff * res.eps_max;
      for (std::size_t k = v + 1; k < nvars; ++k) rest -= r.coeffs[k] * res.s[k];
      Rational bound = rest / r.coeffs[v];
      if (sign > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) res.s[v] = (*lo + *hi) / Rational(2);
    else if (lo) res.s[v] = *lo;
    else if (hi) res.s[v] = *hi;
  }
  return res;
}

}  // namespace criteria_detail

/// Searches for strictly positive rational weights w with beta . w constant
/// over the exponent vectors beta of f, then rescales to integral weights and
/// degree. The positivity search maximizes the minimum weight exactly.
inline Quasihomogeneity quasihomogeneous_check(const Poly& f) {
  if (f.is_zero() || f.is_constant())
    raise(errc::internal_error, "quasihomogeneity of a constant");
  const std::size_t n = f.context().size();

  std::vector<Monomial> exps;
  for (const Term& t : f.terms()) exps.push_back(t.mono);  // canonical form: already distinct

  // Solve B w = 1 exactly.
  RatMatrix aug(exps.size(), n + 1);
  for (std::size_t r = 0; r < exps.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = Rational(static_cast<long>(exps[r][c]));
    aug.at(r, n) = Rational(1);
  }
  Rref R = rref(std::move(aug));
  Quasihomogeneity out;
  for (std::size_t p : R.pivots)
    if (p == n) return out;  // inconsistent: not weighted-homogeneous at all

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : R.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t d = free_cols.size();

  std::vector<Rational> w0(n, Rational(0));
  for (std::size_t r = 0; r < R.pivots.size(); ++r) w0[R.pivots[r]] = R.m.at(r, n);
  // Nullspace basis: one vector per free column.
  std::vector<std::vector<Rational>> V(d, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 0; k < d; ++k) {
    V[k][free_cols[k]] = Rational(1);
    for (std::size_t r = 0; r < R.pivots.size(); ++r)
      V[k][R.pivots[r]] = -R.m.at(r, free_cols[k]);
  }

  // Feasibility of w0 + V s >= eps > 0 (componentwise), eps capped at 1.
  std::vector<criteria_detail::FmRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].coeffs.resize(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) rows[i].coeffs[k] = V[k][i];
    rows[i].eps_coeff = Rational(-1);
    rows[i].rhs = -w0[i];
  }
  criteria_detail::FmResult fm = criteria_detail::fm_solve(std::move(rows), d);

  bool positive = fm.feasible && Rational(0) < fm.eps_max;
  if (!positive) {
    out.status = (d >= 3) ? Quasihomogeneity::Status::undecided : Quasihomogeneity::Status::absent;
    return out;
  }

  std::vector<Rational> w = w0;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i) w[i] += fm.s[k] * V[k][i];

  // Rescale to coprime positive integers; the common weighted degree scales
  // from 1 by the same factor.
  mpz_class L(1);
  for (const Rational& x : w) {
    mpz_class den = x.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
    L = L / g * den;
  }
  mpz_class G(0);
  std::vector<mpz_class> ints;
  for (const Rational& x : w) {
    mpz_class v = x.numerator() * (L / x.denominator());
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (G == 0) G = 1;
  out.status = Quasihomogeneity::Status::found;
  for (mpz_class& v : ints) out.weights.push_back(Rational(mpz_class(v / G)));
  out.degree = Rational(mpz_class(L / G));
  return out;
}

enum class LctStatus { holds, fails, unknown };

inline const char* to_string(LctStatus s) {
  switch (s) {
    case LctStatus::holds: return "HOLDS";
    case LctStatus::fails: return "FAILS";
    case LctStatus::unknown: return "UNKNOWN";
  }
  return "?";
}

struct LctVerdict {
  LctStatus status = LctStatus::unknown;
  std::vector<std::string> reasons;    // stable rule ids F1..F5, H1
  std::vector<std::string> citations;  // governing statements
};

struct LctInputs {
  std::size_t n = 0;
  bool seh_everywhere = false;
  bool germ_caveat = false;
  bool seh_outside_origin_certified = false;  // per-level equalities + dim V(Itilde_1) <= 0
  std::optional<bool> seh_at_origin;
  KoszulFlags koszul{false, false};
  Obstruction trace = Obstruction::not_applicable;
  Obstruction nilpotent_span = Obstruction::not_applicable;
  bool linear_free = false;
};

inline std::string lct_citation(const std::string& rule) {
  if (rule == "F1")
    return "LCT requires a singular logarithmic derivation of non-zero trace; all basis "
           "linear parts are traceless";
  if (rule == "F2") return "a Koszul-free divisor satisfying LCT is strongly Euler-homogeneous";
  if (rule == "F3")
    return "a weakly Koszul-free divisor satisfying LCT is strongly Euler-homogeneous";
  if (rule == "F4") return "in ambient dimension at most 4, LCT implies strong Euler-homogeneity";
  if (rule == "F5")
    return "strong Euler-homogeneity outside the origin plus only topologically nilpotent "
           "singular derivations excludes strong Euler-homogeneity at 0, hence LCT";
  if (rule == "H1")
    return "a linear free divisor in ambient dimension at most 4 is locally quasihomogeneous "
           "and satisfies LCT";
  return rule;
}

/// Composite three-valued verdict. Rules F2/F3/F4 rest on the affine
/// seh_everywhere check; with germ_caveat set and no exact obstruction the
/// verdict is downgraded to UNKNOWN rather than over-claiming.
inline LctVerdict lct_verdict(const LctInputs& in) {
  std::vector<std::string> exact, caveated;
  if (in.trace == Obstruction::obstructed) exact.push_back("F1");
  if (in.koszul.koszul && !in.seh_everywhere) caveated.push_back("F2");
  if (in.koszul.weakly_koszul && !in.seh_everywhere) caveated.push_back("F3");
  if (in.n <= 4 && !in.seh_everywhere) caveated.push_back("F4");
  if (in.nilpotent_span == Obstruction::obstructed && in.seh_outside_origin_certified &&
      in.seh_at_origin.has_value() && !*in.seh_at_origin)
    exact.push_back("F5");

  LctVerdict v;
  auto add_all = [&](const std::vector<std::string>& rules) {
    for (const std::string& r : rules) {
      v.reasons.push_back(r);
      v.citations.push_back(r + ": " + lct_citation(r));
    }
  };

  if (!exact.empty()) {
    v.status = LctStatus::fails;
    std::vector<std::string> all;
    for (const std::string& r : {std::string("F1"), std::string("F2"), std::string("F3"),
                                 std::string("F4"), std::string("F5")}) {
      if (std::find(exact.begin(), exact.end(), r) != exact.end() ||
          std::find(caveated.begin(), caveated.end(), r) != caveated.end())
        all.push_back(r);
    }
    add_all(all);
    return v;
  }
  if (!caveated.empty()) {
    if (in.germ_caveat) {
      v.status = LctStatus::unknown;
      v.reasons.push_back("germ-caveat");
      v.citations.push_back(
          "germ-caveat: affine non-Euler-homogeneity on inhomogeneous input is not conclusive "
          "for the germ; obstruction downgraded");
      return v;
    }
    v.status = LctStatus::fails;
    add_all(caveated);
    return v;
  }
  if (in.linear_free && in.n <= 4) {
    v.status = LctStatus::holds;
    add_all({std::string("H1")});
    return v;
  }
  v.status = LctStatus::unknown;
  v.reasons.push_back("no-obstruction-found");
  v.citations.push_back("no-obstruction-found: no failing rule applies and no affirmation rule applies");
  return v;
}

/// Lower bound for the maximal number of commuting semisimple derivations in
/// a generating set: largest subset of basis linear parts that are semisimple
/// and pairwise commute.
inline int commuting_semisimple_lower_bound(const LogBasis& L) {
  std::vector<RatMatrix> parts;
  std::vector<bool> semisimple;
  for (const Derivation& d : L.basis) {
    RatMatrix m = linear_part(d);
    parts.push_back(m);
    if (m.is_zero()) {
      semisimple.push_back(false);  // the zero part contributes nothing
      continue;
    }
    semisimple.push_back(chevalley(m).N.is_zero());
  }
  const std::size_t k = parts.size();
  int best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
    std::vector<std::size_t> idx;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      if ((s >> i) & 1u) {
        if (!semisimple[i]) ok = false;
        idx.push_back(i);
      }
    if (!ok) continue;
    for (std::size_t a = 0; a < idx.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b)
        if (parts[idx[a]] * parts[idx[b]] != parts[idx[b]] * parts[idx[a]]) ok = false;
    if (ok) best = std::max(best, static_cast<int>(idx.size()));
  }
  return best;
}

}  // namespace logdiv
