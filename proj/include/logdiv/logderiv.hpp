#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logdiv/derivation.hpp"
#include "logdiv/groebner.hpp"
#include "logdiv/poly_matrix.hpp"

namespace logdiv {

/// Validated free basis of the logarithmic derivation module of f: every
/// basis element satisfies basis[i](f) = cofactors[i] * f, and the Saito
/// matrix determinant equals saito_unit * f with saito_unit(0) != 0.
struct LogBasis {
  Poly f;
  std::vector<Derivation> basis;
  std::vector<Poly> cofactors;
  Poly saito_unit;

  const VarContext& context() const { return f.context(); }
  std::size_t dimension() const { return f.context().size(); }
};

/// Saito matrix A (rows = basis coefficient vectors) and the extended matrix
/// (A | -cofactors).
inline std::pair<PolyMatrix, PolyMatrix> saito_matrices(const LogBasis& L) {
  const std::size_t n = L.dimension();
  PolyMatrix A(L.context(), n, n);
  PolyMatrix At(L.context(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      A.at(i, j) = L.basis[i].coeff(j);
      At.at(i, j) = L.basis[i].coeff(j);
    }
    At.at(i, n) = -L.cofactors[i];
  }
  return {std::move(A), std::move(At)};
}

/// Validates a candidate basis: each derivation logarithmic for f, and
/// det(A) = u*f with u not vanishing at the origin.
inline LogBasis verify_free_basis(const Poly& f, const std::vector<Derivation>& ds) {
  const VarContext& ctx = f.context();
  const std::size_t n = ctx.size();
  if (f.is_zero()) raise(errc::division_by_zero, "free basis for the zero polynomial");
  if (ds.size() != n)
    raise(errc::dimension_mismatch,
          "expected " + std::to_string(n) + " derivations, got " + std::to_string(ds.size()));

  std::vector<Poly> cofactors;
  cofactors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ds[i].context() != ctx) raise(errc::context_mismatch, "basis derivation context");
    auto alpha = is_logarithmic(f, ds[i]);
    if (!alpha)
      raise(errc::not_logarithmic, "derivation " + std::to_string(i) + " is not logarithmic for f");
    cofactors.push_back(std::move(*alpha));
  }

  PolyMatrix A(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A.at(i, j) = ds[i].coeff(j);
  Poly det = det_poly_matrix(A);
  Poly unit = Poly::zero(ctx);
  try {
    unit = exact_divide(det, f);
  } catch (const Error& e) {
    if (e.code() == errc::not_divisible)
      raise(errc::determinant_not_unit_multiple, "det(A) is not a multiple of f");
    throw;
  }
  if (unit.constant_term().is_zero())
    raise(errc::determinant_not_unit_multiple, "det(A)/f vanishes at the origin");

  return LogBasis{f, ds, std::move(cofactors), std::move(unit)};
}

/// Fitting-ideal chains of the Saito matrices: I[k-1] holds the order-k
/// minors of A, Itilde[k-1] those of the extended matrix; dims[i] is the
/// Krull dimension of V(I_{i+1}) (the rank stratum D_i), -1 for the empty
/// variety.
struct FittingChain {
  std::vector<Ideal> I;
  std::vector<Ideal> Itilde;
  std::vector<int> dims;
  std::vector<int> dims_tilde;

  const VarContext& context() const { return I.front().context(); }
  std::size_t dimension() const { return I.size(); }
};

inline FittingChain fitting_chain(const LogBasis& L) {
  const std::size_t n = L.dimension();
  auto [A, At] = saito_matrices(L);
  FittingChain chain;
  for (std::size_t k = 1; k <= n; ++k) {
    chain.I.emplace_back(L.context(), order_minors(A, k));
    chain.Itilde.emplace_back(L.context(), order_minors(At, k));
  }
  for (std::size_t k = 0; k < n; ++k) {
    chain.dims.push_back(krull_dimension(chain.I[k]));
    chain.dims_tilde.push_back(krull_dimension(chain.Itilde[k]));
  }
  return chain;
}

inline std::size_t saito_rank_at(const LogBasis& L, const std::vector<Rational>& p) {
  auto [A, At] = saito_matrices(L);
  return A.evaluate(p).rank();
}

/// A divisor is a product near p exactly when some logarithmic derivation
/// does not vanish there, i.e. rank A(p) >= 1.
inline bool is_product_at_point(const LogBasis& L, const std::vector<Rational>& p) {
  if (!L.f.evaluate(p).is_zero())
    raise(errc::point_not_on_divisor, "f(p) != 0");
  return saito_rank_at(L, p) >= 1;
}

/// Solves d = sum g_i * basis[i] by Cramer's rule over the fraction field and
/// decides whether every g_i lies in the local ring at the origin (reduced
/// denominator not vanishing at 0).
inline bool spans_derivation(const LogBasis& L, const Derivation& d) {
  if (d.context() != L.context()) raise(errc::context_mismatch, "span test across contexts");
  const std::size_t n = L.dimension();
  auto [A, At] = saito_matrices(L);
  Poly det = det_poly_matrix(A);  // = saito_unit * f, non-zero
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix Ai = A;
    for (std::size_t j = 0; j < n; ++j) Ai.at(i, j) = d.coeff(j);
    Poly num = det_poly_matrix(Ai);
    if (num.is_zero()) continue;  // g_i = 0
    Poly g = poly_gcd(num, det);
    Poly den = exact_divide(det, g);
    if (den.constant_term().is_zero()) return false;
  }
  return true;
}

/// Computes a free basis of the logarithmic derivations of f from the
/// syzygies of (df/dx_1, ..., df/dx_n, -f): the first n coordinates of each
/// relation are a candidate derivation, the last its cofactor. Candidate
/// n-subsets are searched smallest total degree first until one passes
/// Saito's criterion.
inline LogBasis compute_log_basis(const Poly& f, std::size_t subset_budget = 500) {
  const VarContext& ctx = f.context();
  const std::size_t n = ctx.size();
  if (f.is_zero()) raise(errc::division_by_zero, "log basis of the zero polynomial");
  if (!is_squarefree(f)) raise(errc::not_reduced, "f has a repeated factor");

  std::vector<Poly> gens;
  gens.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(f.partial_derivative(i));
  gens.push_back(-f);

  std::vector<Derivation> candidates;
  for (const SyzygyVector& s : syzygies(ctx, gens)) {
    std::vector<Poly> coeffs(s.coords.begin(), s.coords.begin() + static_cast<std::ptrdiff_t>(n));
    Derivation d(ctx, std::move(coeffs));
    if (d.is_zero()) continue;
    bool dup = false;
    for (const Derivation& seen : candidates)
      if (seen == d) dup = true;
    if (!dup) candidates.push_back(std::move(d));
  }
  if (candidates.size() < n)
    raise(errc::no_free_basis_found,
          "only " + std::to_string(candidates.size()) + " independent candidate derivations");

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].max_coeff_degree() < candidates[b].max_coeff_degree();
  });

  // Degree-lexicographic subset enumeration: sum of candidate degrees first,
  // then lexicographic position.
  std::vector<std::vector<std::size_t>> combos;
  {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (combos.size() >= 200000) return;
      if (cur.size() == n) {
        combos.push_back(cur);
        return;
      }
      for (std::size_t i = start; i + (n - cur.size()) <= order.size(); ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::stable_sort(combos.begin(), combos.end(), [&](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (std::size_t i : a) da += candidates[order[i]].max_coeff_degree();
    for (std::size_t i : b) db += candidates[order[i]].max_coeff_degree();
    return da < db;
  });

  std::size_t tried = 0;
  for (const auto& combo : combos) {
    if (tried >= subset_budget) break;
    ++tried;
    std::vector<Derivation> ds;
    ds.reserve(n);
    for (std::size_t i : combo) ds.push_back(candidates[order[i]]);
    try {
      return verify_free_basis(f, ds);
    } catch (const Error& e) {
      if (e.code() == errc::determinant_not_unit_multiple || e.code() == errc::not_logarithmic)
        continue;
      throw;
    }
  }
  raise(errc::no_free_basis_found,
        "no candidate subset passed Saito's criterion after " + std::to_string(tried) + " tries");
}

/// True iff every basis coefficient is homogeneous linear. In that case f is
/// homogeneous of degree n and the Euler field lies in the module; both facts
/// are asserted.
inline bool is_linear_free(const LogBasis& L) {
  const std::size_t n = L.dimension();
  for (const Derivation& d : L.basis)
    for (const Poly& c : d.coeffs()) {
      if (c.is_zero()) continue;
      if (!c.is_homogeneous() || c.degree() != std::optional<int>(1)) return false;
    }
  if (!L.f.is_homogeneous() || L.f.degree() != std::optional<int>(static_cast<int>(n)))
    raise(errc::internal_error, "linear basis with f not homogeneous of degree n");
  if (!spans_derivation(L, Derivation::euler(L.context())))
    raise(errc::internal_error, "linear basis without the Euler field in its span");
  return true;
}

}  // namespace logdiv
