#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logdiv/poly.hpp"

namespace logdiv {

/// Polynomial vector field delta = sum coeffs[i] * d/dx_i.
class Derivation {
 public:
  Derivation(VarContext ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ctx_.size())
      raise(errc::dimension_mismatch, "derivation needs one coefficient per variable");
    for (const Poly& c : coeffs_)
      if (c.context() != ctx_) raise(errc::context_mismatch, "derivation coefficient context");
  }

  static Derivation zero(const VarContext& ctx) {
    return Derivation(ctx, std::vector<Poly>(ctx.size(), Poly::zero(ctx)));
  }

  static Derivation partial(const VarContext& ctx, std::size_t i) {
    Derivation d = zero(ctx);
    d.coeffs_[i] = Poly::constant(ctx, Rational(1));
    return d;
  }

  /// sum w_i * x_i * d/dx_i; the Euler field is diagonal with weights 1.
  static Derivation diagonal(const VarContext& ctx, const std::vector<Rational>& w) {
    if (w.size() != ctx.size()) raise(errc::dimension_mismatch, "diagonal weight count");
    std::vector<Poly> c;
    c.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) c.push_back(Poly::variable(ctx, i) * w[i]);
    return Derivation(ctx, std::move(c));
  }

  static Derivation euler(const VarContext& ctx) {
    return diagonal(ctx, std::vector<Rational>(ctx.size(), Rational(1)));
  }

  const VarContext& context() const { return ctx_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& coeff(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    for (const Poly& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Singular: vanishes at the origin (no constant coefficient parts).
  bool is_singular() const {
    for (const Poly& c : coeffs_)
      if (!c.constant_term().is_zero()) return false;
    return true;
  }

  int max_coeff_degree() const {
    int d = 0;
    for (const Poly& c : coeffs_)
      if (auto cd = c.degree()) d = std::max(d, *cd);
    return d;
  }

  Poly apply(const Poly& f) const {
    if (f.context() != ctx_) raise(errc::context_mismatch, "applying derivation across contexts");
    Poly acc = Poly::zero(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      acc = acc + coeffs_[i] * f.partial_derivative(i);
    }
    return acc;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    if (a.ctx_ != b.ctx_) raise(errc::context_mismatch, "adding derivations across contexts");
    std::vector<Poly> c;
    c.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return Derivation(a.ctx_, std::move(c));
  }

  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    if (a.ctx_ != b.ctx_) raise(errc::context_mismatch, "subtracting derivations across contexts");
    std::vector<Poly> c;
    c.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return Derivation(a.ctx_, std::move(c));
  }

  friend Derivation operator*(const Rational& c, const Derivation& d) {
    std::vector<Poly> out;
    out.reserve(d.coeffs_.size());
    for (const Poly& p : d.coeffs_) out.push_back(p * c);
    return Derivation(d.ctx_, std::move(out));
  }

  friend Derivation operator*(const Poly& g, const Derivation& d) {
    if (g.context() != d.ctx_) raise(errc::context_mismatch, "scaling derivation across contexts");
    std::vector<Poly> out;
    out.reserve(d.coeffs_.size());
    for (const Poly& p : d.coeffs_) out.push_back(g * p);
    return Derivation(d.ctx_, std::move(out));
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  VarContext ctx_;
  std::vector<Poly> coeffs_;
};

/// [a, b], with j-th coefficient a(b_j) - b(a_j).
inline Derivation lie_bracket(const Derivation& a, const Derivation& b) {
  if (a.context() != b.context()) raise(errc::context_mismatch, "bracket across contexts");
  std::vector<Poly> c;
  c.reserve(a.coeffs().size());
  for (std::size_t j = 0; j < a.coeffs().size(); ++j)
    c.push_back(a.apply(b.coeff(j)) - b.apply(a.coeff(j)));
  return Derivation(a.context(), std::move(c));
}

/// Cofactor alpha with d(f) = alpha * f when f divides d(f) exactly; empty
/// otherwise.
inline std::optional<Poly> is_logarithmic(const Poly& f, const Derivation& d) {
  if (f.is_zero()) raise(errc::division_by_zero, "logarithmic test against the zero polynomial");
  Poly df = d.apply(f);
  if (df.is_zero()) return Poly::zero(f.context());
  try {
    return exact_divide(df, f);
  } catch (const Error& e) {
    if (e.code() == errc::not_divisible) return std::nullopt;
    throw;
  }
}

}  // namespace logdiv
