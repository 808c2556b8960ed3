#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "logdiv/context.hpp"
#include "logdiv/monomial.hpp"
#include "logdiv/rational.hpp"

namespace logdiv {

struct Term {
  Monomial mono;
  Rational coeff;
};

namespace poly_detail {
// Canonical storage order: descending degrevlex.
struct CanonGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_compare(a, b) > 0;
  }
};
}  // namespace poly_detail

/// Exact multivariate polynomial over the rationals in a fixed variable
/// context. Canonical form: no zero coefficients, terms sorted in descending
/// degrevlex; two polynomials are equal iff their term lists are equal.
class Poly {
 public:
  static Poly zero(const VarContext& ctx) { return Poly(ctx, {}); }

  static Poly constant(const VarContext& ctx, Rational c) {
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({Monomial(ctx.size()), std::move(c)});
    return Poly(ctx, std::move(t));
  }

  static Poly variable(const VarContext& ctx, std::size_t i) {
    if (i >= ctx.size()) raise(errc::index_out_of_range, "variable index " + std::to_string(i));
    return Poly(ctx, {{Monomial::variable(ctx.size(), i), Rational(1)}});
  }

  static Poly from_term(const VarContext& ctx, Monomial m, Rational c) {
    if (m.size() != ctx.size()) raise(errc::dimension_mismatch, "monomial length");
    std::vector<Term> t;
    if (!c.is_zero()) t.push_back({std::move(m), std::move(c)});
    return Poly(ctx, std::move(t));
  }

  /// Builds canonical form from arbitrary terms (merges equal monomials,
  /// drops zeros).
  static Poly from_terms(const VarContext& ctx, const std::vector<Term>& terms) {
    std::map<Monomial, Rational, poly_detail::CanonGreater> acc;
    for (const Term& t : terms) {
      if (t.mono.size() != ctx.size()) raise(errc::dimension_mismatch, "monomial length");
      auto [it, fresh] = acc.emplace(t.mono, t.coeff);
      if (!fresh) {
        it->second += t.coeff;
        if (it->second.is_zero()) acc.erase(it);
      } else if (it->second.is_zero()) {
        acc.erase(it);
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) out.push_back({m, c});
    return Poly(ctx, std::move(out));
  }

  const VarContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_nonzero_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  Rational coefficient_of(const Monomial& m) const {
    for (const Term& t : terms_)
      if (t.mono == m) return t.coeff;
    return Rational(0);
  }

  /// Total degree; empty for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const Term& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  /// Leading term in the canonical (degrevlex) order.
  const Term& leading_term() const {
    if (terms_.empty()) raise(errc::internal_error, "leading term of zero polynomial");
    return terms_.front();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_same_context(b);
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (i == a.terms_.size()) { out.push_back(b.terms_[j++]); continue; }
      if (j == b.terms_.size()) { out.push_back(a.terms_[i++]); continue; }
      int cmp = degrevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) out.push_back(a.terms_[i++]);
      else if (cmp < 0) out.push_back(b.terms_[j++]);
      else {
        Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) out.push_back({a.terms_[i].mono, std::move(c)});
        ++i; ++j;
      }
    }
    return Poly(a.ctx_, std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = -t.coeff;
    return Poly(ctx_, std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_context(b);
    if (a.is_zero() || b.is_zero()) return zero(a.ctx_);
    std::map<Monomial, Rational, poly_detail::CanonGreater> acc;
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_) {
        Monomial m = ta.mono.times(tb.mono);
        Rational c = ta.coeff * tb.coeff;
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) out.push_back({m, c});
    return Poly(a.ctx_, std::move(out));
  }

  friend Poly operator*(const Poly& a, const Rational& c) {
    if (c.is_zero()) return zero(a.ctx_);
    std::vector<Term> out = a.terms_;
    for (Term& t : out) t.coeff *= c;
    return Poly(a.ctx_, std::move(out));
  }
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Formal partial derivative with respect to variable i.
  Poly partial_derivative(std::size_t i) const {
    if (i >= ctx_.size()) raise(errc::index_out_of_range, "variable index " + std::to_string(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      int e = t.mono[i];
      if (e == 0) continue;
      std::vector<int> ex = t.mono.exponents();
      ex[i] -= 1;
      out.push_back({Monomial(std::move(ex)), t.coeff * Rational(static_cast<long>(e))});
    }
    return from_terms(ctx_, out);
  }

  /// Exact evaluation at a rational point; a ring homomorphism for fixed p.
  Rational evaluate(const std::vector<Rational>& p) const {
    if (p.size() != ctx_.size())
      raise(errc::dimension_mismatch, "point has " + std::to_string(p.size()) + " coordinates, context has " +
                                          std::to_string(ctx_.size()));
    Rational acc(0);
    for (const Term& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < p.size(); ++i) {
        int e = t.mono[i];
        if (e > 0) v *= p[i].pow(static_cast<unsigned>(e));
      }
      acc += v;
    }
    return acc;
  }

  Poly appended_var(const VarContext& bigger) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.mono.with_appended_var(), t.coeff});
    return from_terms(bigger, out);
  }

  Poly prepended_var(const VarContext& bigger) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.mono.with_prepended_var(), t.coeff});
    return from_terms(bigger, out);
  }

  Poly dropped_front_var(const VarContext& smaller) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.mono.dropped_front_var(), t.coeff});
    return from_terms(smaller, out);
  }

  /// Canonical text rendering: terms in descending degrevlex, variables in
  /// context order, explicit '*' and '^', rationals as "a/b" or "a".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      bool neg = t.coeff.sign() < 0;
      Rational mag = t.coeff.abs();
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string vars = render_monomial(t.mono);
      if (vars.empty()) {
        out += mag.to_string();
      } else if (mag.is_one()) {
        out += vars;
      } else {
        out += mag.to_string();
        out += "*";
        out += vars;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  void check_same_context(const Poly& o) const {
    if (ctx_ != o.ctx_) raise(errc::context_mismatch, "polynomials over different variable contexts");
  }

 private:
  Poly(VarContext ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  std::string render_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += ctx_.name(i);
      if (e >= 2) {
        s += "^";
        s += std::to_string(e);
      }
    }
    return s;
  }

  VarContext ctx_;
  std::vector<Term> terms_;  // canonical: descending degrevlex, no zero coeffs
};

/// Exact quotient f / g; raises NotDivisible when f is not a polynomial
/// multiple of g.
inline Poly exact_divide(const Poly& f, const Poly& g) {
  f.check_same_context(g);
  if (g.is_zero()) raise(errc::division_by_zero, "exact division by the zero polynomial");
  if (f.is_zero()) return Poly::zero(f.context());
  const Term& glt = g.leading_term();
  Poly r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& rlt = r.leading_term();
    if (!glt.mono.divides(rlt.mono))
      raise(errc::not_divisible, "remainder has leading term " + Poly::from_term(f.context(), rlt.mono, Rational(1)).to_string());
    Term step{rlt.mono.quotient(glt.mono), rlt.coeff / glt.coeff};
    q.push_back(step);
    r = r - Poly::from_term(f.context(), step.mono, step.coeff) * g;
  }
  return Poly::from_terms(f.context(), q);
}

}  // namespace logdiv
