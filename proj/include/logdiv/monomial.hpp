#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "logdiv/errors.hpp"
#include "logdiv/rational.hpp"

namespace logdiv {

/// Exponent vector of a power product. Length equals the ambient dimension.
class Monomial {
 public:
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {
    for (int x : e_)
      if (x < 0) raise(errc::internal_error, "negative exponent in monomial");
  }

  static Monomial variable(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.e_[i] = 1;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  Rational weighted_degree(const std::vector<Rational>& w) const {
    Rational d;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0) d += w[i] * Rational(static_cast<long>(e_[i]));
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial quotient(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) raise(errc::internal_error, "monomial quotient underflow");
    }
    return r;
  }

  Monomial lcm_with(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  /// True when every variable occurring here lies in the bit set `vars`.
  bool supported_in(std::uint32_t vars) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && ((vars >> i) & 1u) == 0) return false;
    return true;
  }

  Monomial with_appended_var() const {
    Monomial r = *this;
    r.e_.push_back(0);
    return r;
  }

  Monomial with_prepended_var() const {
    Monomial r(e_.size() + 1);
    std::copy(e_.begin(), e_.end(), r.e_.begin() + 1);
    return r;
  }

  Monomial dropped_front_var() const {
    if (e_.empty() || e_[0] != 0)
      raise(errc::internal_error, "dropping a variable with nonzero exponent");
    return Monomial(std::vector<int>(e_.begin() + 1, e_.end()));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<int> e_;
};

// degrevlex: higher total degree wins; on ties the rightmost differing
// exponent decides, smaller exponent winning.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

inline int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? -1 : 1;
  }
  return 0;
}

/// Total well-order on monomials, compatible with multiplication.
/// block(k) compares the first k variables degrevlex first and is an
/// elimination order for them.
struct MonomialOrder {
  enum class Kind { lex, grlex, degrevlex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block_size = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grlex() { return {Kind::grlex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  /// <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::lex:
        return lex_compare(a, b);
      case Kind::grlex: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        return lex_compare(a, b);
      }
      case Kind::degrevlex:
        return degrevlex_compare(a, b);
      case Kind::block: {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < block_size; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = block_size; i-- > 0;) {
          int d = a[i] - b[i];
          if (d != 0) return d > 0 ? -1 : 1;
        }
        int ra = a.degree() - da, rb = b.degree() - db;
        if (ra != rb) return ra < rb ? -1 : 1;
        for (std::size_t i = a.size(); i-- > block_size;) {
          int d = a[i] - b[i];
          if (d != 0) return d > 0 ? -1 : 1;
        }
        return 0;
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const {
    switch (kind) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      case Kind::degrevlex: return "degrevlex";
      case Kind::block: return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }

  /// Accepts "lex", "grlex", "degrevlex", "block(k)".
  static std::optional<MonomialOrder> parse(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "degrevlex") return degrevlex();
    if (s.rfind("block(", 0) == 0 && s.back() == ')') {
      std::string num = s.substr(6, s.size() - 7);
      if (num.empty()) return std::nullopt;
      for (char c : num)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      return block(static_cast<std::size_t>(std::stoul(num)));
    }
    return std::nullopt;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.block_size == b.block_size;
  }
};

}  // namespace logdiv
