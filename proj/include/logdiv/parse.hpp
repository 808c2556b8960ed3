#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "logdiv/poly.hpp"

namespace logdiv {

// Expression grammar (no implicit multiplication, whitespace ignored):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | variable | '(' expr ')' | '-' base
//   rational := uint ('/' uint)?
namespace parse_detail {

class PolyParser {
 public:
  PolyParser(std::string_view src, const VarContext& ctx) : src_(src), ctx_(ctx) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) acc = acc * factor();
      else return acc;
    }
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (accept('^')) {
      unsigned e = parse_uint();
      Poly acc = Poly::constant(ctx_, Rational(1));
      for (unsigned k = 0; k < e; ++k) acc = acc * b;
      return acc;
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("expected a rational, variable, '(' or '-'");
  }

  Poly rational_literal() {
    std::string num = digits();
    std::string den;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("expected digits after '/'");
      den = digits();
    }
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (d == 0) raise(errc::zero_denominator, "literal at position " + std::to_string(pos_));
    mpq_class q(n, d);
    q.canonicalize();
    return Poly::constant(ctx_, Rational(std::move(q)));
  }

  Poly variable() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    auto idx = ctx_.index_of(name);
    if (!idx) raise(errc::unknown_variable, "'" + name + "' at position " + std::to_string(start));
    return Poly::variable(ctx_, *idx);
  }

  unsigned parse_uint() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected an exponent");
    std::string ds = digits();
    if (ds.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(ds));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    raise(errc::syntax_error, why + " at position " + std::to_string(pos_));
  }

  std::string_view src_;
  const VarContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace parse_detail

inline Poly parse_poly(std::string_view src, const VarContext& ctx) {
  return parse_detail::PolyParser(src, ctx).parse();
}

/// "(a, b, ...)" with comma-separated rationals.
inline std::vector<Rational> parse_point(std::string_view src, std::size_t expected) {
  std::size_t a = src.find('(');
  std::size_t b = src.rfind(')');
  if (a == std::string_view::npos || b == std::string_view::npos || b <= a)
    raise(errc::syntax_error, "point must be of the form (a,b,...)");
  std::string_view inner = src.substr(a + 1, b - a - 1);
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? inner.substr(start) : inner.substr(start, comma - start);
    out.push_back(Rational::parse(std::string(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    raise(errc::dimension_mismatch, "point has " + std::to_string(out.size()) +
                                        " coordinates, expected " + std::to_string(expected));
  return out;
}

}  // namespace logdiv
