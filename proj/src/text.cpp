#include "asmkit/text.hpp"

#include <cctype>

#include "asmkit/errors.hpp"

namespace asmkit {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    Rational a = abs(c);
    std::string factors;
    for (int v = 0; v < kMaxVars; ++v) {
      if (m.e[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_name(v);
      if (m.e[v] != 1) factors += "^" + std::to_string(m.e[v]);
    }
    if (factors.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

std::string to_string(const RationalFunction& f) {
  RationalFunction g = f.gcd_reduce();
  return "(" + to_string(g.numerator()) + ")/(" + to_string(g.denominator()) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) fail("expected integer exponent");
    if (d.size() > 6) throw ParseError("exponent too large", at);
    int e = std::stoi(d);
    if (neg) e = -e;
    if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
    if (base.is_laurent() && base.num().is_monomial()) return RationalFunction(base.num().pow(e));
    return base.pow(e);
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected a term");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      std::string d = digits();
      if (d.empty() || d.size() > 2) throw ParseError("expected variable index", at + 1);
      int i = std::stoi(d);
      if (i < 1 || i > kMaxVars) throw ParseError("variable index out of range", at + 1);
      return RationalFunction(LaurentPolynomial::var(i - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer z(digits());
      return RationalFunction(Rational(z));
    }
    fail("expected a term");
  }
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

LaurentPolynomial parse_polynomial(std::string_view text) {
  RationalFunction f = parse_rational_function(text).cancel_exact();
  if (!f.is_laurent()) f = f.gcd_reduce();
  if (!f.is_laurent()) throw ParseError("expression is not a Laurent polynomial", 0);
  return f.num();
}

}  // namespace asmkit
