// Recursive-descent parser for the ASCII expression grammar:
//
//   element := term (("+"|"-") term)*
//   term    := factor ("*" factor)*
//   factor  := coeff | gen adj? ("^" int)? | "(" element ")" adj?
//   gen     := "z"i | "w"i | "U"i | "x" | "y" | "u"
//   adj     := "'"
//   coeff   := rational | rational "i" | "rho" ("^" halfint)?
//
// Whitespace is insignificant. A leading sign on the first term is accepted
// so that printed elements round-trip.
#ifndef NCSPHERE_PARSER_HPP
#define NCSPHERE_PARSER_HPP

#include <cctype>
#include <string>

#include "ncsphere/element.hpp"

namespace ncsphere {

struct ParseError : Error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t p)
      : Error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, PresPtr pres) : text_(text), pres_(std::move(pres)) {}

  AlgebraElement run() {
    AlgebraElement e = element();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    long long num = integer();
    if (eat('/')) {
      long long den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num) / den;
    }
    return Rational(num);
  }

  // Exponent of rho in halves: "2" -> 4, "1/2" -> 1, "-3/2" -> -3.
  std::int64_t halfint_halves() {
    long long num = integer();
    if (eat('/')) {
      long long den = integer();
      if (den == 2) return num;
      if (den == 1) return 2 * num;
      fail("rho exponent must be an integer or a half-integer");
    }
    return 2 * num;
  }

  bool starts_rational() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    return std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  AlgebraElement factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a factor");

    if (eat('(')) {
      AlgebraElement e = element();
      if (!eat(')')) fail("expected ')'");
      if (eat('\'')) e = e.adjoint();
      return e;
    }

    if (starts_rational()) {
      Rational r = rational();
      GaussianRational c = eat_i() ? GaussianRational(Rational(0), r) : GaussianRational(r);
      return AlgebraElement::scalar(pres_, PhaseScalar(c));
    }

    if (match_word("rho")) {
      std::int64_t halves = 2;
      if (eat('^')) halves = halfint_halves();
      return AlgebraElement::scalar(pres_, PhaseScalar::rho_power_halves(halves));
    }

    return generator_factor();
  }

  bool eat_i() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return true;
    }
    return false;
  }

  bool match_word(const char* w) {
    skip_ws();
    std::size_t len = std::string_view(w).size();
    if (text_.substr(pos_, len) == w) {
      // Do not swallow a prefix of a longer identifier.
      std::size_t after = pos_ + len;
      if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after])))
        return false;
      pos_ += len;
      return true;
    }
    return false;
  }

  AlgebraElement generator_factor() {
    const Presentation& p = *pres_;
    std::size_t at = pos_;
    char c = text_[pos_];

    auto finish = [&](AlgebraElement base, bool unitary) {
      bool star = eat('\'');
      long long k = 1;
      if (eat('^')) k = integer();
      if (star) base = base.adjoint();
      if (k < 0) {
        if (!unitary) fail("negative power of a non-invertible generator");
        base = base.adjoint();
        k = -k;
      }
      return base.pow(static_cast<int>(k));
    };

    if (c == 'z' || c == 'w' || c == 'U') {
      const char* expect = p.is_torus() ? "U" : (p.family() == Family::Ball ? "w" : "z");
      if (c != expect[0]) {
        pos_ = at;
        fail(std::string("unknown generator for ") + p.name());
      }
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a generator index");
      long long idx = integer();
      if (idx < 1 || idx > p.m()) {
        pos_ = at;
        fail("generator index out of range for " + p.name());
      }
      return finish(AlgebraElement::generator(pres_, static_cast<int>(idx - 1)), p.is_torus());
    }
    if (c == 'x' || c == 'y') {
      bool ok = p.has_central() && p.central_name()[0] == c;
      if (!ok) fail(std::string("unknown generator for ") + p.name());
      ++pos_;
      return finish(AlgebraElement::central(pres_), false);
    }
    if (c == 'u') {
      if (!p.has_u()) fail(std::string("unknown generator for ") + p.name());
      ++pos_;
      return finish(AlgebraElement::u_gen(pres_), false);
    }
    fail("expected a factor");
  }

  AlgebraElement term() {
    AlgebraElement e = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        e = e * factor();
      } else {
        break;
      }
    }
    return e;
  }

  AlgebraElement element() {
    bool neg = false;
    skip_ws();
    if (peek() == '-') {
      eat('-');
      neg = true;
    } else if (peek() == '+') {
      eat('+');
    }
    AlgebraElement e = term();
    if (neg) e = -e;
    while (true) {
      skip_ws();
      if (eat('+')) {
        e += term();
      } else if (eat('-')) {
        e -= term();
      } else {
        break;
      }
    }
    return e;
  }

  std::string_view text_;
  PresPtr pres_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AlgebraElement parse_element(std::string_view text, PresPtr pres) {
  return detail::Parser(text, std::move(pres)).run();
}

}  // namespace ncsphere

#endif
