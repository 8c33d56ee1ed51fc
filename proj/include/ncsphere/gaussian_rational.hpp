// Exact Gaussian-rational scalars a + bi with arbitrary-precision rational
// parts. These are the coefficients of the phase ring; everything downstream
// that claims "exact" ultimately rests on this type.
#ifndef NCSPHERE_GAUSSIAN_RATIONAL_HPP
#define NCSPHERE_GAUSSIAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace ncsphere {

using Rational = boost::multiprecision::cpp_rational;

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Printed forms: "3", "-1/2", "2i", "(1/2 + 1/2i)", "(1/2 - 1/2i)".
// Pure-imaginary and real values stay parenthesis-free so they re-parse as a
// single grammar factor.
inline std::string to_string(const GaussianRational& g) {
  if (g.im == 0) return rational_str(g.re);
  if (g.re == 0) return rational_str(g.im) + "i";
  std::string s = "(" + rational_str(g.re);
  if (g.im > 0)
    s += " + " + rational_str(g.im) + "i";
  else
    s += " - " + rational_str(-g.im) + "i";
  return s + ")";
}

}  // namespace ncsphere

#endif
