// Rectangular matrices over AlgebraElements sharing one presentation.
#ifndef NCSPHERE_ALG_MATRIX_HPP
#define NCSPHERE_ALG_MATRIX_HPP

#include <vector>

#include "ncsphere/report.hpp"
#include "ncsphere/substitute.hpp"

namespace ncsphere {

class AlgMatrix {
 public:
  AlgMatrix(PresPtr pres, int rows, int cols)
      : pres_(std::move(pres)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error("AlgMatrix: empty shape");
    e_.assign(static_cast<std::size_t>(rows) * cols, AlgebraElement::zero(pres_));
  }

  static AlgMatrix identity(PresPtr pres, int n) {
    AlgMatrix m(pres, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::one(m.pres_);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PresPtr& pres() const { return pres_; }

  AlgebraElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const AlgebraElement& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
    if (*a.pres_ != *b.pres_) throw Error("AlgMatrix: presentation mismatch");
    if (a.cols_ != b.rows_) throw Error("AlgMatrix: shape mismatch");
    AlgMatrix r(a.pres_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        AlgebraElement acc = AlgebraElement::zero(a.pres_);
        for (int k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
        r.at(i, j) = std::move(acc);
      }
    return r;
  }
  friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
    if (*a.pres_ != *b.pres_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("AlgMatrix: shape/presentation mismatch");
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }
  friend AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
    if (*a.pres_ != *b.pres_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error("AlgMatrix: shape/presentation mismatch");
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }
  friend AlgMatrix operator*(const PhaseScalar& c, const AlgMatrix& a) {
    AlgMatrix r = a;
    for (auto& x : r.e_) x = c * x;
    return r;
  }

  AlgMatrix adjoint() const {
    AlgMatrix r(pres_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).adjoint();
    return r;
  }

  AlgMatrix substituted(const GenImages& img) const {
    AlgMatrix r(img.dst, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = substitute(at(i, j), img);
    return r;
  }

  AlgebraElement alg_trace() const {
    if (rows_ != cols_) throw Error("alg_trace: non-square matrix");
    AlgebraElement acc = AlgebraElement::zero(pres_);
    for (int i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& x : e_) n += x.terms().size();
    return n;
  }

  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return *a.pres_ == *b.pres_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const AlgMatrix& a, const AlgMatrix& b) { return !(a == b); }

 private:
  PresPtr pres_;
  int rows_, cols_;
  std::vector<AlgebraElement> e_;
};

// Exact idempotency and self-adjointness: residuals are A^2 - A and A* - A.
inline Report is_projection(const AlgMatrix& a) {
  if (a.rows() != a.cols()) throw Error("is_projection: non-square matrix");
  Report rep;
  rep.title = "is_projection";
  AlgMatrix idem = a * a - a;
  AlgMatrix herm = a.adjoint() - a;
  rep.add("A^2 - A = 0", idem.is_zero(), static_cast<double>(idem.term_count()));
  rep.add("A* - A = 0", herm.is_zero(), static_cast<double>(herm.term_count()));
  return rep;
}

}  // namespace ncsphere

#endif
