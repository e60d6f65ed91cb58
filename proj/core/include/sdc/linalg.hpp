#pragma once

// Dense vectors and matrices over the four rings. These stay small (a few
// dozen rows); all heavy lifting happens on packed binary images instead.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdc/rings.hpp"

namespace sdc {

template <Ring R>
using Vec = std::vector<Elem<R>>;

template <Ring R>
constexpr Elem<R> inner_product(std::span<const Elem<R>> x,
                                std::span<const Elem<R>> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("inner_product: length mismatch");
  Elem<R> acc{};
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

template <Ring R>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Elem<R>(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  Elem<R>& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Elem<R>& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  std::span<Elem<R>> row(size_t i) { return {a_.data() + i * c_, c_}; }
  std::span<const Elem<R>> row(size_t i) const {
    return {a_.data() + i * c_, c_};
  }

  Mat transposed() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j)
        if ((*this)(i, j) != Elem<R>(i == j ? 1 : 0)) return false;
    return true;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat out(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t l = 0; l < a.c_; ++l) {
        const Elem<R> s = a(i, l);
        if (s.is_zero()) continue;
        for (size_t j = 0; j < b.c_; ++j) out(i, j) += s * b(l, j);
      }
    return out;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Elem<R>> a_;
};

/// Product G * G^T, the self-orthogonality witness.
template <Ring R>
Mat<R> gram(const Mat<R>& g) {
  Mat<R> out(g.rows(), g.rows());
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.rows(); ++j)
      out(i, j) = inner_product<R>(g.row(i), g.row(j));
  return out;
}

/// A linear code over R presented by a generator matrix. `standard_form`
/// records that the generator is known to be [I_k | M], which is what the
/// double circulant builders emit and what the algebraic self-duality test
/// requires.
template <Ring R>
struct RingCode {
  using ring_type = R;

  Mat<R> gen;
  bool standard_form = false;

  size_t length() const { return gen.cols(); }
  size_t gen_rows() const { return gen.rows(); }
};

}  // namespace sdc
