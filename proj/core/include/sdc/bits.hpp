#pragma once

// Packed binary vectors and matrices plus F2 row reduction. The word layout
// (64-bit limbs, bit i of word i/64) is what the codeword enumeration engine
// runs on, so it is part of this header's contract.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sdc {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  size_t words() const { return w_.size(); }
  uint64_t word(size_t i) const { return w_[i]; }

  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool b) {
    const uint64_t m = uint64_t(1) << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  size_t weight() const {
    size_t s = 0;
    for (uint64_t w : w_) s += size_t(std::popcount(w));
    return s;
  }

  bool is_zero() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  /// Parity of the overlap, i.e. the F2 inner product.
  bool dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
  }

  /// Index of the lowest set bit, or size() when zero.
  size_t first_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + size_t(std::countr_zero(w_[i]));
    return n_;
  }

  static BitVec ones(size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < v.w_.size(); ++i) v.w_[i] = ~uint64_t(0);
    v.trim();
    return v;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::span<const uint64_t> raw() const { return w_; }
  std::span<uint64_t> raw() { return w_; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }

  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/// Row-major packed bit matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : r_(rows), c_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

  static BitMatrix from_rows(const std::vector<BitVec>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_)
        throw std::invalid_argument("BitMatrix: ragged rows");
      for (size_t j = 0; j < m.stride_; ++j)
        m.w_[i * m.stride_ + j] = rows[i].word(j);
    }
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  size_t stride() const { return stride_; }

  bool get(size_t i, size_t j) const {
    return (w_[i * stride_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(size_t i, size_t j, bool b) {
    const uint64_t m = uint64_t(1) << (j & 63);
    if (b)
      w_[i * stride_ + (j >> 6)] |= m;
    else
      w_[i * stride_ + (j >> 6)] &= ~m;
  }

  std::span<const uint64_t> row_words(size_t i) const {
    return {w_.data() + i * stride_, stride_};
  }

  BitVec row(size_t i) const {
    BitVec v(c_);
    for (size_t j = 0; j < stride_; ++j) v.raw()[j] = w_[i * stride_ + j];
    return v;
  }

  void set_row(size_t i, const BitVec& v) {
    for (size_t j = 0; j < stride_; ++j) w_[i * stride_ + j] = v.word(j);
  }

  void xor_row(size_t dst, size_t src) {
    for (size_t j = 0; j < stride_; ++j)
      w_[dst * stride_ + j] ^= w_[src * stride_ + j];
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < stride_; ++j)
      std::swap(w_[a * stride_ + j], w_[b * stride_ + j]);
  }

  size_t row_weight(size_t i) const {
    size_t s = 0;
    for (uint64_t w : row_words(i)) s += size_t(std::popcount(w));
    return s;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  size_t r_ = 0, c_ = 0, stride_ = 0;
  std::vector<uint64_t> w_;
};

struct RrefResult {
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

/// In-place reduced row echelon form with the deterministic pivot rule
/// "lowest column index first, lowest row index first". Rows below the rank
/// come out zero.
RrefResult rref(BitMatrix& m);

/// RREF restricted to a caller-chosen column preference order (used for
/// information-set chains); columns listed first are tried as pivots first.
RrefResult rref_ordered(BitMatrix& m, std::span<const size_t> col_order);

/// Reduces v against an RREF matrix; returns true when v lies in the row
/// space (v is consumed to zero in that case).
bool reduce_against(const BitMatrix& rref_m, const RrefResult& info, BitVec& v);

}  // namespace sdc
