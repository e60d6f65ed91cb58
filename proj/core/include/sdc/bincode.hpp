#pragma once

// Binary code engine: Gray images of ring codes, exact weight distributions
// by packed Gray-code enumeration (up to 2^34 codewords), exact minimum
// distance (full enumeration or Brouwer-Zimmermann), Type I/II
// classification and the Rains bound.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/bits.hpp"
#include "sdc/gray.hpp"
#include "sdc/linalg.hpp"

namespace sdc {

/// Thrown when a request exceeds the full-enumeration budget (k > 34).
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binary linear [n, k] code; generator rows are linearly independent.
class BinaryCode {
 public:
  BinaryCode() = default;

  /// Wraps a generator whose rows must be independent.
  static BinaryCode from_generator(BitMatrix gen);

  /// Builds a code from arbitrary spanning rows; the stored generator is the
  /// (deterministic) reduced row echelon form with zero rows dropped.
  static BinaryCode from_span_rows(const BitMatrix& rows);

  size_t length() const { return n_; }
  size_t dimension() const { return k_; }
  const BitMatrix& generator() const { return gen_; }

  /// Deterministic canonical generator (RREF).
  BitMatrix rref_generator() const;

  bool contains(const BitVec& v) const;

  /// True when the all-ones vector is a codeword (always true for binary
  /// self-dual codes).
  bool contains_all_ones() const;

 private:
  size_t n_ = 0, k_ = 0;
  BitMatrix gen_;
};

struct WeightDistribution {
  std::vector<uint64_t> counts;  // counts[w] = number of codewords of weight w

  uint64_t at(size_t w) const { return w < counts.size() ? counts[w] : 0; }
  uint64_t total() const;
  int min_nonzero_weight() const;  // -1 for the zero code
};

/// Exact weight distribution by enumerating all 2^k codewords in Gray-code
/// order (one row XOR per step). Requires k <= 34; when the all-ones word is
/// in the code only half the codewords are walked and the rest comes from
/// the w <-> n-w mirror. `threads` 0 picks the hardware count; thread count
/// never changes the result.
WeightDistribution weight_distribution(const BinaryCode& c, int threads = 0);

/// Minimum-distance engines. `min_distance` picks full enumeration for
/// k <= 28 and Brouwer-Zimmermann beyond; the two specialized entry points
/// stay available as independent cross-checks of each other.
int min_distance(const BinaryCode& c, int threads = 0);
int min_distance_enumeration(const BinaryCode& c, int threads = 0);
int min_distance_bz(const BinaryCode& c, int threads = 0);

struct DistanceReport {
  int d = -1;
  std::string engine;
  double seconds = 0.0;
};
DistanceReport min_distance_report(const BinaryCode& c, int threads = 0);

enum class SelfDualType { NotSelfDual, TypeI, TypeII };
std::string to_string(SelfDualType t);

/// Self-duality plus the doubly-even test. A self-orthogonal binary code is
/// doubly-even as soon as every generator row weight is divisible by 4,
/// because row overlaps are even.
SelfDualType classify_type(const BinaryCode& c);

/// Rains upper bound on the minimum distance of a binary self-dual code:
/// 4*floor(n/24) + 6 when n = 22 (mod 24), else 4*floor(n/24) + 4.
int rains_bound(int n);

/// Self-dual and meeting the Rains bound exactly.
bool is_extremal(const BinaryCode& c, int threads = 0);

// Gray images of ring codes. The binary generator is the reduced span of
// the images of the scalar multiples of each generator row ({g, wg, ug, uwg}
// over F4+uF4, {g, ug} over F2+uF2, {g, wg} over F4), so the dimension is
// log2 of the code size whether or not the input generator was free.
BinaryCode gray_image(const RingCode<F4u>& c);
BinaryCode gray_image(const RingCode<F2u>& c);
BinaryCode gray_image(const RingCode<F4>& c);
BinaryCode gray_image(const RingCode<F2>& c);

// Conversions between the binary container and the generic ring form.
RingCode<F2> to_ring_code(const BinaryCode& c);
BinaryCode to_binary_code(const RingCode<F2>& c);

/// Column-permuted standard form [I_k | A]: pivots are chosen left to right,
/// `col_perm[j]` names the original column sitting at permuted position j.
struct StandardForm {
  BitMatrix a;                    // k x (n-k)
  std::vector<size_t> col_perm;   // size n
};
StandardForm standard_form(const BinaryCode& c);

}  // namespace sdc
