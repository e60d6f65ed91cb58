#pragma once

// Quadratic residue circulant matrices and the pure / bordered double
// circulant code constructions, with the circulant product identity as an
// executable check and the built-in self-dual families over F4+uF4 for
// primes p = 3, 7 (mod 8).

#include <string>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/linalg.hpp"
#include "sdc/rings.hpp"

namespace sdc {

bool is_odd_prime(int p);

/// Squares of 1..p-1 modulo p, sorted; exactly (p-1)/2 of them.
/// Throws std::invalid_argument unless p is an odd prime.
std::vector<int> quadratic_residues(int p);

template <Ring R>
struct QRCirculantSpec {
  int p = 0;
  Elem<R> a, b, c;
};

/// Border frame of a bordered double circulant generator. The names carry a
/// `border` suffix because beta/gamma are also weight enumerator parameters.
template <Ring R>
struct BorderSpec {
  Elem<R> lambda, beta_border, gamma_border;
};

namespace detail {
void require_odd_prime(int p);
}

/// Circulant matrix with the given first row; row i+1 is the cyclic right
/// shift of row i.
template <Ring R>
Mat<R> build_circulant(std::span<const Elem<R>> first_row) {
  const size_t p = first_row.size();
  Mat<R> m(p, p);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) m(i, j) = first_row[(j + p - i) % p];
  return m;
}

/// First row of Q_p(a,b,c): position 0 holds a, position i holds b when i is
/// a quadratic residue mod p and c otherwise.
template <Ring R>
Vec<R> qr_first_row(const QRCirculantSpec<R>& s) {
  detail::require_odd_prime(s.p);
  Vec<R> row(size_t(s.p), s.c);
  row[0] = s.a;
  for (int r : quadratic_residues(s.p)) row[size_t(r)] = s.b;
  return row;
}

template <Ring R>
Mat<R> build_Q(const QRCirculantSpec<R>& s) {
  const Vec<R> row = qr_first_row(s);
  return build_circulant<R>(row);
}

/// Evaluates Q*Q^T both directly and through the closed form (with integer
/// coefficients reduced mod 2, the ring characteristic) and reports whether
/// the two agree. The closed form depends on p mod 4.
template <Ring R>
struct ProductIdentityResult {
  Mat<R> direct;
  Mat<R> predicted;
  bool agree = false;
};

template <Ring R>
ProductIdentityResult<R> product_identity_check(const QRCirculantSpec<R>& s) {
  detail::require_odd_prime(s.p);
  const Mat<R> q = build_Q(s);
  ProductIdentityResult<R> res;
  res.direct = q * q.transposed();

  const Elem<R> a = s.a, b = s.b, c = s.c;
  const Elem<R> bb_cc = b.squared() + c.squared();
  QRCirculantSpec<R> pred;
  pred.p = s.p;
  if (s.p % 4 == 1) {
    const int k = (s.p - 1) / 4;
    const Elem<R> kk = (k & 1) ? Elem<R>(1) : Elem<R>(0);
    const Elem<R> bc2 = (b + c).squared();
    pred.a = a.squared();                    // 2k(b^2+c^2) vanishes
    pred.b = b.squared() + kk * bc2;         // 2ab - b^2 + k(b+c)^2
    pred.c = c.squared() + kk * bc2;         // 2ac - c^2 + k(b+c)^2
  } else {
    const int k = (s.p - 3) / 4;
    const Elem<R> kk = (k & 1) ? Elem<R>(1) : Elem<R>(0);
    const Elem<R> off = a * b + a * c + kk * bb_cc + b * c;  // (2k+1)bc = bc
    pred.a = a.squared() + bb_cc;            // (2k+1)(b^2+c^2) = b^2+c^2
    pred.b = off;
    pred.c = off;
  }
  res.predicted = build_Q(pred);
  res.agree = res.direct == res.predicted;
  return res;
}

/// Pure double circulant generator [I_p | Q_p(a,b,c)], a free rank-p code of
/// length 2p.
template <Ring R>
RingCode<R> build_P(const QRCirculantSpec<R>& s) {
  const Mat<R> q = build_Q(s);
  const size_t p = size_t(s.p);
  RingCode<R> code{Mat<R>(p, 2 * p), true};
  for (size_t i = 0; i < p; ++i) {
    code.gen(i, i) = Elem<R>(1);
    for (size_t j = 0; j < p; ++j) code.gen(i, p + j) = q(i, j);
  }
  return code;
}

/// Bordered double circulant generator: [I_{p+1} | M] where M frames
/// Q_p(a,b,c) with a lambda corner, an all-beta top row and an all-gamma
/// left column.
template <Ring R>
RingCode<R> build_B(const QRCirculantSpec<R>& s, const BorderSpec<R>& border) {
  const Mat<R> q = build_Q(s);
  const size_t p = size_t(s.p), m = p + 1;
  RingCode<R> code{Mat<R>(m, 2 * m), true};
  for (size_t i = 0; i < m; ++i) code.gen(i, i) = Elem<R>(1);
  code.gen(0, m) = border.lambda;
  for (size_t j = 0; j < p; ++j) code.gen(0, m + 1 + j) = border.beta_border;
  for (size_t i = 0; i < p; ++i) {
    code.gen(1 + i, m) = border.gamma_border;
    for (size_t j = 0; j < p; ++j) code.gen(1 + i, m + 1 + j) = q(i, j);
  }
  return code;
}

/// G * G^T == 0, valid for any generator shape.
template <Ring R>
bool is_self_orthogonal(const RingCode<R>& code) {
  return gram(code.gen).is_zero();
}

/// Self-duality test for free codes presented as [I_k | M] with n = 2k;
/// there G*G^T = 0 is equivalent to C = C-dual. Other shapes are rejected:
/// row-reduce to standard form first.
template <Ring R>
bool is_self_dual(const RingCode<R>& code) {
  const size_t k = code.gen_rows(), n = code.length();
  if (!code.standard_form || n != 2 * k)
    throw std::invalid_argument(
        "is_self_dual: generator must be [I_k | M] with n = 2k");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (code.gen(i, j) != Elem<R>(i == j ? 1 : 0))
        throw std::invalid_argument(
            "is_self_dual: generator must be [I_k | M] with n = 2k");
  return is_self_orthogonal(code);
}

/// One member of the built-in self-dual QDC families over F4+uF4.
struct FamilyCode {
  std::string name;        // e.g. "P7", "B7"
  RingCode<F4u> code;
  SelfDualType expected_type = SelfDualType::NotSelfDual;
};

/// The two self-dual QDC codes over F4+uF4 attached to a prime p with
/// p = 7 (mod 8) (a pure and a bordered code, both Type II) or p = 3 (mod 8)
/// (two bordered codes, Type I and Type II). Other residues are rejected.
std::vector<FamilyCode> selfdual_qdc_family(int p);

}  // namespace sdc
