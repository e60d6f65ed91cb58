#pragma once

// Vector-level Gray maps. Both maps concatenate component blocks rather than
// interleaving them:
//
//   psi : (F4+uF4)^n -> (F2+uF2)^2n,  a*w + b*(1+w) |-> (a | b)
//   phi : (F2+uF2)^n -> F2^2n,        a + b*u       |-> (b | a+b)
//
// and the F4 Gray map is psi restricted to vectors with zero u part. The
// block layout is canonical: extension vectors in the bundled catalog are
// written against exactly these coordinates.

#include <span>

#include "sdc/bits.hpp"
#include "sdc/linalg.hpp"
#include "sdc/rings.hpp"

namespace sdc {

inline Vec<F2u> gray_psi(std::span<const Elem<F4u>> v) {
  const size_t n = v.size();
  Vec<F2u> out(2 * n);
  for (size_t i = 0; i < n; ++i) {
    const PsiPair p = psi_split(v[i]);
    out[i] = p.a;
    out[n + i] = p.b;
  }
  return out;
}

inline BitVec gray_phi(std::span<const Elem<F2u>> v) {
  const size_t n = v.size();
  BitVec out(2 * n);
  for (size_t i = 0; i < n; ++i) {
    const PhiPair p = phi_split(v[i]);
    if (p.first) out.set(i, true);
    if (p.second) out.set(n + i, true);
  }
  return out;
}

/// phi(psi(v)), the binary image of an F4+uF4 vector (length 4n).
inline BitVec gray_phi_psi(std::span<const Elem<F4u>> v) {
  const Vec<F2u> mid = gray_psi(v);
  return gray_phi(mid);
}

/// Binary image of an F4 vector (length 2n): a*w + b*(1+w) |-> (a | b).
inline BitVec gray_f4(std::span<const Elem<F4>> v) {
  const size_t n = v.size();
  BitVec out(2 * n);
  for (size_t i = 0; i < n; ++i) {
    const PhiPair p = f4_split(v[i]);
    if (p.first) out.set(i, true);
    if (p.second) out.set(n + i, true);
  }
  return out;
}

/// Entrywise projection of a vector, mu(a + b*u) = a.
inline Vec<F4> mu(std::span<const Elem<F4u>> v) {
  Vec<F4> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = mu(v[i]);
  return out;
}

/// Entrywise projection of a matrix.
inline Mat<F4> mu(const Mat<F4u>& m) {
  Mat<F4> out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = mu(m(i, j));
  return out;
}

}  // namespace sdc
