#pragma once

// Arithmetic for the four characteristic-2 rings
//
//   F2, F2+uF2 (u^2 = 0), F4 = F2(w) (w^2 = w + 1), F4+uF4 (u^2 = 0),
//
// together with the element-level Gray decompositions, Lee weights and the
// projection / lift maps between F4+uF4 and F4.
//
// Elements are packed into the low bits of a byte and the packing is part of
// every file format, so it never changes:
//
//   F2      v = a                      a
//   F2+uF2  v = a | b<<1               a + b*u
//   F4      v = a0 | a1<<1             a0 + a1*w
//   F4+uF4  v = x0 | x1<<1 | x2<<2 | x3<<3   (x0 + x1*w) + (x2 + x3*w)*u
//
// Addition is bitwise XOR in all four rings; products come from precomputed
// tables built at compile time.

#include <array>
#include <cstdint>
#include <string_view>

namespace sdc {

enum class RingId : uint8_t { F2, F2u, F4, F4u };

namespace detail {

// 2-bit F4 product, w^2 = w + 1.
constexpr uint8_t f4_mul_formula(uint8_t x, uint8_t y) {
  const uint8_t x0 = x & 1, x1 = (x >> 1) & 1;
  const uint8_t y0 = y & 1, y1 = (y >> 1) & 1;
  const uint8_t c0 = (x0 & y0) ^ (x1 & y1);
  const uint8_t c1 = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1);
  return uint8_t(c0 | (c1 << 1));
}

// (a + b*u)(c + d*u) = ac + (ad + bc)u with u^2 = 0, for 1-bit components.
constexpr uint8_t f2u_mul_formula(uint8_t x, uint8_t y) {
  const uint8_t a = x & 1, b = (x >> 1) & 1;
  const uint8_t c = y & 1, d = (y >> 1) & 1;
  return uint8_t((a & c) | (((a & d) ^ (b & c)) << 1));
}

// Same shape one level up: components are F4 elements in 2-bit halves.
constexpr uint8_t f4u_mul_formula(uint8_t x, uint8_t y) {
  const uint8_t A = x & 3, B = (x >> 2) & 3;
  const uint8_t C = y & 3, D = (y >> 2) & 3;
  return uint8_t(f4_mul_formula(A, C) |
                 ((f4_mul_formula(A, D) ^ f4_mul_formula(B, C)) << 2));
}

template <int Q, class F>
constexpr std::array<std::array<uint8_t, Q>, Q> make_mul_table(F f) {
  std::array<std::array<uint8_t, Q>, Q> t{};
  for (int a = 0; a < Q; ++a)
    for (int b = 0; b < Q; ++b) t[a][b] = f(uint8_t(a), uint8_t(b));
  return t;
}

}  // namespace detail

struct F2 {
  static constexpr RingId id = RingId::F2;
  static constexpr int size = 2;
  static constexpr std::string_view name = "F2";
  static constexpr std::string_view alphabet = "01";
  static constexpr uint8_t mul(uint8_t a, uint8_t b) { return a & b; }
  static constexpr bool is_unit(uint8_t a) { return a == 1; }
};

struct F2u {
  static constexpr RingId id = RingId::F2u;
  static constexpr int size = 4;
  static constexpr std::string_view name = "F2uF2";
  // 1+u is written as '3', matching the packed value.
  static constexpr std::string_view alphabet = "01u3";
  static constexpr auto mul_table =
      detail::make_mul_table<4>(detail::f2u_mul_formula);
  static constexpr uint8_t mul(uint8_t a, uint8_t b) { return mul_table[a][b]; }
  static constexpr bool is_unit(uint8_t a) { return (a & 1) != 0; }
};

struct F4 {
  static constexpr RingId id = RingId::F4;
  static constexpr int size = 4;
  static constexpr std::string_view name = "F4";
  // 'w' is the root of x^2 + x + 1, 'W' = 1 + w.
  static constexpr std::string_view alphabet = "01wW";
  static constexpr auto mul_table =
      detail::make_mul_table<4>(detail::f4_mul_formula);
  static constexpr uint8_t mul(uint8_t a, uint8_t b) { return mul_table[a][b]; }
  static constexpr bool is_unit(uint8_t a) { return a != 0; }
};

struct F4u {
  static constexpr RingId id = RingId::F4u;
  static constexpr int size = 16;
  static constexpr std::string_view name = "F4uF4";
  static constexpr std::string_view alphabet = "0123456789abcdef";
  static constexpr auto mul_table =
      detail::make_mul_table<16>(detail::f4u_mul_formula);
  static constexpr uint8_t mul(uint8_t a, uint8_t b) { return mul_table[a][b]; }
  // Units are exactly the elements with nonzero F4 part.
  static constexpr bool is_unit(uint8_t a) { return (a & 3) != 0; }
};

template <class T>
concept Ring = std::is_same_v<T, F2> || std::is_same_v<T, F2u> ||
               std::is_same_v<T, F4> || std::is_same_v<T, F4u>;

/// One element of ring R, a thin strongly-typed wrapper over the packed byte.
template <Ring R>
struct Elem {
  uint8_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(int raw) : v(uint8_t(raw)) {}

  using ring = R;

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool is_unit() const { return R::is_unit(v); }

  friend constexpr Elem operator+(Elem a, Elem b) { return Elem(a.v ^ b.v); }
  friend constexpr Elem operator*(Elem a, Elem b) {
    return Elem(R::mul(a.v, b.v));
  }
  constexpr Elem& operator+=(Elem o) {
    v ^= o.v;
    return *this;
  }
  constexpr Elem& operator*=(Elem o) {
    v = R::mul(v, o.v);
    return *this;
  }
  constexpr Elem squared() const { return *this * *this; }

  friend constexpr bool operator==(Elem, Elem) = default;

  constexpr char symbol() const { return R::alphabet[v]; }

  /// Parses one symbol of this ring's alphabet; returns false on a foreign
  /// character.
  static constexpr bool parse(char ch, Elem& out) {
    for (int i = 0; i < R::size; ++i)
      if (R::alphabet[size_t(i)] == ch) {
        out = Elem(i);
        return true;
      }
    return false;
  }
};

// Handy constants; compose the rest by addition, e.g. one + w + uw.
namespace el {
namespace f2 {
inline constexpr Elem<F2> zero{0}, one{1};
}
namespace f2u {
inline constexpr Elem<F2u> zero{0}, one{1}, u{2}, one_u{3};
}
namespace f4 {
inline constexpr Elem<F4> zero{0}, one{1}, w{2}, W{3};
}
namespace f4u {
inline constexpr Elem<F4u> zero{0}, one{1}, w{2}, u{4}, uw{8};
}
}  // namespace el

/// Projection F4+uF4 -> F4 that forgets the u part: mu(a + b*u) = a.
constexpr Elem<F4> mu(Elem<F4u> x) { return Elem<F4>(x.v & 3); }

/// Embeds F4 into F4+uF4 with zero u part (the lift mu undoes).
constexpr Elem<F4u> embed(Elem<F4> a) { return Elem<F4u>(a.v); }

/// The four lifts a + b*u of a given F4 element, in increasing b order.
constexpr std::array<Elem<F4u>, 4> lifts_of(Elem<F4> a) {
  return {Elem<F4u>(a.v), Elem<F4u>(a.v | 4), Elem<F4u>(a.v | 8),
          Elem<F4u>(a.v | 12)};
}

/// Composes a lift from F4 part and u part: a + b*u.
constexpr Elem<F4u> lift(Elem<F4> a, Elem<F4> b) {
  return Elem<F4u>(a.v | (b.v << 2));
}

/// u part of an F4+uF4 element (the b of a + b*u).
constexpr Elem<F4> u_part(Elem<F4u> x) { return Elem<F4>((x.v >> 2) & 3); }

// Gray decompositions at element level.
//
// psi writes x in the basis {w, 1+w} over F2+uF2:  x = a*w + b*(1+w);
// phi writes y = a + b*u over F2 and emits the pair (b, a+b).

struct PsiPair {
  Elem<F2u> a, b;
};

constexpr PsiPair psi_split(Elem<F4u> x) {
  const uint8_t x0 = x.v & 1, x1 = (x.v >> 1) & 1;
  const uint8_t x2 = (x.v >> 2) & 1, x3 = (x.v >> 3) & 1;
  return {Elem<F2u>((x0 ^ x1) | ((x2 ^ x3) << 1)), Elem<F2u>(x0 | (x2 << 1))};
}

struct PhiPair {
  uint8_t first, second;  // (b, a+b)
};

constexpr PhiPair phi_split(Elem<F2u> y) {
  const uint8_t a = y.v & 1, b = (y.v >> 1) & 1;
  return {b, uint8_t(a ^ b)};
}

/// psi restricted to F4 (u part zero): x = a*w + b*(1+w) with a, b binary.
constexpr PhiPair f4_split(Elem<F4> x) {
  const uint8_t x0 = x.v & 1, x1 = (x.v >> 1) & 1;
  return {uint8_t(x0 ^ x1), x0};  // (a, b)
}

namespace detail {
constexpr std::array<int, 16> make_lee_table() {
  std::array<int, 16> t{};
  for (int v = 0; v < 16; ++v) {
    const PsiPair p = psi_split(Elem<F4u>(v));
    const PhiPair qa = phi_split(p.a), qb = phi_split(p.b);
    t[size_t(v)] = qa.first + qb.first + qa.second + qb.second;
  }
  return t;
}
}  // namespace detail

/// Lee weight of an F4+uF4 element: the Hamming weight of its binary Gray
/// image under phi(psi(.)).
inline constexpr std::array<int, 16> lee_weight_table =
    detail::make_lee_table();

constexpr int lee_weight(Elem<F4u> x) { return lee_weight_table[x.v]; }

/// True for units c with c*c = 1 (the admissible extension constants).
template <Ring R>
constexpr bool is_self_inverse_unit(Elem<R> c) {
  return c.is_unit() && c * c == Elem<R>(1);
}

template <Ring R>
constexpr int count_self_inverse_units() {
  int n = 0;
  for (int v = 0; v < R::size; ++v)
    if (is_self_inverse_unit(Elem<R>(v))) ++n;
  return n;
}

constexpr std::string_view ring_name(RingId id) {
  switch (id) {
    case RingId::F2: return F2::name;
    case RingId::F2u: return F2u::name;
    case RingId::F4: return F4::name;
    case RingId::F4u: return F4u::name;
  }
  return "?";
}

}  // namespace sdc
