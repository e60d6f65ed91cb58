#include "doctest.h"
#include "sdc/gray.hpp"
#include "sdc/linalg.hpp"
#include "sdc/rings.hpp"

#include <random>
#include <sstream>

using namespace sdc;

namespace {

// Frozen product table for F4+uF4, derived separately with polynomial
// arithmetic in F2[w,u]/(w^2+w+1, u^2).
constexpr uint8_t kF4uMul[16][16] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {0, 2, 3, 1, 8, 10, 11, 9, 12, 14, 15, 13, 4, 6, 7, 5},
    {0, 3, 1, 2, 12, 15, 13, 14, 4, 7, 5, 6, 8, 11, 9, 10},
    {0, 4, 8, 12, 0, 4, 8, 12, 0, 4, 8, 12, 0, 4, 8, 12},
    {0, 5, 10, 15, 4, 1, 14, 11, 8, 13, 2, 7, 12, 9, 6, 3},
    {0, 6, 11, 13, 8, 14, 3, 5, 12, 10, 7, 1, 4, 2, 15, 9},
    {0, 7, 9, 14, 12, 11, 5, 2, 4, 3, 13, 10, 8, 15, 1, 6},
    {0, 8, 12, 4, 0, 8, 12, 4, 0, 8, 12, 4, 0, 8, 12, 4},
    {0, 9, 14, 7, 4, 13, 10, 3, 8, 1, 6, 15, 12, 5, 2, 11},
    {0, 10, 15, 5, 8, 2, 7, 13, 12, 6, 3, 9, 4, 14, 11, 1},
    {0, 11, 13, 6, 12, 7, 1, 10, 4, 15, 9, 2, 8, 3, 5, 14},
    {0, 12, 4, 8, 0, 12, 4, 8, 0, 12, 4, 8, 0, 12, 4, 8},
    {0, 13, 6, 11, 4, 9, 2, 15, 8, 5, 14, 3, 12, 1, 10, 7},
    {0, 14, 7, 9, 8, 6, 15, 1, 12, 2, 11, 5, 4, 10, 3, 13},
    {0, 15, 5, 10, 12, 3, 9, 6, 4, 11, 1, 14, 8, 7, 13, 2},
};

constexpr int kLee[16] = {0, 2, 1, 1, 4, 2, 3, 3, 2, 2, 1, 3, 2, 2, 3, 1};

template <Ring R>
void check_ring_laws() {
  const int q = R::size;
  for (int a = 0; a < q; ++a) {
    const Elem<R> ea(a);
    CHECK(ea + Elem<R>(0) == ea);
    CHECK(ea * Elem<R>(1) == ea);
    CHECK((ea + ea).is_zero());  // characteristic 2
    for (int b = 0; b < q; ++b) {
      const Elem<R> eb(b);
      CHECK(ea + eb == eb + ea);
      CHECK(ea * eb == eb * ea);
      // Frobenius additivity
      CHECK((ea + eb).squared() == ea.squared() + eb.squared());
      for (int c = 0; c < q; ++c) {
        const Elem<R> ec(c);
        CHECK((ea * eb) * ec == ea * (eb * ec));
        CHECK(ea * (eb + ec) == ea * eb + ea * ec);
      }
    }
  }
}

template <Ring R>
Vec<R> vec(std::initializer_list<int> vals) {
  Vec<R> v;
  for (int x : vals) v.push_back(Elem<R>(x));
  return v;
}

std::string bits(const BitVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += v.get(i) ? '1' : '0';
  return s;
}

}  // namespace

TEST_CASE("ring laws hold in all four rings") {
  check_ring_laws<F2>();
  check_ring_laws<F2u>();
  check_ring_laws<F4>();
  check_ring_laws<F4u>();
}

TEST_CASE("F4uF4 product table matches the frozen polynomial table") {
  std::ostringstream dump;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      CHECK(F4u::mul(uint8_t(a), uint8_t(b)) == kF4uMul[a][b]);
      dump << int(F4u::mul(uint8_t(a), uint8_t(b))) << (b == 15 ? "" : " ");
    }
    dump << "\n";
  }
  INFO("F4uF4 multiplication table:\n" << dump.str());
  // spot values: w*w = 1+w, u*u = 0
  using namespace el::f4u;
  CHECK(w * w == one + w);
  CHECK((u * u).is_zero());
  // the mixed products behind the pure family: ab + ac + bc for
  // (a,b,c) = (u, 1+w, w+uw) give 1, and adding b^2 + c^2 = 1 kills the
  // off-diagonal circulant coefficient
  const Elem<F4u> b = one + w, c = w + uw;
  const Elem<F4u> mixed = u * b + u * c + b * c;
  CHECK(mixed == one);
  CHECK((mixed + b.squared() + c.squared()).is_zero());
}

TEST_CASE("subring tables embed consistently") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      // F4 sits in the low two bits of F4uF4
      CHECK(F4::mul(uint8_t(a), uint8_t(b)) == F4u::mul(uint8_t(a), uint8_t(b)));
      // F2+uF2 maps into F4uF4 by 1 -> 1, u -> u (bit1 -> bit2)
      const auto up = [](int x) { return uint8_t((x & 1) | ((x >> 1) << 2)); };
      CHECK(up(F2u::mul(uint8_t(a), uint8_t(b))) == F4u::mul(up(a), up(b)));
    }
}

TEST_CASE("psi decomposition") {
  using namespace el::f4u;
  // 1 = 1*w + 1*(1+w)
  const PsiPair p1 = psi_split(one);
  CHECK(p1.a == el::f2u::one);
  CHECK(p1.b == el::f2u::one);
  // w + uw = (1+u)w + 0*(1+w)
  const PsiPair p2 = psi_split(w + uw);
  CHECK(p2.a == el::f2u::one_u);
  CHECK(p2.b == el::f2u::zero);
  // decomposition is exact for all 16 elements: x = a*w + b*(1+w)
  for (int v = 0; v < 16; ++v) {
    const Elem<F4u> x(v);
    const PsiPair p = psi_split(x);
    const auto lift_f2u = [](Elem<F2u> y) {
      return Elem<F4u>((y.v & 1) | ((y.v >> 1) << 2));
    };
    CHECK(lift_f2u(p.a) * w + lift_f2u(p.b) * (one + w) == x);
  }
}

TEST_CASE("gray map examples") {
  using namespace el;
  // psi on a one-symbol vector
  Vec<F4u> v1 = {f4u::one};
  CHECK(gray_psi(v1) == vec<F2u>({1, 1}));
  Vec<F4u> vz(5, f4u::zero);
  CHECK(gray_psi(vz) == Vec<F2u>(10, f2u::zero));
  Vec<F4u> v2 = {f4u::w + f4u::uw};
  CHECK(gray_psi(v2) == vec<F2u>({3, 0}));

  // phi: a+bu -> (b, a+b)
  Vec<F2u> w1 = {f2u::one_u};
  CHECK(bits(gray_phi(w1)) == "10");
  Vec<F2u> w2 = {f2u::u};
  CHECK(bits(gray_phi(w2)) == "11");

  // composed image of 1 has Hamming weight 2
  CHECK(gray_phi_psi(v1).weight() == 2);
  CHECK(bits(gray_phi_psi(v1)) == "0011");
}

TEST_CASE("lee weights match the frozen table and the map composition") {
  std::ostringstream dump;
  for (int v = 0; v < 16; ++v) {
    const Elem<F4u> x(v);
    CHECK(lee_weight(x) == kLee[v]);
    Vec<F4u> single = {x};
    CHECK(size_t(lee_weight(x)) == gray_phi_psi(single).weight());
    dump << lee_weight(x) << " ";
  }
  INFO("lee weight table (index = packed element): " << dump.str());
  using namespace el::f4u;
  CHECK(lee_weight(u) == 4);
  CHECK(lee_weight(one + w) == 1);
  // the maps give weight 1 here; conventions that interleave blocks or swap
  // the psi components give other values, so this pin matters
  CHECK(lee_weight(w + uw) == 1);
}

TEST_CASE("mu is a surjective ring homomorphism with mu(lift) = id") {
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const Elem<F4u> x(a), y(b);
      CHECK(mu(x * y) == mu(x) * mu(y));
      CHECK(mu(x + y) == mu(x) + mu(y));
    }
  for (int a = 0; a < 4; ++a) {
    const Elem<F4> base(a);
    const auto ls = lifts_of(base);
    for (const Elem<F4u> l : ls) CHECK(mu(l) == base);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) CHECK(ls[i] != ls[j]);
  }
  using namespace el::f4u;
  CHECK(mu(one + u + w) == el::f4::one + el::f4::w);
  CHECK(mu(uw).is_zero());
}

TEST_CASE("self-inverse units") {
  CHECK(count_self_inverse_units<F2>() == 1);
  CHECK(count_self_inverse_units<F2u>() == 2);
  CHECK(count_self_inverse_units<F4u>() == 4);
  using namespace el::f2u;
  CHECK(is_self_inverse_unit(one));
  CHECK(is_self_inverse_unit(one_u));
  CHECK(!is_self_inverse_unit(u));
  // F4uF4: exactly {1, 1+u, 1+uw, 1+u+uw}
  using namespace el::f4u;
  for (int v = 0; v < 16; ++v) {
    const Elem<F4u> x(v);
    const bool expect = (v & 3) == 1;
    CHECK(is_self_inverse_unit(x) == expect);
  }
}

TEST_CASE("gray maps preserve orthogonality (exhaustive on short vectors)") {
  // psi: length 1 and 2 over F4uF4
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      Vec<F4u> x = {Elem<F4u>(a)}, y = {Elem<F4u>(b)};
      if (!inner_product<F4u>(x, y).is_zero()) continue;
      const Vec<F2u> px = gray_psi(x), py = gray_psi(y);
      CHECK(inner_product<F2u>(px, py).is_zero());
      CHECK(!gray_phi(px).dot(gray_phi(py)));
    }
  std::mt19937_64 eng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    Vec<F4u> x = {Elem<F4u>(int(eng() & 15)), Elem<F4u>(int(eng() & 15))};
    Vec<F4u> y = {Elem<F4u>(int(eng() & 15)), Elem<F4u>(int(eng() & 15))};
    if (!inner_product<F4u>(x, y).is_zero()) continue;
    CHECK(inner_product<F2u>(gray_psi(x), gray_psi(y)).is_zero());
  }
  // phi: exhaustive on length 2 over F2+uF2
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      Vec<F2u> x = {Elem<F2u>(a & 3), Elem<F2u>(a >> 2)};
      Vec<F2u> y = {Elem<F2u>(b & 3), Elem<F2u>(b >> 2)};
      if (!inner_product<F2u>(x, y).is_zero()) continue;
      CHECK(!gray_phi(x).dot(gray_phi(y)));
    }
}

TEST_CASE("gray maps are additive") {
  std::mt19937_64 eng(999);
  for (int trial = 0; trial < 500; ++trial) {
    Vec<F4u> x(4), y(4), s(4);
    for (size_t i = 0; i < 4; ++i) {
      x[i] = Elem<F4u>(int(eng() & 15));
      y[i] = Elem<F4u>(int(eng() & 15));
      s[i] = x[i] + y[i];
    }
    Vec<F2u> ps = gray_psi(s);
    Vec<F2u> px = gray_psi(x), py = gray_psi(y);
    for (size_t i = 0; i < ps.size(); ++i) CHECK(ps[i] == px[i] + py[i]);
    CHECK(bits(gray_phi(ps)) == bits(gray_phi(px) ^ gray_phi(py)));
  }
}

TEST_CASE("symbol alphabets parse and print") {
  for (int v = 0; v < 4; ++v) {
    Elem<F2u> e;
    CHECK(Elem<F2u>::parse(F2u::alphabet[size_t(v)], e));
    CHECK(e.v == v);
  }
  Elem<F4> w;
  CHECK(Elem<F4>::parse('w', w));
  CHECK(w == el::f4::w);
  Elem<F4> W;
  CHECK(Elem<F4>::parse('W', W));
  CHECK(W == el::f4::W);
  Elem<F4u> h;
  CHECK(Elem<F4u>::parse('a', h));
  CHECK(h.v == 10);
  Elem<F2> reject;
  CHECK(!Elem<F2>::parse('u', reject));
}
