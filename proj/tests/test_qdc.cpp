#include "doctest.h"
#include "sdc/bincode.hpp"
#include "sdc/qdc.hpp"

#include <random>

using namespace sdc;

namespace {

template <Ring R>
QRCirculantSpec<R> spec(int p, int a, int b, int c) {
  return {p, Elem<R>(a), Elem<R>(b), Elem<R>(c)};
}

}  // namespace

TEST_CASE("quadratic residues") {
  CHECK(quadratic_residues(3) == std::vector<int>{1});
  CHECK(quadratic_residues(7) == std::vector<int>{1, 2, 4});
  CHECK(quadratic_residues(11) == std::vector<int>{1, 3, 4, 5, 9});
  CHECK(quadratic_residues(13).size() == 6);
  CHECK_THROWS_AS(quadratic_residues(9), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_residues(2), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_residues(1), std::invalid_argument);
}

TEST_CASE("first row placement") {
  using namespace el::f4;
  // Q_3(a, b, c) first row is (a, b, c)
  const auto q3 = build_Q<F4>({3, one, w, W});
  CHECK(q3(0, 0) == one);
  CHECK(q3(0, 1) == w);
  CHECK(q3(0, 2) == W);
  // Q_7(0, 1+w, w): residues {1,2,4} get 1+w
  const auto q7 = build_Q<F4>({7, zero, W, w});
  const Vec<F4> want = {zero, W, W, w, W, w, w};
  for (size_t j = 0; j < 7; ++j) CHECK(q7(0, j) == want[j]);
  // all-zero spec gives the zero matrix
  CHECK(build_Q<F4>({5, zero, zero, zero}).is_zero());
}

TEST_CASE("circulant structure and transpose pattern") {
  using namespace el::f4u;
  const auto q = build_Q<F4u>({11, u, one + w, w + uw});
  for (size_t i = 1; i < 11; ++i)
    for (size_t j = 0; j < 11; ++j)
      CHECK(q(i, j) == q(i - 1, (j + 11 - 1) % 11));
  // transpose is circulant with first row r'[0] = r[0], r'[i] = r[p-i]
  const auto qt = q.transposed();
  for (size_t j = 1; j < 11; ++j) CHECK(qt(0, j) == q(0, 11 - j));
  for (size_t i = 1; i < 11; ++i)
    for (size_t j = 0; j < 11; ++j)
      CHECK(qt(i, j) == qt(i - 1, (j + 11 - 1) % 11));
}

TEST_CASE("product identity, exhaustive over F2 and F2+uF2") {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          CHECK(product_identity_check(spec<F2>(p, a, b, c)).agree);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          CHECK(product_identity_check(spec<F2u>(p, a, b, c)).agree);
  }
}

TEST_CASE("product identity, random F4uF4 triples") {
  std::mt19937_64 eng(20240817);
  const int primes[] = {3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = primes[trial % 5];
    const auto s = spec<F4u>(p, int(eng() & 15), int(eng() & 15), int(eng() & 15));
    CHECK(product_identity_check(s).agree);
  }
}

TEST_CASE("the worked product: Q_7(u, 1+w, w+uw) squares to the identity") {
  using namespace el::f4u;
  const QRCirculantSpec<F4u> s{7, u, one + w, w + uw};
  const auto res = product_identity_check(s);
  CHECK(res.agree);
  CHECK(res.direct.is_identity());
  // and the trivial one
  const auto res1 = product_identity_check(spec<F4u>(11, 1, 0, 0));
  CHECK(res1.direct.is_identity());
}

TEST_CASE("builders emit the advertised block shapes") {
  using namespace el::f4u;
  const auto p7 = build_P<F4u>({7, u, one + w, w + uw});
  CHECK(p7.gen.rows() == 7);
  CHECK(p7.gen.cols() == 14);
  CHECK(p7.standard_form);

  const auto b3 = build_B<F4u>({3, one, u + uw, one},
                               {u + uw, one + u + uw, one + u + uw});
  CHECK(b3.gen.rows() == 4);
  CHECK(b3.gen.cols() == 8);
  // border layout: lambda at (0, m), beta across the top, gamma down the side
  CHECK(b3.gen(0, 4) == u + uw);
  CHECK(b3.gen(0, 5) == one + u + uw);
  CHECK(b3.gen(1, 4) == one + u + uw);
  CHECK(b3.gen(1, 5) == build_Q<F4u>({3, one, u + uw, one})(0, 0));
}

TEST_CASE("self-duality checks") {
  using namespace el::f4u;
  CHECK(is_self_dual(build_P<F4u>({7, u, one + w, w + uw})));

  // P_7(0, 1+w, w) over F4 is self-dual
  CHECK(is_self_dual(build_P<F4>({7, el::f4::zero, el::f4::W, el::f4::w})));

  // [I | I] over F2 is self-dual, [I | 0] is not
  RingCode<F2> ii{Mat<F2>(3, 6), true};
  for (size_t i = 0; i < 3; ++i) {
    ii.gen(i, i) = Elem<F2>(1);
    ii.gen(i, 3 + i) = Elem<F2>(1);
  }
  CHECK(is_self_dual(ii));
  RingCode<F2> i0{Mat<F2>(3, 6), true};
  for (size_t i = 0; i < 3; ++i) i0.gen(i, i) = Elem<F2>(1);
  CHECK(!is_self_dual(i0));

  // all-zero bordered arguments give [I | 0]
  RingCode<F4u> bz = build_B<F4u>({3, Elem<F4u>(0), Elem<F4u>(0), Elem<F4u>(0)},
                                  {Elem<F4u>(0), Elem<F4u>(0), Elem<F4u>(0)});
  CHECK(!is_self_dual(bz));

  // non-[I|M] generators are rejected
  RingCode<F2> bad{Mat<F2>(2, 4), false};
  CHECK_THROWS_AS(is_self_dual(bad), std::invalid_argument);
}

TEST_CASE("family members are self-dual for p in {3, 7, 11, 19, 23}") {
  for (int p : {3, 7, 11, 19, 23}) {
    const auto family = selfdual_qdc_family(p);
    CHECK(family.size() == 2);
    for (const FamilyCode& f : family) {
      INFO("p=" << p << " " << f.name);
      CHECK(is_self_dual(f.code));
    }
  }
  CHECK_THROWS_AS(selfdual_qdc_family(5), std::invalid_argument);
  CHECK_THROWS_AS(selfdual_qdc_family(13), std::invalid_argument);
  CHECK_THROWS_AS(selfdual_qdc_family(4), std::invalid_argument);
}
