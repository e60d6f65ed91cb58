#include "doctest.h"
#include "sdc/bincode.hpp"
#include "sdc/catalog.hpp"
#include "sdc/enumerator.hpp"
#include "sdc/qdc.hpp"

#include <map>
#include <random>

using namespace sdc;

namespace {

BitMatrix rows_from_strings(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.set(i, j, rows[i][j] == '1');
  return m;
}

BinaryCode extended_hamming8() {
  return BinaryCode::from_generator(rows_from_strings({
      "10000111",
      "01001011",
      "00101101",
      "00011110",
  }));
}

}  // namespace

TEST_CASE("rref is deterministic and canonical") {
  BitMatrix m = rows_from_strings({"1101", "0110", "1010"});
  BitMatrix m2 = m;
  const RrefResult r1 = rref(m);
  const RrefResult r2 = rref(m2);
  CHECK(m == m2);
  CHECK(r1.rank == r2.rank);
  CHECK(r1.rank == 3);
  // reduced: each pivot column has a single one
  for (size_t i = 0; i < r1.rank; ++i) {
    size_t ones = 0;
    for (size_t r = 0; r < m.rows(); ++r)
      if (m.get(r, r1.pivot_cols[i])) ++ones;
    CHECK(ones == 1);
  }
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(
      BinaryCode::from_generator(rows_from_strings({"1100", "0110", "1010"})),
      std::invalid_argument);
  const BinaryCode c =
      BinaryCode::from_span_rows(rows_from_strings({"1100", "0110", "1010"}));
  CHECK(c.dimension() == 2);
  CHECK(c.length() == 4);
}

TEST_CASE("hand-enumerated weight distribution") {
  // [I_2 | I_2] generates {0000, 1010, 0101, 1111}
  const BinaryCode c =
      BinaryCode::from_generator(rows_from_strings({"1010", "0101"}));
  const WeightDistribution dist = weight_distribution(c, 1);
  CHECK(dist.counts == std::vector<uint64_t>{1, 0, 2, 0, 1});
  CHECK(dist.total() == 4);
  CHECK(dist.min_nonzero_weight() == 2);
}

TEST_CASE("distribution invariants on a self-dual code") {
  const BinaryCode c = extended_hamming8();
  const WeightDistribution dist = weight_distribution(c);
  CHECK(dist.total() == 16);
  CHECK(dist.counts[0] == 1);
  for (size_t w = 0; w <= 8; ++w) {
    CHECK(dist.counts[w] == dist.counts[8 - w]);
    if (w % 2 == 1) CHECK(dist.counts[w] == 0);
  }
  CHECK(dist.counts[4] == 14);
  CHECK(classify_type(c) == SelfDualType::TypeII);
  CHECK(c.contains_all_ones());
}

TEST_CASE("thread count does not change the distribution") {
  const BinaryCode c = gray_image(catalog::code("K1"));
  const WeightDistribution a = weight_distribution(c, 1);
  const WeightDistribution b = weight_distribution(c, 2);
  const WeightDistribution d = weight_distribution(c, 5);
  CHECK(a.counts == b.counts);
  CHECK(a.counts == d.counts);
}

TEST_CASE("minimum distance engines") {
  // repetition [2,1]
  const BinaryCode rep = BinaryCode::from_generator(rows_from_strings({"11"}));
  CHECK(min_distance(rep) == 2);
  CHECK(min_distance_enumeration(rep) == 2);
  CHECK(min_distance_bz(rep) == 2);

  // identity [4,4] has distance 1
  const BinaryCode id4 = BinaryCode::from_generator(
      rows_from_strings({"1000", "0100", "0010", "0001"}));
  CHECK(min_distance_bz(id4) == 1);
  CHECK(min_distance_enumeration(id4) == 1);

  const BinaryCode ham = extended_hamming8();
  CHECK(min_distance_enumeration(ham) == 4);
  CHECK(min_distance_bz(ham) == 4);

  // random low-rate codes: the two engines agree
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 25; ++trial) {
    BitMatrix m(6, 24);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 24; ++j) m.set(i, j, eng() & 1);
    const BinaryCode c = BinaryCode::from_span_rows(m);
    if (c.dimension() == 0) continue;
    CHECK(min_distance_enumeration(c, 1) == min_distance_bz(c, 1));
  }
}

TEST_CASE("gray image dimensions and the base F4 code") {
  using namespace el::f4;
  // P_7(0, 1+w, w) over F4 -> [28, 14, 6]
  const BinaryCode bin = gray_image(build_P<F4>({7, zero, W, w}));
  CHECK(bin.length() == 28);
  CHECK(bin.dimension() == 14);
  CHECK(classify_type(bin) != SelfDualType::NotSelfDual);
  CHECK(min_distance(bin) == 6);
}

TEST_CASE("gray image of the pure length-14 family code is [56,28,12] Type II") {
  using namespace el::f4u;
  const BinaryCode bin = gray_image(build_P<F4u>({7, u, one + w, w + uw}));
  CHECK(bin.length() == 56);
  CHECK(bin.dimension() == 28);
  CHECK(classify_type(bin) == SelfDualType::TypeII);
  const int d_enum = min_distance_enumeration(bin);
  const int d_bz = min_distance_bz(bin);
  CHECK(d_enum == 12);
  CHECK(d_bz == 12);
}

TEST_CASE("gray images of the bundled lifted codes are [56,28,10]") {
  for (const char* name : {"K1", "K2", "K3"}) {
    const BinaryCode bin = gray_image(catalog::code(name));
    INFO(name);
    CHECK(bin.length() == 56);
    CHECK(bin.dimension() == 28);
    CHECK(classify_type(bin) != SelfDualType::NotSelfDual);
    CHECK(min_distance(bin) == 10);
  }
}

TEST_CASE("gray image of the zero code") {
  RingCode<F4u> zero{Mat<F4u>(2, 3), false};
  const BinaryCode bin = gray_image(zero);
  CHECK(bin.dimension() == 0);
  CHECK(bin.length() == 12);
  const WeightDistribution dist = weight_distribution(bin);
  CHECK(dist.total() == 1);
  CHECK(dist.counts[0] == 1);
}

TEST_CASE("self-duality carries over the gray map") {
  for (int p : {3, 7}) {
    for (const FamilyCode& f : selfdual_qdc_family(p)) {
      const BinaryCode bin = gray_image(f.code);
      CHECK(bin.dimension() * 2 == bin.length());
      CHECK(classify_type(bin) != SelfDualType::NotSelfDual);
    }
  }
}

TEST_CASE("rains bound") {
  CHECK(rains_bound(58) == 12);
  CHECK(rains_bound(68) == 12);
  CHECK(rains_bound(24) == 8);
  CHECK(rains_bound(22) == 6);
  CHECK(rains_bound(46) == 10);  // 46 = 22 (mod 24)
  CHECK(rains_bound(64) == 12);
  CHECK(rains_bound(8) == 4);
  CHECK(is_extremal(extended_hamming8()));
}

TEST_CASE("capacity cap at k = 34") {
  BitMatrix m(35, 70);
  for (size_t i = 0; i < 35; ++i) {
    m.set(i, i, true);
    m.set(i, 35 + i, true);
  }
  const BinaryCode c = BinaryCode::from_generator(m);
  CHECK_THROWS_AS(weight_distribution(c), capacity_error);
  // min_distance still works (the engine switches past k = 28)
  CHECK(min_distance(c) == 2);
}

TEST_CASE("standard form") {
  const BinaryCode c = gray_image(catalog::code("L1"));
  const StandardForm sf = standard_form(c);
  CHECK(sf.a.rows() == 32);
  CHECK(sf.a.cols() == 32);
  CHECK(sf.col_perm.size() == 64);
  // [I | A] under the permutation regenerates the same code
  BitMatrix g(32, 64);
  for (size_t i = 0; i < 32; ++i) {
    g.set(i, sf.col_perm[i], true);
    for (size_t j = 0; j < 32; ++j)
      if (sf.a.get(i, j)) g.set(i, sf.col_perm[32 + j], true);
  }
  const BinaryCode rebuilt = BinaryCode::from_generator(g);
  CHECK(rebuilt.rref_generator() == c.rref_generator());
  // A A^T = I for a self-dual [I | A]
  RingCode<F2> ia{Mat<F2>(32, 64), true};
  for (size_t i = 0; i < 32; ++i) {
    ia.gen(i, i) = Elem<F2>(1);
    for (size_t j = 0; j < 32; ++j)
      ia.gen(i, 32 + j) = Elem<F2>(sf.a.get(i, j) ? 1 : 0);
  }
  CHECK(is_self_dual(ia));
}

TEST_CASE("synthetic enumerator identification") {
  const auto dist_for = [](int n, std::map<int, long long> low) {
    WeightDistribution d;
    d.counts.assign(size_t(n) + 1, 0);
    d.counts[0] = 1;
    for (auto [w, a] : low) d.counts[size_t(w)] = uint64_t(a);
    return d;
  };
  const auto dummy = [](int n) {
    BitMatrix m(size_t(n) / 2, size_t(n));
    for (size_t i = 0; i < size_t(n) / 2; ++i) {
      m.set(i, i, true);
      m.set(i, size_t(n) / 2 + i, true);
    }
    return BinaryCode::from_generator(m);
  };

  // W64,1 with beta = 18
  auto id = identify_enumerator(
      dummy(64), dist_for(64, {{12, 1312 + 16 * 18}, {14, 22016 - 64 * 18}}));
  CHECK(id == EnumeratorId{Family::W64_1, 18, std::nullopt});
  // W64,2 with beta = 80
  id = identify_enumerator(
      dummy(64), dist_for(64, {{12, 1312 + 16 * 80}, {14, 23040 - 64 * 80}}));
  CHECK(id == EnumeratorId{Family::W64_2, 80, std::nullopt});
  // W66,2 is pinned by its constants
  id = identify_enumerator(dummy(66), dist_for(66, {{12, 1690}, {14, 7990}}));
  CHECK(id.family == Family::W66_2);
  // W66,3 with beta = 35
  id = identify_enumerator(
      dummy(66), dist_for(66, {{12, 858 + 8 * 35}, {14, 18166 - 24 * 35}}));
  CHECK(id == EnumeratorId{Family::W66_3, 35, std::nullopt});
  // W68,2 with (beta, gamma) = (67, 1)
  id = identify_enumerator(
      dummy(68),
      dist_for(68, {{12, 442 + 4 * 67}, {14, 14960 - 8 * 67 - 256 * 1}}));
  CHECK(id == EnumeratorId{Family::W68_2, 67, 1});
  // W68,1 with beta = 104
  id = identify_enumerator(
      dummy(68), dist_for(68, {{12, 442 + 4 * 104}, {14, 10864 - 8 * 104}}));
  CHECK(id == EnumeratorId{Family::W68_1, 104, std::nullopt});
  // W58,1 with beta = 55
  id = identify_enumerator(
      dummy(58), dist_for(58, {{10, 165 - 2 * 55}, {12, 5078 + 2 * 55}}));
  CHECK(id == EnumeratorId{Family::W58_1, 55, std::nullopt});

  // unmatched relations raise with the signature attached
  try {
    identify_enumerator(dummy(64), dist_for(64, {{12, 1313}, {14, 9}}));
    CHECK(false);
  } catch (const ClassificationError& e) {
    CHECK(e.signature.size() == 5);
  }
}

TEST_CASE("re-expansion matches the family constants") {
  const EnumeratorId id{Family::W64_1, 18, std::nullopt};
  const auto low = expected_low_coefficients(id);
  CHECK(low.at(12) == 1600);
  CHECK(low.at(14) == 20864);
  const EnumeratorId id2{Family::W58_2, 1, 32};
  CHECK(expected_low_coefficients(id2).at(10) == 319 - 24 - 64);
}
