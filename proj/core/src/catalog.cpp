#include "sdc/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sdc::catalog {

namespace {

struct NamedRow {
  const char* name;
  std::array<Elem<F4u>, 7> row;                       // circulant first row
  std::optional<std::array<Elem<F4u>, 3>> border;     // lambda, beta, gamma
};

const std::array<NamedRow, 7>& named_rows() {
  using namespace el::f4u;
  static const std::array<NamedRow, 7> rows = {{
      {"K1",
       {uw, one + w + uw, one + u + w, w + uw, one + u + w + uw, w, u + w},
       std::nullopt},
      {"K2",
       {u + uw, one + w + uw, one + u + w + uw, u + w, one + w, w,
        u + w + uw},
       std::nullopt},
      {"K3",
       {uw, one + w, one + u + w, w + uw, one + w + uw, u + w + uw, w},
       std::nullopt},
      {"L1",
       {one, u + w + uw, w, one + w + uw, w + uw, one + w, one + u + w},
       {{uw, one + u + uw, one + uw}}},
      {"L2",
       {one + uw, u + w, w, one + u + w + uw, u + w + uw, one + u + w,
        one + w},
       {{uw, one + u + uw, one + uw}}},
      {"L3",
       {one + u, w, w, one + w, w, one + u + w + uw, one + u + w},
       {{u + uw, one + u + uw, one + uw}}},
      {"L4",
       {one + u + uw, w + uw, w, one + w + uw, u + w, one + w, one + u + w},
       {{u + uw, one + uw, one + uw}}},
  }};
  return rows;
}

RingCode<F4u> assemble(const NamedRow& r) {
  const Vec<F4u> row(r.row.begin(), r.row.end());
  const Mat<F4u> circ = build_circulant<F4u>(row);
  if (!r.border) {
    RingCode<F4u> code{Mat<F4u>(7, 14), true};
    for (size_t i = 0; i < 7; ++i) {
      code.gen(i, i) = Elem<F4u>(1);
      for (size_t j = 0; j < 7; ++j) code.gen(i, 7 + j) = circ(i, j);
    }
    return code;
  }
  const auto [lam, beta, gamma] = *r.border;
  RingCode<F4u> code{Mat<F4u>(8, 16), true};
  for (size_t i = 0; i < 8; ++i) code.gen(i, i) = Elem<F4u>(1);
  code.gen(0, 8) = lam;
  for (size_t j = 0; j < 7; ++j) code.gen(0, 9 + j) = beta;
  for (size_t i = 0; i < 7; ++i) {
    code.gen(1 + i, 8) = gamma;
    for (size_t j = 0; j < 7; ++j) code.gen(1 + i, 9 + j) = circ(i, j);
  }
  return code;
}

}  // namespace

std::vector<std::string> code_names() {
  std::vector<std::string> out;
  for (const NamedRow& r : named_rows()) out.emplace_back(r.name);
  return out;
}

bool is_code_name(std::string_view name) {
  for (const NamedRow& r : named_rows())
    if (name == r.name) return true;
  return false;
}

RingCode<F4u> code(std::string_view name) {
  for (const NamedRow& r : named_rows())
    if (name == r.name) return assemble(r);
  throw std::invalid_argument("catalog: unknown code " + std::string(name));
}

// ---------------------------------------------------------------------------
// F4 bases
// ---------------------------------------------------------------------------

std::vector<std::string> base_names() { return {"P7-F4", "B7-F4"}; }

F4Base base(std::string_view name) {
  using namespace el::f4;
  if (name == "P7-F4") {
    F4Base b{"P7-F4", 7, qr_first_row<F4>({7, zero, W, w}), std::nullopt};
    return b;
  }
  if (name == "B7-F4") {
    F4Base b{"B7-F4", 7, qr_first_row<F4>({7, one, w, W}),
             std::array<Elem<F4>, 3>{zero, one, one}};
    return b;
  }
  throw std::invalid_argument("catalog: unknown base " + std::string(name));
}

RingCode<F4> base_code(const F4Base& b) {
  const Mat<F4> circ = build_circulant<F4>(b.first_row);
  const size_t p = b.first_row.size();
  if (!b.border) {
    RingCode<F4> code{Mat<F4>(p, 2 * p), true};
    for (size_t i = 0; i < p; ++i) {
      code.gen(i, i) = Elem<F4>(1);
      for (size_t j = 0; j < p; ++j) code.gen(i, p + j) = circ(i, j);
    }
    return code;
  }
  const auto [lam, beta, gamma] = *b.border;
  const size_t m = p + 1;
  RingCode<F4> code{Mat<F4>(m, 2 * m), true};
  for (size_t i = 0; i < m; ++i) code.gen(i, i) = Elem<F4>(1);
  code.gen(0, m) = lam;
  for (size_t j = 0; j < p; ++j) code.gen(0, m + 1 + j) = beta;
  for (size_t i = 0; i < p; ++i) {
    code.gen(1 + i, m) = gamma;
    for (size_t j = 0; j < p; ++j) code.gen(1 + i, m + 1 + j) = circ(i, j);
  }
  return code;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

std::span<const QdcRow> table1() {
  static const QdcRow rows[] = {
      {3, "B3b", 32, 16, 8, SelfDualType::TypeII},
      {3, "B3a", 32, 16, 8, SelfDualType::TypeI},
      {7, "P7", 56, 28, 12, SelfDualType::TypeII},
      {7, "B7", 64, 32, 12, SelfDualType::TypeII},
      {11, "B11b", 96, 48, 12, SelfDualType::TypeII},
      {11, "B11a", 96, 48, 12, SelfDualType::TypeI},
  };
  return rows;
}

std::span<const LiftRow> table2() {
  static const LiftRow rows[] = {
      {"L1", 18},
      {"L2", 32},
      {"L3", 46},
      {"L4", 60},
  };
  return rows;
}

std::span<const ExtRow> table3() {
  static const ExtRow rows[] = {
      {"K1", "10011100000111010110110110010100100100010011110101110000", "1", 1, 32},
      {"K1", "10010010011100001101111010001111110011001111000101001111", "1", 1, 38},
      {"K1", "00111010100110000101110000110100011111011000001011001000", "1", 1, 40},
      {"K1", "00111111011100001001000010010000010000010000101010001000", "1", 2, 46},
      {"K2", "11010000110101000111011001001100010010100011100111101010", "1", 0, 28},
      {"K2", "01101011110110000100001101010100111100100100110110010111", "1", 1, 34},
      {"K3", "01110000010011000101111110000111010100000010101001100110", "1", 1, 28},
  };
  return rows;
}

std::span<const ExtRow> table4() {
  static const ExtRow rows[] = {
      {"L1", "01101010101010101101101110100100", "1", 35, -1},
      {"L1", "00100101110100100000100110110001", "1", 36, -1},
      {"L1", "10110000001001110101100111100001", "1", 37, -1},
      {"L1", "11100001011100101111010110010001", "1", 38, -1},
      {"L2", "01011001111111001001101010111001", "1", 43, -1},
      {"L2", "10110110001011100111101100111001", "1", 44, -1},
      {"L2", "00000010110011001100010111000011", "1", 47, -1},
      {"L2", "01101001101001111110011111100100", "1", 48, -1},
      {"L2", "10010010110101101101100111011110", "1", 51, -1},
      {"L3", "11001001111101100011101001000101", "1", 60, -1},
      {"L3", "01101001010111101100000011110011", "1", 67, -1},
      {"L4", "01010111010000001100100111001110", "1", 70, -1},
      {"L4", "00101101101000101100010011101100", "1", 75, -1},
  };
  return rows;
}

std::span<const ExtRow> table5() {
  static const ExtRow rows[] = {
      {"L2", "1100101011011100011110010011111101101001011100101110010100111111", "1", 45, -1},
      {"L2", "0011110011001011010001000001101110011100101111000010000111011100", "1", 46, -1},
      {"L3", "0000100000001000110000011100010000001011101000001000001011110011", "1", 61, -1},
      {"L4", "0001101001010010010010111101111101111110010111100001000011010001", "1", 71, -1},
      {"L4", "1111101001110110001000111011111101101101101011011000011111101110", "1", 73, -1},
      {"L4", "1110011001010110000001010111001000001110011111010101110110010101", "1", 74, -1},
      {"L4", "1010110101111010100111100111010001100000011100101110000000011001", "1", 76, -1},
      {"L4", "0111111111011001001011011001001111010101011001011110110101000010", "1", 77, -1},
      {"L4", "1100101100011101111011110101010011000001001010101111000111101111", "1", 78, -1},
      {"L4", "1011110101001100001100101110011000001110100011010110001011110011", "1", 79, -1},
      {"L4", "0000100100100100111100111011011010100100000001000101100111110110", "1", 80, -1},
  };
  return rows;
}

std::span<const ExtRow> table6() {
  static const ExtRow rows[] = {
      {"L1", "0300u01333u330uuu10011100131u111", "1+u", 67, 1},
      {"L1", "33010u0u003u11u013331uu13u130031", "1", 69, 1},
      {"L1", "u311uu0uu0101u01u0000u11310uu1u0", "1", 71, 1},
      {"L1", "3u0uu1u33030110031u1330u0011uuu1", "1+u", 107, 2},
      {"L1", "013311u1uuu1u103uu111300u3100u31", "1", 101, 3},
      {"L1", "00311u000u0uu101u301u13030111000", "1", 110, 3},
      {"L1", "0u111u000u0003u103u3u11030131u0u", "1", 122, 3},
      {"L1", "111u010u0u003u113001010103111031", "1", 123, 3},
      {"L2", "u11u0303u3u0113330uuu3031110u130", "1+u", 117, 1},
      {"L2", "30033u31u30301133uu13u311311101u", "1", 113, 2},
      {"L2", "11101u3001100uu3u133u1u3001u1130", "1+u", 132, 3},
      {"L3", "uu3113000031u11310011333u3u13u10", "1", 116, 1},
      {"L3", "30113uuuuu33uu03u1u3uu311u00u0u1", "1", 124, 1},
      {"L3", "313310uu3010u3003u003030u3031003", "1+u", 134, 1},
      {"L4", "1003u10u1030u10101u1001u00uuuu1u", "1", 121, 1},
      {"L4", "1000133u3010013uu13uuu11u031uuu1", "1", 122, 1},
      {"L4", "130u31133u31uu30u100u03u3110u31u", "1+u", 127, 1},
      {"L4", "101103310u133003000033u3uu111uu1", "1+u", 128, 1},
      {"L4", "30u103313u031100u13uu101u03011u3", "1", 130, 1},
      {"L4", "1u1u10uu0uu0u31u0u103u133u11333u", "1+u", 131, 1},
      {"L4", "10u011u001u310300330u03uu3uuu101", "1+u", 136, 1},
      {"L4", "330u0113u0uu3333u003u000uu010u33", "1", 157, 1},
      {"L4", "011uu103103111u00030031u0110331u", "1", 143, 2},
      {"L4", "00u1u0u1u1u30130u31u030011u00130", "1+u", 147, 2},
      {"L4", "uuu10uu30103u310u310u3uu1100u31u", "1+u", 149, 2},
      {"L4", "33uuu0u3uu110330u3010u110301u101", "1+u", 154, 2},
      {"L4", "330uu0030033031001010u310103u1u1", "1", 156, 2},
      {"L4", "0001uuu3u3u3u3100330u3001100033u", "1", 159, 2},
      {"L4", "3031u111133u01u133u1u00113303301", "1+u", 156, 3},
  };
  return rows;
}

std::span<const ExtRow> table(int id) {
  switch (id) {
    case 3: return table3();
    case 4: return table4();
    case 5: return table5();
    case 6: return table6();
  }
  throw std::invalid_argument("catalog: extension tables are numbered 3..6");
}

}  // namespace sdc::catalog
