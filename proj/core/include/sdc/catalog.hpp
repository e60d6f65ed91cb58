#pragma once

// Bundled data: the seven named codes over F4+uF4 (K1..K3, L1..L4), the F4
// base codes they project onto, and tables 1-6 of the verification catalog
// (constructions with their reported binary parameters, and extension
// vectors with the reported enumerator parameters).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/linalg.hpp"
#include "sdc/qdc.hpp"

namespace sdc::catalog {

std::vector<std::string> code_names();  // {"K1","K2","K3","L1","L2","L3","L4"}
bool is_code_name(std::string_view name);
RingCode<F4u> code(std::string_view name);  // throws on unknown names

/// A quadratic double circulant base over F4 whose lifts are searched:
/// the circulant first row plus, for bordered codes, (lambda, beta, gamma).
struct F4Base {
  std::string name;
  int p = 0;
  Vec<F4> first_row;
  std::optional<std::array<Elem<F4>, 3>> border;
};

std::vector<std::string> base_names();  // {"P7-F4", "B7-F4"}
F4Base base(std::string_view name);
RingCode<F4> base_code(const F4Base& b);

/// Table 1: built-in self-dual QDC family members with their reported
/// binary parameters.
struct QdcRow {
  int p;
  const char* code_name;  // name within selfdual_qdc_family(p)
  int n, k, d;
  SelfDualType type;
};
std::span<const QdcRow> table1();

/// Table 2: the L codes and their reported beta in W64,1.
struct LiftRow {
  const char* code_name;
  int beta;
};
std::span<const LiftRow> table2();

/// Rows of the extension tables. `x` uses the F2 alphabet for tables 3-5
/// and the F2+uF2 alphabet (0, 1, u, 3) for table 6; `c` is "1" or "1+u".
struct ExtRow {
  const char* base;   // K1..K3 or L1..L4
  const char* x;
  const char* c;
  int beta;
  int gamma;          // -1 when the family carries no gamma
};

std::span<const ExtRow> table3();  // F2 extensions of gray(K_i): [58,29,10], W58,2
std::span<const ExtRow> table4();  // standard-form F2 extensions of gray(L_i): [66,33,12], W66,3
std::span<const ExtRow> table5();  // F2 extensions of gray(L_i): [66,33,12], W66,3
std::span<const ExtRow> table6();  // F2+uF2 extensions of psi(L_i): [68,34,12], W68,2

std::span<const ExtRow> table(int id);  // 3..6

}  // namespace sdc::catalog
