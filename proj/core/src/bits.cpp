#include "sdc/bits.hpp"

#include <numeric>

namespace sdc {

RrefResult rref(BitMatrix& m) {
  std::vector<size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_ordered(m, order);
}

RrefResult rref_ordered(BitMatrix& m, std::span<const size_t> col_order) {
  RrefResult res;
  size_t next_row = 0;
  for (size_t col : col_order) {
    if (next_row == m.rows()) break;
    size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(next_row, pivot);
    for (size_t i = 0; i < m.rows(); ++i)
      if (i != next_row && m.get(i, col)) m.xor_row(i, next_row);
    res.pivot_cols.push_back(col);
    ++next_row;
  }
  res.rank = next_row;
  return res;
}

bool reduce_against(const BitMatrix& rref_m, const RrefResult& info,
                    BitVec& v) {
  for (size_t i = 0; i < info.rank; ++i)
    if (v.get(info.pivot_cols[i])) v ^= rref_m.row(i);
  return v.is_zero();
}

}  // namespace sdc
