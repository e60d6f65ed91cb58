#pragma once

// File formats: the matrix text format (`ring n k` header, one row of
// alphabet symbols per line), the weight distribution CSV and the JSON code
// record emitted by the search drivers.

#include <iosfwd>
#include <string>
#include <variant>

#include "sdc/bincode.hpp"
#include "sdc/extend.hpp"
#include "sdc/linalg.hpp"

namespace sdc {

using AnyCode =
    std::variant<RingCode<F2>, RingCode<F2u>, RingCode<F4>, RingCode<F4u>>;

RingId ring_of(const AnyCode& c);
size_t length_of(const AnyCode& c);

/// Parses one of "F2", "F2uF2", "F4", "F4uF4".
RingId parse_ring(const std::string& name);

template <Ring R>
std::string matrix_text(const RingCode<R>& code) {
  std::string out(R::name);
  out += " " + std::to_string(code.length()) + " " +
         std::to_string(code.gen_rows()) + "\n";
  for (size_t i = 0; i < code.gen_rows(); ++i) {
    for (size_t j = 0; j < code.length(); ++j)
      out += code.gen(i, j).symbol();
    out += "\n";
  }
  return out;
}

std::string matrix_text(const AnyCode& code);

/// Reads the canonical matrix format; throws std::invalid_argument on any
/// malformed content.
AnyCode read_matrix(std::istream& in);
AnyCode read_matrix_file(const std::string& path);

/// Binary image of a code over any of the rings (the identity for F2).
BinaryCode binary_image(const AnyCode& code);

/// CSV lines `w,A_w`, zero counts omitted.
std::string wdist_csv(const WeightDistribution& dist);

/// One JSON object (single line) per discovered code.
std::string record_json(const CodeRecord& rec);

}  // namespace sdc
