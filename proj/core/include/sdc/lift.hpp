#pragma once

// Lifts of F4 codes to F4+uF4: projection, the named built-in lifted codes,
// and a search over u-part assignments for the circulant first row and
// border.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdc/bincode.hpp"
#include "sdc/catalog.hpp"
#include "sdc/enumerator.hpp"
#include "sdc/qdc.hpp"

namespace sdc {

/// Entrywise projection mu; [I|M] structure survives, so the result of
/// projecting a standard form generator stays in standard form.
RingCode<F4> project_code(const RingCode<F4u>& c);

/// Named built-in lifted codes (K1..K3 over length 14, L1..L4 over 16).
std::vector<std::string> builtin_code_names();
RingCode<F4u> builtin_code(std::string_view name);

struct LiftPredicate {
  int min_distance = 0;                 // binary image distance >= this
  std::optional<SelfDualType> type;     // require Type I / II when set
};

struct LiftCandidate {
  std::vector<Elem<F4>> u_parts;  // row positions first, then lambda/beta/gamma
  RingCode<F4u> code;
  int n = 0, k = 0, d = 0;
  std::optional<EnumeratorId> id;  // filled when the image lands in a family
};

struct LiftSearchResult {
  std::vector<LiftCandidate> found;
  uint64_t examined = 0;
  bool exhaustive = false;
  bool truncated = false;  // sampled mode: the space was not exhausted
};

/// Enumerates lifts of a QDC base over F4. Free positions are the circulant
/// first row followed by the border entries; the identity block lifts as
/// exact ones. Exhaustive in lexicographic assignment order when
/// 4^positions <= budget, otherwise `budget` seeded samples. Candidates must
/// be self-dual over F4+uF4 (checked first, M*M^T = I) and their binary
/// image must satisfy the predicate. Deterministic for fixed (seed, budget);
/// thread count only changes the wall clock.
LiftSearchResult lift_search(const catalog::F4Base& base,
                             const LiftPredicate& pred, uint64_t budget,
                             uint64_t seed = 0, int threads = 0);

/// Candidate dump line: assignment in hex symbols, binary [n,k,d], then
/// enumerator parameters (or "-").
std::string candidate_line(const LiftCandidate& cand);

}  // namespace sdc
