#pragma once

// Catalog of weight enumerator parameters already reported in the
// literature, keyed by family. Entries carry a source tag ("prior" for the
// long-standing lists, "recent" for the latest wave of additions called out
// separately, "user" for appends), so novelty can be evaluated against
// either the updated or the pre-update state of the art.

#include <optional>
#include <string>
#include <vector>

#include "sdc/enumerator.hpp"

namespace sdc {

class KnownParamsRegistry {
 public:
  struct Entry {
    int beta = 0;
    std::optional<int> gamma;
    std::string source = "prior";
    bool low_confidence = false;
  };

  enum class Novelty { Known, New };

  /// The registry transcribed from the published prose lists; shipped JSON
  /// copies live under data/registry/.
  static const KnownParamsRegistry& builtin();

  bool has_family(Family f) const;

  bool contains(Family f, int beta, std::optional<int> gamma,
                bool include_recent = true, bool include_user = true) const;

  /// Pure membership test. Families the sources give no list for (e.g.
  /// W66,1, which the prose only cites references for) raise
  /// std::out_of_range.
  Novelty check(const EnumeratorId& id, bool include_recent = true,
                bool include_user = true) const;

  bool is_low_confidence(Family f, int beta, std::optional<int> gamma) const;

  void add(const EnumeratorId& id, std::string source = "user");

  /// Entries of one family, sorted by (gamma, beta).
  const std::vector<Entry>& entries(Family f) const;

  std::vector<Family> families() const;

  /// One JSON document per length, `family -> sorted parameter arrays`.
  std::string to_json(int length) const;
  /// Merges a JSON document (as produced by to_json) into this registry.
  void merge_json(const std::string& text);
  static KnownParamsRegistry from_json(const std::string& text);

  friend bool operator==(const KnownParamsRegistry&,
                         const KnownParamsRegistry&) = default;

 private:
  // parallel arrays indexed by Family cast to int
  std::vector<std::vector<Entry>> data_ =
      std::vector<std::vector<Entry>>(9);
  std::vector<bool> present_ = std::vector<bool>(9, false);

  void sort_family(Family f);
};

}  // namespace sdc
