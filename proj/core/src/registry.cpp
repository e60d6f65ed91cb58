#include "sdc/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sdc {

namespace {

using Json = nlohmann::ordered_json;

bool entry_less(const KnownParamsRegistry::Entry& a,
                const KnownParamsRegistry::Entry& b) {
  const int ga = a.gamma.value_or(-1), gb = b.gamma.value_or(-1);
  if (ga != gb) return ga < gb;
  return a.beta < b.beta;
}

}  // namespace

void KnownParamsRegistry::sort_family(Family f) {
  auto& v = data_[size_t(f)];
  std::sort(v.begin(), v.end(), entry_less);
}

bool KnownParamsRegistry::has_family(Family f) const {
  return present_[size_t(f)];
}

bool KnownParamsRegistry::contains(Family f, int beta,
                                   std::optional<int> gamma,
                                   bool include_recent,
                                   bool include_user) const {
  for (const Entry& e : data_[size_t(f)]) {
    if (e.beta != beta || e.gamma != gamma) continue;
    if (e.source == "recent" && !include_recent) continue;
    if (e.source == "user" && !include_user) continue;
    return true;
  }
  return false;
}

KnownParamsRegistry::Novelty KnownParamsRegistry::check(
    const EnumeratorId& id, bool include_recent, bool include_user) const {
  if (!present_[size_t(id.family)])
    throw std::out_of_range("registry has no data for family " +
                            to_string(id.family));
  return contains(id.family, id.beta, id.gamma, include_recent, include_user)
             ? Novelty::Known
             : Novelty::New;
}

bool KnownParamsRegistry::is_low_confidence(Family f, int beta,
                                            std::optional<int> gamma) const {
  for (const Entry& e : data_[size_t(f)])
    if (e.beta == beta && e.gamma == gamma) return e.low_confidence;
  return false;
}

void KnownParamsRegistry::add(const EnumeratorId& id, std::string source) {
  present_[size_t(id.family)] = true;
  data_[size_t(id.family)].push_back(
      Entry{id.beta, id.gamma, std::move(source), false});
  sort_family(id.family);
}

const std::vector<KnownParamsRegistry::Entry>& KnownParamsRegistry::entries(
    Family f) const {
  return data_[size_t(f)];
}

std::vector<Family> KnownParamsRegistry::families() const {
  std::vector<Family> out;
  for (size_t i = 0; i < present_.size(); ++i)
    if (present_[i]) out.push_back(Family(i));
  return out;
}

// ---------------------------------------------------------------------------
// Built-in transcription
// ---------------------------------------------------------------------------

namespace {

KnownParamsRegistry make_builtin() {
  KnownParamsRegistry reg;

  auto add = [&reg](Family f, int beta, std::optional<int> gamma,
                    const char* source = "prior") {
    reg.add(EnumeratorId{f, beta, gamma}, source);
  };

  // ---- length 58 ----
  add(Family::W58_1, 55, std::nullopt);
  // beta = 0: gamma in {2m : m = 0,1,8,9,10,15,16,34,71,79 or 18..64}
  for (int m : {0, 1, 8, 9, 10, 15, 16, 34, 71, 79})
    add(Family::W58_2, 0, 2 * m);
  for (int m = 18; m <= 64; ++m) add(Family::W58_2, 0, 2 * m);
  // beta = 1: gamma in {2m : 21 <= m <= 57}
  for (int m = 21; m <= 57; ++m) add(Family::W58_2, 1, 2 * m);
  // beta = 2: gamma in {2m : m = 16,18,19,20,21,22,46,49 or 24..44}
  for (int m : {16, 18, 19, 20, 21, 22, 46, 49})
    add(Family::W58_2, 2, 2 * m);
  for (int m = 24; m <= 44; ++m) add(Family::W58_2, 2, 2 * m);

  // ---- length 64 ----
  for (int b : {14, 18, 22, 25, 32, 36, 44, 46, 64})
    add(Family::W64_1, b, std::nullopt);
  for (int b : {39, 53, 60}) add(Family::W64_1, b, std::nullopt, "recent");
  for (int b : {0,  1,  2,  4,  5,  6,  8,  9,  10, 12, 13, 14, 16, 17,
                18, 20, 21, 22, 23, 24, 25, 28, 29, 30, 32, 33, 36, 37,
                38, 40, 41, 44, 48, 52, 56, 64, 72, 88, 96, 104, 108,
                112, 114, 118, 120, 184})
    add(Family::W64_2, b, std::nullopt);
  for (int b : {51, 58, 80}) add(Family::W64_2, b, std::nullopt, "recent");

  // ---- length 66 ----
  for (int b : {28, 29, 30, 31, 32, 33, 34, 49, 50, 54, 55, 56, 57, 58, 59,
                62, 63, 66})
    add(Family::W66_3, b, std::nullopt);
  // W66,1 and W66,2: the sources only point at references, no usable list.

  // ---- length 68, family W68,2, keyed by gamma ----
  // gamma = 0: 38, 40, 44..139, 141,142,143,145,147,148,149,151,153,170,204,238,272
  add(Family::W68_2, 38, 0);
  add(Family::W68_2, 40, 0);
  for (int b = 44; b <= 139; ++b) add(Family::W68_2, b, 0);
  for (int b : {141, 142, 143, 145, 147, 148, 149, 151, 153, 170, 204, 238, 272})
    add(Family::W68_2, b, 0);
  // gamma = 1: even 54..70, 72..115, then the listed singles
  for (int b = 54; b <= 70; b += 2) add(Family::W68_2, b, 1);
  for (int b = 72; b <= 115; ++b) add(Family::W68_2, b, 1);
  for (int b : {118, 119, 120, 123, 125, 126, 129, 132, 133, 135})
    add(Family::W68_2, b, 1);
  for (int b = 137; b <= 149; ++b) add(Family::W68_2, b, 1);
  for (int b : {150, 151, 153, 155, 159}) add(Family::W68_2, b, 1);
  // gamma = 2: listed singles plus even 74..136 and 140..152
  for (int b : {65,  68,  71,  77,  85,  87,  89,  91,  93,  95,  97,  99,
                101, 103, 105, 109, 111, 115, 117, 119, 121, 123, 125, 127,
                129, 131, 133, 135, 137, 139, 145, 151, 153, 155, 158, 160,
                162})
    add(Family::W68_2, b, 2);
  for (int m = 37; m <= 68; ++m) add(Family::W68_2, 2 * m, 2);
  for (int m = 70; m <= 76; ++m) add(Family::W68_2, 2 * m, 2);
  // gamma = 3
  for (int b : {88,  90,  96,  100, 102, 104, 108, 112, 114, 116, 117, 126,
                127, 128, 130, 133, 136, 137, 138, 140, 141, 142, 144, 145,
                147, 148, 149, 153, 154, 158, 159, 160, 162, 176, 188, 193,
                196})
    add(Family::W68_2, b, 3);
  // gamma = 4
  for (int b : {102, 110, 116, 120, 122, 124, 128, 130, 134, 136, 138, 140,
                142, 150, 152, 154, 156, 158, 160, 162, 164, 166, 168, 170,
                172, 174, 176, 180})
    add(Family::W68_2, b, 4);
  // gamma = 6; the printed list ends in a dangling comma, so the final
  // entry is marked low-confidence.
  for (int b : {138, 154, 156, 158, 162}) add(Family::W68_2, b, 6);
  add(Family::W68_2, 176, 6);

  return reg;
}

}  // namespace

const KnownParamsRegistry& KnownParamsRegistry::builtin() {
  static const KnownParamsRegistry reg = [] {
    KnownParamsRegistry r = make_builtin();
    // low-confidence flag for the truncated gamma = 6 tail
    for (auto& e : r.data_[size_t(Family::W68_2)])
      if (e.gamma == 6 && e.beta == 176) e.low_confidence = true;
    return r;
  }();
  return reg;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

std::string KnownParamsRegistry::to_json(int length) const {
  Json doc;
  doc["format"] = "sdc-registry/1";
  doc["length"] = length;
  Json fams = Json::object();
  for (Family f : families()) {
    if (family_length(f) != length) continue;
    Json arr = Json::array();
    for (const Entry& e : entries(f)) {
      Json je;
      je["beta"] = e.beta;
      if (e.gamma) je["gamma"] = *e.gamma;
      je["source"] = e.source;
      if (e.low_confidence) je["low_confidence"] = true;
      arr.push_back(std::move(je));
    }
    fams[to_string(f)] = std::move(arr);
  }
  doc["families"] = std::move(fams);
  return doc.dump(2) + "\n";
}

void KnownParamsRegistry::merge_json(const std::string& text) {
  const Json doc = Json::parse(text);
  if (!doc.contains("families"))
    throw std::invalid_argument("registry JSON: missing `families`");
  for (const auto& [name, arr] : doc.at("families").items()) {
    const std::optional<Family> f = parse_family(name);
    if (!f) throw std::invalid_argument("registry JSON: unknown family " + name);
    present_[size_t(*f)] = true;
    for (const auto& je : arr) {
      Entry e;
      e.beta = je.at("beta").get<int>();
      if (je.contains("gamma")) e.gamma = je.at("gamma").get<int>();
      e.source = je.value("source", "prior");
      e.low_confidence = je.value("low_confidence", false);
      data_[size_t(*f)].push_back(std::move(e));
    }
    sort_family(*f);
  }
}

KnownParamsRegistry KnownParamsRegistry::from_json(const std::string& text) {
  KnownParamsRegistry reg;
  reg.merge_json(text);
  return reg;
}

}  // namespace sdc
