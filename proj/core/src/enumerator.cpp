#include "sdc/enumerator.hpp"

#include <array>

namespace sdc {

std::string to_string(Family f) {
  switch (f) {
    case Family::W58_1: return "W58,1";
    case Family::W58_2: return "W58,2";
    case Family::W64_1: return "W64,1";
    case Family::W64_2: return "W64,2";
    case Family::W66_1: return "W66,1";
    case Family::W66_2: return "W66,2";
    case Family::W66_3: return "W66,3";
    case Family::W68_1: return "W68,1";
    case Family::W68_2: return "W68,2";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f :
       {Family::W58_1, Family::W58_2, Family::W64_1, Family::W64_2,
        Family::W66_1, Family::W66_2, Family::W66_3, Family::W68_1,
        Family::W68_2})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

int family_length(Family f) {
  switch (f) {
    case Family::W58_1:
    case Family::W58_2: return 58;
    case Family::W64_1:
    case Family::W64_2: return 64;
    case Family::W66_1:
    case Family::W66_2:
    case Family::W66_3: return 66;
    case Family::W68_1:
    case Family::W68_2: return 68;
  }
  return 0;
}

bool family_has_gamma(Family f) {
  return f == Family::W58_2 || f == Family::W68_2;
}

std::string to_string(const EnumeratorId& id) {
  std::string s = to_string(id.family) + " beta=" + std::to_string(id.beta);
  if (id.gamma) s += " gamma=" + std::to_string(*id.gamma);
  return s;
}

// ---------------------------------------------------------------------------
// W58,2 A_12 model
// ---------------------------------------------------------------------------

W58_2A12Model fit_w58_2_a12(const std::array<std::array<long long, 3>, 3>& obs) {
  // Solve [1 b g][c0 cb cg]^T = a12 for the three observations via Cramer.
  const long long b0 = obs[0][0], g0 = obs[0][1], v0 = obs[0][2];
  const long long b1 = obs[1][0], g1 = obs[1][1], v1 = obs[1][2];
  const long long b2 = obs[2][0], g2 = obs[2][1], v2 = obs[2][2];
  const long long det = (b1 - b0) * (g2 - g0) - (b2 - b0) * (g1 - g0);
  if (det == 0)
    throw std::invalid_argument(
        "fit_w58_2_a12: observations are affinely dependent");
  const long long num_cb = (v1 - v0) * (g2 - g0) - (v2 - v0) * (g1 - g0);
  const long long num_cg = (b1 - b0) * (v2 - v0) - (b2 - b0) * (v1 - v0);
  if (num_cb % det || num_cg % det)
    throw std::invalid_argument("fit_w58_2_a12: non-integral solution");
  W58_2A12Model m{};
  m.c_beta = num_cb / det;
  m.c_gamma = num_cg / det;
  m.c0 = v0 - m.c_beta * b0 - m.c_gamma * g0;
  return m;
}

const W58_2A12Model& w58_2_a12_model() {
  // Frozen from full 2^29 distributions of the bundled length-58 catalog
  // codes; the acceptance suite refits the model from three of them and
  // validates the other four against it.
  static const W58_2A12Model model{3132, 24, 2};
  return model;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

std::map<int, long long> expected_low_coefficients(const EnumeratorId& id) {
  const long long b = id.beta;
  const long long g = id.gamma.value_or(0);
  switch (id.family) {
    case Family::W58_1: return {{10, 165 - 2 * b}, {12, 5078 + 2 * b}};
    case Family::W58_2:
      return {{10, 319 - 24 * b - 2 * g},
              {12, w58_2_a12_model().a12(id.beta, int(g))}};
    case Family::W64_1: return {{12, 1312 + 16 * b}, {14, 22016 - 64 * b}};
    case Family::W64_2: return {{12, 1312 + 16 * b}, {14, 23040 - 64 * b}};
    case Family::W66_1: return {{12, 858 + 8 * b}, {14, 18678 - 24 * b}};
    case Family::W66_2: return {{12, 1690}, {14, 7990}};
    case Family::W66_3: return {{12, 858 + 8 * b}, {14, 18166 - 24 * b}};
    case Family::W68_1: return {{12, 442 + 4 * b}, {14, 10864 - 8 * b}};
    case Family::W68_2:
      return {{12, 442 + 4 * b}, {14, 14960 - 8 * b - 256 * g}};
  }
  return {};
}

namespace {

std::vector<std::pair<int, long long>> low_signature(
    const WeightDistribution& dist) {
  std::vector<std::pair<int, long long>> sig;
  for (int w = 10; w <= 14; ++w) sig.emplace_back(w, (long long)dist.at(size_t(w)));
  return sig;
}

[[noreturn]] void fail(const std::string& msg, const WeightDistribution& dist) {
  throw ClassificationError(msg, low_signature(dist));
}

}  // namespace

EnumeratorId identify_enumerator(const BinaryCode& c,
                                 const WeightDistribution& dist) {
  const int n = int(c.length());
  if (n != 58 && n != 64 && n != 66 && n != 68)
    fail("identify_enumerator: no families catalogued for length " +
             std::to_string(n),
         dist);
  if (2 * c.dimension() != c.length())
    fail("identify_enumerator: code is not half-rate", dist);
  const int want_d = (n == 58) ? 10 : 12;
  if (dist.min_nonzero_weight() != want_d)
    fail("identify_enumerator: minimum weight " +
             std::to_string(dist.min_nonzero_weight()) + ", families need " +
             std::to_string(want_d),
         dist);

  const long long a10 = (long long)dist.at(10);
  const long long a12 = (long long)dist.at(12);
  const long long a14 = (long long)dist.at(14);

  if (n == 58) {
    if ((165 - a10) % 2 == 0) {
      const long long b = (165 - a10) / 2;
      if (b >= 0 && b <= 82 && a12 == 5078 + 2 * b)
        return {Family::W58_1, int(b), std::nullopt};
    }
    // 24*beta + 2*gamma = 319 - A_10 ; cb*beta + cg*gamma = A_12 - c0
    const W58_2A12Model& m = w58_2_a12_model();
    const long long s1 = 319 - a10;
    const long long s2 = a12 - m.c0;
    const long long det = 24 * m.c_gamma - 2 * m.c_beta;
    if (det != 0) {
      const long long nb = s1 * m.c_gamma - 2 * s2;
      const long long ng = 24 * s2 - m.c_beta * s1;
      if (nb % det == 0 && ng % det == 0) {
        const long long b = nb / det, g = ng / det;
        if (b >= 0 && b <= 11 && g >= 0 && g <= 159 - 2 * b)
          return {Family::W58_2, int(b), int(g)};
      }
    }
    fail("identify_enumerator: no length-58 family matches", dist);
  }

  if (n == 64) {
    if ((a12 - 1312) % 16 != 0)
      fail("identify_enumerator: A_12 incompatible with length-64 families",
           dist);
    const long long b = (a12 - 1312) / 16;
    if (a14 == 22016 - 64 * b && b >= 14 && b <= 104)
      return {Family::W64_1, int(b), std::nullopt};
    if (a14 == 23040 - 64 * b && b >= 0 && b <= 277)
      return {Family::W64_2, int(b), std::nullopt};
    fail("identify_enumerator: no length-64 family matches", dist);
  }

  if (n == 66) {
    if (a12 == 1690 && a14 == 7990)
      return {Family::W66_2, 0, std::nullopt};
    if ((a12 - 858) % 8 != 0)
      fail("identify_enumerator: A_12 incompatible with length-66 families",
           dist);
    const long long b = (a12 - 858) / 8;
    if (a14 == 18678 - 24 * b && b >= 0 && b <= 778)
      return {Family::W66_1, int(b), std::nullopt};
    if (a14 == 18166 - 24 * b && b >= 14 && b <= 756)
      return {Family::W66_3, int(b), std::nullopt};
    fail("identify_enumerator: no length-66 family matches", dist);
  }

  // n == 68
  if ((442 - a12) % 4 != 0)
    fail("identify_enumerator: A_12 incompatible with length-68 families",
         dist);
  const long long b = (a12 - 442) / 4;
  const long long g_num = 14960 - 8 * b - a14;
  if (g_num % 256 == 0) {
    const long long g = g_num / 256;
    if (g >= 0 && g <= 11 && b >= 14 * g && b <= 1870 - 32 * g)
      return {Family::W68_2, int(b), int(g)};
  }
  if (a14 == 10864 - 8 * b && b >= 104 && b <= 1358)
    return {Family::W68_1, int(b), std::nullopt};
  fail("identify_enumerator: no length-68 family matches", dist);
}

}  // namespace sdc
