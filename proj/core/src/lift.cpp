#include "sdc/lift.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace sdc {

RingCode<F4> project_code(const RingCode<F4u>& c) {
  RingCode<F4> out{mu(c.gen), c.standard_form};
  return out;
}

std::vector<std::string> builtin_code_names() { return catalog::code_names(); }

RingCode<F4u> builtin_code(std::string_view name) {
  return catalog::code(name);
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Assignment index -> u parts, lexicographic with position 0 as the most
// significant base-4 digit.
std::vector<Elem<F4>> decode_assignment(uint64_t a, size_t f) {
  std::vector<Elem<F4>> u(f);
  for (size_t i = 0; i < f; ++i)
    u[f - 1 - i] = Elem<F4>(int((a >> (2 * i)) & 3));
  return u;
}

// M block of the lifted generator [I | M].
Mat<F4u> lifted_m_block(const catalog::F4Base& base,
                        const std::vector<Elem<F4>>& u_parts) {
  const size_t p = base.first_row.size();
  Vec<F4u> row(p);
  for (size_t i = 0; i < p; ++i) row[i] = lift(base.first_row[i], u_parts[i]);
  const Mat<F4u> circ = build_circulant<F4u>(row);
  if (!base.border) return circ;
  const auto [lam, beta, gamma] = *base.border;
  Mat<F4u> m(p + 1, p + 1);
  m(0, 0) = lift(lam, u_parts[p]);
  const Elem<F4u> be = lift(beta, u_parts[p + 1]);
  const Elem<F4u> ga = lift(gamma, u_parts[p + 2]);
  for (size_t j = 0; j < p; ++j) m(0, 1 + j) = be;
  for (size_t i = 0; i < p; ++i) {
    m(1 + i, 0) = ga;
    for (size_t j = 0; j < p; ++j) m(1 + i, 1 + j) = circ(i, j);
  }
  return m;
}

RingCode<F4u> code_from_m(const Mat<F4u>& m) {
  const size_t k = m.rows();
  RingCode<F4u> code{Mat<F4u>(k, 2 * k), true};
  for (size_t i = 0; i < k; ++i) {
    code.gen(i, i) = Elem<F4u>(1);
    for (size_t j = 0; j < k; ++j) code.gen(i, k + j) = m(i, j);
  }
  return code;
}

// Self-duality of [I | M] over F4+uF4 reduces to M * M^T = I.
bool m_block_self_dual(const Mat<F4u>& m) {
  return (m * m.transposed()).is_identity();
}

std::optional<LiftCandidate> evaluate(const catalog::F4Base& base,
                                      const LiftPredicate& pred,
                                      uint64_t assignment) {
  const size_t f = base.first_row.size() + (base.border ? 3 : 0);
  std::vector<Elem<F4>> u_parts = decode_assignment(assignment, f);
  const Mat<F4u> m = lifted_m_block(base, u_parts);
  if (!m_block_self_dual(m)) return std::nullopt;

  LiftCandidate cand;
  cand.u_parts = std::move(u_parts);
  cand.code = code_from_m(m);
  const BinaryCode bin = gray_image(cand.code);
  cand.n = int(bin.length());
  cand.k = int(bin.dimension());
  cand.d = min_distance_bz(bin, 1);
  if (cand.d < pred.min_distance) return std::nullopt;
  if (pred.type && classify_type(bin) != *pred.type) return std::nullopt;

  const int fam_d = cand.n == 58 ? 10 : 12;
  if ((cand.n == 58 || cand.n == 64 || cand.n == 66 || cand.n == 68) &&
      cand.d == fam_d && bin.dimension() <= 34) {
    try {
      cand.id = identify_enumerator(bin, weight_distribution(bin, 1));
    } catch (const ClassificationError&) {
      cand.id = std::nullopt;
    }
  }
  return cand;
}

}  // namespace

LiftSearchResult lift_search(const catalog::F4Base& base,
                             const LiftPredicate& pred, uint64_t budget,
                             uint64_t seed, int threads) {
  const size_t f = base.first_row.size() + (base.border ? 3 : 0);
  if (f > 30)
    throw std::invalid_argument("lift_search: too many free positions");
  const uint64_t space = uint64_t(1) << (2 * f);

  LiftSearchResult res;
  res.exhaustive = space <= budget;
  res.truncated = !res.exhaustive;
  const uint64_t n_try = res.exhaustive ? space : budget;
  res.examined = n_try;
  if (n_try == 0) return res;

  const int t_count = int(std::min<uint64_t>(uint64_t(resolve_threads(threads)), n_try));
  std::vector<std::vector<LiftCandidate>> parts((size_t(t_count)));
  std::vector<std::thread> pool;
  for (int t = 0; t < t_count; ++t) {
    const uint64_t lo = n_try / uint64_t(t_count) * uint64_t(t) +
                        std::min<uint64_t>(uint64_t(t), n_try % uint64_t(t_count));
    const uint64_t hi = n_try / uint64_t(t_count) * uint64_t(t + 1) +
                        std::min<uint64_t>(uint64_t(t + 1), n_try % uint64_t(t_count));
    pool.emplace_back([&, t, lo, hi] {
      for (uint64_t i = lo; i < hi; ++i) {
        const uint64_t a =
            res.exhaustive ? i : splitmix64(seed ^ i) % space;
        if (auto cand = evaluate(base, pred, a)) parts[size_t(t)].push_back(std::move(*cand));
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& p : parts)
    for (auto& c : p) res.found.push_back(std::move(c));
  return res;
}

std::string candidate_line(const LiftCandidate& cand) {
  std::string s;
  for (const Elem<F4> e : cand.u_parts) s += F4u::alphabet[size_t(e.v)];
  s += " [" + std::to_string(cand.n) + "," + std::to_string(cand.k) + "," +
       std::to_string(cand.d) + "] ";
  s += cand.id ? to_string(*cand.id) : "-";
  return s;
}

}  // namespace sdc
