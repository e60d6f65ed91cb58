#include "sdc/bincode.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <climits>
#include <thread>

namespace sdc {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

// ---------------------------------------------------------------------------
// Codeword enumeration kernel.
//
// Rows are packed row-major (W words per row). The low min(k,4) rows are
// expanded into a 16-entry XOR table; an outer Gray-code counter walks the
// remaining rows one XOR per step, and the inner 16 combinations are pure
// table lookups with no loop-carried dependency. Counting is order
// independent, so range partitioning across threads cannot change totals.
// ---------------------------------------------------------------------------

template <int W>
void enum_range(const uint64_t* rows, int k, uint64_t outer_lo,
                uint64_t outer_hi, uint64_t* counts) {
  const int nb = k < 4 ? k : 4;
  const int inner = 1 << nb;
  const int ko = k - nb;
  const uint64_t* orows = rows + size_t(nb) * W;

  std::array<std::array<uint64_t, W>, 16> low{};
  for (int m = 1; m < inner; ++m) {
    const int b = std::countr_zero(unsigned(m));
    for (int w = 0; w < W; ++w)
      low[size_t(m)][size_t(w)] =
          low[size_t(m ^ (1 << b))][size_t(w)] ^ rows[size_t(b) * W + w];
  }

  std::array<uint64_t, W> acc{};
  const uint64_t g = outer_lo ^ (outer_lo >> 1);
  for (int i = 0; i < ko; ++i)
    if ((g >> i) & 1)
      for (int w = 0; w < W; ++w) acc[size_t(w)] ^= orows[size_t(i) * W + w];

  uint64_t j = outer_lo;
  for (;;) {
    for (int t = 0; t < inner; ++t) {
      int wt = 0;
      for (int w = 0; w < W; ++w)
        wt += std::popcount(acc[size_t(w)] ^ low[size_t(t)][size_t(w)]);
      ++counts[wt];
    }
    if (++j == outer_hi) break;
    const int i = std::countr_zero(j);
    for (int w = 0; w < W; ++w) acc[size_t(w)] ^= orows[size_t(i) * W + w];
  }
}

void enum_range_dyn(const uint64_t* rows, int words, int k, uint64_t outer_lo,
                    uint64_t outer_hi, uint64_t* counts) {
  const int nb = k < 4 ? k : 4;
  const int inner = 1 << nb;
  const int ko = k - nb;
  const uint64_t* orows = rows + size_t(nb) * words;

  std::vector<uint64_t> low(size_t(16) * words, 0);
  for (int m = 1; m < inner; ++m) {
    const int b = std::countr_zero(unsigned(m));
    for (int w = 0; w < words; ++w)
      low[size_t(m) * words + w] =
          low[size_t(m ^ (1 << b)) * words + w] ^ rows[size_t(b) * words + w];
  }

  std::vector<uint64_t> acc(size_t(words), 0);
  const uint64_t g = outer_lo ^ (outer_lo >> 1);
  for (int i = 0; i < ko; ++i)
    if ((g >> i) & 1)
      for (int w = 0; w < words; ++w) acc[size_t(w)] ^= orows[size_t(i) * words + w];

  uint64_t j = outer_lo;
  for (;;) {
    for (int t = 0; t < inner; ++t) {
      int wt = 0;
      for (int w = 0; w < words; ++w)
        wt += std::popcount(acc[size_t(w)] ^ low[size_t(t) * words + w]);
      ++counts[wt];
    }
    if (++j == outer_hi) break;
    const int i = std::countr_zero(j);
    for (int w = 0; w < words; ++w) acc[size_t(w)] ^= orows[size_t(i) * words + w];
  }
}

void enum_dispatch(const uint64_t* rows, int words, int k, uint64_t outer_lo,
                   uint64_t outer_hi, uint64_t* counts) {
  if (words == 1)
    enum_range<1>(rows, k, outer_lo, outer_hi, counts);
  else if (words == 2)
    enum_range<2>(rows, k, outer_lo, outer_hi, counts);
  else
    enum_range_dyn(rows, words, k, outer_lo, outer_hi, counts);
}

// Histogram of all 2^k XOR combinations of the given rows.
std::vector<uint64_t> enumerate_histogram(const std::vector<BitVec>& rows,
                                          size_t n, int threads) {
  std::vector<uint64_t> hist(n + 1, 0);
  const int k = int(rows.size());
  const int words = int((n + 63) / 64);
  std::vector<uint64_t> flat(size_t(std::max(k, 1)) * words, 0);
  for (int i = 0; i < k; ++i)
    for (int w = 0; w < words; ++w) flat[size_t(i) * words + w] = rows[size_t(i)].word(size_t(w));

  const int nb = k < 4 ? k : 4;
  const uint64_t total_outer = uint64_t(1) << (k - nb);
  const int t_count = int(std::min<uint64_t>(uint64_t(resolve_threads(threads)),
                                             total_outer));
  if (t_count <= 1) {
    enum_dispatch(flat.data(), words, k, 0, total_outer, hist.data());
    return hist;
  }

  std::vector<std::vector<uint64_t>> part(size_t(t_count),
                                          std::vector<uint64_t>(n + 1, 0));
  std::vector<std::thread> pool;
  pool.reserve(size_t(t_count));
  for (int t = 0; t < t_count; ++t) {
    const uint64_t lo = total_outer / uint64_t(t_count) * uint64_t(t) +
                        std::min<uint64_t>(uint64_t(t), total_outer % uint64_t(t_count));
    const uint64_t hi = total_outer / uint64_t(t_count) * uint64_t(t + 1) +
                        std::min<uint64_t>(uint64_t(t + 1), total_outer % uint64_t(t_count));
    pool.emplace_back([&, t, lo, hi] {
      enum_dispatch(flat.data(), words, k, lo, hi, part[size_t(t)].data());
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : part)
    for (size_t w = 0; w <= n; ++w) hist[w] += p[w];
  return hist;
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryCode
// ---------------------------------------------------------------------------

BinaryCode BinaryCode::from_generator(BitMatrix gen) {
  BitMatrix copy = gen;
  const RrefResult info = rref(copy);
  if (info.rank != gen.rows())
    throw std::invalid_argument("BinaryCode: generator rows are dependent");
  BinaryCode c;
  c.n_ = gen.cols();
  c.k_ = gen.rows();
  c.gen_ = std::move(gen);
  return c;
}

BinaryCode BinaryCode::from_span_rows(const BitMatrix& rows) {
  BitMatrix m = rows;
  const RrefResult info = rref(m);
  BitMatrix g(info.rank, rows.cols());
  for (size_t i = 0; i < info.rank; ++i) g.set_row(i, m.row(i));
  BinaryCode c;
  c.n_ = rows.cols();
  c.k_ = info.rank;
  c.gen_ = std::move(g);
  return c;
}

BitMatrix BinaryCode::rref_generator() const {
  BitMatrix m = gen_;
  rref(m);
  return m;
}

bool BinaryCode::contains(const BitVec& v) const {
  if (v.size() != n_) return false;
  BitMatrix m = gen_;
  const RrefResult info = rref(m);
  BitVec red = v;
  return reduce_against(m, info, red);
}

bool BinaryCode::contains_all_ones() const {
  return contains(BitVec::ones(n_));
}

// ---------------------------------------------------------------------------
// Weight distribution
// ---------------------------------------------------------------------------

uint64_t WeightDistribution::total() const {
  uint64_t s = 0;
  for (uint64_t c : counts) s += c;
  return s;
}

int WeightDistribution::min_nonzero_weight() const {
  for (size_t w = 1; w < counts.size(); ++w)
    if (counts[w]) return int(w);
  return -1;
}

WeightDistribution weight_distribution(const BinaryCode& c, int threads) {
  const size_t n = c.length(), k = c.dimension();
  if (k > 34)
    throw capacity_error(
        "weight_distribution: full enumeration is capped at k = 34 "
        "(2^34 codewords); use min_distance for larger codes");

  WeightDistribution dist;
  dist.counts.assign(n + 1, 0);
  if (k == 0) {
    dist.counts[0] = 1;
    return dist;
  }

  // When the all-ones vector is a codeword (every self-dual code), the RREF
  // rows sum to it, so the first k-1 RREF rows span a complement of {0, 1}.
  // Walk that half and mirror w <-> n-w.
  BitMatrix r = c.generator();
  const RrefResult info = rref(r);
  BitVec red = BitVec::ones(n);
  const bool halved = reduce_against(r, info, red);

  std::vector<BitVec> rows;
  const size_t ke = halved ? k - 1 : k;
  rows.reserve(ke);
  for (size_t i = 0; i < ke; ++i) rows.push_back(r.row(i));

  const std::vector<uint64_t> sub = enumerate_histogram(rows, n, threads);
  if (halved) {
    for (size_t w = 0; w <= n; ++w) dist.counts[w] = sub[w] + sub[n - w];
  } else {
    dist.counts = sub;
  }
  return dist;
}

// ---------------------------------------------------------------------------
// Minimum distance
// ---------------------------------------------------------------------------

int min_distance_enumeration(const BinaryCode& c, int threads) {
  return weight_distribution(c, threads).min_nonzero_weight();
}

namespace {

struct InfoSet {
  std::vector<uint64_t> rows;  // k rows, row-major, `words` words per row
  int deficit = 0;
};

// Minimum weight over all XORs of exactly r of the k rows whose smallest
// chosen index lies in [i_lo, i_hi). Depth-first with one incremental XOR
// per visited combination node.
int combos_min(const uint64_t* rows, int words, int k, int r, int i_lo,
               int i_hi) {
  int best = INT_MAX;
  std::vector<uint64_t> acc(size_t(r + 1) * size_t(words), 0);

  auto rec = [&](auto&& self, int depth, int start) -> void {
    const uint64_t* prev = acc.data() + size_t(depth) * size_t(words);
    uint64_t* cur = acc.data() + size_t(depth + 1) * size_t(words);
    const int last = k - r + depth + 1;
    for (int i = start; i < last; ++i) {
      for (int w = 0; w < words; ++w)
        cur[w] = prev[w] ^ rows[size_t(i) * size_t(words) + size_t(w)];
      if (depth + 1 == r) {
        int wt = 0;
        for (int w = 0; w < words; ++w) wt += std::popcount(cur[w]);
        best = std::min(best, wt);
      } else {
        self(self, depth + 1, i + 1);
      }
    }
  };

  const int top = std::min(i_hi, k - r + 1);
  for (int first = i_lo; first < top; ++first) {
    uint64_t* cur = acc.data() + size_t(words);
    int wt = 0;
    for (int w = 0; w < words; ++w) {
      cur[w] = rows[size_t(first) * size_t(words) + size_t(w)];
      wt += std::popcount(cur[w]);
    }
    if (r == 1)
      best = std::min(best, wt);
    else
      rec(rec, 1, first + 1);
  }
  return best;
}

}  // namespace

int min_distance_bz(const BinaryCode& c, int threads) {
  const size_t n = c.length(), k = c.dimension();
  if (k == 0) return -1;
  const int words = int((n + 63) / 64);
  const int t_count = resolve_threads(threads);

  // Chain of systematic generators: each round of Gaussian elimination
  // prefers columns not yet claimed by an earlier information set; reused
  // pivot columns show up as a rank deficit in the lower bound.
  std::vector<bool> used(n, false);
  std::vector<InfoSet> sets;
  for (;;) {
    std::vector<size_t> order;
    order.reserve(n);
    for (size_t j = 0; j < n; ++j)
      if (!used[j]) order.push_back(j);
    const size_t fresh_available = order.size();
    if (fresh_available == 0) break;
    for (size_t j = 0; j < n; ++j)
      if (used[j]) order.push_back(j);

    BitMatrix m = c.generator();
    const RrefResult info = rref_ordered(m, order);
    int fresh = 0;
    for (size_t col : info.pivot_cols)
      if (!used[col]) ++fresh;
    if (fresh == 0) break;
    for (size_t col : info.pivot_cols) used[col] = true;

    InfoSet s;
    s.deficit = int(k) - fresh;
    s.rows.resize(k * size_t(words));
    for (size_t i = 0; i < k; ++i)
      for (int w = 0; w < words; ++w)
        s.rows[i * size_t(words) + size_t(w)] = m.row(i).word(size_t(w));
    sets.push_back(std::move(s));
  }

  int d_best = INT_MAX;
  for (int r = 1; r <= int(k); ++r) {
    for (const InfoSet& s : sets) {
      const int top = int(k) - r + 1;
      const int tc = std::max(1, std::min(t_count, top));
      if (tc == 1) {
        d_best = std::min(d_best,
                          combos_min(s.rows.data(), words, int(k), r, 0, top));
      } else {
        std::vector<int> mins(size_t(tc), INT_MAX);
        std::vector<std::thread> pool;
        for (int t = 0; t < tc; ++t) {
          const int lo = top * t / tc, hi = top * (t + 1) / tc;
          pool.emplace_back([&, t, lo, hi] {
            mins[size_t(t)] =
                combos_min(s.rows.data(), words, int(k), r, lo, hi);
          });
        }
        for (auto& th : pool) th.join();
        for (int m : mins) d_best = std::min(d_best, m);
      }
    }
    int lb = 0;
    for (const InfoSet& s : sets) lb += std::max(0, r + 1 - s.deficit);
    if (lb >= d_best) return d_best;
  }
  return d_best;
}

int min_distance(const BinaryCode& c, int threads) {
  if (c.dimension() <= 28) return min_distance_enumeration(c, threads);
  return min_distance_bz(c, threads);
}

DistanceReport min_distance_report(const BinaryCode& c, int threads) {
  DistanceReport rep;
  const auto t0 = std::chrono::steady_clock::now();
  if (c.dimension() <= 28) {
    rep.engine = "enumeration";
    rep.d = min_distance_enumeration(c, threads);
  } else {
    rep.engine = "brouwer-zimmermann";
    rep.d = min_distance_bz(c, threads);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

std::string to_string(SelfDualType t) {
  switch (t) {
    case SelfDualType::TypeI: return "Type I";
    case SelfDualType::TypeII: return "Type II";
    case SelfDualType::NotSelfDual: return "not self-dual";
  }
  return "?";
}

SelfDualType classify_type(const BinaryCode& c) {
  const size_t n = c.length(), k = c.dimension();
  if (n == 0 || n != 2 * k) return SelfDualType::NotSelfDual;
  std::vector<BitVec> rows;
  rows.reserve(k);
  for (size_t i = 0; i < k; ++i) rows.push_back(c.generator().row(i));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j)
      if (rows[i].dot(rows[j])) return SelfDualType::NotSelfDual;
  for (size_t i = 0; i < k; ++i)
    if (rows[i].weight() % 4 != 0) return SelfDualType::TypeI;
  return SelfDualType::TypeII;
}

int rains_bound(int n) {
  if (n % 24 == 22) return 4 * (n / 24) + 6;
  return 4 * (n / 24) + 4;
}

bool is_extremal(const BinaryCode& c, int threads) {
  if (classify_type(c) == SelfDualType::NotSelfDual) return false;
  return min_distance(c, threads) == rains_bound(int(c.length()));
}

// ---------------------------------------------------------------------------
// Gray images
// ---------------------------------------------------------------------------

namespace {

template <Ring R, class MapFn>
BinaryCode gray_image_impl(const RingCode<R>& c,
                           std::span<const Elem<R>> scalars, MapFn map) {
  std::vector<BitVec> rows;
  rows.reserve(c.gen_rows() * scalars.size());
  Vec<R> tmp(c.length());
  for (size_t i = 0; i < c.gen_rows(); ++i) {
    const auto g = c.gen.row(i);
    for (const Elem<R> s : scalars) {
      for (size_t j = 0; j < g.size(); ++j) tmp[j] = s * g[j];
      rows.push_back(map(std::span<const Elem<R>>(tmp)));
    }
  }
  if (rows.empty()) {
    // 0 x n generator: the zero code maps to the zero code
    return BinaryCode::from_span_rows(BitMatrix(0, 0));
  }
  return BinaryCode::from_span_rows(BitMatrix::from_rows(rows));
}

}  // namespace

BinaryCode gray_image(const RingCode<F4u>& c) {
  using namespace el::f4u;
  const std::array<Elem<F4u>, 4> scalars = {one, w, u, uw};
  return gray_image_impl<F4u>(c, scalars,
                              [](std::span<const Elem<F4u>> v) { return gray_phi_psi(v); });
}

BinaryCode gray_image(const RingCode<F2u>& c) {
  using namespace el::f2u;
  const std::array<Elem<F2u>, 2> scalars = {one, u};
  return gray_image_impl<F2u>(c, scalars,
                              [](std::span<const Elem<F2u>> v) { return gray_phi(v); });
}

BinaryCode gray_image(const RingCode<F4>& c) {
  using namespace el::f4;
  const std::array<Elem<F4>, 2> scalars = {one, w};
  return gray_image_impl<F4>(c, scalars,
                             [](std::span<const Elem<F4>> v) { return gray_f4(v); });
}

BinaryCode gray_image(const RingCode<F2>& c) {
  const std::array<Elem<F2>, 1> scalars = {Elem<F2>(1)};
  return gray_image_impl<F2>(c, scalars, [](std::span<const Elem<F2>> v) {
    BitVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) out.set(i, true);
    return out;
  });
}

RingCode<F2> to_ring_code(const BinaryCode& c) {
  RingCode<F2> out{Mat<F2>(c.dimension(), c.length()), false};
  for (size_t i = 0; i < c.dimension(); ++i)
    for (size_t j = 0; j < c.length(); ++j)
      out.gen(i, j) = Elem<F2>(c.generator().get(i, j) ? 1 : 0);
  return out;
}

BinaryCode to_binary_code(const RingCode<F2>& c) {
  BitMatrix m(c.gen_rows(), c.length());
  for (size_t i = 0; i < c.gen_rows(); ++i)
    for (size_t j = 0; j < c.length(); ++j)
      m.set(i, j, !c.gen(i, j).is_zero());
  return BinaryCode::from_span_rows(m);
}

StandardForm standard_form(const BinaryCode& c) {
  BitMatrix m = c.generator();
  const RrefResult info = rref(m);
  const size_t n = c.length(), k = c.dimension();
  StandardForm sf;
  sf.col_perm = info.pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (size_t col : info.pivot_cols) is_pivot[col] = true;
  for (size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) sf.col_perm.push_back(j);
  sf.a = BitMatrix(k, n - k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n - k; ++j)
      sf.a.set(i, j, m.get(i, sf.col_perm[k + j]));
  return sf;
}

}  // namespace sdc
