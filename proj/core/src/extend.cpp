#include "sdc/extend.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace sdc {

RingCode<F2u> psi_image(const RingCode<F4u>& c) {
  const size_t k = c.gen_rows(), n = c.length();
  RingCode<F2u> out{Mat<F2u>(2 * k, 2 * n), false};
  Vec<F4u> tmp(n);
  for (size_t i = 0; i < k; ++i) {
    const auto g = c.gen.row(i);
    const Vec<F2u> a = gray_psi(g);
    for (size_t j = 0; j < 2 * n; ++j) out.gen(2 * i, j) = a[j];
    for (size_t j = 0; j < n; ++j) tmp[j] = el::f4u::w * g[j];
    const Vec<F2u> b = gray_psi(tmp);
    for (size_t j = 0; j < 2 * n; ++j) out.gen(2 * i + 1, j) = b[j];
  }
  return out;
}

bool TableReport::hard_pass() const {
  for (const RowOutcome& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

bool row_selected(const VerifyOptions& opt, int row) {
  if (opt.rows.empty()) return true;
  return std::find(opt.rows.begin(), opt.rows.end(), row) != opt.rows.end();
}

template <Ring R>
Vec<R> parse_symbols(const char* s) {
  Vec<R> v;
  for (const char* p = s; *p; ++p) {
    Elem<R> e;
    if (!Elem<R>::parse(*p, e))
      throw std::invalid_argument(std::string("bad symbol '") + *p +
                                  "' for ring " + std::string(R::name));
    v.push_back(e);
  }
  return v;
}

Elem<F2u> parse_c_f2u(const std::string& s) {
  if (s == "1") return el::f2u::one;
  if (s == "1+u" || s == "3") return el::f2u::one_u;
  throw std::invalid_argument("bad extension constant: " + s);
}

std::string nk_d(const BinaryCode& c, int d) {
  return "[" + std::to_string(c.length()) + "," +
         std::to_string(c.dimension()) + "," + std::to_string(d) + "]";
}

RowOutcome verify_ext_row_binary(const catalog::ExtRow& row, int index,
                                 Family want_family, int want_n, int want_d,
                                 int threads) {
  RowOutcome out;
  out.row = index;
  out.base = row.base;

  const BinaryCode base = gray_image(catalog::code(row.base));
  const Vec<F2> x = parse_symbols<F2>(row.x);
  const RingCode<F2> ext =
      extend_free<F2>(to_ring_code(base), x, el::f2::one);
  const BinaryCode bin = to_binary_code(ext);
  const WeightDistribution dist = weight_distribution(bin, threads);
  const int d = dist.min_nonzero_weight();
  out.n = int(bin.length());
  out.k = int(bin.dimension());
  out.d = d;

  std::ostringstream detail;
  detail << nk_d(bin, d);
  bool pass = out.n == want_n && 2 * out.k == want_n && d == want_d;
  try {
    const EnumeratorId id = identify_enumerator(bin, dist);
    out.id = id;
    detail << " " << to_string(id);
    const EnumeratorId want{want_family, row.beta,
                            row.gamma >= 0 ? std::optional<int>(row.gamma)
                                           : std::nullopt};
    // the family relations must reproduce the measured coefficients exactly
    for (const auto& [w, aw] : expected_low_coefficients(id))
      if ((long long)dist.at(size_t(w)) != aw) pass = false;
    if (!(id == want)) {
      pass = false;
      detail << " (reported " << to_string(want) << ")";
    }
  } catch (const ClassificationError& e) {
    pass = false;
    detail << " unclassified: " << e.what();
  }
  out.pass = pass;
  out.detail = detail.str();
  return out;
}

}  // namespace

TableReport verify_table(int table_id, const VerifyOptions& opt) {
  TableReport rep;
  rep.table = table_id;

  if (table_id == 1) {
    int idx = 0;
    for (const catalog::QdcRow& row : catalog::table1()) {
      ++idx;
      if (!row_selected(opt, idx)) continue;
      RowOutcome out;
      out.row = idx;
      out.base = row.code_name;
      const auto family = selfdual_qdc_family(row.p);
      const FamilyCode* fc = nullptr;
      for (const FamilyCode& f : family)
        if (f.name == row.code_name) fc = &f;
      if (!fc) throw std::logic_error("table1: unknown family member");
      const BinaryCode bin = gray_image(fc->code);
      const int d = bin.length() <= 64
                        ? min_distance_enumeration(bin, opt.threads)
                        : min_distance_bz(bin, opt.threads);
      const SelfDualType ty = classify_type(bin);
      out.n = int(bin.length());
      out.k = int(bin.dimension());
      out.d = d;
      out.pass = out.n == row.n && out.k == row.k && d == row.d &&
                 ty == row.type && fc->expected_type == row.type;
      out.detail = nk_d(bin, d) + " " + to_string(ty);
      rep.rows.push_back(std::move(out));
    }
    return rep;
  }

  if (table_id == 2) {
    int idx = 0;
    for (const catalog::LiftRow& row : catalog::table2()) {
      ++idx;
      if (!row_selected(opt, idx)) continue;
      RowOutcome out;
      out.row = idx;
      out.base = row.code_name;
      const BinaryCode bin = gray_image(catalog::code(row.code_name));
      const WeightDistribution dist = weight_distribution(bin, opt.threads);
      const int d = dist.min_nonzero_weight();
      out.n = int(bin.length());
      out.k = int(bin.dimension());
      out.d = d;
      const SelfDualType ty = classify_type(bin);
      std::ostringstream detail;
      detail << nk_d(bin, d) << " " << to_string(ty);
      bool pass = out.n == 64 && out.k == 32 && d == 12 &&
                  ty == SelfDualType::TypeI;
      try {
        const EnumeratorId id = identify_enumerator(bin, dist);
        out.id = id;
        detail << " " << to_string(id);
        const EnumeratorId want{Family::W64_1, row.beta, std::nullopt};
        if (!(id == want)) {
          pass = false;
          detail << " (reported " << to_string(want) << ")";
        }
        for (const auto& [w, aw] : expected_low_coefficients(id))
          if ((long long)dist.at(size_t(w)) != aw) pass = false;
      } catch (const ClassificationError& e) {
        pass = false;
        detail << " unclassified: " << e.what();
      }
      out.pass = pass;
      out.detail = detail.str();
      rep.rows.push_back(std::move(out));
    }
    return rep;
  }

  if (table_id == 3 || table_id == 5) {
    const Family fam = table_id == 3 ? Family::W58_2 : Family::W66_3;
    const int want_n = table_id == 3 ? 58 : 66;
    const int want_d = table_id == 3 ? 10 : 12;
    int idx = 0;
    for (const catalog::ExtRow& row : catalog::table(table_id)) {
      ++idx;
      if (!row_selected(opt, idx)) continue;
      rep.rows.push_back(
          verify_ext_row_binary(row, idx, fam, want_n, want_d, opt.threads));
    }
    return rep;
  }

  if (table_id == 4) {
    int idx = 0;
    for (const catalog::ExtRow& row : catalog::table4()) {
      ++idx;
      if (!row_selected(opt, idx)) continue;
      RowOutcome out;
      out.row = idx;
      out.base = row.base;
      const BinaryCode base = gray_image(catalog::code(row.base));
      const StandardForm sf = standard_form(base);
      Mat<F2> a(sf.a.rows(), sf.a.cols());
      for (size_t i = 0; i < sf.a.rows(); ++i)
        for (size_t j = 0; j < sf.a.cols(); ++j)
          a(i, j) = Elem<F2>(sf.a.get(i, j) ? 1 : 0);
      const Vec<F2> x = parse_symbols<F2>(row.x);
      const RingCode<F2> ext = extend_standard<F2>(a, x, el::f2::one);
      const BinaryCode bin = to_binary_code(ext);
      const WeightDistribution dist = weight_distribution(bin, opt.threads);
      const int d = dist.min_nonzero_weight();
      out.n = int(bin.length());
      out.k = int(bin.dimension());
      out.d = d;
      std::ostringstream detail;
      detail << nk_d(bin, d);
      // hard criteria: self-dual [66,33,12] classifying into W66,3 with an
      // integral beta in range; the reported beta depends on the authors'
      // standard form, so it is a deviation, not a failure.
      bool pass = out.n == 66 && out.k == 33 && d == 12 &&
                  classify_type(bin) != SelfDualType::NotSelfDual;
      try {
        const EnumeratorId id = identify_enumerator(bin, dist);
        out.id = id;
        detail << " " << to_string(id);
        if (id.family != Family::W66_3 || id.beta < 14 || id.beta > 756)
          pass = false;
        out.deviation = id.beta != row.beta;
        if (out.deviation)
          detail << " (reported beta=" << row.beta << ")";
      } catch (const ClassificationError& e) {
        pass = false;
        detail << " unclassified: " << e.what();
      }
      out.pass = pass;
      out.detail = detail.str();
      rep.rows.push_back(std::move(out));
    }
    return rep;
  }

  if (table_id == 6) {
    int idx = 0;
    for (const catalog::ExtRow& row : catalog::table6()) {
      ++idx;
      if (!row_selected(opt, idx)) continue;
      RowOutcome out;
      out.row = idx;
      out.base = row.base;
      const RingCode<F2u> base = psi_image(catalog::code(row.base));
      const Vec<F2u> x = parse_symbols<F2u>(row.x);
      const Elem<F2u> c = parse_c_f2u(row.c);
      const RingCode<F2u> ext = extend_free<F2u>(base, x, c);
      const BinaryCode bin = gray_image(ext);
      const WeightDistribution dist = weight_distribution(bin, opt.threads);
      const int d = dist.min_nonzero_weight();
      out.n = int(bin.length());
      out.k = int(bin.dimension());
      out.d = d;
      std::ostringstream detail;
      detail << nk_d(bin, d);
      bool pass = out.n == 68 && out.k == 34 && d == 12;
      try {
        const EnumeratorId id = identify_enumerator(bin, dist);
        out.id = id;
        detail << " " << to_string(id);
        const EnumeratorId want{Family::W68_2, row.beta, row.gamma};
        if (!(id == want)) {
          pass = false;
          detail << " (reported " << to_string(want) << ")";
        }
      } catch (const ClassificationError& e) {
        pass = false;
        detail << " unclassified: " << e.what();
      }
      out.pass = pass;
      out.detail = detail.str();
      rep.rows.push_back(std::move(out));
    }
    return rep;
  }

  throw std::invalid_argument("verify_table: tables are numbered 1..6");
}

// ---------------------------------------------------------------------------
// Extension search
// ---------------------------------------------------------------------------

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// X over F2 with odd weight (<X,X> = 1).
Vec<F2> sample_x_f2(std::mt19937_64& eng, size_t n) {
  Vec<F2> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = Elem<F2>(int(eng() & 1));
  Elem<F2> xx = inner_product<F2>(x, x);
  if (xx != el::f2::one) x[eng() % n] += el::f2::one;
  return x;
}

// X over F2+uF2 with <X,X> = 1 (odd number of unit coordinates).
Vec<F2u> sample_x_f2u(std::mt19937_64& eng, size_t n) {
  Vec<F2u> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = Elem<F2u>(int(eng() & 3));
  const Elem<F2u> xx = inner_product<F2u>(x, x);
  if (xx != el::f2u::one) x[eng() % n] += el::f2u::one;
  return x;
}

template <Ring R>
std::string symbols_of(const Vec<R>& x) {
  std::string s;
  for (const Elem<R> e : x) s += e.symbol();
  return s;
}

struct SearchCore {
  const std::vector<ExtTarget>& targets;
  const KnownParamsRegistry& registry;
  int classify_threads;

  bool target_hit(const EnumeratorId& id) const {
    for (const ExtTarget& t : targets)
      if (t.beta == id.beta && t.gamma == id.gamma) return true;
    return false;
  }

  // classifies an extended binary code; returns a record when it hits
  std::optional<CodeRecord> finish(BinaryCode bin, CodeRecord rec) const {
    const int n = int(bin.length());
    if (n != 58 && n != 64 && n != 66 && n != 68) return std::nullopt;
    const int want_d = n == 58 ? 10 : 12;
    const int d = min_distance_bz(bin, classify_threads);
    if (d != want_d) return std::nullopt;
    rec.d = d;
    WeightDistribution dist;
    try {
      dist = weight_distribution(bin, classify_threads);
    } catch (const capacity_error&) {
      return std::nullopt;
    }
    try {
      rec.id = identify_enumerator(bin, dist);
    } catch (const ClassificationError&) {
      return std::nullopt;
    }
    try {
      rec.is_new =
          registry.check(*rec.id) == KnownParamsRegistry::Novelty::New;
    } catch (const std::out_of_range&) {
      rec.is_new = false;
    }
    if (!target_hit(*rec.id) && !rec.is_new) return std::nullopt;
    return rec;
  }
};

template <class SampleFn>
ExtensionSearchResult run_search(int record_length, const std::string& parents,
                                 const std::vector<ExtTarget>& targets,
                                 const ExtensionSearchOptions& opt,
                                 RingId ring, SampleFn&& sample) {
  ExtensionSearchResult res;
  const KnownParamsRegistry& reg =
      opt.registry ? *opt.registry : KnownParamsRegistry::builtin();
  const int hw = opt.threads > 0
                     ? opt.threads
                     : int(std::max(1u, std::thread::hardware_concurrency()));
  const int outer_threads = opt.inner_parallel ? 1 : hw;
  const int inner_threads = opt.inner_parallel ? hw : 1;
  SearchCore core{targets, reg, inner_threads};

  res.attempted = opt.budget;
  res.truncated = true;  // the X space is never exhausted by sampling
  if (opt.budget == 0) return res;

  const uint64_t chunk = std::max<uint64_t>(1, uint64_t(outer_threads) * 8);
  std::vector<std::optional<CodeRecord>> slots;
  for (uint64_t lo = 0; lo < opt.budget; lo += chunk) {
    const uint64_t hi = std::min(opt.budget, lo + chunk);
    slots.assign(size_t(hi - lo), std::nullopt);
    auto work = [&](uint64_t i) {
      std::mt19937_64 eng(splitmix64(opt.seed + i));
      slots[size_t(i - lo)] = sample(core, eng, i);
    };
    if (outer_threads <= 1) {
      for (uint64_t i = lo; i < hi; ++i) work(i);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < outer_threads; ++t)
        pool.emplace_back([&, t] {
          for (uint64_t i = lo + uint64_t(t); i < hi;
               i += uint64_t(outer_threads))
            work(i);
        });
      for (auto& th : pool) th.join();
    }
    for (auto& s : slots)
      if (s) {
        s->length = record_length;
        s->ring = ring;
        s->parents = parents;
        s->seed = opt.seed;
        if (opt.sink) opt.sink(*s);
        res.records.push_back(std::move(*s));
      }
  }
  return res;
}

}  // namespace

ExtensionSearchResult extension_search(const BinaryCode& base,
                                       const std::string& parents,
                                       const std::vector<ExtTarget>& targets,
                                       const ExtensionSearchOptions& opt) {
  const RingCode<F2> ring_base = to_ring_code(base);
  return run_search(
      int(base.length()) + 2, parents, targets, opt, RingId::F2,
      [&](const SearchCore& core, std::mt19937_64& eng,
          uint64_t) -> std::optional<CodeRecord> {
        const Vec<F2> x = sample_x_f2(eng, base.length());
        const RingCode<F2> ext = extend_free<F2>(ring_base, x, el::f2::one);
        CodeRecord rec;
        rec.construction = "extend_free";
        rec.x = symbols_of(x);
        rec.c = "1";
        return core.finish(to_binary_code(ext), std::move(rec));
      });
}

ExtensionSearchResult extension_search(const RingCode<F2u>& base,
                                       const std::string& parents,
                                       const std::vector<ExtTarget>& targets,
                                       const ExtensionSearchOptions& opt) {
  using namespace el::f2u;
  // binary length of the extended code: phi doubles the n+2 ring coordinates
  return run_search(
      int(2 * (base.length() + 2)), parents, targets, opt, RingId::F2u,
      [&](const SearchCore& core, std::mt19937_64& eng,
          uint64_t) -> std::optional<CodeRecord> {
        const Vec<F2u> x = sample_x_f2u(eng, base.length());
        const Elem<F2u> c = (eng() & 1) ? one_u : one;
        const RingCode<F2u> ext = extend_free<F2u>(base, x, c);
        CodeRecord rec;
        rec.construction = "extend_free";
        rec.x = symbols_of(x);
        rec.c = c == one ? "1" : "1+u";
        return core.finish(gray_image(ext), std::move(rec));
      });
}

}  // namespace sdc
