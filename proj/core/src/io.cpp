#include "sdc/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sdc {

RingId ring_of(const AnyCode& c) {
  return std::visit(
      [](const auto& code) {
        using R = typename std::decay_t<decltype(code)>::ring_type;
        return R::id;
      },
      c);
}

size_t length_of(const AnyCode& c) {
  return std::visit([](const auto& code) { return code.length(); }, c);
}

RingId parse_ring(const std::string& name) {
  if (name == "F2") return RingId::F2;
  if (name == "F2uF2") return RingId::F2u;
  if (name == "F4") return RingId::F4;
  if (name == "F4uF4") return RingId::F4u;
  throw std::invalid_argument("unknown ring: " + name);
}

std::string matrix_text(const AnyCode& code) {
  return std::visit([](const auto& c) { return matrix_text(c); }, code);
}

namespace {

template <Ring R>
RingCode<R> read_body(std::istream& in, size_t n, size_t k) {
  RingCode<R> code{Mat<R>(k, n), false};
  std::string line;
  for (size_t i = 0; i < k; ++i) {
    if (!(in >> line))
      throw std::invalid_argument("matrix file: missing row " +
                                  std::to_string(i + 1));
    if (line.size() != n)
      throw std::invalid_argument("matrix file: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(line.size()) +
                                  " symbols, expected " + std::to_string(n));
    for (size_t j = 0; j < n; ++j) {
      Elem<R> e;
      if (!Elem<R>::parse(line[j], e))
        throw std::invalid_argument(std::string("matrix file: bad symbol '") +
                                    line[j] + "' for ring " +
                                    std::string(R::name));
      code.gen(i, j) = e;
    }
  }
  // recognize [I | M] so the algebraic self-duality test applies directly
  if (n == 2 * k && k > 0) {
    bool std_form = true;
    for (size_t i = 0; i < k && std_form; ++i)
      for (size_t j = 0; j < k && std_form; ++j)
        if (code.gen(i, j) != Elem<R>(i == j ? 1 : 0)) std_form = false;
    code.standard_form = std_form;
  }
  return code;
}

}  // namespace

AnyCode read_matrix(std::istream& in) {
  std::string ring;
  size_t n = 0, k = 0;
  if (!(in >> ring >> n >> k))
    throw std::invalid_argument("matrix file: bad header, expected `ring n k`");
  switch (parse_ring(ring)) {
    case RingId::F2: return read_body<F2>(in, n, k);
    case RingId::F2u: return read_body<F2u>(in, n, k);
    case RingId::F4: return read_body<F4>(in, n, k);
    case RingId::F4u: return read_body<F4u>(in, n, k);
  }
  throw std::invalid_argument("matrix file: bad ring");
}

AnyCode read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_matrix(in);
}

BinaryCode binary_image(const AnyCode& code) {
  return std::visit([](const auto& c) { return gray_image(c); }, code);
}

std::string wdist_csv(const WeightDistribution& dist) {
  std::string out = "w,A_w\n";
  for (size_t w = 0; w < dist.counts.size(); ++w)
    if (dist.counts[w])
      out += std::to_string(w) + "," + std::to_string(dist.counts[w]) + "\n";
  return out;
}

std::string record_json(const CodeRecord& rec) {
  nlohmann::ordered_json j;
  j["length"] = rec.length;
  j["ring"] = std::string(ring_name(rec.ring));
  j["construction"] = rec.construction;
  j["parents"] = rec.parents;
  j["X"] = rec.x;
  j["c"] = rec.c;
  j["d"] = rec.d;
  if (rec.id) {
    j["family"] = to_string(rec.id->family);
    j["beta"] = rec.id->beta;
    if (rec.id->gamma) j["gamma"] = *rec.id->gamma;
  } else {
    j["family"] = nullptr;
  }
  j["new"] = rec.is_new;
  j["seed"] = rec.seed;
  return j.dump();
}

}  // namespace sdc
