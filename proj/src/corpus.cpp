#include "retla/corpus.hpp"

#include <charconv>
#include <stdexcept>

#include "retla/cartan.hpp"
#include "retla/rng.hpp"
#include "retla/semisimple.hpp"

namespace retla {

namespace {

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

std::string with_prime(const std::string& name, unsigned p) { return name + "(" + std::to_string(p) + ")"; }

RestrictedLieAlgebra ex44(unsigned p) {
  const PrimeField f(p);
  return RestrictedLieAlgebra(p, {"x", "t"}, {{0, 1, 0, f.neg(1)}}, {Vec{0, 0}, Vec{0, 1}}, with_prime("ex44", p));
}

RestrictedLieAlgebra sl2(unsigned p) {
  const PrimeField f(p);
  std::vector<BracketEntry> br{{0, 1, 0, f.reduce(-2)}, {0, 2, 1, 1}, {1, 2, 2, f.reduce(-2)}};
  return RestrictedLieAlgebra(p, {"e", "h", "f"}, br, {Vec(3, 0), unit_vec(3, 1), Vec(3, 0)}, with_prime("sl2", p));
}

RestrictedLieAlgebra borel_sl2(unsigned p) {
  const PrimeField f(p);
  return RestrictedLieAlgebra(p, {"e", "h"}, {{0, 1, 0, f.reduce(-2)}}, {Vec(2, 0), unit_vec(2, 1)},
                              with_prime("borel_sl2", p));
}

RestrictedLieAlgebra gl(std::size_t n, unsigned p) {
  const PrimeField f(p);
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  std::vector<BracketEntry> br;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      Vec c(d, 0);
      if (j == k) c[i * n + l] = f.add(c[i * n + l], 1);
      if (l == i) c[k * n + j] = f.sub(c[k * n + j], 1);
      for (std::size_t e = 0; e < d; ++e)
        if (c[e]) br.push_back({a, b, e, c[e]});
    }
  std::vector<Vec> pmap(d, Vec(d, 0));
  for (std::size_t i = 0; i < n; ++i) pmap[i * n + i] = unit_vec(d, i * n + i);
  return RestrictedLieAlgebra(p, labels, br, pmap, with_prime("gl" + std::to_string(n), p));
}

RestrictedLieAlgebra heisenberg(unsigned p, bool toral_center) {
  std::vector<Vec> pmap(3, Vec(3, 0));
  if (toral_center) pmap[2] = unit_vec(3, 2);
  return RestrictedLieAlgebra(p, {"x", "y", "z"}, {{0, 1, 2, 1}}, pmap,
                              with_prime(toral_center ? "heisenberg" : "heisenberg_zero_pmap", p));
}

RestrictedLieAlgebra witt(unsigned p) {
  const PrimeField f(p);
  const std::size_t n = p;
  // basis index a holds e_{a-1}
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back("e_" + std::to_string(static_cast<int>(a) - 1));
  std::vector<BracketEntry> br;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const int i = static_cast<int>(a) - 1, j = static_cast<int>(b) - 1;
      const int s = i + j;
      if (s < -1 || s > static_cast<int>(p) - 2) continue;
      const std::uint8_t c = f.reduce(j - i);
      if (c) br.push_back({a, b, static_cast<std::size_t>(s + 1), c});
    }
  std::vector<Vec> pmap(n, Vec(n, 0));
  pmap[1] = unit_vec(n, 1);
  return RestrictedLieAlgebra(p, labels, br, pmap, with_prime("witt", p));
}

RestrictedLieAlgebra toral(std::size_t k, unsigned p) {
  std::vector<std::string> labels;
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    pmap.push_back(unit_vec(k, i));
  }
  return RestrictedLieAlgebra(p, labels, {}, pmap, with_prime("toral_" + std::to_string(k), p));
}

RestrictedLieAlgebra nil_chain(std::size_t k, unsigned p) {
  std::vector<std::string> labels;
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    pmap.push_back(i + 1 < k ? unit_vec(k, i + 1) : Vec(k, 0));
  }
  return RestrictedLieAlgebra(p, labels, {}, pmap, with_prime("nil_" + std::to_string(k), p));
}

RestrictedLieAlgebra vt_weights(const std::vector<long long>& weights, unsigned p) {
  const PrimeField f(p);
  const std::size_t m = weights.size(), n = m + 1;
  std::vector<std::string> labels;
  std::string key = "vt_weights:";
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("v" + std::to_string(i + 1));
    key += (i ? "," : "") + std::to_string(weights[i]);
    // [v_i, t] = -w_i v_i
    const std::uint8_t c = f.neg(f.reduce(weights[i]));
    if (c) br.push_back({i, m, i, c});
  }
  labels.push_back("t");
  std::vector<Vec> pmap(n, Vec(n, 0));
  pmap[m] = unit_vec(n, m);
  return RestrictedLieAlgebra(p, labels, br, pmap, with_prime(key, p));
}

std::optional<std::size_t> parse_size(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<long long> parse_weights(const std::string& s) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    const std::string part = s.substr(start, comma - start);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw std::invalid_argument("bad weight list: " + s);
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

unsigned default_prime(const std::string& name) {
  if (name == "ex44" || name == "gl3" || starts_with(name, "nil_")) return 2;
  if (name == "sl2" || name == "witt") return 5;
  return 3;
}

RestrictedLieAlgebra make_named(const std::string& name, unsigned p) {
  if (p == 0) p = default_prime(name);
  if (!PrimeField::supported(p)) throw std::invalid_argument("unsupported prime " + std::to_string(p));
  if (name == "ex44") return ex44(p);
  if (name == "sl2") return sl2(p);
  if (name == "gl2") return gl(2, p);
  if (name == "gl3") return gl(3, p);
  if (name == "borel_sl2") return borel_sl2(p);
  if (name == "heisenberg") return heisenberg(p, true);
  if (name == "heisenberg_zero_pmap") return heisenberg(p, false);
  if (name == "witt") {
    if (p < 5) throw std::invalid_argument("witt requires p >= 5");
    return witt(p);
  }
  if (starts_with(name, "toral_") || starts_with(name, "nil_")) {
    const bool is_toral = starts_with(name, "toral_");
    const auto k = parse_size(name.substr(is_toral ? 6 : 4));
    if (!k || *k == 0 || *k > 12) throw std::invalid_argument("bad rank in " + name);
    return is_toral ? toral(*k, p) : nil_chain(*k, p);
  }
  if (name == "vt_weights") return vt_weights({1, 2}, p);
  if (starts_with(name, "vt_weights:")) return vt_weights(parse_weights(name.substr(11)), p);
  throw std::invalid_argument("unknown algebra name: " + name);
}

const std::vector<CorpusEntry>& default_corpus() {
  static const std::vector<CorpusEntry> corpus{
      {"ex44", 2, {false, 1, 2}},
      {"sl2", 5, {false, 0, 25}},
      {"gl2", 3, {false, 0, std::nullopt}},
      {"gl3", 2, {false, 0, std::nullopt}},
      {"borel_sl2", 3, {false, 1, 3}},
      {"heisenberg", 3, {true, 0, 1}},
      {"heisenberg_zero_pmap", 3, {true, 3, 1}},
      {"witt", 5, {false, 0, std::nullopt}},
      {"toral_2", 3, {true, 0, 1}},
      {"nil_3", 2, {true, 3, 1}},
      {"vt_weights:1,2", 3, {false, 2, 9}},
  };
  return corpus;
}

std::vector<std::string> check_expected(const CorpusEntry& entry, std::uint64_t budget, std::uint64_t seed) {
  const RestrictedLieAlgebra g = entry.build();
  std::vector<std::string> out;
  const bool nilpotent = is_nilpotent(g);
  if (nilpotent != entry.expected.nilpotent)
    out.push_back("nilpotent: recorded " + std::string(entry.expected.nilpotent ? "yes" : "no") + ", computed " +
                  (nilpotent ? "yes" : "no"));
  const RadicalResult r = p_nilpotent_radical(g, budget, seed);
  if (r.exactness == Exactness::Exact && r.radical.dim() != entry.expected.radical_dim)
    out.push_back("radical dimension: recorded " + std::to_string(entry.expected.radical_dim) + ", computed " +
                  std::to_string(r.radical.dim()));
  if (entry.expected.maximal_torals) {
    const ToralEnumeration e = enumerate_torals(g, budget, seed);
    if (e.exact && e.maximal.size() != *entry.expected.maximal_torals)
      out.push_back("maximal torals: recorded " + std::to_string(*entry.expected.maximal_torals) + ", computed " +
                    std::to_string(e.maximal.size()));
  }
  return out;
}

MatrixAlgebra random_gl_subalgebra(std::size_t n, unsigned p, std::size_t generators, std::uint64_t seed) {
  if (n == 0 || n > 4) throw std::invalid_argument("random_gl_subalgebra: n must be in 1..4");
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("random_gl_subalgebra: p must be 2, 3 or 5");
  Rng rng = make_rng(seed, 0x676cULL);
  std::vector<FpMatrix> gens;
  for (std::size_t k = 0; k < generators; ++k) {
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_residue(rng, p);
    gens.push_back(std::move(m));
  }
  const std::string name = "random(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                           ",gens=" + std::to_string(generators) + ",seed=" + std::to_string(seed) + ")";
  return from_matrices(p, n, gens, name);
}

}  // namespace retla
