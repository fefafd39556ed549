#include "retla/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace retla {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(key, "missing field");
  return obj.at(key);
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<long long>();
}

std::size_t index_in(const json& v, const std::string& path, std::size_t bound) {
  const long long i = integer(v, path);
  if (i < 0 || static_cast<std::size_t>(i) >= bound)
    throw SchemaError(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(i);
}

std::uint8_t residue(const json& v, const std::string& path, unsigned p) {
  const long long c = integer(v, path);
  if (c < 0 || c >= static_cast<long long>(p))
    throw SchemaError(path, "coefficient " + std::to_string(c) + " is not a residue in [0, " + std::to_string(p) + ")");
  return static_cast<std::uint8_t>(c);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ordered_json to_json(const RestrictedLieAlgebra& g) {
  ordered_json doc;
  doc["name"] = g.name();
  doc["p"] = g.p();
  doc["dim"] = g.dim();
  doc["basis"] = g.labels();
  ordered_json brackets = ordered_json::array();
  for (const auto& e : g.bracket_entries()) brackets.push_back({e.i, e.j, e.k, e.c});
  doc["brackets"] = std::move(brackets);
  ordered_json pmap = ordered_json::object();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    ordered_json terms = ordered_json::array();
    const Vec& image = g.pmap_image(i);
    for (std::size_t k = 0; k < image.size(); ++k)
      if (image[k]) terms.push_back({k, image[k]});
    if (!terms.empty()) pmap[g.labels()[i]] = std::move(terms);
  }
  doc["pmap"] = std::move(pmap);
  return doc;
}

RestrictedLieAlgebra from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw SchemaError("name", "expected a string");
    name = doc.at("name").get<std::string>();
  }
  const long long p_raw = integer(field(doc, "p"), "p");
  if (p_raw < 0 || !PrimeField::supported(static_cast<unsigned>(p_raw)))
    throw SchemaError("p", "must be one of 2, 3, 5, 7 (got " + std::to_string(p_raw) + ")");
  const unsigned p = static_cast<unsigned>(p_raw);

  const json& basis = field(doc, "basis");
  if (!basis.is_array()) throw SchemaError("basis", "expected an array of labels");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string path = "basis[" + std::to_string(i) + "]";
    if (!basis[i].is_string()) throw SchemaError(path, "expected a string");
    std::string label = basis[i].get<std::string>();
    if (label.empty()) throw SchemaError(path, "empty label");
    if (!index.emplace(label, i).second) throw SchemaError(path, "duplicate label '" + label + "'");
    labels.push_back(std::move(label));
  }
  const std::size_t n = labels.size();
  if (doc.contains("dim")) {
    const long long d = integer(doc.at("dim"), "dim");
    if (d < 0 || static_cast<std::size_t>(d) != n)
      throw SchemaError("dim", "is " + std::to_string(d) + " but basis has " + std::to_string(n) + " labels");
  } else {
    throw SchemaError("dim", "missing field");
  }

  std::vector<BracketEntry> entries;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  if (doc.contains("brackets")) {
    const json& br = doc.at("brackets");
    if (!br.is_array()) throw SchemaError("brackets", "expected an array");
    for (std::size_t r = 0; r < br.size(); ++r) {
      const std::string path = "brackets[" + std::to_string(r) + "]";
      if (!br[r].is_array() || br[r].size() != 4) throw SchemaError(path, "expected [i, j, k, c]");
      const std::size_t i = index_in(br[r][0], path + "[0]", n);
      const std::size_t j = index_in(br[r][1], path + "[1]", n);
      const std::size_t k = index_in(br[r][2], path + "[2]", n);
      const std::uint8_t c = residue(br[r][3], path + "[3]", p);
      if (i >= j) throw SchemaError(path, "requires i < j");
      if (!seen.emplace(i, j, k).second) throw SchemaError(path, "duplicate entry");
      if (c) entries.push_back({i, j, k, c});
    }
  }

  std::vector<Vec> pmap(n, Vec(n, 0));
  if (doc.contains("pmap")) {
    const json& pm = doc.at("pmap");
    if (!pm.is_object()) throw SchemaError("pmap", "expected an object keyed by basis label");
    for (const auto& [label, terms] : pm.items()) {
      const std::string path = "pmap." + label;
      auto it = index.find(label);
      if (it == index.end()) throw SchemaError(path, "unknown basis label");
      if (!terms.is_array()) throw SchemaError(path, "expected an array of [k, c]");
      Vec& image = pmap[it->second];
      std::vector<bool> used(n, false);
      for (std::size_t r = 0; r < terms.size(); ++r) {
        const std::string tpath = path + "[" + std::to_string(r) + "]";
        if (!terms[r].is_array() || terms[r].size() != 2) throw SchemaError(tpath, "expected [k, c]");
        const std::size_t k = index_in(terms[r][0], tpath + "[0]", n);
        if (used[k]) throw SchemaError(tpath, "duplicate coordinate");
        used[k] = true;
        image[k] = residue(terms[r][1], tpath + "[1]", p);
      }
    }
  }
  for (const auto& [key, value] : doc.items()) {
    static const std::set<std::string> known{"name", "p", "dim", "basis", "brackets", "pmap"};
    if (!known.count(key)) throw SchemaError(key, "unknown field");
  }
  return RestrictedLieAlgebra(p, std::move(labels), entries, std::move(pmap), std::move(name));
}

RestrictedLieAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col), e.what());
  }
  return from_json(doc);
}

RestrictedLieAlgebra load(const std::string& path, bool validate_axioms) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  RestrictedLieAlgebra g = parse_algebra(buf.str());
  if (validate_axioms) {
    ValidationReport report = validate(g);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  return g;
}

void save(const RestrictedLieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(g).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

ordered_json to_json(const VerificationReport& r, bool with_timing) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  j["algebra"] = r.algebra;
  j["status"] = to_string(r.status);
  j["detail"] = r.detail;
  j["witnesses"] = r.witnesses;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  if (with_timing) j["millis"] = r.millis;
  return j;
}

}  // namespace retla
