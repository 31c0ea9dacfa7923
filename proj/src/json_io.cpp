#include "lazyhom/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lazyhom {

namespace {

Rational rational_of(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const std::invalid_argument&) {
  }
  throw UsageError(where + ": expected a rational string \"p\" or \"p/q\", got " + v.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

QVector vector_of(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n)
    throw DimensionMismatch("cli", where + ": expected an array of length " + std::to_string(n));
  QVector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Tensor3 tensor_of(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw DimensionMismatch("cli", where + ": expected " + std::to_string(n) + " slices");
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n)
      throw DimensionMismatch("cli", where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) + " rows");
    for (std::size_t j = 0; j < n; ++j) {
      const QVector row = vector_of(v[i][j], n, where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = row[k];
    }
  }
  return t;
}

Json strings_of(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

Json tensor_json(const Tensor3& t) {
  const std::size_t n = t.extent();
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json slice = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      QVector row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = t(i, j, k);
      slice.push_back(strings_of(row));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

}  // namespace

FinDimHopf hopf_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.empty()) throw UsageError("\"basis\" must be a nonempty array of labels");
  std::vector<std::string> labels;
  for (const auto& l : basis) {
    if (!l.is_string()) throw UsageError("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t n = labels.size();
  if (j.contains("dim") && (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() != n))
    throw DimensionMismatch("cli", "\"dim\" does not match the number of basis labels");
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "H";

  const Json& anti = field(j, "antipode");
  if (!anti.is_array() || anti.size() != n) throw DimensionMismatch("cli", "antipode: expected " + std::to_string(n) + " rows");
  QMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const QVector row = vector_of(anti[i], n, "antipode[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k) s(k, i) = row[k];
  }
  return FinDimHopf(name, std::move(labels), tensor_of(field(j, "mult"), n, "mult"), vector_of(field(j, "unit"), n, "unit"),
                    tensor_of(field(j, "comult"), n, "comult"), vector_of(field(j, "counit"), n, "counit"), std::move(s));
}

Json hopf_to_json(const FinDimHopf& h) {
  Json anti = Json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) anti.push_back(strings_of(h.antipode().col(i)));
  return Json{{"name", h.name()},
              {"dim", h.dim()},
              {"basis", h.labels()},
              {"unit", strings_of(h.unit())},
              {"counit", strings_of(h.counit())},
              {"mult", tensor_json(h.mult())},
              {"comult", tensor_json(h.comult())},
              {"antipode", std::move(anti)}};
}

FusionRing fusion_from_json(const Json& j) {
  FusionRing f;
  const Json& labels = field(j, "labels");
  if (!labels.is_array() || labels.empty()) throw UsageError("\"labels\" must be a nonempty array");
  for (const auto& l : labels) {
    if (!l.is_string()) throw UsageError("fusion labels must be strings");
    f.labels.push_back(l.get<std::string>());
  }
  auto index_of = [&](const Json& v) -> std::size_t {
    if (!v.is_string()) throw UsageError("fusion entries refer to labels by string, got " + v.dump());
    const auto it = std::find(f.labels.begin(), f.labels.end(), v.get<std::string>());
    if (it == f.labels.end()) throw UsageError("unknown fusion label " + v.dump());
    return static_cast<std::size_t>(it - f.labels.begin());
  };
  f.unit = index_of(field(j, "unit"));
  for (const auto& e : field(j, "mult")) {
    if (!e.is_array() || e.size() != 4 || !e[3].is_number_unsigned())
      throw UsageError("fusion entry must be [λ, μ, ν, multiplicity], got " + e.dump());
    const auto m = e[3].get<unsigned long>();
    if (m > 0) f.mult.push_back({index_of(e[0]), index_of(e[1]), index_of(e[2]), m});
  }
  f.validate();
  return f;
}

Json fusion_to_json(const FusionRing& f) {
  Json mult = Json::array();
  for (const auto& e : f.mult) mult.push_back({f.labels[e.lambda], f.labels[e.mu], f.labels[e.nu], e.multiplicity});
  return Json{{"labels", f.labels}, {"unit", f.labels[f.unit]}, {"mult", std::move(mult)}};
}

Json read_json_file(const std::string& path, std::string* raw_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (raw_bytes) *raw_bytes = text;
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError("'" + path + "' line " + std::to_string(line) + ", column " + std::to_string(col) + ": JSON syntax error");
  }
}

std::string fingerprint(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json to_json(const FPAbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(f.get_str());
  Json out{{"invariant_factors", std::move(factors)}, {"free_rank", g.free_rank()}, {"text", g.to_string()}};
  const auto order = g.order();
  out["order"] = order ? Json(order->get_str()) : Json(nullptr);
  return out;
}

Json to_json(const HomologyDescriptor& d) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < d.primitive_relations.rows(); ++i) rels.push_back(strings_of(d.primitive_relations.row(i)));
  return Json{{"group_part", to_json(d.group_part)},
              {"primitive_count", d.primitive_count},
              {"primitive_relations", std::move(rels)},
              {"free_primitives", d.free_primitives()},
              {"text", d.to_string()}};
}

Json to_json(const CharacterReport& c) {
  return Json{{"sign_factors", c.sign_factors},
              {"free_rank", c.free_rank},
              {"affine_dim", c.affine_dim},
              {"trivial", c.is_trivial()},
              {"text", c.to_string()}};
}

Json to_json(const Checks& checks) {
  Json out = Json::array();
  for (const auto& r : checks.records()) out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return out;
}

Json to_json(const HopfReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"axiom", c.axiom}, {"passed", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lazyhom
