#include "floerkit/io.hpp"

#include <fstream>
#include <sstream>

#include "floerkit/error.hpp"

namespace floerkit {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) invalid(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) invalid(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) invalid(where, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) invalid(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_array()) invalid(where, std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) invalid(where, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) invalid(where, "expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json word_to_json(const Word& w, const AInftyDatum& d) {
  Json out = Json::array();
  for (int g : w) out.push_back(d.generators[static_cast<std::size_t>(g)].id);
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    // drop the library's own "[json.exception.parse_error.101] " prefix
    if (auto p = message.find("] "); p != std::string::npos) message = message.substr(p + 2);
    throw ParseError(message, line, column);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected an integer or a rational string, got " + j.dump());
}

Json to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Series series_from_json(const Json& j) {
  if (j.is_number_integer()) return Series(j.get<long>());
  if (j.is_string()) return Series::parse(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected a series literal, got " + j.dump());
}

AInftyDatum datum_from_json(const Json& j) {
  const std::string where = "datum";
  AInftyDatum d;
  d.l = int_field(j, "labels", where) - 1;
  if (d.l < 1) invalid(where, "need at least two labels");
  for (const auto& g : array_field(j, "generators", where)) {
    Generator gen{string_field(g, "id", "generator"), int_field(g, "i", "generator"), int_field(g, "j", "generator"),
                  int_field(g, "mu", "generator")};
    if (gen.i < 0 || gen.j > d.l || gen.i >= gen.j)
      invalid("generator " + gen.id, "labels must satisfy 0 <= i < j <= l");
    for (const auto& other : d.generators)
      if (other.id == gen.id) invalid("generator " + gen.id, "duplicate id");
    d.generators.push_back(std::move(gen));
  }
  if (auto it = j.find("intersection_number"); it != j.end()) {
    if (!it->is_number_integer()) invalid(where, "intersection_number must be an integer");
    d.intersection_number = it->get<long>();
  }
  if (auto it = j.find("m"); it != j.end()) d.m = tensor_from_json(*it, d, d);
  check_degrees(d, d.m, 2, "m");
  return d;
}

Json to_json(const AInftyDatum& d) {
  Json out;
  out["labels"] = d.l + 1;
  Json gens = Json::array();
  for (const auto& g : d.generators) gens.push_back({{"id", g.id}, {"i", g.i}, {"j", g.j}, {"mu", g.mu}});
  out["generators"] = gens;
  out["m"] = tensor_to_json(d.m, d, d);
  if (d.intersection_number) out["intersection_number"] = *d.intersection_number;
  return out;
}

Tensor tensor_from_json(const Json& j, const AInftyDatum& source, const AInftyDatum& target) {
  if (!j.is_array()) invalid("tensor", "expected an array of entries");
  Tensor t;
  std::size_t k = 0;
  for (const auto& e : j) {
    const std::string where = "entry " + std::to_string(k++);
    Word w;
    for (const auto& x : array_field(e, "inputs", where)) {
      if (!x.is_string()) invalid(where, "inputs must be generator ids");
      w.push_back(source.index_of(x.get<std::string>()));
    }
    if (auto q = e.find("q"); q != e.end() && (!q->is_number_integer() || q->get<std::size_t>() != w.size()))
      invalid(where, "q does not match the number of inputs");
    const int out = target.index_of(string_field(e, "output", where));
    try {
      t.add(w, out, series_from_json(field(e, "coeff", where)));
    } catch (const ParseError& p) {
      throw ParseError(where + " coeff: " + p.detail(), p.line(), p.column());
    }
  }
  return t;
}

Json tensor_to_json(const Tensor& t, const AInftyDatum& source, const AInftyDatum& target) {
  Json out = Json::array();
  for (const auto& [w, row] : t.entries())
    for (const auto& [g, c] : row)
      out.push_back({{"q", w.size()},
                     {"inputs", word_to_json(w, source)},
                     {"output", target.generators[static_cast<std::size_t>(g)].id},
                     {"coeff", c.to_string()}});
  return out;
}

MapDatum map_from_json(const Json& j, const AInftyDatum& source, const AInftyDatum& target) {
  MapDatum h;
  if (!j.is_object()) invalid("map", "expected an object");
  if (auto it = j.find("H"); it != j.end()) h.h = tensor_from_json(*it, source, target);
  if (auto it = j.find("K"); it != j.end()) h.k = tensor_from_json(*it, source, target);
  check_map_degrees(source, target, h);
  return h;
}

Augmentation augmentation_from_json(const Json& j, const AInftyDatum& d) {
  if (!j.is_object()) invalid("augmentation", "expected an object of generator id -> series");
  Augmentation a;
  for (const auto& [id, v] : j.items()) {
    Series s = series_from_json(v);
    if (!s.is_zero()) a.values[d.index_of(id)] = s;
  }
  return a;
}

Json to_json(const Augmentation& a, const AInftyDatum& d) {
  Json out = Json::object();
  for (const auto& [g, s] : a.values) out[d.generators[static_cast<std::size_t>(g)].id] = s.to_string();
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Polynomial(std::move(c));
  }
  return Polynomial(std::vector<Rational>{rational_from_json(j)});
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) invalid("matrix", "expected an array of rows");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) invalid("matrix", "expected an array of rows");
    m.emplace_back();
    for (const auto& x : row) m.back().push_back(rational_from_json(x));
  }
  return m;
}

LagrangianPath path_from_json(const Json& j) {
  const std::string where = "path";
  const int n = int_field(j, "n", where);
  std::vector<PathPiece> pieces;
  for (const auto& p : array_field(j, "pieces", where)) {
    PathPiece piece{rational_from_json(field(p, "t0", "piece")), rational_from_json(field(p, "t1", "piece")), {}};
    for (const auto& row : array_field(p, "A", "piece")) {
      if (!row.is_array()) invalid("piece", "expected an array of rows");
      piece.a.emplace_back();
      for (const auto& x : row) piece.a.back().push_back(polynomial_from_json(x));
    }
    pieces.push_back(std::move(piece));
  }
  return LagrangianPath(n, std::move(pieces));
}

MorseDatum morse_from_json(const Json& j) {
  const std::string where = "morse";
  MorseDatum m;
  m.n = int_field(j, "n", where);
  for (const auto& p : array_field(j, "critical_points", where))
    m.points.push_back({string_field(p, "id", "critical point"), int_field(p, "index", "critical point"),
                        rational_from_json(field(p, "value", "critical point"))});
  if (auto it = j.find("flows"); it != j.end())
    for (const auto& f : *it)
      m.flows.push_back({string_field(f, "from", "flow"), string_field(f, "to", "flow"), int_field(f, "count", "flow")});
  if (auto it = j.find("triples"); it != j.end())
    for (const auto& t : *it)
      m.triples.push_back({string_field(t, "a", "triple"), string_field(t, "b", "triple"),
                           string_field(t, "out", "triple"), int_field(t, "count", "triple"),
                           rational_from_json(field(t, "action", "triple"))});
  if (auto it = j.find("intersection_number"); it != j.end()) m.intersection_number = it->get<long>();
  return m;
}

OpenString open_string_from_json(const Json& j) {
  const std::string where = "string";
  std::vector<ElementaryString> factors;
  for (const auto& f : array_field(j, "factors", where))
    factors.push_back({string_field(f, "id", "factor"), string_field(f, "from", "factor"), string_field(f, "to", "factor"),
                       int_field(f, "mu", "factor")});
  const int shift = j.contains("shift") ? int_field(j, "shift", where) : 0;
  return OpenString(std::move(factors), shift);
}

Json to_json(const OpenString& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors())
    factors.push_back({{"id", f.id}, {"from", f.source}, {"to", f.target}, {"mu", f.mu}});
  return {{"factors", factors}, {"shift", s.shift()}};
}

Conductor conductor_from_json(const Json& j) {
  if (!j.is_array()) invalid("conductor", "expected an array of labels");
  std::vector<std::string> labels;
  for (const auto& x : j) {
    if (!x.is_string()) invalid("conductor", "labels must be strings");
    labels.push_back(x.get<std::string>());
  }
  return Conductor(std::move(labels));
}

Continuation continuation_from_json(const Json& j) {
  const std::string where = "continuation";
  return Continuation(conductor_from_json(field(j, "source", where)), conductor_from_json(field(j, "target", where)),
                      int_list(field(j, "domain", where), where), int_list(field(j, "phi", where), where));
}

Json to_json(const Conductor& c) { return c.labels(); }

Json to_json(const Continuation& c) {
  return {{"source", to_json(c.source())}, {"target", to_json(c.target())}, {"domain", c.domain()}, {"phi", c.phi()}};
}

Json to_json(const CheckReport& r) {
  return {{"name", r.name}, {"ok", r.ok()}, {"checked", r.checked}, {"failures", r.failures}, {"messages", r.messages}};
}

Json to_json(const AxiomReport& r) {
  return {{"ok", r.ok()}, {"A1", to_json(r.a1)}, {"A2", to_json(r.a2)}, {"A3", to_json(r.a3)}};
}

Json to_json(const AugmentationReport& r) {
  return {{"ok", r.ok()}, {"closed", to_json(r.closed)}, {"factorizes", to_json(r.factorizes)}};
}

Json to_json(const CohomologyReport& r) {
  Json ranks = Json::object();
  for (const auto& [deg, k] : r.ranks) ranks[std::to_string(deg)] = k;
  return {{"modulus", r.modulus}, {"rank", r.rank}, {"ranks", ranks}, {"differential_rank", r.differential_rank}};
}

Json to_json(const SymbolicReport& r) {
  return {{"ok", r.ok()},
          {"q_max", r.q_max},
          {"disjoint_pairs", r.disjoint_pairs},
          {"disjoint_uncancelled", r.disjoint_uncancelled},
          {"nested_terms", r.nested_terms},
          {"nested_mismatches", r.nested_mismatches},
          {"q_reading_equivalent", r.q_reading_equivalent}};
}

Json to_json(const LemmaReport& r) {
  return {{"name", r.name},
          {"ok", r.ok()},
          {"terms", r.terms.size()},
          {"identity_failures", r.identity_failures},
          {"evaluation_failures", r.evaluation_failures},
          {"pairing_failures", r.pairing_failures}};
}

Json to_json(const CrossingReport& r) {
  Json cs = Json::array();
  for (const auto& c : r.crossings) {
    Json time = c.time.exact() ? to_json(c.time.lo) : Json::array({to_json(c.time.lo), to_json(c.time.hi)});
    cs.push_back({{"time", time},
                  {"kernel_dimension", c.kernel_dimension},
                  {"signature", c.form_signature},
                  {"weight", to_json(c.weight)}});
  }
  return {{"crossings", cs}, {"rs_index", to_json(r.index)}};
}

Json to_json(const SftIndexBound& b) {
  return {{"mu_max", b.mu_max}, {"bound", b.bound}, {"majorant", b.majorant}, {"satisfies", b.satisfies}};
}

Json to_json(const BoundaryReport& r) {
  Json out{{"kind", r.kind == PolytopeKind::Associahedron ? "assoc" : "multi"},
           {"l", r.l},
           {"ok", r.ok()},
           {"faces_checked", r.faces_checked},
           {"nonzero_faces", r.nonzero_faces}};
  if (r.first_failure) out["first_failure"] = r.first_failure->nested();
  return out;
}

Json to_json(const FacetFactorization& f) {
  return {{"facet", f.describe()}, {"sign", f.sign}};
}

}  // namespace floerkit
