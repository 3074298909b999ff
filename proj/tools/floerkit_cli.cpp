#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "floerkit/error.hpp"
#include "floerkit/io.hpp"

using namespace floerkit;

namespace {

struct Outcome {
  Json report;
  bool pass = true;
  std::string text;  // preferred --text rendering; generic when empty
};

void render_text(const Json& j, const std::string& indent, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << indent << k << ":\n";
        render_text(v, indent + "  ", out);
      } else {
        out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
    if (flat) {
      out << indent << j.dump() << "\n";
      return;
    }
    for (const auto& v : j) {
      out << indent << "-\n";
      render_text(v, indent + "  ", out);
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

// novikov eval: a single literal, or parenthesised literals joined by + - * /.
class Expression {
 public:
  Expression(std::string text, Exponent cutoff, CoefficientRing ring)
      : text_(std::move(text)), cutoff_(std::move(cutoff)), ring_(ring) {}

  Series evaluate() {
    if (text_.find('(') == std::string::npos) return Series::parse(text_);
    Series v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  Series sum() {
    Series v = product();
    while (true) {
      skip();
      if (accept('+')) v = v + product();
      else if (accept('-')) v = v - product();
      else return v;
    }
  }

  Series product() {
    Series v = atom();
    while (true) {
      skip();
      if (accept('*')) v = v * atom();
      else if (accept('/')) v = v * invert(atom(), cutoff_, ring_);
      else return v;
    }
  }

  Series atom() {
    skip();
    if (accept('-')) return -atom();
    const std::size_t open = pos_;
    if (!accept('(')) fail("expected '('");
    if (text_.compare(pos_, 1, "(") == 0) {
      Series v = sum();
      skip();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    const std::size_t close = text_.find(')', pos_);
    if (close == std::string::npos) {
      pos_ = open;
      fail("unbalanced '('");
    }
    const std::string literal = text_.substr(pos_, close - pos_);
    try {
      Series v = Series::parse(literal);
      pos_ = close + 1;
      return v;
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), 1, static_cast<int>(open + 1) + e.column());
    }
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, static_cast<int>(pos_) + 1);
  }

  std::string text_;
  std::size_t pos_ = 0;
  Exponent cutoff_;
  CoefficientRing ring_;
};

Json series_json(const Series& s) {
  Json out{{"value", s.to_string()}, {"exact", s.is_exact()}};
  if (auto v = s.valuation()) out["valuation"] = to_json(v->value());
  else out["valuation"] = nullptr;
  return out;
}

PolytopeKind polytope_kind(const std::string& name) {
  return name == "assoc" ? PolytopeKind::Associahedron : PolytopeKind::Multiplihedron;
}

Outcome run_polytope(const std::string& kind_name, int l, bool faces, bool facet_signs, bool boundary_check) {
  const PolytopeKind kind = polytope_kind(kind_name);
  Outcome o;
  if (faces) {
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& t : enumerate_faces(kind, l)) {
      list.push_back({{"dimension", t.dimension()}, {"tree", t.nested()}});
      text << t.dimension() << " " << t.nested() << "\n";
    }
    o.report = list;
    o.text = text.str();
  } else if (facet_signs) {
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& f : facets_with_signs(kind, l)) {
      list.push_back(to_json(f));
      text << (f.sign > 0 ? "+ " : "- ") << f.describe() << "\n";
    }
    o.report = list;
    o.text = text.str();
  } else if (boundary_check) {
    BoundaryReport r = boundary_map_consistency(kind, l);
    o.report = to_json(r);
    o.pass = r.ok();
  } else {
    std::vector<std::size_t> f = f_vector(kind, l);
    o.report = f;
  }
  return o;
}

Outcome run_maslov(const std::string& file) {
  const Json j = read_json_file(file);
  const LagrangianPath path = path_from_json(j);
  const RationalMatrix reference = j.contains("reference") ? matrix_from_json(j["reference"]) : path.at(path.start());
  Outcome o;
  o.report = to_json(crossings(reference, path));
  try {
    const int mu = string_index(path);
    o.report["string_index"] = mu;
    o.report["dual_string_index"] = string_index(path.reversed());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonTransverseEndpoints) throw;
    o.report["string_index"] = nullptr;
    o.report["note"] = e.what();
  }
  return o;
}

Outcome run_ainfty_check(const std::string& file, int modulus) {
  const AInftyDatum d = datum_from_json(read_json_file(file));
  const CheckReport a = check_a_infinity(d);
  const AxiomReport ax = validate_axioms_A(assemble_differential(d, modulus));
  return {{{"file", file}, {"a_infinity", to_json(a)}, {"axioms", to_json(ax)}}, a.ok() && ax.ok(), ""};
}

Outcome run_ainfty_map(const std::string& file) {
  const Json j = read_json_file(file);
  const AInftyDatum source = datum_from_json(j.at("source"));
  const AInftyDatum target = datum_from_json(j.at("target"));
  const MapDatum h = map_from_json(j.at("map"), source, target);
  const CheckReport chain = check_chain_map(source, target, h);
  const CheckReport b = validate_axioms_B(source, target, h);
  return {{{"file", file}, {"chain_map", to_json(chain)}, {"axioms_B", to_json(b)}}, chain.ok() && b.ok(), ""};
}

Outcome run_ainfty_homotopy(const std::string& file) {
  const Json j = read_json_file(file);
  const AInftyDatum source = datum_from_json(j.at("source"));
  const AInftyDatum target = datum_from_json(j.at("target"));
  const MapDatum h0 = map_from_json(j.at("h0"), source, target);
  const MapDatum h1 = map_from_json(j.at("h1"), source, target);
  MapDatum k;
  k.k = tensor_from_json(j.at("K"), source, target);
  check_map_degrees(source, target, k);
  const CheckReport r = check_homotopy(source, target, h0, h1, k.k);
  return {{{"file", file}, {"homotopy", to_json(r)}}, r.ok(), ""};
}

Outcome run_ainfty_compose(const std::string& file) {
  const Json j = read_json_file(file);
  const AInftyDatum source = datum_from_json(j.at("source"));
  const AInftyDatum middle = datum_from_json(j.at("middle"));
  const AInftyDatum target = datum_from_json(j.at("target"));
  const MapDatum inner = map_from_json(j.at("inner"), source, middle);
  const MapDatum outer = map_from_json(j.at("outer"), middle, target);
  const CheckReport r = check_composition(source, middle, outer, inner);
  const MapDatum c = compose_maps(source, outer, inner);
  return {{{"file", file}, {"composition", to_json(r)}, {"composite", {{"H", tensor_to_json(c.h, source, target)}}}},
          r.ok(),
          ""};
}

Outcome run_ainfty_augment(const std::string& file) {
  const Json j = read_json_file(file);
  const AInftyDatum d = datum_from_json(j.at("datum"));
  const Augmentation a = augmentation_from_json(j.at("augmentation"), d);
  const AugmentationReport r = check_augmentation(d, a);
  Outcome o{{{"file", file}, {"augmentation", to_json(r)}}, r.ok(), ""};
  if (j.contains("target")) {
    const AInftyDatum target = datum_from_json(j.at("target"));
    const MapDatum h = map_from_json(j.at("map"), d, target);
    const AugmentationReport p = check_pushforward(d, target, h, a);
    o.report["pushforward"] = to_json(pushforward(d, h, a), target);
    o.report["pushforward_check"] = to_json(p);
    o.pass = o.pass && p.ok();
  }
  return o;
}

Json floer_json(const AInftyDatum& d, int modulus, CoefficientRing ring) {
  const FloerComplex c = assemble_differential(d, modulus);
  Json out{{"generators", d.generators.size()}, {"cohomology", to_json(cohomology(c, ring))}};
  if (modulus == 2 && d.l == 1) out["euler_characteristic"] = euler_characteristic(c);
  if (d.intersection_number) out["intersection_number"] = *d.intersection_number;
  return out;
}

Outcome run_floer_hf(const std::string& file, int modulus, bool integer) {
  const Json j = read_json_file(file);
  const bool morse = j.contains("critical_points");
  AInftyDatum d = morse ? build_floer_complex(morse_from_json(j)) : datum_from_json(j);
  if (morse && d.l > 1) d = d.restricted({0, 1});
  const CheckReport a = check_a_infinity(d);
  Json out = floer_json(d, modulus, integer ? CoefficientRing::Integer : CoefficientRing::Rational);
  out["a_infinity"] = to_json(a);
  return {out, a.ok(), ""};
}

Outcome run_floer_sphere(int n, int modulus) {
  const AInftyDatum s = sphere_fixture(n, 2);
  const AInftyDatum pair = s.restricted({0, 1});
  Json out = floer_json(pair, modulus, CoefficientRing::Rational);
  Json table = Json::array();
  std::ostringstream text;
  const CohomologyReport h = cohomology(assemble_differential(pair, modulus));
  text << "rank " << h.rank << "\ndegrees";
  for (const auto& [deg, k] : h.ranks)
    for (std::size_t r = 0; r < k; ++r) text << " " << deg;
  text << "\n";
  auto name = [&](int g) {
    const std::string& id = s.generators[static_cast<std::size_t>(g)].id;
    return id.substr(0, id.find('@'));
  };
  for (const char* a : {"max", "min"})
    for (const char* b : {"max", "min"}) {
      const Word w{s.index_of(std::string(a) + "@01"), s.index_of(std::string(b) + "@12")};
      std::string product = "0";
      if (const auto* row = s.m.find(w))
        for (const auto& [g, c] : *row) product = (c == Series(1) ? "" : c.to_string() + " ") + name(g);
      table.push_back({{"a", a}, {"b", b}, {"m2", product}});
      text << "m2(" << a << ", " << b << ") = " << product << "\n";
    }
  out["n"] = n;
  out["products"] = table;
  const CheckReport a = check_a_infinity(s);
  out["a_infinity"] = to_json(a);
  return {out, a.ok() && h.rank == 2, text.str()};
}

Outcome run_sft(int n, int g, int v, const std::vector<int>& m) {
  const SftIndexBound b = sft_index_bound({n, g, v, m});
  return {to_json(b), b.satisfies,
          "bound=" + std::to_string(b.bound) + " satisfies=" + (b.satisfies ? "true" : "false") + "\n"};
}

Outcome run_conductor(const std::string& file) {
  const Json j = read_json_file(file);
  const Continuation h = continuation_from_json(j.at("h"));
  const Continuation k = continuation_from_json(j.at("k"));
  const bool exact = is_exact(h, k);
  Json out{{"exact", exact},
           {"composite", to_json(compose(h, k))},
           {"image", to_json(h.image())},
           {"cokernel", to_json(k.cokernel())}};
  return {out, true, std::string("exact=") + (exact ? "true" : "false") + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floerkit: Novikov arithmetic, polytope signs, A-infinity checks and Floer fixtures"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "Human-readable output instead of JSON");

  std::function<Outcome()> job;

  auto* polytope = app.add_subcommand("polytope", "Associahedron and multiplihedron combinatorics");
  std::string kind;
  int l = 0;
  bool faces = false, fvec = false, signs = false, bcheck = false;
  polytope->add_option("kind", kind, "assoc or multi")->required()->check(CLI::IsMember({"assoc", "multi"}));
  polytope->add_option("--l", l, "Number of leaves")->required();
  auto* g1 = polytope->add_flag("--faces", faces, "List all faces");
  auto* g2 = polytope->add_flag("--f-vector", fvec, "Face numbers by dimension (default)");
  auto* g3 = polytope->add_flag("--facet-signs", signs, "Codimension-one faces with orientation signs");
  auto* g4 = polytope->add_flag("--boundary-check", bcheck, "Check that the signed boundary squares to zero");
  g1->excludes(g2, g3, g4);
  g2->excludes(g3, g4);
  g3->excludes(g4);
  polytope->callback([&] { job = [&] { return run_polytope(kind, l, faces, signs, bcheck); }; });

  auto* novikov = app.add_subcommand("novikov", "Novikov series arithmetic");
  novikov->require_subcommand(1);
  auto* eval = novikov->add_subcommand("eval", "Evaluate a series literal or expression such as '(1 + t)/(1 - t^1/2)'");
  std::string expr, cutoff_text = "4";
  bool rational = false;
  eval->add_option("expr", expr, "Expression")->required();
  eval->add_option("--cutoff", cutoff_text, "Precision for division")->capture_default_str();
  eval->add_flag("--rational", rational, "Invert over Q instead of Z");
  eval->callback([&] {
    job = [&] {
      Expression e(expr, Exponent(parse_rational(cutoff_text)),
                   rational ? CoefficientRing::Rational : CoefficientRing::Integer);
      Series s = e.evaluate();
      return Outcome{series_json(s), true, s.to_string() + "\n"};
    };
  });

  auto* maslov = app.add_subcommand("maslov", "Index of piecewise polynomial Lagrangian paths");
  maslov->require_subcommand(1);
  auto* index = maslov->add_subcommand("index", "Crossings, relative index and string index of a path");
  std::string file;
  index->add_option("file", file, "Path JSON")->required()->check(CLI::ExistingFile);
  index->callback([&] { job = [&] { return run_maslov(file); }; });

  auto* ainfty = app.add_subcommand("ainfty", "Checks on A-infinity data, morphisms and augmentations");
  ainfty->require_subcommand(1);
  std::vector<std::string> files;
  int modulus = 0;
  auto add_files = [&](CLI::App* sub) { sub->add_option("files", files, "Input JSON")->required()->check(CLI::ExistingFile); };
  auto each = [&](std::function<Outcome(const std::string&)> f) {
    return [&, f] {
      job = [&, f] {
        Outcome all{Json::array(), true, ""};
        for (const auto& name : files) {
          Outcome o = f(name);
          all.report.push_back(o.report);
          all.pass = all.pass && o.pass;
        }
        if (all.report.size() == 1) all.report = all.report[0];
        return all;
      };
    };
  };
  auto* check = ainfty->add_subcommand("check", "Degrees, A-infinity relations and the axioms of the Floer complex");
  add_files(check);
  check->add_option("--modulus", modulus, "Grading modulus N (0 for integer grading)");
  check->callback(each([&](const std::string& f) { return run_ainfty_check(f, modulus); }));
  auto* map = ainfty->add_subcommand("map", "Chain-map identity and dual expansion of a morphism");
  add_files(map);
  map->callback(each(run_ainfty_map));
  auto* homotopy = ainfty->add_subcommand("homotopy", "Homotopy identity between two morphisms");
  add_files(homotopy);
  homotopy->callback(each(run_ainfty_homotopy));
  auto* comp = ainfty->add_subcommand("compose", "Composition identity of two morphisms");
  add_files(comp);
  comp->callback(each(run_ainfty_compose));
  auto* augment = ainfty->add_subcommand("augment", "Augmentation conditions and pushforward");
  add_files(augment);
  augment->callback(each(run_ainfty_augment));

  auto* floer = app.add_subcommand("floer", "Floer cohomology");
  floer->require_subcommand(1);
  auto* hf = floer->add_subcommand("hf", "Cohomology of a datum or Morse datum");
  bool integer = false;
  hf->add_option("file", file, "Datum or Morse JSON")->required()->check(CLI::ExistingFile);
  hf->add_option("--modulus", modulus, "Grading modulus N (0 for integer grading)");
  hf->add_flag("--integer", integer, "Eliminate over Z; non-unit pivots are errors");
  hf->callback([&] { job = [&] { return run_floer_hf(file, modulus, integer); }; });
  auto* sphere = floer->add_subcommand("sphere", "Height-function fixture on S^n");
  int n = 2;
  sphere->add_option("--n", n, "Sphere dimension")->required();
  sphere->add_option("--modulus", modulus, "Grading modulus N (0 for integer grading)");
  sphere->callback([&] { job = [&] { return run_floer_sphere(n, modulus); }; });

  auto* sft = app.add_subcommand("sft", "Index bound for punctured curves");
  sft->require_subcommand(1);
  auto* bound = sft->add_subcommand("bound", "Upper bound on the index");
  int genus = 0, punctures = 1;
  std::vector<int> mult;
  bound->add_option("--n", n, "Dimension")->required();
  bound->add_option("--g", genus, "Genus")->required();
  bound->add_option("--v", punctures, "Number of punctures")->required();
  bound->add_option("--m", mult, "Multiplicities, comma separated")->required()->delimiter(',');
  bound->callback([&] { job = [&] { return run_sft(n, genus, punctures, mult); }; });

  auto* conductor = app.add_subcommand("conductor", "Continuations between conductors");
  conductor->require_subcommand(1);
  auto* exact = conductor->add_subcommand("exact", "Exactness, composite, image and cokernel");
  exact->add_option("file", file, "JSON with continuations h and k")->required()->check(CLI::ExistingFile);
  exact->callback([&] { job = [&] { return run_conductor(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Outcome o = job();
    if (!text) std::cout << o.report.dump() << "\n";
    else if (!o.text.empty()) std::cout << o.text;
    else render_text(o.report, "", std::cout);
    return o.pass ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
  }
  return 2;
}
