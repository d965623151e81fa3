#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>
#include <json.hpp>
#include <stdexcept>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/characters.hpp"
#include "chromhopf/chromatic.hpp"
#include "chromhopf/lattice.hpp"
#include "chromhopf/verify.hpp"
#include "chromhopf/wsym.hpp"

namespace chromhopf::cli {

namespace {

using json = nlohmann::json;

// Bad user input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int size_cap() {
  const char* raw = std::getenv("GRAPH_HOPF_MAX_N");
  if (raw == nullptr || *raw == '\0') {
    return kMaxVertices;
  }
  char* end = nullptr;
  const long cap = std::strtol(raw, &end, 10);
  if (*end != '\0' || cap < 0) {
    throw InputError("GRAPH_HOPF_MAX_N must be a nonnegative integer");
  }
  return static_cast<int>(std::min<long>(cap, kMaxVertices));
}

Graph read_graph(const std::string& text) {
  Graph g;
  try {
    g = parse_graph(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("cannot parse graph: ") + e.what());
  }
  if (g.order() > size_cap()) {
    throw InputError("graph has " + std::to_string(g.order()) +
                     " vertices, above GRAPH_HOPF_MAX_N=" + std::to_string(size_cap()));
  }
  return g;
}

json monomial_json(const Monomial& m) {
  json factors = json::array();
  for (const CanonicalKey& key : m.factors()) {
    factors.push_back(format_graph(key.representative()));
  }
  return factors;
}

json coefficients_json(const Polynomial& p) { return json(p.to_strings()); }

// Blocks as sorted lists of 1-based vertices.
json partition_json(const Partition& p) {
  json blocks = json::array();
  for (VertexSet b : p.blocks()) {
    json block = json::array();
    for (; b != 0; b &= b - 1) {
      block.push_back(lowest(b) + 1);
    }
    blocks.push_back(block);
  }
  return blocks;
}

int chromatic_command(const Graph& g, const std::string& engine, const std::string& at,
                      bool pretty, std::ostream& out, std::ostream& err) {
  Polynomial p;
  if (engine == "all") {
    p = pchr_partition(g);
    if (!(p == pchr_deletion_contraction(g)) || !(p == pchr_character_formula(g))) {
      err << "chromatic engines disagree on " << format_graph(g) << "\n";
      return 1;
    }
  } else if (engine == "partition") {
    p = pchr_partition(g);
  } else if (engine == "character") {
    p = pchr_character_formula(g);
  } else {
    p = pchr_deletion_contraction(g);
  }
  std::optional<Rational> value;
  if (!at.empty()) {
    try {
      value = p.eval(Rational::parse(at));
    } catch (const std::exception& e) {
      throw InputError(std::string("bad --eval value: ") + e.what());
    }
  }
  if (pretty) {
    out << p.pretty() << "\n";
    if (value) {
      out << "P(" << at << ") = " << value->str() << "\n";
    }
    return 0;
  }
  json doc;
  doc["poly"] = coefficients_json(p);
  if (value) {
    doc["value"] = value->str();
  }
  out << doc.dump() << "\n";
  return 0;
}

int character_command(const Graph& g, const std::string& which, std::ostream& out) {
  Rational value;
  if (which == "zero") {
    value = lambda_zero()(g);
  } else if (which == "chr-inverse") {
    value = invert(chromatic_character())(g);
  } else {
    value = chromatic_character()(g);
  }
  out << json{{"value", value.str()}}.dump() << "\n";
  return 0;
}

template <class Tensor, class Leg>
json tensor_json(const Tensor& t, Leg&& leg) {
  json terms = json::array();
  for (const auto& [pair, c] : t) {
    terms.push_back({{"coef", c.str()}, {"left", leg(pair.first)}, {"right", leg(pair.second)}});
  }
  return json{{"terms", terms}};
}

int coproduct_command(const Graph& g, const std::string& kind, bool indexed, std::ostream& out) {
  const bool restriction = kind == "restriction";
  json doc;
  if (indexed) {
    const HGRElement x = HGRElement::basis(g);
    const HGRTensor t = restriction ? restriction_coproduct(x) : contraction_coproduct(x);
    doc = tensor_json(t, [](const Graph& h) { return format_graph(h); });
  } else {
    const HgrElement x = isoclass(g);
    const HgrTensor t = restriction ? restriction_coproduct(x) : contraction_coproduct(x);
    doc = tensor_json(t, monomial_json);
  }
  out << doc.dump() << "\n";
  return 0;
}

int antipode_command(const Graph& g, const std::string& engine, std::ostream& out) {
  const AntipodeEngine which =
      engine == "forest" ? AntipodeEngine::Forest : AntipodeEngine::Recursive;
  json terms = json::array();
  for (const auto& [m, c] : antipode(isoclass(g), which)) {
    terms.push_back({{"coef", c.str()}, {"factors", monomial_json(m)}});
  }
  out << json{{"terms", terms}}.dump() << "\n";
  return 0;
}

int lattice_command(const Graph& g, bool with_mobius, std::ostream& out) {
  const AdmissibleLattice lattice(g);
  json elements = json::array();
  json ranks = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    elements.push_back(partition_json(lattice.element(i)));
    ranks.push_back(lattice.rank(i));
  }
  json covers = json::array();
  for (const auto& [a, b] : lattice.covers()) {
    covers.push_back({a, b});
  }
  json doc{{"elements", elements}, {"ranks", ranks}, {"covers", covers}};
  if (with_mobius) {
    doc["mobius"] = lattice.mobius(lattice.bottom(), lattice.top()).str();
  }
  out << doc.dump() << "\n";
  return 0;
}

int ncchromatic_command(const Graph& g, const std::string& basis, bool project,
                        std::ostream& out) {
  const WSymElement p = nc_chromatic(g);
  json doc;
  if (basis == "words") {
    json terms = json::array();
    for (const auto& [w, c] : expand(p)) {
      terms.push_back({{"coef", c.str()}, {"word", w.str()}});
    }
    doc["words"] = terms;
  } else {
    json terms = json::array();
    for (const auto& [pi, c] : p) {
      terms.push_back({{"coef", c.str()}, {"partition", partition_json(pi)}});
    }
    doc["W"] = terms;
  }
  if (project) {
    doc["poly"] = coefficients_json(hilbert_projection(p));
  }
  out << doc.dump() << "\n";
  return 0;
}

int verify_command(const std::string& suite, int max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 0) {
    throw InputError("--max-n must be nonnegative");
  }
  max_n = std::min(max_n, size_cap());
  std::vector<std::string> names =
      suite.empty() ? suite_names() : std::vector<std::string>{suite};
  json results = json::array();
  bool ok = true;
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, max_n);
    json entry{{"name", r.name}, {"checked", r.checked}, {"ok", r.ok}};
    if (!r.ok) {
      ok = false;
      entry["counterexample"] = r.counterexample;
      entry["detail"] = r.detail;
      err << "suite " << r.name << " failed on \"" << r.counterexample << "\": " << r.detail
          << "\n";
    }
    results.push_back(entry);
  }
  out << json{{"max_n", max_n}, {"ok", ok}, {"suites", results}}.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph bialgebras, chromatic polynomials and word symmetric functions",
               "chromhopf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for every subcommand");
  const std::string graph_help =
      "Graph as \"n: i-j, k-l\" with vertices 1..n; \"0:\" is the empty graph";

  std::string graph_text;
  std::string engine;
  std::string at;
  std::string which;
  std::string kind = "restriction";
  std::string basis = "W";
  std::string suite;
  bool pretty = false;
  bool indexed = false;
  bool with_mobius = false;
  bool project = false;
  int max_n = 5;

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a graph");
  chromatic->add_option("--graph", graph_text, graph_help)->required();
  chromatic->add_option("--eval", at, "Also evaluate at this rational, e.g. 3 or -1/2");
  chromatic->add_option("--engine", engine, "partition, delcon, character, or all (checks agreement)")
      ->check(CLI::IsMember({"partition", "delcon", "character", "all"}))
      ->default_str("delcon");
  chromatic->add_flag("--pretty", pretty, "Print the polynomial as text instead of JSON");

  auto* character = app.add_subcommand("character", "Value of a character on a graph");
  character->add_option("--graph", graph_text, graph_help)->required();
  character->add_option("--which", which, "chr (chromatic), zero (constant 1) or chr-inverse")
      ->required()
      ->check(CLI::IsMember({"chr", "zero", "chr-inverse"}));

  auto* coproduct = app.add_subcommand("coproduct", "Restriction or contraction coproduct");
  coproduct->add_option("--graph", graph_text, graph_help)->required();
  coproduct->add_option("--kind", kind, "restriction or contraction")
      ->check(CLI::IsMember({"restriction", "contraction"}))
      ->capture_default_str();
  coproduct->add_flag("--indexed", indexed, "Keep vertex labels instead of isoclasses");

  auto* antipode_cmd = app.add_subcommand(
      "antipode", "Antipode in the quotient by K1 - 1; factors are listed as isoclasses");
  antipode_cmd->add_option("--graph", graph_text, graph_help)->required();
  antipode_cmd->add_option("--engine", engine, "recursive or forest")
      ->check(CLI::IsMember({"recursive", "forest"}))
      ->default_str("recursive");

  auto* lattice = app.add_subcommand("lattice", "Lattice of admissible partitions");
  lattice->add_option("--graph", graph_text, graph_help)->required();
  lattice->add_flag("--mobius", with_mobius, "Add the Möbius value between bottom and top");

  auto* ncchromatic = app.add_subcommand("ncchromatic", "Noncommutative chromatic function");
  ncchromatic->add_option("--graph", graph_text, graph_help)->required();
  ncchromatic->add_option("--basis", basis, "W (set partitions) or words (packed words)")
      ->check(CLI::IsMember({"W", "words"}))
      ->capture_default_str();
  ncchromatic->add_flag("--project", project, "Add the Hilbert projection as a polynomial");

  auto* verify = app.add_subcommand("verify", "Check identities on all small graphs");
  verify->add_option("--suite", suite, "Run only this suite (default: all)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "Largest vertex count checked")->capture_default_str();

  app.footer(
      "Exit codes: 0 success, 1 an identity failed, 2 invalid input.\n"
      "GRAPH_HOPF_MAX_N caps input graph sizes and the verify bound.");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      return verify_command(suite, max_n, out, err);
    }
    const Graph g = read_graph(graph_text);
    if (*chromatic) {
      return chromatic_command(g, engine, at, pretty, out, err);
    }
    if (*character) {
      return character_command(g, which, out);
    }
    if (*coproduct) {
      return coproduct_command(g, kind, indexed, out);
    }
    if (*antipode_cmd) {
      return antipode_command(g, engine, out);
    }
    if (*lattice) {
      return lattice_command(g, with_mobius, out);
    }
    return ncchromatic_command(g, basis, project, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chromhopf::cli
