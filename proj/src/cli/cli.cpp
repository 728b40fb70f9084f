#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "fullerene/codec.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/packing.hpp"
#include "fullerene/search.hpp"
#include "fullerene/transforms.hpp"
#include "report.hpp"

namespace fullerene::cli {

namespace {

using Clock = std::chrono::steady_clock;

/// Input problem detected by the CLI itself (bad flag values, unreadable
/// files, malformed packings).
class Failure : public std::runtime_error {
 public:
  Failure(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string ids(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

SearchBudget parse_budget(const std::string& text) {
  SearchBudget budget = SearchBudget::unlimited();
  if (text.empty()) return budget;
  const auto comma = text.find(',');
  const std::string secs = text.substr(0, comma);
  const std::string nodes = comma == std::string::npos ? std::string() : text.substr(comma + 1);
  try {
    std::size_t used = 0;
    if (!secs.empty() && secs != "inf") {
      budget.time_limit = std::stod(secs, &used);
      if (used != secs.size() || !(budget.time_limit > 0)) throw std::invalid_argument(secs);
    }
    if (!nodes.empty()) {
      if (nodes[0] == '-') throw std::invalid_argument(nodes);
      budget.node_limit = std::stoull(nodes, &used);
      if (used != nodes.size()) throw std::invalid_argument(nodes);
    }
  } catch (const std::logic_error&) {
    throw Failure("BadBudget", "expected --budget <seconds>,<nodes>, got '" + text + "'");
  }
  return budget;
}

void describe_budget(RunReport& r, const SearchBudget& b) {
  r.set("budget.nodes", b.node_limit == std::numeric_limits<std::uint64_t>::max()
                            ? std::string("unlimited")
                            : std::to_string(b.node_limit));
  std::ostringstream secs;
  if (b.time_limit == std::numeric_limits<double>::infinity()) {
    secs << "unlimited";
  } else {
    secs << b.time_limit;
  }
  r.set("budget.seconds", secs.str());
}

EmbeddedCubicGraph load_graph(const std::string& source, int index, RunReport& r) {
  r.set("input", source);
  auto finish = [&](EmbeddedCubicGraph g) {
    r.set("input.vertices", g.vertex_count());
    r.set("input.digest", digest_hex(graph_digest(g)));
    return g;
  };
  if (source.rfind("fixture:", 0) == 0) {
    if (source != "fixture:c20") throw Failure("UnknownFixture", "unknown fixture '" + source + "'");
    return finish(fixture_dodecahedron());
  }
  std::vector<std::uint8_t> bytes;
  try {
    bytes = read_file_bytes(source);
  } catch (const std::runtime_error& e) {
    throw Failure("FileError", e.what());
  }
  auto graphs = decode_planar_code(bytes);
  r.set("input.graphs", static_cast<int>(graphs.size()));
  if (index < 1 || index > static_cast<int>(graphs.size())) {
    throw Failure("BadIndex", "graph " + std::to_string(index) + " requested, file holds " +
                                  std::to_string(graphs.size()));
  }
  r.set("input.index", index);
  return finish(std::move(graphs[index - 1]));
}

std::ifstream open_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("FileError", "cannot open " + path);
  return in;
}

void write_text(const std::string& path, const std::string& text, RunReport& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure("FileError", "cannot write " + path);
  r.output(path);
}

void write_graph(const std::string& path, const EmbeddedCubicGraph& g, RunReport& r) {
  const auto bytes = encode_planar_code(g);
  try {
    write_file_bytes(path, bytes);
  } catch (const std::runtime_error& e) {
    throw Failure("FileError", e.what());
  }
  r.output(path);
}

/// Reads, validates and canonicalizes a packing file: leaves are rebuilt
/// from the centers so they follow the rotation.
StarPacking load_packing(const EmbeddedCubicGraph& g, const std::string& path) {
  auto in = open_text(path);
  StarPacking raw;
  try {
    raw = read_packing(in);
  } catch (const std::runtime_error& e) {
    throw Failure("BadPackingFile", path + ": " + e.what());
  }
  if (auto v = validate_star_packing(g, raw); !v) throw Failure("PackingNotValid", v.reason);
  return packing_from_centers(g, raw.centers());
}

void describe_census(RunReport& r, const std::string& prefix, const FaceCensus& c) {
  r.set(prefix + ".vertices", c.vertex_count);
  r.set(prefix + ".edges", c.edge_count);
  r.set(prefix + ".faces", c.face_count);
  for (const auto& [size, count] : c.by_size) r.set(prefix + ".faces." + std::to_string(size), count);
}

void describe_verification(RunReport& r, const std::string& prefix, const VerificationReport& v) {
  for (const auto& [name, ax] : v.axioms()) {
    r.set(prefix + ".axiom." + name, ax->passed ? "pass" : "fail");
    if (!ax->passed) {
      if (!ax->witness.empty()) r.set(prefix + ".axiom." + name + ".witness", ids(ax->witness));
      r.set(prefix + ".axiom." + name + ".detail", one_line(ax->detail));
    }
  }
  r.set(prefix + ".fullerene", v.passed());
}

void describe_classification(RunReport& r, const std::string& prefix, const PackingClassification& c) {
  r.set(prefix + ".is_p0", c.is_p0);
  r.set(prefix + ".is_balanced", c.is_balanced);
  for (const auto& [centers, count] : c.hexagon_center_histogram) {
    r.set(prefix + ".hexagons_with_centers." + std::to_string(centers), count);
  }
  r.set(prefix + ".unbalanced_hexagons", static_cast<int>(c.unbalanced_hexagons.size()));
}

int exit_for(SearchStatus status, bool witness) {
  if (witness) return kSuccess;
  return status == SearchStatus::BudgetExceeded ? kBudgetExceeded : kProvenNegative;
}

void describe_search(RunReport& r, const std::string& prefix, SearchStatus status, std::uint64_t nodes,
                     bool witness) {
  r.set(prefix + ".status", to_string(status));
  r.set(prefix + ".nodes", static_cast<long long>(nodes));
  if (!witness) r.set("reason", to_string(status));
}

struct Options {
  std::string input;
  int index = 1;
  std::string budget;
  std::size_t limit = 1;
  bool p0 = false;
  std::string out;
  std::string packing;
  std::string provenance;
  std::string hint;
  int stars = 0;
  int split = 0;
  std::string kind;
  std::string report_path;
};

// --- subcommands -----------------------------------------------------------

int cmd_verify(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  Timer t;
  const auto v = verify_fullerene(g);
  r.timing("verify", t.seconds());
  describe_verification(r, "verify", v);
  describe_census(r, "census", v.census);
  return v.passed() ? kSuccess : kProvenNegative;
}

int cmd_faces(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  const auto faces = trace_faces(g);
  const auto census = face_census(g, faces, GenusPolicy::Report);
  describe_census(r, "census", census);
  r.set("census.euler_characteristic", census.euler_characteristic());
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    r.set("face." + std::to_string(i + 1), ids(faces.faces[i].boundary));
  }
  return kSuccess;
}

std::optional<StarPacking> search_packing(const EmbeddedCubicGraph& g, const Options& o, bool p0,
                                          RunReport& r, int& code) {
  const auto budget = parse_budget(o.budget);
  describe_budget(r, budget);
  Timer t;
  auto search = find_star_packings(g, std::max<std::size_t>(o.limit, 1), budget, {p0});
  r.timing("pack-stars", t.seconds());
  const bool found = !search.packings.empty();
  describe_search(r, "search", search.status, search.nodes, found);
  r.set("packings", static_cast<int>(search.packings.size()));
  code = exit_for(search.status, found);
  if (!found) return std::nullopt;
  for (std::size_t i = 0; i < search.packings.size(); ++i) {
    const std::string key = "packing." + std::to_string(i + 1);
    r.set(key + ".centers", ids(search.packings[i].centers()));
    describe_classification(r, key, classify_packing(g, search.packings[i]));
  }
  return search.packings.front();
}

int cmd_pack_stars(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  r.set("p0_only", o.p0);
  int code = kSuccess;
  const auto packing = search_packing(g, o, o.p0, r, code);
  if (packing && !o.out.empty()) {
    std::ostringstream text;
    write_packing(text, g, *packing);
    write_text(o.out, text.str(), r);
  }
  return code;
}

int cmd_classify(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  const auto packing = load_packing(g, o.packing);
  r.set("packing", o.packing);
  r.set("packing.stars", static_cast<int>(packing.stars.size()));
  r.set("packing.centers", ids(packing.centers()));
  describe_classification(r, "packing", classify_packing(g, packing));
  return kSuccess;
}

int cmd_transform(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  r.set("transform", o.kind);
  std::optional<EmbeddedCubicGraph> result;
  std::string provenance;
  Timer t;
  if (o.kind == "chamfer") {
    result = chamfer(g);
  } else {
    StarPacking packing;
    if (!o.packing.empty()) {
      packing = load_packing(g, o.packing);
      r.set("packing.source", o.packing);
    } else {
      r.set("packing.source", "search");
      int code = kSuccess;
      auto found = search_packing(g, o, true, r, code);
      if (!found) return code;
      packing = *found;
    }
    r.set("packing.stars", static_cast<int>(packing.stars.size()));
    std::ostringstream prov;
    if (o.kind == "star") {
      auto res = star_transform(g, packing);
      r.set("output.cross_edges", static_cast<int>(res.provenance.cross_edges.size()));
      write_provenance(prov, res.provenance);
      result = std::move(res.graph);
    } else {
      auto res = semi_star_transform(g, packing);
      r.set("output.chords", static_cast<int>(res.provenance.choices.size()));
      write_provenance(prov, res.provenance);
      result = std::move(res.graph);
    }
    provenance = prov.str();
  }
  r.timing("transform", t.seconds());
  r.set("output.digest", digest_hex(graph_digest(*result)));
  const auto v = verify_fullerene(*result);
  describe_verification(r, "output", v);
  describe_census(r, "output", v.census);
  if (!o.provenance.empty()) {
    if (provenance.empty()) throw Failure("NoProvenance", "chamfer records no provenance");
    write_text(o.provenance, provenance, r);
  }
  if (!o.out.empty()) write_graph(o.out, *result, r);
  return kSuccess;
}

int cmd_factor56(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  const auto budget = parse_budget(o.budget);
  describe_budget(r, budget);
  std::optional<CycleFactor> hint;
  if (!o.hint.empty()) {
    auto in = open_text(o.hint);
    StarTransformProvenance prov;
    try {
      prov = read_star_provenance(in);
    } catch (const std::runtime_error& e) {
      throw Failure("BadProvenanceFile", o.hint + ": " + e.what());
    }
    try {
      hint = extract_cycle_factor_from_provenance(g, prov);
      r.set("hint", "direct");
    } catch (const TransformError& e) {
      if (e.code() != TransformErrorCode::NotDirect) throw;
      r.set("hint", "not-direct");
    }
  }
  Timer t;
  const auto search = find_cycle_factor_5_6(g, hint ? &*hint : nullptr, budget);
  r.timing("factor56", t.seconds());
  describe_search(r, "search", search.status, search.nodes, search.witness.has_value());
  r.set("search.hint_used", search.hint_used);
  if (search.witness) {
    const auto& f = *search.witness;
    r.set("cycles", static_cast<int>(f.cycles.size()));
    r.set("cycles.5", f.count_of_length(5));
    r.set("cycles.6", f.count_of_length(6));
    r.set("verified", static_cast<bool>(validate_cycle_factor(g, f)));
  }
  return exit_for(search.status, search.witness.has_value());
}

int cmd_pseudo(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  const auto budget = parse_budget(o.budget);
  describe_budget(r, budget);
  r.set("stars", o.stars);
  Timer t;
  const auto search = find_pseudo_matching(g, o.stars, budget);
  r.timing("pseudo", t.seconds());
  describe_search(r, "search", search.status, search.nodes, search.witness.has_value());
  if (search.witness) {
    std::vector<Vertex> centers;
    for (const Star& s : search.witness->stars) centers.push_back(s.center);
    r.set("witness.stars", static_cast<int>(search.witness->stars.size()));
    r.set("witness.pairs", static_cast<int>(search.witness->pairs.size()));
    r.set("witness.centers", ids(centers));
    r.set("verified", static_cast<bool>(validate_pseudo_matching(g, *search.witness)));
  }
  return exit_for(search.status, search.witness.has_value());
}

int cmd_hamilton(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  const auto budget = parse_budget(o.budget);
  describe_budget(r, budget);
  Timer t;
  const auto search = find_hamiltonian_cycle(g, budget);
  r.timing("hamilton", t.seconds());
  describe_search(r, "search", search.status, search.nodes, search.cycle.has_value());
  if (!search.cycle) return exit_for(search.status, false);
  r.set("cycle", ids(*search.cycle));
  r.set("cycle.verified", static_cast<bool>(validate_hamiltonian_cycle(g, *search.cycle)));
  if (o.split > 0) {
    const auto paths = split_cycle_into_paths(*search.cycle, o.split);
    r.set("split.k", o.split);
    r.set("split.paths", static_cast<int>(paths.paths.size()));
    r.set("split.verified", static_cast<bool>(validate_path_packing(g, paths)));
  }
  return kSuccess;
}

int cmd_spiders(const Options& o, RunReport& r) {
  const auto g = load_graph(o.input, o.index, r);
  auto in = open_text(o.provenance);
  SemiStarProvenance prov;
  try {
    prov = read_semistar_provenance(in);
  } catch (const std::runtime_error& e) {
    throw Failure("BadProvenanceFile", o.provenance + ": " + e.what());
  }
  const auto spiders = extract_subdivided_star_packing(g, prov);
  r.set("spiders", static_cast<int>(spiders.spiders.size()));
  r.set("verified", static_cast<bool>(validate_spider_packing(g, spiders)));
  return kSuccess;
}

int cmd_export(const Options& o, RunReport& r, std::ostream& artifact) {
  const auto g = load_graph(o.input, o.index, r);
  r.set("format", o.kind);
  Annotations notes;
  if (!o.packing.empty()) {
    const auto packing = load_packing(g, o.packing);
    for (const Star& s : packing.stars) {
      notes.vertex_classes["center"].insert(s.center);
      for (Vertex l : s.leaves) notes.edge_classes["star-edge"].insert(Edge(s.center, l));
    }
  }
  std::string text;
  if (o.kind == "planarcode") {
    const auto bytes = encode_planar_code(g);
    text.assign(bytes.begin(), bytes.end());
  } else if (o.kind == "dot") {
    text = export_dot(g, notes);
  } else {
    notes.shade_faces = true;
    const auto faces = trace_faces(g);
    text = export_svg(g, layout_tutte(g, faces.faces.front()), notes);
  }
  r.set("bytes", static_cast<long long>(text.size()));
  if (o.out.empty()) {
    artifact << text;
  } else {
    write_text(o.out, text, r);
  }
  return kSuccess;
}

// C20 -> chamfer -> P0 packing -> star and semi-star transforms -> extractors.
int cmd_pipeline(const Options& o, RunReport& r) {
  SearchBudget budget = SearchBudget::nodes(10'000'000);
  if (!o.budget.empty()) budget = parse_budget(o.budget);
  describe_budget(r, budget);
  const std::filesystem::path dir = o.out;
  if (!o.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Failure("FileError", "cannot create " + o.out);
  }
  auto save = [&](const std::string& name, const EmbeddedCubicGraph& g) {
    if (!o.out.empty()) write_graph((dir / name).string(), g, r);
  };
  auto round_trip = [](const EmbeddedCubicGraph& g) {
    const auto back = decode_planar_code(encode_planar_code(g));
    return back.size() == 1 && back.front() == g;
  };
  auto stage = [&](const std::string& key, const EmbeddedCubicGraph& g) {
    r.set(key + ".vertices", g.vertex_count());
    r.set(key + ".digest", digest_hex(graph_digest(g)));
    const auto v = verify_fullerene(g);
    describe_verification(r, key, v);
    describe_census(r, key + ".census", v.census);
    r.set(key + ".round_trip", round_trip(g));
    return v.passed();
  };

  Timer total;
  Timer t;
  const auto c20 = fixture_dodecahedron();
  bool ok = stage("c20", c20);
  save("c20.pc", c20);

  const auto c80 = chamfer(c20);
  ok = stage("c80", c80) && ok;
  save("c80.pc", c80);
  r.timing("chamfer", t.seconds());

  t = Timer();
  const auto search = find_star_packings(c80, 1, budget, {true});
  r.timing("pack-stars", t.seconds());
  describe_search(r, "pack", search.status, search.nodes, !search.packings.empty());
  if (search.packings.empty()) return exit_for(search.status, false);
  const StarPacking& packing = search.packings.front();
  r.set("pack.centers", ids(packing.centers()));
  describe_classification(r, "pack", classify_packing(c80, packing));
  if (!o.out.empty()) {
    std::ostringstream text;
    write_packing(text, c80, packing);
    write_text((dir / "c80.packing").string(), text.str(), r);
  }

  t = Timer();
  const auto star = star_transform(c80, packing);
  ok = stage("star", star.graph) && ok;
  r.set("star.cross_edges", static_cast<int>(star.provenance.cross_edges.size()));
  save("star.pc", star.graph);
  if (!o.out.empty()) {
    std::ostringstream text;
    write_provenance(text, star.provenance);
    write_text((dir / "star.provenance").string(), text.str(), r);
  }
  const auto factor = extract_cycle_factor_from_provenance(star.graph, star.provenance);
  r.set("star.factor.cycles", static_cast<int>(factor.cycles.size()));
  r.set("star.factor.cycles.5", factor.count_of_length(5));
  r.set("star.factor.cycles.6", factor.count_of_length(6));
  const bool factor_ok = static_cast<bool>(validate_cycle_factor(star.graph, factor));
  r.set("star.factor.verified", factor_ok);
  r.timing("star", t.seconds());

  t = Timer();
  const auto semi = semi_star_transform(c80, packing);
  ok = stage("semistar", semi.graph) && ok;
  r.set("semistar.chords", static_cast<int>(semi.provenance.choices.size()));
  save("semistar.pc", semi.graph);
  if (!o.out.empty()) {
    std::ostringstream text;
    write_provenance(text, semi.provenance);
    write_text((dir / "semistar.provenance").string(), text.str(), r);
  }
  const auto spiders = extract_subdivided_star_packing(semi.graph, semi.provenance);
  r.set("semistar.spiders", static_cast<int>(spiders.spiders.size()));
  const bool spiders_ok = static_cast<bool>(validate_spider_packing(semi.graph, spiders));
  r.set("semistar.spiders.verified", spiders_ok);
  r.timing("semistar", t.seconds());
  r.timing("total", total.seconds());

  r.set("chain", std::to_string(c20.vertex_count()) + " -> " + std::to_string(c80.vertex_count()) + " -> " +
                     std::to_string(star.graph.vertex_count()) + " (star), " +
                     std::to_string(semi.graph.vertex_count()) + " (semistar)");
  ok = ok && factor_ok && spiders_ok;
  r.set("pipeline.ok", ok);
  return ok ? kSuccess : kProvenNegative;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

void fail(RunReport& r, const std::string& kind, const std::string& message) {
  r.set("error.kind", kind);
  r.set("error.message", one_line(message));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fullerene graphs: verification, star packings, transformations", "fullerene-tool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--report", o.report_path, "Write the report to FILE instead of stdout");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "planar_code file or fixture:c20")->required();
    sub->add_option("--index", o.index, "1-based graph index inside the file")->check(CLI::PositiveNumber);
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search budget <seconds>,<nodes>; either part may be empty");
  };

  auto* verify = app.add_subcommand("verify", "Check the fullerene axioms");
  input(verify);
  auto* faces = app.add_subcommand("faces", "Trace faces and print the census");
  input(faces);
  auto* pack = app.add_subcommand("pack-stars", "Search perfect star packings");
  input(pack);
  budget(pack);
  pack->add_option("--limit", o.limit, "Number of packings to find")->check(CLI::PositiveNumber);
  pack->add_flag("--p0", o.p0, "Only centers whose faces are all hexagons");
  pack->add_option("--out", o.out, "Write the first packing to FILE");
  auto* classify = app.add_subcommand("classify", "Classify a star packing");
  input(classify);
  classify->add_option("packing", o.packing, "Packing file")->required();
  auto* transform = app.add_subcommand("transform", "Apply a transformation");
  transform->add_option("kind", o.kind)->required()->check(CLI::IsMember({"star", "semistar", "chamfer"}));
  input(transform);
  budget(transform);
  transform->add_option("--packing", o.packing, "Packing file; searched for when absent");
  transform->add_option("--out", o.out, "Write the result as planar_code");
  transform->add_option("--provenance", o.provenance, "Write the provenance record");
  auto* factor = app.add_subcommand("factor56", "Find a spanning set of disjoint 5- and 6-cycles");
  input(factor);
  budget(factor);
  factor->add_option("--hint", o.hint, "Star-transform provenance for a direct construction");
  auto* pseudo = app.add_subcommand("pseudo", "Find a perfect pseudo matching with K stars");
  input(pseudo);
  budget(pseudo);
  pseudo->add_option("--stars", o.stars, "Number of stars")->required()->check(CLI::NonNegativeNumber);
  auto* hamilton = app.add_subcommand("hamilton", "Find a Hamiltonian cycle");
  input(hamilton);
  budget(hamilton);
  hamilton->add_option("--split", o.split, "Cut the cycle into paths of K vertices")->check(CLI::PositiveNumber);
  auto* spiders = app.add_subcommand("spiders", "Extract the subdivided-star packing from semi-star provenance");
  input(spiders);
  spiders->add_option("provenance", o.provenance, "Semi-star provenance file")->required();
  auto* exp = app.add_subcommand("export", "Write DOT, SVG or planar_code");
  exp->add_option("kind", o.kind)->required()->check(CLI::IsMember({"dot", "svg", "planarcode"}));
  input(exp);
  exp->add_option("--out", o.out, "Output file; stdout when absent");
  exp->add_option("--packing", o.packing, "Highlight the stars of this packing");
  auto* pipeline = app.add_subcommand("pipeline", "Run the C20 -> C80 -> transforms chain");
  std::string target;
  pipeline->add_option("target", target)->required()->check(CLI::IsMember({"c80"}));
  budget(pipeline);
  pipeline->add_option("--out", o.out, "Directory for all artifacts");

  RunReport report(join(args));
  int code = kSuccess;
  bool artifact_on_out = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (verify->parsed()) code = cmd_verify(o, report);
    else if (faces->parsed()) code = cmd_faces(o, report);
    else if (pack->parsed()) code = cmd_pack_stars(o, report);
    else if (classify->parsed()) code = cmd_classify(o, report);
    else if (transform->parsed()) code = cmd_transform(o, report);
    else if (factor->parsed()) code = cmd_factor56(o, report);
    else if (pseudo->parsed()) code = cmd_pseudo(o, report);
    else if (hamilton->parsed()) code = cmd_hamilton(o, report);
    else if (spiders->parsed()) code = cmd_spiders(o, report);
    else if (exp->parsed()) {
      artifact_on_out = o.out.empty();
      code = cmd_export(o, report, out);
    } else if (pipeline->parsed()) code = cmd_pipeline(o, report);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    fail(report, "UsageError", e.what());
    code = kInputError;
  } catch (const Failure& e) {
    fail(report, e.kind(), e.what());
    code = kInputError;
  } catch (const CodecError& e) {
    fail(report, to_string(e.code()), e.what());
    report.set("error.offset", static_cast<long long>(e.offset()));
    report.set("error.graph", e.graph_index() + 1);
    code = kInputError;
  } catch (const GraphError& e) {
    fail(report, to_string(e.code()), e.what());
    code = kInputError;
  } catch (const TransformError& e) {
    fail(report, to_string(e.code()), e.what());
    code = kInputError;
  } catch (const LayoutError& e) {
    fail(report, to_string(e.code()), e.what());
    code = kInputError;
  } catch (const InvalidInput& e) {
    fail(report, "InvalidInput", e.what());
    code = kInputError;
  } catch (const NotDivisible& e) {
    fail(report, "NotDivisible", e.what());
    code = kInputError;
  } catch (const std::exception& e) {
    fail(report, "Error", e.what());
    code = kInputError;
  }
  report.set("exit", code);

  const std::string text = report.str();
  if (!o.report_path.empty()) {
    std::ofstream file(o.report_path, std::ios::binary);
    if (file << text) return code;
    err << "cannot write report to " << o.report_path << '\n';
  }
  (artifact_on_out ? err : out) << text;
  return code;
}

}  // namespace fullerene::cli
