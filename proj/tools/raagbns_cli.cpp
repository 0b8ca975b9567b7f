#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "raagbns/raagbns.hpp"

namespace fs = std::filesystem;
using namespace raagbns;

namespace {

Json betti_payload(const Arrangement& a) {
  const auto complex = build_chain_complex(a);
  Json j = to_json(betti_numbers(complex));
  j["chain_dims"] = complex.dims;
  return j;
}

Json support_graphs(const SimpleGraph& g) {
  Json out = Json::array();
  for (VertexId a = 0; a < g.size(); ++a) out.push_back(to_json(g, support_graph(g, a)));
  return out;
}

Json generator_sets(const std::vector<GeneratorSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

Json bns_payload(const SimpleGraph& g, const std::string& group, bool witness, const EnumerationLimits& limits) {
  Json j;
  j["group"] = group;
  if (group == "raag") {
    const Arrangement a = raag_arrangement(g, limits);
    j["arrangement"] = to_json(a);
    j["homology"] = betti_payload(a);
  } else if (group == "psa") {
    const auto data = psa_arrangement_data(g, limits);
    j["generators"] = to_json(g, data.basis);
    j["psets"] = generator_sets(data.psets);
    j["delta_psets"] = generator_sets(data.delta_psets);
    j["arrangement"] = to_json(data.filtered);
    j["homology"] = betti_payload(data.filtered);
  } else {
    const auto pso = pso_arrangement(g, limits);
    const auto complex = build_chain_complex(pso.arrangement);
    j["generators"] = to_json(g, pso.basis);
    j["hom_space"] = to_json(pso.hom_space);
    j["delta_psets"] = generator_sets(pso.delta_psets);
    j["arrangement"] = to_json(pso.arrangement);
    Json h = to_json(betti_numbers(complex));
    h["chain_dims"] = complex.dims;
    j["homology"] = std::move(h);
    if (witness) {
      Json ws = Json::array();
      for (VertexId a = 0; a < g.size(); ++a) {
        const auto d = support_graph(g, a);
        const auto cert = forest_certificate(d);
        const auto* loop = std::get_if<LoopWitness>(&cert);
        if (!loop) continue;
        std::vector<Component> nodes;
        for (std::size_t n : loop->cycle) nodes.push_back(d.nodes[n]);
        ws.push_back(to_json(g, h1_witness(g, pso, complex, a, nodes)));
      }
      j["h1_witnesses"] = std::move(ws);
    }
  }
  return j;
}

Json euler_payload(const SimpleGraph& g, const EnumerationLimits& limits) {
  const EulerReport r = euler_report(g, limits);
  Json j;
  j["raag"] = to_json(r.raag);
  j["psa"] = to_json(r.psa);
  j["pso"] = to_json(r.pso);
  j["center_rank"] = center_rank(g);
  return j;
}

std::vector<fs::path> graph_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".txt" || ext == ".edges") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json corpus_payload(const std::string& dir, const EnumerationLimits& limits, bool& all_pass) {
  Json files = Json::array();
  std::size_t passed = 0;
  all_pass = true;
  for (const auto& path : graph_files(dir)) {
    const SimpleGraph g = load_graph(path.string());
    Json entry;
    entry["file"] = path.filename().string();
    entry["vertices"] = g.size();
    Json checks = Json::array();
    bool ok = true;
    for (const auto& c : run_graph_checks(g, limits)) {
      ok = ok && c.pass;
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    entry["pass"] = ok;
    entry["checks"] = std::move(checks);
    files.push_back(std::move(entry));
    if (ok) ++passed;
    all_pass = all_pass && ok;
  }
  Json j;
  j["files"] = std::move(files);
  j["passed"] = passed;
  j["failed"] = j["files"].size() - passed;
  return j;
}

Json generate_corpus(const std::string& dir) {
  fs::create_directories(dir);
  Json written = Json::array();
  for (const auto& ng : standard_corpus()) {
    const fs::path path = fs::path(dir) / (ng.name + ".json");
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << to_json(ng.graph).dump(2) << '\n';
    written.push_back(path.filename().string());
  }
  return written;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact BNS-invariant arrangements, homology and presentations for partial conjugation groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string graph_path, arrangement_path, basepoints_path, group, word_text, dir;
  bool witness = false;

  auto* sg = app.add_subcommand("support-graphs", "Support graphs Δ_a with forest or loop certificates");
  sg->add_option("graph", graph_path, "Graph file (JSON or edge list)")->required();

  auto* cl = app.add_subcommand("classify", "Decide whether the pure symmetric outer group is a RAAG");
  cl->add_option("graph", graph_path, "Graph file")->required();
  cl->add_option("--basepoints", basepoints_path, "JSON basepoint overrides");

  auto* ho = app.add_subcommand("homology", "Betti profile of a subspace arrangement");
  ho->add_option("arrangement", arrangement_path, "Arrangement JSON file")->required();

  auto* bn = app.add_subcommand("bns", "Character-sphere arrangement and its homology");
  bn->add_option("graph", graph_path, "Graph file")->required();
  bn->add_option("--group", group, "raag, psa or pso")->required()->check(CLI::IsMember({"raag", "psa", "pso"}));
  bn->add_flag("--witness", witness, "Add H_1 witnesses for loops (pso only)");

  auto* pr = app.add_subcommand("presentation", "Finite presentation of PSA or PSO");
  pr->add_option("graph", graph_path, "Graph file")->required();
  pr->add_option("--group", group, "psa or pso")->required()->check(CLI::IsMember({"psa", "pso"}));

  auto* eu = app.add_subcommand("euler-report", "Euler characteristics of the RAAG, PSA and PSO arrangements");
  eu->add_option("graph", graph_path, "Graph file")->required();

  auto* wr = app.add_subcommand("word-reduce", "Normal form of a word in the RAAG");
  wr->add_option("graph", graph_path, "Graph file")->required();
  wr->add_option("word", word_text, "Word such as \"a b^-1 a^2\"")->required();

  auto* co = app.add_subcommand("corpus", "Run every consistency check over a directory of graph files");
  co->add_option("dir", dir, "Directory of graph files")->required();

  auto* gc = app.add_subcommand("generate-corpus", "Write the standard graph corpus as JSON files");
  gc->add_option("dir", dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int status = 0;
  try {
    const EnumerationLimits limits = limits_from_env();
    Json report;
    if (*sg) {
      const auto g = load_graph(graph_path);
      report = run_report("support-graphs", to_json(g), support_graphs(g));
    } else if (*cl) {
      const auto g = load_graph(graph_path);
      BasepointOverrides overrides;
      if (!basepoints_path.empty()) overrides = basepoints_from_json(g, parse_json_text(read_file(basepoints_path)));
      report = run_report("classify", to_json(g), to_json(g, classify_pso(g, limits, overrides)));
    } else if (*ho) {
      const auto a = load_arrangement(arrangement_path);
      report = run_report("homology", to_json(a), betti_payload(a));
    } else if (*bn) {
      const auto g = load_graph(graph_path);
      report = run_report("bns", to_json(g), bns_payload(g, group, witness, limits));
    } else if (*pr) {
      const auto g = load_graph(graph_path);
      report = run_report("presentation", to_json(g), to_json(group == "psa" ? psa_presentation(g) : pso_presentation(g)));
    } else if (*eu) {
      const auto g = load_graph(graph_path);
      report = run_report("euler-report", to_json(g), euler_payload(g, limits));
    } else if (*wr) {
      const auto g = load_graph(graph_path);
      const Word w = parse_word(g, word_text);
      const Word r = reduce(g, w);
      Json j;
      j["word"] = format_word(g, w);
      j["normal_form"] = format_word(g, r);
      j["length"] = r.size();
      j["trivial"] = r.empty();
      report = run_report("word-reduce", to_json(g), std::move(j));
    } else if (*co) {
      bool all_pass = true;
      report = run_report("corpus", Json{{"directory", dir}}, corpus_payload(dir, limits, all_pass));
      if (!all_pass) status = 1;
    } else if (*gc) {
      report = run_report("generate-corpus", Json{{"directory", dir}}, generate_corpus(dir));
    }
    std::cout << (pretty ? report.dump(2) : report.dump()) << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return status;
}
