// Command-line front end: certified keyring extraction, heavy-cycle search,
// exhaustive oracle, generators, and stress campaigns over edge-list files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "keyring/keyring.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;  // also: invalid certificate, oracle miss
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int exit_code_for(const keyring::Error& e) {
  if (dynamic_cast<const keyring::InvalidInput*>(&e) != nullptr) return kExitInput;
  if (dynamic_cast<const keyring::PreconditionError*>(&e) != nullptr)
    return kExitPrecondition;
  return kExitInternal;
}

struct CommonArgs {
  std::string input;
  int k = 0;
  int r = 0;
  bool json = false;
  std::uint64_t budget = keyring::SearchLimits{}.max_expansions;
};

keyring::EngineOptions engine_options(const CommonArgs& args) {
  keyring::EngineOptions opts;
  opts.limits.max_expansions = args.budget;
  return opts;
}

void print_certificate(const keyring::Certificate& cert, bool json) {
  std::cout << (json ? keyring::to_json(cert) : keyring::to_text(cert));
}

int run_extract(const CommonArgs& args) {
  keyring::Graph g = keyring::read_edge_list_file(args.input);
  keyring::Keyring kr = keyring::extract(g, args.k, args.r, engine_options(args));
  print_certificate(keyring::certify_keyring(g, kr, args.k, args.r), args.json);
  return kExitOk;
}

int run_lemma(const CommonArgs& args) {
  keyring::Graph g = keyring::read_edge_list_file(args.input);
  keyring::HeavyCycleWitness w = keyring::find_heavy_cycle(g, args.k, engine_options(args));
  print_certificate(keyring::certify_heavy_cycle(g, w), args.json);
  return kExitOk;
}

int run_oracle(const CommonArgs& args) {
  keyring::Graph g = keyring::read_edge_list_file(args.input);
  keyring::SearchLimits limits{args.budget};
  auto kr = keyring::oracle_find_keyring(g, args.k, args.r, limits);
  if (!kr) {
    std::cout << "no keyring with " << args.r << " leaves and at least " << args.k
              << " edges\n";
    return kExitPrecondition;
  }
  print_certificate(keyring::certify_keyring(g, *kr, args.k, args.r), args.json);
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& cert_path) {
  keyring::Graph g = keyring::read_edge_list_file(input);
  std::ifstream in(cert_path);
  if (!in) throw keyring::InvalidInput("cannot open " + cert_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  keyring::Certificate cert = keyring::certificate_from_json(text);
  std::string why;
  if (keyring::verify_certificate(g, cert, &why)) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << "invalid: " << why << "\n";
  return kExitPrecondition;
}

int run_gen(const std::string& kind, const std::vector<int>& params, int n, int k,
            std::uint64_t seed, const std::string& output) {
  keyring::Graph g;
  if (kind == "random") {
    if (n <= 0) throw keyring::InvalidInput("gen: random graphs need -n");
    if (k <= 0) throw keyring::InvalidInput("gen: random graphs need -k");
    g = keyring::gen_random_dense(n, k, seed);
  } else {
    std::vector<int> effective = params;
    if (effective.empty() && n > 0) effective.push_back(n);
    g = keyring::gen_structured(kind, effective);
  }
  keyring::write_edge_list_file(g, output);
  std::cout << "n=" << g.order() << " e=" << g.size()
            << " edge_digest=" << keyring::graph_edge_digest(g) << "\n";
  return kExitOk;
}

int run_stress(int trials, int n, int k, int r, std::uint64_t seed, bool json,
               bool timings) {
  keyring::StressReport report = keyring::stress(trials, n, k, r, seed);
  std::cout << (json ? keyring::to_json(report, timings)
                     : keyring::to_text(report, timings));
  return report.failure_count() == 0 ? kExitOk : kExitPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified keyring extraction from dense graphs"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string cert_path;
  std::string kind;
  std::vector<int> params;
  std::string output;
  int gen_n = 0;
  int gen_k = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  bool timings = false;

  auto* extract = app.add_subcommand(
      "extract", "Extract a keyring with r leaves and at least k edges");
  extract->add_option("-i,--input", args.input, "edge-list file")->required();
  extract->add_option("-k", args.k, "density / size parameter")->required();
  extract->add_option("-r", args.r, "leaf count, ceil(k/2) <= r <= k-3")->required();
  extract->add_flag("--json", args.json, "emit the certificate as JSON");
  extract->add_option("--budget", args.budget, "search node-expansion cap");

  auto* lemma = app.add_subcommand(
      "lemma", "Find a cycle of length >= ceil(k/2) through a vertex of degree >= k-1");
  lemma->add_option("-i,--input", args.input, "edge-list file")->required();
  lemma->add_option("-k", args.k, "density parameter")->required();
  lemma->add_flag("--json", args.json, "emit the certificate as JSON");
  lemma->add_option("--budget", args.budget, "search node-expansion cap");

  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive keyring existence check (small graphs)");
  oracle->add_option("-i,--input", args.input, "edge-list file")->required();
  oracle->add_option("-k", args.k, "size parameter")->required();
  oracle->add_option("-r", args.r, "leaf count")->required();
  oracle->add_flag("--json", args.json, "emit the witness as JSON");
  oracle->add_option("--budget", args.budget, "search node-expansion cap");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
  verify->add_option("-i,--input", args.input, "edge-list file")->required();
  verify->add_option("--cert", cert_path, "certificate JSON file")->required();

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("--kind", kind,
                  "random | clique | cycle | wheel | figure_eight | "
                  "cycle_with_pendants | disjoint_union | cycles_joined_by_edge")
      ->required();
  gen->add_option("params", params, "kind-specific integer parameters");
  gen->add_option("-n", gen_n, "vertex count (random) or single parameter");
  gen->add_option("-k", gen_k, "density parameter (random)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", output, "output file")->required();

  auto* stress = app.add_subcommand("stress", "Randomized extraction campaign");
  stress->add_option("--trials", trials, "number of trials")->required();
  stress->add_option("-n", gen_n, "vertex count")->required();
  stress->add_option("-k", args.k, "density parameter")->required();
  stress->add_option("-r", args.r, "leaf count")->required();
  stress->add_option("--seed", seed, "base seed")->required();
  stress->add_flag("--json", args.json, "emit the report as JSON");
  stress->add_flag("--timings", timings, "include wall-clock timing in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (extract->parsed()) return run_extract(args);
    if (lemma->parsed()) return run_lemma(args);
    if (oracle->parsed()) return run_oracle(args);
    if (verify->parsed()) return run_verify(args.input, cert_path);
    if (gen->parsed()) return run_gen(kind, params, gen_n, gen_k, seed, output);
    if (stress->parsed())
      return run_stress(trials, gen_n, args.k, args.r, seed, args.json, timings);
  } catch (const keyring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
