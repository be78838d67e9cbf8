// clusterlab: batch CLI over the cluster-algebra engine.
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 cap exceeded.

#include "cluster/json_io.hpp"
#include "cluster/seed.hpp"
#include "cluster/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

using nlohmann::json;
using namespace cluster;

namespace {

std::vector<int> parse_walk(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    out.push_back(std::stoi(tok) - 1);  // CLI is 1-based
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text << "\n";
  }
  std::cout << text << "\n";
}

json graph_report(const ExchangeGraph& g) {
  json clusters = json::array();
  for (const auto& node : g.clusters) {
    json vars = json::array();
    for (const auto& v : node.vars_sorted) vars.push_back(v.to_string());
    clusters.push_back(json{{"variables", vars},
                            {"neighbors", node.neighbors}});
  }
  json variables = json::array();
  for (const auto& v : g.variables) variables.push_back(v.to_string());
  return json{{"clusters", (long long)g.clusters.size()},
              {"variables", (long long)g.variables.size()},
              {"initial_cluster", g.initial_cluster},
              {"cluster_list", clusters},
              {"variable_list", variables}};
}

int cmd_mutate(const ExchangeMatrix& b0, const std::vector<int>& walk,
               const std::string& out_path) {
  Seed s = Seed::initial(b0);
  QP qp = make_qp(matrix_to_quiver(b0));
  for (int k : walk) {
    s = seed_mutate(s, k);
    qp = qp_mutate(qp, k).result;
  }
  json cluster_strs = json::array();
  for (const auto& v : s.cluster) cluster_strs.push_back(v.to_string());
  emit(json{{"matrix", matrix_to_json(s.b)},
            {"cluster", cluster_strs},
            {"qp", qp_to_json(qp)}},
       out_path);
  return 0;
}

int cmd_enumerate(const ExchangeMatrix& b0, long long cap,
                  const std::string& out_path) {
  ExchangeGraph g = enumerate_exchange_graph(b0, cap);
  emit(graph_report(g), out_path);
  return 0;
}

int cmd_expand(const ExchangeMatrix& b0, const std::vector<int>& walk, int k,
               const std::string& out_path) {
  LaurentPoly p = expand_along_walk(b0, walk, k);
  std::cout << p.to_string() << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << json{{"expansion", p.to_string()}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_rep(const ExchangeMatrix& b0, const std::vector<int>& walk, int k,
            const std::string& out_path) {
  DecoratedRep dec = build_cluster_rep(b0, walk, k);
  json j = decorated_to_json(dec);
  j["g_vector"] = g_vector(dec);
  j["f_polynomial"] = f_polynomial(dec).to_string();
  j["x"] = x_of_rep(dec, b0).to_string();
  j["e_invariant"] = e_invariant(dec);
  emit(j, out_path);
  return 0;
}

int cmd_xcheck(const ExchangeMatrix& b0, long long cap,
               const std::string& out_path) {
  ExchangeGraph g = enumerate_exchange_graph(b0, cap);
  const int n = b0.size();
  long long checks = 0;
  json failures = json::array();
  for (const auto& node : g.clusters)
    for (int k = 0; k < n; ++k) {
      LaurentPoly symbolic = node.rep.cluster[k];
      DecoratedRep dec = build_cluster_rep(b0, node.rep.walk, k);
      LaurentPoly via_rep = x_of_rep(dec, b0);
      ++checks;
      if (!(symbolic == via_rep))
        failures.push_back(json{{"walk", node.rep.walk},
                                {"k", k + 1},
                                {"symbolic", symbolic.to_string()},
                                {"representation", via_rep.to_string()}});
    }
  emit(json{{"checks", checks}, {"failures", failures}}, out_path);
  return failures.empty() ? 0 : 1;
}

int cmd_verify_lemma(const ExchangeMatrix& b0, int max_deg, long long cap,
                     const std::string& out_path) {
  ExchangeGraph g = enumerate_exchange_graph(b0, cap);
  LemmaReport rep = check_proper_lemma(g, max_deg);
  emit(json{{"checks", rep.checks},
            {"skipped", rep.skipped},
            {"violations", rep.witnesses}},
       out_path);
  return rep.clean() ? 0 : 1;
}

int cmd_verify_atomic(const ExchangeMatrix& b0, int max_deg, long long cap,
                      const std::string& out_path) {
  ExchangeGraph g = enumerate_exchange_graph(b0, cap);
  AtomicityContext ctx = make_atomicity_context(g, max_deg);
  const int n = b0.size();
  long long checks = 0;
  json failures = json::array();
  auto run = [&](const LaurentPoly& p, const std::string& label) {
    AtomicityResult r = verify_atomicity(p, ctx);
    ++checks;
    if (r.residual || !r.theorem_consistent)
      failures.push_back(json{{"element", label},
                              {"residual", r.residual},
                              {"is_positive", r.is_positive},
                              {"coords_nonneg", r.coords_nonneg}});
  };
  for (size_t i = 0; i < ctx.basis.monomials.size(); ++i)
    run(ctx.basis.monomials[i].expansion, "basis[" + std::to_string(i) + "]");
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = LaurentPoly::zero(n);
    for (size_t i = 0; i < ctx.basis.monomials.size(); ++i) {
      int c = coeff(rng);
      if (c != 0)
        p = p + LaurentPoly::constant(n, c) * ctx.basis.monomials[i].expansion;
    }
    run(p, "random[" + std::to_string(trial) + "]");
  }
  emit(json{{"checks", checks}, {"failures", failures}}, out_path);
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster-algebra engine and verifier"};
  std::string input, command, walk_text, out_path;
  int k = 1, max_deg = 3, primes = 2;
  long long cap = 100000;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--input", input, "quiver or matrix JSON file")->required();
  app.add_option("--command", command,
                 "mutate|enumerate|expand|rep|xcheck|verify-lemma|verify-atomic")
      ->required();
  app.add_option("--walk", walk_text, "comma-separated 1-based directions");
  app.add_option("--k", k, "1-based vertex / variable index");
  app.add_option("--max-deg", max_deg, "degree bound for monomial sweeps");
  app.add_option("--cap", cap, "exchange-graph BFS cap");
  app.add_option("--primes", primes, "spare-prime budget for Euler counts");
  app.add_option("--threads", threads, "worker threads (output is canonical)");
  app.add_option("--out", out_path, "also write the JSON report here");
  CLI11_PARSE(app, argc, argv);

  try {
    ExchangeMatrix b0 = load_matrix_file(input);
    std::vector<int> walk = parse_walk(walk_text);
    if (max_deg < 0 || cap <= 0 || k < 1 || k > b0.size()) {
      std::cerr << "error: flag out of range\n";
      return 2;
    }
    if (command == "mutate") return cmd_mutate(b0, walk, out_path);
    if (command == "enumerate") return cmd_enumerate(b0, cap, out_path);
    if (command == "expand") return cmd_expand(b0, walk, k - 1, out_path);
    if (command == "rep") return cmd_rep(b0, walk, k - 1, out_path);
    if (command == "xcheck") return cmd_xcheck(b0, cap, out_path);
    if (command == "verify-lemma")
      return cmd_verify_lemma(b0, max_deg, cap, out_path);
    if (command == "verify-atomic")
      return cmd_verify_atomic(b0, max_deg, cap, out_path);
    std::cerr << "error: unknown command '" << command << "'\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
}
