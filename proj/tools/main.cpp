#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twc/dp_solver.hpp"
#include "twc/instance_io.hpp"
#include "twc/minsep_pmc.hpp"
#include "twc/recognition.hpp"
#include "twc/verify.hpp"

namespace {

using nlohmann::json;

void print_set_lines(const std::vector<twc::VertexSet>& family) {
  for (const auto& s : family) {
    bool sep = false;
    for (int v : s) {
      if (sep) std::cout << ' ';
      std::cout << v;
      sep = true;
    }
    std::cout << '\n';
  }
}

void print_solution(const twc::VertexSet& s, std::uint64_t weight) {
  std::cout << "weight " << weight << "\n";
  std::cout << "set";
  for (int v : s) std::cout << ' ' << v;
  std::cout << '\n';
}

json witness_json(const std::optional<std::vector<int>>& w) {
  if (!w) return nullptr;
  return json(*w);
}

int run(int argc, char** argv) {
  CLI::App app{"exact treewidth-constrained subgraph solvers over container families"};
  app.require_subcommand(1);

  std::string file, family_file, strategy = "all-pmcs", suite = "dp";
  long long budget = 2'000'000;
  std::uint64_t seed = 1;
  int max_n = 12, k = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "graph file")->required();
    sub->add_option("--budget", budget, "enumeration budget");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--max-n", max_n, "size guard for oracle sweeps");
  };

  CLI::App* rec = app.add_subcommand("recognize", "class report as JSON");
  add_common(rec);
  CLI::App* seps = app.add_subcommand("seps", "list minimal separators");
  add_common(seps);
  CLI::App* pmcs = app.add_subcommand("pmcs", "list potential maximal cliques");
  add_common(pmcs);
  CLI::App* mwis = app.add_subcommand("mwis", "maximum-weight independent set");
  add_common(mwis);
  CLI::App* fvs = app.add_subcommand("fvs", "minimum feedback vertex set");
  add_common(fvs);
  CLI::App* tw = app.add_subcommand("tw-subgraph", "maximum-weight induced subgraph of treewidth < k");
  add_common(tw);
  tw->add_option("--k", k, "treewidth bound (exclusive)")->required();
  tw->add_option("--strategy", strategy, "all-pmcs | class-c | family")
      ->check(CLI::IsMember({"all-pmcs", "class-c", "family"}));
  tw->add_option("--family", family_file, "container family file for --strategy family");
  CLI::App* verify = app.add_subcommand("verify", "run an oracle sweep suite");
  add_common(verify);
  verify->add_option("--suite", suite, "sep-containers | pmc-containers | dp")
      ->check(CLI::IsMember({"sep-containers", "pmc-containers", "dp"}));

  CLI11_PARSE(app, argc, argv);

  twc::Instance inst = twc::load_instance(file);

  if (rec->parsed()) {
    twc::ClassReport r = twc::classify(inst.graph);
    json j;
    j["in_class_c"] = r.in_class_c;
    j["long_hole_free"] = r.is_long_hole_free;
    j["p5_free"] = r.is_p5_free;
    j["witnesses"]["long_hole"] = witness_json(r.long_hole);
    j["witnesses"]["extended_c5"] = witness_json(r.extended_c5);
    j["witnesses"]["p5"] = witness_json(r.p5);
    std::cout << j.dump(2) << '\n';
  } else if (seps->parsed()) {
    print_set_lines(twc::enumerate_minimal_separators(inst.graph, budget));
  } else if (pmcs->parsed()) {
    std::vector<twc::VertexSet> fam;
    for (auto& rec2 : twc::enumerate_pmcs(inst.graph, budget)) fam.push_back(std::move(rec2.omega));
    print_set_lines(fam);
  } else if (mwis->parsed()) {
    twc::VertexSet s = twc::solve_mwis(inst.graph, inst.weights);
    print_solution(s, twc::weight_of(inst.weights, s));
  } else if (fvs->parsed()) {
    twc::VertexSet s = twc::solve_fvs(inst.graph);
    print_solution(s, std::uint64_t(s.count()));
  } else if (tw->parsed()) {
    twc::FamilyStrategy strat = twc::FamilyStrategy::AllPmcs;
    std::vector<twc::VertexSet> fam;
    const std::vector<twc::VertexSet>* fam_ptr = nullptr;
    if (strategy == "class-c") strat = twc::FamilyStrategy::ClassCFamily;
    if (strategy == "family") {
      strat = twc::FamilyStrategy::ExplicitFamily;
      fam = twc::load_family(family_file, inst.graph.n());
      fam_ptr = &fam;
    }
    twc::VertexSet s = twc::solve_tw_subgraph(inst.graph, inst.weights, k, strat, fam_ptr, budget);
    print_solution(s, twc::weight_of(inst.weights, s));
  } else if (verify->parsed()) {
    twc::VerifyOptions opts{seed, budget, max_n};
    bool ok = false;
    if (suite == "sep-containers") ok = twc::verify_sep_containers(inst, opts, std::cout);
    if (suite == "pmc-containers") ok = twc::verify_pmc_containers(inst, opts, std::cout);
    if (suite == "dp") ok = twc::verify_dp(inst, opts, std::cout);
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const twc::SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case twc::Fail::ParseError:
        return 4;
      case twc::Fail::BudgetExceeded:
      case twc::Fail::TooLarge:
        return 3;
      default:
        return e.is_class_violation() ? 2 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
