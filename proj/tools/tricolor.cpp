// tricolor: analyze, invert, classify and verify 3-colored digraphs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tricolor/tricolor.hpp"

namespace {

using namespace tricolor;

enum Exit { ok = 0, input_error = 1, disagreement = 2, counterexample = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Common {
  std::string input = "-";
  std::string format = "text";
  bool timing = false;
};

int run_report(const Common& c, bool witnesses, const std::string& pegs_flag) {
  const auto t0 = std::chrono::steady_clock::now();
  const ColoredDigraph g = parse_graph(read_input(c.input));
  ReportOptions opt;
  opt.witnesses = witnesses;
  opt.inverse = !witnesses;
  opt.pegs = pegs_flag == "outward" ? PegRule::outward_only : PegRule::with_chords;
  ClassificationReport r = classify(g, opt);

  bool same = r.det_agrees();
  if (same && r.inverse) same = inverse_combinatorial(g) == *r.inverse;
  if (c.timing) r.timing_ms = elapsed_ms(t0);
  std::cout << (c.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r));
  if (!same) {
    std::cerr << "error: combinatorial and algebraic results differ\n";
    return disagreement;
  }
  return r.verdicts_agree() ? ok : counterexample;
}

int run_invert(const Common& c, const std::string& method) {
  const ColoredDigraph g = parse_graph(read_input(c.input));
  std::optional<exact::GaussianMatrix> comb, alg;
  if (method != "algebraic") comb = inverse_combinatorial(g);
  if (method != "combinatorial") alg = exact::inverse_exact(adjacency_matrix(g).matrix());
  if (comb && alg && !(*comb == *alg)) {
    std::cerr << "error: combinatorial and algebraic inverses differ\n";
    std::cout << "combinatorial:\n" << format_matrix(*comb) << "algebraic:\n" << format_matrix(*alg);
    return disagreement;
  }
  const auto& m = comb ? *comb : *alg;
  std::cout << (c.format == "json" ? exact::to_json(m).dump() + "\n" : format_matrix(m));
  return ok;
}

int run_verify(const Common& c, const std::string& family, int max_n, int min_n, const std::string& coloring,
               std::size_t samples, std::uint64_t seed, unsigned jobs, const std::string& report_path) {
  static const std::map<std::string, Family> families{
      {"unicyclic", Family::unicyclic}, {"binf", Family::bicyclic_infinity}, {"btheta", Family::bicyclic_theta}};
  SweepConfig cfg;
  cfg.family = families.at(family);
  cfg.max_order = max_n;
  cfg.min_order = min_n;
  cfg.kind = coloring == "exhaustive" ? ColoringMode::Kind::exhaustive : ColoringMode::Kind::sampled;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.jobs = jobs;
  const auto t0 = std::chrono::steady_clock::now();
  const SweepSummary s = run_sweep(cfg);
  const auto j = to_json(s);
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(s);
  }
  if (c.timing) std::cout << "timing_ms: " << elapsed_ms(t0) << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw Error("cannot write '" + report_path + "'");
    out << j.dump(2) << "\n";
  }
  return s.passed() ? ok : counterexample;
}

void add_common(CLI::App* sub, Common& c, bool input) {
  if (input) sub->add_option("--input", c.input, "graph file, '-' for stdin")->capture_default_str();
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_flag("--timing", c.timing, "append wall-clock time");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-colored digraphs: determinants, inverses and their characterizations"};
  app.require_subcommand(1);
  Common common;

  auto* analyze = app.add_subcommand("analyze", "shape, determinant, predicate verdicts and inverse");
  add_common(analyze, common, true);

  auto* invert = app.add_subcommand("invert", "print the inverse adjacency matrix");
  add_common(invert, common, true);
  std::string method = "both";
  invert->add_option("--method", method)
      ->check(CLI::IsMember({"combinatorial", "algebraic", "both"}))
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "predicate verdicts with witnesses");
  add_common(classify_cmd, common, true);
  std::string pegs = "with-chords";
  for (auto* sub : {analyze, classify_cmd}) {
    sub->add_option("--pegs", pegs, "whether matching chords of a cycle count as pegs")
        ->check(CLI::IsMember({"with-chords", "outward"}))
        ->capture_default_str();
  }

  auto* verify = app.add_subcommand("verify", "sweep generated graphs against the oracle");
  add_common(verify, common, false);
  std::string family = "unicyclic", coloring = "exhaustive", report_path;
  int max_n = 8, min_n = 0;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  verify->add_option("--family", family)->check(CLI::IsMember({"unicyclic", "binf", "btheta"}))->capture_default_str();
  verify->add_option("--max-n", max_n)->capture_default_str();
  verify->add_option("--min-n", min_n, "smallest order (default: family minimum)");
  verify->add_option("--coloring", coloring)->check(CLI::IsMember({"exhaustive", "sample"}))->capture_default_str();
  verify->add_option("--samples", samples, "instances per order when sampling")->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  verify->add_option("--report-path", report_path, "also write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_report(common, false, pegs);
    if (classify_cmd->parsed()) return run_report(common, true, pegs);
    if (invert->parsed()) return run_invert(common, method);
    if (verify->parsed()) {
      return run_verify(common, family, max_n, min_n, coloring, samples, seed, jobs, report_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return ok;
}
