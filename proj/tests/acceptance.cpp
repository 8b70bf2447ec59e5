// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so a known red criterion can be tracked
// without hiding it.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tricolor/tricolor.hpp"

using namespace tricolor;

namespace {

const char* kExampleB =
    "n=6\n"
    "1 2 r\n2 3 r\n4 3 g\n4 1 r\n1 6 r\n2 5 r\n5 6 r\n";

const std::vector<std::vector<const char*>> kGoldenInverse{
    {"0", "-i", "0", "1", "0", "i"},  {"i", "0", "1", "0", "-i", "0"},  {"0", "1", "0", "0", "0", "-1"},
    {"1", "0", "0", "0", "-1", "0"},  {"0", "i", "0", "-1", "0", "1-i"}, {"-i", "0", "-1", "0", "1+i", "0"}};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome golden() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = parse_graph(kExampleB);
  const Analysis a(g);
  const auto det_c = det_combinatorial(a);
  const auto det_a = exact::det_exact(adjacency_matrix(g).matrix());
  const auto inv_c = inverse_combinatorial(a);
  const auto inv_a = exact::inverse_exact(adjacency_matrix(g).matrix());
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  exact::GaussianMatrix expect(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) expect(i, j) = exact::parse_gaussian(kGoldenInverse[i][j]);

  std::ostringstream os;
  os << "det " << det_c << " / " << exact::to_string(det_a) << ", " << ms << " ms";
  const bool ok = det_c == -1 && det_a == exact::GaussianRational(-1) && inv_c == expect && inv_a == expect && ms < 1000;
  return {ok, os.str()};
}

struct Sweeps {
  std::vector<SweepSummary> runs;

  std::uint64_t evaluated(Check c) const {
    std::uint64_t s = 0;
    for (const auto& r : runs) s += r.tally(c).evaluated;
    return s;
  }
  std::uint64_t violated(Check c) const {
    std::uint64_t s = 0;
    for (const auto& r : runs) s += r.tally(c).violated;
    return s;
  }
  /// Every listed check ran somewhere and was never violated.
  Outcome all_hold(std::initializer_list<Check> checks) const {
    std::ostringstream os;
    bool ok = true;
    for (Check c : checks) {
      const auto e = evaluated(c), v = violated(c);
      ok = ok && e > 0 && v == 0;
      os << (os.tellp() ? ", " : "") << info(c).name << " " << v << "/" << e;
    }
    return {ok, os.str()};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int max_n = 8;
  unsigned jobs = 1;
  std::vector<int> expect_fail;
  app.add_option("--max-n", max_n)->capture_default_str();
  app.add_option("--jobs", jobs)->capture_default_str();
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("golden example", golden());

  Sweeps sw;
  for (auto f : {Family::unicyclic, Family::bicyclic_infinity, Family::bicyclic_theta}) {
    SweepConfig cfg;
    cfg.family = f;
    cfg.max_order = max_n;
    cfg.jobs = jobs;
    const auto t0 = std::chrono::steady_clock::now();
    sw.runs.push_back(run_sweep(cfg));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "sweep " << to_string(f) << " n<=" << max_n << ": " << sw.runs.back().instances() << " instances, "
              << s << " s\n";
  }

  results.emplace_back("oracle equivalence",
                       sw.all_hold({Check::det_equivalence, Check::inverse_equivalence, Check::adjugate_identity,
                                    Check::conjugate_orientation}));
  results.emplace_back("predicate soundness",
                       sw.all_hold({Check::nonsingular_verdict, Check::zero_diagonal_verdict,
                                    Check::unimodular_verdict, Check::inverse_3colored_verdict}));
  results.emplace_back("count invariants",
                       sw.all_hold({Check::ses_count_single_independent, Check::ses_count_infinity_both_independent,
                                    Check::ses_count_theta_all_independent, Check::peg_parity,
                                    Check::multiple_matchings_iff_even_independent}));
  results.emplace_back("closed forms",
                       sw.all_hold({Check::closed_form_single_independent, Check::closed_form_infinity_both_independent,
                                    Check::closed_form_theta_all_independent}));
  results.emplace_back("mm-alternating bound", sw.all_hold({Check::mm_path_bound}));

  std::set<int> failed;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& [name, o] = results[k];
    if (!o.pass) failed.insert(static_cast<int>(k + 1));
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << name << ": " << o.detail << "\n";
  }

  if (failed.count(3)) {
    for (const auto& r : sw.runs) {
      const auto& t = r.tally(Check::inverse_3colored_verdict);
      if (!t.first) continue;
      std::cout << "\n" << to_string(r.config.family) << ": first predicate disagreement ("
                << info(t.first->check).name << ")\n  " << t.first->detail << "\n" << t.first->graph;
    }
    std::cout << "\nwith chords not counted as pegs: "
              << info(Check::zero_diagonal_outward_pegs).name << " "
              << sw.violated(Check::zero_diagonal_outward_pegs) << "/" << sw.evaluated(Check::zero_diagonal_outward_pegs)
              << ", " << info(Check::inverse_3colored_outward_pegs).name << " "
              << sw.violated(Check::inverse_3colored_outward_pegs) << "/"
              << sw.evaluated(Check::inverse_3colored_outward_pegs) << "\n";
    for (const auto& r : sw.runs) {
      const auto& t = r.tally(Check::inverse_3colored_outward_pegs);
      if (t.first) std::cout << "  first: " << t.first->detail << "\n" << t.first->graph;
    }
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (failed != expected) {
    std::cout << "\nfailing criteria differ from the expected set\n";
    return 1;
  }
  std::cout << "\n" << results.size() - failed.size() << "/" << results.size() << " criteria pass"
            << (failed.empty() ? "" : " (the failures are the expected ones)") << "\n";
  return 0;
}
