#pragma once

// Reports for single graphs and for sweeps, as text or JSON. Both forms
// carry the same fields; output is deterministic unless timing is asked for.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricolor/characterize.hpp"
#include "tricolor/combinatorics.hpp"
#include "tricolor/exact.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/sweep.hpp"

namespace tricolor {

inline constexpr int kSchemaVersion = 1;

struct VerdictReport {
  Verdict verdict;
  std::optional<bool> oracle;  // ground truth, when the oracle ran

  bool agrees() const { return !oracle || *oracle == verdict.holds; }
};

struct ClassificationReport {
  ShapeClass shape;
  bool in_model{false};
  std::optional<std::int64_t> det_combinatorial;
  std::optional<exact::GaussianRational> det_algebraic;
  std::vector<VerdictReport> verdicts;
  std::optional<exact::GaussianMatrix> inverse;
  std::optional<double> timing_ms;
  std::string note;

  bool det_agrees() const {
    return !det_combinatorial || !det_algebraic || exact::GaussianRational(*det_combinatorial) == *det_algebraic;
  }
  bool verdicts_agree() const {
    for (const auto& v : verdicts)
      if (!v.agrees()) return false;
    return true;
  }
};

struct ReportOptions {
  bool verdicts{true};
  bool witnesses{false};
  bool inverse{true};
  PegRule pegs{PegRule::with_chords};
};

namespace detail {

struct OracleTruth {
  bool nonsingular, zero_diagonal, unimodular, three_colored;
};

inline OracleTruth oracle_truth(const exact::GaussianRational& det, const exact::GaussianMatrix* inv) {
  OracleTruth t{!det.is_zero(), false, false, false};
  t.unimodular = det.norm() == exact::Rational(1);
  if (t.nonsingular && inv) {
    t.zero_diagonal = true;
    t.three_colored = true;
    const exact::GaussianRational one(1), i = exact::GaussianRational::i();
    for (std::size_t r = 0; r < inv->order(); ++r) {
      t.zero_diagonal = t.zero_diagonal && (*inv)(r, r).is_zero();
      for (std::size_t c = 0; c < inv->order(); ++c) {
        const auto& x = (*inv)(r, c);
        t.three_colored = t.three_colored && (x.is_zero() || x == one || x == -one || x == i || x == -i);
      }
    }
  }
  return t;
}

}  // namespace detail

/// Shape, determinant by both routes, predicate verdicts against the oracle
/// and, when nonsingular, the inverse.
inline ClassificationReport classify(const ColoredDigraph& g, const ReportOptions& opt = {}) {
  ClassificationReport r;
  const Analysis a(g);
  r.shape = a.shape();
  r.in_model = in_model(g, a.cycles());
  r.det_combinatorial = det_combinatorial(a);
  const auto A = adjacency_matrix(g);
  r.det_algebraic = exact::det_exact(A.matrix());
  std::optional<exact::GaussianMatrix> inv;
  if (!r.det_algebraic->is_zero()) inv = exact::inverse_exact(A.matrix());
  if (opt.inverse) r.inverse = inv;

  const bool modelled = (r.shape.tag == ShapeClass::Tag::unicyclic || r.shape.is_bicyclic()) && r.in_model;
  if (!opt.verdicts) return r;
  if (!modelled) {
    r.note = r.in_model ? "predicates apply to unicyclic and bicyclic graphs only"
                        : "predicates need a cycle of weight ±i";
    return r;
  }
  const auto truth = detail::oracle_truth(*r.det_algebraic, inv ? &*inv : nullptr);
  auto keep = [&](Verdict v, std::optional<bool> oracle) {
    if (!opt.witnesses) v.witness.reset();
    r.verdicts.push_back({std::move(v), oracle});
  };
  const Verdict ns = nonsingular_predicate(a);
  keep(ns, truth.nonsingular);
  const bool nonsingular = ns.holds && truth.nonsingular;
  std::optional<Verdict> zd;
  if (nonsingular) {
    zd = zero_diagonal_predicate(a, opt.pegs);
    keep(*zd, truth.zero_diagonal);
  }
  keep(unimodular_predicate(a), truth.unimodular);
  if (nonsingular && zd->holds && truth.zero_diagonal) keep(inverse_is_3colored(a, opt.pegs), truth.three_colored);
  return r;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json to_json(const VertexPair& e) { return nlohmann::json::array({e.first + 1, e.second + 1}); }

inline nlohmann::json vertices_json(const std::vector<Vertex>& vs) {
  auto out = nlohmann::json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json j = nlohmann::json::object();
  if (w.matching) {
    auto m = nlohmann::json::array();
    for (const auto& e : w.matching->edges) m.push_back(to_json(e));
    j["matching"] = m;
  }
  if (!w.cycles.empty()) {
    auto c = nlohmann::json::array();
    for (const auto& x : w.cycles) c.push_back(vertices_json(x.vertices));
    j["cycles"] = c;
  }
  if (!w.pegs.empty()) {
    auto p = nlohmann::json::array();
    for (const auto& e : w.pegs) p.push_back(to_json(e));
    j["pegs"] = p;
  }
  if (!w.paths.empty()) {
    auto p = nlohmann::json::array();
    for (const auto& x : w.paths) p.push_back(vertices_json(x.vertices));
    j["paths"] = p;
  }
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["shape"] = to_string(r.shape);
  j["in_model"] = r.in_model;
  nlohmann::json det;
  det["combinatorial"] = r.det_combinatorial ? nlohmann::json(*r.det_combinatorial) : nlohmann::json(nullptr);
  det["algebraic"] = r.det_algebraic ? nlohmann::json(exact::to_string(*r.det_algebraic)) : nlohmann::json(nullptr);
  j["det"] = det;
  auto vs = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::json x;
    x["predicate"] = v.verdict.predicate;
    x["holds"] = v.verdict.holds;
    x["oracle"] = v.oracle ? nlohmann::json(*v.oracle) : nlohmann::json(nullptr);
    x["oracle_agreement"] = v.oracle ? nlohmann::json(v.agrees()) : nlohmann::json(nullptr);
    if (v.verdict.witness) x["witness"] = to_json(*v.verdict.witness);
    vs.push_back(x);
  }
  j["verdicts"] = vs;
  j["inverse"] = r.inverse ? exact::to_json(*r.inverse) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

inline std::string format_vertices(const std::vector<Vertex>& vs) {
  std::string s = "[";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k] + 1);
  return s + "]";
}

inline std::string format_edge(const VertexPair& e) { return format_vertices({e.first, e.second}); }

inline std::string format_matrix(const exact::GaussianMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) out += (j ? " " : "") + exact::to_string(m(i, j));
    out += "\n";
  }
  return out;
}

inline std::string format_witness(const Witness& w, const std::string& indent) {
  std::string out;
  if (w.matching) {
    out += indent + "matching:";
    for (const auto& e : w.matching->edges) out += " " + format_edge(e);
    out += "\n";
  }
  if (!w.cycles.empty()) {
    out += indent + "cycles:";
    for (const auto& c : w.cycles) out += " " + format_vertices(c.vertices);
    out += "\n";
  }
  if (!w.pegs.empty()) {
    out += indent + "pegs:";
    for (const auto& e : w.pegs) out += " " + format_edge(e);
    out += "\n";
  }
  if (!w.paths.empty()) {
    out += indent + "paths:";
    for (const auto& p : w.paths) out += " " + format_vertices(p.vertices);
    out += "\n";
  }
  if (!w.note.empty()) out += indent + "note: " + w.note + "\n";
  return out;
}

inline std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "schema: " << kSchemaVersion << "\n";
  os << "shape: " << to_string(r.shape) << "\n";
  os << "in_model: " << (r.in_model ? "true" : "false") << "\n";
  os << "det.combinatorial: " << (r.det_combinatorial ? std::to_string(*r.det_combinatorial) : "null") << "\n";
  os << "det.algebraic: " << (r.det_algebraic ? exact::to_string(*r.det_algebraic) : "null") << "\n";
  for (const auto& v : r.verdicts) {
    os << v.verdict.predicate << ": " << (v.verdict.holds ? "true" : "false");
    if (v.oracle) os << " (oracle " << (*v.oracle ? "true" : "false") << ", " << (v.agrees() ? "agrees" : "DISAGREES") << ")";
    os << "\n";
    if (v.verdict.witness) os << format_witness(*v.verdict.witness, "  ");
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  if (r.inverse) os << "inverse:\n" << format_matrix(*r.inverse);
  if (r.timing_ms) os << "timing_ms: " << *r.timing_ms << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Sweep summaries.

inline std::string to_string(ColoringMode::Kind k) {
  return k == ColoringMode::Kind::exhaustive ? "exhaustive" : "sample";
}

inline nlohmann::json to_json(const Counterexample& c) {
  nlohmann::json j;
  j["check"] = info(c.check).name;
  j["order"] = c.key.order;
  j["skeleton"] = c.key.skeleton;
  j["coloring"] = c.key.coloring;
  j["graph"] = c.graph;
  j["detail"] = c.detail;
  return j;
}

inline nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["family"] = to_string(s.config.family);
  j["coloring"] = to_string(s.config.kind);
  j["max_n"] = s.config.max_order;
  if (s.config.kind == ColoringMode::Kind::sampled) {
    j["samples"] = s.config.samples;
    j["seed"] = s.config.seed;
  }
  auto orders = nlohmann::json::array();
  for (const auto& o : s.orders) orders.push_back({{"n", o.order}, {"skeletons", o.skeletons}, {"instances", o.instances}});
  j["orders"] = orders;
  j["instances"] = s.instances();
  auto checks = nlohmann::json::array();
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    const auto& t = s.tallies[k];
    const auto& in = info(static_cast<Check>(k));
    nlohmann::json c{{"name", in.name}, {"description", in.description}, {"gating", in.gating},
                     {"evaluated", t.evaluated}, {"violated", t.violated}};
    if (t.first) c["first_violation"] = to_json(*t.first);
    checks.push_back(c);
  }
  j["checks"] = checks;
  const auto first = s.first_counterexample();
  j["counterexample"] = first ? to_json(*first) : nlohmann::json(nullptr);
  j["passed"] = !first.has_value();
  return j;
}

inline std::string to_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "family: " << to_string(s.config.family) << "\n";
  os << "coloring: " << to_string(s.config.kind);
  if (s.config.kind == ColoringMode::Kind::sampled) os << " (samples " << s.config.samples << ", seed " << s.config.seed << ")";
  os << "\n";
  for (const auto& o : s.orders) os << "n=" << o.order << ": skeletons " << o.skeletons << ", instances " << o.instances << "\n";
  os << "instances: " << s.instances() << "\n";
  os << "checks (evaluated / violated):\n";
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    const auto& t = s.tallies[k];
    const auto& in = info(static_cast<Check>(k));
    if (t.evaluated == 0) continue;
    os << "  " << in.name << ": " << t.evaluated << " / " << t.violated << (in.gating ? "" : " (observation)") << "\n";
  }
  const auto first = s.first_counterexample();
  if (!first) {
    os << "counterexamples: none\n";
  } else {
    os << "first counterexample: " << info(first->check).name << " at n=" << first->key.order << ", skeleton "
       << first->key.skeleton << ", coloring " << first->key.coloring << "\n";
    if (!first->detail.empty()) os << "  " << first->detail << "\n";
    os << first->graph;
  }
  return os.str();
}

}  // namespace tricolor
