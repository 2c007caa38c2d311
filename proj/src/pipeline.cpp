#include "coc/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "coc/arith.hpp"
#include "coc/error.hpp"
#include "coc/caterpillar.hpp"
#include "coc/packing.hpp"
#include "coc/rules.hpp"
#include "coc/solvers.hpp"

namespace coc {

Bounds bounds(int d, int m) {
  if (d < 1 || m < 0) throw Error(Errc::invalid_argument, "bounds need d >= 1 and m >= 0");
  auto rc = rule2_constants(d, m);
  Bounds b;
  b.small_alpha = rc.small_alpha;
  b.c_p = rc.c_p;
  b.rule2_threshold = rc.threshold;
  b.components = component_bound(d, m, 2);
  std::int64_t head = sat_mul(48, sat_mul(sat_pow(d, 6), sat_pow(m, 3)));
  std::int64_t d5m4 = sat_mul(sat_pow(d, 5), sat_pow(m, 4));
  b.spine = sat_add(head, sat_mul(12, d5m4));
  b.trivial_yes = sat_add(head, sat_mul(13, d5m4));
  return b;
}

std::int64_t component_bound(int d, int m, int b) {
  return sat_mul(sat_add(sat_mul(d - 1, b), 1), sat_pow(m, b));
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::trivial_yes: return "TrivialYes";
    case Outcome::trivial_no: return "TrivialNo";
    case Outcome::reduced: return "Reduced";
  }
  return "?";
}

Instance trivial_yes_instance() { return Instance{Graph(1), 1, 1, {}}; }
Instance trivial_no_instance() { return Instance{Graph(1), 1, -1, {}}; }

namespace {

void relabel(std::vector<int>& labels, const std::vector<Vertex>& origin, int& fresh) {
  std::vector<int> next;
  next.reserve(origin.size());
  for (Vertex o : origin) next.push_back(o >= 0 ? labels[static_cast<std::size_t>(o)] : fresh++);
  labels = std::move(next);
}

void finish_trivial(KernelReport& r, bool yes) {
  r.outcome = yes ? Outcome::trivial_yes : Outcome::trivial_no;
  r.instance = yes ? trivial_yes_instance() : trivial_no_instance();
  r.labels.clear();
}

void ensure_bound(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::internal, "kernel bound violated: " + what);
}

}  // namespace

KernelReport kernelize_pw1(const Instance& inst, const KernelOptions& opts) {
  CaterpillarStructure cs = recognize_caterpillar_forest(inst.graph, inst.modulator);
  KernelReport r;
  r.d = inst.d;
  r.modulator_size = static_cast<int>(inst.modulator.size());
  r.n_in = inst.n();
  r.k_in = inst.k;
  r.bound = bounds(inst.d, r.modulator_size);
  r.labels.resize(static_cast<std::size_t>(inst.n()));
  for (int v = 0; v < inst.n(); ++v) r.labels[static_cast<std::size_t>(v)] = v;

  if (inst.modulator.empty()) {
    int opt = opt_caterpillar_forest(cs, inst.d);
    r.packing_size = opt;
    r.spine_size = cs.total_spine_length();
    r.components_before_rule1 = r.components_after_rule1 = cs.component_count();
    r.trace.push_back("empty modulator: opt " + std::to_string(opt));
    r.k_out = inst.k;
    finish_trivial(r, opt <= inst.k);
    r.n_out = r.instance.n();
    return r;
  }

  Instance cur = inst;
  int fresh = inst.n();
  const bool all = opts.rules == RuleSet::all;

  if (opts.rules != RuleSet::rule1) {
    std::size_t packing = solution_tight_packing(cs, cur.d).size();
    while (rule2_applicable(cur, cs)) {
      Rule2Result step = rule2_replace_spine(cur, cs);
      std::size_t after = solution_tight_packing(step.structure, cur.d).size();
      COC_ENSURE(after < packing);
      packing = after;
      relabel(r.labels, step.origin, fresh);
      for (auto& line : step.trace) r.trace.push_back(std::move(line));
      cur = std::move(step.instance);
      cs = std::move(step.structure);
      ++r.rule2_iterations;
    }
  }

  r.components_before_rule1 = cs.component_count();
  if (opts.rules != RuleSet::rule2) {
    Rule1Result step = rule1_reduce_components(cur, 2, GraphClass::caterpillar_forest);
    cs = restrict_structure(cs, step.origin);
    relabel(r.labels, step.origin, fresh);
    for (auto& line : step.trace) r.trace.push_back(std::move(line));
    cur = std::move(step.instance);
    r.rule1_expansions = step.expansions;
    r.rule1_deleted = step.deleted_components;
  }
  r.components_after_rule1 = cs.component_count();
  r.spine_size = cs.total_spine_length();
  r.packing_size = static_cast<int>(solution_tight_packing(cs, cur.d).size());
  r.k_out = cur.k;
  COC_ENSURE(cur.d == inst.d && static_cast<int>(cur.modulator.size()) == r.modulator_size);

  if (all) {
    r.bounds_checked = true;
    ensure_bound(r.components_after_rule1 <= r.bound.components, "component count");
    ensure_bound(r.spine_size <= r.bound.spine, "spine size");
  }
  if (cur.k < 0) {
    r.trace.push_back("negative budget");
    finish_trivial(r, false);
  } else if (cur.k >= static_cast<std::int64_t>(r.modulator_size) + r.spine_size) {
    r.trace.push_back("modulator plus spine fits the budget");
    finish_trivial(r, true);
  } else {
    if (all) ensure_bound(cur.k <= r.bound.trivial_yes, "budget");
    r.outcome = Outcome::reduced;
    r.instance = std::move(cur);
  }
  r.n_out = r.instance.n();
  return r;
}

KernelReport kernelize_deg2(const Instance& inst, const KernelOptions& opts) {
  // Validates the class before anything else.
  opt_induced(inst.graph, inst.free_vertices(), inst.d, GraphClass::cycles_and_caterpillars);

  const int m = static_cast<int>(inst.modulator.size());
  Rule1Result step = rule1_reduce_components(inst, 3, GraphClass::cycles_and_caterpillars);
  Instance cur = std::move(step.instance);
  if (opts.rules == RuleSet::all)
    ensure_bound(step.components_after <= component_bound(inst.d, m, 3), "component count with chunks of size 3");

  auto mask = cur.modulator_mask();
  std::vector<char> alive(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) alive[i] = !mask[i];
  int promoted = 0;
  for (const auto& comp : components(cur.graph, alive)) {
    if (comp.size() < 3) continue;
    bool cycle = std::all_of(comp.begin(), comp.end(), [&](Vertex v) {
      int deg = 0;
      for (Vertex u : cur.graph.neighbors(v)) deg += alive[static_cast<std::size_t>(u)] ? 1 : 0;
      return deg == 2;
    });
    if (!cycle) continue;
    cur.modulator.push_back(comp.front());
    ++promoted;
  }
  std::sort(cur.modulator.begin(), cur.modulator.end());
  std::int64_t mod_bound = sat_add(sat_mul(sat_add(sat_mul(inst.d - 1, 3), 1), sat_pow(m, 3)), m);
  ensure_bound(static_cast<std::int64_t>(cur.modulator.size()) <= mod_bound, "promoted modulator size");

  KernelReport r = kernelize_pw1(cur, opts);
  std::vector<std::string> trace = std::move(step.trace);
  trace.push_back("promoted " + std::to_string(promoted) + " cycle vertices");
  trace.insert(trace.end(), r.trace.begin(), r.trace.end());
  r.trace = std::move(trace);
  for (int& label : r.labels)
    label = label < static_cast<int>(step.origin.size()) ? step.origin[static_cast<std::size_t>(label)]
                                                         : label - static_cast<int>(step.origin.size()) + inst.n();
  r.n_in = inst.n();
  r.k_in = inst.k;
  r.deg2 = true;
  r.deg2_components_after_rule1 = step.components_after;
  r.deg2_cycles_promoted = promoted;
  r.deg2_modulator_size = static_cast<int>(cur.modulator.size());
  r.deg2_modulator_bound = mod_bound;
  return r;
}

std::string format_report(const KernelReport& r, bool with_trace) {
  std::ostringstream out;
  out << "outcome: " << outcome_name(r.outcome) << "\n"
      << "d: " << r.d << "\n"
      << "modulator_size: " << r.modulator_size << "\n"
      << "n_in: " << r.n_in << "\n"
      << "n_out: " << r.n_out << "\n"
      << "k_in: " << r.k_in << "\n"
      << "k_out: " << r.k_out << "\n"
      << "rule2_iterations: " << r.rule2_iterations << "\n"
      << "components_before_rule1: " << r.components_before_rule1 << "\n"
      << "components_after_rule1: " << r.components_after_rule1 << "\n"
      << "rule1_expansions: " << r.rule1_expansions << "\n"
      << "rule1_deleted_components: " << r.rule1_deleted << "\n"
      << "spine_size: " << r.spine_size << "\n"
      << "packing_size: " << r.packing_size << "\n"
      << "bound_c_p: " << r.bound.c_p << "\n"
      << "bound_rule2_threshold: " << r.bound.rule2_threshold << "\n"
      << "bound_components: " << r.bound.components << "\n"
      << "bound_spine: " << r.bound.spine << "\n"
      << "bound_trivial_yes: " << r.bound.trivial_yes << "\n"
      << "bounds_checked: " << (r.bounds_checked ? "true" : "false") << "\n";
  if (r.deg2) {
    out << "deg2_components_after_rule1: " << r.deg2_components_after_rule1 << "\n"
        << "deg2_cycles_promoted: " << r.deg2_cycles_promoted << "\n"
        << "deg2_modulator_size: " << r.deg2_modulator_size << "\n"
        << "deg2_modulator_bound: " << r.deg2_modulator_bound << "\n";
  }
  if (with_trace)
    for (const auto& line : r.trace) out << "trace: " << line << "\n";
  return out.str();
}

}  // namespace coc
