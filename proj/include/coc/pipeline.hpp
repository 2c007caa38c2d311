#ifndef COC_PIPELINE_HPP
#define COC_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coc/instance.hpp"

namespace coc {

/// Closed-form quantities of the kernel for bound d and modulator size m.
/// Values saturate at INT64_MAX.
struct Bounds {
  std::int64_t small_alpha = 0;       // d^3 + 1
  std::int64_t c_p = 0;               // (d^3 + 1)(2dm + 1)
  std::int64_t rule2_threshold = 0;   // m^2 (m + 2(d-1))
  std::int64_t components = 0;        // (2(d-1) + 1) m^2
  std::int64_t spine = 0;             // 48 d^6 m^3 + 12 d^5 m^4
  std::int64_t trivial_yes = 0;       // 48 d^6 m^3 + 13 d^5 m^4
};

Bounds bounds(int d, int m);

/// Component bound ((d-1)b + 1) m^b after component reduction with chunk bound b.
std::int64_t component_bound(int d, int m, int b);

enum class Outcome { trivial_yes, trivial_no, reduced };

const char* outcome_name(Outcome o);

/// Canonical answers: one vertex, d = 1, with k = 1 (yes) or k = -1 (no).
Instance trivial_yes_instance();
Instance trivial_no_instance();

enum class RuleSet { rule1, rule2, all };

struct KernelOptions {
  RuleSet rules = RuleSet::all;
};

struct KernelReport {
  Outcome outcome = Outcome::reduced;
  Instance instance;  // reduced instance, or the canonical trivial one
  int d = 1;
  int modulator_size = 0;
  int n_in = 0;
  int n_out = 0;
  std::int64_t k_in = 0;
  std::int64_t k_out = 0;
  int rule2_iterations = 0;
  int components_before_rule1 = 0;
  int components_after_rule1 = 0;
  int rule1_expansions = 0;
  int rule1_deleted = 0;
  int spine_size = 0;
  int packing_size = 0;
  Bounds bound;
  bool bounds_checked = false;
  /// Output vertex -> input vertex; ids >= n_in name synthesized vertices.
  std::vector<int> labels;
  std::vector<std::string> trace;

  bool deg2 = false;
  int deg2_components_after_rule1 = 0;
  int deg2_cycles_promoted = 0;
  int deg2_modulator_size = 0;
  std::int64_t deg2_modulator_bound = 0;
};

/// Kernel for modulators to caterpillar forests. Throws NotCaterpillar when
/// G - M is not a caterpillar forest. Violated bounds raise Error(internal).
KernelReport kernelize_pw1(const Instance& inst, const KernelOptions& opts = {});

/// Kernel for modulators to graphs whose components are cycles or
/// caterpillars. Throws Error(class_violation) for other components.
KernelReport kernelize_deg2(const Instance& inst, const KernelOptions& opts = {});

/// "key: value" lines.
std::string format_report(const KernelReport& r, bool with_trace = false);

}  // namespace coc

#endif
