#include "coc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "coc/error.hpp"
#include "coc/essence.hpp"
#include "coc/hardness.hpp"
#include "coc/packing.hpp"
#include "coc/pipeline.hpp"
#include "coc/solvers.hpp"

struct coc_instance {
  coc::Instance value;
};

struct coc_annotated {
  coc::AnnotatedInstance value;
};

struct coc_kernel_result {
  coc::KernelReport value;
};

namespace {

thread_local std::string last_error;

coc_status status_of(coc::Errc code) {
  switch (code) {
    case coc::Errc::parse: return COC_ERR_PARSE;
    case coc::Errc::invalid_argument: return COC_ERR_INVALID_ARGUMENT;
    case coc::Errc::not_caterpillar: return COC_ERR_NOT_CATERPILLAR;
    case coc::Errc::class_violation: return COC_ERR_CLASS_VIOLATION;
    case coc::Errc::too_large: return COC_ERR_TOO_LARGE;
    case coc::Errc::precondition: return COC_ERR_PRECONDITION;
    case coc::Errc::not_applicable: return COC_ERR_NOT_APPLICABLE;
    case coc::Errc::modulator_not_vc: return COC_ERR_MODULATOR_NOT_VC;
    case coc::Errc::packing_not_full: return COC_ERR_PACKING_NOT_FULL;
    case coc::Errc::internal: return COC_ERR_INTERNAL;
    case coc::Errc::io: return COC_ERR_IO;
  }
  return COC_ERR_INTERNAL;
}

template <class F>
coc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return COC_OK;
  } catch (const coc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COC_ERR_INTERNAL;
  }
}

coc_status null_argument() {
  last_error = "null argument";
  return COC_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coc::MonoidFn table_fn(int d, const int* table, size_t len) {
  if (!table) throw coc::Error(coc::Errc::invalid_argument, "missing table");
  return coc::MonoidFn(d, std::vector<int>(table, table + len));
}

std::string join(const coc::VertexSet& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

}  // namespace

extern "C" {

const char* coc_last_error(void) { return last_error.c_str(); }

const char* coc_status_name(coc_status status) {
  switch (status) {
    case COC_OK: return "ok";
    case COC_ERR_PARSE: return "parse error";
    case COC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COC_ERR_NOT_CATERPILLAR: return "not a caterpillar forest";
    case COC_ERR_CLASS_VIOLATION: return "graph class violation";
    case COC_ERR_TOO_LARGE: return "instance too large";
    case COC_ERR_PRECONDITION: return "precondition violated";
    case COC_ERR_NOT_APPLICABLE: return "rule not applicable";
    case COC_ERR_MODULATOR_NOT_VC: return "modulator is not a vertex cover";
    case COC_ERR_PACKING_NOT_FULL: return "packing does not cover the caterpillar";
    case COC_ERR_INTERNAL: return "internal error";
    case COC_ERR_IO: return "i/o error";
    case COC_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void coc_string_free(char* s) { std::free(s); }

coc_status coc_instance_parse(const char* text, coc_instance** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{coc::parse_instance(text)}; });
}

coc_status coc_instance_read(const char* path, coc_instance** out) {
  if (!path || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{coc::read_instance_file(path)}; });
}

coc_status coc_instance_write(const coc_instance* inst, char** out_text) {
  if (!inst || !out_text) return null_argument();
  return guarded([&] { *out_text = dup_string(coc::write_instance(inst->value)); });
}

coc_status coc_instance_get_info(const coc_instance* inst, coc_instance_info* out) {
  if (!inst || !out) return null_argument();
  return guarded([&] {
    out->n = inst->value.n();
    out->edges = static_cast<int64_t>(inst->value.graph.m());
    out->d = inst->value.d;
    out->k = inst->value.k;
    out->modulator_size = static_cast<int>(inst->value.modulator.size());
  });
}

coc_status coc_instance_set_k(coc_instance* inst, int64_t k) {
  if (!inst) return null_argument();
  inst->value.k = k;
  return COC_OK;
}

void coc_instance_free(coc_instance* inst) { delete inst; }

coc_status coc_annotated_parse(const char* text, coc_annotated** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new coc_annotated{coc::parse_annotated_instance(text)}; });
}

coc_status coc_annotated_read(const char* path, coc_annotated** out) {
  if (!path || !out) return null_argument();
  return guarded([&] { *out = new coc_annotated{coc::read_annotated_instance_file(path)}; });
}

coc_status coc_annotated_write(const coc_annotated* inst, char** out_text) {
  if (!inst || !out_text) return null_argument();
  return guarded([&] { *out_text = dup_string(coc::write_annotated_instance(inst->value)); });
}

void coc_annotated_free(coc_annotated* inst) { delete inst; }

coc_status coc_solve(const coc_instance* inst, coc_solve_method method, int max_brute_n, coc_solve_result* out,
                     char** witness_text) {
  if (!inst || !out) return null_argument();
  return guarded([&] {
    const coc::Instance& in = inst->value;
    coc_solve_result res{};
    coc::VertexSet witness;
    int cap = max_brute_n > 0 ? max_brute_n : coc::kBruteForceLimit;
    switch (method) {
      case COC_SOLVE_BRUTE: {
        auto sol = coc::opt_brute(in.graph, in.d, cap);
        res.has_opt = 1;
        res.opt = sol.size();
        res.yes = sol.size() <= in.k;
        if (res.yes) witness = sol.vertices;
        break;
      }
      case COC_SOLVE_CATERPILLAR: {
        auto cs = coc::recognize_caterpillar_forest(in.graph, {});
        auto packing = coc::solution_tight_packing(cs, in.d);
        res.has_opt = 1;
        res.opt = static_cast<int64_t>(packing.size());
        res.yes = res.opt <= in.k;
        // The rightmost spine vertex of every packed graph forms an optimal solution.
        if (res.yes)
          for (const auto& p : packing.flat())
            witness.push_back(cs.component(p.component).spine[static_cast<std::size_t>(p.last)]);
        witness = coc::normalized(std::move(witness));
        break;
      }
      case COC_SOLVE_BRANCH_VC: {
        auto br = coc::solve_vc_branching(in);
        res.yes = br.yes;
        res.colorings = br.colorings_tried;
        witness = br.witness;
        break;
      }
      default:
        throw coc::Error(coc::Errc::invalid_argument, "unknown solve method");
    }
    if (witness_text) *witness_text = dup_string(join(witness));
    *out = res;
  });
}

coc_status coc_solve_annotated(const coc_annotated* inst, coc_solve_result* out) {
  if (!inst || !out) return null_argument();
  return guarded([&] {
    coc_solve_result res{};
    res.yes = coc::acoc_brute(inst->value);
    *out = res;
  });
}

coc_status coc_kernelize(const coc_instance* inst, const coc_kernel_options* options, coc_kernel_result** out) {
  if (!inst || !out) return null_argument();
  return guarded([&] {
    coc::KernelOptions opts;
    bool deg2 = false;
    if (options) {
      switch (options->rules) {
        case COC_RULES_ALL: opts.rules = coc::RuleSet::all; break;
        case COC_RULES_1: opts.rules = coc::RuleSet::rule1; break;
        case COC_RULES_2: opts.rules = coc::RuleSet::rule2; break;
        default: throw coc::Error(coc::Errc::invalid_argument, "unknown rule selection");
      }
      deg2 = options->deg2 != 0;
    }
    auto report = deg2 ? coc::kernelize_deg2(inst->value, opts) : coc::kernelize_pw1(inst->value, opts);
    *out = new coc_kernel_result{std::move(report)};
  });
}

coc_outcome coc_kernel_outcome(const coc_kernel_result* result) {
  if (!result) return COC_REDUCED;
  switch (result->value.outcome) {
    case coc::Outcome::trivial_yes: return COC_TRIVIAL_YES;
    case coc::Outcome::trivial_no: return COC_TRIVIAL_NO;
    case coc::Outcome::reduced: return COC_REDUCED;
  }
  return COC_REDUCED;
}

coc_status coc_kernel_instance(const coc_kernel_result* result, coc_instance** out) {
  if (!result || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{result->value.instance}; });
}

coc_status coc_kernel_report(const coc_kernel_result* result, int with_trace, char** out_text) {
  if (!result || !out_text) return null_argument();
  return guarded([&] { *out_text = dup_string(coc::format_report(result->value, with_trace != 0)); });
}

void coc_kernel_result_free(coc_kernel_result* result) { delete result; }

coc_status coc_essence_decompose(int d, const int* table, size_t len, char** out_list, int* out_length,
                                 int* out_verified) {
  if (!out_list) return null_argument();
  return guarded([&] {
    auto f = table_fn(d, table, len);
    auto parts = coc::decompose(f);
    std::string list;
    for (std::size_t i = 0; i < parts.size(); ++i) list += (i ? " " : "") + coc::to_string(parts[i]);
    if (out_length) *out_length = static_cast<int>(parts.size());
    if (out_verified) *out_verified = coc::compose_in_order(parts, d) == f;
    *out_list = dup_string(list);
  });
}

coc_status coc_essence_compute(const coc_instance* inst, int component, const int* spine, size_t spine_len,
                               int* out_table, size_t out_len) {
  if (!inst || !out_table) return null_argument();
  return guarded([&] {
    const coc::Instance& in = inst->value;
    if (out_len < static_cast<size_t>(in.d) + 2) throw coc::Error(coc::Errc::invalid_argument, "output table too short");
    auto mask = in.modulator_mask();
    std::vector<char> alive(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) alive[i] = !mask[i];
    auto comps = coc::components(in.graph, alive);
    if (component < 0 || component >= static_cast<int>(comps.size()))
      throw coc::Error(coc::Errc::invalid_argument, "no component " + std::to_string(component));
    const auto& vs = comps[static_cast<std::size_t>(component)];
    coc::Caterpillar c =
        spine ? coc::caterpillar_with_spine(in.graph, vs, std::span<const int>(spine, spine_len), component)
              : coc::recognize_caterpillar(in.graph, vs, component);
    auto gamma = coc::essence(c, in.d);
    for (int x = 0; x <= in.d + 1; ++x) out_table[x] = gamma(x);
  });
}

coc_status coc_essence_synthesize(int d, const int* table, size_t len, coc_instance** out, char** out_spine) {
  if (!out) return null_argument();
  return guarded([&] {
    auto f = table_fn(d, table, len);
    coc::Caterpillar c = coc::synthesize(f);
    coc::Instance inst;
    inst.graph = coc::caterpillar_graph(c);
    inst.d = d;
    inst.k = static_cast<int64_t>(coc::pack_caterpillar(c, d).size());
    if (out_spine) *out_spine = dup_string(join(c.spine));
    *out = new coc_instance{std::move(inst)};
  });
}

coc_status coc_essence_pack(const coc_instance* inst, int alpha, char** out_text) {
  if (!inst || !out_text) return null_argument();
  return guarded([&] {
    const coc::Instance& in = inst->value;
    auto cs = coc::recognize_caterpillar_forest(in.graph, in.modulator);
    auto packing = coc::solution_tight_packing(cs, in.d);
    if (alpha != 1) packing = coc::merged_packing(packing, alpha);
    std::ostringstream text;
    text << "# alpha " << alpha << " size " << packing.size() << "\n";
    for (const auto& p : packing.flat())
      text << "graph " << p.component << " [" << p.first << "," << p.last << "] units " << p.units << " : "
           << join(p.vertices) << "\n";
    for (const auto& comp : packing.leftover)
      for (const auto& p : comp)
        text << "leftover " << p.component << " [" << p.first << "," << p.last << "] : " << join(p.vertices) << "\n";
    *out_text = dup_string(text.str());
  });
}

void coc_random_profile_default(coc_random_profile* out) {
  if (!out) return;
  coc::RandomProfile p;
  *out = coc_random_profile{p.d,
                            p.modulator_size,
                            p.components,
                            p.spine_min,
                            p.spine_max,
                            p.max_pendants,
                            p.pendant_density,
                            p.modulator_edge_prob,
                            p.modulator_inner_prob,
                            p.k_policy == coc::KPolicy::fixed,
                            p.k_min,
                            p.k_max,
                            p.shuffle};
}

coc_status coc_gen_random(const coc_random_profile* profile, uint64_t seed, coc_instance** out) {
  if (!profile || !out) return null_argument();
  return guarded([&] {
    coc::RandomProfile p;
    p.d = profile->d;
    p.modulator_size = profile->modulator_size;
    p.components = profile->components;
    p.spine_min = profile->spine_min;
    p.spine_max = profile->spine_max;
    p.max_pendants = profile->max_pendants;
    p.pendant_density = profile->pendant_density;
    p.modulator_edge_prob = profile->modulator_edge_prob;
    p.modulator_inner_prob = profile->modulator_inner_prob;
    p.k_policy = profile->k_fixed ? coc::KPolicy::fixed : coc::KPolicy::uniform;
    p.k_min = profile->k_min;
    p.k_max = profile->k_max;
    p.shuffle = profile->shuffle != 0;
    *out = new coc_instance{coc::gen_random(p, seed)};
  });
}

coc_status coc_gen_vc2coc(const coc_instance* vc, int d, coc_instance** out) {
  if (!vc || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{coc::gen_vc_to_dcoc({vc->value.graph, vc->value.k}, d)}; });
}

coc_status coc_gen_umrss2coc(const char* umrss_text, coc_instance** out) {
  if (!umrss_text || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{coc::gen_umrss_to_coc(coc::parse_umrss(umrss_text)).instance}; });
}

coc_status coc_gen_xsc2acoc(const char* xsc_text, coc_annotated** out) {
  if (!xsc_text || !out) return null_argument();
  return guarded([&] { *out = new coc_annotated{coc::gen_xsc_to_acoc(coc::parse_xsc(xsc_text))}; });
}

coc_status coc_gen_acoc2coc(const coc_annotated* inst, coc_instance** out) {
  if (!inst || !out) return null_argument();
  return guarded([&] { *out = new coc_instance{coc::gen_acoc_to_coc(inst->value)}; });
}

coc_status coc_umrss_brute(const char* umrss_text, int* out_yes) {
  if (!umrss_text || !out_yes) return null_argument();
  return guarded([&] { *out_yes = coc::umrss_brute(coc::parse_umrss(umrss_text)); });
}

coc_status coc_xsc_brute(const char* xsc_text, int* out_yes) {
  if (!xsc_text || !out_yes) return null_argument();
  return guarded([&] { *out_yes = coc::xsc_brute(coc::parse_xsc(xsc_text)); });
}

}  // extern "C"
