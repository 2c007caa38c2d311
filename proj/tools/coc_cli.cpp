// Command-line front end. Talks to the library only through coc.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct Failure {
  coc_status status;
  std::string context;
};

void check(coc_status s, const std::string& context) {
  if (s != COC_OK) throw Failure{s, context + ": " + coc_last_error()};
}

struct InstanceDeleter {
  void operator()(coc_instance* p) const { coc_instance_free(p); }
};
struct AnnotatedDeleter {
  void operator()(coc_annotated* p) const { coc_annotated_free(p); }
};
struct ResultDeleter {
  void operator()(coc_kernel_result* p) const { coc_kernel_result_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { coc_string_free(p); }
};
using InstancePtr = std::unique_ptr<coc_instance, InstanceDeleter>;
using AnnotatedPtr = std::unique_ptr<coc_annotated, AnnotatedDeleter>;
using ResultPtr = std::unique_ptr<coc_kernel_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{COC_ERR_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{COC_ERR_IO, "cannot write '" + path + "'"};
  out << text;
}

InstancePtr load(const std::string& path) {
  coc_instance* raw = nullptr;
  check(coc_instance_parse(read_text(path).c_str(), &raw), path);
  return InstancePtr(raw);
}

AnnotatedPtr load_annotated(const std::string& path) {
  coc_annotated* raw = nullptr;
  check(coc_annotated_parse(read_text(path).c_str(), &raw), path);
  return AnnotatedPtr(raw);
}

std::string text_of(const coc_instance* inst) {
  char* raw = nullptr;
  check(coc_instance_write(inst, &raw), "write");
  StringPtr s(raw);
  return s.get();
}

std::vector<int> parse_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "bad integer '" + item + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

// "# spine a b c" in an instance file fixes the spine order of a synthesized caterpillar.
std::optional<std::vector<int>> spine_comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# spine", 0) != 0) continue;
    std::istringstream rest(line.substr(7));
    std::vector<int> spine;
    int v;
    while (rest >> v) spine.push_back(v);
    return spine;
  }
  return std::nullopt;
}

struct SolveAnswer {
  bool yes = false;
  coc_solve_result raw{};
  std::string witness;
};

SolveAnswer solve(const coc_instance* inst, coc_solve_method method, int max_n) {
  SolveAnswer a;
  char* w = nullptr;
  check(coc_solve(inst, method, max_n, &a.raw, &w), "solve");
  StringPtr hold(w);
  a.yes = a.raw.yes != 0;
  a.witness = w ? w : "";
  return a;
}

bool kernel_answer(const coc_kernel_result* r, int max_n) {
  switch (coc_kernel_outcome(r)) {
    case COC_TRIVIAL_YES: return true;
    case COC_TRIVIAL_NO: return false;
    case COC_REDUCED: break;
  }
  coc_instance* raw = nullptr;
  check(coc_kernel_instance(r, &raw), "kernel");
  InstancePtr out(raw);
  return solve(out.get(), COC_SOLVE_BRUTE, max_n).yes;
}

coc_solve_method method_of(const std::string& name) {
  if (name == "brute") return COC_SOLVE_BRUTE;
  if (name == "caterpillar") return COC_SOLVE_CATERPILLAR;
  return COC_SOLVE_BRANCH_VC;
}

int decision(bool yes, bool exit_code) {
  std::cout << (yes ? "YES" : "NO") << "\n";
  return !yes && exit_code ? kExitNo : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Component order connectivity: kernelization, exact solvers, essence tools, generators"};
  app.require_subcommand(1);
  bool exit_code = false;
  int max_brute_n = 0;
  app.add_flag("--exit-code", exit_code, "Exit with status 1 when a decision verb answers NO");
  app.add_option("--max-brute-n", max_brute_n, "Raise the brute-force vertex cap (default 24)")->check(CLI::Range(1, 62));

  // kernelize
  auto* kern = app.add_subcommand("kernelize", "Kernelize an instance");
  std::string k_in, k_out, k_report, k_rule = "all";
  bool k_deg2 = false, k_trace = false;
  kern->add_option("input", k_in, "Input instance")->required();
  kern->add_option("-o,--output", k_out, "Output instance (stdout if omitted)");
  kern->add_option("--report", k_report, "Write the key: value report here");
  kern->add_option("--rule", k_rule, "Rules to run")->check(CLI::IsMember({"1", "2", "all"}));
  kern->add_flag("--deg2", k_deg2, "Modulator to cycles and caterpillars");
  kern->add_flag("--trace", k_trace, "Include per-step provenance in the report");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance exactly");
  std::string s_in, s_method = "brute";
  std::optional<long long> s_k;
  bool s_annotated = false, s_witness = false;
  solve_cmd->add_option("input", s_in, "Input instance")->required();
  solve_cmd->add_option("--method", s_method, "Solver")->check(CLI::IsMember({"brute", "caterpillar", "branch-vc"}));
  solve_cmd->add_option("--k", s_k, "Override the budget");
  solve_cmd->add_flag("--annotated", s_annotated, "Input carries annotations (brute force only)");
  solve_cmd->add_flag("--witness", s_witness, "Print the solution on standard error");

  // essence
  auto* ess = app.add_subcommand("essence", "Essence monoid tools");
  ess->require_subcommand(1);
  int e_d = 0;
  std::string e_table, e_in, e_out, e_spine;
  int e_component = 0, e_alpha = 1;
  auto* dec = ess->add_subcommand("decompose", "Decompose a monoid element into basic functions");
  dec->add_option("--d", e_d, "Size bound")->required()->check(CLI::PositiveNumber);
  dec->add_option("--table", e_table, "Values at 0..d+1, comma separated")->required();
  auto* comp = ess->add_subcommand("compute", "Essence of one component of G - M");
  comp->add_option("input", e_in, "Instance")->required();
  comp->add_option("--component", e_component, "Component index (by smallest vertex)");
  comp->add_option("--spine", e_spine, "Spine order, comma separated");
  auto* syn = ess->add_subcommand("synth", "Caterpillar with a given essence");
  syn->add_option("--d", e_d, "Size bound")->required()->check(CLI::PositiveNumber);
  syn->add_option("--table", e_table, "Values at 0..d+1, comma separated")->required();
  syn->add_option("-o,--output", e_out, "Output instance");
  auto* pack = ess->add_subcommand("pack", "Dump the solution-tight or merged packing");
  pack->add_option("input", e_in, "Instance")->required();
  pack->add_option("--alpha", e_alpha, "Merge factor")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  std::string g_in, g_out;
  int g_d = 2;
  std::uint64_t g_seed = 0;
  coc_random_profile profile;
  coc_random_profile_default(&profile);
  std::optional<long long> g_k;
  auto* grand = gen->add_subcommand("random", "Random caterpillar-forest modulator instance");
  grand->add_option("--seed", g_seed, "PRNG seed")->required();
  grand->add_option("--d", profile.d, "Size bound")->check(CLI::PositiveNumber);
  grand->add_option("--modulator", profile.modulator_size, "Modulator size");
  grand->add_option("--components", profile.components, "Number of caterpillars");
  grand->add_option("--spine-min", profile.spine_min, "Shortest spine");
  grand->add_option("--spine-max", profile.spine_max, "Longest spine");
  grand->add_option("--max-pendants", profile.max_pendants, "Pendant slots per spine vertex");
  grand->add_option("--pendant-density", profile.pendant_density, "Probability per pendant slot");
  grand->add_option("--edge-prob", profile.modulator_edge_prob, "Modulator-to-forest edge probability");
  grand->add_option("--inner-prob", profile.modulator_inner_prob, "Edge probability inside the modulator");
  grand->add_option("--k", g_k, "Fixed budget");
  grand->add_option("--k-min", profile.k_min, "Smallest random budget");
  grand->add_option("--k-max", profile.k_max, "Largest random budget");
  grand->add_option("-o,--output", g_out, "Output instance");
  auto* gvc = gen->add_subcommand("vc2coc", "Vertex cover to d-COC with maximum degree preserved");
  gvc->add_option("input", g_in, "Vertex cover instance (graph and k)")->required();
  gvc->add_option("--d", g_d, "Size bound")->check(CLI::PositiveNumber);
  gvc->add_option("-o,--output", g_out, "Output instance");
  auto* gum = gen->add_subcommand("umrss2coc", "Relaxed multidimensional subset sum to COC");
  gum->add_option("input", g_in, "UMRSS file")->required();
  gum->add_option("-o,--output", g_out, "Output instance");
  auto* gxs = gen->add_subcommand("xsc2acoc", "Exact set cover to annotated COC");
  gxs->add_option("input", g_in, "XSC file")->required();
  gxs->add_option("-o,--output", g_out, "Output annotated instance");
  auto* gac = gen->add_subcommand("acoc2coc", "Annotated COC to COC");
  gac->add_option("input", g_in, "Annotated instance")->required();
  gac->add_option("-o,--output", g_out, "Output instance");

  // verify
  auto* ver = app.add_subcommand("verify", "Check kernel equivalence");
  std::string v_kernel, v_against, v_oracle = "brute";
  int v_suite = 0, v_d_max = 3, v_m_max = 4;
  std::optional<std::uint64_t> v_seed;
  ver->add_option("--kernel", v_kernel, "Kernelized instance");
  ver->add_option("--against", v_against, "Original instance");
  ver->add_option("--oracle", v_oracle, "Oracle")->check(CLI::IsMember({"brute"}));
  ver->add_option("--suite", v_suite, "Run this many random kernelizations instead")->check(CLI::PositiveNumber);
  ver->add_option("--seed", v_seed, "Seed for --suite");
  ver->add_option("--d-max", v_d_max, "Largest d in the suite")->check(CLI::Range(1, 4));
  ver->add_option("--m-max", v_m_max, "Largest modulator in the suite")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (kern->parsed()) {
      InstancePtr in = load(k_in);
      coc_kernel_options opts{k_rule == "1" ? COC_RULES_1 : k_rule == "2" ? COC_RULES_2 : COC_RULES_ALL, k_deg2 ? 1 : 0};
      coc_kernel_result* raw = nullptr;
      check(coc_kernelize(in.get(), &opts, &raw), "kernelize");
      ResultPtr res(raw);
      coc_instance* out_raw = nullptr;
      check(coc_kernel_instance(res.get(), &out_raw), "kernelize");
      InstancePtr out(out_raw);
      emit(text_of(out.get()), k_out);
      if (!k_report.empty()) {
        char* rep = nullptr;
        check(coc_kernel_report(res.get(), k_trace, &rep), "report");
        StringPtr hold(rep);
        emit(rep, k_report);
      }
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      if (s_annotated) {
        AnnotatedPtr in = load_annotated(s_in);
        coc_solve_result r{};
        check(coc_solve_annotated(in.get(), &r), "solve");
        return decision(r.yes != 0, exit_code);
      }
      InstancePtr in = load(s_in);
      if (s_k) coc_instance_set_k(in.get(), *s_k);
      SolveAnswer a = solve(in.get(), method_of(s_method), max_brute_n);
      if (a.raw.has_opt) std::cerr << "opt: " << a.raw.opt << "\n";
      if (s_method == "branch-vc") std::cerr << "colorings: " << a.raw.colorings << "\n";
      if (s_witness) std::cerr << "witness: " << a.witness << "\n";
      return decision(a.yes, exit_code);
    }

    if (dec->parsed()) {
      auto table = parse_list(e_table);
      char* list = nullptr;
      int length = 0, verified = 0;
      check(coc_essence_decompose(e_d, table.data(), table.size(), &list, &length, &verified), "decompose");
      StringPtr hold(list);
      std::cout << list << "\n";
      std::cout << "length " << length << (verified ? " composes to " : " does not compose to ") << e_table << "\n";
      return verified ? kExitOk : kExitInput;
    }

    if (comp->parsed()) {
      std::string text = read_text(e_in);
      InstancePtr in = load(e_in);
      coc_instance_info info{};
      check(coc_instance_get_info(in.get(), &info), "info");
      std::optional<std::vector<int>> spine;
      if (!e_spine.empty())
        spine = parse_list(e_spine);
      else
        spine = spine_comment(text);
      std::vector<int> table(static_cast<std::size_t>(info.d) + 2);
      check(coc_essence_compute(in.get(), e_component, spine ? spine->data() : nullptr, spine ? spine->size() : 0,
                                table.data(), table.size()),
            "essence");
      std::cout << join(table, ",") << "\n";
      return kExitOk;
    }

    if (syn->parsed()) {
      auto table = parse_list(e_table);
      coc_instance* raw = nullptr;
      char* spine = nullptr;
      check(coc_essence_synthesize(e_d, table.data(), table.size(), &raw, &spine), "synth");
      InstancePtr out(raw);
      StringPtr hold(spine);
      emit(std::string("# spine ") + spine + "\n" + text_of(out.get()), e_out);
      return kExitOk;
    }

    if (pack->parsed()) {
      InstancePtr in = load(e_in);
      char* text = nullptr;
      check(coc_essence_pack(in.get(), e_alpha, &text), "pack");
      StringPtr hold(text);
      std::cout << text;
      return kExitOk;
    }

    if (grand->parsed()) {
      if (g_k) {
        profile.k_fixed = 1;
        profile.k_min = profile.k_max = *g_k;
      }
      coc_instance* raw = nullptr;
      check(coc_gen_random(&profile, g_seed, &raw), "gen random");
      InstancePtr out(raw);
      emit(text_of(out.get()), g_out);
      return kExitOk;
    }

    if (gvc->parsed()) {
      InstancePtr in = load(g_in);
      coc_instance* raw = nullptr;
      check(coc_gen_vc2coc(in.get(), g_d, &raw), "vc2coc");
      InstancePtr out(raw);
      emit(text_of(out.get()), g_out);
      return kExitOk;
    }

    if (gum->parsed()) {
      coc_instance* raw = nullptr;
      check(coc_gen_umrss2coc(read_text(g_in).c_str(), &raw), "umrss2coc");
      InstancePtr out(raw);
      emit(text_of(out.get()), g_out);
      return kExitOk;
    }

    if (gxs->parsed()) {
      coc_annotated* raw = nullptr;
      check(coc_gen_xsc2acoc(read_text(g_in).c_str(), &raw), "xsc2acoc");
      AnnotatedPtr out(raw);
      char* text = nullptr;
      check(coc_annotated_write(out.get(), &text), "write");
      StringPtr hold(text);
      emit(text, g_out);
      return kExitOk;
    }

    if (gac->parsed()) {
      AnnotatedPtr in = load_annotated(g_in);
      coc_instance* raw = nullptr;
      check(coc_gen_acoc2coc(in.get(), &raw), "acoc2coc");
      InstancePtr out(raw);
      emit(text_of(out.get()), g_out);
      return kExitOk;
    }

    if (ver->parsed()) {
      if (v_suite > 0) {
        if (!v_seed) {
          std::cerr << "verify --suite needs --seed\n";
          return kExitUsage;
        }
        std::mt19937_64 rng(*v_seed);
        int failures = 0;
        for (int i = 0; i < v_suite; ++i) {
          coc_random_profile p;
          coc_random_profile_default(&p);
          p.d = std::uniform_int_distribution<int>(1, v_d_max)(rng);
          p.modulator_size = std::uniform_int_distribution<int>(0, v_m_max)(rng);
          p.components = std::uniform_int_distribution<int>(1, 4)(rng);
          p.spine_max = 3;
          p.max_pendants = 1;
          p.k_min = 0;
          p.k_max = 8;
          coc_instance* raw = nullptr;
          check(coc_gen_random(&p, rng(), &raw), "gen random");
          InstancePtr inst(raw);
          coc_instance_info info{};
          check(coc_instance_get_info(inst.get(), &info), "info");
          if (info.n > 18) continue;
          coc_kernel_result* kr = nullptr;
          check(coc_kernelize(inst.get(), nullptr, &kr), "kernelize");
          ResultPtr res(kr);
          bool expect = solve(inst.get(), COC_SOLVE_BRUTE, max_brute_n).yes;
          if (kernel_answer(res.get(), max_brute_n) != expect) ++failures;
        }
        std::cerr << "suite: " << v_suite << " instances, " << failures << " mismatches\n";
        return decision(failures == 0, exit_code);
      }
      if (v_kernel.empty() || v_against.empty()) {
        std::cerr << "verify needs --kernel and --against, or --suite\n";
        return kExitUsage;
      }
      InstancePtr kernel = load(v_kernel);
      InstancePtr orig = load(v_against);
      bool a = solve(kernel.get(), COC_SOLVE_BRUTE, max_brute_n).yes;
      bool b = solve(orig.get(), COC_SOLVE_BRUTE, max_brute_n).yes;
      std::cerr << "kernel: " << (a ? "YES" : "NO") << ", original: " << (b ? "YES" : "NO") << "\n";
      return decision(a == b, exit_code);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.context << "\n";
    return kExitInput;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
