#ifndef COC_HARDNESS_HPP
#define COC_HARDNESS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coc/instance.hpp"

namespace coc {

struct VCInstance {
  Graph graph;
  std::int64_t k = 0;
};

struct UMRSSInstance {
  int k = 0;                              // dimension
  std::vector<std::vector<int>> vectors;  // S, each of length k, entries >= 0
  std::vector<int> target;                // t, length k
  int budget = 0;                         // k', selection budget
};

struct XSCInstance {
  int universe = 0;                     // elements 0..n-1
  std::vector<std::vector<int>> family; // sorted sets, all of size t
  int k = 0;
};

/// Line formats, '#' comments allowed:
///   UMRSS: `u <k> <k'>`, then `t <k entries>`, then one `s <k entries>` per vector.
///   XSC:   `x <n> <k>`, then one `f <elements>` per set (0-based elements).
UMRSSInstance parse_umrss(std::string_view text);
std::string write_umrss(const UMRSSInstance& u);
XSCInstance parse_xsc(std::string_view text);
std::string write_xsc(const XSCInstance& x);

/// Subdivides every edge into u, u_e, v_e, v and hangs a (d-1)-vertex path on
/// u_e and on v_e; k' = k + |E|. M is the input vertex set.
Instance gen_vc_to_dcoc(const VCInstance& vc, int d);

struct UMRSSReduction {
  Instance instance;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;  // copies per vector
};

/// Modulator to a caterpillar forest of size k(k'+1). Vertex order: u_i^j
/// (row-major), the gamma copies of each vector, the stars, then pendants.
UMRSSReduction gen_umrss_to_coc(const UMRSSInstance& u);

/// Annotated instance with M = all universe copies (a vertex cover). When
/// k != n/t the constant no-instance (K2 in M, d = 1, k = 0) is returned.
AnnotatedInstance gen_xsc_to_acoc(const XSCInstance& x);

/// One gadget a_u - a_v with d-1 pendants each per annotation; k' = k + |A|.
Instance gen_acoc_to_coc(const AnnotatedInstance& a);

enum class KPolicy { fixed, uniform };

struct RandomProfile {
  int d = 2;
  int modulator_size = 2;
  int components = 3;
  int spine_min = 1;
  int spine_max = 4;
  int max_pendants = 2;
  double pendant_density = 0.3;       // per pendant slot
  double modulator_edge_prob = 0.3;   // modulator to forest
  double modulator_inner_prob = 0.3;  // inside the modulator
  KPolicy k_policy = KPolicy::uniform;
  std::int64_t k_min = 0;
  std::int64_t k_max = 6;
  bool shuffle = true;
};

/// Random instance whose G - M is a caterpillar forest. Deterministic in the
/// profile and seed.
Instance gen_random(const RandomProfile& profile, std::uint64_t seed);

// Brute-force oracles for the source problems.
bool vc_brute(const VCInstance& vc);
bool umrss_brute(const UMRSSInstance& u);
bool xsc_brute(const XSCInstance& x);
/// Some d-coc set of size <= k hits every annotation. n <= 24.
bool acoc_brute(const AnnotatedInstance& a);

}  // namespace coc

#endif
