#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/sigma_data.hpp"

namespace adlv {

// Permissibility of alpha for z wtilde z^{-1}: alpha is permissible iff one of
// the four conditions below fails.
//  (1) <mu', a> = <mu', w'(a)> = 0
//  (2) w'(a) < 0 and w'^{-1}(a) < 0
//  (3) a + w'(a) and a + w'^{-1}(a) are positive roots
//  (4) <a-check, w'(a)> = -1
// with t^{mu'} w' = z wtilde z^{-1}.
struct Permissibility {
  bool permissible = false;
  int failing = 0;  // first failing condition, 0 if all hold
};
Permissibility is_permissible(const RootDatum& d, const ShortDatum& sd, const FiniteWeylElement& z,
                              const Root& alpha);
// Both sides of an edge agree on permissibility; throws unless z, s_a z are minimal.
bool permissibility_symmetry_check(const RootDatum& d, const ShortDatum& sd,
                                   const FiniteWeylElement& z, const Root& alpha);

enum class AdmEvidence { Oracle, DominanceBound };

struct EdgeCertificate {
  FiniteWeylElement from, to;  // to = s_gamma from
  Root gamma;
  bool adm_right = false;  // z wtilde z^{-1} s_gamma in Adm
  bool adm_left = false;   // s_gamma z wtilde z^{-1} in Adm
  AdmEvidence evidence = AdmEvidence::Oracle;
  Permissibility perm;
  bool valid() const { return adm_right && adm_left && perm.permissible; }
};

// Certificate for z <-> s_gamma z using the membership oracle.
EdgeCertificate certify_edge(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                             const FiniteWeylElement& z, const Root& gamma);
// Same, with memberships justified by mu + (gamma')_J-check <= lambda in the
// dominance order, where s_gamma z = z s_gamma'. Used where orbit scans are too large.
EdgeCertificate certify_edge_by_bound(const RootDatum& d, const Coweight& lambda,
                                      const ShortDatum& sd, const FiniteWeylElement& z,
                                      const Root& gamma);
std::optional<EdgeCertificate> edge(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                                    const FiniteWeylElement& z, const Root& gamma);

class ConnectivityGraph {
 public:
  struct Edge {
    int a, b;
    int root;  // index of gamma in the positive roots
    EdgeCertificate cert;
  };

  ConnectivityGraph(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd);

  const std::vector<FiniteWeylElement>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbours as (vertex, edge index), sorted by vertex.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
  int index_of(const FiniteWeylElement& z) const;
  // Number of (z, alpha) pairs on which the two-sided permissibility test was run,
  // and how many disagreed.
  int symmetry_checked() const { return sym_checked_; }
  int symmetry_failures() const { return sym_failed_; }
  const ShortDatum& datum() const { return sd_; }
  const RootDatum& root_datum() const { return *d_; }
  // Shortest path of edge indices from a to b (empty if a == b), or nullopt.
  std::optional<std::vector<int>> path(int a, int b) const;

 private:
  const RootDatum* d_;
  ShortDatum sd_;
  std::vector<FiniteWeylElement> verts_;
  std::unordered_map<FiniteWeylElement, int, FiniteWeylHash> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  int sym_checked_ = 0, sym_failed_ = 0;
};

struct HypReport {
  bool connected = false;
  // For each vertex, the edge indices of a path from the identity.
  std::vector<std::vector<int>> witness;
  std::vector<int> unreached;
};
HypReport verify_hyp_prime(const ConnectivityGraph& g);

struct Descent {
  Root gamma;
  std::vector<int> path;  // edge indices from z to z s_gamma
};
// gamma with z s_gamma < z, z s_gamma minimal in its coset, and z <-> z s_gamma.
std::optional<Descent> find_descent(const ConnectivityGraph& g, int z);

struct XiSets {
  std::vector<Root> xi1;  // a outside Phi_J with <mu, a_J> = -1
  std::vector<Root> xi;   // a with mu + (a_J)-check <= lambda (dominance order)
  bool contained = true;  // xi1 subset of xi
};
XiSets xi_sets(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd);

// Explicit chain from z to z s_gamma in the simply laced case.
struct ChainDossier {
  std::string branch;  // "single" when a descent edge exists directly, "ladder" otherwise
  int seq_case = 0;    // which sequence case produced theta (ladder only)
  int alpha = -1, beta = -1;
  std::vector<int> geodesic;  // beta = delta_1, ..., delta_m = alpha
  std::vector<int> eta;       // simple root indices eta_1 .. eta_n
  int i0 = 0;
  Root theta, delta, gamma;
  std::vector<FiniteWeylElement> z_chain;  // z_0 .. z_{i0}, then z'_{i0} .. z'_0
  std::vector<EdgeCertificate> edges;
  std::vector<std::string> failures;  // lemma checks that did not hold
  bool ok() const { return failures.empty(); }
};
// adm may be null, in which case memberships are certified by the dominance bound.
ChainDossier simply_laced_chain(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd,
                                const FiniteWeylElement& z, const AdmOracle* adm);

// W_J-orbit of a root.
std::vector<Root> levi_orbit(const RootDatum& d, const Root& a, SimpleSubset J);

}  // namespace adlv
