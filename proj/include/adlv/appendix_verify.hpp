#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adlv/folding.hpp"

namespace adlv {

// <mu|_{J}, a_j>: pairing of the projection of mu onto the span of the
// simple coroots in J (taken component by component) with the j-th simple root.
Rational levi_part_pairing(const RootDatum& d, const Coweight& mu, SimpleSubset J, int j);

// ---------------------------------------------------------------------------
// The "seq" lemma: a simple root alpha pairing >= 0 with mu, a simple root
// beta pairing to -1, the geodesic between them nonnegative. If mu + alpha^
// is not weakly dominant, the interior of the geodesic sums to at most one and
// one of three explicit coweights is weakly dominant.

struct SeqConfig {
  SimpleSubset J_nu, J;
  Coweight mu;
  int alpha = -1, beta = -1;
};

// Independent hypothesis check (uses short_datum, not the generator's bounds).
bool seq_hypotheses_hold(const RootDatum& d, const SeqConfig& c);

struct SeqEnumStats {
  long fibers = 0;           // (J_nu, mu|_{J_nu}, alpha, beta) with a nonempty fiber
  long emitted = 0;
  long non_principal = 0;    // fibers whose coordinatewise bound is not itself valid
};
// Types A and D: every config with free coordinates in [bound, bound + kmax].
// Types E: the minimal config of each fiber only.
std::vector<SeqConfig> enumerate_seq_configs(const RootDatum& d, int kmax, SeqEnumStats* stats = nullptr);
// All configs in the closed box [lo, hi]^n, by brute force and the validator.
std::vector<SeqConfig> brute_seq_configs(const RootDatum& d, int lo, int hi);

enum class SeqCase { Vacuous, Case1, Case2, Case3, Violation };
const char* to_string(SeqCase c);
struct SeqVerdict {
  SeqCase tag = SeqCase::Violation;
  int interior_sum = 0;
  Coweight conclusion;  // the coweight shown weakly dominant
  std::string reason;
};
SeqVerdict verify_seq(const RootDatum& d, const SeqConfig& c);

// Random lifts mu + sum k_j omega_j (free j, k_j <= kmax) of a fiber-minimal
// config: each must satisfy the hypotheses and keep the lifted conclusion.
struct SeqLiftReport {
  int checked = 0;
  int failures = 0;
};
SeqLiftReport seq_lift_check(const RootDatum& d, const SeqConfig& c, std::mt19937& rng, int count,
                             int kmax = 3);

struct SeqSweep {
  std::string type;
  long configs = 0;
  long counts[5] = {0, 0, 0, 0, 0};  // indexed by SeqCase
  long lifts = 0, lift_failures = 0;
  SeqEnumStats stats;
  std::vector<std::string> violations;  // first few, formatted
  bool pattern2_seen = false, pattern3_seen = false;
  double seconds = 0;
  bool ok() const { return counts[4] == 0 && lift_failures == 0; }
};
SeqSweep sweep_seq(const RootDatum& d, int kmax, int lifts_per_fiber = 0);

// ---------------------------------------------------------------------------
// The "empty" lemma in its reduced form: J = S - {beta}, mu noncentral on each
// component of J, <mu, beta> = -1 and the antidominant root over 2 beta pairs
// to zero with mu. No D passes all five conditions.

struct EmptyConfig {
  SimpleSubset J;
  Coweight mu;
  int beta = -1;
  Root theta2;  // J-antidominant, J-minuscule root in 2 beta + Z Phi_J
};
// With relaxed set, the conditions on the root over 2 beta are dropped
// (theta2 is then zero when no such root exists).
std::vector<EmptyConfig> enumerate_empty_configs(const RootDatum& d, bool relaxed = false);

struct EmptyResult {
  int candidates = 0;  // Xi_1^+ roots over beta
  int filtered = 0;    // those meeting (1') and (3')
  long antichains = 0;
  std::optional<std::vector<Root>> counterexample;
};
EmptyResult verify_empty(const RootDatum& d, const EmptyConfig& c, long cap = 5'000'000);

struct EmptySweep {
  std::string type;
  long configs = 0, candidates = 0, filtered = 0, antichains = 0, counterexamples = 0;
  double seconds = 0;
  bool ok() const { return counterexamples == 0; }
};
EmptySweep sweep_empty(const RootDatum& d, bool relaxed = false);

// ---------------------------------------------------------------------------
// Folded data: case analysis of the chosen alpha, and the "zeta" lemma.

struct FoldedConfig {
  ShortDatum sd;      // folded
  Coweight lambda;    // folded
  FiniteWeylElement z;  // ambient, iota-fixed, minimal, not 1
};
std::vector<FoldedConfig> enumerate_folded_configs(const FoldingDatum& fd, int lo, int hi, int cmax);

struct O1Verdict {
  int tag = 0;  // 1..4, or 0 for a violation
  int alpha = -1;
  bool interior_positive = true;  // z(delta_i) > 0 strictly inside the geodesic
  bool folded_agrees = true;      // the dominance checks agree in the folded datum
};
// One verdict per admissible choice of alpha (ties in <mu, .> are all tried).
std::vector<O1Verdict> verify_o1(const FoldingDatum& fd, const FoldedConfig& c);

struct ZetaVerdict {
  bool applies = false;
  bool clause1 = false, clause2 = false;
  // The component of J' + {zeta_J'} containing zeta_J': never of type A under
  // the hypotheses, and iota moves one of its nodes.
  bool type_a = false, acts_nontrivially = false;
  bool violation() const { return applies && ((clause1 && clause2) || type_a || !acts_nontrivially); }
};
ZetaVerdict verify_zeta(const FoldingDatum& fd, const FoldedConfig& c, const Root& zeta);

struct SuiteReport {
  std::string name;
  long instances = 0;
  long violations = 0;
  std::string note;
  double seconds = 0;
  bool ok() const { return violations == 0 && instances > 0; }
};
// o1, zeta, wedge (o2), selector (o3), decomposition (o0) and the chain lemma
// (o5) over one fold.
std::vector<SuiteReport> folded_sweeps(const FoldingDatum& fd, int cmax);

// ---------------------------------------------------------------------------
// Supporting predicates on (c), the D-sets of a coweight.

struct CriterionResult {
  bool applies = false;  // (c) holds and the type condition is met
  bool weakly_dominant = false;
};
CriterionResult check_criterion(const RootDatum& d, const Coweight& chi);

// (c) for chi and (alpha, alpha') meeting D^+ for every alpha' in D^- imply
// (c) for chi + alpha-check. This holds in type A and in type D when neither
// of the last two nodes is in D^-; it fails in general at a trivalent node.
struct PlusSimpleResult {
  bool applies = false;
  bool in_scope = false;  // type A, or type D with the last two nodes outside D^-
  bool conclusion = false;
};
PlusSimpleResult check_plus_simple(const RootDatum& d, const Coweight& chi, int alpha);

struct PlusResult {
  bool bound_ok = true;
  int geodesic_checked = 0;
  bool geodesic_ok = true;
};
// Requires <mu, alpha'> = -1 and alpha' outside J.
PlusResult verify_plus(const RootDatum& d, const ShortDatum& sd, int alpha_prime);

// Property suites for the supporting lemmas, each on at least min_instances
// generated instances where the space allows.
std::vector<SuiteReport> lemma_suites(int min_instances = 100);

}  // namespace adlv
