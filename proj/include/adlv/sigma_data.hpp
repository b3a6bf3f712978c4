#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/admissible.hpp"

namespace adlv {

// A sigma-conjugacy class represented by its short element
// wtilde = t^mu w_K w_J in Omega_{J_nu}.
struct ShortDatum {
  ExtAffineElement wtilde;
  Coweight mu;
  RationalCoweight nu;
  SimpleSubset J_nu;
  SimpleSubset J;  // components of J_nu on which mu is noncentral
  SimpleSubset K;  // stabiliser of mu in J
  FiniteWeylElement w;
  FiniteWeylElement wJ, wK;
};

// Builds t^mu w_K w_J for a J_nu-dominant, J_nu-minuscule mu; empty unless the
// result is short with Levi exactly J_nu.
std::optional<ShortDatum> short_datum(const RootDatum& d, SimpleSubset J_nu, const Coweight& mu);
bool is_short(const RootDatum& d, const ExtAffineElement& x);

struct ShortResult {
  ShortDatum sd;
  FiniteWeylElement z;  // x = z wtilde z^{-1}, z minimal in its W_{J_nu} coset
};
ShortResult short_from_straight(const RootDatum& d, const ExtAffineElement& x);

// Every short datum whose mu has simple pairings in [lo, hi].
std::vector<ShortDatum> short_data(const RootDatum& d, int lo, int hi);

enum class HNTag { Irreducible, CentralTranslation, NotComparable };
struct HNClass {
  HNTag tag;
  std::string reason;
  int failing_coefficient = -1;
};
const char* to_string(HNTag t);
HNClass hn_classify(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd);

// (sigma - 1)^{-1}(eta(t^lambda) - eta(b)) for split groups: all of pi_1.
std::vector<std::vector<int>> pi0_prediction(const RootDatum& d, const Coweight& lambda,
                                             const ShortDatum& sd);
std::vector<std::vector<int>> pi1_elements(const RootDatum& d);

std::vector<Root> c_set(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd);
// The coroots of c_set span Z(coroots) / Z(coroots of J).
bool span_check(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd);

struct TeqReport {
  ExtAffineElement s;
  bool adm_w = false, adm_sw = false, adm_ws = false, adm_sws = false;
  bool simply_laced_pair = false;
  bool bound_holds = false;  // <mu, w_J(a)> >= 2 whenever w_J(a) + w_K(a) is a root
  bool ok() const { return adm_w && adm_sw && adm_ws && adm_sws && simply_laced_pair && bound_holds; }
};
TeqReport teq_elements(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                       const Root& alpha);

// Roots of the rank <= 2 subsystem (Z a + Z b) cap Phi.
std::vector<Root> rank_two_roots(const RootDatum& d, const Root& a, const Root& b);

struct HNInstance {
  Coweight lambda;
  ShortDatum sd;
};
// Hodge-Newton irreducible pairs with mu pairings in [lo, hi] and the coroot
// coefficients of lambda - mu in [-cmax, cmax].
std::vector<HNInstance> hn_instances(const RootDatum& d, int lo, int hi, int cmax);

}  // namespace adlv
