#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/connectivity.hpp"

namespace adlv {

// A simply laced datum with a diagram involution iota, and the non-simply
// laced datum it folds to. Folded simple roots are the iota-orbits of ambient
// simple roots: the fixed ones are long, the swapped pairs short.
//
// Coordinates: an iota-fixed ambient coweight v corresponds to the folded
// coweight whose I-th coordinate is v_i for any i in orbit I. A folded root
// with coefficients c_I is the underline of any ambient root a with
// c_I = sum of a_i over i in I. We never store half-integers: the underline of
// a is represented by a + iota(a).
class FoldingDatum {
 public:
  // Ambient A_{2k+1}, D_n (n >= 4, last two nodes swapped) or E_6.
  static FoldingDatum make(char type, int rank);

  const RootDatum& ambient() const { return amb_; }
  const RootDatum& folded() const { return fold_; }
  const std::string& label() const { return label_; }
  int iota(int i) const { return iota_[i]; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int i) const { return orbit_of_[i]; }
  SimpleSubset fixed_nodes() const;

  Root iota(const Root& a) const;
  Coweight iota(const Coweight& v) const;
  FiniteWeylElement iota(const FiniteWeylElement& w) const;
  SimpleSubset iota(SimpleSubset J) const;
  bool is_fixed(const FiniteWeylElement& w) const { return iota(w) == w; }

  // a + iota(a), i.e. twice the underline.
  Root doubled_underline(const Root& a) const { return a + iota(a); }
  // The underline of a in folded simple-root coordinates.
  Root fold(const Root& a) const;
  // Folded coweight to ambient and back (the latter requires iota(v) = v).
  Coweight embed(const Coweight& v) const;
  Coweight restrict(const Coweight& v) const;
  FiniteWeylElement embed(const FiniteWeylElement& w) const;
  ExtAffineElement embed(const ExtAffineElement& x) const;
  ExtAffineElement restrict(const ExtAffineElement& x) const;
  SimpleSubset lift(SimpleSubset J) const;
  // Requires J to be iota-stable.
  SimpleSubset descend(SimpleSubset J) const;

  // r_g: s_g s_{iota g} when g != iota g, else s_g.
  FiniteWeylElement underline_reflection(const Root& g) const;
  // Embedded folded simple reflection of orbit I.
  const FiniteWeylElement& simple_image(int I) const { return simple_images_[I]; }
  // Ambient coroot of the underline: g-check + iota(g)-check, or g-check.
  Coweight underline_coroot(const Root& g) const;

 private:
  FoldingDatum(RootDatum amb, RootDatum fold) : amb_(std::move(amb)), fold_(std::move(fold)) {}
  RootDatum amb_, fold_;
  std::string label_;
  std::vector<int> iota_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<FiniteWeylElement> simple_images_;  // embedded folded simple reflections
};

// Coefficient-wise minimum.
Root wedge(const Root& a, const Root& b);

// Maximal elements of a set of roots under <=_J.
std::vector<Root> max_J(const std::vector<Root>& set, SimpleSubset J);

// A_phi = { g in Phi' : z(g) < 0, g - phi in Z Phi'_J' } and its unique
// J'-antidominant member.
struct APhi {
  std::vector<Root> set;
  std::optional<Root> theta;
  int antidominant_count = 0;  // uniqueness is part of the claim, so count them
};
APhi a_phi(const RootDatum& d, const FiniteWeylElement& z, SimpleSubset Jp, const Root& phi);
std::vector<Root> fixed_members(const FoldingDatum& fd, const std::vector<Root>& set);

// Ambient coset representatives fixed by iota (Jp must be iota-stable).
std::vector<FiniteWeylElement> folded_coset_reps(const FoldingDatum& fd, SimpleSubset Jp);

// For g outside Phi'_J' with g - iota(g) in Z Phi'_J': whether g ^ iota(g) and
// g - g ^ iota(g) are positive roots or zero, and the "moreover" clause for
// every delta in Phi'_J' pairing to -1 with both g and iota(g).
struct WedgeCheck {
  bool applies = false;
  bool parts_ok = true;
  int moreover_checked = 0;
  bool moreover_ok = true;
};
WedgeCheck check_wedge_lemma(const FoldingDatum& fd, SimpleSubset Jp, const Root& g);

// Choice of g in (A_phi)_max for which z s_g and z r_g stay minimal.
struct O3Pick {
  Root gamma;
  bool zs_minimal = false, zr_minimal = false;
};
struct O3Result {
  int which = 0;  // 1: A_phi has fixed members; 2: A_{phi + iota phi} is empty
  std::vector<O3Pick> picks;  // every qualifying gamma, in root order
  bool ok() const;
  const Root& gamma() const { return picks.front().gamma; }
};
O3Result lemma_o3_selector(const FoldingDatum& fd, const FiniteWeylElement& z, SimpleSubset Jp,
                           const Root& phi);

// u in W_{J' - fixed nodes}, iota(u) = u, u(alpha) = gamma, built as y iota(y).
struct O0Result {
  bool support_ok = false;  // supp(gamma) avoids the fixed nodes
  FiniteWeylElement u;
  bool u_ok = false;
};
O0Result lemma_o0_decompose(const FoldingDatum& fd, const FiniteWeylElement& z, SimpleSubset Jp,
                            int alpha, const Root& gamma);

// A displayed Bruhat chain: steps[0] >= steps[1] >= ..., or '=' where the two
// expressions must agree as elements.
struct ChainStep {
  ExtAffineElement x;
  char rel = '>';  // relation to the previous step: '>' (previous >= x) or '='
  std::string note;
};
struct ChainReplay {
  std::string label;
  std::vector<ChainStep> steps;
  std::vector<bool> step_ok;  // step_ok[0] is the membership of steps[0] in Adm
  bool interval_ok = true;    // last step lies in the lower interval of the first
  bool ok() const;
};
// Replays the chain in the Bruhat order of d. Membership of the top is
// decided by the caller and passed in.
void replay(const RootDatum& d, bool top_admissible, ChainReplay& c, bool interval_check);

// z wtilde r_g z^{-1} in Adm(lambda) through one of three chains in the ambient
// group, with the top and the target also checked in the folded group.
struct O5Report {
  int which = 0;  // 0: g fixed, handled by the bound corollary; 1, 2, 3: chain cases
  FiniteWeylElement u;
  ChainReplay chain;
  bool hypothesis = false;  // mu + (g_J')-check <= lambda in the dominance order
  bool target_admissible = false;
  bool ok() const { return hypothesis && target_admissible && (which == 0 || chain.ok()); }
};
O5Report lemma_o5_check(const FoldingDatum& fd, const ShortDatum& sd, const Coweight& lambda,
                        const FiniteWeylElement& z, const Root& gamma);

// All displayed chains for G2, replayed on every irreducible instance with
// mu pairings in [lo, hi] and lambda - mu coefficients up to cmax.
struct G2ChainStat {
  std::string label;
  int instances = 0;
  int passed = 0;
  int interval_passed = 0;
  std::string first_failure;
};
struct G2Report {
  std::vector<G2ChainStat> chains;
  int hypothesis_failures = 0;
  bool ok() const;
};
G2Report g2_chain_suite(int lo = -1, int hi = 2, int cmax = 2);

}  // namespace adlv
