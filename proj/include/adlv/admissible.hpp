#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "adlv/aff_weyl.hpp"

namespace adlv {

// Membership in Adm(lambda) = { x : x <= t^{u(lambda)} for some u in W_0 }.
// Answers are memoised; one oracle per lambda.
class AdmOracle {
 public:
  AdmOracle(const RootDatum& d, const Coweight& lambda);

  const RootDatum& datum() const { return *d_; }
  const Coweight& lambda() const { return lambda_; }
  // The translations t^{u(lambda)}, one per element of the orbit.
  const std::vector<ExtAffineElement>& maximal() const { return tops_; }
  int top_length() const { return top_len_; }
  bool contains(const ExtAffineElement& x) const;
  std::size_t cache_size() const { return cache_.size(); }

 private:
  const RootDatum* d_;
  AffineFrame frame_;
  Coweight lambda_;
  std::vector<ExtAffineElement> tops_;
  int top_len_ = 0;
  mutable std::unordered_map<ExtAffineElement, bool, ExtAffineHash> cache_;
};

struct AdmissibleSet {
  Coweight lambda;
  // Sorted by (length, element).
  std::vector<ExtAffineElement> elements;
  std::vector<ExtAffineElement> straight;
};

inline constexpr int kDefaultAdmCap = 30;

// Full enumeration; refuses when l(t^lambda) exceeds cap.
AdmissibleSet compute_adm(const RootDatum& d, const Coweight& lambda, int cap = kDefaultAdmCap);
bool adm_contains(const RootDatum& d, const Coweight& lambda, const ExtAffineElement& x);

// Straight elements grouped by (kottwitz class, dominant Newton point).
struct StraightGroup {
  std::vector<int> eta;
  RationalCoweight nu;
  std::vector<ExtAffineElement> elements;
};
std::vector<StraightGroup> straight_elements(const RootDatum& d, const AdmissibleSet& adm);

}  // namespace adlv
