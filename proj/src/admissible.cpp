#include "adlv/admissible.hpp"

#include <algorithm>

namespace adlv {

AdmOracle::AdmOracle(const RootDatum& d, const Coweight& lambda)
    : d_(&d), frame_(d), lambda_(lambda) {
  d.check(lambda);
  if (!is_dominant(d, lambda)) throw DomainError("admissible set needs a dominant coweight");
  for (const Coweight& v : weyl_orbit(d, lambda))
    tops_.push_back(ExtAffineElement::translation(d, v));
  std::sort(tops_.begin(), tops_.end());
  top_len_ = length(d, tops_.front());
}

bool AdmOracle::contains(const ExtAffineElement& x) const {
  if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  bool in = false;
  // Admissible elements are permissible, so the translation part of x is
  // bounded by lambda; this rejects most candidates before any Bruhat test.
  if (frame_.length(x) <= top_len_ && preceq(*d_, x.translation_part(), lambda_)) {
    // Try the translation in the Weyl chamber of x's alcove first; it decides
    // nearly every positive case. The full scan keeps the answer exact.
    const int scale = 4 * (top_len_ + 1);
    Coweight p = scale * x.translation_part() + x.finite_part().apply(d_->rho_check());
    const Coweight v = dominant_rep(*d_, p).u.inverse().apply(lambda_);
    in = frame_.bruhat_leq(x, ExtAffineElement::translation(*d_, v));
    for (const auto& t : tops_)
      if (!in && frame_.bruhat_leq(x, t)) {
        in = true;
        break;
      }
  }
  cache_.emplace(x, in);
  return in;
}

AdmissibleSet compute_adm(const RootDatum& d, const Coweight& lambda, int cap) {
  AdmOracle oracle(d, lambda);
  if (oracle.top_length() > cap)
    throw CapacityError("admissible set enumeration refused: length of t^lambda is " +
                        std::to_string(oracle.top_length()) + ", cap " + std::to_string(cap));
  AffineFrame f(d);
  ElementSet all;
  for (const auto& t : oracle.maximal()) {
    if (all.count(t)) continue;
    ElementSet below = f.lower_interval(t);
    all.insert(below.begin(), below.end());
  }
  AdmissibleSet out;
  out.lambda = lambda;
  std::vector<std::pair<int, ExtAffineElement>> keyed;
  keyed.reserve(all.size());
  for (const auto& x : all) keyed.push_back({length(d, x), x});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  for (auto& [l, x] : keyed) {
    out.elements.push_back(x);
    if (is_straight(d, x)) out.straight.push_back(x);
  }
  return out;
}

bool adm_contains(const RootDatum& d, const Coweight& lambda, const ExtAffineElement& x) {
  return AdmOracle(d, lambda).contains(x);
}

std::vector<StraightGroup> straight_elements(const RootDatum& d, const AdmissibleSet& adm) {
  std::vector<StraightGroup> groups;
  for (const auto& x : adm.straight) {
    auto eta = kottwitz(d, x);
    auto nu = dominant(d, newton_point(d, x));
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const StraightGroup& g) { return g.eta == eta && g.nu == nu; });
    if (it == groups.end()) {
      groups.push_back({eta, nu, {}});
      it = groups.end() - 1;
    }
    it->elements.push_back(x);
  }
  return groups;
}

}  // namespace adlv
