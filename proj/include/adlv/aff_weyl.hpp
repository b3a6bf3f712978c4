#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "adlv/finite_weyl.hpp"

namespace adlv {

// (alpha, k), viewed as the affine function v -> -<alpha, v> + k.
struct AffineRoot {
  Root root;
  int level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

bool is_positive(const RootDatum& d, const AffineRoot& a);

// t^mu w.
class ExtAffineElement {
 public:
  ExtAffineElement() = default;
  ExtAffineElement(const Coweight& mu, const FiniteWeylElement& w) : mu_(mu), w_(w) {}

  static ExtAffineElement identity(const RootDatum& d) {
    return {Coweight{}, FiniteWeylElement::identity(d)};
  }
  static ExtAffineElement translation(const RootDatum& d, const Coweight& mu) {
    return {mu, FiniteWeylElement::identity(d)};
  }
  static ExtAffineElement finite(const FiniteWeylElement& w) { return {Coweight{}, w}; }
  // s_{(alpha, k)} = t^{k alpha-check} s_alpha.
  static ExtAffineElement reflection(const RootDatum& d, const AffineRoot& a);

  const Coweight& translation_part() const { return mu_; }
  const FiniteWeylElement& finite_part() const { return w_; }

  ExtAffineElement inverse() const;
  AffineRoot apply(const AffineRoot& a) const;
  AffineRoot apply_inverse(const AffineRoot& a) const;
  Coweight apply(const Coweight& v) const { return mu_ + w_.apply(v); }
  ExtAffineElement power(int k) const;

  friend ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b) {
    return {a.mu_ + a.w_.apply(b.mu_), a.w_ * b.w_};
  }
  friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
    return a.mu_ == b.mu_ && a.w_ == b.w_;
  }
  friend bool operator<(const ExtAffineElement& a, const ExtAffineElement& b) {
    if (a.mu_ != b.mu_) return a.mu_ < b.mu_;
    return a.w_ < b.w_;
  }
  std::size_t hash() const { return hash_ints(mu_.c.data(), kMaxRank, w_.hash()); }

 private:
  Coweight mu_;
  FiniteWeylElement w_;
};

struct ExtAffineHash {
  std::size_t operator()(const ExtAffineElement& x) const { return x.hash(); }
};
using ElementSet = std::unordered_set<ExtAffineElement, ExtAffineHash>;

// The affine Weyl group of a Levi subsystem Phi_J (J = S_0 gives the whole group).
// Holds the simple affine roots and reflections used for length, descents and
// the Bruhat order.
class AffineFrame {
 public:
  AffineFrame(const RootDatum& d, SimpleSubset J);
  explicit AffineFrame(const RootDatum& d) : AffineFrame(d, d.all()) {}

  const RootDatum& datum() const { return *d_; }
  SimpleSubset levi() const { return J_; }
  const std::vector<AffineRoot>& simple_roots() const { return simple_; }
  const std::vector<ExtAffineElement>& simple_reflections() const { return refl_; }
  // Positive roots of Phi_J as indices into datum().positive_roots().
  const std::vector<int>& roots() const { return roots_; }

  int length(const ExtAffineElement& x) const;
  bool left_descent(const ExtAffineElement& x, int s) const;
  bool right_descent(const ExtAffineElement& x, int s) const;
  bool bruhat_leq(ExtAffineElement x, ExtAffineElement y) const;
  // x = s_1 ... s_k tau with l(x) = k and l(tau) = 0.
  std::vector<int> reduced_word(ExtAffineElement x, ExtAffineElement* tau = nullptr) const;
  ElementSet lower_interval(const ExtAffineElement& y) const;
  // z(a) > 0 for every simple affine root of the frame.
  bool is_min_for_frame(const ExtAffineElement& z) const;
  // Minimal element of z W^a_M, by stripping right descents.
  ExtAffineElement min_for_frame(ExtAffineElement z) const;

 private:
  const RootDatum* d_;
  SimpleSubset J_;
  std::vector<AffineRoot> simple_;
  std::vector<ExtAffineElement> refl_;
  std::vector<Coweight> coroots_;
  // refl_[s] * x without a full product.
  ExtAffineElement reflect(int s, const ExtAffineElement& x) const;
  std::vector<int> roots_;
};

// Length by the closed formula (whole group).
int length(const RootDatum& d, const ExtAffineElement& x);
// Length as a direct count of positive affine roots made negative; test oracle.
int length_by_count(const RootDatum& d, const ExtAffineElement& x);
bool bruhat_leq(const RootDatum& d, const ExtAffineElement& x, const ExtAffineElement& y);

std::vector<int> kottwitz(const RootDatum& d, const ExtAffineElement& x);
RationalCoweight newton_point(const RootDatum& d, const ExtAffineElement& x);
RationalCoweight dominant(const RootDatum& d, const RationalCoweight& v);
// <v, 2 rho> for rational v.
Rational pair_two_rho(const RootDatum& d, const RationalCoweight& v);
bool is_straight(const RootDatum& d, const ExtAffineElement& x);

// Length-zero elements (one per element of Y / Z coroots).
std::vector<ExtAffineElement> omega_elements(const RootDatum& d);
// All elements of length <= max_len.
std::vector<ExtAffineElement> elements_up_to(const RootDatum& d, int max_len);

}  // namespace adlv

template <>
struct std::hash<adlv::ExtAffineElement> : adlv::ExtAffineHash {};
