#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "adlv/root_datum.hpp"

namespace adlv {

// Element of W_0, stored by its action on coweights (M) and on roots (R).
// The two matrices satisfy R = M^{-T}, so inversion is a transpose swap.
class FiniteWeylElement {
 public:
  using Mat = std::array<std::int8_t, kMaxRank * kMaxRank>;

  FiniteWeylElement() : FiniteWeylElement(0) {}
  explicit FiniteWeylElement(int rank);

  static FiniteWeylElement identity(const RootDatum& d) { return FiniteWeylElement(d.rank()); }
  static FiniteWeylElement simple(const RootDatum& d, int i);
  static FiniteWeylElement reflection(const RootDatum& d, const Root& a);
  // Product s_{w[0]} s_{w[1]} ... of simple reflections.
  static FiniteWeylElement from_word(const RootDatum& d, const std::vector<int>& word);
  // Longest element of W_J.
  static FiniteWeylElement longest(const RootDatum& d, SimpleSubset J);

  int rank() const { return n_; }
  Coweight apply(const Coweight& v) const;
  Root apply(const Root& a) const;
  RationalCoweight apply(const RationalCoweight& v) const;
  FiniteWeylElement inverse() const;
  // s_a w for a root a with coroot ac, as a rank-one update.
  FiniteWeylElement reflected_left(const Root& a, const Coweight& ac) const;
  // w^{-1}(a) without forming the inverse.
  Root apply_inverse(const Root& a) const;
  bool is_identity() const;

  // w^{-1}(a) > 0, computed without forming the inverse.
  bool inverse_keeps_positive(const Root& a) const;
  int length(const RootDatum& d) const;
  bool right_descent(int i) const;  // l(w s_i) < l(w)
  bool left_descent(int i) const;   // l(s_i w) < l(w)
  std::vector<int> reduced_word(const RootDatum& d) const;
  int order() const;

  // Image of rho-check; <w rho, a> < 0 iff w^{-1}(a) < 0.
  Coweight rho_image() const;

  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b);
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }
  friend bool operator<(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.m_ < b.m_;
  }
  std::size_t hash() const;

 private:
  int n_;
  Mat m_{};  // coweight action, column j = image of the j-th basis vector
  Mat r_{};  // root action
  static int at(const Mat& x, int i, int j) { return x[i * kMaxRank + j]; }
};

struct FiniteWeylHash {
  std::size_t operator()(const FiniteWeylElement& w) const { return w.hash(); }
};

// v-bar and a witness u with u(v) = v-bar.
struct DominantRep {
  Coweight dominant;
  FiniteWeylElement u;
};
DominantRep dominant_rep(const RootDatum& d, const Coweight& v);

// Minimal length representative of w W_J.
FiniteWeylElement min_coset_rep(const RootDatum& d, FiniteWeylElement w, SimpleSubset J);
bool in_min_cosets(const FiniteWeylElement& w, const RootDatum& d, SimpleSubset J);
// W_0^J in order of length, then by reduced word.
std::vector<FiniteWeylElement> min_coset_reps(const RootDatum& d, SimpleSubset J);
// All of W_J (small J only).
std::vector<FiniteWeylElement> parabolic_elements(const RootDatum& d, SimpleSubset J);
long long weyl_order(const RootDatum& d);

}  // namespace adlv

template <>
struct std::hash<adlv::FiniteWeylElement> : adlv::FiniteWeylHash {};
