#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/lattice.hpp"

namespace adlv {

enum class Isogeny { Adjoint, SimplyConnected, Intermediate };

struct DatumConfig {
  char type = 'A';
  int rank = 1;
  Isogeny isogeny = Isogeny::Adjoint;
  // Rows generating Y in fundamental-coweight coordinates (Intermediate only).
  std::vector<Coweight> lattice;
};

// Based root datum of a split simple group.
//
// Roots are stored in simple-root coordinates. Coweights are stored by their
// pairings with the simple roots, so <v, a> is a plain dot product and the
// adjoint lattice is all of Z^n. The coroot lattice is spanned by the rows of
// the Cartan matrix.
class RootDatum {
 public:
  static RootDatum make(const DatumConfig& cfg);
  static RootDatum make(char type, int rank, Isogeny iso = Isogeny::Adjoint);
  // Arbitrary (indecomposable) Cartan matrix; used for folded systems.
  static RootDatum from_cartan(std::string label, const std::vector<std::vector<int>>& cartan,
                               Isogeny iso = Isogeny::Adjoint);

  char type() const { return type_; }
  int rank() const { return n_; }
  const std::string& label() const { return label_; }
  Isogeny isogeny() const { return iso_; }
  DatumConfig config() const;
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  bool simply_laced() const { return simply_laced_; }
  SimpleSubset all() const { return SimpleSubset::all(n_); }

  // Positive roots ordered by height, then lexicographically.
  int num_positive() const { return static_cast<int>(pos_.size()); }
  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& positive_root(int k) const { return pos_[k]; }
  // Coroot of the k-th positive root in fundamental-coweight coordinates.
  const Coweight& positive_coroot(int k) const { return pos_coroot_[k]; }
  // Index of a positive root, or -1.
  int positive_index(const Root& a) const;
  bool is_root(const Root& a) const;
  bool is_positive(const Root& a) const;
  Coweight coroot(const Root& a) const;
  // Coroot of a root in simple-coroot coordinates.
  Root coroot_coefficients_of(const Root& a) const;

  Root simple_root(int i) const;
  Coweight simple_coroot(int i) const;
  Coweight fundamental_coweight(int i) const;
  Coweight rho_check() const;
  const Root& highest_root() const { return pos_.back(); }
  // Twice the squared length, normalised so short roots have value 2 * shortest.
  int norm(const Root& a) const;
  bool is_long(const Root& a) const;
  int height(const Root& a) const;

  // Lattice Y.
  bool in_lattice(const Coweight& v) const;
  void check(const Coweight& v) const;
  void check(const Root& a) const;
  const std::vector<Coweight>& lattice_basis() const { return basis_; }
  // Invariant factors of pi_1 = Y / Z(coroots) that are > 1.
  const std::vector<int>& pi1_invariants() const { return pi1_inv_; }
  int pi1_order() const;
  std::vector<int> pi1_class(const Coweight& v) const;

  // Coefficients of v in the basis of simple coroots (rational in general).
  std::vector<Rational> coroot_coefficients(const Coweight& v) const;
  std::vector<Rational> coroot_coefficients(const RationalCoweight& v) const;
  // Inverse of coroot_coefficients for integral coefficient vectors.
  Coweight from_coroot_coefficients(const std::vector<int>& x) const;

  // Dynkin diagram.
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int dist(int i, int j) const { return dist_[i][j]; }
  // Vertices on the shortest path from i to j, inclusive.
  std::vector<int> geodesic(int i, int j) const;
  std::vector<SimpleSubset> components(SimpleSubset J) const;
  SimpleSubset support(const Root& a) const;

 private:
  RootDatum() = default;
  void build(std::vector<Coweight> lattice);

  char type_ = 'A';
  int n_ = 0;
  std::string label_;
  Isogeny iso_ = Isogeny::Adjoint;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;  // sym_[i] = norm of the i-th simple root
  bool simply_laced_ = true;
  std::vector<Root> pos_;
  std::vector<Coweight> pos_coroot_;
  std::unordered_map<Root, int> index_;
  RationalMatrix inv_cartan_t_;  // inverse of the transposed Cartan matrix
  std::vector<Coweight> basis_;
  RationalMatrix inv_basis_;
  std::vector<int> pi1_inv_;
  std::vector<std::vector<long long>> pi1_proj_;  // rows map Y-coordinates to pi1 components
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;
};

// <v, a> with dimension checks.
int pairing(const RootDatum& d, const Coweight& v, const Root& a);

bool is_dominant(const RootDatum& d, const Coweight& v, SimpleSubset J);
bool is_dominant(const RootDatum& d, const Coweight& v);
bool is_dominant(const RootDatum& d, const RationalCoweight& v);
bool is_weakly_dominant(const RootDatum& d, const Coweight& v);
bool is_antidominant(const RootDatum& d, const Coweight& v, SimpleSubset J);
// <v, a> in {-1, 0, 1} for every root a of Phi_J.
bool is_minuscule(const RootDatum& d, const Coweight& v, SimpleSubset J);
bool is_central(const RootDatum& d, const Coweight& v, SimpleSubset J);

Coweight apply_simple(const RootDatum& d, int i, Coweight v);
Root apply_simple(const RootDatum& d, int i, Root a);
Coweight dominant(const RootDatum& d, Coweight v);
Coweight antidominant(const RootDatum& d, Coweight v, SimpleSubset J);
Coweight dominant(const RootDatum& d, Coweight v, SimpleSubset J);
// The J-antidominant (resp. J-dominant) W_J-conjugate of a root.
Root antidominant(const RootDatum& d, Root a, SimpleSubset J);
Root dominant(const RootDatum& d, Root a, SimpleSubset J);
std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v);

// a <= b, i.e. b - a is a nonnegative integral combination of simple coroots in J.
bool leq_coroot(const RootDatum& d, const Coweight& a, const Coweight& b, SimpleSubset J);
bool leq_coroot(const RootDatum& d, const Coweight& a, const Coweight& b);
// The dominant representatives compare under leq_coroot.
bool preceq(const RootDatum& d, const Coweight& a, const Coweight& b);
// a <= b on roots: b - a nonnegative combination of simple roots in J.
bool leq_root(const Root& a, const Root& b, SimpleSubset J);
bool in_span(const Root& a, SimpleSubset J);

enum class ChaseMode { Plus, PlusStrict, Minus };
std::optional<Coweight> chase_step(const RootDatum& d, const Coweight& chi, int simple,
                                   ChaseMode mode);

bool is_elementary(const Root& a);

struct DSets {
  SimpleSubset plus, zero, minus;
  bool below_minus_one = false;
};
DSets d_sets(const RootDatum& d, const Coweight& chi);
// Simple roots strictly inside the geodesic between i and j.
SimpleSubset geodesic_interior(const RootDatum& d, int i, int j);
bool condition_c(const RootDatum& d, const Coweight& chi);

// Positive roots of Phi_J, as indices into d.positive_roots().
std::vector<int> positive_roots_in(const RootDatum& d, SimpleSubset J);

}  // namespace adlv
