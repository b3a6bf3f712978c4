#include "adlv/aff_weyl.hpp"

#include <algorithm>
#include <cstdlib>

namespace adlv {

bool is_positive(const RootDatum& d, const AffineRoot& a) {
  return d.is_positive(a.root) ? a.level >= 1 : a.level >= 0;
}

ExtAffineElement ExtAffineElement::reflection(const RootDatum& d, const AffineRoot& a) {
  return {a.level * d.coroot(a.root), FiniteWeylElement::reflection(d, a.root)};
}

ExtAffineElement ExtAffineElement::inverse() const {
  FiniteWeylElement wi = w_.inverse();
  return {-wi.apply(mu_), wi};
}

AffineRoot ExtAffineElement::apply(const AffineRoot& a) const {
  Root b = w_.apply(a.root);
  return {b, a.level + dot(mu_, b)};
}

AffineRoot ExtAffineElement::apply_inverse(const AffineRoot& a) const {
  return {w_.apply_inverse(a.root), a.level - dot(mu_, a.root)};
}

ExtAffineElement ExtAffineElement::power(int k) const {
  if (k < 0) return inverse().power(-k);
  ExtAffineElement out{Coweight{}, FiniteWeylElement(w_.rank())};
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

AffineFrame::AffineFrame(const RootDatum& d, SimpleSubset J) : d_(&d), J_(J) {
  roots_ = positive_roots_in(d, J);
  for (int j : J.indices()) simple_.push_back({-d.simple_root(j), 0});
  for (SimpleSubset H : d.components(J)) {
    int best = -1;
    for (int k : roots_)
      if (in_span(d.positive_root(k), H) &&
          (best < 0 || d.height(d.positive_root(k)) > d.height(d.positive_root(best))))
        best = k;
    simple_.push_back({d.positive_root(best), 1});
  }
  for (const AffineRoot& a : simple_) {
    refl_.push_back(ExtAffineElement::reflection(d, a));
    coroots_.push_back(d.coroot(a.root));
  }
}

ExtAffineElement AffineFrame::reflect(int s, const ExtAffineElement& x) const {
  const AffineRoot& a = simple_[s];
  const Coweight& ac = coroots_[s];
  Coweight mu = x.translation_part();
  mu += (a.level - dot(mu, a.root)) * ac;
  return {mu, x.finite_part().reflected_left(a.root, ac)};
}

int AffineFrame::length(const ExtAffineElement& x) const {
  const Coweight r = x.finite_part().rho_image();
  const Coweight& mu = x.translation_part();
  int len = 0;
  for (int k : roots_) {
    const Root& g = d_->positive_root(k);
    int p = dot(mu, g);
    len += dot(r, g) > 0 ? std::abs(p) : std::abs(p - 1);
  }
  return len;
}

bool AffineFrame::left_descent(const ExtAffineElement& x, int s) const {
  return !is_positive(*d_, x.apply_inverse(simple_[s]));
}

bool AffineFrame::right_descent(const ExtAffineElement& x, int s) const {
  return !is_positive(*d_, x.apply(simple_[s]));
}

bool AffineFrame::bruhat_leq(ExtAffineElement x, ExtAffineElement y) const {
  int lx = length(x), ly = length(y);
  const int ns = static_cast<int>(simple_.size());
  while (true) {
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    int s = 0;
    while (s < ns && !left_descent(y, s)) ++s;
    if (s == ns) return false;
    y = reflect(s, y);
    --ly;
    if (left_descent(x, s)) {
      x = reflect(s, x);
      --lx;
    }
  }
}

std::vector<int> AffineFrame::reduced_word(ExtAffineElement x, ExtAffineElement* tau) const {
  std::vector<int> word;
  const int ns = static_cast<int>(simple_.size());
  while (true) {
    int s = 0;
    while (s < ns && !left_descent(x, s)) ++s;
    if (s == ns) break;
    word.push_back(s);
    x = reflect(s, x);
  }
  if (tau) *tau = x;
  return word;
}

ElementSet AffineFrame::lower_interval(const ExtAffineElement& y) const {
  ExtAffineElement tau;
  std::vector<int> word = reduced_word(y, &tau);
  ElementSet out{tau};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<ExtAffineElement> add;
    add.reserve(out.size());
    for (const auto& x : out) add.push_back(refl_[*it] * x);
    for (auto& x : add) out.insert(std::move(x));
  }
  return out;
}

bool AffineFrame::is_min_for_frame(const ExtAffineElement& z) const {
  for (const AffineRoot& a : simple_)
    if (!is_positive(*d_, z.apply(a))) return false;
  return true;
}

ExtAffineElement AffineFrame::min_for_frame(ExtAffineElement z) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < simple_.size(); ++s)
      if (right_descent(z, static_cast<int>(s))) {
        z = z * refl_[s];
        changed = true;
      }
  }
  return z;
}

int length(const RootDatum& d, const ExtAffineElement& x) {
  const Coweight r = x.finite_part().rho_image();
  const Coweight& mu = x.translation_part();
  int len = 0;
  for (const Root& g : d.positive_roots()) {
    int p = dot(mu, g);
    len += dot(r, g) > 0 ? std::abs(p) : std::abs(p - 1);
  }
  return len;
}

int length_by_count(const RootDatum& d, const ExtAffineElement& x) {
  int bound = 2;
  for (const Root& g : d.positive_roots())
    bound = std::max(bound, std::abs(dot(x.translation_part(), g)) + 2);
  ExtAffineElement xi = x.inverse();
  int count = 0;
  for (const Root& g : d.positive_roots())
    for (int sign : {1, -1})
      for (int k = -bound; k <= bound; ++k) {
        AffineRoot a{sign * g, k};
        if (!is_positive(d, a)) continue;
        if (!is_positive(d, xi.apply(a))) ++count;
      }
  return count;
}

bool bruhat_leq(const RootDatum& d, const ExtAffineElement& x, const ExtAffineElement& y) {
  return AffineFrame(d).bruhat_leq(x, y);
}

std::vector<int> kottwitz(const RootDatum& d, const ExtAffineElement& x) {
  return d.pi1_class(x.translation_part());
}

RationalCoweight newton_point(const RootDatum& d, const ExtAffineElement& x) {
  const int n = x.finite_part().order();
  Coweight xi;
  Coweight v = x.translation_part();
  for (int i = 0; i < n; ++i) {
    xi += v;
    v = x.finite_part().apply(v);
  }
  (void)d;
  return RationalCoweight(xi.c, n);
}

RationalCoweight dominant(const RootDatum& d, const RationalCoweight& v) {
  Coweight num;
  num.c = v.num;
  return RationalCoweight(dominant(d, num).c, v.den);
}

Rational pair_two_rho(const RootDatum& d, const RationalCoweight& v) {
  Rational s(0);
  for (const Root& g : d.positive_roots()) s += dot(v, g);
  return s;
}

bool is_straight(const RootDatum& d, const ExtAffineElement& x) {
  const int n = x.finite_part().order();
  const int l = length(d, x);
  ExtAffineElement p = x;
  for (int k = 1; k <= n; ++k) {
    if (length(d, p) != k * l) return false;
    p = p * x;
  }
  return true;
}

std::vector<ExtAffineElement> omega_elements(const RootDatum& d) {
  std::vector<ExtAffineElement> out{ExtAffineElement::identity(d)};
  const Root& theta = d.highest_root();
  FiniteWeylElement w0 = FiniteWeylElement::longest(d, d.all());
  for (int i = 0; i < d.rank(); ++i) {
    if (theta[i] != 1) continue;
    Coweight om = d.fundamental_coweight(i);
    if (!d.in_lattice(om)) continue;
    FiniteWeylElement wi = FiniteWeylElement::longest(d, d.all().without(i));
    ExtAffineElement tau{om, wi * w0};
    if (length(d, tau) != 0) throw StructuralError("length-zero element construction failed");
    out.push_back(tau);
  }
  return out;
}

std::vector<ExtAffineElement> elements_up_to(const RootDatum& d, int max_len) {
  AffineFrame frame(d);
  std::vector<ExtAffineElement> out = omega_elements(d);
  ElementSet seen(out.begin(), out.end());
  std::size_t level_begin = 0;
  for (int len = 0; len < max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (std::size_t s = 0; s < frame.simple_reflections().size(); ++s) {
        if (frame.left_descent(out[k], static_cast<int>(s))) continue;
        ExtAffineElement y = frame.simple_reflections()[s] * out[k];
        if (seen.insert(y).second) out.push_back(y);
      }
    level_begin = level_end;
  }
  return out;
}

}  // namespace adlv
