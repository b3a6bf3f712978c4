#include "adlv/finite_weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace adlv {

FiniteWeylElement::FiniteWeylElement(int rank) : n_(rank) {
  for (int i = 0; i < kMaxRank; ++i) {
    m_[i * kMaxRank + i] = 1;
    r_[i * kMaxRank + i] = 1;
  }
}

FiniteWeylElement FiniteWeylElement::simple(const RootDatum& d, int i) {
  if (i < 0 || i >= d.rank()) throw DomainError("simple reflection index out of range");
  FiniteWeylElement w(d.rank());
  for (int k = 0; k < d.rank(); ++k) {
    w.m_[k * kMaxRank + i] -= static_cast<std::int8_t>(d.cartan(i, k));
    w.r_[i * kMaxRank + k] -= static_cast<std::int8_t>(d.cartan(i, k));
  }
  return w;
}

FiniteWeylElement FiniteWeylElement::reflection(const RootDatum& d, const Root& a) {
  Coweight ac = d.coroot(a);
  FiniteWeylElement w(d.rank());
  for (int k = 0; k < d.rank(); ++k)
    for (int j = 0; j < d.rank(); ++j) {
      w.m_[k * kMaxRank + j] -= static_cast<std::int8_t>(ac[k] * a[j]);
      w.r_[k * kMaxRank + j] -= static_cast<std::int8_t>(a[k] * ac[j]);
    }
  return w;
}

FiniteWeylElement FiniteWeylElement::from_word(const RootDatum& d, const std::vector<int>& word) {
  FiniteWeylElement w(d.rank());
  for (int i : word) w = w * simple(d, i);
  return w;
}

FiniteWeylElement FiniteWeylElement::longest(const RootDatum& d, SimpleSubset J) {
  FiniteWeylElement w(d.rank());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : J.indices())
      if (!w.right_descent(j)) {
        w = w * simple(d, j);
        grew = true;
      }
  }
  return w;
}

Coweight FiniteWeylElement::apply(const Coweight& v) const {
  Coweight out;
  for (int k = 0; k < n_; ++k) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(m_, k, j) * v[j];
    out[k] = s;
  }
  return out;
}

Root FiniteWeylElement::apply(const Root& a) const {
  Root out;
  for (int k = 0; k < n_; ++k) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(r_, k, j) * a[j];
    out[k] = s;
  }
  return out;
}

FiniteWeylElement FiniteWeylElement::reflected_left(const Root& a, const Coweight& ac) const {
  // s_a acts by v - <v, a> ac on coweights and by b - <ac, b> a on roots.
  FiniteWeylElement out = *this;
  for (int j = 0; j < n_; ++j) {
    int pm = 0, pr = 0;
    for (int k = 0; k < n_; ++k) {
      pm += a[k] * at(m_, k, j);
      pr += ac[k] * at(r_, k, j);
    }
    for (int i = 0; i < n_; ++i) {
      out.m_[i * kMaxRank + j] = static_cast<std::int8_t>(at(m_, i, j) - ac[i] * pm);
      out.r_[i * kMaxRank + j] = static_cast<std::int8_t>(at(r_, i, j) - a[i] * pr);
    }
  }
  return out;
}

Root FiniteWeylElement::apply_inverse(const Root& a) const {
  // The root action of w^{-1} is the transpose of the coweight action of w.
  Root out;
  for (int k = 0; k < n_; ++k) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(m_, j, k) * a[j];
    out[k] = s;
  }
  return out;
}

RationalCoweight FiniteWeylElement::apply(const RationalCoweight& v) const {
  Coweight num;
  num.c = v.num;
  return RationalCoweight(apply(num).c, v.den);
}

FiniteWeylElement FiniteWeylElement::inverse() const {
  FiniteWeylElement w(n_);
  for (int i = 0; i < kMaxRank; ++i)
    for (int j = 0; j < kMaxRank; ++j) {
      w.m_[i * kMaxRank + j] = r_[j * kMaxRank + i];
      w.r_[i * kMaxRank + j] = m_[j * kMaxRank + i];
    }
  return w;
}

bool FiniteWeylElement::is_identity() const { return *this == FiniteWeylElement(n_); }

Coweight FiniteWeylElement::rho_image() const {
  Coweight out;
  for (int k = 0; k < n_; ++k) {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += at(m_, k, j);
    out[k] = s;
  }
  return out;
}

bool FiniteWeylElement::inverse_keeps_positive(const Root& a) const {
  // <rho, w^{-1} a> = <w rho, a>, and a root is positive iff its height is.
  return dot(rho_image(), a) > 0;
}

int FiniteWeylElement::length(const RootDatum& d) const {
  Coweight r = rho_image();
  int len = 0;
  for (const Root& a : d.positive_roots())
    if (dot(r, a) < 0) ++len;
  return len;
}

bool FiniteWeylElement::right_descent(int i) const {
  int s = 0;
  for (int k = 0; k < n_; ++k) s += at(r_, k, i);
  return s < 0;
}

bool FiniteWeylElement::left_descent(int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += at(m_, i, j);
  return s < 0;
}

std::vector<int> FiniteWeylElement::reduced_word(const RootDatum& d) const {
  std::vector<int> rev;
  FiniteWeylElement w = *this;
  while (true) {
    int i = 0;
    while (i < n_ && !w.right_descent(i)) ++i;
    if (i == n_) break;
    rev.push_back(i);
    w = w * simple(d, i);
  }
  return {rev.rbegin(), rev.rend()};
}

int FiniteWeylElement::order() const {
  FiniteWeylElement p = *this;
  for (int k = 1; k <= 1000; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  throw CapacityError("finite Weyl element order exceeds cap");
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement c(std::max(a.n_, b.n_));
  const int n = c.n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sm = 0, sr = 0;
      for (int k = 0; k < n; ++k) {
        sm += FiniteWeylElement::at(a.m_, i, k) * FiniteWeylElement::at(b.m_, k, j);
        sr += FiniteWeylElement::at(a.r_, i, k) * FiniteWeylElement::at(b.r_, k, j);
      }
      c.m_[i * kMaxRank + j] = static_cast<std::int8_t>(sm);
      c.r_[i * kMaxRank + j] = static_cast<std::int8_t>(sr);
    }
  return c;
}

std::size_t FiniteWeylElement::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : m_) h = (h ^ static_cast<std::uint8_t>(x)) * 1099511628211ULL;
  return h;
}

DominantRep dominant_rep(const RootDatum& d, const Coweight& v) {
  DominantRep out{v, FiniteWeylElement::identity(d)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < d.rank(); ++i)
      if (out.dominant[i] < 0) {
        out.dominant = apply_simple(d, i, out.dominant);
        out.u = FiniteWeylElement::simple(d, i) * out.u;
        changed = true;
      }
  }
  return out;
}

bool in_min_cosets(const FiniteWeylElement& w, const RootDatum& d, SimpleSubset J) {
  (void)d;
  for (int j : J.indices())
    if (w.right_descent(j)) return false;
  return true;
}

FiniteWeylElement min_coset_rep(const RootDatum& d, FiniteWeylElement w, SimpleSubset J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J.indices())
      if (w.right_descent(j)) {
        w = w * FiniteWeylElement::simple(d, j);
        changed = true;
      }
  }
  return w;
}

namespace {

std::vector<FiniteWeylElement> bfs_left(const RootDatum& d, SimpleSubset gens, SimpleSubset J) {
  std::vector<FiniteWeylElement> simple;
  for (int i = 0; i < d.rank(); ++i) simple.push_back(FiniteWeylElement::simple(d, i));
  std::vector<FiniteWeylElement> out{FiniteWeylElement::identity(d)};
  std::unordered_set<FiniteWeylElement> seen{out[0]};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : gens.indices()) {
      if (out[k].left_descent(i)) continue;
      FiniteWeylElement z = simple[i] * out[k];
      if (!in_min_cosets(z, d, J)) continue;
      if (seen.insert(z).second) out.push_back(z);
    }
  }
  return out;
}

}  // namespace

std::vector<FiniteWeylElement> min_coset_reps(const RootDatum& d, SimpleSubset J) {
  auto out = bfs_left(d, d.all(), J);
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys;
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto word = out[k].reduced_word(d);
    keys.push_back({{static_cast<int>(word.size()), word}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<FiniteWeylElement> sorted;
  for (auto& [key, k] : keys) sorted.push_back(out[k]);
  return sorted;
}

std::vector<FiniteWeylElement> parabolic_elements(const RootDatum& d, SimpleSubset J) {
  return bfs_left(d, J, SimpleSubset{});
}

long long weyl_order(const RootDatum& d) {
  const int n = d.rank();
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (d.type()) {
    case 'A':
      return fact(n + 1);
    case 'B':
    case 'C':
      return (1LL << n) * fact(n);
    case 'D':
      return (1LL << (n - 1)) * fact(n);
    case 'E':
      return n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
    case 'F':
      return 1152;
    case 'G':
      return 12;
    default:
      return static_cast<long long>(parabolic_elements(d, d.all()).size());
  }
}

}  // namespace adlv
