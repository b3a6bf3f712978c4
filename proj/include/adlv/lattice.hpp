#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv {

inline constexpr int kMaxRank = 8;

using IntVec = std::array<int, kMaxRank>;

// Malformed input: wrong dimension, non-integral coordinates, unknown type.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caps such as the admissible-set length bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t hash_ints(const int* p, int n, std::size_t seed = 0) {
  std::size_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < n; ++i) {
    h ^= std::hash<int>{}(p[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Element of the cocharacter lattice, stored as its pairings with the simple
// roots (fundamental-coweight coordinates).
struct Coweight {
  IntVec c{};

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }
  Coweight& operator+=(const Coweight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a) {
    for (int& x : a.c) x = -x;
    return a;
  }
  friend Coweight operator*(int k, Coweight a) {
    for (int& x : a.c) x *= k;
    return a;
  }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

// Root or character in simple-root coordinates.
struct Root {
  IntVec c{};

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }
  Root& operator+=(const Root& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Root& operator-=(const Root& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator-(Root a) {
    for (int& x : a.c) x = -x;
    return a;
  }
  friend Root operator*(int k, Root a) {
    for (int& x : a.c) x *= k;
    return a;
  }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// <v, a>: the coordinate systems are dual to each other.
inline int dot(const Coweight& v, const Root& a) {
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += v.c[i] * a.c[i];
  return s;
}

struct CoweightHash {
  std::size_t operator()(const Coweight& v) const { return hash_ints(v.c.data(), kMaxRank); }
};
struct RootHash {
  std::size_t operator()(const Root& v) const { return hash_ints(v.c.data(), kMaxRank); }
};

// Exact rational number with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational& operator+=(Rational b) { return *this = *this + b; }
  Rational& operator-=(Rational b) { return *this = *this - b; }
  friend Rational operator-(Rational a) { return {-a.num_, a.den_}; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(Rational a, Rational b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }
  friend std::ostream& operator<<(std::ostream& os, Rational r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void normalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  long long num_ = 0;
  long long den_ = 1;
};

// Rational point of the coweight space, num / den.
struct RationalCoweight {
  IntVec num{};
  int den = 1;

  RationalCoweight() = default;
  RationalCoweight(const Coweight& v) : num(v.c), den(1) {}  // NOLINT
  RationalCoweight(const IntVec& n, int d) : num(n), den(d) { normalize(); }

  Rational operator[](int i) const { return {num[i], den}; }
  void normalize() {
    if (den < 0) {
      den = -den;
      for (int& x : num) x = -x;
    }
    int g = den;
    for (int x : num) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1) {
      den /= g;
      for (int& x : num) x /= g;
    }
  }
  friend bool operator==(const RationalCoweight&, const RationalCoweight&) = default;
};

inline Rational dot(const RationalCoweight& v, const Root& a) {
  long long s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += static_cast<long long>(v.num[i]) * a.c[i];
  return {s, v.den};
}

// Subset of the simple reflections, as a bit mask over simple-root indices.
struct SimpleSubset {
  std::uint32_t bits = 0;

  static SimpleSubset all(int rank) { return {(1u << rank) - 1u}; }
  static SimpleSubset of(std::initializer_list<int> idx) {
    SimpleSubset s;
    for (int i : idx) s.bits |= 1u << i;
    return s;
  }
  bool contains(int i) const { return (bits >> i) & 1u; }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  SimpleSubset with(int i) const { return {bits | (1u << i)}; }
  SimpleSubset without(int i) const { return {bits & ~(1u << i)}; }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  friend SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return {a.bits | b.bits}; }
  friend SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return {a.bits & b.bits}; }
  friend SimpleSubset operator-(SimpleSubset a, SimpleSubset b) { return {a.bits & ~b.bits}; }
  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;
  bool subset_of(SimpleSubset o) const { return (bits & ~o.bits) == 0; }
};

// Smith normal form of an integer matrix: diag = U * A * V with U, V unimodular.
struct SmithForm {
  std::vector<long long> diagonal;
  std::vector<std::vector<long long>> u;
  std::vector<std::vector<long long>> v;
};

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& a);

// Inverse of a square integer matrix over the rationals, as (numerators, common denominator).
struct RationalMatrix {
  std::vector<std::vector<long long>> num;
  long long den = 1;
};

RationalMatrix rational_inverse(const std::vector<std::vector<long long>>& a);

}  // namespace adlv

template <>
struct std::hash<adlv::Coweight> : adlv::CoweightHash {};
template <>
struct std::hash<adlv::Root> : adlv::RootHash {};
