#include "adlv/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace adlv {

namespace {

std::vector<std::vector<int>> standard_cartan(char type, int n) {
  auto bad = [&](const std::string& why) {
    return StructuralError("invalid type " + std::string(1, type) + std::to_string(n) + ": " + why);
  };
  if (n < 1) throw bad("rank must be positive");
  if (n > kMaxRank) throw bad("rank exceeds " + std::to_string(kMaxRank));
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad("B needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2) throw bad("C needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw bad("D needs rank >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad("E needs rank 6, 7 or 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad("F needs rank 4");
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw bad("G needs rank 2");
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      throw bad("unknown type letter");
  }
  return c;
}

// Integer row basis of the lattice spanned by the given rows (Hermite-style reduction).
std::vector<Coweight> row_basis(std::vector<Coweight> rows, int n) {
  std::vector<Coweight> out;
  for (int col = 0; col < n; ++col) {
    while (true) {
      int piv = -1;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][col] != 0 && (piv < 0 || std::abs(rows[r][col]) < std::abs(rows[piv][col])))
          piv = r;
      if (piv < 0) break;
      bool done = true;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == piv || rows[r][col] == 0) continue;
        int q = rows[r][col] / rows[piv][col];
        for (int k = 0; k < n; ++k) rows[r][k] -= q * rows[piv][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        out.push_back(rows[piv]);
        rows.erase(rows.begin() + piv);
        break;
      }
    }
  }
  return out;
}

}  // namespace

RootDatum RootDatum::make(char type, int rank, Isogeny iso) {
  DatumConfig cfg;
  cfg.type = type;
  cfg.rank = rank;
  cfg.isogeny = iso;
  return make(cfg);
}

RootDatum RootDatum::make(const DatumConfig& cfg) {
  RootDatum d;
  d.type_ = cfg.type;
  d.n_ = cfg.rank;
  d.cartan_ = standard_cartan(cfg.type, cfg.rank);
  d.label_ = std::string(1, cfg.type) + std::to_string(cfg.rank);
  d.iso_ = cfg.isogeny;
  d.build(cfg.lattice);
  return d;
}

RootDatum RootDatum::from_cartan(std::string label, const std::vector<std::vector<int>>& cartan,
                                 Isogeny iso) {
  const int n = static_cast<int>(cartan.size());
  if (n < 1 || n > kMaxRank) throw StructuralError("Cartan matrix has unsupported size");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) throw StructuralError("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw StructuralError("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = cartan[i][j];
      if (v > 0 || v < -3) throw StructuralError("Cartan off-diagonal entry out of range");
      if ((v == 0) != (cartan[j][i] == 0)) throw StructuralError("Cartan zero pattern asymmetric");
    }
  }
  if (iso == Isogeny::Intermediate) throw StructuralError("intermediate lattice needs generators");
  RootDatum d;
  d.type_ = '?';
  d.n_ = n;
  d.cartan_ = cartan;
  d.label_ = std::move(label);
  d.iso_ = iso;
  d.build({});
  return d;
}

DatumConfig RootDatum::config() const {
  DatumConfig cfg;
  cfg.type = type_;
  cfg.rank = n_;
  cfg.isogeny = iso_;
  if (iso_ == Isogeny::Intermediate) cfg.lattice = basis_;
  return cfg;
}

void RootDatum::build(std::vector<Coweight> lattice) {
  const int n = n_;
  // Dynkin graph.
  adj_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan_[i][j] != 0) adj_[i].push_back(j);
  dist_.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    dist_[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj_[u])
        if (dist_[s][v] < 0) {
          dist_[s][v] = dist_[s][u] + 1;
          q.push_back(v);
        }
    }
    for (int t = 0; t < n; ++t)
      if (dist_[s][t] < 0) throw StructuralError("Dynkin diagram is not connected");
  }

  // Root lengths: c_ij / c_ji = |a_j|^2 / |a_i|^2.
  std::vector<Rational> len(n);
  std::vector<bool> seen(n, false);
  len[0] = Rational(1);
  seen[0] = true;
  std::deque<int> q{0};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j : adj_[i]) {
      Rational lj = len[i] * Rational(cartan_[i][j], cartan_[j][i]);
      if (seen[j]) {
        if (!(lj == len[j])) throw StructuralError("Cartan matrix is not symmetrizable");
        continue;
      }
      len[j] = lj;
      seen[j] = true;
      q.push_back(j);
    }
  }
  long long den = 1;
  for (auto& l : len) den = std::lcm(den, l.den());
  sym_.assign(n, 0);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    sym_[i] = static_cast<int>(len[i].num() * (den / len[i].den()));
    g = std::gcd(g, static_cast<long long>(sym_[i]));
  }
  for (int& s : sym_) s = static_cast<int>(s / g);
  simply_laced_ = std::all_of(sym_.begin(), sym_.end(), [&](int s) { return s == sym_[0]; });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan_[i][j] * sym_[i] != cartan_[j][i] * sym_[j])
        throw StructuralError("Cartan matrix is not symmetrizable");

  // Positive roots by height.
  std::set<Root> all;
  std::vector<std::vector<Root>> by_height(1);
  for (int i = 0; i < n; ++i) {
    Root a;
    a[i] = 1;
    by_height[0].push_back(a);
    all.insert(a);
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::vector<Root> next;
    for (const Root& a : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        int pairing_i = 0;
        for (int j = 0; j < n; ++j) pairing_i += cartan_[i][j] * a[j];
        int p = 0;
        Root b = a;
        while (true) {
          b[i] -= 1;
          if (!all.count(b)) break;
          ++p;
        }
        int qv = p - pairing_i;
        if (qv > 0) {
          Root c = a;
          c[i] += 1;
          if (!all.count(c)) {
            all.insert(c);
            next.push_back(c);
          }
        }
      }
    }
    if (!next.empty()) by_height.push_back(std::move(next));
    if (all.size() > 200000) throw StructuralError("Cartan matrix is not of finite type");
  }
  pos_.clear();
  for (auto& layer : by_height) {
    std::sort(layer.begin(), layer.end());
    for (auto& a : layer) pos_.push_back(a);
  }
  index_.clear();
  for (int k = 0; k < static_cast<int>(pos_.size()); ++k) index_[pos_[k]] = k;
  pos_coroot_.clear();
  for (const Root& a : pos_) pos_coroot_.push_back(coroot(a));

  // Coordinates with respect to the simple coroots: solve C^T x = v.
  std::vector<std::vector<long long>> ct(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = cartan_[j][i];
  inv_cartan_t_ = rational_inverse(ct);

  // Lattice Y.
  switch (iso_) {
    case Isogeny::Adjoint:
      basis_.clear();
      for (int i = 0; i < n; ++i) basis_.push_back(fundamental_coweight(i));
      break;
    case Isogeny::SimplyConnected:
      basis_.clear();
      for (int i = 0; i < n; ++i) basis_.push_back(simple_coroot(i));
      break;
    case Isogeny::Intermediate: {
      for (const auto& v : lattice)
        for (int k = n; k < kMaxRank; ++k)
          if (v[k] != 0) throw StructuralError("lattice generator has wrong dimension");
      std::vector<Coweight> rows = lattice;
      for (int i = 0; i < n; ++i) rows.push_back(simple_coroot(i));
      basis_ = row_basis(rows, n);
      if (static_cast<int>(basis_.size()) != n) throw StructuralError("lattice is not full rank");
      break;
    }
  }
  std::vector<std::vector<long long>> bm(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bm[i][j] = basis_[i][j];
  inv_basis_ = rational_inverse(bm);
  // Coroots in basis coordinates: A = C * B^{-1}.
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<long long>(cartan_[i][k]) * inv_basis_.num[k][j];
      if (s % inv_basis_.den != 0) throw StructuralError("lattice does not contain the coroots");
      a[i][j] = s / inv_basis_.den;
    }
  SmithForm snf = smith_normal_form(a);
  pi1_inv_.clear();
  pi1_proj_.clear();
  for (int i = 0; i < n; ++i) {
    if (snf.diagonal[i] == 0) throw StructuralError("coroot lattice is not of full rank");
    if (snf.diagonal[i] > 1) {
      pi1_inv_.push_back(static_cast<int>(snf.diagonal[i]));
      std::vector<long long> col(n);
      for (int k = 0; k < n; ++k) col[k] = snf.v[k][i];
      pi1_proj_.push_back(col);
    }
  }
}

int RootDatum::positive_index(const Root& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

bool RootDatum::is_root(const Root& a) const {
  return index_.count(a) > 0 || index_.count(-a) > 0;
}

bool RootDatum::is_positive(const Root& a) const {
  for (int i = 0; i < n_; ++i)
    if (a[i] != 0) return a[i] > 0;
  return false;
}

int RootDatum::norm(const Root& a) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += static_cast<long long>(a[i]) * a[j] * cartan_[i][j] * sym_[i];
  return static_cast<int>(s / 2);
}

bool RootDatum::is_long(const Root& a) const {
  return norm(a) == *std::max_element(sym_.begin(), sym_.end());
}

int RootDatum::height(const Root& a) const {
  int h = 0;
  for (int i = 0; i < n_; ++i) h += a[i];
  return h;
}

Coweight RootDatum::coroot(const Root& a) const {
  int nm = norm(a);
  if (nm <= 0) throw DomainError("coroot of a non-root");
  Coweight v;
  for (int j = 0; j < n_; ++j) {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long long>(a[i]) * cartan_[i][j] * sym_[i];
    if (s % nm != 0) throw DomainError("coroot of a non-root");
    v[j] = static_cast<int>(s / nm);
  }
  return v;
}

Root RootDatum::coroot_coefficients_of(const Root& a) const {
  int nm = norm(a);
  Root r;
  for (int i = 0; i < n_; ++i) {
    if ((a[i] * sym_[i]) % nm != 0) throw DomainError("coroot of a non-root");
    r[i] = a[i] * sym_[i] / nm;
  }
  return r;
}

Root RootDatum::simple_root(int i) const {
  if (i < 0 || i >= n_) throw DomainError("simple root index out of range");
  Root a;
  a[i] = 1;
  return a;
}

Coweight RootDatum::simple_coroot(int i) const {
  if (i < 0 || i >= n_) throw DomainError("simple root index out of range");
  Coweight v;
  for (int j = 0; j < n_; ++j) v[j] = cartan_[i][j];
  return v;
}

Coweight RootDatum::fundamental_coweight(int i) const {
  if (i < 0 || i >= n_) throw DomainError("simple root index out of range");
  Coweight v;
  v[i] = 1;
  return v;
}

Coweight RootDatum::rho_check() const {
  Coweight v;
  for (int i = 0; i < n_; ++i) v[i] = 1;
  return v;
}

void RootDatum::check(const Coweight& v) const {
  for (int k = n_; k < kMaxRank; ++k)
    if (v[k] != 0) throw StructuralError("coweight dimension does not match the datum");
}

void RootDatum::check(const Root& a) const {
  for (int k = n_; k < kMaxRank; ++k)
    if (a[k] != 0) throw StructuralError("root dimension does not match the datum");
}

bool RootDatum::in_lattice(const Coweight& v) const {
  check(v);
  for (int j = 0; j < n_; ++j) {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long long>(v[i]) * inv_basis_.num[i][j];
    if (s % inv_basis_.den != 0) return false;
  }
  return true;
}

int RootDatum::pi1_order() const {
  int o = 1;
  for (int d : pi1_inv_) o *= d;
  return o;
}

std::vector<int> RootDatum::pi1_class(const Coweight& v) const {
  if (!in_lattice(v)) throw DomainError("coweight is not in the lattice Y");
  std::vector<long long> y(n_);
  for (int j = 0; j < n_; ++j) {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long long>(v[i]) * inv_basis_.num[i][j];
    y[j] = s / inv_basis_.den;
  }
  std::vector<int> out;
  for (std::size_t c = 0; c < pi1_inv_.size(); ++c) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += y[k] * pi1_proj_[c][k];
    long long m = pi1_inv_[c];
    out.push_back(static_cast<int>(((s % m) + m) % m));
  }
  return out;
}

std::vector<Rational> RootDatum::coroot_coefficients(const Coweight& v) const {
  std::vector<Rational> x(n_);
  for (int i = 0; i < n_; ++i) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += inv_cartan_t_.num[i][k] * v[k];
    x[i] = Rational(s, inv_cartan_t_.den);
  }
  return x;
}

std::vector<Rational> RootDatum::coroot_coefficients(const RationalCoweight& v) const {
  std::vector<Rational> x(n_);
  for (int i = 0; i < n_; ++i) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += inv_cartan_t_.num[i][k] * v.num[k];
    x[i] = Rational(s, inv_cartan_t_.den * v.den);
  }
  return x;
}

Coweight RootDatum::from_coroot_coefficients(const std::vector<int>& x) const {
  Coweight v;
  for (int i = 0; i < n_ && i < static_cast<int>(x.size()); ++i)
    for (int j = 0; j < n_; ++j) v[j] += x[i] * cartan_[i][j];
  return v;
}

std::vector<int> RootDatum::geodesic(int i, int j) const {
  std::vector<int> path{i};
  int cur = i;
  while (cur != j) {
    for (int nb : adj_[cur])
      if (dist_[nb][j] == dist_[cur][j] - 1) {
        cur = nb;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

std::vector<SimpleSubset> RootDatum::components(SimpleSubset J) const {
  std::vector<SimpleSubset> out;
  SimpleSubset left = J;
  while (!left.empty()) {
    int s = left.indices().front();
    SimpleSubset comp = SimpleSubset::of({s});
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj_[u])
        if (J.contains(v) && !comp.contains(v)) {
          comp = comp.with(v);
          q.push_back(v);
        }
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

SimpleSubset RootDatum::support(const Root& a) const {
  SimpleSubset s;
  for (int i = 0; i < n_; ++i)
    if (a[i] != 0) s = s.with(i);
  return s;
}

int pairing(const RootDatum& d, const Coweight& v, const Root& a) {
  d.check(v);
  d.check(a);
  return dot(v, a);
}

bool is_dominant(const RootDatum& d, const Coweight& v, SimpleSubset J) {
  for (int i : J.indices())
    if (v[i] < 0) return false;
  (void)d;
  return true;
}

bool is_dominant(const RootDatum& d, const Coweight& v) { return is_dominant(d, v, d.all()); }

bool is_dominant(const RootDatum& d, const RationalCoweight& v) {
  for (int i = 0; i < d.rank(); ++i)
    if (v.num[i] < 0) return false;
  return true;
}

bool is_weakly_dominant(const RootDatum& d, const Coweight& v) {
  for (const Root& a : d.positive_roots())
    if (dot(v, a) < -1) return false;
  return true;
}

bool is_antidominant(const RootDatum& d, const Coweight& v, SimpleSubset J) {
  (void)d;
  for (int i : J.indices())
    if (v[i] > 0) return false;
  return true;
}

std::vector<int> positive_roots_in(const RootDatum& d, SimpleSubset J) {
  std::vector<int> out;
  for (int k = 0; k < d.num_positive(); ++k)
    if (in_span(d.positive_root(k), J)) out.push_back(k);
  return out;
}

bool is_minuscule(const RootDatum& d, const Coweight& v, SimpleSubset J) {
  for (const Root& a : d.positive_roots())
    if (in_span(a, J) && std::abs(dot(v, a)) > 1) return false;
  return true;
}

bool is_central(const RootDatum& d, const Coweight& v, SimpleSubset J) {
  (void)d;
  for (int i : J.indices())
    if (v[i] != 0) return false;
  return true;
}

Coweight apply_simple(const RootDatum& d, int i, Coweight v) {
  int p = v[i];
  if (p == 0) return v;
  for (int k = 0; k < d.rank(); ++k) v[k] -= p * d.cartan(i, k);
  return v;
}

Root apply_simple(const RootDatum& d, int i, Root a) {
  int p = 0;
  for (int k = 0; k < d.rank(); ++k) p += d.cartan(i, k) * a[k];
  a[i] -= p;
  return a;
}

Coweight dominant(const RootDatum& d, Coweight v, SimpleSubset J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J.indices())
      if (v[i] < 0) {
        v = apply_simple(d, i, v);
        changed = true;
      }
  }
  return v;
}

Coweight dominant(const RootDatum& d, Coweight v) { return dominant(d, v, d.all()); }

Coweight antidominant(const RootDatum& d, Coweight v, SimpleSubset J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J.indices())
      if (v[i] > 0) {
        v = apply_simple(d, i, v);
        changed = true;
      }
  }
  return v;
}

Root antidominant(const RootDatum& d, Root a, SimpleSubset J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J.indices()) {
      int p = 0;
      for (int k = 0; k < d.rank(); ++k) p += d.cartan(i, k) * a[k];
      if (p > 0) {
        a[i] -= p;
        changed = true;
      }
    }
  }
  return a;
}

Root dominant(const RootDatum& d, Root a, SimpleSubset J) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J.indices()) {
      int p = 0;
      for (int k = 0; k < d.rank(); ++k) p += d.cartan(i, k) * a[k];
      if (p < 0) {
        a[i] -= p;
        changed = true;
      }
    }
  }
  return a;
}

std::vector<Coweight> weyl_orbit(const RootDatum& d, const Coweight& v) {
  std::vector<Coweight> out{v};
  std::unordered_set<Coweight> seen{v};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < d.rank(); ++i) {
      Coweight w = apply_simple(d, i, out[k]);
      if (seen.insert(w).second) out.push_back(w);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool leq_coroot(const RootDatum& d, const Coweight& a, const Coweight& b, SimpleSubset J) {
  auto x = d.coroot_coefficients(b - a);
  for (int i = 0; i < d.rank(); ++i) {
    if (!x[i].is_integer() || x[i].num() < 0) return false;
    if (!J.contains(i) && x[i].num() != 0) return false;
  }
  return true;
}

bool leq_coroot(const RootDatum& d, const Coweight& a, const Coweight& b) {
  return leq_coroot(d, a, b, d.all());
}

bool preceq(const RootDatum& d, const Coweight& a, const Coweight& b) {
  return leq_coroot(d, dominant(d, a), dominant(d, b));
}

bool leq_root(const Root& a, const Root& b, SimpleSubset J) {
  for (int i = 0; i < kMaxRank; ++i) {
    int c = b[i] - a[i];
    if (c < 0) return false;
    if (c > 0 && !J.contains(i)) return false;
  }
  return true;
}

bool in_span(const Root& a, SimpleSubset J) {
  for (int i = 0; i < kMaxRank; ++i)
    if (a[i] != 0 && !J.contains(i)) return false;
  return true;
}

std::optional<Coweight> chase_step(const RootDatum& d, const Coweight& chi, int simple,
                                   ChaseMode mode) {
  if (simple < 0 || simple >= d.rank()) throw DomainError("chase step needs a simple root");
  int p = chi[simple];
  switch (mode) {
    case ChaseMode::Plus:
      if (p <= -1) return chi + d.simple_coroot(simple);
      break;
    case ChaseMode::PlusStrict:
      if (p == -1) return chi + d.simple_coroot(simple);
      break;
    case ChaseMode::Minus:
      if (p >= 1) return chi - d.simple_coroot(simple);
      break;
  }
  return std::nullopt;
}

bool is_elementary(const Root& a) {
  for (int x : a.c)
    if (x > 1) return false;
  return true;
}

DSets d_sets(const RootDatum& d, const Coweight& chi) {
  DSets s;
  for (int i = 0; i < d.rank(); ++i) {
    if (chi[i] >= 1)
      s.plus = s.plus.with(i);
    else if (chi[i] == 0)
      s.zero = s.zero.with(i);
    else if (chi[i] == -1)
      s.minus = s.minus.with(i);
    else
      s.below_minus_one = true;
  }
  return s;
}

SimpleSubset geodesic_interior(const RootDatum& d, int i, int j) {
  SimpleSubset s;
  for (int v : d.geodesic(i, j))
    if (v != i && v != j) s = s.with(v);
  return s;
}

bool condition_c(const RootDatum& d, const Coweight& chi) {
  DSets s = d_sets(d, chi);
  if (s.below_minus_one) return false;
  auto minus = s.minus.indices();
  for (std::size_t a = 0; a < minus.size(); ++a)
    for (std::size_t b = a + 1; b < minus.size(); ++b)
      if ((geodesic_interior(d, minus[a], minus[b]) & s.plus).empty()) return false;
  return true;
}

}  // namespace adlv
