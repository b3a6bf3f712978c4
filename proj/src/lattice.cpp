#include "adlv/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace adlv {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat identity(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(Mat& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(Mat& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += k * row_j
void add_row(Mat& a, std::size_t i, std::size_t j, long long k) {
  for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += k * a[j][c];
}

// col_i += k * col_j
void add_col(Mat& a, std::size_t i, std::size_t j, long long k) {
  for (auto& row : a) row[i] += k * row[j];
}

}  // namespace

SmithForm smith_normal_form(const Mat& input) {
  Mat a = input;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  Mat u = identity(m);
  Mat v = identity(n);
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        long long q = a[i][t] / a[t][t];
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        long long q = a[t][j] / a[t][t];
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(a, t, i, 1);
            add_row(u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  SmithForm out;
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a[t][t]);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

RationalMatrix rational_inverse(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw StructuralError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == Rational(0)) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(m[p], m[c]);
    Rational piv = m[c][c];
    for (auto& x : m[c]) x = x / piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == Rational(0)) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  long long den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) den = std::lcm(den, m[i][n + j].den());
  RationalMatrix out;
  out.den = den;
  out.num.assign(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.num[i][j] = m[i][n + j].num() * (den / m[i][n + j].den());
  return out;
}

}  // namespace adlv
