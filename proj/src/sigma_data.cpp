#include "adlv/sigma_data.hpp"

#include <algorithm>

namespace adlv {

namespace {

RationalCoweight minus(const Coweight& a, const RationalCoweight& b) {
  IntVec num{};
  for (int i = 0; i < kMaxRank; ++i) num[i] = a[i] * b.den - b.num[i];
  return RationalCoweight(num, b.den);
}

SimpleSubset zero_set(const RootDatum& d, const RationalCoweight& v) {
  SimpleSubset s;
  for (int i = 0; i < d.rank(); ++i)
    if (v.num[i] == 0) s = s.with(i);
  return s;
}

}  // namespace

std::optional<ShortDatum> short_datum(const RootDatum& d, SimpleSubset J_nu, const Coweight& mu) {
  if (!d.in_lattice(mu) || !is_dominant(d, mu, J_nu) || !is_minuscule(d, mu, J_nu))
    return std::nullopt;
  ShortDatum sd;
  sd.mu = mu;
  sd.J_nu = J_nu;
  for (SimpleSubset H : d.components(J_nu))
    if (!is_central(d, mu, H)) sd.J = sd.J | H;
  for (int j : sd.J.indices())
    if (mu[j] == 0) sd.K = sd.K.with(j);
  sd.wJ = FiniteWeylElement::longest(d, sd.J);
  sd.wK = FiniteWeylElement::longest(d, sd.K);
  sd.w = sd.wK * sd.wJ;
  sd.wtilde = ExtAffineElement(mu, sd.w);
  if (AffineFrame(d, J_nu).length(sd.wtilde) != 0)
    throw StructuralError("t^mu w_K w_J is not of length zero in its Levi");
  sd.nu = newton_point(d, sd.wtilde);
  if (!is_dominant(d, sd.nu) || !(zero_set(d, sd.nu) == J_nu)) return std::nullopt;
  return sd;
}

bool is_short(const RootDatum& d, const ExtAffineElement& x) {
  RationalCoweight nu = newton_point(d, x);
  if (!is_dominant(d, nu)) return false;
  SimpleSubset J = zero_set(d, nu);
  // x must lie in the Levi: its finite part in W_J and length zero there.
  if (!min_coset_rep(d, x.finite_part(), J).is_identity()) return false;
  return AffineFrame(d, J).length(x) == 0;
}

ShortResult short_from_straight(const RootDatum& d, const ExtAffineElement& x) {
  if (!is_straight(d, x)) throw DomainError("short_from_straight needs a straight element");
  RationalCoweight nu = newton_point(d, x);
  Coweight num;
  num.c = nu.num;
  DominantRep rep = dominant_rep(d, num);
  RationalCoweight nubar(rep.dominant.c, nu.den);
  SimpleSubset J = zero_set(d, nubar);
  FiniteWeylElement z = min_coset_rep(d, rep.u.inverse(), J);
  ExtAffineElement wt = ExtAffineElement::finite(z.inverse()) * x * ExtAffineElement::finite(z);
  auto sd = short_datum(d, J, wt.translation_part());
  if (!sd || !(sd->wtilde == wt)) throw StructuralError("conjugate of a straight element is not short");
  return {*sd, z};
}

std::vector<ShortDatum> short_data(const RootDatum& d, int lo, int hi) {
  std::vector<ShortDatum> out;
  const int n = d.rank();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    SimpleSubset J{bits};
    std::vector<int> x(n, lo);
    while (true) {
      Coweight mu;
      for (int i = 0; i < n; ++i) mu[i] = x[i];
      if (auto sd = short_datum(d, J, mu)) out.push_back(*sd);
      int i = 0;
      while (i < n && x[i] == hi) x[i++] = lo;
      if (i == n) break;
      ++x[i];
    }
  }
  return out;
}

const char* to_string(HNTag t) {
  switch (t) {
    case HNTag::Irreducible:
      return "irreducible";
    case HNTag::CentralTranslation:
      return "central_translation";
    case HNTag::NotComparable:
      return "not_comparable";
  }
  return "?";
}

HNClass hn_classify(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd) {
  if (d.pi1_class(lambda) != kottwitz(d, sd.wtilde))
    return {HNTag::NotComparable, "kottwitz classes differ", -1};
  if (is_central(d, lambda, d.all()) && sd.wtilde == ExtAffineElement::translation(d, lambda))
    return {HNTag::CentralTranslation, "central translation", -1};
  auto coeff = d.coroot_coefficients(minus(lambda, sd.nu));
  for (int i = 0; i < d.rank(); ++i)
    if (coeff[i] <= Rational(0))
      return {HNTag::NotComparable, "coefficient of lambda - nu is not positive", i};
  return {HNTag::Irreducible, "", -1};
}

std::vector<std::vector<int>> pi1_elements(const RootDatum& d) {
  std::vector<std::vector<int>> out{{}};
  for (int m : d.pi1_invariants()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int r = 0; r < m; ++r) {
        auto q = p;
        q.push_back(r);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> pi0_prediction(const RootDatum& d, const Coweight& lambda,
                                             const ShortDatum& sd) {
  HNClass c = hn_classify(d, lambda, sd);
  if (c.tag != HNTag::Irreducible)
    throw DomainError(std::string("no component count for a pair classified as ") + to_string(c.tag));
  // sigma acts trivially on pi_1, so the preimage of 0 under sigma - 1 is everything.
  return pi1_elements(d);
}

std::vector<Root> c_set(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd) {
  if (d.type() == 'G' && sd.J.size() == 1 && !d.is_long(d.simple_root(sd.J.indices()[0]))) {
    for (int i = 0; i < d.rank(); ++i)
      if (d.is_long(d.simple_root(i))) return {d.simple_root(i)};
  }
  std::vector<Root> out;
  for (int k = 0; k < d.num_positive(); ++k) {
    const Root& a = d.positive_root(k);
    if (in_span(a, sd.J)) continue;
    const Coweight& ac = d.positive_coroot(k);
    if (!is_minuscule(d, ac, sd.J) || !is_antidominant(d, ac, sd.J)) continue;
    if (preceq(d, sd.mu + ac, lambda)) out.push_back(a);
  }
  return out;
}

bool span_check(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd) {
  std::vector<int> free;
  for (int i = 0; i < d.rank(); ++i)
    if (!sd.J.contains(i)) free.push_back(i);
  if (free.empty()) return true;
  std::vector<std::vector<long long>> rows;
  for (const Root& a : c_set(d, lambda, sd)) {
    Root c = d.coroot_coefficients_of(a);
    std::vector<long long> r;
    for (int i : free) r.push_back(c[i]);
    rows.push_back(r);
  }
  if (rows.size() < free.size()) return false;
  SmithForm s = smith_normal_form(rows);
  for (std::size_t i = 0; i < free.size(); ++i)
    if (i >= s.diagonal.size() || (s.diagonal[i] != 1 && s.diagonal[i] != -1)) return false;
  return true;
}

std::vector<Root> rank_two_roots(const RootDatum& d, const Root& a, const Root& b) {
  std::vector<Root> out;
  int bi = -1, bj = -1;
  long long det = 0;
  for (int i = 0; i < d.rank() && det == 0; ++i)
    for (int j = i + 1; j < d.rank() && det == 0; ++j) {
      det = static_cast<long long>(a[i]) * b[j] - static_cast<long long>(a[j]) * b[i];
      if (det != 0) {
        bi = i;
        bj = j;
      }
    }
  for (const Root& p : d.positive_roots())
    for (const Root& g : {p, -p}) {
      if (det == 0) {
        if (g == a || g == -a) out.push_back(g);
        continue;
      }
      long long x = static_cast<long long>(g[bi]) * b[bj] - static_cast<long long>(g[bj]) * b[bi];
      long long y = static_cast<long long>(a[bi]) * g[bj] - static_cast<long long>(a[bj]) * g[bi];
      if (x % det || y % det) continue;
      if (static_cast<int>(x / det) * a + static_cast<int>(y / det) * b == g) out.push_back(g);
    }
  return out;
}

TeqReport teq_elements(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                       const Root& alpha) {
  auto cs = c_set(d, adm.lambda(), sd);
  if (std::find(cs.begin(), cs.end(), alpha) == cs.end())
    throw DomainError("root is not in the C-set of this pair");
  TeqReport r;
  Root beta = sd.wJ.apply(alpha);
  r.s = ExtAffineElement(d.coroot(beta), FiniteWeylElement::reflection(d, beta));
  const ExtAffineElement& x = sd.wtilde;
  r.adm_w = adm.contains(x);
  r.adm_sw = adm.contains(r.s * x);
  r.adm_ws = adm.contains(x * r.s);
  r.adm_sws = adm.contains(r.s * x * r.s);
  r.simply_laced_pair = true;
  auto sub = rank_two_roots(d, alpha, sd.w.apply(alpha));
  for (const Root& g : sub)
    if (d.norm(g) != d.norm(alpha)) r.simply_laced_pair = false;
  Root sum = beta + sd.wK.apply(alpha);
  r.bound_holds = !d.is_root(sum) || dot(sd.mu, beta) >= 2;
  return r;
}

std::vector<HNInstance> hn_instances(const RootDatum& d, int lo, int hi, int cmax) {
  std::vector<HNInstance> out;
  const int n = d.rank();
  for (const ShortDatum& sd : short_data(d, lo, hi)) {
    std::vector<int> c(n, -cmax);
    while (true) {
      Coweight lambda = sd.mu + d.from_coroot_coefficients(c);
      if (is_dominant(d, lambda) && hn_classify(d, lambda, sd).tag == HNTag::Irreducible)
        out.push_back({lambda, sd});
      int i = 0;
      while (i < n && c[i] == cmax) c[i++] = -cmax;
      if (i == n) break;
      ++c[i];
    }
  }
  return out;
}

}  // namespace adlv
