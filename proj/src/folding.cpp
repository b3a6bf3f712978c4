#include "adlv/folding.hpp"

#include <algorithm>
#include <map>

namespace adlv {

namespace {

bool negative_vec(const Root& a) {
  bool nonzero = false;
  for (int x : a.c) {
    if (x > 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

bool positive_or_zero(const RootDatum& d, const Root& a) {
  return a.is_zero() || (d.is_root(a) && d.is_positive(a));
}

std::vector<Root> all_roots(const RootDatum& d) {
  std::vector<Root> out;
  for (const Root& a : d.positive_roots()) {
    out.push_back(a);
    out.push_back(-a);
  }
  return out;
}

}  // namespace

FoldingDatum FoldingDatum::make(char type, int rank) {
  std::vector<int> iota(rank);
  std::vector<std::vector<int>> orbits;
  char folded_type = '?';
  if (type == 'A') {
    if (rank < 3 || rank % 2 == 0) throw StructuralError("A folding needs odd rank >= 3");
    const int k = rank / 2;
    for (int i = 0; i < rank; ++i) iota[i] = rank - 1 - i;
    for (int i = 0; i < k; ++i) orbits.push_back({i, rank - 1 - i});
    orbits.push_back({k});
    folded_type = 'C';
  } else if (type == 'D') {
    if (rank < 4) throw StructuralError("D folding needs rank >= 4");
    for (int i = 0; i < rank; ++i) iota[i] = i;
    iota[rank - 2] = rank - 1;
    iota[rank - 1] = rank - 2;
    for (int i = 0; i + 2 < rank; ++i) orbits.push_back({i});
    orbits.push_back({rank - 2, rank - 1});
    folded_type = 'B';
  } else if (type == 'E' && rank == 6) {
    iota = {5, 1, 4, 3, 2, 0};
    orbits = {{1}, {3}, {2, 4}, {0, 5}};
    folded_type = 'F';
  } else {
    throw StructuralError("no folding for this type");
  }

  RootDatum amb = RootDatum::make(type, rank);
  const int r = static_cast<int>(orbits.size());
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int I = 0; I < r; ++I)
    for (int J = 0; J < r; ++J) {
      int s = 0;
      for (int i : orbits[I])
        for (int j : orbits[J]) s += amb.cartan(i, j);
      const int m = static_cast<int>(orbits[J].size());
      if (s % m != 0) throw StructuralError("folded Cartan matrix is not integral");
      c[I][J] = s / m;
    }
  std::string flabel = std::string(1, folded_type) + std::to_string(r);
  RootDatum candidate = RootDatum::make(folded_type, r);
  RootDatum fold = candidate.cartan_matrix() == c ? candidate : RootDatum::from_cartan(flabel, c);

  FoldingDatum fd(std::move(amb), std::move(fold));
  fd.iota_ = iota;
  fd.orbits_ = orbits;
  fd.orbit_of_.assign(rank, -1);
  for (int I = 0; I < r; ++I)
    for (int i : orbits[I]) fd.orbit_of_[i] = I;
  fd.label_ = fd.amb_.label() + "->" + fd.fold_.label();
  for (int I = 0; I < r; ++I) {
    FiniteWeylElement w = FiniteWeylElement::identity(fd.amb_);
    for (int i : orbits[I]) w = w * FiniteWeylElement::simple(fd.amb_, i);
    fd.simple_images_.push_back(w);
  }
  return fd;
}

SimpleSubset FoldingDatum::fixed_nodes() const {
  SimpleSubset s;
  for (int i = 0; i < amb_.rank(); ++i)
    if (iota_[i] == i) s = s.with(i);
  return s;
}

Root FoldingDatum::iota(const Root& a) const {
  Root out;
  for (int i = 0; i < amb_.rank(); ++i) out[iota_[i]] = a[i];
  return out;
}

Coweight FoldingDatum::iota(const Coweight& v) const {
  Coweight out;
  for (int i = 0; i < amb_.rank(); ++i) out[iota_[i]] = v[i];
  return out;
}

FiniteWeylElement FoldingDatum::iota(const FiniteWeylElement& w) const {
  std::vector<int> word = w.reduced_word(amb_);
  for (int& i : word) i = iota_[i];
  return FiniteWeylElement::from_word(amb_, word);
}

SimpleSubset FoldingDatum::iota(SimpleSubset J) const {
  SimpleSubset out;
  for (int i : J.indices()) out = out.with(iota_[i]);
  return out;
}

Root FoldingDatum::fold(const Root& a) const {
  Root out;
  for (int i = 0; i < amb_.rank(); ++i) out[orbit_of_[i]] += a[i];
  return out;
}

Coweight FoldingDatum::embed(const Coweight& v) const {
  Coweight out;
  for (int i = 0; i < amb_.rank(); ++i) out[i] = v[orbit_of_[i]];
  return out;
}

Coweight FoldingDatum::restrict(const Coweight& v) const {
  if (iota(v) != v) throw DomainError("coweight is not fixed by the involution");
  Coweight out;
  for (std::size_t I = 0; I < orbits_.size(); ++I) out[static_cast<int>(I)] = v[orbits_[I][0]];
  return out;
}

FiniteWeylElement FoldingDatum::embed(const FiniteWeylElement& w) const {
  FiniteWeylElement out = FiniteWeylElement::identity(amb_);
  for (int I : w.reduced_word(fold_)) out = out * simple_images_[I];
  return out;
}

ExtAffineElement FoldingDatum::embed(const ExtAffineElement& x) const {
  return {embed(x.translation_part()), embed(x.finite_part())};
}

ExtAffineElement FoldingDatum::restrict(const ExtAffineElement& x) const {
  const Coweight mu = restrict(x.translation_part());
  FiniteWeylElement w = x.finite_part();
  if (!is_fixed(w)) throw DomainError("Weyl element is not fixed by the involution");
  // A fixed element with right descent i also descends at iota(i), so it
  // peels off one folded simple reflection at a time.
  std::vector<int> rev;
  while (!w.is_identity()) {
    int I = 0;
    while (!w.right_descent(orbits_[I][0])) ++I;
    rev.push_back(I);
    w = w * simple_images_[I];
  }
  std::reverse(rev.begin(), rev.end());
  return {mu, FiniteWeylElement::from_word(fold_, rev)};
}

SimpleSubset FoldingDatum::lift(SimpleSubset J) const {
  SimpleSubset out;
  for (int I : J.indices())
    for (int i : orbits_[I]) out = out.with(i);
  return out;
}

SimpleSubset FoldingDatum::descend(SimpleSubset J) const {
  if (iota(J) != J) throw DomainError("subset is not stable under the involution");
  SimpleSubset out;
  for (int i : J.indices()) out = out.with(orbit_of_[i]);
  return out;
}

FiniteWeylElement FoldingDatum::underline_reflection(const Root& g) const {
  const Root ig = iota(g);
  FiniteWeylElement s = FiniteWeylElement::reflection(amb_, g);
  return ig == g ? s : s * FiniteWeylElement::reflection(amb_, ig);
}

Coweight FoldingDatum::underline_coroot(const Root& g) const {
  const Root ig = iota(g);
  return ig == g ? amb_.coroot(g) : amb_.coroot(g) + amb_.coroot(ig);
}

Root wedge(const Root& a, const Root& b) {
  Root out;
  for (int i = 0; i < kMaxRank; ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

std::vector<Root> max_J(const std::vector<Root>& set, SimpleSubset J) {
  std::vector<Root> out;
  for (const Root& g : set) {
    bool maximal = true;
    for (const Root& h : set)
      if (h != g && leq_root(g, h, J)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(g);
  }
  return out;
}

APhi a_phi(const RootDatum& d, const FiniteWeylElement& z, SimpleSubset Jp, const Root& phi) {
  if (in_span(phi, Jp)) throw DomainError("phi lies in the Levi subsystem");
  APhi out;
  const SimpleSubset outside = d.all() - Jp;
  for (const Root& g : all_roots(d)) {
    bool same = true;
    for (int i : outside.indices())
      if (g[i] != phi[i]) same = false;
    if (!same || !negative_vec(z.apply(g))) continue;
    out.set.push_back(g);
    bool anti = true;
    for (int j : Jp.indices())
      if (dot(d.simple_coroot(j), g) > 0) anti = false;
    if (anti) {
      if (!out.theta) out.theta = g;
      ++out.antidominant_count;
    }
  }
  std::sort(out.set.begin(), out.set.end());
  return out;
}

std::vector<Root> fixed_members(const FoldingDatum& fd, const std::vector<Root>& set) {
  std::vector<Root> out;
  for (const Root& g : set)
    if (fd.iota(g) == g) out.push_back(g);
  return out;
}

std::vector<FiniteWeylElement> folded_coset_reps(const FoldingDatum& fd, SimpleSubset Jp) {
  std::vector<FiniteWeylElement> out;
  for (const FiniteWeylElement& w : min_coset_reps(fd.folded(), fd.descend(Jp)))
    out.push_back(fd.embed(w));
  return out;
}

WedgeCheck check_wedge_lemma(const FoldingDatum& fd, SimpleSubset Jp, const Root& g) {
  const RootDatum& d = fd.ambient();
  WedgeCheck c;
  const Root ig = fd.iota(g);
  if (!d.is_root(g) || !d.is_positive(g) || in_span(g, Jp) || !in_span(g - ig, Jp)) return c;
  c.applies = true;
  const Root xi = wedge(g, ig);
  c.parts_ok = positive_or_zero(d, xi) && positive_or_zero(d, g - xi);
  if (g == ig) return c;
  for (int k : positive_roots_in(d, Jp))
    for (int sign : {1, -1}) {
      const Root delta = sign * d.positive_root(k);
      const Coweight dc = d.coroot(delta);
      if (dot(dc, g) != -1 || dot(dc, ig) != -1) continue;
      ++c.moreover_checked;
      if (fd.iota(delta) != delta || dot(dc, xi) != -1) c.moreover_ok = false;
    }
  return c;
}

bool O3Result::ok() const {
  if (picks.empty()) return false;
  for (const O3Pick& p : picks)
    if (!p.zs_minimal || !p.zr_minimal) return false;
  return true;
}

O3Result lemma_o3_selector(const FoldingDatum& fd, const FiniteWeylElement& z, SimpleSubset Jp,
                           const Root& phi) {
  const RootDatum& d = fd.ambient();
  const APhi A = a_phi(d, z, Jp, phi);
  const std::vector<Root> fixed = fixed_members(fd, A.set);
  O3Result res;
  std::vector<Root> chosen;
  const std::vector<Root> amax = max_J(A.set, Jp);
  if (!fixed.empty()) {
    res.which = 1;
    const std::vector<Root> fmax = max_J(fixed, Jp);
    for (const Root& g : amax)
      if (std::find(fmax.begin(), fmax.end(), wedge(g, fd.iota(g))) != fmax.end())
        chosen.push_back(g);
  } else if (!A.set.empty() && a_phi(d, z, Jp, phi + fd.iota(phi)).set.empty()) {
    res.which = 2;
    chosen = amax;
  } else {
    throw DomainError("neither selector case applies");
  }
  for (const Root& g : chosen) {
    O3Pick p{g};
    p.zs_minimal = in_min_cosets(z * FiniteWeylElement::reflection(d, g), d, Jp);
    p.zr_minimal = in_min_cosets(z * fd.underline_reflection(g), d, Jp);
    res.picks.push_back(p);
  }
  return res;
}

O0Result lemma_o0_decompose(const FoldingDatum& fd, const FiniteWeylElement& z, SimpleSubset Jp,
                            int alpha, const Root& gamma) {
  const RootDatum& d = fd.ambient();
  const Root a = d.simple_root(alpha);
  if (fd.iota(alpha) == alpha) throw DomainError("alpha must be moved by the involution");
  if (!a_phi(d, z, Jp, a + fd.iota(a)).set.empty())
    throw DomainError("A_{alpha + iota alpha} is nonempty");
  const APhi A = a_phi(d, z, Jp, a);
  if (std::find(A.set.begin(), A.set.end(), gamma) == A.set.end())
    throw DomainError("gamma is not in A_alpha");
  O0Result res;
  res.u = FiniteWeylElement::identity(d);
  const SimpleSubset moved = d.all() - fd.fixed_nodes();
  res.support_ok = d.support(gamma).subset_of(moved);
  SimpleSubset C;
  for (SimpleSubset comp : d.components(moved))
    if (comp.contains(alpha)) C = comp;
  const SimpleSubset gens = Jp & C;
  Root cur = gamma;
  std::vector<int> word;
  for (bool moved_down = true; moved_down;) {
    moved_down = false;
    for (int j : gens.indices())
      if (dot(d.simple_coroot(j), cur) > 0) {
        cur = apply_simple(d, j, cur);
        word.push_back(j);
        moved_down = true;
        break;
      }
  }
  if (cur != a) return res;
  const FiniteWeylElement y = FiniteWeylElement::from_word(d, word);
  res.u = y * fd.iota(y);
  bool supp = true;
  for (int i : res.u.reduced_word(d))
    if (!(Jp - fd.fixed_nodes()).contains(i)) supp = false;
  res.u_ok = supp && fd.is_fixed(res.u) && res.u.apply(a) == gamma;
  return res;
}

bool ChainReplay::ok() const {
  if (step_ok.size() != steps.size() || !interval_ok) return false;
  return std::all_of(step_ok.begin(), step_ok.end(), [](bool b) { return b; });
}

void replay(const RootDatum& d, bool top_admissible, ChainReplay& c, bool interval_check) {
  const AffineFrame frame(d);
  c.step_ok.assign(c.steps.size(), false);
  if (c.steps.empty()) return;
  c.step_ok[0] = top_admissible;
  for (std::size_t k = 1; k < c.steps.size(); ++k) {
    const ExtAffineElement& prev = c.steps[k - 1].x;
    const ExtAffineElement& cur = c.steps[k].x;
    c.step_ok[k] = c.steps[k].rel == '=' ? prev == cur : frame.bruhat_leq(cur, prev);
  }
  if (interval_check) c.interval_ok = frame.lower_interval(c.steps.front().x).count(c.steps.back().x) > 0;
}

O5Report lemma_o5_check(const FoldingDatum& fd, const ShortDatum& sd, const Coweight& lambda,
                        const FiniteWeylElement& z, const Root& gamma) {
  const RootDatum& d = fd.ambient();
  const SimpleSubset Jp = fd.lift(sd.J);
  const Coweight mu = fd.embed(sd.mu);
  const ExtAffineElement wt = fd.embed(sd.wtilde);
  const ExtAffineElement Z = ExtAffineElement::finite(z);
  const AdmOracle adm(fd.folded(), lambda);
  const auto in_folded_adm = [&](const ExtAffineElement& x) {
    try {
      return adm.contains(fd.restrict(x));
    } catch (const DomainError&) {
      return false;
    }
  };

  O5Report rep;
  rep.u = FiniteWeylElement::identity(d);
  const Root gJ = antidominant(d, gamma, Jp);
  rep.hypothesis = preceq(d, mu + d.coroot(gJ), fd.embed(lambda));
  const ExtAffineElement target =
      Z * wt * ExtAffineElement::finite(fd.underline_reflection(gamma)) * Z.inverse();
  rep.target_admissible = in_folded_adm(target);
  if (fd.iota(gamma) == gamma) return rep;

  const Root ig = fd.iota(gamma);
  const Root zeta = wedge(gamma, ig);
  const Root eps = gamma - zeta, ieps = fd.iota(eps);
  rep.chain.label = "o5";
  // u^{-1} zeta is J'-antidominant, reached by folded reflections in J'.
  Root cur = zeta;
  for (bool moved = true; moved;) {
    moved = false;
    for (int I : sd.J.indices()) {
      const int i = fd.orbits()[I][0];
      if (dot(d.simple_coroot(i), cur) > 0) {
        rep.u = rep.u * fd.simple_image(I);
        cur = fd.simple_image(I).apply(cur);
        moved = true;
        break;
      }
    }
  }
  if (!d.is_root(zeta) || cur != gJ) {
    rep.which = -1;
    rep.chain.steps.push_back({target, '>', "u could not be formed"});
    rep.chain.step_ok = {false};
    return rep;
  }
  const Coweight umu = rep.u.apply(mu);
  const auto T = [&](const Coweight& v) { return ExtAffineElement::translation(d, z.apply(v)); };
  const auto S = [&](const Root& r) {
    return ExtAffineElement::finite(FiniteWeylElement::reflection(d, z.apply(r)));
  };
  const Coweight zc = d.coroot(zeta);
  const Root big = zeta + eps + ieps;
  const int p_big = dot(umu, big), p_ze = dot(umu, zeta + eps), p_zie = dot(umu, zeta + ieps);
  auto& st = rep.chain.steps;
  if (p_big >= 1 && d.is_root(big)) {
    rep.which = 1;
    st.push_back({T(umu + zc), '>', "top"});
    st.push_back({T(umu + zc) * T(-zc) * S(zeta), '>', ""});
    st.push_back({T(umu) * S(zeta), '=', ""});
    st.push_back({T(umu) * S(zeta) * S(big), '>', ""});
    st.push_back({T(umu) * S(eps) * S(ieps) * S(gamma) * S(ig), '=', ""});
    st.push_back({target, '>', "target"});
  } else if (p_big <= 0 && p_ze == p_zie && p_ze >= 0) {
    rep.which = 2;
    st.push_back({T(umu + zc), '>', "top"});
    st.push_back({T(umu) * S(zeta), '>', ""});
    st.push_back({st.back().x * S(eps), '>', ""});
    st.push_back({st.back().x * S(ieps), '>', ""});
    st.push_back({st.back().x * S(zeta), '>', ""});
    st.push_back({T(umu) * S(gamma) * S(ig), '=', ""});
    st.push_back({target, '>', "target"});
  } else if (dot(umu, gamma) == -1 && dot(umu, eps) == 0 && dot(umu, ieps) == 0) {
    rep.which = 3;
    st.push_back({T(umu), '>', "top"});
    st.push_back({T(umu) * S(gamma) * S(ig), '>', ""});
    st.push_back({target, '>', "target"});
  } else {
    rep.which = -1;
    st.push_back({target, '>', "no case applies"});
    rep.chain.step_ok = {false};
    return rep;
  }
  replay(d, in_folded_adm(st.front().x), rep.chain, false);
  return rep;
}

bool G2Report::ok() const {
  if (hypothesis_failures != 0) return false;
  for (const G2ChainStat& c : chains)
    if (c.passed != c.instances || c.interval_passed != c.instances) return false;
  return !chains.empty();
}

G2Report g2_chain_suite(int lo, int hi, int cmax) {
  const RootDatum d = RootDatum::make('G', 2);
  // Root{beta, alpha}: index 0 is the short simple root.
  const Root be{{1, 0}}, al{{0, 1}};
  const auto R = [](int b, int a) { return Root{{b, a}}; };
  const std::vector<Root> gam = {R(1, 0), R(3, 1), R(2, 1), R(3, 2), R(1, 1)};
  const std::vector<Root> del = {R(0, 1), R(1, 1), R(3, 2), R(2, 1), R(3, 1)};
  const Coweight ac = d.coroot(al), bc = d.coroot(be);
  std::map<std::string, G2ChainStat> stats;
  const std::vector<std::string> order = {"C1",  "C2",  "C3",  "C4",  "C5",  "C1'", "C2'", "C3'",
                                          "C4'", "C5'", "J0a", "J0b", "J0c"};
  for (const auto& l : order) stats[l].label = l;
  G2Report rep;

  for (const HNInstance& inst : hn_instances(d, lo, hi, cmax)) {
    const ShortDatum& sd = inst.sd;
    const Coweight& mu = sd.mu;
    const AdmOracle adm(d, inst.lambda);
    if (sd.J == d.all()) continue;
    for (const FiniteWeylElement& z : min_coset_reps(d, sd.J)) {
      if (z.is_identity()) continue;
      const auto T = [&](const Coweight& v) { return ExtAffineElement::translation(d, z.apply(v)); };
      const auto S = [&](const Root& r) {
        return ExtAffineElement::finite(FiniteWeylElement::reflection(d, z.apply(r)));
      };
      const auto neg = [&](const Root& r) { return !d.is_positive(z.apply(r)); };
      std::vector<ChainReplay> chains;

      if (sd.J == SimpleSubset::of({1})) {
        const Coweight top = mu + ac + bc;
        if (dot(mu, al) != 1 || dot(mu, be) < 0 || !preceq(d, top, inst.lambda) || !neg(be) ||
            neg(al) || !(sd.wtilde == ExtAffineElement::translation(d, mu) * ExtAffineElement::finite(FiniteWeylElement::reflection(d, al)))) {
          ++rep.hypothesis_failures;
          continue;
        }
        int i = 0;
        while (i < 5 && !(neg(gam[i]) && (i == 4 || !neg(gam[i + 1])))) ++i;
        if (i == 5) {
          ++rep.hypothesis_failures;
          continue;
        }
        const ExtAffineElement tgt = T(mu) * S(al) * S(gam[i]);
        ChainReplay c;
        c.label = "C" + std::to_string(i + 1);
        auto& st = c.steps;
        st.push_back({T(top), '>', "top"});
        switch (i) {
          case 0:
            st.push_back({T(top) * T(-bc) * S(be), '>', ""});
            st.push_back({T(mu + ac) * S(be), '=', ""});
            break;
          case 1:
            st.push_back({T(mu) * S(R(3, 1)), '>', ""});
            break;
          case 2:
            st.push_back({T(mu) * S(R(3, 1)), '>', ""});
            st.push_back({st.back().x * S(R(3, 2)), '>', ""});
            st.push_back({st.back().x * S(R(1, 1)), '>', ""});
            st.push_back({T(mu) * S(R(2, 1)), '=', ""});
            break;
          case 3:
            st.push_back({T(mu) * S(R(3, 1)), '>', ""});
            st.push_back({st.back().x * S(al), '>', ""});
            st.push_back({T(mu) * S(al) * S(R(3, 2)), '=', ""});
            break;
          default:
            st.push_back({T(mu) * S(R(3, 1)), '>', ""});
            st.push_back({st.back().x * S(R(2, 1)), '>', ""});
            st.push_back({st.back().x * S(al), '>', ""});
            st.push_back({T(mu) * S(R(1, 1)), '=', ""});
            break;
        }
        st.push_back({tgt, '>', "target"});
        chains.push_back(std::move(c));
      } else if (sd.J == SimpleSubset::of({0})) {
        const Coweight top = mu + ac;
        if (dot(mu, be) != 1 || dot(mu, al + be) < 0 || !preceq(d, top, inst.lambda) || neg(be) ||
            !neg(al) || !(sd.wtilde == ExtAffineElement::translation(d, mu) * ExtAffineElement::finite(FiniteWeylElement::reflection(d, be)))) {
          ++rep.hypothesis_failures;
          continue;
        }
        int i = 0;
        while (i < 5 && !(neg(del[i]) && (i == 4 || !neg(del[i + 1])))) ++i;
        if (i == 5) {
          ++rep.hypothesis_failures;
          continue;
        }
        const ExtAffineElement tgt = T(mu) * S(be) * S(del[i]);
        ChainReplay c;
        c.label = "C" + std::to_string(i + 1) + "'";
        auto& st = c.steps;
        st.push_back({T(top), '>', "top"});
        st.push_back({T(mu) * S(al), '>', ""});
        switch (i) {
          case 0:
            break;
          case 1:
            st.push_back({st.back().x * S(R(3, 2)), '>', ""});
            st.push_back({T(mu) * S(be) * S(R(1, 1)), '=', ""});
            break;
          case 2:
            st.push_back({st.back().x * S(R(2, 1)), '>', ""});
            st.push_back({T(mu) * S(be) * S(R(3, 2)), '=', ""});
            break;
          case 3:
            st.push_back({st.back().x * S(R(3, 1)), '>', ""});
            st.push_back({T(mu) * S(be) * S(R(2, 1)), '=', ""});
            break;
          default:
            st.push_back({st.back().x * S(be), '>', ""});
            st.push_back({T(mu) * S(be) * S(R(3, 1)), '=', ""});
            break;
        }
        st.push_back({tgt, '>', "target"});
        chains.push_back(std::move(c));
      } else if (sd.J.empty()) {
        if (!is_dominant(d, mu) || !preceq(d, mu + ac, inst.lambda) ||
            !preceq(d, mu + ac + bc, inst.lambda)) {
          ++rep.hypothesis_failures;
          continue;
        }
        const Coweight top2 = mu + ac + bc;
        if (neg(al)) {
          ChainReplay c;
          c.label = "J0a";
          c.steps.push_back({T(mu + ac), '>', "top"});
          c.steps.push_back({T(mu + ac) * T(-ac) * S(al), '>', ""});
          c.steps.push_back({T(mu) * S(al), '=', "target"});
          chains.push_back(std::move(c));
        }
        if (neg(be) && neg(R(3, 1))) {
          ChainReplay c;
          c.label = "J0b";
          c.steps.push_back({T(top2), '>', "top"});
          c.steps.push_back({T(top2) * T(-d.coroot(R(3, 1))) * S(R(3, 1)), '>', ""});
          c.steps.push_back({T(mu) * S(R(3, 1)), '=', "target"});
          chains.push_back(std::move(c));
        }
        if (neg(be) && !neg(R(3, 1))) {
          ChainReplay c;
          c.label = "J0c";
          c.steps.push_back({T(top2), '>', "top"});
          c.steps.push_back({T(top2) * S(R(3, 1)), '>', ""});
          c.steps.push_back({T(mu) * S(be) * T(ac) * S(al), '>', ""});
          c.steps.push_back({T(mu) * S(be), '>', "target"});
          chains.push_back(std::move(c));
        }
      }

      for (ChainReplay& c : chains) {
        replay(d, adm.contains(c.steps.front().x), c, true);
        G2ChainStat& s = stats[c.label];
        ++s.instances;
        if (c.ok()) ++s.passed;
        if (c.interval_ok) ++s.interval_passed;
        if (!c.ok() && s.first_failure.empty()) {
          std::string why;
          for (std::size_t k = 0; k < c.step_ok.size(); ++k)
            if (!c.step_ok[k]) why += " step " + std::to_string(k);
          if (!c.interval_ok) why += " interval";
          s.first_failure = "lambda/mu instance failed at" + why;
        }
      }
    }
  }
  for (const auto& l : order) rep.chains.push_back(stats[l]);
  return rep;
}

}  // namespace adlv
