#include "adlv/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace adlv {

namespace {

// A nonzero vector with nonnegative simple-root coefficients.
bool positive_vec(const Root& a) {
  bool nonzero = false;
  for (int x : a.c) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

bool is_positive_root(const RootDatum& d, const Root& a) { return d.is_root(a) && positive_vec(a); }

Root sum_of(const RootDatum& d, const std::vector<int>& idx, std::size_t from, std::size_t to) {
  Root s;
  for (std::size_t k = from; k < to; ++k) s += d.simple_root(idx[k]);
  return s;
}

ExtAffineElement conjugate(const ShortDatum& sd, const FiniteWeylElement& z) {
  auto Z = ExtAffineElement::finite(z);
  return Z * sd.wtilde * Z.inverse();
}

}  // namespace

Permissibility is_permissible(const RootDatum& d, const ShortDatum& sd, const FiniteWeylElement& z,
                              const Root& alpha) {
  if (!is_positive_root(d, alpha)) throw DomainError("permissibility needs a positive root");
  if (in_span(z.inverse().apply(alpha), sd.J))
    throw DomainError("root lies in z(Phi_J); permissibility is undefined there");
  const ExtAffineElement x = conjugate(sd, z);
  const Coweight& mu = x.translation_part();
  const FiniteWeylElement& w = x.finite_part();
  const FiniteWeylElement wi = w.inverse();
  const Root wa = w.apply(alpha), wia = wi.apply(alpha);
  Permissibility p;
  if (!(dot(mu, alpha) == 0 && dot(mu, wa) == 0)) p.failing = 1;
  else if (!(!positive_vec(wa) && !positive_vec(wia))) p.failing = 2;
  else if (!(is_positive_root(d, alpha + wa) && is_positive_root(d, alpha + wia))) p.failing = 3;
  else if (dot(d.coroot(alpha), wa) != -1) p.failing = 4;
  p.permissible = p.failing != 0;
  return p;
}

bool permissibility_symmetry_check(const RootDatum& d, const ShortDatum& sd,
                                   const FiniteWeylElement& z, const Root& alpha) {
  FiniteWeylElement other = FiniteWeylElement::reflection(d, alpha) * z;
  return is_permissible(d, sd, z, alpha).permissible ==
         is_permissible(d, sd, other, alpha).permissible;
}

EdgeCertificate certify_edge(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                             const FiniteWeylElement& z, const Root& gamma) {
  EdgeCertificate c;
  c.from = z;
  c.gamma = gamma;
  const FiniteWeylElement s = FiniteWeylElement::reflection(d, gamma);
  c.to = s * z;
  const ExtAffineElement x = conjugate(sd, z), S = ExtAffineElement::finite(s);
  c.adm_right = adm.contains(x * S);
  c.adm_left = adm.contains(S * x);
  c.evidence = AdmEvidence::Oracle;
  c.perm = is_permissible(d, sd, z, gamma);
  return c;
}

EdgeCertificate certify_edge_by_bound(const RootDatum& d, const Coweight& lambda,
                                      const ShortDatum& sd, const FiniteWeylElement& z,
                                      const Root& gamma) {
  EdgeCertificate c;
  c.from = z;
  c.gamma = gamma;
  c.to = FiniteWeylElement::reflection(d, gamma) * z;
  Root g = z.inverse().apply(gamma);
  if (!positive_vec(g)) g = -g;
  c.perm = is_permissible(d, sd, z, gamma);
  bool in = in_min_cosets(c.from, d, sd.J) && in_min_cosets(c.to, d, sd.J) &&
            preceq(d, sd.mu + d.coroot(antidominant(d, g, sd.J)), lambda);
  c.adm_right = c.adm_left = in;
  c.evidence = AdmEvidence::DominanceBound;
  return c;
}

std::optional<EdgeCertificate> edge(const RootDatum& d, const AdmOracle& adm, const ShortDatum& sd,
                                    const FiniteWeylElement& z, const Root& gamma) {
  if (!is_positive_root(d, gamma)) return std::nullopt;
  FiniteWeylElement to = FiniteWeylElement::reflection(d, gamma) * z;
  if (!in_min_cosets(z, d, sd.J) || !in_min_cosets(to, d, sd.J)) return std::nullopt;
  EdgeCertificate c = certify_edge(d, adm, sd, z, gamma);
  if (!c.valid()) return std::nullopt;
  return c;
}

ConnectivityGraph::ConnectivityGraph(const RootDatum& d, const AdmOracle& adm,
                                     const ShortDatum& sd)
    : d_(&d), sd_(sd) {
  verts_ = min_coset_reps(d, sd.J);
  for (std::size_t k = 0; k < verts_.size(); ++k) index_.emplace(verts_[k], static_cast<int>(k));
  adj_.resize(verts_.size());
  std::vector<FiniteWeylElement> refl;
  for (const Root& g : d.positive_roots()) refl.push_back(FiniteWeylElement::reflection(d, g));
  for (std::size_t a = 0; a < verts_.size(); ++a) {
    for (int k = 0; k < d.num_positive(); ++k) {
      auto it = index_.find(refl[k] * verts_[a]);
      if (it == index_.end()) continue;
      const int b = it->second;
      const Root& g = d.positive_root(k);
      ++sym_checked_;
      if (!permissibility_symmetry_check(d, sd, verts_[a], g)) ++sym_failed_;
      if (b < static_cast<int>(a)) continue;
      EdgeCertificate c = certify_edge(d, adm, sd, verts_[a], g);
      if (!c.valid()) continue;
      const int e = static_cast<int>(edges_.size());
      edges_.push_back({static_cast<int>(a), b, k, c});
      adj_[a].push_back({b, e});
      adj_[b].push_back({static_cast<int>(a), e});
    }
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int ConnectivityGraph::index_of(const FiniteWeylElement& z) const {
  auto it = index_.find(z);
  return it == index_.end() ? -1 : it->second;
}

std::optional<std::vector<int>> ConnectivityGraph::path(int a, int b) const {
  std::vector<int> via(verts_.size(), -2);
  via[a] = -1;
  std::deque<int> queue{a};
  while (!queue.empty() && via[b] == -2) {
    int v = queue.front();
    queue.pop_front();
    for (auto [u, e] : adj_[v])
      if (via[u] == -2) {
        via[u] = e;
        queue.push_back(u);
      }
  }
  if (via[b] == -2) return std::nullopt;
  std::vector<int> out;
  for (int v = b; v != a;) {
    int e = via[v];
    out.push_back(e);
    v = edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

HypReport verify_hyp_prime(const ConnectivityGraph& g) {
  HypReport r;
  const int n = static_cast<int>(g.vertices().size());
  const int root = g.index_of(FiniteWeylElement(g.root_datum().rank()));
  std::vector<int> via(n, -2);
  via[root] = -1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [u, e] : g.neighbors(v))
      if (via[u] == -2) {
        via[u] = e;
        queue.push_back(u);
      }
  }
  r.witness.resize(n);
  for (int v = 0; v < n; ++v) {
    if (via[v] == -2) {
      r.unreached.push_back(v);
      continue;
    }
    for (int u = v; u != root;) {
      int e = via[u];
      r.witness[v].push_back(e);
      u = g.edges()[e].a == u ? g.edges()[e].b : g.edges()[e].a;
    }
    std::reverse(r.witness[v].begin(), r.witness[v].end());
  }
  r.connected = r.unreached.empty();
  return r;
}

std::optional<Descent> find_descent(const ConnectivityGraph& g, int zi) {
  const RootDatum& d = g.root_datum();
  const FiniteWeylElement& z = g.vertices()[zi];
  for (const Root& gamma : d.positive_roots()) {
    if (positive_vec(z.apply(gamma))) continue;
    int t = g.index_of(z * FiniteWeylElement::reflection(d, gamma));
    if (t < 0) continue;
    if (auto p = g.path(zi, t)) return Descent{gamma, *p};
  }
  return std::nullopt;
}

XiSets xi_sets(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd) {
  XiSets out;
  for (const Root& a : d.positive_roots()) {
    Root aj = antidominant(d, a, sd.J);
    bool in_xi = preceq(d, sd.mu + d.coroot(aj), lambda);
    if (in_xi) out.xi.push_back(a);
    if (!in_span(a, sd.J) && dot(sd.mu, aj) == -1) {
      out.xi1.push_back(a);
      if (!in_xi) out.contained = false;
    }
  }
  return out;
}

std::vector<Root> levi_orbit(const RootDatum& d, const Root& a, SimpleSubset J) {
  std::vector<Root> out{a};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int j : J.indices()) {
      Root b = apply_simple(d, j, out[k]);
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
  return out;
}

namespace {

struct SeqChoice {
  int which = 0;
  std::vector<int> eta;
};

// Sequence eta_1..eta_n for the ladder; case 1 uses the geodesic alone, the two
// E8 exceptions prepend beta, xi_1, xi_2 (and epsilon twice in the third case).
SeqChoice choose_sequence(const RootDatum& d, const Coweight& mu, const std::vector<int>& geo,
                          bool swap_xi) {
  const int alpha = geo.back(), beta = geo.front();
  Coweight v = mu;
  for (int i : geo) v += d.simple_coroot(i);
  if (is_weakly_dominant(d, v)) return {1, geo};
  if (!(d.type() == 'E' && d.rank() == 8)) return {};
  auto with = [&](std::vector<int> head) {
    // xi_1, xi_2 sit just before the trailing entries of the head.
    const std::size_t x = head.size() == 3 ? 1 : 2;
    if (swap_xi) std::swap(head[x], head[x + 1]);
    head.insert(head.end(), geo.begin(), geo.end());
    return head;
  };
  auto check = [&](const std::vector<int>& head) {
    Coweight u = v;
    for (int i : head) u += d.simple_coroot(i);
    return is_weakly_dominant(d, u);
  };
  // Bourbaki labels 1..8 shifted to 0..7.
  if (beta == 3 && (alpha == 0 || alpha == 7)) {
    std::vector<int> head = alpha == 0 ? std::vector<int>{3, 1, 4} : std::vector<int>{3, 1, 2};
    if (check(head)) return {2, with(head)};
  }
  if (beta == 4 && alpha == 7) {
    std::vector<int> head{4, 3, 1, 2, 3};
    if (check(head)) return {3, with(head)};
  }
  return {};
}

}  // namespace

ChainDossier simply_laced_chain(const RootDatum& d, const Coweight& lambda, const ShortDatum& sd,
                                const FiniteWeylElement& z, const AdmOracle* adm) {
  if (!d.simply_laced()) throw DomainError("chain builder needs a simply laced root system");
  if (z.is_identity() || !in_min_cosets(z, d, sd.J))
    throw DomainError("chain builder needs a nontrivial minimal coset representative");
  const SimpleSubset J = sd.J;
  const Coweight& mu = sd.mu;
  ChainDossier out;
  auto certify = [&](const FiniteWeylElement& from, const Root& gamma) {
    return adm ? certify_edge(d, *adm, sd, from, gamma)
               : certify_edge_by_bound(d, lambda, sd, from, gamma);
  };
  auto fail = [&](std::string s) { out.failures.push_back(std::move(s)); };
  auto add_edge = [&](const FiniteWeylElement& from, const Root& gamma,
                      const FiniteWeylElement& expect) {
    if (!is_positive_root(d, gamma)) {
      fail("edge label is not a positive root");
      return;
    }
    EdgeCertificate c = certify(from, gamma);
    if (!(c.to == expect)) fail("edge lands on the wrong element");
    if (!c.valid()) fail("edge certificate rejected");
    out.edges.push_back(c);
  };

  XiSets xs = xi_sets(d, lambda, sd);
  std::vector<Root> dprime;
  for (const Root& a : xs.xi)
    if (!positive_vec(z.apply(a))) dprime.push_back(a);

  if (!dprime.empty()) {
    out.branch = "single";
    // Maximal elements of D' under <=_J, highest first.
    std::vector<Root> maxima;
    for (const Root& a : dprime) {
      bool top = true;
      for (const Root& b : dprime)
        if (!(a == b) && leq_root(a, b, J)) top = false;
      if (top) maxima.push_back(a);
    }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [&](const Root& a, const Root& b) { return d.height(a) > d.height(b); });
    for (const Root& delta : maxima) {
      FiniteWeylElement to = z * FiniteWeylElement::reflection(d, delta);
      if (!in_min_cosets(to, d, J)) continue;
      EdgeCertificate c = certify(z, -z.apply(delta));
      if (!c.valid()) continue;
      out.delta = out.gamma = delta;
      out.z_chain = {z, to};
      out.edges.push_back(c);
      return out;
    }
    fail("no maximal root of D' gives a certified descent edge");
    return out;
  }

  out.branch = "ladder";
  std::vector<int> d1, d2;
  for (int i = 0; i < d.rank(); ++i) {
    if (!positive_vec(z.apply(d.simple_root(i)))) d1.push_back(i);
    if (mu[i] == -1) d2.push_back(i);
  }
  if (d2.empty()) {
    fail("mu has no simple root with pairing -1");
    return out;
  }
  int best = 1 << 20;
  for (int a : d1)
    for (int b : d2)
      if (d.dist(a, b) < best) {
        best = d.dist(a, b);
        out.alpha = a;
        out.beta = b;
      }
  out.geodesic = d.geodesic(out.beta, out.alpha);
  if (mu[out.alpha] < 0) fail("sequence hypothesis (i) fails");
  for (std::size_t k = 1; k < out.geodesic.size(); ++k)
    if (mu[out.geodesic[k]] < 0) fail("sequence hypothesis (ii) fails");

  bool swapped = false;
  while (true) {
    SeqChoice seq = choose_sequence(d, mu, out.geodesic, swapped);
    if (seq.which == 0) {
      fail("no sequence case applies");
      return out;
    }
    out.seq_case = seq.which;
    out.eta = seq.eta;
    const int n = static_cast<int>(out.eta.size());
    out.theta = sum_of(d, out.eta, 0, n);
    // s_{eta_i} ... s_{eta_{n-1}}(eta_n) = eta_n + ... + eta_i.
    Root r = d.simple_root(out.eta[n - 1]);
    for (int i = n - 2; i >= 0; --i) {
      r = apply_simple(d, out.eta[i], r);
      if (!(r == sum_of(d, out.eta, i, n))) fail("reflection ladder does not telescope");
    }
    if (!preceq(d, mu + d.coroot(out.theta), lambda)) fail("mu + theta-check is not below lambda");
    if (!positive_vec(z.apply(out.theta))) fail("z(theta) is negative");
    out.i0 = 0;
    for (int i = 1; i <= n - 1; ++i)
      if (!positive_vec(z.apply(sum_of(d, out.eta, i, n)))) {
        out.i0 = i;
        break;
      }
    if (out.i0 == 0) {
      fail("no index i0");
      return out;
    }
    out.delta = sum_of(d, out.eta, out.i0, n);
    const bool star = (seq.which == 3 && out.i0 == 4) || (seq.which == 2 && out.i0 == 3);
    if (star) {
      auto pos = [&](int i) {
        return positive_vec(z.apply(out.delta + d.simple_root(out.eta[i - 1])));
      };
      if (!(pos(out.i0) && pos(out.i0 - 1))) {
        if (!swapped) {
          swapped = true;
          out.failures.clear();
          continue;
        }
        fail("no ordering of xi_1, xi_2 meets the exchange condition");
      }
    }
    break;
  }

  // gamma: the highest W_J-conjugate of delta above it with z(gamma) < 0.
  bool found = false;
  for (const Root& g : levi_orbit(d, out.delta, J)) {
    if (!leq_root(out.delta, g, J) || positive_vec(z.apply(g))) continue;
    if (!found || d.height(g) > d.height(out.gamma) ||
        (d.height(g) == d.height(out.gamma) && g < out.gamma)) {
      out.gamma = g;
      found = true;
    }
  }
  if (!found) {
    fail("no conjugate gamma");
    return out;
  }
  const int i0 = out.i0;
  const Root diff = out.gamma - out.delta;
  if (diff[out.eta[i0 - 1]] != 0) fail("eta_i0 lies in the support of gamma - delta");
  for (int i = 1; i <= i0; ++i) {
    const Coweight ec = d.simple_coroot(out.eta[i - 1]);
    if (dot(ec, out.gamma) != dot(ec, out.delta)) fail("eta pairings with gamma and delta differ");
  }

  const FiniteWeylElement sg = FiniteWeylElement::reflection(d, out.gamma);
  const FiniteWeylElement zs = z * sg;
  if (!in_min_cosets(zs, d, J)) fail("z s_gamma is not minimal");
  std::vector<FiniteWeylElement> zi{z}, zpi{zs};
  for (int i = 1; i <= i0; ++i) {
    // z_i = z s_{eta_i} ... s_{eta_1} = z s_{eta_i} z^{-1} z_{i-1}.
    const Root a = z.apply(d.simple_root(out.eta[i - 1]));
    const Root b = zs.apply(d.simple_root(out.eta[i - 1]));
    if (!positive_vec(a) || !positive_vec(b)) fail("z(eta_i) or z s_gamma(eta_i) is negative");
    zi.push_back(FiniteWeylElement::reflection(d, a) * zi.back());
    zpi.push_back(FiniteWeylElement::reflection(d, b) * zpi.back());
    if (!in_min_cosets(zi.back(), d, J) || !in_min_cosets(zpi.back(), d, J))
      fail("ladder element is not minimal");
    for (auto [from, root] : {std::pair{zi[i - 1], a}, std::pair{zpi[i - 1], b}}) {
      if (!positive_vec(root) || in_span(from.inverse().apply(root), J)) continue;
      Permissibility p = is_permissible(d, sd, from, root);
      if (!(p.permissible && p.failing <= 3)) fail("ladder root fails the three-condition test");
    }
  }

  out.z_chain = zi;
  for (int i = i0; i >= 0; --i) out.z_chain.push_back(zpi[i]);
  for (int i = 1; i <= i0; ++i)
    add_edge(zi[i - 1], z.apply(d.simple_root(out.eta[i - 1])), zi[i]);
  add_edge(zi[i0], -z.apply(out.gamma), zpi[i0]);
  for (int i = i0; i >= 1; --i)
    add_edge(zpi[i], zs.apply(d.simple_root(out.eta[i - 1])), zpi[i - 1]);
  return out;
}

}  // namespace adlv
