// Runs the eight primary acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "adlv/appendix_verify.hpp"
#include "oracles.hpp"

using namespace adlv;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Coweight> dominant_box(const RootDatum& d, int hi) {
  std::vector<Coweight> out;
  Coweight v;
  std::function<void(int)> rec = [&](int i) {
    if (i == d.rank()) {
      if (d.in_lattice(v)) out.push_back(v);
      return;
    }
    for (int k = 0; k <= hi; ++k) {
      v[i] = k;
      rec(i + 1);
    }
    v[i] = 0;
  };
  rec(0);
  return out;
}

// Shared between criteria 5, 6 and 7(d).
struct HypStats {
  long instances = 0, disconnected = 0, sym_checked = 0, sym_failed = 0;
  long pi0_checked = 0, pi0_mismatch = 0;
  std::string first_failure;
  double seconds = 0;
};

HypStats hyp_sweep() {
  const auto t0 = Clock::now();
  HypStats s;
  struct Case {
    char t;
    int n;
    Isogeny iso;
  };
  const std::vector<Case> cases = {
      {'A', 1, Isogeny::Adjoint},         {'A', 2, Isogeny::Adjoint},
      {'A', 3, Isogeny::Adjoint},         {'A', 1, Isogeny::SimplyConnected},
      {'A', 2, Isogeny::SimplyConnected}, {'A', 3, Isogeny::SimplyConnected},
      {'B', 2, Isogeny::Adjoint},         {'C', 2, Isogeny::Adjoint},
      {'D', 4, Isogeny::Adjoint},         {'G', 2, Isogeny::Adjoint},
  };
  for (const Case& c : cases) {
    const RootDatum d = RootDatum::make(c.t, c.n, c.iso);
    for (const HNInstance& h : hn_instances(d, -1, 2, 2)) {
      ++s.instances;
      const AdmOracle adm(d, h.lambda);
      const ConnectivityGraph g(d, adm, h.sd);
      const HypReport r = verify_hyp_prime(g);
      s.sym_checked += g.symmetry_checked();
      s.sym_failed += g.symmetry_failures();
      bool ok = r.connected && r.witness.size() == g.vertices().size();
      for (std::size_t v = 0; ok && v < r.witness.size(); ++v)
        for (int e : r.witness[v]) ok = ok && g.edges()[e].cert.valid();
      if (!ok) {
        ++s.disconnected;
        if (s.first_failure.empty()) s.first_failure = d.label();
      }
      ++s.pi0_checked;
      if (static_cast<int>(pi0_prediction(d, h.lambda, h.sd).size()) != d.pi1_order()) ++s.pi0_mismatch;
    }
  }
  s.seconds = since(t0);
  return s;
}

Verdict criterion1() {
  const auto t0 = Clock::now();
  const G2Report r = g2_chain_suite();
  const double t = since(t0);
  int instances = 0, passed = 0;
  for (const auto& c : r.chains) {
    instances += c.instances;
    passed += c.passed;
  }
  std::ostringstream os;
  os << r.chains.size() << " chains, " << passed << "/" << instances << " replays pass, " << t << " s";
  return {r.ok() && passed == instances && instances > 0 && t < 10, os.str()};
}

Verdict criterion2() {
  const auto t0 = Clock::now();
  long configs = 0, bad = 0, lifts = 0;
  bool e8_ok = false;
  for (auto [t, lo, hi] : {std::tuple{'A', 2, 5}, std::tuple{'D', 4, 7}, std::tuple{'E', 6, 8}})
    for (int n = lo; n <= hi; ++n) {
      const SeqSweep s = sweep_seq(RootDatum::make(t, n), 3, t == 'E' ? 100 : 0);
      configs += s.configs;
      lifts += s.lifts;
      bad += s.counts[static_cast<int>(SeqCase::Violation)] + s.lift_failures;
      if (t == 'E' && n == 8)
        e8_ok = s.pattern2_seen && s.pattern3_seen && s.counts[static_cast<int>(SeqCase::Case2)] == 2 &&
                s.counts[static_cast<int>(SeqCase::Case3)] == 1;
    }
  const double t = since(t0);
  std::ostringstream os;
  os << configs << " configs, " << lifts << " lifts, " << bad << " violations, E8 exceptional configs "
     << (e8_ok ? "found" : "MISSING") << ", " << t << " s";
  return {bad == 0 && e8_ok && t < 1800, os.str()};
}

Verdict criterion3() {
  const auto t0 = Clock::now();
  long configs = 0, cex = 0;
  std::vector<RootDatum> data;
  for (int n = 1; n <= 5; ++n) data.push_back(RootDatum::make('A', n));
  for (int n = 4; n <= 7; ++n) data.push_back(RootDatum::make('D', n));
  data.push_back(RootDatum::make('E', 6));
  for (const RootDatum& d : data) {
    const EmptySweep s = sweep_empty(d);
    configs += s.configs;
    cex += s.counterexamples;
  }
  const double t = since(t0);
  std::ostringstream os;
  os << configs << " reduced configs, " << cex << " counterexamples, " << t << " s";
  return {cex == 0 && configs > 0 && t < 1800, os.str()};
}

Verdict criterion4() {
  const auto t0 = Clock::now();
  long instances = 0, bad = 0;
  std::string where;
  for (auto [t, n, cmax] : {std::tuple{'A', 3, 2}, std::tuple{'A', 5, 1}, std::tuple{'D', 4, 1},
                            std::tuple{'D', 5, 1}, std::tuple{'D', 6, 1}, std::tuple{'E', 6, 1}}) {
    const FoldingDatum fd = FoldingDatum::make(t, n);
    for (const SuiteReport& r : folded_sweeps(fd, cmax)) {
      instances += r.instances;
      bad += r.violations;
      if (r.violations && where.empty()) where = fd.label() + " " + r.name;
    }
  }
  const double t = since(t0);
  std::ostringstream os;
  os << instances << " instances over 6 folds, " << bad << " violations";
  if (!where.empty()) os << " (first in " << where << ")";
  os << ", " << t << " s";
  return {bad == 0 && instances > 0 && t < 1200, os.str()};
}

Verdict criterion5(const HypStats& s) {
  std::ostringstream os;
  os << s.instances << " irreducible pairs, " << s.disconnected << " disconnected";
  if (!s.first_failure.empty()) os << " (first in " << s.first_failure << ")";
  os << ", " << s.seconds << " s";
  return {s.disconnected == 0 && s.instances > 0 && s.seconds < 1800, os.str()};
}

Verdict criterion6(const HypStats& s) {
  // The expected orders themselves.
  const bool orders = RootDatum::make('A', 1).pi1_order() == 2 && RootDatum::make('A', 2).pi1_order() == 3 &&
                      RootDatum::make('A', 2, Isogeny::SimplyConnected).pi1_order() == 1;
  std::ostringstream os;
  os << s.pi0_checked << " pairs, " << s.pi0_mismatch << " mismatches";
  return {orders && s.pi0_mismatch == 0 && s.pi0_checked > 0, os.str()};
}

Verdict criterion7(const HypStats& hs) {
  const auto t0 = Clock::now();
  long bruhat_pairs = 0, bruhat_bad = 0;
  for (char t : {'A', 'C', 'G'}) {
    const RootDatum d = RootDatum::make(t, 2);
    const AffineFrame f(d);
    const auto elems = elements_up_to(d, 6);
    for (const auto& y : elems) {
      const ElementSet below = oracle::subword_interval(f, y);
      for (const auto& x : elems) {
        ++bruhat_pairs;
        if (f.bruhat_leq(x, y) != (below.count(x) > 0)) ++bruhat_bad;
      }
    }
  }
  long straight_checked = 0, straight_bad = 0;
  for (auto [t, n] : {std::pair{'A', 1}, std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'C', 2},
                      std::pair{'G', 2}, std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}}) {
    const RootDatum d = RootDatum::make(t, n);
    for (const auto& x : elements_up_to(d, 6)) {
      ++straight_checked;
      const bool by_newton = Rational(length(d, x)) == pair_two_rho(d, dominant(d, newton_point(d, x)));
      if (is_straight(d, x) != by_newton) ++straight_bad;
    }
  }
  long mono_checked = 0, mono_bad = 0;
  for (auto [t, n] : {std::pair{'A', 1}, std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'C', 2},
                      std::pair{'G', 2}, std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}}) {
    const RootDatum d = RootDatum::make(t, n);
    const auto box = dominant_box(d, 2);
    for (const auto& lambda : box) {
      const AdmOracle big(d, lambda);
      for (const auto& small : box) {
        if (!preceq(d, small, lambda)) continue;
        ++mono_checked;
        // Adm(small) is the union of the lower intervals of its maximal translations.
        for (const auto& v : weyl_orbit(d, small))
          if (!big.contains(ExtAffineElement::translation(d, v))) {
            ++mono_bad;
            break;
          }
      }
    }
  }
  const double t = since(t0);
  std::ostringstream os;
  os << "bruhat " << bruhat_pairs - bruhat_bad << "/" << bruhat_pairs << ", straight " << straight_checked - straight_bad
     << "/" << straight_checked << ", monotone " << mono_checked - mono_bad << "/" << mono_checked
     << ", permissibility symmetry " << hs.sym_checked - hs.sym_failed << "/" << hs.sym_checked << ", " << t << " s";
  const bool pass = bruhat_bad == 0 && straight_bad == 0 && mono_bad == 0 && hs.sym_failed == 0 &&
                    bruhat_pairs > 0 && straight_checked > 0 && mono_checked > 0 && hs.sym_checked > 0 && t < 600;
  return {pass, os.str()};
}

Verdict criterion8() {
  const auto t0 = Clock::now();
  const auto suites = lemma_suites(100);
  bool pass = suites.size() == 14;
  long smallest = -1;
  std::string bad;
  for (const SuiteReport& r : suites) {
    if (smallest < 0 || r.instances < smallest) smallest = r.instances;
    if (r.violations > 0 || r.instances < 100) {
      pass = false;
      bad += " " + r.name;
    }
  }
  std::ostringstream os;
  os << suites.size() << " suites, fewest instances " << smallest;
  if (!bad.empty()) os << ", failing:" << bad;
  os << ", " << since(t0) << " s";
  return {pass, os.str()};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int k, const Verdict& v) {
    std::printf("%s criterion %d: %s\n", v.pass ? "PASS" : "FAIL", k, v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  };
  report(1, criterion1());
  report(2, criterion2());
  report(3, criterion3());
  report(4, criterion4());
  const HypStats hs = hyp_sweep();
  report(5, criterion5(hs));
  report(6, criterion6(hs));
  report(7, criterion7(hs));
  report(8, criterion8());
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
