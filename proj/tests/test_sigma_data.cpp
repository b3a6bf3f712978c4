#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "adlv/sigma_data.hpp"

using namespace adlv;

namespace {

struct TypeRank {
  char t;
  int n;
};

const TypeRank kSmall[] = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2},
                           {'G', 2}, {'B', 3}, {'C', 3}, {'A', 4}, {'D', 4}};

}  // namespace

TEST_CASE("short data from translations") {
  RootDatum a1 = RootDatum::make('A', 1);
  auto r = short_from_straight(a1, ExtAffineElement::translation(a1, a1.simple_coroot(0)));
  CHECK(r.z.is_identity());
  CHECK(r.sd.wtilde == ExtAffineElement::translation(a1, a1.simple_coroot(0)));
  auto neg = short_from_straight(a1, ExtAffineElement::translation(a1, -a1.simple_coroot(0)));
  CHECK(neg.z == FiniteWeylElement::simple(a1, 0));
  CHECK(neg.sd.wtilde == ExtAffineElement::translation(a1, a1.simple_coroot(0)));
  CHECK_THROWS_AS(short_from_straight(a1, ExtAffineElement::translation(a1, a1.simple_coroot(0)) *
                                              ExtAffineElement::finite(FiniteWeylElement::simple(a1, 0))),
                  DomainError);

  // A superbasic element of adjoint A2: length zero, Newton point zero.
  RootDatum a2 = RootDatum::make('A', 2);
  auto omega = omega_elements(a2);
  REQUIRE(omega.size() == 3);
  auto sb = short_from_straight(a2, omega[1]);
  CHECK(sb.sd.J_nu == a2.all());
  CHECK(AffineFrame(a2, sb.sd.J_nu).length(sb.sd.wtilde) == 0);
  CHECK(is_short(a2, sb.sd.wtilde));
}

TEST_CASE("short elements are unique per class") {
  for (TypeRank tr : {TypeRank{'A', 2}, TypeRank{'C', 2}, TypeRank{'G', 2}}) {
    RootDatum d = RootDatum::make(tr.t, tr.n);
    std::vector<std::pair<std::pair<std::vector<int>, RationalCoweight>, ExtAffineElement>> seen;
    for (const auto& x : elements_up_to(d, 5)) {
      if (!is_straight(d, x)) continue;
      auto r = short_from_straight(d, x);
      CHECK(is_short(d, r.sd.wtilde));
      CHECK(is_weakly_dominant(d, r.sd.mu));
      CHECK(in_min_cosets(r.z, d, r.sd.J_nu));
      CHECK(ExtAffineElement::finite(r.z) * r.sd.wtilde * ExtAffineElement::finite(r.z.inverse()) == x);
      std::pair key{kottwitz(d, x), dominant(d, newton_point(d, x))};
      bool found = false;
      for (const auto& [k, w] : seen)
        if (k == key) {
          found = true;
          CHECK(w == r.sd.wtilde);
        }
      if (!found) seen.push_back({key, r.sd.wtilde});
    }
    CHECK(seen.size() >= 3);
  }
}

TEST_CASE("short data invariants") {
  for (TypeRank tr : kSmall) {
    RootDatum d = RootDatum::make(tr.t, tr.n);
    for (const ShortDatum& sd : short_data(d, -1, 2)) {
      CHECK(is_short(d, sd.wtilde));
      CHECK(is_weakly_dominant(d, sd.mu));
      CHECK(sd.J.subset_of(sd.J_nu));
      CHECK(sd.K.subset_of(sd.J));
      CHECK(sd.wtilde == ExtAffineElement(sd.mu, sd.wK * sd.wJ));
    }
  }
}

TEST_CASE("hodge-newton classification") {
  RootDatum a1 = RootDatum::make('A', 1);
  auto basic = short_datum(a1, a1.all(), Coweight{});
  REQUIRE(basic);
  CHECK(hn_classify(a1, Coweight{}, *basic).tag == HNTag::CentralTranslation);
  CHECK(hn_classify(a1, a1.simple_coroot(0), *basic).tag == HNTag::Irreducible);
  auto odd = hn_classify(a1, a1.fundamental_coweight(0), *basic);
  CHECK(odd.tag == HNTag::NotComparable);
  CHECK(odd.reason == "kottwitz classes differ");
  CHECK_THROWS_AS(pi0_prediction(a1, Coweight{}, *basic), DomainError);
  CHECK(pi0_prediction(a1, a1.simple_coroot(0), *basic).size() == 2);

  RootDatum a2 = RootDatum::make('A', 2);
  auto b2 = short_datum(a2, a2.all(), Coweight{});
  REQUIRE(b2);
  Coweight lam = a2.simple_coroot(0) + a2.simple_coroot(1);
  CHECK(pi0_prediction(a2, lam, *b2).size() == 3);

  RootDatum a2sc = RootDatum::make('A', 2, Isogeny::SimplyConnected);
  auto b3 = short_datum(a2sc, a2sc.all(), Coweight{});
  REQUIRE(b3);
  CHECK(pi0_prediction(a2sc, lam, *b3).size() == 1);
}

TEST_CASE("c-set") {
  RootDatum g2 = RootDatum::make('G', 2);
  // J = {short simple root}.
  for (const auto& sd : short_data(g2, -1, 2)) {
    if (!(sd.J == SimpleSubset::of({0}))) continue;
    auto cs = c_set(g2, 10 * g2.rho_check(), sd);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == g2.simple_root(1));
  }
  RootDatum a3 = RootDatum::make('A', 3);
  for (const auto& sd : short_data(a3, -1, 1)) {
    Coweight lambda = dominant(a3, sd.mu) + 8 * a3.rho_check();
    auto cs = c_set(a3, lambda, sd);
    for (int k = 0; k < a3.num_positive(); ++k) {
      const Root& a = a3.positive_root(k);
      Coweight ac = a3.coroot(a);
      bool expect = !in_span(a, sd.J) && preceq(a3, sd.mu + ac, lambda);
      for (const Root& b : a3.positive_roots())
        if (in_span(b, sd.J)) expect = expect && std::abs(dot(ac, b)) <= 1;
      for (int j : sd.J.indices()) expect = expect && dot(ac, a3.simple_root(j)) <= 0;
      CHECK((std::find(cs.begin(), cs.end(), a) != cs.end()) == expect);
    }
    if (sd.J.empty()) CHECK(cs.size() == static_cast<std::size_t>(a3.num_positive()));
  }
}

TEST_CASE("rank two subsystems") {
  RootDatum g2 = RootDatum::make('G', 2);
  CHECK(rank_two_roots(g2, g2.simple_root(0), g2.simple_root(1)).size() == 12);
  RootDatum b3 = RootDatum::make('B', 3);
  CHECK(rank_two_roots(b3, b3.simple_root(0), b3.simple_root(1)).size() == 6);
  CHECK(rank_two_roots(b3, b3.simple_root(1), b3.simple_root(2)).size() == 8);
  CHECK(rank_two_roots(b3, b3.simple_root(0), b3.simple_root(0)).size() == 2);
}

TEST_CASE("lemma sweeps over irreducible pairs") {
  int total = 0, spans = 0, teqs = 0;
  for (TypeRank tr : kSmall) {
    RootDatum d = RootDatum::make(tr.t, tr.n);
    int cmax = d.rank() >= 4 ? 1 : 2;
    auto inst = hn_instances(d, -1, 2, cmax);
    CHECK(!inst.empty());
    std::mt19937 rng(17);
    std::shuffle(inst.begin(), inst.end(), rng);
    if (inst.size() > 120) inst.resize(120);
    for (const auto& [lambda, sd] : inst) {
      ++total;
      CHECK(preceq(d, sd.mu, lambda));
      // Adding a simple coroot outside J stays below lambda.
      for (int i = 0; i < d.rank(); ++i)
        if (!sd.J.contains(i)) CHECK(leq_coroot(d, sd.mu + d.simple_coroot(i), lambda));
      for (int k = 0; k < d.num_positive(); ++k) {
        const Root& g = d.positive_root(k);
        // J-dominant roots outside the Newton Levi pair positively with mu.
        if (!in_span(g, sd.J_nu) && dominant(d, g, sd.J) == g) CHECK(dot(sd.mu, g) >= 1);
        // Roots fixed by mu and by their J-antidominant conjugate only grow under w^{-1}.
        if (!in_span(g, sd.J) && dot(sd.mu, g) == 0 && dot(sd.mu, antidominant(d, g, sd.J)) == 0)
          CHECK(leq_root(g, sd.w.inverse().apply(g), sd.J));
      }
      CHECK(span_check(d, lambda, sd));
      ++spans;
      AdmOracle adm(d, lambda);
      for (const Root& a : c_set(d, lambda, sd)) {
        TeqReport r = teq_elements(d, adm, sd, a);
        CHECK(r.ok());
        ++teqs;
      }
      CHECK(pi0_prediction(d, lambda, sd).size() == static_cast<std::size_t>(d.pi1_order()));
    }
  }
  CHECK(total >= 100);
  CHECK(spans >= 100);
  CHECK(teqs >= 100);
}

TEST_CASE("conjugate roots in simply laced levis") {
  for (TypeRank tr : {TypeRank{'A', 4}, TypeRank{'D', 5}, TypeRank{'E', 6}, TypeRank{'A', 6},
                      TypeRank{'D', 6}}) {
    RootDatum d = RootDatum::make(tr.t, tr.n);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      SimpleSubset J{static_cast<std::uint32_t>(rng() % (1u << d.rank()))};
      for (const Root& g : d.positive_roots())
        for (const Root& h : d.positive_roots()) {
          if (in_span(g, J) || in_span(h, J)) continue;
          if (!in_span(g - h, J) && !(g == h)) continue;
          // Same J-dominant conjugate.
          CHECK(dominant(d, g, J) == dominant(d, h, J));
        }
    }
  }
}
