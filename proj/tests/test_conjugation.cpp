#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cox/conjugation.hpp"
#include "samples.hpp"

using namespace cox;

TEST_CASE("non-decreasing neighbour steps are definitional") {
  Group g(samples::a2tilde());
  for (const Element& w : g.ball(4, {}, false)) {
    std::vector<ConjugationStep> steps = uplus_neighbors(g, w, GenSet::all(g.rank()));
    std::set<int> seen;
    for (const ConjugationStep& st : steps) {
      CHECK(st.from == w);
      CHECK(st.to == g.conjugate_by_generator(w, st.generator));
      CHECK(st.delta == static_cast<int>(st.to.length()) - static_cast<int>(w.length()));
      CHECK(st.delta >= 0);
      seen.insert(st.generator);
    }
    // no delta >= 0 conjugation is missing
    for (int s = 0; s < g.rank(); ++s) {
      Element c = g.conjugate_by_generator(w, s);
      if (c.length() >= w.length()) CHECK(seen.count(s) == 1);
    }
  }
}

TEST_CASE("growth search on the infinite dihedral group") {
  Group g(samples::dinf());
  UplusSearchResult res = uplus_bfs(g, g.generator(0), GenSet::all(2), 4);
  REQUIRE(std::holds_alternative<GrowthCertificate>(res));
  const GrowthCertificate& cert = std::get<GrowthCertificate>(res);
  CHECK(cert.gain >= 4);
  CHECK(cert.steps.size() == 2);  // s -> tst -> ststs is forced
  std::string err;
  CHECK(replay_growth_certificate(g, g.generator(0), cert, &err));
}

TEST_CASE("exhaustion on finite groups") {
  Group g(samples::a2());
  UplusSearchResult res = uplus_bfs(g, g.generator(0), GenSet::all(2), 4);
  REQUIRE(std::holds_alternative<Exhausted>(res));
  // the reachable set stays within the conjugacy class closure
  for (const Element& w : std::get<Exhausted>(res).reachable)
    CHECK(w.length() >= 1);
}

TEST_CASE("budget exhaustion is reported") {
  Group g(samples::q444());
  SearchBudget tiny{2, 5};
  UplusSearchResult res = uplus_bfs(g, g.generator(0), GenSet::all(3), 100, tiny);
  CHECK(std::holds_alternative<BudgetExceeded>(res));
}

TEST_CASE("flat closures") {
  Group gd(samples::dinf());
  auto fc = flat_closure(gd, gd.from_word({0, 1}), 1000);
  REQUIRE(std::holds_alternative<std::vector<Element>>(fc));
  const auto& closure = std::get<std::vector<Element>>(fc);
  CHECK(closure == std::vector<Element>{gd.from_word({0, 1}), gd.from_word({1, 0})});

  Group ga(samples::a2());
  auto fa = flat_closure(ga, ga.generator(0), 1000);
  CHECK(std::get<std::vector<Element>>(fa).size() == 1);  // tst is longer, sss is absorbed
}

TEST_CASE("certificate replay rejects tampering") {
  Group g(samples::dinf());
  UplusSearchResult res = uplus_bfs(g, g.generator(0), GenSet::all(2), 4);
  GrowthCertificate cert = std::get<GrowthCertificate>(res);
  std::string err;

  GrowthCertificate broken = cert;
  broken.gain += 2;
  CHECK_FALSE(replay_growth_certificate(g, g.generator(0), broken, &err));

  broken = cert;
  broken.steps[1].to = g.generator(1);
  CHECK_FALSE(replay_growth_certificate(g, g.generator(0), broken, &err));

  broken = cert;
  broken.steps[0].delta = 0;
  CHECK_FALSE(replay_growth_certificate(g, g.generator(0), broken, &err));

  // wrong start element
  CHECK_FALSE(replay_growth_certificate(g, g.generator(1), cert, &err));
}

TEST_CASE("bounded conjugacy classes, brute force cross-check") {
  for (const CoxeterSystem& sys : {samples::a2(), samples::b2()}) {
    Group g(sys);
    for (const Element& w : g.ball(10, {}, false)) {
      // brute force closure under all generator conjugations
      std::set<Element> closure{w};
      std::vector<Element> frontier{w};
      while (!frontier.empty()) {
        std::vector<Element> next;
        for (const Element& u : frontier)
          for (int s = 0; s < g.rank(); ++s) {
            Element c = g.conjugate_by_generator(u, s);
            if (closure.insert(c).second) next.push_back(c);
          }
        frontier = std::move(next);
      }
      ConjugacyClassResult res = conjugacy_class_bounded(g, w, 10'000);
      REQUIRE(std::holds_alternative<FiniteClass>(res));
      const auto& members = std::get<FiniteClass>(res).members;
      CHECK(members.size() == closure.size());
      for (const Element& m : members) CHECK(closure.count(m) == 1);
    }
  }
}

TEST_CASE("class enumeration hits the bound on infinite classes") {
  Group g(samples::dinf());
  CHECK(std::holds_alternative<ExceedsBound>(conjugacy_class_bounded(g, g.generator(0), 100)));
  // st has the two-element class {st, ts}
  ConjugacyClassResult res = conjugacy_class_bounded(g, g.from_word({0, 1}), 100);
  REQUIRE(std::holds_alternative<FiniteClass>(res));
  CHECK(std::get<FiniteClass>(res).members.size() == 2);
}

TEST_CASE("translations in affine systems") {
  Group gd(samples::dinf());
  CHECK_FALSE(is_translation(gd, gd.generator(0)));
  CHECK_FALSE(is_translation(gd, gd.from_word({0, 1, 0})));
  CHECK(is_translation(gd, gd.identity()));
  CHECK(is_translation(gd, gd.from_word({0, 1})));
  CHECK(is_translation(gd, gd.from_word({0, 1, 0, 1})));

  Group gt(samples::a2tilde());
  int translations = 0;
  for (const Element& w : gt.ball(4, {}, false)) {
    bool t = is_translation(gt, w);
    translations += t;
    // the translation subgroup is closed under conjugation by generators
    if (t)
      for (int s = 0; s < gt.rank(); ++s)
        CHECK(is_translation(gt, gt.conjugate_by_generator(w, s)));
  }
  CHECK(translations > 1);  // identity plus genuine lattice points within B_4

  Group gq(samples::q444());
  CHECK_THROWS_AS(is_translation(gq, gq.generator(0)), PreconditionError);
}

TEST_CASE("bad chamber decision") {
  Group g(samples::dinf());
  // st is a translation: every non-decreasing gallery from it is flat
  BadChamberVerdict v = w_bad_decide(g, g.from_word({0, 1}), g.identity(), 10'000);
  CHECK(v.status == BadChamberVerdict::Status::Bad);
  CHECK(v.flat_closure.size() == 2);
  // s admits a growth step immediately: not bad, escape certificate attached
  BadChamberVerdict v2 = w_bad_decide(g, g.generator(0), g.identity(), 10'000);
  CHECK(v2.status == BadChamberVerdict::Status::NotBad);
  REQUIRE(v2.escape.has_value());
  std::string err;
  CHECK(replay_growth_certificate(g, v2.escape->steps.front().from, *v2.escape, &err));
}

TEST_CASE("parallel certificate scan matches serial") {
  Group g(samples::q444());
  std::vector<Element> seeds = g.ball(3, {}, false);
  SearchBudget budget{20, 100'000};
  auto serial = scan_growth_certificates(g, seeds, 4, budget, false);
  auto parallel = scan_growth_certificates(g, seeds, 4, budget, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].index() == parallel[i].index());
    if (std::holds_alternative<GrowthCertificate>(serial[i]))
      CHECK(std::get<GrowthCertificate>(serial[i]).steps ==
            std::get<GrowthCertificate>(parallel[i]).steps);
  }
}
