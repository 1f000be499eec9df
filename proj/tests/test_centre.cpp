#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cox/centre.hpp"
#include "samples.hpp"

using namespace cox;

namespace {

DeformationParameters<RationalField> uniform(const Group& g, Rational a, Rational b) {
  return rational_params(
      g, std::vector<std::pair<Rational, Rational>>(g.system().generator_classes().size(),
                                                    {a, b}));
}

}  // namespace

TEST_CASE("system shape") {
  Group g(samples::dinf());
  RationalField ring;
  auto sys = build_commutant_system(g, 2, ring, uniform(g, Rational(3, 2), Rational(1)));
  CHECK(sys.unknowns.size() == 5);        // |B_2| in the infinite dihedral group
  CHECK(sys.rows.size() == 2 * 7);        // generators x |B_3|
  // radius 0: no constraints bind the identity coefficient
  CHECK(centre_dimension_at(g, 0, uniform(g, Rational(3, 2), Rational(1))) == 1);
  Group gq(samples::q444());
  CHECK(centre_dimension_at(gq, 0, uniform(gq, Rational(3), Rational(2))) == 1);
}

TEST_CASE("finite type kernel dimensions equal class numbers at generic points") {
  Group ga(samples::a2());
  CHECK(centre_dimension_at(ga, 3, uniform(ga, Rational(3), Rational(2))) == 3);
  CHECK(centre_dimension_at(ga, 3, uniform(ga, Rational(7, 2), Rational(5))) == 3);
  Group gb(samples::b2());
  CHECK(centre_dimension_at(gb, 4, uniform(gb, Rational(3), Rational(2))) == 5);
  CHECK(centre_dimension_at(gb, 4, uniform(gb, Rational(11, 4), Rational(2, 3))) == 5);
  // saturation: the ball is the whole group from the diameter on
  CHECK(centre_dimension_at(ga, 5, uniform(ga, Rational(3), Rational(2))) == 3);
}

TEST_CASE("affine contrast: nontrivial centre appears at radius 2") {
  Group g(samples::dinf());
  auto params = uniform(g, Rational(3, 2), Rational(1));
  std::vector<int> dims;
  for (int N = 1; N <= 6; ++N) dims.push_back(centre_dimension_at(g, N, params));
  CHECK(dims == std::vector<int>{1, 2, 2, 3, 3, 4});
  // dimensions are monotone in the radius
  for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] >= dims[i - 1]);
}

TEST_CASE("indefinite samples have trivial truncated centre") {
  Group gq(samples::q444());
  Group gi(samples::inf32());
  for (int N = 1; N <= 4; ++N) {
    CHECK(centre_dimension_at(gq, N, uniform(gq, Rational(3), Rational(2))) == 1);
    CHECK(centre_dimension_at(gi, N, uniform(gi, Rational(3), Rational(2))) == 1);
  }
}

TEST_CASE("kernel vectors are genuinely central") {
  RationalField ring;
  for (int N : {3, 4}) {
    Group g(samples::dinf());
    auto params = uniform(g, Rational(3, 2), Rational(1));
    auto sys = build_commutant_system(g, N, ring, params);
    auto basis = kernel_basis(sys);
    CHECK(static_cast<int>(basis.size()) == kernel_dimension(sys));
    for (const auto& vec : basis) {
      HeckeElement<RationalField> x;
      for (std::size_t i = 0; i < vec.size(); ++i)
        if (vec[i] != 0) x.coeffs.emplace(sys.unknowns[i], vec[i]);
      for (int s = 0; s < g.rank(); ++s)
        CHECK(is_zero(ring, commutator_with_generator(g, ring, params, s, x)));
    }
  }
  // finite control: A2 kernel vectors commute too
  Group ga(samples::a2());
  auto pa = uniform(ga, Rational(3), Rational(2));
  auto sysa = build_commutant_system(ga, 3, ring, pa);
  for (const auto& vec : kernel_basis(sysa)) {
    HeckeElement<RationalField> x;
    for (std::size_t i = 0; i < vec.size(); ++i)
      if (vec[i] != 0) x.coeffs.emplace(sysa.unknowns[i], vec[i]);
    for (int s = 0; s < ga.rank(); ++s)
      CHECK(is_zero(ring, commutator_with_generator(ga, ring, pa, s, x)));
  }
}

TEST_CASE("kernel embeds into the next radius") {
  Group g(samples::dinf());
  RationalField ring;
  auto params = uniform(g, Rational(3, 2), Rational(1));
  for (int N = 1; N <= 4; ++N) {
    auto small = build_commutant_system(g, N, ring, params);
    auto large = build_commutant_system(g, N + 1, ring, params);
    std::map<Element, int> index;
    for (int i = 0; i < static_cast<int>(large.unknowns.size()); ++i)
      index.emplace(large.unknowns[i], i);
    for (const auto& vec : kernel_basis(small)) {
      // pad with zeros and check every equation of the larger system
      std::vector<Rational> padded(large.unknowns.size(), Rational(0));
      for (std::size_t i = 0; i < vec.size(); ++i) padded[index.at(small.unknowns[i])] = vec[i];
      for (const auto& row : large.rows) {
        Rational acc(0);
        for (const auto& [col, c] : row) acc += c * padded[col];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("generic assembly specialises to the rational assembly") {
  Group g(samples::dinf());
  GenericPolyRing gen = make_generic_ring(g);
  auto gp = generic_params(g, gen);
  auto generic_sys = build_commutant_system(g, 2, gen, gp);
  RationalField ring;
  auto point = uniform(g, Rational(3, 2), Rational(1));
  auto rational_sys = build_commutant_system(g, 2, ring, point);
  REQUIRE(generic_sys.rows.size() == rational_sys.rows.size());
  REQUIRE(generic_sys.unknowns == rational_sys.unknowns);
  std::vector<Rational> values;
  for (const auto& [a, b] : point.by_class) {
    values.push_back(a);
    values.push_back(b);
  }
  for (std::size_t r = 0; r < generic_sys.rows.size(); ++r) {
    std::map<int, Rational> expect;
    for (const auto& [col, c] : rational_sys.rows[r]) expect[col] = c;
    std::map<int, Rational> got;
    for (const auto& [col, c] : generic_sys.rows[r]) {
      Rational v = gen.evaluate(c, ring, values);
      if (v != 0) got[col] = v;
    }
    CHECK(got == expect);
  }
}

TEST_CASE("vanishing propagation: preconditions") {
  Group ga(samples::a2());
  CHECK_THROWS_AS(propagate_vanishing(ga, ga.generator(0)), PreconditionError);
  Group gd(samples::dinf());
  CHECK_THROWS_AS(propagate_vanishing(gd, gd.identity()), PreconditionError);
  CHECK_THROWS_AS(propagate_vanishing(gd, gd.from_word({0, 1})), PreconditionError);
  Group gq(samples::q444());
  CHECK_THROWS_AS(propagate_vanishing(gq, gq.identity()), PreconditionError);
}

TEST_CASE("vanishing propagation: certificates and replay") {
  Group gq(samples::q444());
  // one-step certificate for a generator: r -> srs is already longer
  auto res = propagate_vanishing(gq, gq.generator(0));
  REQUIRE(std::holds_alternative<ZeroPropagationCertificate>(res));
  const auto& cert = std::get<ZeroPropagationCertificate>(res);
  CHECK(cert.steps.steps.size() == 1);
  CHECK(cert.steps.steps.back().delta == 2);
  std::string err;
  CHECK_MESSAGE(replay_zero_certificate(gq, cert, &err), err);

  Group gd(samples::dinf());
  auto res2 = propagate_vanishing(gd, gd.generator(0));
  REQUIRE(std::holds_alternative<ZeroPropagationCertificate>(res2));
  CHECK(std::get<ZeroPropagationCertificate>(res2).steps.steps.size() == 1);
  CHECK(replay_zero_certificate(gd, std::get<ZeroPropagationCertificate>(res2), &err));

  // every non-identity element of B_3 in both indefinite samples
  for (Group* g : {&gq}) {
    for (const Element& w : g->ball(3, {}, false)) {
      if (w.is_identity()) continue;
      auto r = propagate_vanishing(*g, w);
      REQUIRE(std::holds_alternative<ZeroPropagationCertificate>(r));
      CHECK_MESSAGE(replay_zero_certificate(*g, std::get<ZeroPropagationCertificate>(r), &err),
                    err);
    }
  }
}

TEST_CASE("replay rejects forged zero-propagation certificates") {
  Group g(samples::q444());
  auto res = propagate_vanishing(g, g.from_word({0, 1}));
  REQUIRE(std::holds_alternative<ZeroPropagationCertificate>(res));
  ZeroPropagationCertificate cert = std::get<ZeroPropagationCertificate>(res);
  std::string err;
  REQUIRE(replay_zero_certificate(g, cert, &err));

  ZeroPropagationCertificate broken = cert;
  broken.target = g.generator(0);
  CHECK_FALSE(replay_zero_certificate(g, broken, &err));

  broken = cert;
  broken.steps.steps.back().to = broken.steps.steps.back().from;
  CHECK_FALSE(replay_zero_certificate(g, broken, &err));

  broken = cert;
  broken.steps.steps.clear();
  broken.sides.clear();
  CHECK_FALSE(replay_zero_certificate(g, broken, &err));
}

TEST_CASE("two-route triviality assertion") {
  Group gq(samples::q444());
  auto p1 = uniform(gq, Rational(3), Rational(2));
  auto p2 = uniform(gq, Rational(5), Rational(7));
  CentreReport report = assert_centre_trivial_up_to(gq, 3, {p1, p2});
  CHECK(report.ok);
  CHECK(report.kernel_dimensions == std::vector<int>{1, 1});
  CHECK(report.certificates.size() == gq.ball(3, {}, false).size() - 1);
  CHECK(report.failure.empty());

  Group ga(samples::a2());
  CHECK_THROWS_AS(
      assert_centre_trivial_up_to(ga, 3,
                                  {uniform(ga, Rational(3), Rational(2)),
                                   uniform(ga, Rational(5), Rational(7))}),
      PreconditionError);
  Group gd(samples::dinf());
  CHECK_THROWS_AS(
      assert_centre_trivial_up_to(gd, 3,
                                  {uniform(gd, Rational(3), Rational(2)),
                                   uniform(gd, Rational(5), Rational(7))}),
      PreconditionError);
}
