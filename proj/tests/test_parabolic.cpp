#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cox/parabolic.hpp"
#include "samples.hpp"

using namespace cox;

namespace {

std::vector<GenSet> all_subsets(int rank) {
  std::vector<GenSet> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    GenSet I;
    for (int s = 0; s < rank; ++s)
      if (mask & (1 << s)) I = I.with(s);
    out.push_back(I);
  }
  return out;
}

}  // namespace

TEST_CASE("one-sided factorisations") {
  for (const CoxeterSystem& sys : {samples::b2(), samples::a2tilde()}) {
    Group g(sys);
    for (const Element& w : g.ball(4, {}, false))
      for (GenSet I : all_subsets(g.rank())) {
        CosetFactorisation r = factor_right(g, w, I);
        CHECK(g.multiply(r.outer, r.inner) == w);
        CHECK(r.outer.length() + r.inner.length() == w.length());
        CHECK(g.support(r.inner).subset_of(I));
        CHECK((g.right_descents(r.outer) & I).empty());
        CHECK(in_right_quotient(g, r.outer, I));
        CosetFactorisation l = factor_left(g, w, I);
        CHECK(g.multiply(l.inner, l.outer) == w);
        CHECK(l.outer.length() + l.inner.length() == w.length());
        CHECK(g.support(l.inner).subset_of(I));
        CHECK(in_left_quotient(g, l.outer, I));
      }
  }
}

TEST_CASE("double cosets, exhaustive over finite groups") {
  for (const CoxeterSystem& sys : {samples::a2(), samples::b2()}) {
    Group g(sys);
    std::vector<Element> group = g.ball(10, {}, false);  // the whole finite group
    for (GenSet I : all_subsets(g.rank()))
      for (GenSet J : all_subsets(g.rank()))
        for (const Element& w : group) {
          DoubleCosetDecomposition d = decompose_double_coset(g, w, I, J);
          // reassembly and additive lengths
          CHECK(g.multiply(g.multiply(d.u, d.wbar), d.v) == w);
          CHECK(d.u.length() + d.wbar.length() + d.v.length() == w.length());
          // membership constraints
          CHECK(g.support(d.u).subset_of(I));
          CHECK(g.support(d.v).subset_of(J));
          CHECK(in_left_quotient(g, d.wbar, I));
          CHECK(in_right_quotient(g, d.wbar, J));
          CHECK(in_right_quotient(g, d.u, d.H));
          // wbar is the unique minimum of the double coset, by brute force
          Element best = w;
          for (const Element& a : g.subgroup_ball(I, 10, {}, false))
            for (const Element& b : g.subgroup_ball(J, 10, {}, false)) {
              Element cand = g.multiply(g.multiply(a, w), b);
              if (cand < best) best = cand;
            }
          CHECK(d.wbar == best);
          CHECK(min_double_coset_rep(g, w, I, J) == best);
          // H is the definitional intersection
          GenSet H;
          for (int t : J.members()) {
            Element c = g.multiply(g.multiply(d.wbar, g.generator(t)), g.inverse(d.wbar));
            if (c.length() == 1 && I.contains(c.word[0])) H = H.with(c.word[0]);
          }
          CHECK(d.H == H);
          // uniqueness: no other (u', v') with the same shape reassembles to w
          int count = 0;
          for (const Element& a : g.subgroup_ball(I, 10, {}, false)) {
            if (!in_right_quotient(g, a, d.H)) continue;
            for (const Element& b : g.subgroup_ball(J, 10, {}, false))
              if (g.multiply(g.multiply(a, d.wbar), b) == w &&
                  a.length() + d.wbar.length() + b.length() == w.length())
                ++count;
          }
          CHECK(count == 1);
        }
  }
}

TEST_CASE("double cosets on an affine ball") {
  Group g(samples::a2tilde());
  for (GenSet I : all_subsets(g.rank())) {
    if (!is_spherical(g.system().matrix(), I)) continue;
    for (GenSet J : all_subsets(g.rank())) {
      if (!is_spherical(g.system().matrix(), J)) continue;
      for (const Element& w : g.ball(5, {}, false)) {
        DoubleCosetDecomposition d = decompose_double_coset(g, w, I, J);
        CHECK(g.multiply(g.multiply(d.u, d.wbar), d.v) == w);
        CHECK(d.u.length() + d.wbar.length() + d.v.length() == w.length());
        CHECK(in_left_quotient(g, d.wbar, I));
        CHECK(in_right_quotient(g, d.wbar, J));
        CHECK(in_right_quotient(g, d.u, d.H));
      }
    }
  }
}

TEST_CASE("gate property of residue projection") {
  Group g(samples::a2tilde());
  std::vector<Element> bases = g.ball(2, {}, false);
  for (GenSet J : all_subsets(g.rank())) {
    if (!is_spherical(g.system().matrix(), J) || J.empty()) continue;
    for (const Element& base : bases)
      for (const Element& v : g.ball(3, {}, false)) {
        Element proj = project_to_residue(g, v, base, J);
        // proj lies in the residue
        CHECK(g.support(g.multiply(g.inverse(base), proj)).subset_of(J));
        // and is the unique distance minimiser in it
        std::size_t dproj = g.multiply(g.inverse(proj), v).length();
        for (const Element& x : g.subgroup_ball(J, 10, {}, false)) {
          Element chamber = g.multiply(base, x);
          std::size_t d = g.multiply(g.inverse(chamber), v).length();
          if (chamber == proj) continue;
          CHECK(d > dproj);
          // gate: distances decompose additively through the projection
          CHECK(d == dproj + g.multiply(g.inverse(chamber), proj).length());
        }
      }
  }
}

TEST_CASE("parallel residues") {
  Group g(samples::a2tilde());
  GenSet J = GenSet::single(0) | GenSet::single(1);
  // same residue, different base chamber inside it
  CHECK(residues_parallel(g, g.identity(), J, g.generator(0), J));
  CHECK(residues_parallel(g, g.identity(), J, g.from_word({0, 1}), J));
  // genuinely different residues
  CHECK_FALSE(residues_parallel(g, g.identity(), J, g.generator(2), J));
  GenSet K = GenSet::single(1) | GenSet::single(2);
  CHECK_FALSE(residues_parallel(g, g.identity(), J, g.identity(), K));
  // panel parallelism across a translation direction
  CHECK(residues_parallel(g, g.generator(2), GenSet::single(0), g.generator(2),
                          GenSet::single(0)));
}

TEST_CASE("normalizer membership by support") {
  Group g(samples::inf32());
  GenSet I = GenSet::single(0) | GenSet::single(1);  // infinite dihedral, maximal proper
  // preconditions hold for I: irreducible, non-spherical, proper subsets spherical
  for (const Element& w : g.ball(4, {}, false)) {
    bool claimed = normalizer_membership(g, w, I);
    if (claimed) {
      // definitional check: conjugation preserves W_I in both directions
      for (int s : I.members()) {
        CHECK(g.support(g.multiply(g.multiply(w, g.generator(s)), g.inverse(w))).subset_of(I));
        CHECK(g.support(g.multiply(g.multiply(g.inverse(w), g.generator(s)), w)).subset_of(I));
      }
    }
  }
  CHECK(normalizer_membership(g, g.from_word({0, 1}), I));
  CHECK_FALSE(normalizer_membership(g, g.generator(2), I));
  // precondition violations
  CHECK_THROWS_AS(normalizer_membership(g, g.identity(), GenSet::single(0)), PreconditionError);
  CHECK_THROWS_AS(normalizer_membership(g, g.identity(), GenSet::all(3)), PreconditionError);
}

TEST_CASE("spherical criterion probe") {
  Group g(samples::inf32());
  for (GenSet H : all_subsets(g.rank())) {
    if (!is_spherical(g.system().matrix(), H)) continue;
    for (const Element& x : g.ball(4, {}, false)) {
      if (!in_right_quotient(g, x, H)) continue;
      SphericalProbe p = spherical_criterion_probe(g, x, H);
      // definitional re-check of both sets
      for (int s = 0; s < g.rank(); ++s) {
        bool ascent = !g.is_left_descent(x, s);
        CHECK(p.ascent_set.contains(s) == ascent);
        if (ascent)
          CHECK(p.witnesses.contains(s) ==
                in_right_quotient(g, g.multiply(g.generator(s), x), H));
      }
      CHECK(p.witnesses.subset_of(p.ascent_set));
      // S is non-spherical here, so the lemma promises a witness
      CHECK_FALSE(p.witnesses.empty());
    }
  }
  CHECK_THROWS_AS(
      spherical_criterion_probe(g, g.identity(), GenSet::single(0) | GenSet::single(1)),
      PreconditionError);
}
