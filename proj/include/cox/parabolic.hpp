#pragma once

#include "cox/element.hpp"

namespace cox {

// w = outer * inner with outer the minimal coset representative (in W^I for
// the right factorisation, in ^I W for the left one) and inner in W_I.
struct CosetFactorisation {
  Element outer;
  Element inner;
};

// Unique decomposition w = u * wbar * v of the double-coset lemma:
// wbar minimal in W_I w W_J, H = I cap wbar J wbar^{-1}, u in W_I^H, v in W_J,
// lengths additive.
struct DoubleCosetDecomposition {
  GenSet I, J;
  Element wbar;
  GenSet H;
  Element u;
  Element v;
};

struct SphericalProbe {
  GenSet ascent_set;  // J = {s : l(sx) = l(x)+1}
  GenSet witnesses;   // {s in J : sx in W^H}
};

// w = w^I * w_I with w^I in W^I (no right descents in I).
CosetFactorisation factor_right(const Group& g, const Element& w, GenSet I);
// w = w_I * ^I w with the outer part in ^I W (no left descents in I).
CosetFactorisation factor_left(const Group& g, const Element& w, GenSet I);

bool in_left_quotient(const Group& g, const Element& w, GenSet I);   // w in ^I W
bool in_right_quotient(const Group& g, const Element& w, GenSet J);  // w in W^J

// The unique minimal-length element of W_I w W_J.
Element min_double_coset_rep(const Group& g, const Element& w, GenSet I, GenSet J);

DoubleCosetDecomposition decompose_double_coset(const Group& g, const Element& w, GenSet I,
                                                GenSet J);

// Projection of the chamber v C_0 onto the residue base W_J, as an element.
Element project_to_residue(const Group& g, const Element& v, const Element& base, GenSet J);

// Stabiliser comparison via reflection sets; J1, J2 must be spherical.
bool residues_parallel(const Group& g, const Element& base1, GenSet J1, const Element& base2,
                       GenSet J2);

// Membership in N_W(W_I) = W_I x W_{I perp}, valid when I is irreducible,
// non-spherical and all its proper subsets are spherical.
bool normalizer_membership(const Group& g, const Element& w, GenSet I);

// Witness set of the spherical-criterion lemma: H spherical, x in W^H;
// returns J and {s in J : sx in W^H}.  Nonempty witnesses whenever S is
// non-spherical.
SphericalProbe spherical_criterion_probe(const Group& g, const Element& x, GenSet H);

// All reflections of the finite standard parabolic W_J, conjugated by base.
std::vector<Element> residue_reflections(const Group& g, const Element& base, GenSet J);

}  // namespace cox
