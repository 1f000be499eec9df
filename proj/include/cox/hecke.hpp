#pragma once

#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cox/element.hpp"

namespace cox {

template <class R>
concept CoefficientRing =
    std::copyable<typename R::value_type> &&
    requires(const R r, const typename R::value_type a) {
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.add(a, a) } -> std::same_as<typename R::value_type>;
      { r.sub(a, a) } -> std::same_as<typename R::value_type>;
      { r.mul(a, a) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      { r.is_zero(a) } -> std::same_as<bool>;
      { r.equal(a, a) } -> std::same_as<bool>;
      { r.to_string(a) } -> std::same_as<std::string>;
    };

using Rational = boost::multiprecision::cpp_rational;

struct RationalField {
  using value_type = Rational;
  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(long n) const { return Rational(n); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const;
};

// Sparse multivariate polynomial over the integers; exponent vectors are keyed
// against the variable list of the owning ring.
struct GenericPoly {
  std::map<std::vector<int>, Int> terms;

  friend bool operator==(const GenericPoly&, const GenericPoly&) = default;
};

struct GenericPolyRing {
  using value_type = GenericPoly;

  explicit GenericPolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::string& var_name(int i) const { return vars_[i]; }

  value_type zero() const { return {}; }
  value_type one() const { return constant(1); }
  value_type constant(Int c) const;
  value_type from_int(long n) const { return constant(Int(n)); }
  value_type variable(int i) const;
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  bool is_zero(const value_type& a) const { return a.terms.empty(); }
  bool equal(const value_type& a, const value_type& b) const { return a.terms == b.terms; }
  std::string to_string(const value_type& a) const;

  // Ring homomorphism fixing the integers and sending variable i to values[i].
  template <class S>
  typename S::value_type evaluate(const value_type& a, const S& target,
                                  const std::vector<typename S::value_type>& values) const;

 private:
  std::vector<std::string> vars_;
};

// Univariate Laurent polynomial over the integers, in the variable "v".
struct Laurent {
  std::map<int, Int> terms;

  friend bool operator==(const Laurent&, const Laurent&) = default;
};

struct LaurentRing {
  using value_type = Laurent;
  value_type zero() const { return {}; }
  value_type one() const { return monomial(0, 1); }
  value_type from_int(long n) const { return monomial(0, Int(n)); }
  value_type monomial(int exp, Int c) const;
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  bool is_zero(const value_type& a) const { return a.terms.empty(); }
  bool equal(const value_type& a, const value_type& b) const { return a.terms == b.terms; }
  std::string to_string(const value_type& a) const;
};

static_assert(CoefficientRing<RationalField>);
static_assert(CoefficientRing<GenericPolyRing>);
static_assert(CoefficientRing<LaurentRing>);

// One (a, b) pair per generator-conjugacy class; constancy on classes holds by
// construction since lookups go through the class index.
template <CoefficientRing R>
struct DeformationParameters {
  std::vector<std::pair<typename R::value_type, typename R::value_type>> by_class;

  const typename R::value_type& a(const Group& g, int s) const {
    return by_class[g.system().class_of(s)].first;
  }
  const typename R::value_type& b(const Group& g, int s) const {
    return by_class[g.system().class_of(s)].second;
  }
};

template <CoefficientRing R>
struct HeckeElement {
  std::map<Element, typename R::value_type> coeffs;
};

namespace detail {
template <CoefficientRing R>
void accumulate(const R& ring, HeckeElement<R>& x, const Element& w,
                const typename R::value_type& c) {
  auto it = x.coeffs.find(w);
  if (it == x.coeffs.end()) {
    if (!ring.is_zero(c)) x.coeffs.emplace(w, c);
    return;
  }
  it->second = ring.add(it->second, c);
  if (ring.is_zero(it->second)) x.coeffs.erase(it);
}
}  // namespace detail

template <CoefficientRing R>
HeckeElement<R> t_basis(const R& ring, const Element& w) {
  HeckeElement<R> x;
  x.coeffs.emplace(w, ring.one());
  return x;
}

// T_s T_w = T_{sw} when the length grows, a_s T_w + b_s T_{sw} otherwise.
template <CoefficientRing R>
HeckeElement<R> left_mul_generator(const Group& g, const R& ring,
                                   const DeformationParameters<R>& params, int s,
                                   const HeckeElement<R>& x) {
  HeckeElement<R> out;
  for (const auto& [w, c] : x.coeffs) {
    Element sw = g.multiply(g.generator(s), w);
    if (sw.length() > w.length()) {
      detail::accumulate(ring, out, sw, c);
    } else {
      detail::accumulate(ring, out, w, ring.mul(params.a(g, s), c));
      detail::accumulate(ring, out, sw, ring.mul(params.b(g, s), c));
    }
  }
  return out;
}

template <CoefficientRing R>
HeckeElement<R> right_mul_generator(const Group& g, const R& ring,
                                    const DeformationParameters<R>& params, int s,
                                    const HeckeElement<R>& x) {
  HeckeElement<R> out;
  for (const auto& [w, c] : x.coeffs) {
    Element ws = g.multiply(w, g.generator(s));
    if (ws.length() > w.length()) {
      detail::accumulate(ring, out, ws, c);
    } else {
      detail::accumulate(ring, out, w, ring.mul(params.a(g, s), c));
      detail::accumulate(ring, out, ws, ring.mul(params.b(g, s), c));
    }
  }
  return out;
}

template <CoefficientRing R>
HeckeElement<R> scale(const R& ring, const typename R::value_type& c, const HeckeElement<R>& x) {
  HeckeElement<R> out;
  for (const auto& [w, cw] : x.coeffs) detail::accumulate(ring, out, w, ring.mul(c, cw));
  return out;
}

template <CoefficientRing R>
HeckeElement<R> add(const R& ring, const HeckeElement<R>& x, const HeckeElement<R>& y) {
  HeckeElement<R> out = x;
  for (const auto& [w, c] : y.coeffs) detail::accumulate(ring, out, w, c);
  return out;
}

template <CoefficientRing R>
HeckeElement<R> sub(const R& ring, const HeckeElement<R>& x, const HeckeElement<R>& y) {
  HeckeElement<R> out = x;
  for (const auto& [w, c] : y.coeffs) detail::accumulate(ring, out, w, ring.neg(c));
  return out;
}

// T_u y computed by folding the normal form of u letter by letter; the product
// of general elements is the bilinear extension.
template <CoefficientRing R>
HeckeElement<R> multiply(const Group& g, const R& ring, const DeformationParameters<R>& params,
                         const HeckeElement<R>& x, const HeckeElement<R>& y) {
  HeckeElement<R> out;
  for (const auto& [u, cu] : x.coeffs) {
    HeckeElement<R> acc = y;
    for (auto it = u.word.rbegin(); it != u.word.rend(); ++it)
      acc = left_mul_generator(g, ring, params, *it, acc);
    for (const auto& [w, c] : acc.coeffs) detail::accumulate(ring, out, w, ring.mul(cu, c));
  }
  return out;
}

template <CoefficientRing R>
HeckeElement<R> commutator_with_generator(const Group& g, const R& ring,
                                          const DeformationParameters<R>& params, int s,
                                          const HeckeElement<R>& x) {
  return sub(ring, left_mul_generator(g, ring, params, s, x),
             right_mul_generator(g, ring, params, s, x));
}

template <CoefficientRing R>
bool is_zero(const R& ring, const HeckeElement<R>& x) {
  for (const auto& [w, c] : x.coeffs)
    if (!ring.is_zero(c)) return false;
  return true;
}

// Transpose of left multiplication on functionals: the image of the point mass
// at w is b_s at sw when the length grows, otherwise a_s at w plus one at sw.
template <CoefficientRing R>
std::map<Element, typename R::value_type> dual_left(
    const Group& g, const R& ring, const DeformationParameters<R>& params, int s,
    const std::map<Element, typename R::value_type>& phi) {
  HeckeElement<R> tmp;
  for (const auto& [w, c] : phi) {
    Element sw = g.multiply(g.generator(s), w);
    if (sw.length() > w.length()) {
      detail::accumulate(ring, tmp, sw, ring.mul(params.b(g, s), c));
    } else {
      detail::accumulate(ring, tmp, w, ring.mul(params.a(g, s), c));
      detail::accumulate(ring, tmp, sw, c);
    }
  }
  return std::move(tmp.coeffs);
}

template <CoefficientRing R>
std::map<Element, typename R::value_type> dual_right(
    const Group& g, const R& ring, const DeformationParameters<R>& params, int s,
    const std::map<Element, typename R::value_type>& phi) {
  HeckeElement<R> tmp;
  for (const auto& [w, c] : phi) {
    Element ws = g.multiply(w, g.generator(s));
    if (ws.length() > w.length()) {
      detail::accumulate(ring, tmp, ws, ring.mul(params.b(g, s), c));
    } else {
      detail::accumulate(ring, tmp, w, ring.mul(params.a(g, s), c));
      detail::accumulate(ring, tmp, ws, c);
    }
  }
  return std::move(tmp.coeffs);
}

// The free ring in one (a, b) pair per generator class, variables named after
// the first generator of each class.
GenericPolyRing make_generic_ring(const Group& g);
DeformationParameters<GenericPolyRing> generic_params(const Group& g, const GenericPolyRing& ring);

// (v^{L(c)}, 1) per class, the one-variable deformation family.
DeformationParameters<LaurentRing> laurent_params(const Group& g, const LaurentRing& ring,
                                                  const std::vector<int>& exponents);

DeformationParameters<RationalField> rational_params(
    const Group& g, const std::vector<std::pair<Rational, Rational>>& by_class);

template <class S>
typename S::value_type GenericPolyRing::evaluate(
    const value_type& a, const S& target,
    const std::vector<typename S::value_type>& values) const {
  typename S::value_type out = target.zero();
  for (const auto& [exps, c] : a.terms) {
    // Push the integer coefficient through double-and-add, ring-generically.
    typename S::value_type term = target.zero();
    Int mag = c < 0 ? Int(-c) : c;
    if (mag != 0)
      for (int bit = static_cast<int>(boost::multiprecision::msb(mag)); bit >= 0; --bit) {
        term = target.add(term, term);
        if (boost::multiprecision::bit_test(mag, static_cast<unsigned>(bit)))
          term = target.add(term, target.one());
      }
    if (c < 0) term = target.neg(term);
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term = target.mul(term, values[i]);
    out = target.add(out, term);
  }
  return out;
}

// Coefficientwise application of a_c, b_c -> target parameter values.
template <CoefficientRing S>
HeckeElement<S> specialize(const GenericPolyRing& ring, const HeckeElement<GenericPolyRing>& x,
                           const S& target, const DeformationParameters<S>& target_params) {
  if (static_cast<int>(target_params.by_class.size()) * 2 != ring.num_vars())
    throw PreconditionError("specialisation target misses a generator class");
  std::vector<typename S::value_type> values;
  for (const auto& [a, b] : target_params.by_class) {
    values.push_back(a);
    values.push_back(b);
  }
  HeckeElement<S> out;
  for (const auto& [w, c] : x.coeffs)
    detail::accumulate(target, out, w, ring.evaluate(c, target, values));
  return out;
}

std::string format_hecke(const Group& g, const RationalField& ring,
                         const HeckeElement<RationalField>& x);
std::string format_hecke(const Group& g, const GenericPolyRing& ring,
                         const HeckeElement<GenericPolyRing>& x);
std::string format_hecke(const Group& g, const LaurentRing& ring,
                         const HeckeElement<LaurentRing>& x);

Rational parse_rational(const std::string& text);

}  // namespace cox
