#include "cox/hecke.hpp"

#include <sstream>

namespace cox {

std::string RationalField::to_string(const value_type& a) const {
  std::ostringstream os;
  os << a;
  return os.str();
}

GenericPoly GenericPolyRing::constant(Int c) const {
  GenericPoly p;
  if (c != 0) p.terms.emplace(std::vector<int>(vars_.size(), 0), std::move(c));
  return p;
}

GenericPoly GenericPolyRing::variable(int i) const {
  GenericPoly p;
  std::vector<int> e(vars_.size(), 0);
  e[i] = 1;
  p.terms.emplace(std::move(e), Int(1));
  return p;
}

GenericPoly GenericPolyRing::add(const GenericPoly& a, const GenericPoly& b) const {
  GenericPoly out = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, fresh] = out.terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

GenericPoly GenericPolyRing::neg(const GenericPoly& a) const {
  GenericPoly out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

GenericPoly GenericPolyRing::sub(const GenericPoly& a, const GenericPoly& b) const {
  return add(a, neg(b));
}

GenericPoly GenericPolyRing::mul(const GenericPoly& a, const GenericPoly& b) const {
  GenericPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.terms.emplace(std::move(e), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

std::string GenericPolyRing::to_string(const GenericPoly& a) const {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    bool has_var = false;
    for (int x : e)
      if (x > 0) has_var = true;
    if (mag != 1 || !has_var) os << mag;
    bool star = mag != 1 || !has_var;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

Laurent LaurentRing::monomial(int exp, Int c) const {
  Laurent p;
  if (c != 0) p.terms.emplace(exp, std::move(c));
  return p;
}

Laurent LaurentRing::add(const Laurent& a, const Laurent& b) const {
  Laurent out = a;
  for (const auto& [e, c] : b.terms) {
    auto [it, fresh] = out.terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

Laurent LaurentRing::neg(const Laurent& a) const {
  Laurent out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

Laurent LaurentRing::sub(const Laurent& a, const Laurent& b) const { return add(a, neg(b)); }

Laurent LaurentRing::mul(const Laurent& a, const Laurent& b) const {
  Laurent out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      auto [it, fresh] = out.terms.emplace(ea + eb, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

std::string LaurentRing::to_string(const Laurent& a) const {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int mag = c < 0 ? Int(-c) : c;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) {
      if (mag != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

GenericPolyRing make_generic_ring(const Group& g) {
  const CoxeterSystem& sys = g.system();
  std::vector<std::string> vars;
  for (const GenSet& cls : sys.generator_classes()) {
    const std::string& rep = sys.label(cls.members().front());
    vars.push_back("a_" + rep);
    vars.push_back("b_" + rep);
  }
  return GenericPolyRing(std::move(vars));
}

DeformationParameters<GenericPolyRing> generic_params(const Group& g,
                                                      const GenericPolyRing& ring) {
  DeformationParameters<GenericPolyRing> p;
  int n = static_cast<int>(g.system().generator_classes().size());
  for (int c = 0; c < n; ++c)
    p.by_class.emplace_back(ring.variable(2 * c), ring.variable(2 * c + 1));
  return p;
}

DeformationParameters<LaurentRing> laurent_params(const Group& g, const LaurentRing& ring,
                                                  const std::vector<int>& exponents) {
  std::size_t n = g.system().generator_classes().size();
  if (exponents.size() != n)
    throw PreconditionError("need one Laurent exponent per generator class");
  DeformationParameters<LaurentRing> p;
  for (std::size_t c = 0; c < n; ++c)
    p.by_class.emplace_back(ring.monomial(exponents[c], 1), ring.one());
  return p;
}

DeformationParameters<RationalField> rational_params(
    const Group& g, const std::vector<std::pair<Rational, Rational>>& by_class) {
  if (by_class.size() != g.system().generator_classes().size())
    throw PreconditionError("need one rational parameter pair per generator class");
  DeformationParameters<RationalField> p;
  p.by_class = by_class;
  return p;
}

namespace {
template <class R>
std::string format_generic(const Group& g, const R& ring, const HeckeElement<R>& x) {
  if (x.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << ring.to_string(c) << ")*T[" << g.format(w) << "]";
  }
  return os.str();
}
}  // namespace

std::string format_hecke(const Group& g, const RationalField& ring,
                         const HeckeElement<RationalField>& x) {
  return format_generic(g, ring, x);
}
std::string format_hecke(const Group& g, const GenericPolyRing& ring,
                         const HeckeElement<GenericPolyRing>& x) {
  return format_generic(g, ring, x);
}
std::string format_hecke(const Group& g, const LaurentRing& ring,
                         const HeckeElement<LaurentRing>& x) {
  return format_generic(g, ring, x);
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + text);
  }
}

}  // namespace cox
