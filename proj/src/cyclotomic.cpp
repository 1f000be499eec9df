#include "cox/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cox {
namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<Int> poly_div(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int q = rem[k + den.size() - 1] / den.back();
    quot[k] = q;
    for (std::size_t i = 0; i < den.size(); ++i) rem[k + i] -= q * den[i];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quot;
}

std::vector<Int> cyclotomic_poly(long n) {
  // x^n - 1 divided by Phi_d for all proper divisors d of n.
  std::vector<Int> p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div(p, cyclotomic_poly(d));
  return p;
}

template <class Float>
int sign_at_precision(const std::vector<Int>& coords, long n, long double log10_margin) {
  const Float pi = boost::math::constants::pi<Float>();
  Float value = 0;
  Float height = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    Float ck = static_cast<Float>(coords[k]);
    value += ck * cos(2 * pi * static_cast<Float>(static_cast<long>(k)) / static_cast<Float>(n));
    height += abs(ck);
  }
  Float bound = height * static_cast<Float>(coords.size() + 1) *
                pow(Float(10), Float(static_cast<double>(log10_margin)));
  if (value > bound) return 1;
  if (value < -bound) return -1;
  return 0;  // undecided at this precision
}

}  // namespace

CycRing::CycRing(long n) : n_(n) {
  phi_ = cyclotomic_poly(n);
  degree_ = static_cast<int>(phi_.size()) - 1;
  // Rows x^k mod Phi_n for k < 2*degree_ (enough to fold products and to
  // build arbitrary powers).
  power_.assign(std::max<long>(2 * degree_, n), {});
  std::vector<Int> cur(degree_, Int(0));
  cur[0] = 1;
  for (long k = 0; k < static_cast<long>(power_.size()); ++k) {
    power_[k] = cur;
    // multiply by x and reduce
    Int top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
  cos_table_.resize(degree_);
  for (int k = 0; k < degree_; ++k)
    cos_table_[k] = cosl(2.0L * 3.14159265358979323846264338327950288L * k / n);
}

CycRing CycRing::for_matrix(const CoxeterMatrix& m) { return CycRing(2 * m.finite_order_lcm()); }

CycInt CycRing::zero() const { return CycInt{std::vector<Int>(degree_, Int(0))}; }

CycInt CycRing::one() const {
  CycInt a = zero();
  a.c[0] = 1;
  return a;
}

CycInt CycRing::from_int(long v) const {
  CycInt a = zero();
  a.c[0] = v;
  return a;
}

CycInt CycRing::two_cos(long k) const {
  k = ((k % n_) + n_) % n_;
  CycInt a = zero();
  for (int i = 0; i < degree_; ++i) a.c[i] = power_[k][i] + power_[(n_ - k) % n_][i];
  if (k == 0)  // x^0 + x^0 counted once
    a.c[0] = 2;
  return a;
}

CycInt CycRing::bond_value(Bond m) const {
  if (!m.is_finite()) return from_int(2);
  return two_cos(n_ / (2 * m.order()));
}

CycInt CycRing::add(const CycInt& a, const CycInt& b) const {
  CycInt r = a;
  add_in_place(r, b);
  return r;
}

CycInt CycRing::sub(const CycInt& a, const CycInt& b) const {
  CycInt r = a;
  sub_in_place(r, b);
  return r;
}

CycInt CycRing::neg(const CycInt& a) const {
  CycInt r = a;
  for (Int& x : r.c) x = -x;
  return r;
}

void CycRing::add_in_place(CycInt& a, const CycInt& b) const {
  for (int i = 0; i < degree_; ++i) a.c[i] += b.c[i];
}

void CycRing::sub_in_place(CycInt& a, const CycInt& b) const {
  for (int i = 0; i < degree_; ++i) a.c[i] -= b.c[i];
}

CycInt CycRing::mul(const CycInt& a, const CycInt& b) const {
  std::vector<Int> conv(2 * degree_ - 1, Int(0));
  for (int i = 0; i < degree_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < degree_; ++j)
      if (b.c[j] != 0) conv[i + j] += a.c[i] * b.c[j];
  }
  reduce(conv);
  return CycInt{std::move(conv)};
}

void CycRing::add_mul(CycInt& a, const CycInt& b, const CycInt& c) const {
  CycInt p = mul(b, c);
  add_in_place(a, p);
}

void CycRing::reduce(std::vector<Int>& v) const {
  for (int k = static_cast<int>(v.size()) - 1; k >= degree_; --k) {
    if (v[k] != 0)
      for (int i = 0; i < degree_; ++i) v[i] += v[k] * power_[k][i];
    // power_[k] already encodes x^k mod Phi, so the top coefficient folds away
  }
  v.resize(degree_);
}

bool CycRing::is_zero(const CycInt& a) const {
  for (const Int& x : a.c)
    if (x != 0) return false;
  return true;
}

bool CycRing::equal(const CycInt& a, const CycInt& b) const {
  for (int i = 0; i < degree_; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

int CycRing::sign(const CycInt& a) const {
  if (is_zero(a)) return 0;
  // Fast path: long double with a conservative bound.
  {
    long double value = 0, height = 0;
    bool convertible = true;
    for (int k = 0; k < degree_ && convertible; ++k) {
      if (a.c[k] == 0) continue;
      if (abs(a.c[k]) > Int(1) << 400) {
        convertible = false;
        break;
      }
      long double ck = a.c[k].convert_to<long double>();
      value += ck * cos_table_[k];
      height += fabsl(ck);
    }
    if (convertible) {
      long double bound = height * (degree_ + 1) * 1e-16L;
      if (value > bound) return 1;
      if (value < -bound) return -1;
    }
  }
  // Escalate precision.  A nonzero algebraic number of bounded height cannot
  // be arbitrarily close to zero, so this terminates in practice; the hard
  // stop guards against bugs.
  using boost::multiprecision::cpp_bin_float;
  using boost::multiprecision::number;
  if (int s = sign_at_precision<number<cpp_bin_float<100>>>(a.c, n_, -90)) return s;
  if (int s = sign_at_precision<number<cpp_bin_float<400>>>(a.c, n_, -380)) return s;
  if (int s = sign_at_precision<number<cpp_bin_float<2000>>>(a.c, n_, -1950)) return s;
  throw std::logic_error("cyclotomic sign could not be certified");
}

std::string CycRing::to_string(const CycInt& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < degree_; ++i) {
    if (i) os << ",";
    os << a.c[i];
  }
  os << "]";
  return os.str();
}

CycFrac CycFracField::add(const CycFrac& a, const CycFrac& b) const {
  return {ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den)};
}

CycFrac CycFracField::sub(const CycFrac& a, const CycFrac& b) const {
  return {ring_.sub(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den)};
}

CycFrac CycFracField::mul(const CycFrac& a, const CycFrac& b) const {
  return {ring_.mul(a.num, b.num), ring_.mul(a.den, b.den)};
}

CycFrac CycFracField::div(const CycFrac& a, const CycFrac& b) const {
  if (ring_.is_zero(b.num)) throw std::logic_error("division by zero in CycFracField");
  return {ring_.mul(a.num, b.den), ring_.mul(a.den, b.num)};
}

bool CycFracField::equal(const CycFrac& a, const CycFrac& b) const {
  return ring_.equal(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den));
}

}  // namespace cox
