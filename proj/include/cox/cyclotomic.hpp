#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cox/coxeter_matrix.hpp"

namespace cox {

using Int = boost::multiprecision::cpp_int;

// Element of Z[x]/(Phi_n), coordinates in the power basis 1, x, ..., x^{d-1}
// with d = deg Phi_n.  All values arising from Coxeter matrices lie in the
// real subring generated by x^k + x^{n-k} = 2cos(2 pi k / n), so evaluation
// at zeta_n is real and signs are well defined.
struct CycInt {
  std::vector<Int> c;
};

class CycRing {
 public:
  // n = 2 * lcm of the finite bond orders, so that 2cos(pi/m) lies in the
  // ring for every finite bond m.
  explicit CycRing(long n);
  static CycRing for_matrix(const CoxeterMatrix& m);

  long conductor() const { return n_; }
  int degree() const { return degree_; }

  CycInt zero() const;
  CycInt one() const;
  CycInt from_int(long v) const;
  // x^k + x^{-k} reduced mod Phi_n, i.e. 2cos(2 pi k / n).
  CycInt two_cos(long k) const;
  // 2cos(pi/m) for a bond: two_cos(n/2m) for finite m, the integer 2 for m = infinity.
  CycInt bond_value(Bond m) const;

  CycInt add(const CycInt& a, const CycInt& b) const;
  CycInt sub(const CycInt& a, const CycInt& b) const;
  CycInt neg(const CycInt& a) const;
  CycInt mul(const CycInt& a, const CycInt& b) const;
  void add_in_place(CycInt& a, const CycInt& b) const;
  void sub_in_place(CycInt& a, const CycInt& b) const;
  // a += b * c
  void add_mul(CycInt& a, const CycInt& b, const CycInt& c) const;

  bool is_zero(const CycInt& a) const;
  bool equal(const CycInt& a, const CycInt& b) const;

  // Sign of the real value of a.  Exact zero test first, then floating
  // evaluation with a certified error bound, escalating precision until the
  // interval excludes zero.
  int sign(const CycInt& a) const;

  std::string to_string(const CycInt& a) const;

 private:
  long n_;
  int degree_;
  std::vector<Int> phi_;                    // Phi_n, monic, length degree_+1
  std::vector<std::vector<Int>> power_;     // x^k mod Phi_n for k in [0, 2*degree_)
  std::vector<long double> cos_table_;      // cos(2 pi k / n), k in [0, degree_)

  void reduce(std::vector<Int>& v) const;   // length may exceed degree_
};

// Quotient of two ring elements; enough structure for small dense linear
// algebra (radical computation).  Not normalised.
struct CycFrac {
  CycInt num;
  CycInt den;
};

class CycFracField {
 public:
  explicit CycFracField(const CycRing& ring) : ring_(ring) {}
  const CycRing& ring() const { return ring_; }

  CycFrac from_ring(const CycInt& a) const { return {a, ring_.one()}; }
  CycFrac zero() const { return {ring_.zero(), ring_.one()}; }
  bool is_zero(const CycFrac& a) const { return ring_.is_zero(a.num); }
  CycFrac add(const CycFrac& a, const CycFrac& b) const;
  CycFrac sub(const CycFrac& a, const CycFrac& b) const;
  CycFrac mul(const CycFrac& a, const CycFrac& b) const;
  CycFrac div(const CycFrac& a, const CycFrac& b) const;
  bool equal(const CycFrac& a, const CycFrac& b) const;

 private:
  const CycRing& ring_;
};

}  // namespace cox
