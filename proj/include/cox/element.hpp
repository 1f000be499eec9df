#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cox/cyclotomic.hpp"
#include "cox/system.hpp"

namespace cox {

// Group element in ShortLex reduced-word normal form.  Only words produced
// by a Group are canonical; treat Elements as opaque values tied to the
// group that made them.
struct Element {
  std::vector<std::uint8_t> word;

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Element& a, const Element& b) = default;
  // ShortLex: by length, then lexicographically.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.word.size() != b.word.size())
      return a.word.size() <=> b.word.size();
    return a.word <=> b.word;
  }
};

// Coordinates of a vector in the simple-root basis.
using RootVector = std::vector<CycInt>;

struct BallBudget {
  std::size_t max_elements = 1'000'000;
};

// Exact word problem engine for a Coxeter system, built on the standard
// geometric representation over the cyclotomic ring.
class Group {
 public:
  explicit Group(CoxeterSystem system);

  const CoxeterSystem& system() const { return system_; }
  const CycRing& ring() const { return ring_; }
  int rank() const { return system_.rank(); }

  Element identity() const { return Element{}; }
  Element generator(int s) const;

  // Canonical form of the product of the letters; letters need not be reduced.
  Element from_word(std::span<const int> letters) const;
  Element from_word(std::initializer_list<int> letters) const;

  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element conjugate_by_generator(const Element& w, int s) const;

  // {s : l(sw) < l(w)}, decided by the sign of w^{-1}(alpha_s).
  GenSet left_descents(const Element& w) const;
  GenSet right_descents(const Element& w) const;
  bool is_left_descent(const Element& w, int s) const;
  bool is_right_descent(const Element& w, int s) const;

  // Exact coordinates of w(alpha_s); signs are uniformly >= 0 or <= 0.
  RootVector apply_to_simple_root(const Element& w, int s) const;
  // Letters of the normal form, as a set.
  GenSet support(const Element& w) const;

  // All elements of length <= N in ShortLex order.  `parallel` selects the
  // OpenMP frontier expansion; results are identical either way.
  std::vector<Element> ball(int N, const BallBudget& budget = {}, bool parallel = true) const;
  // Same, with letters restricted to I (enumerates W_I).
  std::vector<Element> subgroup_ball(GenSet I, int N, const BallBudget& budget = {},
                                     bool parallel = true) const;

  RootVector simple_root(int s) const;
  // In-place reflection: v <- s(v).
  void reflect(int s, RootVector& v) const;
  // Fold the word onto v, first letter applied last (i.e. v <- w(v)).
  RootVector apply_word(std::span<const std::uint8_t> word, RootVector v) const;
  int root_sign(const RootVector& v) const;

  std::string format(const Element& w) const;
  Element parse_word(const std::string& text) const;

 private:
  bool letter_negative(std::span<const std::uint8_t> word, bool reversed, int s) const;
  std::vector<Element> expand_level(const std::vector<Element>& level, GenSet letters,
                                    bool parallel) const;

  CoxeterSystem system_;
  CycRing ring_;
  std::vector<std::vector<CycInt>> bond_coeff_;  // 2cos(pi/m_st)
};

}  // namespace cox
