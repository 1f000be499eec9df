#include "cox/element.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cox {

Group::Group(CoxeterSystem system)
    : system_(std::move(system)), ring_(CycRing::for_matrix(system_.matrix())) {
  const int r = rank();
  bond_coeff_.assign(r, std::vector<CycInt>(r, ring_.zero()));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (s != t) bond_coeff_[s][t] = ring_.bond_value(system_.matrix().bond(s, t));
}

Element Group::generator(int s) const {
  if (s < 0 || s >= rank()) throw ParseError("generator index out of range");
  return Element{{static_cast<std::uint8_t>(s)}};
}

RootVector Group::simple_root(int s) const {
  RootVector v(rank(), ring_.zero());
  v[s] = ring_.one();
  return v;
}

void Group::reflect(int s, RootVector& v) const {
  // s(v) differs from v only in coordinate s:
  //   s(v)_s = -v_s + sum_{t != s} 2cos(pi/m_st) v_t
  CycInt acc = ring_.neg(v[s]);
  for (int t = 0; t < rank(); ++t) {
    if (t == s || ring_.is_zero(v[t])) continue;
    ring_.add_mul(acc, bond_coeff_[s][t], v[t]);
  }
  v[s] = std::move(acc);
}

RootVector Group::apply_word(std::span<const std::uint8_t> word, RootVector v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(*it, v);
  return v;
}

int Group::root_sign(const RootVector& v) const {
  for (const CycInt& x : v)
    if (!ring_.is_zero(x)) return ring_.sign(x);
  return 0;
}

bool Group::letter_negative(std::span<const std::uint8_t> word, bool reversed, int s) const {
  RootVector v = simple_root(s);
  if (reversed) {
    // w^{-1}(alpha_s): apply letters first to last
    for (std::uint8_t l : word) reflect(l, v);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) reflect(*it, v);
  }
  return root_sign(v) < 0;
}

Element Group::from_word(std::span<const int> letters) const {
  std::vector<std::uint8_t> cur;
  cur.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l >= rank())
      throw ParseError("letter index " + std::to_string(l) + " out of range");
    cur.push_back(static_cast<std::uint8_t>(l));
  }
  // Greedy ShortLex extraction: NF(w) = s NF(sw), s the least left descent.
  std::vector<std::uint8_t> out;
  while (true) {
    int s = -1;
    for (int t = 0; t < rank(); ++t)
      if (letter_negative(cur, /*reversed=*/true, t)) {
        s = t;
        break;
      }
    if (s < 0) break;  // no left descent: identity reached
    out.push_back(static_cast<std::uint8_t>(s));
    cur.insert(cur.begin(), static_cast<std::uint8_t>(s));
  }
  return Element{std::move(out)};
}

Element Group::from_word(std::initializer_list<int> letters) const {
  return from_word(std::span<const int>(letters.begin(), letters.size()));
}

Element Group::multiply(const Element& a, const Element& b) const {
  std::vector<int> letters;
  letters.reserve(a.word.size() + b.word.size());
  for (auto l : a.word) letters.push_back(l);
  for (auto l : b.word) letters.push_back(l);
  return from_word(letters);
}

Element Group::inverse(const Element& a) const {
  std::vector<int> letters(a.word.rbegin(), a.word.rend());
  return from_word(letters);
}

Element Group::conjugate_by_generator(const Element& w, int s) const {
  std::vector<int> letters;
  letters.reserve(w.word.size() + 2);
  letters.push_back(s);
  for (auto l : w.word) letters.push_back(l);
  letters.push_back(s);
  return from_word(letters);
}

bool Group::is_left_descent(const Element& w, int s) const {
  return letter_negative(w.word, /*reversed=*/true, s);
}

bool Group::is_right_descent(const Element& w, int s) const {
  return letter_negative(w.word, /*reversed=*/false, s);
}

GenSet Group::left_descents(const Element& w) const {
  GenSet out;
  for (int s = 0; s < rank(); ++s)
    if (is_left_descent(w, s)) out = out.with(s);
  return out;
}

GenSet Group::right_descents(const Element& w) const {
  GenSet out;
  for (int s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) out = out.with(s);
  return out;
}

RootVector Group::apply_to_simple_root(const Element& w, int s) const {
  return apply_word(w.word, simple_root(s));
}

GenSet Group::support(const Element& w) const {
  GenSet out;
  for (auto l : w.word) out = out.with(l);
  return out;
}

std::vector<Element> Group::expand_level(const std::vector<Element>& level, GenSet letters,
                                         bool parallel) const {
  std::vector<std::vector<Element>> children(level.size());
  const auto expand_one = [&](std::size_t i) {
    std::vector<int> buf;
    for (int s : letters.members()) {
      buf.assign(level[i].word.begin(), level[i].word.end());
      buf.push_back(s);
      Element e = from_word(buf);
      if (e.length() == level[i].length() + 1) children[i].push_back(std::move(e));
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < level.size(); ++i) expand_one(i);
  } else {
    for (std::size_t i = 0; i < level.size(); ++i) expand_one(i);
  }
  std::vector<Element> next;
  for (auto& c : children)
    for (auto& e : c) next.push_back(std::move(e));
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<Element> Group::subgroup_ball(GenSet I, int N, const BallBudget& budget,
                                          bool parallel) const {
  std::vector<Element> all = {identity()};
  std::vector<Element> level = all;
  for (int k = 0; k < N && !level.empty(); ++k) {
    level = expand_level(level, I, parallel);
    if (all.size() + level.size() > budget.max_elements)
      throw BudgetExceededError("ball enumeration exceeds cap of " +
                                std::to_string(budget.max_elements) + " elements");
    all.insert(all.end(), level.begin(), level.end());
  }
  // Levels are produced in ShortLex order and lengths increase, so `all`
  // is already sorted.
  return all;
}

std::vector<Element> Group::ball(int N, const BallBudget& budget, bool parallel) const {
  return subgroup_ball(system_.matrix().all_generators(), N, budget, parallel);
}

std::string Group::format(const Element& w) const {
  if (w.word.empty()) return "e";
  bool single = true;
  for (const auto& l : system_.labels()) single = single && l.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i && !single) out += ",";
    out += system_.label(w.word[i]);
  }
  return out;
}

Element Group::parse_word(const std::string& text) const {
  if (text.empty() || text == "e" || text == "1") return identity();
  std::vector<int> letters;
  bool single = true;
  for (const auto& l : system_.labels()) single = single && l.size() == 1;
  if (text.find(',') == std::string::npos && single) {
    for (char c : text) letters.push_back(system_.generator_index(std::string(1, c)));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      letters.push_back(system_.generator_index(text.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == text.size()) break;
    }
  }
  return from_word(letters);
}

}  // namespace cox
