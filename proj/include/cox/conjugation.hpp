#pragma once

#include <optional>
#include <variant>

#include "cox/element.hpp"

namespace cox {

// One conjugation w -> sws with the length change.
struct ConjugationStep {
  int generator;
  Element from;
  Element to;
  int delta;  // l(to) - l(from), in {-2, 0, +2}

  friend bool operator==(const ConjugationStep&, const ConjugationStep&) = default;
};

// Chain of non-decreasing conjugation steps.
struct GrowthCertificate {
  std::vector<ConjugationStep> steps;
  int gain = 0;
};

// The full (finite) non-decreasing reachable set was enumerated and contains
// no element with the requested gain: an exact disproof.
struct Exhausted {
  std::vector<Element> reachable;
};

struct BudgetExceeded {};

using UplusSearchResult = std::variant<GrowthCertificate, Exhausted, BudgetExceeded>;

struct SearchBudget {
  int depth_limit = 64;
  std::size_t size_limit = 1'000'000;
};

using FlatClosureResult = std::variant<std::vector<Element>, BudgetExceeded>;

struct BadChamberVerdict {
  enum class Status { NotBad, Bad, Inconclusive };
  Status status;
  std::optional<GrowthCertificate> escape;   // NotBad: non-decreasing, non-flat witness
  std::vector<Element> flat_closure;         // Bad: complete closure under flat steps
};

struct FiniteClass {
  std::vector<Element> members;
};
struct ExceedsBound {};
using ConjugacyClassResult = std::variant<FiniteClass, ExceedsBound>;

// All steps (s in I, w -> sws) with delta >= 0, ordered by generator index.
std::vector<ConjugationStep> uplus_neighbors(const Group& g, const Element& w, GenSet I);

// BFS over non-decreasing steps from w; shortest certificate with
// gain >= target_gain, Exhausted on complete enumeration without one,
// BudgetExceeded otherwise.
UplusSearchResult uplus_bfs(const Group& g, const Element& w, GenSet I, int target_gain,
                            const SearchBudget& budget = {});

// Closure of {w} under delta = 0 steps.
FlatClosureResult flat_closure(const Group& g, const Element& w, std::size_t max_size);

// Badness of the chamber v C_0 for w, decided through the flat closure of
// v^{-1} w v.
BadChamberVerdict w_bad_decide(const Group& g, const Element& w, const Element& v,
                               std::size_t max_size);

// Closure of {w} under all generator conjugations, capped at `bound` elements.
ConjugacyClassResult conjugacy_class_bounded(const Group& g, const Element& w, std::size_t bound);

// Affine systems only: w acts trivially on the quotient of the reflection
// representation by the radical of the bilinear form.
bool is_translation(const Group& g, const Element& w);

// Independent replay of a certificate through the element engine: checks the
// chain from `start`, every conjugation, every delta, and the gain.
bool replay_growth_certificate(const Group& g, const Element& start,
                               const GrowthCertificate& cert, std::string* error = nullptr);

// Batch wrapper over uplus_bfs (OpenMP across seeds when `parallel`).
std::vector<UplusSearchResult> scan_growth_certificates(const Group& g,
                                                        const std::vector<Element>& seeds,
                                                        int target_gain,
                                                        const SearchBudget& budget = {},
                                                        bool parallel = true);

}  // namespace cox
