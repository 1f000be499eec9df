#pragma once

#include <string>
#include <vector>

#include "cox/classification.hpp"
#include "cox/coxeter_matrix.hpp"

namespace cox {

// A validated Coxeter system: matrix, generator labels and derived
// classification data.  Immutable after construction.
class CoxeterSystem {
 public:
  CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> labels);

  // Parses the system file format: a JSON object with fields "generators"
  // (array of distinct strings) and "matrix" (array of arrays of
  // non-negative integers, 0 meaning infinity).  Anything else is rejected.
  static CoxeterSystem parse(const std::string& text);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int s) const { return labels_[s]; }
  // Index of the generator with the given label; throws ParseError if absent.
  int generator_index(const std::string& label) const;

  const TypeClass& classification() const { return classification_; }
  const std::vector<GenSet>& generator_classes() const { return generator_classes_; }
  // Index into generator_classes() of the class containing s.
  int class_of(int s) const { return class_of_[s]; }

 private:
  CoxeterMatrix matrix_;
  std::vector<std::string> labels_;
  TypeClass classification_;
  std::vector<GenSet> generator_classes_;
  std::vector<int> class_of_;
};

}  // namespace cox
