#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhom/matrix.hpp"

namespace qhom {

/// A finite-dimensional unital associative k-algebra R given by structure
/// constants.  Carries (when known) a basis of its Jacobson radical; minimal
/// covers and the projective/injective predicates over R require it.
class GroundAlgebra {
 public:
  /// left_mult[i] is the matrix of x -> b_i * x in the chosen basis.
  GroundAlgebra(FieldSpec field, std::vector<std::string> basis_names,
                std::vector<Matrix> left_mult, Matrix unit_coords,
                std::optional<Matrix> radical_basis, std::string name);

  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(left_mult_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Matrix& left_mult(int i) const { return left_mult_[i]; }
  Matrix right_mult(int i) const;  // x -> x * b_i
  const Matrix& unit_coords() const { return unit_coords_; }

  bool has_radical() const { return radical_.has_value(); }
  /// Columns span rad R (throws when unknown).
  const Matrix& radical_basis() const;
  bool is_local() const;  // requires known radical: dim R/rad == 1

  /// Unit laws and associativity on all basis triples.
  void validate() const;

  /// Structure constants transposed (the opposite algebra R^op).
  GroundAlgebra opposite() const;

 private:
  FieldSpec field_;
  std::vector<std::string> basis_names_;
  std::vector<Matrix> left_mult_;
  Matrix unit_coords_;
  std::optional<Matrix> radical_;
  std::string name_;
};

using GroundPtr = std::shared_ptr<const GroundAlgebra>;

/// R = k, one-dimensional.
GroundPtr ground_field(const FieldSpec& field);

/// R = k[eps]/(eps^2), the dual numbers.
GroundPtr ground_dual_numbers(const FieldSpec& field);

/// Builds a ground algebra from raw structure constants and attempts to
/// find its radical via the trace form (verified afterwards: two-sided,
/// nilpotent, correct over perfect fields in the cases this toolkit
/// supports; left unknown when verification fails).
GroundPtr ground_from_structure(const FieldSpec& field,
                                std::vector<std::string> basis_names,
                                std::vector<Matrix> left_mult,
                                Matrix unit_coords, std::string name);

}  // namespace qhom
