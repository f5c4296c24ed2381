#include "qhom/ground.hpp"

namespace qhom {

GroundAlgebra::GroundAlgebra(FieldSpec field,
                             std::vector<std::string> basis_names,
                             std::vector<Matrix> left_mult, Matrix unit_coords,
                             std::optional<Matrix> radical_basis,
                             std::string name)
    : field_(field),
      basis_names_(std::move(basis_names)),
      left_mult_(std::move(left_mult)),
      unit_coords_(std::move(unit_coords)),
      radical_(std::move(radical_basis)),
      name_(std::move(name)) {
  const int n = dim();
  if (n < 1) throw PreconditionError("ground algebra must have dimension >= 1");
  if (static_cast<int>(basis_names_.size()) != n)
    throw PreconditionError("ground algebra basis name count mismatch");
  for (const Matrix& m : left_mult_)
    if (m.rows() != n || m.cols() != n || m.field() != field_)
      throw PreconditionError("ground algebra multiplication matrix shape");
  if (unit_coords_.rows() != n || unit_coords_.cols() != 1)
    throw PreconditionError("ground algebra unit must be a column vector");
}

Matrix GroundAlgebra::right_mult(int i) const {
  // column j of (x -> x*b_i) is b_j*b_i = left_mult(j) e_i.
  const int n = dim();
  Matrix r(field_, n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) r.at(k, j) = left_mult_[j].at(k, i);
  return r;
}

const Matrix& GroundAlgebra::radical_basis() const {
  if (!radical_)
    throw PreconditionError("radical of ground algebra '" + name_ +
                            "' is not known; operation unavailable");
  return *radical_;
}

bool GroundAlgebra::is_local() const {
  return dim() - rank(radical_basis()) == 1;
}

void GroundAlgebra::validate() const {
  const int n = dim();
  // Unit: 1*b_j = b_j and b_j*1 = b_j.
  Matrix lm_unit(field_, n, n);
  for (int i = 0; i < n; ++i)
    if (!unit_coords_.at(i, 0).is_zero())
      lm_unit = lm_unit + left_mult_[i].scaled(unit_coords_.at(i, 0));
  if (!(lm_unit == Matrix::identity(field_, n)))
    throw PreconditionError("ground algebra unit fails left unit law");
  for (int j = 0; j < n; ++j) {
    Matrix bj(field_, n, 1);
    bj.at(j, 0) = Scalar::one(field_);
    if (!(left_mult_[j] * unit_coords_ == bj))
      throw PreconditionError("ground algebra unit fails right unit law");
  }
  // Associativity: L_{b_i b_j} = L_{b_i} L_{b_j}.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix prod = left_mult_[i].col(j);  // coords of b_i b_j
      Matrix lhs(field_, n, n);
      for (int k = 0; k < n; ++k)
        if (!prod.at(k, 0).is_zero())
          lhs = lhs + left_mult_[k].scaled(prod.at(k, 0));
      if (!(lhs == left_mult_[i] * left_mult_[j]))
        throw PreconditionError(
            "ground algebra is not associative at basis pair (" +
            basis_names_[i] + ", " + basis_names_[j] + ")");
    }
  if (radical_) {
    // rad must be a nilpotent two-sided ideal.
    const Matrix& r = *radical_;
    for (int i = 0; i < n; ++i) {
      if (!in_column_space(r, left_mult_[i] * r))
        throw PreconditionError("declared radical is not a left ideal");
      if (!in_column_space(r, right_mult(i) * r))
        throw PreconditionError("declared radical is not a right ideal");
    }
    // Nilpotency: products of radical elements die within dim steps.
    Matrix power = r;
    for (int step = 0; step < n && power.cols() > 0; ++step) {
      Matrix next(field_, n, 0);
      for (int i = 0; i < r.cols(); ++i) {
        Matrix lm(field_, n, n);
        for (int k = 0; k < n; ++k)
          if (!r.at(k, i).is_zero())
            lm = lm + left_mult_[k].scaled(r.at(k, i));
        next = next.hstack(lm * power);
      }
      power = image_basis(next);
    }
    if (power.cols() > 0)
      throw PreconditionError("declared radical is not nilpotent");
  }
}

GroundAlgebra GroundAlgebra::opposite() const {
  std::vector<Matrix> lm;
  lm.reserve(left_mult_.size());
  for (int i = 0; i < dim(); ++i) lm.push_back(right_mult(i));
  return GroundAlgebra(field_, basis_names_, std::move(lm), unit_coords_,
                       radical_, name_ + "^op");
}

GroundPtr ground_field(const FieldSpec& field) {
  Matrix one = Matrix::identity(field, 1);
  auto g = std::make_shared<GroundAlgebra>(
      field, std::vector<std::string>{"1"}, std::vector<Matrix>{one}, one,
      Matrix(field, 1, 0), "k");
  g->validate();
  return g;
}

GroundPtr ground_dual_numbers(const FieldSpec& field) {
  // Basis {1, eps}, eps^2 = 0.
  Matrix l1 = Matrix::identity(field, 2);
  Matrix leps(field, 2, 2);
  leps.at(1, 0) = Scalar::one(field);  // eps*1 = eps
  Matrix unit(field, 2, 1);
  unit.at(0, 0) = Scalar::one(field);
  Matrix rad(field, 2, 1);
  rad.at(1, 0) = Scalar::one(field);
  auto g = std::make_shared<GroundAlgebra>(
      field, std::vector<std::string>{"1", "eps"},
      std::vector<Matrix>{l1, leps}, unit, rad, "dual");
  g->validate();
  return g;
}

GroundPtr ground_from_structure(const FieldSpec& field,
                                std::vector<std::string> basis_names,
                                std::vector<Matrix> left_mult,
                                Matrix unit_coords, std::string name) {
  const int n = static_cast<int>(left_mult.size());
  // Trace-form candidate: { x : tr(L_x L_{b_j}) = 0 for all j }.
  Matrix gram(field, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix prod = left_mult[i] * left_mult[j];
      Scalar tr = Scalar::zero(field);
      for (int k = 0; k < n; ++k) tr += prod.at(k, k);
      gram.at(i, j) = tr;
    }
  std::optional<Matrix> rad = kernel_basis(gram);
  auto attempt = std::make_shared<GroundAlgebra>(field, basis_names, left_mult,
                                                 unit_coords, rad, name);
  try {
    attempt->validate();
    return attempt;
  } catch (const PreconditionError&) {
    // The trace form can fail to cut out the radical in characteristic p;
    // fall back to an algebra with unknown radical (still validated).
    auto g = std::make_shared<GroundAlgebra>(field, std::move(basis_names),
                                             std::move(left_mult),
                                             std::move(unit_coords),
                                             std::nullopt, std::move(name));
    g->validate();
    return g;
  }
}

}  // namespace qhom
