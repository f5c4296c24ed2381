#include "qhom/matrix.hpp"

#include <sstream>

namespace qhom {

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix shape");
  e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

void Matrix::check_field(const Matrix& o) const {
  if (field_ != o.field_)
    throw PreconditionError("matrices over different fields");
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         e_ == o.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("matrix addition shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("matrix subtraction shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.rows_)
    throw PreconditionError("matrix product shape mismatch: " +
                            std::to_string(cols_) + " vs " +
                            std::to_string(o.rows_));
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (Scalar& s : r.e_) s = -s;
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (Scalar& s : r.e_) s *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_) throw PreconditionError("hstack row mismatch");
  Matrix r(field_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.cols_) throw PreconditionError("vstack column mismatch");
  Matrix r(field_, rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw PreconditionError("submatrix out of range");
  Matrix r(field_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  check_field(o);
  Matrix r(field_, rows_ + o.rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " [";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).to_string();
    }
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  Matrix& a = out.reduced;
  const int rows = a.rows(), cols = a.cols();
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int piv = -1;
    for (int r = lead; r < rows; ++r)
      if (!a.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(lead, j));
    Scalar inv = a.at(lead, c).inverse();
    for (int j = c; j < cols; ++j) a.at(lead, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || a.at(r, c).is_zero()) continue;
      Scalar factor = a.at(r, c);
      for (int j = c; j < cols; ++j)
        a.at(r, j) -= factor * a.at(lead, j);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  const int dim = cols - static_cast<int>(r.pivot_cols.size());
  Matrix k(m.field(), cols, dim);
  int col = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k.at(f, col) = Scalar::one(m.field());
    for (std::size_t j = 0; j < r.pivot_cols.size(); ++j)
      k.at(r.pivot_cols[j], col) = -r.reduced.at(static_cast<int>(j), f);
    ++col;
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  // Echelon basis of the column space: nonzero rows of rref(m^T), as columns.
  RrefResult r = rref(m.transpose());
  const int k = static_cast<int>(r.pivot_cols.size());
  Matrix b(m.field(), m.rows(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m.rows(); ++i) b.at(i, j) = r.reduced.at(j, i);
  return b;
}

Cokernel cokernel_projection(const Matrix& m) {
  RrefResult r = rref(m.transpose());
  const int n = m.rows();
  const int rk = static_cast<int>(r.pivot_cols.size());
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  Cokernel c;
  c.dim = n - rk;
  c.projection = Matrix(m.field(), c.dim, n);
  // Column i of the projection is the class of e_i: reduce e_i modulo the
  // echelon rows of the column space, keep the non-pivot coordinates.
  std::vector<int> nonpivot;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) nonpivot.push_back(i);
  for (int idx = 0; idx < c.dim; ++idx)
    c.projection.at(idx, nonpivot[idx]) = Scalar::one(m.field());
  for (int j = 0; j < rk; ++j)
    for (int idx = 0; idx < c.dim; ++idx)
      c.projection.at(idx, r.pivot_cols[j]) = -r.reduced.at(j, nonpivot[idx]);
  return c;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows())
    throw PreconditionError("solve: row count mismatch");
  RrefResult r = rref(m.hstack(b));
  const int mc = m.cols();
  for (int p : r.pivot_cols)
    if (p >= mc) return std::nullopt;  // inconsistent system
  Matrix x(m.field(), mc, b.cols());
  for (std::size_t j = 0; j < r.pivot_cols.size(); ++j)
    for (int c = 0; c < b.cols(); ++c)
      x.at(r.pivot_cols[j], c) = r.reduced.at(static_cast<int>(j), mc + c);
  return x;
}

std::optional<Matrix> solve_left(const Matrix& m, const Matrix& b) {
  auto xt = solve(m.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

bool in_column_space(const Matrix& space, const Matrix& vectors) {
  return solve(space, vectors).has_value();
}

bool subspace_leq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw PreconditionError("subspace comparison in different ambient spaces");
  return in_column_space(b, a);
}

bool subspace_eq(const Matrix& a, const Matrix& b) {
  return subspace_leq(a, b) && subspace_leq(b, a);
}

Matrix complement_in_ambient(const Matrix& space, int ambient_dim) {
  Matrix current = image_basis(space);
  std::vector<int> chosen;
  for (int i = 0; i < ambient_dim; ++i) {
    Matrix e(space.field(), ambient_dim, 1);
    e.at(i, 0) = Scalar::one(space.field());
    if (!in_column_space(current, e)) {
      chosen.push_back(i);
      current = current.hstack(e);
    }
  }
  Matrix comp(space.field(), ambient_dim, static_cast<int>(chosen.size()));
  for (std::size_t j = 0; j < chosen.size(); ++j)
    comp.at(chosen[j], static_cast<int>(j)) = Scalar::one(space.field());
  return comp;
}

PullbackPair pullback_pair(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.rows())
    throw PreconditionError("pullback: codomain dimension mismatch");
  Matrix k = kernel_basis(f.hstack(-g));
  PullbackPair pb;
  pb.dim = k.cols();
  pb.p_a = k.submatrix(0, 0, f.cols(), k.cols());
  pb.p_b = k.submatrix(f.cols(), 0, g.cols(), k.cols());
  return pb;
}

Matrix pullback_factor(const PullbackPair& pb, const Matrix& u,
                       const Matrix& v) {
  auto x = solve(pb.p_a.vstack(pb.p_b), u.vstack(v));
  if (!x)
    throw PreconditionError("pullback_factor: cone does not factor (not a cone?)");
  return *x;
}

PushoutPair pushout_pair(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.cols())
    throw PreconditionError("pushout: domain dimension mismatch");
  Cokernel c = cokernel_projection(f.vstack(-g));
  PushoutPair po;
  po.dim = c.dim;
  po.i_a = c.projection.submatrix(0, 0, c.dim, f.rows());
  po.i_b = c.projection.submatrix(0, f.rows(), c.dim, g.rows());
  return po;
}

Matrix pushout_factor(const PushoutPair& po, const Matrix& u, const Matrix& v) {
  auto x = solve_left(po.i_a.hstack(po.i_b), u.hstack(v));
  if (!x)
    throw PreconditionError("pushout_factor: cocone does not factor");
  return *x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

}  // namespace qhom
