#pragma once

#include <optional>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

/// Dense matrix over an exact field.  Maps act on column vectors, and the
/// matrix of a composite g∘f is (matrix of g)·(matrix of f).
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, int rows, int cols);

  static Matrix identity(const FieldSpec& f, int n);
  static Matrix zero(const FieldSpec& f, int rows, int cols) {
    return Matrix(f, rows, cols);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  Matrix hstack(const Matrix& o) const;  // [this | o]
  Matrix vstack(const Matrix& o) const;  // [this ; o]
  Matrix submatrix(int row0, int col0, int nrows, int ncols) const;
  Matrix col(int j) const { return submatrix(0, j, rows_, 1); }

  /// Block-diagonal sum of this and o.
  Matrix direct_sum(const Matrix& o) const;

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  void check_field(const Matrix& o) const;

  int rows_ = 0, cols_ = 0;
  FieldSpec field_ = FieldSpec::rationals();
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;  // ascending
};

/// Reduced row-echelon form with leftmost-pivot-first elimination.  Fully
/// deterministic: the pivot of each step is the first nonzero entry, scanning
/// columns left to right and rows top to bottom.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Columns form the canonical basis of ker m (free variables set to 1,
/// one vector per non-pivot column).
Matrix kernel_basis(const Matrix& m);

/// Columns form a deterministic echelon basis of the column space of m.
Matrix image_basis(const Matrix& m);

struct Cokernel {
  Matrix projection;  // epi from the codomain of m
  int dim = 0;        // rows(m) - rank(m)
};

/// Surjection p with p·m = 0 presenting coker m, deterministic.
Cokernel cokernel_projection(const Matrix& m);

/// Exact solution x of m·x = b (multi-column b allowed), with free
/// variables set to zero.  Empty optional when no solution exists.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Exact solution x of x·m = b.
std::optional<Matrix> solve_left(const Matrix& m, const Matrix& b);

// -- subspaces (given by matrices whose columns span them) ------------------

bool in_column_space(const Matrix& space, const Matrix& vectors);
bool subspace_leq(const Matrix& a, const Matrix& b);  // span a ⊆ span b
bool subspace_eq(const Matrix& a, const Matrix& b);

/// Extends the independent columns of `space` to a basis of the ambient
/// space; returns the complement columns chosen greedily among standard
/// basis vectors (deterministic).
Matrix complement_in_ambient(const Matrix& space, int ambient_dim);

// -- universal constructions -------------------------------------------------

struct PullbackPair {
  Matrix p_a;  // P -> A
  Matrix p_b;  // P -> B
  int dim = 0;
};

/// Pullback of f: A -> C, g: B -> C, computed as ker [f | -g] ⊆ A⊕B.
PullbackPair pullback_pair(const Matrix& f, const Matrix& g);

/// Mediating map W -> P for a cone (u: W->A, v: W->B) with f·u = g·v.
Matrix pullback_factor(const PullbackPair& pb, const Matrix& u, const Matrix& v);

struct PushoutPair {
  Matrix i_a;  // A -> P
  Matrix i_b;  // B -> P
  int dim = 0;
};

/// Pushout of f: C -> A, g: C -> B, computed as coker (f,-g): C -> A⊕B.
PushoutPair pushout_pair(const Matrix& f, const Matrix& g);

/// Mediating map P -> W for a cocone (u: A->W, v: B->W) with u·f = v·g.
Matrix pushout_factor(const PushoutPair& po, const Matrix& u, const Matrix& v);

/// Kronecker product a⊗b acting on the lexicographic basis e_i⊗e_j
/// (index = i·cols(b)+j).
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace qhom
