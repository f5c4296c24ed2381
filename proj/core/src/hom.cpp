#include "qhom/hom.hpp"

namespace qhom {

RepMorphism HomSpace::morphism(int i) const { return from_coords_col(i); }

RepMorphism HomSpace::from_coords_col(int i) const {
  RepMorphism f{source_, target_, {}};
  for (std::size_t v = 0; v < source_.dims.size(); ++v) {
    Matrix m(source_.field(), target_.dims[v], source_.dims[v]);
    int off = offsets_[v];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = basis_.at(off + r * m.cols() + c, i);
    f.maps.push_back(m);
  }
  return f;
}

RepMorphism HomSpace::from_coords(const Matrix& coords) const {
  Matrix flat = basis_ * coords;
  RepMorphism f{source_, target_, {}};
  for (std::size_t v = 0; v < source_.dims.size(); ++v) {
    Matrix m(source_.field(), target_.dims[v], source_.dims[v]);
    int off = offsets_[v];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = flat.at(off + r * m.cols() + c, 0);
    f.maps.push_back(m);
  }
  return f;
}

Matrix HomSpace::flatten(const RepMorphism& f) const {
  Matrix v(source_.field(), flat_dim_, 1);
  for (std::size_t w = 0; w < source_.dims.size(); ++w) {
    const Matrix& m = f.maps[w];
    int off = offsets_[w];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) v.at(off + r * m.cols() + c, 0) = m.at(r, c);
  }
  return v;
}

Matrix HomSpace::coords_of(const RepMorphism& f) const {
  auto x = solve(basis_, flatten(f));
  if (!x) throw PreconditionError("morphism is not in the computed hom space");
  return *x;
}

RModule HomSpace::to_rmodule() const {
  GroundPtr g = target_.ground;
  std::vector<Matrix> act;
  if (has_r_action()) {
    act = r_action_;
  } else if (g->dim() == 1) {
    act = {Matrix::identity(source_.field(), dim())};
  } else {
    throw PreconditionError(
        "hom space carries no R-action (equivariant hom of R-modules?)");
  }
  RModule m;
  m.alg = point_algebra(source_.field());
  m.ground = g;
  m.dims = {dim()};
  m.action = {act};
  return m;
}

HomSpace hom_space(const Representation& m, const Representation& x,
                   bool equivariant) {
  if (!same_algebra(*m.alg, *x.alg))
    throw PreconditionError("hom_space: algebra mismatch");
  if (equivariant && m.ground->dim() != x.ground->dim())
    throw PreconditionError("hom_space: ground mismatch for equivariant hom");
  const FieldSpec& f = m.field();
  const int nv = m.alg->num_vertices();

  HomSpace h;
  h.source_ = m;
  h.target_ = x;
  h.offsets_.resize(nv);
  int flat = 0;
  for (int v = 0; v < nv; ++v) {
    h.offsets_[v] = flat;
    flat += x.dims[v] * m.dims[v];
  }
  h.flat_dim_ = flat;

  // Count constraint rows.
  int rows = 0;
  for (int a = 0; a < m.alg->num_arrows(); ++a) {
    const auto& ar = m.alg->quiver().arrows[a];
    rows += x.dims[ar.to] * m.dims[ar.from];
  }
  if (equivariant)
    for (int v = 0; v < nv; ++v)
      rows += x.dims[v] * m.dims[v] * x.ground->dim();

  Matrix sys(f, rows, flat);
  int row0 = 0;
  auto unknown = [&](int v, int r, int c) {
    return h.offsets_[v] + r * m.dims[v] + c;
  };
  for (int a = 0; a < m.alg->num_arrows(); ++a) {
    const auto& ar = m.alg->quiver().arrows[a];
    const Matrix& ma = m.arrow_maps[a];
    const Matrix& xa = x.arrow_maps[a];
    // H_to · M_a - X_a · H_from = 0, entry (r, c): r < x.dims[to], c < m.dims[from]
    for (int r = 0; r < x.dims[ar.to]; ++r)
      for (int c = 0; c < m.dims[ar.from]; ++c) {
        int row = row0 + r * m.dims[ar.from] + c;
        for (int k = 0; k < m.dims[ar.to]; ++k)
          if (!ma.at(k, c).is_zero())
            sys.at(row, unknown(ar.to, r, k)) += ma.at(k, c);
        for (int k = 0; k < x.dims[ar.from]; ++k)
          if (!xa.at(r, k).is_zero())
            sys.at(row, unknown(ar.from, k, c)) -= xa.at(r, k);
      }
    row0 += x.dims[ar.to] * m.dims[ar.from];
  }
  if (equivariant) {
    for (int v = 0; v < nv; ++v)
      for (int j = 0; j < x.ground->dim(); ++j) {
        const Matrix& mj = m.action[v][j];
        const Matrix& xj = x.action[v][j];
        for (int r = 0; r < x.dims[v]; ++r)
          for (int c = 0; c < m.dims[v]; ++c) {
            int row = row0 + r * m.dims[v] + c;
            for (int k = 0; k < m.dims[v]; ++k)
              if (!mj.at(k, c).is_zero())
                sys.at(row, unknown(v, r, k)) += mj.at(k, c);
            for (int k = 0; k < x.dims[v]; ++k)
              if (!xj.at(r, k).is_zero())
                sys.at(row, unknown(v, k, c)) -= xj.at(r, k);
          }
        row0 += x.dims[v] * m.dims[v];
      }
  }
  h.basis_ = kernel_basis(sys);

  if (!equivariant && x.ground->dim() > 1 && m.ground->dim() == 1) {
    // R acts on Hom_Q(M, X) through the target.
    for (int j = 0; j < x.ground->dim(); ++j) {
      Matrix act(f, flat, flat);
      for (int v = 0; v < nv; ++v) {
        const Matrix& xj = x.action[v][j];
        for (int r = 0; r < x.dims[v]; ++r)
          for (int k = 0; k < x.dims[v]; ++k)
            if (!xj.at(r, k).is_zero())
              for (int c = 0; c < m.dims[v]; ++c)
                act.at(unknown(v, r, c), unknown(v, k, c)) = xj.at(r, k);
      }
      auto coords = solve(h.basis_, act * h.basis_);
      if (!coords)
        throw EngineError("R-action does not preserve the hom space");
      h.r_action_.push_back(*coords);
    }
  }
  return h;
}

RModule hom_over_q(const Representation& m, const Representation& x) {
  return hom_space(m, x, false).to_rmodule();
}

int hom_dim_q(const Representation& m, const Representation& x) {
  return hom_space(m, x, false).dim();
}

int hom_dim_qr(const Representation& x, const Representation& y) {
  return hom_space(x, y, true).dim();
}

std::optional<RepMorphism> find_module_isomorphism(const Representation& a,
                                                   const Representation& b) {
  if (a.dims != b.dims) return std::nullopt;
  HomSpace h = hom_space(a, b, true);
  if (h.dim() == 0) {
    if (a.total_dim() == 0) return zero_morphism(a, b);
    return std::nullopt;
  }
  for (int i = 0; i < h.dim(); ++i) {
    RepMorphism f = h.morphism(i);
    if (is_iso(f)) return f;
  }
  Rng rng(0x71e57a11u);
  const FieldSpec& fld = a.field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix coords(fld, h.dim(), 1);
    for (int i = 0; i < h.dim(); ++i) coords.at(i, 0) = rng.scalar(fld, 4);
    RepMorphism f = h.from_coords(coords);
    if (is_iso(f)) return f;
  }
  return std::nullopt;
}

}  // namespace qhom
