#include "qhom/rep.hpp"

#include <map>
#include <mutex>

namespace qhom {

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

Matrix Representation::eval_path(const std::vector<int>& path, int from) const {
  Matrix m = Matrix::identity(field(), dims[from]);
  for (int a : path) m = arrow_maps[a] * m;
  return m;
}

Matrix Representation::eval_class(int basis_idx) const {
  const auto& b = alg->basis()[basis_idx];
  return eval_path(b.path, b.from);
}

Matrix Representation::eval_ground(int v, const Matrix& coords) const {
  Matrix m(field(), dims[v], dims[v]);
  for (int i = 0; i < coords.rows(); ++i)
    if (!coords.at(i, 0).is_zero())
      m = m + action[v][i].scaled(coords.at(i, 0));
  return m;
}

AlgebraPtr point_algebra(const FieldSpec& field) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(field.to_string());
  if (it != cache.end()) return it->second;
  AlgebraPtr a = build_algebra_ptr(point_quiver(), field);
  cache[field.to_string()] = a;
  return a;
}

Representation zero_rep(AlgebraPtr alg, GroundPtr ground) {
  Representation x;
  x.alg = std::move(alg);
  x.ground = std::move(ground);
  const int nv = x.alg->num_vertices();
  x.dims.assign(nv, 0);
  const FieldSpec& f = x.alg->field();
  for (const auto& a : x.alg->quiver().arrows)
    x.arrow_maps.push_back(Matrix(f, x.dims[a.to], x.dims[a.from]));
  x.action.assign(nv, std::vector<Matrix>(x.ground->dim(), Matrix(f, 0, 0)));
  return x;
}

void validate_representation(const Representation& x) {
  const FieldSpec& f = x.field();
  if (x.ground->field() != f)
    throw PreconditionError("ground algebra field differs from quiver field");
  const auto& q = x.alg->quiver();
  const int nv = x.alg->num_vertices();
  if (static_cast<int>(x.dims.size()) != nv)
    throw PreconditionError("dimension vector length mismatch");
  if (static_cast<int>(x.arrow_maps.size()) != x.alg->num_arrows())
    throw PreconditionError("arrow map count mismatch");
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = q.arrows[a];
    const Matrix& m = x.arrow_maps[a];
    if (m.rows() != x.dims[ar.to] || m.cols() != x.dims[ar.from] ||
        m.field() != f)
      throw PreconditionError("arrow map shape mismatch at arrow '" + ar.name +
                              "'");
  }
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(x.action[v].size()) != x.ground->dim())
      throw PreconditionError("ground action count mismatch at vertex '" +
                              q.vertices[v] + "'");
    for (int j = 0; j < x.ground->dim(); ++j) {
      const Matrix& m = x.action[v][j];
      if (m.rows() != x.dims[v] || m.cols() != x.dims[v])
        throw PreconditionError("ground action shape mismatch at vertex '" +
                                q.vertices[v] + "', basis element '" +
                                x.ground->basis_names()[j] + "'");
    }
    // Unit law and the module law b_i (b_j x) = (b_i b_j) x.
    if (!(x.eval_ground(v, x.ground->unit_coords()) ==
          Matrix::identity(f, x.dims[v])))
      throw PreconditionError("ground unit does not act as identity at vertex '" +
                              q.vertices[v] + "'");
    for (int i = 0; i < x.ground->dim(); ++i)
      for (int j = 0; j < x.ground->dim(); ++j) {
        Matrix lhs = x.action[v][i] * x.action[v][j];
        Matrix rhs = x.eval_ground(v, x.ground->left_mult(i).col(j));
        if (!(lhs == rhs))
          throw PreconditionError(
              "ground action fails the module law at vertex '" +
              q.vertices[v] + "', basis elements '" +
              x.ground->basis_names()[i] + "', '" + x.ground->basis_names()[j] +
              "'");
      }
  }
  // R-equivariance of the arrow maps.
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = q.arrows[a];
    for (int j = 0; j < x.ground->dim(); ++j)
      if (!(x.arrow_maps[a] * x.action[ar.from][j] ==
            x.action[ar.to][j] * x.arrow_maps[a]))
        throw PreconditionError("arrow '" + ar.name +
                                "' is not equivariant for ground basis "
                                "element '" +
                                x.ground->basis_names()[j] + "'");
  }
  // Relations evaluate to zero.
  for (const auto& rel : q.relations) {
    auto [from, to] = q.path_endpoints(rel.front().path);
    Matrix sum(f, x.dims[to], x.dims[from]);
    for (const auto& term : rel)
      sum = sum + x.eval_path(term.path, from)
                      .scaled(Scalar::from_rational(f, term.coef));
    if (!sum.is_zero())
      throw PreconditionError("relation failure between vertices '" +
                              q.vertices[from] + "' and '" + q.vertices[to] +
                              "'");
  }
}

bool is_morphism(const RepMorphism& fm) {
  const Representation& x = fm.source;
  const Representation& y = fm.target;
  if (!same_algebra(*x.alg, *y.alg)) return false;
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = x.alg->quiver().arrows[a];
    if (!(fm.maps[ar.to] * x.arrow_maps[a] == y.arrow_maps[a] * fm.maps[ar.from]))
      return false;
  }
  if (x.ground->dim() == y.ground->dim())
    for (int v = 0; v < x.alg->num_vertices(); ++v)
      for (int j = 0; j < x.ground->dim(); ++j)
        if (!(fm.maps[v] * x.action[v][j] == y.action[v][j] * fm.maps[v]))
          return false;
  return true;
}

Representation simple(AlgebraPtr alg, int q) {
  if (q < 0 || q >= alg->num_vertices())
    throw PreconditionError("unknown vertex index " + std::to_string(q));
  const FieldSpec& f = alg->field();
  Representation s = zero_rep(alg, ground_field(f));
  s.dims[q] = 1;
  for (int a = 0; a < s.alg->num_arrows(); ++a) {
    const auto& ar = s.alg->quiver().arrows[a];
    s.arrow_maps[a] = Matrix(f, s.dims[ar.to], s.dims[ar.from]);
  }
  for (int v = 0; v < s.alg->num_vertices(); ++v)
    s.action[v] = {Matrix::identity(f, s.dims[v])};
  return s;
}

Representation proj(AlgebraPtr alg, int q) {
  if (q < 0 || q >= alg->num_vertices())
    throw PreconditionError("unknown vertex index " + std::to_string(q));
  const FieldSpec& f = alg->field();
  const int dim = alg->dim();
  std::vector<int> pos(dim, -1);
  for (int w = 0; w < alg->num_vertices(); ++w) {
    const auto& cl = alg->classes(q, w);
    for (std::size_t i = 0; i < cl.size(); ++i)
      pos[cl[i]] = static_cast<int>(i);
  }
  Representation p = zero_rep(alg, ground_field(f));
  for (int w = 0; w < alg->num_vertices(); ++w)
    p.dims[w] = alg->hom_dim(q, w);
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    Matrix m(f, p.dims[ar.to], p.dims[ar.from]);
    const auto& cl = alg->classes(q, ar.from);
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (const auto& [c2, s] : alg->compose(alg->arrow_class(a), cl[i]))
        m.at(pos[c2], static_cast<int>(i)) += s;
    p.arrow_maps[a] = m;
  }
  for (int v = 0; v < alg->num_vertices(); ++v)
    p.action[v] = {Matrix::identity(f, p.dims[v])};
  return p;
}

Representation inj(AlgebraPtr alg, int q) {
  if (q < 0 || q >= alg->num_vertices())
    throw PreconditionError("unknown vertex index " + std::to_string(q));
  const FieldSpec& f = alg->field();
  std::vector<int> pos(alg->dim(), -1);
  for (int w = 0; w < alg->num_vertices(); ++w) {
    const auto& cl = alg->classes(w, q);
    for (std::size_t i = 0; i < cl.size(); ++i)
      pos[cl[i]] = static_cast<int>(i);
  }
  Representation p = zero_rep(alg, ground_field(f));
  for (int w = 0; w < alg->num_vertices(); ++w)
    p.dims[w] = alg->hom_dim(w, q);
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    // Precomposition Q(to, q) -> Q(from, q), then dualize.
    Matrix pre(f, p.dims[ar.from], p.dims[ar.to]);
    const auto& cl = alg->classes(ar.to, q);
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (const auto& [c2, s] : alg->compose(cl[i], alg->arrow_class(a)))
        pre.at(pos[c2], static_cast<int>(i)) += s;
    p.arrow_maps[a] = pre.transpose();
  }
  for (int v = 0; v < alg->num_vertices(); ++v)
    p.action[v] = {Matrix::identity(f, p.dims[v])};
  return p;
}

Representation s_functor(AlgebraPtr alg, int q, const RModule& m) {
  if (q < 0 || q >= alg->num_vertices())
    throw PreconditionError("unknown vertex index " + std::to_string(q));
  Representation s = zero_rep(alg, m.ground);
  s.dims[q] = m.dims[0];
  const FieldSpec& f = alg->field();
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    s.arrow_maps[a] = Matrix(f, s.dims[ar.to], s.dims[ar.from]);
  }
  for (int v = 0; v < alg->num_vertices(); ++v)
    for (int j = 0; j < m.ground->dim(); ++j)
      s.action[v][j] = v == q ? m.action[0][j] : Matrix(f, 0, 0);
  return s;
}

RModule free_rmodule(GroundPtr ground, int n) {
  const FieldSpec& f = ground->field();
  RModule m;
  m.alg = point_algebra(f);
  m.ground = ground;
  m.dims = {n * ground->dim()};
  std::vector<Matrix> act;
  for (int j = 0; j < ground->dim(); ++j)
    act.push_back(kronecker(Matrix::identity(f, n), ground->left_mult(j)));
  m.action = {act};
  return m;
}

RModule dual_of_regular(GroundPtr ground) {
  const FieldSpec& f = ground->field();
  RModule m;
  m.alg = point_algebra(f);
  m.ground = ground;
  m.dims = {ground->dim()};
  std::vector<Matrix> act;
  for (int j = 0; j < ground->dim(); ++j)
    act.push_back(ground->right_mult(j).transpose());
  m.action = {act};
  return m;
}

RModule simple_rmodule(GroundPtr ground) {
  const FieldSpec& f = ground->field();
  const Matrix& rad = ground->radical_basis();
  Cokernel c = cokernel_projection(rad);
  RModule m;
  m.alg = point_algebra(f);
  m.ground = ground;
  m.dims = {c.dim};
  std::vector<Matrix> act;
  for (int j = 0; j < ground->dim(); ++j) {
    auto a = solve_left(c.projection, c.projection * ground->left_mult(j));
    if (!a) throw EngineError("simple module action failed to descend");
    act.push_back(*a);
  }
  m.action = {act};
  return m;
}

RModule rmodule_from_action(GroundPtr ground, std::vector<Matrix> action) {
  RModule m;
  m.alg = point_algebra(ground->field());
  m.ground = ground;
  m.dims = {action.empty() ? 0 : action[0].rows()};
  m.action = {std::move(action)};
  validate_representation(m);
  return m;
}

Representation tensor_k(const Representation& m, const RModule& b) {
  if (m.ground->dim() != 1)
    throw PreconditionError("tensor_k: left factor must have ground k");
  const FieldSpec& f = m.field();
  const int bd = b.dims[0];
  Representation t = zero_rep(m.alg, b.ground);
  for (int v = 0; v < m.alg->num_vertices(); ++v) t.dims[v] = m.dims[v] * bd;
  for (int a = 0; a < m.alg->num_arrows(); ++a)
    t.arrow_maps[a] =
        kronecker(m.arrow_maps[a], Matrix::identity(f, bd));
  for (int v = 0; v < m.alg->num_vertices(); ++v)
    for (int j = 0; j < b.ground->dim(); ++j)
      t.action[v][j] =
          kronecker(Matrix::identity(f, m.dims[v]), b.action[0][j]);
  return t;
}

RepMorphism tensor_k_map_left(const RepMorphism& fm, const RModule& b) {
  RepMorphism r;
  r.source = tensor_k(fm.source, b);
  r.target = tensor_k(fm.target, b);
  const FieldSpec& f = b.field();
  for (std::size_t v = 0; v < fm.maps.size(); ++v)
    r.maps.push_back(kronecker(fm.maps[v], Matrix::identity(f, b.dims[0])));
  return r;
}

RepMorphism tensor_k_map_right(const Representation& m, const RepMorphism& g) {
  RepMorphism r;
  r.source = tensor_k(m, g.source);
  r.target = tensor_k(m, g.target);
  const FieldSpec& f = m.field();
  for (int v = 0; v < m.alg->num_vertices(); ++v)
    r.maps.push_back(kronecker(Matrix::identity(f, m.dims[v]), g.maps[0]));
  return r;
}

Representation hom_k(AlgebraPtr alg, const Representation& n, const RModule& b) {
  // n is a right module: a representation of the opposite algebra.
  if (n.ground->dim() != 1)
    throw PreconditionError("hom_k: right module must have ground k");
  const FieldSpec& f = alg->field();
  const int bd = b.dims[0];
  Representation h = zero_rep(alg, b.ground);
  for (int v = 0; v < alg->num_vertices(); ++v) h.dims[v] = n.dims[v] * bd;
  for (int a = 0; a < alg->num_arrows(); ++a) {
    // n.arrow_maps[a]: N(to) -> N(from) over the opposite quiver;
    // Hom(N(from), B) -> Hom(N(to), B) is precomposition.
    h.arrow_maps[a] =
        kronecker(n.arrow_maps[a].transpose(), Matrix::identity(f, bd));
  }
  for (int v = 0; v < alg->num_vertices(); ++v)
    for (int j = 0; j < b.ground->dim(); ++j)
      h.action[v][j] =
          kronecker(Matrix::identity(f, n.dims[v]), b.action[0][j]);
  return h;
}

Representation dual(const Representation& m, AlgebraPtr op) {
  if (m.ground->dim() != 1)
    throw PreconditionError("dual: defined over ground k only");
  return dual_gamma(m, op, m.ground);
}

RepMorphism dual_map(const RepMorphism& fm, AlgebraPtr op) {
  RepMorphism r;
  r.source = dual(fm.target, op);
  r.target = dual(fm.source, op);
  for (const Matrix& m : fm.maps) r.maps.push_back(m.transpose());
  return r;
}

Representation dual_gamma(const Representation& x, AlgebraPtr op,
                          GroundPtr op_ground) {
  Representation d = zero_rep(op, op_ground);
  d.dims = x.dims;
  for (int a = 0; a < op->num_arrows(); ++a)
    d.arrow_maps[a] = x.arrow_maps[a].transpose();
  for (int v = 0; v < op->num_vertices(); ++v) {
    d.action[v].clear();
    for (int j = 0; j < op_ground->dim(); ++j)
      d.action[v].push_back(x.action[v][j].transpose());
  }
  return d;
}

Representation forget_ground(const Representation& x) {
  Representation y = x;
  y.ground = ground_field(x.field());
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    y.action[v] = {Matrix::identity(x.field(), x.dims[v])};
  return y;
}

Representation direct_sum(const Representation& x, const Representation& y) {
  Representation s = zero_rep(x.alg, x.ground);
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    s.dims[v] = x.dims[v] + y.dims[v];
  for (int a = 0; a < x.alg->num_arrows(); ++a)
    s.arrow_maps[a] = x.arrow_maps[a].direct_sum(y.arrow_maps[a]);
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    for (int j = 0; j < x.ground->dim(); ++j)
      s.action[v][j] = x.action[v][j].direct_sum(y.action[v][j]);
  return s;
}

namespace {

// Induced structure on a subspace given by per-vertex bases.
Representation induce_on_sub(const Representation& x,
                             const std::vector<Matrix>& bases) {
  Representation k = zero_rep(x.alg, x.ground);
  for (int v = 0; v < x.alg->num_vertices(); ++v) k.dims[v] = bases[v].cols();
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = x.alg->quiver().arrows[a];
    auto m = solve(bases[ar.to], x.arrow_maps[a] * bases[ar.from]);
    if (!m) throw EngineError("subobject is not closed under an arrow map");
    k.arrow_maps[a] = *m;
  }
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    for (int j = 0; j < x.ground->dim(); ++j) {
      auto m = solve(bases[v], x.action[v][j] * bases[v]);
      if (!m) throw EngineError("subobject is not closed under the R-action");
      k.action[v][j] = *m;
    }
  return k;
}

// Induced structure on a quotient given by per-vertex projections.
Representation induce_on_quot(const Representation& x,
                              const std::vector<Matrix>& projs) {
  Representation q = zero_rep(x.alg, x.ground);
  for (int v = 0; v < x.alg->num_vertices(); ++v) q.dims[v] = projs[v].rows();
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = x.alg->quiver().arrows[a];
    auto m = solve_left(projs[ar.from], projs[ar.to] * x.arrow_maps[a]);
    if (!m) throw EngineError("arrow map does not descend to the quotient");
    q.arrow_maps[a] = *m;
  }
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    for (int j = 0; j < x.ground->dim(); ++j) {
      auto m = solve_left(projs[v], projs[v] * x.action[v][j]);
      if (!m) throw EngineError("R-action does not descend to the quotient");
      q.action[v][j] = *m;
    }
  return q;
}

}  // namespace

SubObject kernel(const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (const Matrix& m : f.maps) bases.push_back(kernel_basis(m));
  SubObject s;
  s.obj = induce_on_sub(f.source, bases);
  s.incl = {s.obj, f.source, bases};
  return s;
}

QuotObject cokernel(const RepMorphism& f) {
  std::vector<Matrix> projs;
  for (const Matrix& m : f.maps) projs.push_back(cokernel_projection(m).projection);
  QuotObject q;
  q.obj = induce_on_quot(f.target, projs);
  q.proj = {f.target, q.obj, projs};
  return q;
}

SubObject image(const RepMorphism& f) {
  std::vector<Matrix> bases;
  for (const Matrix& m : f.maps) bases.push_back(image_basis(m));
  SubObject s;
  s.obj = induce_on_sub(f.target, bases);
  s.incl = {s.obj, f.target, bases};
  return s;
}

RepMorphism identity_morphism(const Representation& x) {
  RepMorphism f{x, x, {}};
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    f.maps.push_back(Matrix::identity(x.field(), x.dims[v]));
  return f;
}

RepMorphism zero_morphism(const Representation& x, const Representation& y) {
  RepMorphism f{x, y, {}};
  for (int v = 0; v < x.alg->num_vertices(); ++v)
    f.maps.push_back(Matrix(x.field(), y.dims[v], x.dims[v]));
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism r{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    r.maps.push_back(g.maps[v] * f.maps[v]);
  return r;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism r{f.source, f.target, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    r.maps.push_back(f.maps[v] + g.maps[v]);
  return r;
}

bool is_mono(const RepMorphism& f) {
  for (const Matrix& m : f.maps)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_epi(const RepMorphism& f) {
  for (const Matrix& m : f.maps)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool is_iso(const RepMorphism& f) {
  for (const Matrix& m : f.maps)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

RepPullback rep_pullback(const RepMorphism& f, const RepMorphism& g) {
  const Representation& x = f.source;
  const Representation& y = g.source;
  Representation sum = direct_sum(x, y);
  std::vector<Matrix> bases, pa, pb;
  for (int v = 0; v < x.alg->num_vertices(); ++v) {
    PullbackPair pp = pullback_pair(f.maps[v], g.maps[v]);
    bases.push_back(pp.p_a.vstack(pp.p_b));
    pa.push_back(pp.p_a);
    pb.push_back(pp.p_b);
  }
  RepPullback out;
  out.obj = induce_on_sub(sum, bases);
  out.to_first = {out.obj, x, pa};
  out.to_second = {out.obj, y, pb};
  return out;
}

RepMorphism rep_pullback_factor(const RepPullback& pb, const RepMorphism& u,
                                const RepMorphism& v) {
  RepMorphism r{u.source, pb.obj, {}};
  for (std::size_t w = 0; w < u.maps.size(); ++w) {
    auto x = solve(pb.to_first.maps[w].vstack(pb.to_second.maps[w]),
                   u.maps[w].vstack(v.maps[w]));
    if (!x) throw PreconditionError("cone does not factor through the pullback");
    r.maps.push_back(*x);
  }
  return r;
}

RepPushout rep_pushout(const RepMorphism& f, const RepMorphism& g) {
  const Representation& x = f.target;
  const Representation& y = g.target;
  Representation sum = direct_sum(x, y);
  std::vector<Matrix> projs, ia, ib;
  for (int v = 0; v < x.alg->num_vertices(); ++v) {
    PushoutPair pp = pushout_pair(f.maps[v], g.maps[v]);
    projs.push_back(pp.i_a.hstack(pp.i_b));
    ia.push_back(pp.i_a);
    ib.push_back(pp.i_b);
  }
  RepPushout out;
  out.obj = induce_on_quot(sum, projs);
  out.from_first = {x, out.obj, ia};
  out.from_second = {y, out.obj, ib};
  return out;
}

RepMorphism rep_pushout_factor(const RepPushout& po, const RepMorphism& u,
                               const RepMorphism& v) {
  RepMorphism r{po.obj, u.target, {}};
  for (std::size_t w = 0; w < u.maps.size(); ++w) {
    auto x = solve_left(po.from_first.maps[w].hstack(po.from_second.maps[w]),
                        u.maps[w].hstack(v.maps[w]));
    if (!x)
      throw PreconditionError("cocone does not factor through the pushout");
    r.maps.push_back(*x);
  }
  return r;
}

RepMorphism restrict_to_sub(const SubObject& sub, const RepMorphism& f) {
  RepMorphism r{f.source, sub.obj, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto x = solve(sub.incl.maps[v], f.maps[v]);
    if (!x) throw PreconditionError("morphism does not land in the subobject");
    r.maps.push_back(*x);
  }
  return r;
}

RepMorphism descend_to_quot(const QuotObject& quot, const RepMorphism& f) {
  RepMorphism r{quot.obj, f.target, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto x = solve_left(quot.proj.maps[v], f.maps[v]);
    if (!x) throw PreconditionError("morphism does not descend to the quotient");
    r.maps.push_back(*x);
  }
  return r;
}

ProjectiveSum projective_sum(AlgebraPtr alg, GroundPtr ground,
                             const std::vector<int>& heads) {
  const FieldSpec& f = alg->field();
  const int nv = alg->num_vertices();
  const int dr = ground->dim();
  ProjectiveSum out;
  out.heads = heads;
  out.rep = zero_rep(alg, ground);
  out.offsets.assign(heads.size(), std::vector<int>(nv, 0));
  for (int w = 0; w < nv; ++w) {
    int off = 0;
    for (std::size_t s = 0; s < heads.size(); ++s) {
      out.offsets[s][w] = off;
      off += alg->hom_dim(heads[s], w) * dr;
    }
    out.rep.dims[w] = off;
  }
  std::vector<int> pos(alg->dim(), -1);
  auto fill_pos = [&](int head) {
    for (int w = 0; w < nv; ++w) {
      const auto& cl = alg->classes(head, w);
      for (std::size_t i = 0; i < cl.size(); ++i)
        pos[cl[i]] = static_cast<int>(i);
    }
  };
  for (int a = 0; a < alg->num_arrows(); ++a) {
    const auto& ar = alg->quiver().arrows[a];
    Matrix m(f, out.rep.dims[ar.to], out.rep.dims[ar.from]);
    for (std::size_t s = 0; s < heads.size(); ++s) {
      fill_pos(heads[s]);
      const auto& cl = alg->classes(heads[s], ar.from);
      for (std::size_t i = 0; i < cl.size(); ++i)
        for (const auto& [c2, sc] : alg->compose(alg->arrow_class(a), cl[i]))
          for (int r = 0; r < dr; ++r)
            m.at(out.offsets[s][ar.to] + pos[c2] * dr + r,
                 out.offsets[s][ar.from] + static_cast<int>(i) * dr + r) += sc;
    }
    out.rep.arrow_maps[a] = m;
  }
  for (int v = 0; v < nv; ++v)
    for (int j = 0; j < dr; ++j) {
      Matrix m(f, out.rep.dims[v], out.rep.dims[v]);
      const Matrix& lm = ground->left_mult(j);
      for (std::size_t s = 0; s < heads.size(); ++s) {
        const int nc = alg->hom_dim(heads[s], v);
        for (int c = 0; c < nc; ++c)
          for (int r2 = 0; r2 < dr; ++r2)
            for (int r1 = 0; r1 < dr; ++r1)
              if (!lm.at(r1, r2).is_zero())
                m.at(out.offsets[s][v] + c * dr + r1,
                     out.offsets[s][v] + c * dr + r2) += lm.at(r1, r2);
      }
      out.rep.action[v][j] = m;
    }
  return out;
}

/// Morphism out of a sum of projectives, determined freely by the images of
/// the summand generators e_head⊗1 (one column vector in target(head) each).
RepMorphism morphism_from_generator_images(const ProjectiveSum& src,
                                           const Representation& target,
                                           const std::vector<Matrix>& images) {
  const AlgebraPtr& alg = src.rep.alg;
  const FieldSpec& f = alg->field();
  const int dr = src.rep.ground->dim();
  RepMorphism fm{src.rep, target, {}};
  for (int w = 0; w < alg->num_vertices(); ++w) {
    Matrix m(f, target.dims[w], src.rep.dims[w]);
    for (std::size_t s = 0; s < src.heads.size(); ++s) {
      const auto& cl = alg->classes(src.heads[s], w);
      for (std::size_t ci = 0; ci < cl.size(); ++ci) {
        Matrix base = target.eval_class(cl[ci]) * images[s];
        for (int r = 0; r < dr; ++r) {
          Matrix rho(f, dr, 1);
          rho.at(r, 0) = Scalar::one(f);
          Matrix val = target.eval_ground(w, rho) * base;
          for (int i = 0; i < target.dims[w]; ++i)
            m.at(i, src.offsets[s][w] + static_cast<int>(ci) * dr + r) =
                val.at(i, 0);
        }
      }
    }
    fm.maps.push_back(m);
  }
  return fm;
}

namespace {

std::vector<int> capped_heads(const AlgebraPtr& alg, const GroundPtr& ground,
                              int max_dim, Rng& rng, int max_mult,
                              const std::vector<int>& pool) {
  std::vector<int> heads;
  for (int v : pool) {
    int m = rng.range(0, max_mult);
    for (int t = 0; t < m; ++t) heads.push_back(v);
  }
  // Trim until every per-vertex dimension is within the cap.
  const int nv = alg->num_vertices();
  auto fits = [&](const std::vector<int>& hs, int* bad) {
    for (int w = 0; w < nv; ++w) {
      int d = 0;
      for (int h : hs) d += alg->hom_dim(h, w) * ground->dim();
      if (d > max_dim) {
        *bad = w;
        return false;
      }
    }
    return true;
  };
  int bad = -1;
  while (!heads.empty() && !fits(heads, &bad)) {
    for (std::size_t s = heads.size(); s-- > 0;) {
      if (alg->hom_dim(heads[s], bad) > 0) {
        heads.erase(heads.begin() + static_cast<std::ptrdiff_t>(s));
        break;
      }
    }
  }
  return heads;
}

}  // namespace

Representation random_representation_heads(AlgebraPtr alg, GroundPtr ground,
                                           int max_dim, std::uint64_t seed,
                                           const std::vector<int>& head_pool) {
  Rng rng(seed);
  if (max_dim <= 0) return zero_rep(alg, ground);
  std::vector<int> gh = capped_heads(alg, ground, max_dim, rng, 2, head_pool);
  if (gh.empty()) return zero_rep(alg, ground);
  ProjectiveSum g = projective_sum(alg, ground, gh);
  std::vector<int> hh = capped_heads(alg, ground, max_dim, rng, 1, head_pool);
  ProjectiveSum h = projective_sum(alg, ground, hh);
  std::vector<Matrix> images;
  const FieldSpec& f = alg->field();
  for (int head : h.heads) {
    Matrix img(f, g.rep.dims[head], 1);
    for (int i = 0; i < img.rows(); ++i) img.at(i, 0) = rng.scalar(f, 2);
    images.push_back(img);
  }
  RepMorphism fm = morphism_from_generator_images(h, g.rep, images);
  return cokernel(fm).obj;
}

Representation random_representation(AlgebraPtr alg, GroundPtr ground,
                                     int max_dim, std::uint64_t seed) {
  std::vector<int> pool(alg->num_vertices());
  for (int v = 0; v < alg->num_vertices(); ++v) pool[v] = v;
  return random_representation_heads(alg, ground, max_dim, seed, pool);
}

Representation scramble(const Representation& x, Rng& rng) {
  const FieldSpec& f = x.field();
  std::vector<Matrix> u(x.dims.size()), uinv(x.dims.size());
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    const int d = x.dims[v];
    Matrix m = Matrix::identity(f, d);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Matrix c(f, d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c.at(i, j) = rng.scalar(f, 2);
      if (rank(c) == d) {
        m = c;
        break;
      }
    }
    u[v] = m;
    auto inv = solve(m, Matrix::identity(f, d));
    uinv[v] = *inv;
  }
  Representation y = x;
  for (int a = 0; a < x.alg->num_arrows(); ++a) {
    const auto& ar = x.alg->quiver().arrows[a];
    y.arrow_maps[a] = u[ar.to] * x.arrow_maps[a] * uinv[ar.from];
  }
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    for (int j = 0; j < x.ground->dim(); ++j)
      y.action[v][j] = u[v] * x.action[v][j] * uinv[v];
  return y;
}

}  // namespace qhom
