#include "qhom/algebra.hpp"

#include <algorithm>
#include <map>

namespace qhom {

namespace {

constexpr std::size_t kMaxRawPathsPerDegree = 200000;

struct RawPath {
  int from = 0;
  int to = 0;
  std::vector<int> arrows;
};

using PathKey = std::vector<int>;  // {from, arrow_0, arrow_1, ...}

PathKey key_of(const RawPath& p) {
  PathKey k;
  k.reserve(p.arrows.size() + 1);
  k.push_back(p.from);
  for (int a : p.arrows) k.push_back(a);
  return k;
}

}  // namespace

std::vector<std::vector<std::vector<int>>>
AlgebraPresentation::radical_multiplicities() const {
  const int nv = num_vertices();
  std::vector<std::vector<std::vector<int>>> n(
      radical_length_,
      std::vector<std::vector<int>>(nv, std::vector<int>(nv, 0)));
  for (const BasisClass& b : basis_) n[b.length][b.from][b.to] += 1;
  return n;
}

AlgebraPresentation build_algebra(const QuiverPresentation& pres,
                                  const FieldSpec& field, int length_cap) {
  pres.validate();
  if (length_cap < 1) throw PreconditionError("length_cap must be >= 1");

  AlgebraPresentation alg;
  alg.quiver_ = pres;
  alg.field_ = field;

  const int nv = static_cast<int>(pres.vertices.size());
  const int na = static_cast<int>(pres.arrows.size());

  // Reductions per degree: raw path -> expansion over global basis indices.
  std::vector<std::map<PathKey, SparseVec>> reduce_by_degree;

  // Degree 0: the vertex idempotents, never cut down by admissible relations.
  alg.vertex_class_.resize(nv);
  {
    std::map<PathKey, SparseVec> red;
    for (int v = 0; v < nv; ++v) {
      int idx = static_cast<int>(alg.basis_.size());
      alg.basis_.push_back({v, v, 0, {}, "e_" + pres.vertices[v]});
      alg.vertex_class_[v] = idx;
      red[{v}] = {{idx, Scalar::one(field)}};
    }
    reduce_by_degree.push_back(std::move(red));
  }

  std::vector<RawPath> prev;  // all raw paths of the previous degree
  for (int v = 0; v < nv; ++v) prev.push_back({v, v, {}});

  alg.arrow_class_.assign(na, -1);
  alg.radical_length_ = -1;

  for (int d = 1; d <= length_cap; ++d) {
    // Extend all raw paths of degree d-1 by every composable arrow.
    std::vector<RawPath> cur;
    for (const RawPath& p : prev) {
      for (int a = 0; a < na; ++a) {
        if (pres.arrows[a].from != p.to) continue;
        RawPath q = p;
        q.arrows.push_back(a);
        q.to = pres.arrows[a].to;
        cur.push_back(std::move(q));
        if (cur.size() > kMaxRawPathsPerDegree)
          throw PreconditionError(
              "path count exploded at length " + std::to_string(d) +
              "; the algebra does not look finite dimensional");
      }
    }
    if (cur.empty()) {
      alg.radical_length_ = d;
      break;
    }

    std::map<PathKey, int> col_of;
    for (std::size_t i = 0; i < cur.size(); ++i)
      col_of[key_of(cur[i])] = static_cast<int>(i);

    // Ideal rows of degree d: right ∘ relation ∘ left products L·r·Rt where
    // Rt is applied first.  Enumerate raw factor paths by degree.
    std::vector<std::vector<RawPath>> raw_by_deg(d + 1);
    raw_by_deg[0].clear();
    for (int v = 0; v < nv; ++v) raw_by_deg[0].push_back({v, v, {}});
    for (int deg = 1; deg < d; ++deg) {
      for (const RawPath& p : raw_by_deg[deg - 1])
        for (int a = 0; a < na; ++a) {
          if (pres.arrows[a].from != p.to) continue;
          RawPath q = p;
          q.arrows.push_back(a);
          q.to = pres.arrows[a].to;
          raw_by_deg[deg].push_back(std::move(q));
        }
    }

    std::vector<std::vector<Scalar>> rows;
    for (const auto& rel : pres.relations) {
      const int dr = static_cast<int>(rel.front().path.size());
      if (dr > d) continue;
      auto [u, v] = pres.path_endpoints(rel.front().path);
      for (int rt = 0; rt + dr <= d; ++rt) {
        const int l = d - dr - rt;
        for (const RawPath& right : raw_by_deg[rt]) {
          if (right.to != u) continue;
          for (const RawPath& left : raw_by_deg[l]) {
            if (left.from != v) continue;
            std::vector<Scalar> row(cur.size(), Scalar::zero(field));
            for (const auto& term : rel) {
              PathKey k;
              k.push_back(right.from);
              for (int a : right.arrows) k.push_back(a);
              for (int a : term.path) k.push_back(a);
              for (int a : left.arrows) k.push_back(a);
              row[col_of.at(k)] += Scalar::from_rational(field, term.coef);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }

    Matrix ideal(field, static_cast<int>(rows.size()),
                 static_cast<int>(cur.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j)
        ideal.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];

    RrefResult rr = rref(ideal);
    std::vector<bool> is_pivot(cur.size(), false);
    for (int p : rr.pivot_cols) is_pivot[p] = true;

    // Free columns become basis classes of this degree.
    std::map<PathKey, SparseVec> red;
    std::vector<int> class_of_col(cur.size(), -1);
    int classes_here = 0;
    for (std::size_t j = 0; j < cur.size(); ++j) {
      if (is_pivot[j]) continue;
      int idx = static_cast<int>(alg.basis_.size());
      std::string nm;
      for (int a : cur[j].arrows) {
        if (!nm.empty()) nm += "*";
        nm += pres.arrows[a].name;
      }
      alg.basis_.push_back({cur[j].from, cur[j].to, d, cur[j].arrows, nm});
      class_of_col[j] = idx;
      red[key_of(cur[j])] = {{idx, Scalar::one(field)}};
      ++classes_here;
      if (d == 1) alg.arrow_class_[cur[j].arrows[0]] = idx;
    }
    // Pivot columns reduce to combinations of the free ones.
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
      int p = rr.pivot_cols[r];
      SparseVec expansion;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (is_pivot[j]) continue;
        Scalar c = -rr.reduced.at(static_cast<int>(r), static_cast<int>(j));
        if (!c.is_zero()) expansion.emplace_back(class_of_col[j], c);
      }
      red[key_of(cur[static_cast<int>(p)])] = std::move(expansion);
    }
    reduce_by_degree.push_back(std::move(red));

    if (classes_here == 0) {
      alg.radical_length_ = d;
      break;
    }
    prev = std::move(cur);
    if (d == length_cap)
      throw PreconditionError(
          "path classes survive at length cap " + std::to_string(length_cap) +
          ": condition (Fin) cannot be confirmed");
  }
  if (alg.radical_length_ < 0)
    throw PreconditionError("internal: radical length not determined");

  // Arrows killed by no relation (degree 1 is never cut), but confirm.
  for (int a = 0; a < na; ++a)
    if (na > 0 && alg.arrow_class_[a] < 0 && alg.radical_length_ > 1)
      throw EngineError("arrow class missing for '" + pres.arrows[a].name + "'");

  const int dim = alg.dim();
  alg.by_pair_.assign(static_cast<std::size_t>(nv) * nv, {});
  for (int i = 0; i < dim; ++i)
    alg.by_pair_[static_cast<std::size_t>(alg.basis_[i].from) * nv +
                 alg.basis_[i].to]
        .push_back(i);

  // Composition table: concatenate representatives, then reduce.
  alg.compose_.assign(static_cast<std::size_t>(dim) * dim, {});
  for (int g = 0; g < dim; ++g) {
    for (int f = 0; f < dim; ++f) {
      const auto& bg = alg.basis_[g];
      const auto& bf = alg.basis_[f];
      if (bf.to != bg.from) continue;
      int d = bf.length + bg.length;
      if (d >= alg.radical_length_) continue;  // zero product
      PathKey k;
      k.push_back(bf.from);
      for (int a : bf.path) k.push_back(a);
      for (int a : bg.path) k.push_back(a);
      alg.compose_[static_cast<std::size_t>(g) * dim + f] =
          reduce_by_degree[d].at(k);
    }
  }
  return alg;
}

AlgebraPtr build_algebra_ptr(const QuiverPresentation& pres,
                             const FieldSpec& field, int length_cap) {
  return std::make_shared<AlgebraPresentation>(
      build_algebra(pres, field, length_cap));
}

AlgebraPtr opposite_algebra(const AlgebraPresentation& alg) {
  return build_algebra_ptr(alg.quiver().opposite(), alg.field(),
                           alg.radical_length() + 1);
}

bool same_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (&a == &b) return true;
  if (a.field() != b.field()) return false;
  const auto& qa = a.quiver();
  const auto& qb = b.quiver();
  if (qa.vertices != qb.vertices) return false;
  if (qa.arrows.size() != qb.arrows.size()) return false;
  for (std::size_t i = 0; i < qa.arrows.size(); ++i)
    if (qa.arrows[i].name != qb.arrows[i].name ||
        qa.arrows[i].from != qb.arrows[i].from ||
        qa.arrows[i].to != qb.arrows[i].to)
      return false;
  return true;
}

bool composition_is_associative(const AlgebraPresentation& alg) {
  const int n = alg.dim();
  const FieldSpec& f = alg.field();
  auto expand = [&](const SparseVec& v, int g) {
    // g ∘ v
    std::vector<Scalar> out(n, Scalar::zero(f));
    for (const auto& [i, c] : v)
      for (const auto& [j, d] : alg.compose(g, i)) out[j] += c * d;
    return out;
  };
  auto expand_right = [&](int g, const SparseVec& v) {
    // v ∘ g
    std::vector<Scalar> out(n, Scalar::zero(f));
    for (const auto& [i, c] : v)
      for (const auto& [j, d] : alg.compose(i, g)) out[j] += c * d;
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.basis()[b].to != alg.basis()[a].from) continue;
      for (int c = 0; c < n; ++c) {
        if (alg.basis()[c].to != alg.basis()[b].from) continue;
        // a∘(b∘c) vs (a∘b)∘c
        auto lhs = expand(alg.compose(b, c), a);
        auto rhs = expand_right(c, alg.compose(a, b));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

}  // namespace qhom
