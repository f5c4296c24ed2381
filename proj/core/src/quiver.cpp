#include "qhom/quiver.hpp"

#include <algorithm>
#include <set>

namespace qhom {

int QuiverPresentation::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end())
    throw PreconditionError("unknown vertex '" + name + "'");
  return static_cast<int>(it - vertices.begin());
}

int QuiverPresentation::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  throw PreconditionError("unknown arrow '" + name + "'");
}

std::pair<int, int> QuiverPresentation::path_endpoints(
    const std::vector<int>& path) const {
  if (path.empty()) throw PreconditionError("empty path has no endpoints");
  for (int a : path)
    if (a < 0 || a >= static_cast<int>(arrows.size()))
      throw PreconditionError("path refers to unknown arrow index");
  int from = arrows[path.front()].from;
  int at = arrows[path.front()].to;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (arrows[path[i]].from != at)
      throw PreconditionError("non-composable path: arrow '" +
                              arrows[path[i]].name + "' does not start at '" +
                              vertices[at] + "'");
    at = arrows[path[i]].to;
  }
  return {from, at};
}

void QuiverPresentation::validate() const {
  std::set<std::string> names(vertices.begin(), vertices.end());
  if (names.size() != vertices.size())
    throw PreconditionError("duplicate vertex names");
  std::set<std::string> anames;
  for (const Arrow& a : arrows) {
    if (!anames.insert(a.name).second)
      throw PreconditionError("duplicate arrow name '" + a.name + "'");
    if (a.from < 0 || a.from >= static_cast<int>(vertices.size()) ||
        a.to < 0 || a.to >= static_cast<int>(vertices.size()))
      throw PreconditionError("arrow '" + a.name + "' has undeclared endpoint");
  }
  for (const auto& rel : relations) {
    if (rel.empty()) throw PreconditionError("empty relation");
    int from = -1, to = -1;
    std::size_t len = 0;
    for (const RelTerm& t : rel) {
      auto [f, g] = path_endpoints(t.path);
      if (t.path.size() < 2)
        throw PreconditionError(
            "non-admissible relation: path of length < 2");
      if (from == -1) {
        from = f;
        to = g;
        len = t.path.size();
      } else if (f != from || g != to) {
        throw PreconditionError(
            "non-admissible relation: mixed sources or targets");
      } else if (t.path.size() != len) {
        throw PreconditionError(
            "unsupported relation: mixed path lengths in one relation");
      }
    }
  }
}

QuiverPresentation QuiverPresentation::opposite() const {
  QuiverPresentation op;
  op.vertices = vertices;
  op.arrows.reserve(arrows.size());
  for (const Arrow& a : arrows) op.arrows.push_back({a.name, a.to, a.from});
  op.relations.reserve(relations.size());
  for (const auto& rel : relations) {
    std::vector<RelTerm> r;
    for (const RelTerm& t : rel) {
      RelTerm rt;
      rt.coef = t.coef;
      rt.path.assign(t.path.rbegin(), t.path.rend());
      r.push_back(std::move(rt));
    }
    op.relations.push_back(std::move(r));
  }
  return op;
}

}  // namespace qhom
