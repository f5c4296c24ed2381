#include "qhom/fixtures.hpp"

#include <map>

namespace qhom {

QuiverPresentation cycle_quiver(int n) {
  if (n < 1) throw PreconditionError("cycle quiver needs N >= 1");
  QuiverPresentation q;
  for (int v = 0; v < n; ++v) q.vertices.push_back(std::to_string(v));
  auto prev = [n](int v) { return (v + n - 1) % n; };
  for (int v = 0; v < n; ++v)
    q.arrows.push_back({"d" + std::to_string(v), v, prev(v)});
  // d_{q-1} ∘ d_q = 0: the path {d_q, d_{q-1}} vanishes.
  for (int v = 0; v < n; ++v)
    q.relations.push_back({{mpq_class(1), {v, prev(v)}}});
  return q;
}

std::string za3_vertex_name(int j, int level) {
  return "(" + std::to_string(j) + "," + std::to_string(level) + ")";
}

QuiverPresentation za3_window(int j_min, int j_max) {
  if (j_min > j_max) throw PreconditionError("empty ZA3 window");
  QuiverPresentation q;
  std::map<std::pair<int, int>, int> vid;
  for (int j = j_min; j <= j_max; ++j)
    for (int l = 0; l < 3; ++l) {
      vid[{j, l}] = static_cast<int>(q.vertices.size());
      q.vertices.push_back(za3_vertex_name(j, l));
    }
  std::map<std::pair<std::string, int>, int> aid;
  auto add_arrow = [&](const std::string& kind, int j, int from_j, int from_l,
                       int to_j, int to_l) {
    if (from_j < j_min || from_j > j_max || to_j < j_min || to_j > j_max)
      return;
    aid[{kind, j}] = static_cast<int>(q.arrows.size());
    q.arrows.push_back({kind + std::to_string(j), vid.at({from_j, from_l}),
                        vid.at({to_j, to_l})});
  };
  for (int j = j_min; j <= j_max; ++j) {
    add_arrow("a", j, j, 0, j, 1);      // (j,0) -> (j,1)
    add_arrow("b", j, j, 1, j, 2);      // (j,1) -> (j,2)
    add_arrow("g", j, j, 1, j - 1, 0);  // (j,1) -> (j-1,0)
    add_arrow("d", j, j, 2, j - 1, 1);  // (j,2) -> (j-1,1)
  }
  auto have = [&](const std::string& kind, int j) {
    return aid.count({kind, j}) > 0;
  };
  auto idx = [&](const std::string& kind, int j) { return aid.at({kind, j}); };
  for (int j = j_min; j <= j_max; ++j) {
    // g_j ∘ a_j = 0 : (j,0) -> (j,1) -> (j-1,0)
    if (have("a", j) && have("g", j))
      q.relations.push_back({{mpq_class(1), {idx("a", j), idx("g", j)}}});
    // b_{j-1} ∘ d_j = 0 : (j,2) -> (j-1,1) -> (j-1,2)
    if (have("d", j) && have("b", j - 1))
      q.relations.push_back({{mpq_class(1), {idx("d", j), idx("b", j - 1)}}});
    // a_{j-1} ∘ g_j + d_j ∘ b_j = 0 : the anticommuting square at (j,1)
    if (have("g", j) && have("a", j - 1) && have("b", j) && have("d", j))
      q.relations.push_back({{mpq_class(1), {idx("g", j), idx("a", j - 1)}},
                             {mpq_class(1), {idx("b", j), idx("d", j)}}});
  }
  return q;
}

QuiverPresentation a2_quiver() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows.push_back({"a", 0, 1});
  return q;
}

QuiverPresentation point_quiver() {
  QuiverPresentation q;
  q.vertices = {"pt"};
  return q;
}

QuiverPresentation fixture_by_name(const std::string& name) {
  if (name == "A2") return a2_quiver();
  if (name == "Z6") return za3_window(0, 5);
  if (!name.empty() && name[0] == 'C') {
    try {
      std::size_t pos = 0;
      int n = std::stoi(name.substr(1), &pos);
      if (pos == name.size() - 1 && n >= 1) return cycle_quiver(n);
    } catch (...) {
    }
  }
  if (name.rfind("ZA3:", 0) == 0) {
    auto rest = name.substr(4);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      try {
        int lo = std::stoi(rest.substr(0, colon));
        int hi = std::stoi(rest.substr(colon + 1));
        return za3_window(lo, hi);
      } catch (const PreconditionError&) {
        throw;
      } catch (...) {
      }
    }
  }
  throw ParseError("unknown fixture '" + name +
                   "' (expected C<N>, Z6, A2 or ZA3:<jmin>:<jmax>)");
}

}  // namespace qhom
