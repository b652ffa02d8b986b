#include "enriqueslab/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace enriqueslab {

IntersectionGraph::IntersectionGraph(std::vector<std::string> labels,
                                     const std::vector<std::vector<int>>& pairing)
    : labels_(std::move(labels)) {
  std::size_t n = labels_.size();
  if (pairing.size() != n) throw std::invalid_argument("IntersectionGraph: size mismatch");
  std::set<std::string> uniq(labels_.begin(), labels_.end());
  if (uniq.size() != n) throw std::invalid_argument("IntersectionGraph: duplicate labels");
  p_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing[i].size() != n) throw std::invalid_argument("IntersectionGraph: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) {
      int v = pairing[i][j];
      if (i == j) {
        if (v != -2) throw std::invalid_argument("IntersectionGraph: diagonal must be -2");
        continue;
      }
      if (v != pairing[j][i]) throw std::invalid_argument("IntersectionGraph: not symmetric");
      if (v < 0 || v > 2)
        throw std::invalid_argument("IntersectionGraph: off-diagonal pairing outside {0,1,2}");
      p_[i * n + j] = static_cast<std::int8_t>(v);
    }
  }
}

std::optional<std::size_t> IntersectionGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

IntegerSymMatrix IntersectionGraph::gram() const {
  std::size_t n = size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = pairing(i, j);
  return IntegerSymMatrix(m);
}

IntersectionGraph IntersectionGraph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (int v : vertices) labels.push_back(labels_[static_cast<std::size_t>(v)]);
  std::vector<std::vector<int>> m(vertices.size(), std::vector<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      m[i][j] = pairing(static_cast<std::size_t>(vertices[i]),
                        static_cast<std::size_t>(vertices[j]));
  return IntersectionGraph(std::move(labels), m);
}

namespace {

// Iterated refinement; colours are comparable across the two graphs because
// signatures are interned in a shared table.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const IntersectionGraph& g1,
                                                           const IntersectionGraph& g2) {
  std::size_t n1 = g1.size(), n2 = g2.size();
  std::vector<int> c1(n1, 0), c2(n2, 0);
  std::size_t classes = 1;
  for (int round = 0; round < 64; ++round) {
    using Sig = std::vector<int>;
    std::map<Sig, int> ids;
    auto signature = [&](const IntersectionGraph& g, const std::vector<int>& c, std::size_t v) {
      std::vector<int> neigh;
      neigh.reserve(g.size());
      for (std::size_t u = 0; u < g.size(); ++u) {
        if (u == v) continue;
        neigh.push_back(g.pairing(v, u) * 1024 + c[u]);
      }
      std::sort(neigh.begin(), neigh.end());
      neigh.push_back(c[v] + (1 << 24));
      return neigh;
    };
    std::vector<int> n1c(n1), n2c(n2);
    for (std::size_t v = 0; v < n1; ++v) {
      auto [it, ins] = ids.emplace(signature(g1, c1, v), static_cast<int>(ids.size()));
      n1c[v] = it->second;
    }
    for (std::size_t v = 0; v < n2; ++v) {
      auto [it, ins] = ids.emplace(signature(g2, c2, v), static_cast<int>(ids.size()));
      n2c[v] = it->second;
    }
    c1 = std::move(n1c);
    c2 = std::move(n2c);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {c1, c2};
}

struct SearchState {
  const IntersectionGraph& g1;
  const IntersectionGraph& g2;
  std::vector<int> order;        // g1 vertices in search order
  std::vector<int> color1, color2;
  std::vector<int> map;          // g1 vertex -> g2 vertex or -1
  std::vector<bool> used;        // g2 vertex taken
  bool first_only;
  std::vector<std::vector<int>> found;

  bool dfs(std::size_t k) {
    if (k == order.size()) {
      found.push_back(map);
      return first_only;
    }
    int v = order[k];
    for (std::size_t u = 0; u < g2.size(); ++u) {
      if (used[u] || color2[u] != color1[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        int w = order[j];
        ok = g1.pairing(static_cast<std::size_t>(v), static_cast<std::size_t>(w)) ==
             g2.pairing(u, static_cast<std::size_t>(map[static_cast<std::size_t>(w)]));
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = static_cast<int>(u);
      used[u] = true;
      if (dfs(k + 1)) return true;
      used[u] = false;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

std::vector<std::vector<int>> search(const IntersectionGraph& g1, const IntersectionGraph& g2,
                                     bool first_only) {
  if (g1.size() != g2.size()) return {};
  auto [c1, c2] = joint_colors(g1, g2);
  {
    // Colour class sizes must agree or nothing can match.
    std::map<int, int> h1, h2;
    for (int c : c1) ++h1[c];
    for (int c : c2) ++h2[c];
    if (h1 != h2) return {};
  }
  SearchState st{g1, g2, {}, c1, c2, std::vector<int>(g1.size(), -1),
                 std::vector<bool>(g2.size(), false), first_only, {}};
  st.order.resize(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) st.order[i] = static_cast<int>(i);
  // Small colour classes first; ties by vertex id for determinism.
  std::map<int, int> class_size;
  for (int c : c1) ++class_size[c];
  std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    int ca = c1[static_cast<std::size_t>(a)], cb = c1[static_cast<std::size_t>(b)];
    if (class_size[ca] != class_size[cb]) return class_size[ca] < class_size[cb];
    if (ca != cb) return ca < cb;
    return a < b;
  });
  st.dfs(0);
  return st.found;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const IntersectionGraph& g1,
                                                 const IntersectionGraph& g2) {
  if (g1.size() == g2.size()) {
    // Equal pairing matrices: the identity map, the canonical first answer.
    bool equal = true;
    for (std::size_t i = 0; i < g1.size() && equal; ++i)
      for (std::size_t j = i + 1; j < g1.size() && equal; ++j)
        equal = g1.pairing(i, j) == g2.pairing(i, j);
    if (equal) {
      std::vector<int> id(g1.size());
      for (std::size_t i = 0; i < g1.size(); ++i) id[i] = static_cast<int>(i);
      return id;
    }
  }
  auto found = search(g1, g2, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool AutomorphismGroup::contains(const std::vector<int>& perm) const {
  return std::binary_search(elements.begin(), elements.end(), perm);
}

AutomorphismGroup automorphism_group(const IntersectionGraph& g) {
  AutomorphismGroup out;
  out.elements = search(g, g, false);
  std::sort(out.elements.begin(), out.elements.end());
  out.order = out.elements.size();

  // Greedy generating set: add elements not yet generated, closing under
  // composition each time.
  std::set<std::vector<int>> generated;
  std::vector<int> id(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) id[i] = static_cast<int>(i);
  generated.insert(id);
  for (const auto& el : out.elements) {
    if (generated.count(el)) continue;
    out.generators.push_back(el);
    // Re-close under the enlarged generating set.
    generated.clear();
    generated.insert(id);
    std::vector<std::vector<int>> queue = {id};
    while (!queue.empty()) {
      std::vector<int> cur = queue.back();
      queue.pop_back();
      for (const auto& gen : out.generators) {
        std::vector<int> next = compose(gen, cur);
        if (generated.insert(next).second) queue.push_back(next);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> vertex_orbits(std::size_t n,
                                            const std::vector<std::vector<int>>& perms) {
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& p : perms)
    for (std::size_t i = 0; i < n; ++i) {
      int a = find(static_cast<int>(i)), b = find(p[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int, std::vector<int>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> orbits;
  for (auto& [root, members] : buckets) orbits.push_back(std::move(members));
  return orbits;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

}  // namespace enriqueslab
