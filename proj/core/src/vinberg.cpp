#include "enriqueslab/vinberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace enriqueslab {

namespace {

// Dynkin shape of a connected single-edge tree/cycle, by structure alone.
std::optional<AffineType> shape_type(const std::vector<int>& subset, const IntersectionGraph& g) {
  std::size_t k = subset.size();
  if (k < 2) return std::nullopt;
  if (k == 2) {
    if (g.pairing(static_cast<std::size_t>(subset[0]), static_cast<std::size_t>(subset[1])) == 2)
      return AffineType{'A', 1};
    return std::nullopt;
  }
  // Larger affine diagrams carry single edges only.
  std::vector<std::vector<int>> adj(k);
  int edges = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      int p = g.pairing(static_cast<std::size_t>(subset[i]), static_cast<std::size_t>(subset[j]));
      if (p == 2) return std::nullopt;
      if (p == 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
        ++edges;
      }
    }
  // Connectivity.
  std::vector<bool> seen(k, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++visited;
        stack.push_back(u);
      }
  }
  if (visited != k) return std::nullopt;

  std::vector<int> degree(k);
  for (std::size_t i = 0; i < k; ++i) degree[i] = static_cast<int>(adj[i].size());
  if (edges == static_cast<int>(k)) {
    // Connected with as many edges as vertices: a cycle iff all degrees 2.
    for (int d : degree)
      if (d != 2) return std::nullopt;
    return AffineType{'A', static_cast<int>(k) - 1};
  }
  if (edges != static_cast<int>(k) - 1) return std::nullopt;  // not a tree

  std::vector<int> deg3, deg4, leaves;
  for (std::size_t i = 0; i < k; ++i) {
    if (degree[i] >= 5) return std::nullopt;
    if (degree[i] == 4) deg4.push_back(static_cast<int>(i));
    if (degree[i] == 3) deg3.push_back(static_cast<int>(i));
    if (degree[i] == 1) leaves.push_back(static_cast<int>(i));
  }
  if (deg4.size() == 1 && deg3.empty() && k == 5 && leaves.size() == 4)
    return AffineType{'D', 4};
  if (!deg4.empty()) return std::nullopt;
  if (deg3.size() == 2) {
    // Affine D: each fork carries exactly two leaves, the forks are joined
    // by a path of degree-2 vertices.
    if (leaves.size() != 4) return std::nullopt;
    for (int f : deg3) {
      int leaf_neighbors = 0;
      for (int u : adj[static_cast<std::size_t>(f)])
        if (degree[static_cast<std::size_t>(u)] == 1) ++leaf_neighbors;
      if (leaf_neighbors != 2) return std::nullopt;
    }
    return AffineType{'D', static_cast<int>(k) - 1};
  }
  if (deg3.size() == 1 && leaves.size() == 3) {
    // Affine E: arm lengths from the center.
    std::vector<int> arms;
    for (int first : adj[static_cast<std::size_t>(deg3[0])]) {
      int len = 1, prev = deg3[0], cur = first;
      while (degree[static_cast<std::size_t>(cur)] == 2) {
        int next = adj[static_cast<std::size_t>(cur)][0] == prev
                       ? adj[static_cast<std::size_t>(cur)][1]
                       : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = next;
        ++len;
      }
      if (degree[static_cast<std::size_t>(cur)] != 1) return std::nullopt;
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<int>{2, 2, 2}) return AffineType{'E', 6};
    if (arms == std::vector<int>{1, 3, 3}) return AffineType{'E', 7};
    if (arms == std::vector<int>{1, 2, 5}) return AffineType{'E', 8};
    return std::nullopt;
  }
  return std::nullopt;
}

// Corank-1 negative semidefinite with strictly positive kernel vector.
bool is_parabolic_gram(const std::vector<int>& subset, const IntersectionGraph& g) {
  std::size_t k = subset.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m.at(i, j) = g.pairing(static_cast<std::size_t>(subset[i]), static_cast<std::size_t>(subset[j]));
  IntegerSymMatrix sym(m);
  Signature sig = sym.exact_signature();
  if (!(sig == Signature{0, static_cast<int>(k) - 1, 1})) return false;
  IntMatrix ker = sym.snf_kernel();
  if (ker.rows() != 1) return false;
  bool positive = true, negative = true;
  for (std::size_t j = 0; j < k; ++j) {
    if (ker.at(0, j) <= 0) positive = false;
    if (ker.at(0, j) >= 0) negative = false;
  }
  return positive || negative;
}

}  // namespace

std::optional<AffineType> recognize_affine(const std::vector<int>& subset,
                                           const IntersectionGraph& g) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::optional<AffineType> by_shape = shape_type(sorted, g);
  bool by_gram = is_parabolic_gram(sorted, g);
  if (by_shape.has_value() != by_gram)
    throw std::logic_error("recognize_affine: shape and definiteness tests disagree");
  return by_shape;
}

std::vector<ParabolicComponent> enumerate_connected_parabolics(const IntersectionGraph& g,
                                                               int max_rank) {
  std::size_t n = g.size();
  std::set<std::vector<int>> seen;
  std::vector<ParabolicComponent> out;
  auto emit = [&](std::vector<int> vertices, AffineType expect) {
    std::sort(vertices.begin(), vertices.end());
    if (!seen.insert(vertices).second) return;
    auto type = recognize_affine(vertices, g);
    if (!type || !(*type == expect))
      throw std::logic_error("enumerate_connected_parabolics: certificate mismatch for " +
                             expect.name());
    out.push_back({std::move(vertices), expect});
  };

  // Pairing-2 pairs.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.pairing(i, j) == 2) emit({static_cast<int>(i), static_cast<int>(j)}, {'A', 1});

  // Chordless cycles in the single-edge graph, no pairing 2 inside; length
  // 3 .. max_rank+1.  Paths start at their minimal vertex, the second vertex
  // is smaller than the last to fix the orientation.
  std::size_t max_len = static_cast<std::size_t>(max_rank) + 1;
  {
    std::vector<int> path;
    auto extend = [&](auto&& self) -> void {
      int v0 = path.front();
      int last = path.back();
      for (std::size_t u = 0; u < n; ++u) {
        int ui = static_cast<int>(u);
        if (ui <= v0) continue;
        if (g.pairing(static_cast<std::size_t>(last), u) != 1) continue;
        if (std::find(path.begin(), path.end(), ui) != path.end()) continue;
        // No pairing with interior path vertices (chordlessness).
        bool interior_clear = true;
        for (std::size_t idx = 1; idx + 1 < path.size() && interior_clear; ++idx)
          interior_clear = g.pairing(static_cast<std::size_t>(path[idx]), u) == 0;
        if (!interior_clear) continue;
        int p0 = path.size() == 1 ? 1 : g.pairing(static_cast<std::size_t>(v0), u);
        if (path.size() >= 2 && p0 == 1 && path[1] < ui) {
          // u closes a chordless cycle.
          path.push_back(ui);
          emit(path, {'A', static_cast<int>(path.size()) - 1});
          path.pop_back();
        }
        if ((path.size() == 1 || p0 == 0) && path.size() + 1 < max_len) {
          path.push_back(ui);
          self(self);
          path.pop_back();
        }
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      path = {static_cast<int>(v)};
      extend(extend);
    }
  }

  // Tree shapes need single-edge neighborhoods.
  auto neighbors1 = [&](int v) {
    std::vector<int> ns;
    for (std::size_t u = 0; u < n; ++u)
      if (u != static_cast<std::size_t>(v) && g.pairing(static_cast<std::size_t>(v), u) == 1)
        ns.push_back(static_cast<int>(u));
    return ns;
  };
  auto pair0 = [&](int a, int b) {
    return g.pairing(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == 0;
  };

  // Affine D4: a star with four pairwise orthogonal leaves.
  if (max_rank >= 4) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<int> ns = neighbors1(static_cast<int>(c));
      std::size_t m = ns.size();
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          if (!pair0(ns[a], ns[b])) continue;
          for (std::size_t d = b + 1; d < m; ++d) {
            if (!pair0(ns[a], ns[d]) || !pair0(ns[b], ns[d])) continue;
            for (std::size_t e = d + 1; e < m; ++e) {
              if (!pair0(ns[a], ns[e]) || !pair0(ns[b], ns[e]) || !pair0(ns[d], ns[e])) continue;
              emit({static_cast<int>(c), ns[a], ns[b], ns[d], ns[e]}, {'D', 4});
            }
          }
        }
    }
  }

  // Affine Dn, n >= 5: an induced spine path of n-3 vertices with two
  // orthogonal leaves at each end.
  for (int nrank = 5; nrank <= max_rank; ++nrank) {
    std::size_t spine_len = static_cast<std::size_t>(nrank) - 3;
    std::vector<int> spine;
    auto leaves_at = [&](int fork, const std::vector<int>& forbidden) {
      std::vector<int> ls;
      for (int u : neighbors1(fork)) {
        if (std::find(forbidden.begin(), forbidden.end(), u) != forbidden.end()) continue;
        bool ok = true;
        for (int s : spine)
          if (s != fork && !pair0(u, s)) {
            ok = false;
            break;
          }
        if (ok) ls.push_back(u);
      }
      return ls;
    };
    auto finish = [&] {
      // Orientation canonical: ends ordered.
      if (spine.front() > spine.back()) return;
      std::vector<int> left = leaves_at(spine.front(), spine);
      std::vector<int> right = leaves_at(spine.back(), spine);
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = a + 1; b < left.size(); ++b) {
          if (!pair0(left[a], left[b])) continue;
          for (std::size_t c = 0; c < right.size(); ++c)
            for (std::size_t d = c + 1; d < right.size(); ++d) {
              if (!pair0(right[c], right[d])) continue;
              std::vector<int> all = {left[a], left[b], right[c], right[d]};
              std::sort(all.begin(), all.end());
              if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
              bool ok = true;
              for (int x : {left[a], left[b]})
                for (int y : {right[c], right[d]})
                  if (x == y || !pair0(x, y)) ok = false;
              if (!ok) continue;
              std::vector<int> verts = spine;
              verts.insert(verts.end(), all.begin(), all.end());
              emit(std::move(verts), {'D', nrank});
            }
        }
    };
    auto grow = [&](auto&& self) -> void {
      if (spine.size() == spine_len) {
        finish();
        return;
      }
      int last = spine.back();
      for (int u : neighbors1(last)) {
        if (std::find(spine.begin(), spine.end(), u) != spine.end()) continue;
        bool ok = true;
        for (std::size_t idx = 0; idx + 1 < spine.size() && ok; ++idx) ok = pair0(spine[idx], u);
        if (!ok) continue;
        spine.push_back(u);
        self(self);
        spine.pop_back();
      }
    };
    for (std::size_t v = 0; v < n; ++v) {  // spine_len >= 2 here
      spine = {static_cast<int>(v)};
      grow(grow);
    }
  }

  // Affine E6/E7/E8: a degree-3 center with arms of prescribed lengths.
  const std::vector<std::pair<AffineType, std::vector<int>>> e_shapes = {
      {{'E', 6}, {2, 2, 2}},
      {{'E', 7}, {3, 3, 1}},
      {{'E', 8}, {5, 2, 1}},
  };
  for (const auto& [etype, arm_lengths] : e_shapes) {
    if (etype.rank > max_rank) continue;
    for (std::size_t c = 0; c < n; ++c) {
      int center = static_cast<int>(c);
      // Enumerate the three arms in order; each arm is an induced path from
      // the center, arms pairwise orthogonal.
      std::vector<std::vector<int>> arms(3);
      auto arm_ok = [&](int u, std::size_t arm_idx) {
        // u must be orthogonal to everything already placed except its
        // immediate predecessor on its own arm.
        if (u == center) return false;
        const std::vector<int>& own = arms[arm_idx];
        int pred = own.empty() ? center : own.back();
        if (g.pairing(static_cast<std::size_t>(pred), static_cast<std::size_t>(u)) != 1)
          return false;
        if (!own.empty() &&
            g.pairing(static_cast<std::size_t>(center), static_cast<std::size_t>(u)) != 0)
          return false;
        for (std::size_t k2 = 0; k2 < 3; ++k2)
          for (int w : arms[k2]) {
            if (w == pred) continue;
            if (w == u) return false;
            if (!pair0(w, u)) return false;
          }
        return true;
      };
      auto build = [&](auto&& self, std::size_t arm_idx, int pos) -> void {
        if (arm_idx == 3) {
          std::vector<int> verts = {center};
          for (const auto& arm : arms) verts.insert(verts.end(), arm.begin(), arm.end());
          emit(std::move(verts), etype);
          return;
        }
        if (pos == arm_lengths[arm_idx]) {
          // Canonical: equal-length arms ordered by first vertex.
          if (arm_idx > 0 && arm_lengths[arm_idx - 1] == arm_lengths[arm_idx] &&
              arms[arm_idx - 1].front() > arms[arm_idx].front())
            return;
          self(self, arm_idx + 1, 0);
          return;
        }
        for (std::size_t u = 0; u < n; ++u) {
          if (!arm_ok(static_cast<int>(u), arm_idx)) continue;
          arms[arm_idx].push_back(static_cast<int>(u));
          self(self, arm_idx, pos + 1);
          arms[arm_idx].pop_back();
        }
      };
      build(build, 0, 0);
      arms = {{}, {}, {}};
    }
  }

  std::sort(out.begin(), out.end(), [](const ParabolicComponent& a, const ParabolicComponent& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

std::string ParabolicDiagram::type_name() const {
  std::string s;
  for (const AffineType& t : types) {
    if (!s.empty()) s += "+";
    s += t.name();
  }
  return s;
}

ParabolicCensus maximal_parabolics(const IntersectionGraph& g, int target_rank) {
  ParabolicCensus census;
  census.components = enumerate_connected_parabolics(g, target_rank);
  std::size_t n = g.size();
  if (n > 64) throw std::invalid_argument("maximal_parabolics: more than 64 vertices");

  std::size_t m = census.components.size();
  std::vector<std::uint64_t> mask(m, 0), conflict(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (int v : census.components[i].vertices) {
      mask[i] |= 1ull << v;
      for (std::size_t u = 0; u < n; ++u)
        if (g.pairing(static_cast<std::size_t>(v), u) != 0) conflict[i] |= 1ull << u;
    }
    conflict[i] |= mask[i];
  }

  std::vector<int> chosen;
  auto record = [&]() {
    ParabolicDiagram d;
    d.component_ids = chosen;
    for (int idx : chosen) d.types.push_back(census.components[static_cast<std::size_t>(idx)].type);
    std::sort(d.types.begin(), d.types.end());
    d.total_rank = target_rank;
    census.multiset_counts[d.type_name()] += 1;
    census.rank8.push_back(std::move(d));
  };
  // Exact cover style search; the candidate list shrinks along each branch.
  auto dfs = [&](auto&& self, const std::vector<int>& candidates, int rank_sum) -> void {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::size_t i = static_cast<std::size_t>(candidates[k]);
      int next_rank = rank_sum + census.components[i].type.rank;
      if (next_rank > target_rank) continue;
      chosen.push_back(static_cast<int>(i));
      if (next_rank == target_rank) {
        record();
      } else {
        std::vector<int> rest;
        for (std::size_t k2 = k + 1; k2 < candidates.size(); ++k2) {
          std::size_t j = static_cast<std::size_t>(candidates[k2]);
          if (!(mask[j] & conflict[i])) rest.push_back(candidates[k2]);
        }
        if (!rest.empty()) self(self, rest, next_rank);
      }
      chosen.pop_back();
    }
  };
  std::vector<int> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
  dfs(dfs, all, 0);
  return census;
}

VinbergResult vinberg_check(const IntersectionGraph& g, std::size_t ambient_rank) {
  VinbergResult res;
  res.ambient_rank = ambient_rank;
  res.no_triple_lines = true;  // enforced by the IntersectionGraph type
  res.gram_rank = rank(g.gram().matrix());
  res.preconditions_ok = res.gram_rank == ambient_rank;

  res.census = maximal_parabolics(g, 8);
  res.certificate.assign(res.census.components.size(), -1);
  for (std::size_t d = 0; d < res.census.rank8.size(); ++d)
    for (int idx : res.census.rank8[d].component_ids)
      if (res.certificate[static_cast<std::size_t>(idx)] < 0)
        res.certificate[static_cast<std::size_t>(idx)] = static_cast<int>(d);

  res.finite_index = true;
  for (std::size_t i = 0; i < res.census.components.size(); ++i)
    if (res.certificate[i] < 0) {
      res.finite_index = false;
      if (res.uncompleted_component.empty())
        res.uncompleted_component = res.census.components[i].vertices;
    }
  return res;
}

std::vector<Int> reflect(const std::vector<Int>& x, const std::vector<Int>& delta,
                         const IntegerSymMatrix& gram) {
  std::vector<Int> gdelta = mat_vec(gram.matrix(), delta);
  if (dot(delta, gdelta) != -2) throw std::invalid_argument("reflect: delta^2 must be -2");
  Int c = dot(x, gdelta);
  std::vector<Int> out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * delta[i];
  return out;
}

}  // namespace enriqueslab
