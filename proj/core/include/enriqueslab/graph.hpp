// Edge-weighted intersection graphs: vertices carry labels, pairs carry
// pairing values 0, 1 or 2 (diagonal -2), matching the dual graphs of
// (-2)-classes this library manipulates.  Isomorphism and automorphism
// search by partition-refinement colouring plus backtracking, tuned for
// the <= 42 vertex graphs that actually occur here.

#ifndef ENRIQUESLAB_GRAPH_HPP
#define ENRIQUESLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enriqueslab/intmat.hpp"

namespace enriqueslab {

class IntersectionGraph {
 public:
  IntersectionGraph(std::vector<std::string> labels, const std::vector<std::vector<int>>& pairing);

  std::size_t size() const { return labels_.size(); }
  int pairing(std::size_t i, std::size_t j) const {
    return i == j ? -2 : p_[i * size() + j];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  IntegerSymMatrix gram() const;
  IntersectionGraph induced(const std::vector<int>& vertices) const;

  bool operator==(const IntersectionGraph& rhs) const {
    return labels_ == rhs.labels_ && p_ == rhs.p_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::int8_t> p_;
};

// A pairing-preserving bijection g2[f[i]] ~ g1[i], or nullopt after an
// exhaustive search.  Deterministic: the first map in canonical search
// order is returned.
std::optional<std::vector<int>> find_isomorphism(const IntersectionGraph& g1,
                                                 const IntersectionGraph& g2);

struct AutomorphismGroup {
  std::vector<std::vector<int>> elements;    // every automorphism, sorted
  std::vector<std::vector<int>> generators;  // greedy generating subset
  std::uint64_t order = 0;

  bool contains(const std::vector<int>& perm) const;
};

AutomorphismGroup automorphism_group(const IntersectionGraph& g);

// Vertex orbits under a set of permutations, each orbit sorted, orbits
// ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(std::size_t n,
                                            const std::vector<std::vector<int>>& perms);

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g);  // f after g

}  // namespace enriqueslab

#endif
