// Sylvester's duads and synthemes on six letters, the six totals with
// Baker's classical table, the ten splits of {1..6} into complementary
// triples, and the combinatorial 40-vertex pairing graph those objects
// span, together with the S6 action and the table-defined outer involution.

#ifndef ENRIQUESLAB_SYLVESTER_HPP
#define ENRIQUESLAB_SYLVESTER_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "enriqueslab/graph.hpp"

namespace enriqueslab {

// Letters are 1..6 throughout; ids are indices into the canonical sorted
// enumerations below.
class SylvesterSystem {
 public:
  SylvesterSystem();
  static const SylvesterSystem& get();

  // 15 duads {a,b}, lexicographic.
  const std::vector<std::pair<int, int>>& duads() const { return duads_; }
  // 15 synthemes, each a sorted triple of duad ids, lexicographic.
  const std::vector<std::array<int, 3>>& synthemes() const { return synthemes_; }
  // 6 totals labeled A..F = 0..5 in Baker's row order; sorted syntheme ids.
  const std::vector<std::array<int, 5>>& totals() const { return totals_; }
  // 10 splits into complementary triples; stored as the sorted triple
  // containing letter 1.
  const std::vector<std::array<int, 3>>& splits() const { return splits_; }

  int duad_id(int a, int b) const;
  int syntheme_id(std::array<int, 3> duad_ids) const;
  int split_id(std::array<int, 3> triple_with_1) const;

  // Baker's table: the unique syntheme two distinct totals share.
  int table_entry(int total_a, int total_b) const { return table_[total_a][total_b]; }

  bool duad_in_syntheme(int duad, int syntheme) const;
  bool duads_share_letter(int d1, int d2) const;
  bool synthemes_share_duad(int s1, int s2) const;
  // Duad inside one of the two triples of the split.
  bool duad_inside_split(int duad, int split) const;
  // All three duads of the syntheme cross the two triples.
  bool syntheme_crosses_split(int syntheme, int split) const;

  std::string duad_label(int id) const;
  std::string syntheme_label(int id) const;
  std::string split_label(int id) const;

 private:
  std::vector<std::pair<int, int>> duads_;
  std::vector<std::array<int, 3>> synthemes_;
  std::vector<std::array<int, 5>> totals_;
  std::vector<std::array<int, 3>> splits_;
  int table_[6][6];
};

// Vertex ids of the combinatorial gamma graph: 0..14 duads, 15..29
// synthemes, 30..39 splits, each block in canonical order.
inline constexpr int kGammaDuadBase = 0;
inline constexpr int kGammaSynthemeBase = 15;
inline constexpr int kGammaSplitBase = 30;

IntersectionGraph combinatorial_gamma();

// All 720 permutations of {1..6}; perm[i] is the image of letter i+1.
std::vector<std::array<int, 6>> all_s6();

// Induced permutation of the 40 gamma vertices.  Always pairing-preserving;
// verified on construction.
std::vector<int> s6_vertex_action(const std::array<int, 6>& perm);

// The involution defined by the letters-to-totals duality of Baker's table
// (letter 1 corresponds to total A; the rest is forced by row A).  Swaps the
// duad and syntheme families, fixes the split family setwise, and preserves
// every pairing value; construction fails hard otherwise.
std::vector<int> outer_automorphism();

}  // namespace enriqueslab

#endif
