#include "enriqueslab/sylvester.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace enriqueslab {

namespace {

// The six totals in their classical arrangement (Baker, Principles of
// Geometry I, pp. 220-221): rows and columns are the totals A..F, the cell
// holds the syntheme the two totals share.
constexpr const char* kBakerTable[6][6] = {
    {"", "14,25,36", "16,24,35", "13,26,45", "12,34,56", "15,23,46"},
    {"14,25,36", "", "15,26,34", "12,35,46", "16,23,45", "13,24,56"},
    {"16,24,35", "15,26,34", "", "14,23,56", "13,25,46", "12,36,45"},
    {"13,26,45", "12,35,46", "14,23,56", "", "15,24,36", "16,25,34"},
    {"12,34,56", "16,23,45", "13,25,46", "15,24,36", "", "14,26,35"},
    {"15,23,46", "13,24,56", "12,36,45", "16,25,34", "14,26,35", ""},
};

}  // namespace

SylvesterSystem::SylvesterSystem() {
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) duads_.emplace_back(a, b);

  // Perfect matchings of {1..6}: always match the smallest free letter.
  std::array<int, 3> current{};
  std::vector<bool> taken(7, false);
  auto build = [&](auto&& self, int depth) -> void {
    if (depth == 3) {
      std::array<int, 3> s = current;
      std::sort(s.begin(), s.end());
      synthemes_.push_back(s);
      return;
    }
    int a = 1;
    while (taken[static_cast<std::size_t>(a)]) ++a;
    taken[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b <= 6; ++b) {
      if (taken[static_cast<std::size_t>(b)]) continue;
      taken[static_cast<std::size_t>(b)] = true;
      current[static_cast<std::size_t>(depth)] = duad_id(a, b);
      self(self, depth + 1);
      taken[static_cast<std::size_t>(b)] = false;
    }
    taken[static_cast<std::size_t>(a)] = false;
  };
  build(build, 0);
  std::sort(synthemes_.begin(), synthemes_.end());
  if (synthemes_.size() != 15) throw std::logic_error("SylvesterSystem: expected 15 synthemes");

  // Totals: maximal families of pairwise duad-disjoint synthemes.
  std::vector<std::array<int, 5>> found;
  std::array<int, 5> pick{};
  auto grow = [&](auto&& self, int depth, int start) -> void {
    if (depth == 5) {
      found.push_back(pick);
      return;
    }
    for (int s = start; s < 15; ++s) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = !synthemes_share_duad(pick[static_cast<std::size_t>(i)], s);
      if (!ok) continue;
      pick[static_cast<std::size_t>(depth)] = s;
      self(self, depth + 1, s + 1);
    }
  };
  grow(grow, 0, 0);
  if (found.size() != 6) throw std::logic_error("SylvesterSystem: expected 6 totals");
  for (const auto& t : found) {
    std::set<int> covered;
    for (int s : t)
      for (int d : synthemes_[static_cast<std::size_t>(s)]) covered.insert(d);
    if (covered.size() != 15) throw std::logic_error("SylvesterSystem: total misses a duad");
  }

  // Read the table, check it against the computed totals, and let its row
  // order fix the labels A..F.
  auto parse_cell = [&](const std::string& cell) {
    std::array<int, 3> ids{};
    std::stringstream ss(cell);
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, ',')) {
      if (tok.size() != 2) throw std::logic_error("SylvesterSystem: malformed table cell");
      ids[static_cast<std::size_t>(k++)] = duad_id(tok[0] - '0', tok[1] - '0');
    }
    if (k != 3) throw std::logic_error("SylvesterSystem: malformed table cell");
    std::sort(ids.begin(), ids.end());
    return syntheme_id(ids);
  };
  for (int i = 0; i < 6; ++i) {
    std::set<int> row;
    for (int j = 0; j < 6; ++j) {
      if (i == j) {
        table_[i][j] = -1;
        continue;
      }
      table_[i][j] = parse_cell(kBakerTable[i][j]);
      row.insert(table_[i][j]);
    }
    if (row.size() != 5) throw std::logic_error("SylvesterSystem: table row is not 5 synthemes");
    std::array<int, 5> total{};
    std::copy(row.begin(), row.end(), total.begin());
    if (std::find(found.begin(), found.end(), total) == found.end())
      throw std::logic_error("SylvesterSystem: table row is not a total");
    totals_.push_back(total);
  }
  {
    std::set<std::array<int, 5>> distinct(totals_.begin(), totals_.end());
    if (distinct.size() != 6) throw std::logic_error("SylvesterSystem: table rows repeat a total");
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      if (table_[i][j] != table_[j][i])
        throw std::logic_error("SylvesterSystem: table is not symmetric");
      // The cell must be the unique syntheme the two totals share.
      std::vector<int> common;
      std::set_intersection(totals_[static_cast<std::size_t>(i)].begin(), totals_[static_cast<std::size_t>(i)].end(),
                            totals_[static_cast<std::size_t>(j)].begin(), totals_[static_cast<std::size_t>(j)].end(),
                            std::back_inserter(common));
      if (common.size() != 1 || common[0] != table_[i][j])
        throw std::logic_error("SylvesterSystem: table cell is not the shared syntheme");
    }

  for (int a = 2; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) splits_.push_back({1, a, b});
}

const SylvesterSystem& SylvesterSystem::get() {
  static const SylvesterSystem system;
  return system;
}

int SylvesterSystem::duad_id(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < duads_.size(); ++i)
    if (duads_[i] == std::make_pair(a, b)) return static_cast<int>(i);
  throw std::invalid_argument("duad_id: bad letters");
}

int SylvesterSystem::syntheme_id(std::array<int, 3> duad_ids) const {
  std::sort(duad_ids.begin(), duad_ids.end());
  auto it = std::lower_bound(synthemes_.begin(), synthemes_.end(), duad_ids);
  if (it == synthemes_.end() || *it != duad_ids)
    throw std::invalid_argument("syntheme_id: not a syntheme");
  return static_cast<int>(it - synthemes_.begin());
}

int SylvesterSystem::split_id(std::array<int, 3> triple_with_1) const {
  std::sort(triple_with_1.begin(), triple_with_1.end());
  for (std::size_t i = 0; i < splits_.size(); ++i)
    if (splits_[i] == triple_with_1) return static_cast<int>(i);
  throw std::invalid_argument("split_id: triple must contain letter 1");
}

bool SylvesterSystem::duad_in_syntheme(int duad, int syntheme) const {
  const auto& s = synthemes_[static_cast<std::size_t>(syntheme)];
  return std::find(s.begin(), s.end(), duad) != s.end();
}

bool SylvesterSystem::duads_share_letter(int d1, int d2) const {
  auto [a, b] = duads_[static_cast<std::size_t>(d1)];
  auto [c, d] = duads_[static_cast<std::size_t>(d2)];
  return a == c || a == d || b == c || b == d;
}

bool SylvesterSystem::synthemes_share_duad(int s1, int s2) const {
  const auto& x = synthemes_[static_cast<std::size_t>(s1)];
  const auto& y = synthemes_[static_cast<std::size_t>(s2)];
  for (int d : x)
    if (std::find(y.begin(), y.end(), d) != y.end()) return true;
  return false;
}

bool SylvesterSystem::duad_inside_split(int duad, int split) const {
  auto [a, b] = duads_[static_cast<std::size_t>(duad)];
  const auto& t = splits_[static_cast<std::size_t>(split)];
  bool a_in = std::find(t.begin(), t.end(), a) != t.end();
  bool b_in = std::find(t.begin(), t.end(), b) != t.end();
  return a_in == b_in;
}

bool SylvesterSystem::syntheme_crosses_split(int syntheme, int split) const {
  for (int d : synthemes_[static_cast<std::size_t>(syntheme)])
    if (duad_inside_split(d, split)) return false;
  return true;
}

std::string SylvesterSystem::duad_label(int id) const {
  auto [a, b] = duads_[static_cast<std::size_t>(id)];
  return std::to_string(a) + std::to_string(b);
}

std::string SylvesterSystem::syntheme_label(int id) const {
  std::string out = "(";
  const auto& s = synthemes_[static_cast<std::size_t>(id)];
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += duad_label(s[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

std::string SylvesterSystem::split_label(int id) const {
  const auto& t = splits_[static_cast<std::size_t>(id)];
  std::array<bool, 7> in{};
  for (int x : t) in[static_cast<std::size_t>(x)] = true;
  std::string low, high;
  for (int x = 1; x <= 6; ++x) (in[static_cast<std::size_t>(x)] ? low : high) += std::to_string(x);
  return "(" + low + "," + high + ")";
}

IntersectionGraph combinatorial_gamma() {
  const SylvesterSystem& sys = SylvesterSystem::get();
  std::vector<std::string> labels;
  for (int d = 0; d < 15; ++d) labels.push_back(sys.duad_label(d));
  for (int s = 0; s < 15; ++s) labels.push_back(sys.syntheme_label(s));
  for (int v = 0; v < 10; ++v) labels.push_back(sys.split_label(v));

  std::vector<std::vector<int>> m(40, std::vector<int>(40, 0));
  for (int i = 0; i < 40; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
  auto set = [&](int i, int j, int v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  for (int d1 = 0; d1 < 15; ++d1)
    for (int d2 = d1 + 1; d2 < 15; ++d2)
      set(d1, d2, sys.duads_share_letter(d1, d2) ? 1 : 0);
  for (int s1 = 0; s1 < 15; ++s1)
    for (int s2 = s1 + 1; s2 < 15; ++s2)
      set(kGammaSynthemeBase + s1, kGammaSynthemeBase + s2,
          sys.synthemes_share_duad(s1, s2) ? 0 : 1);
  for (int d = 0; d < 15; ++d)
    for (int s = 0; s < 15; ++s)
      set(d, kGammaSynthemeBase + s, sys.duad_in_syntheme(d, s) ? 2 : 0);
  for (int v1 = 0; v1 < 10; ++v1)
    for (int v2 = v1 + 1; v2 < 10; ++v2) set(kGammaSplitBase + v1, kGammaSplitBase + v2, 2);
  for (int v = 0; v < 10; ++v) {
    for (int d = 0; d < 15; ++d)
      set(kGammaSplitBase + v, d, sys.duad_inside_split(d, v) ? 2 : 0);
    for (int s = 0; s < 15; ++s)
      set(kGammaSplitBase + v, kGammaSynthemeBase + s,
          sys.syntheme_crosses_split(s, v) ? 2 : 0);
  }
  return IntersectionGraph(std::move(labels), m);
}

std::vector<std::array<int, 6>> all_s6() {
  std::array<int, 6> p = {1, 2, 3, 4, 5, 6};
  std::vector<std::array<int, 6>> out;
  out.reserve(720);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> s6_vertex_action(const std::array<int, 6>& perm) {
  const SylvesterSystem& sys = SylvesterSystem::get();
  auto img = [&](int letter) { return perm[static_cast<std::size_t>(letter - 1)]; };
  std::vector<int> out(40);
  for (int d = 0; d < 15; ++d) {
    auto [a, b] = sys.duads()[static_cast<std::size_t>(d)];
    out[static_cast<std::size_t>(d)] = sys.duad_id(img(a), img(b));
  }
  for (int s = 0; s < 15; ++s) {
    std::array<int, 3> nd{};
    for (int i = 0; i < 3; ++i) {
      auto [a, b] = sys.duads()[static_cast<std::size_t>(
          sys.synthemes()[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)])];
      nd[static_cast<std::size_t>(i)] = sys.duad_id(img(a), img(b));
    }
    out[static_cast<std::size_t>(kGammaSynthemeBase + s)] =
        kGammaSynthemeBase + sys.syntheme_id(nd);
  }
  for (int v = 0; v < 10; ++v) {
    const auto& t = sys.splits()[static_cast<std::size_t>(v)];
    std::array<int, 3> it{img(t[0]), img(t[1]), img(t[2])};
    std::sort(it.begin(), it.end());
    if (it[0] != 1) {  // take the complementary triple, the one containing 1
      std::array<bool, 7> in{};
      for (int x : it) in[static_cast<std::size_t>(x)] = true;
      int k = 0;
      for (int x = 1; x <= 6; ++x)
        if (!in[static_cast<std::size_t>(x)]) it[static_cast<std::size_t>(k++)] = x;
    }
    out[static_cast<std::size_t>(kGammaSplitBase + v)] = kGammaSplitBase + sys.split_id(it);
  }
  return out;
}

std::vector<int> outer_automorphism() {
  const SylvesterSystem& sys = SylvesterSystem::get();
  // Letters-to-totals duality: letter 1 corresponds to total A; row A then
  // forces the rest, because each of its synthemes pairs letter 1 with a
  // distinct partner.
  std::array<int, 7> to_total{};   // letter -> total
  std::array<int, 6> to_letter{};  // total -> letter
  to_total[1] = 0;
  to_letter[0] = 1;
  for (int col = 1; col < 6; ++col) {
    int s = sys.table_entry(0, col);
    for (int d : sys.synthemes()[static_cast<std::size_t>(s)]) {
      auto [a, b] = sys.duads()[static_cast<std::size_t>(d)];
      if (a == 1) {
        to_total[static_cast<std::size_t>(b)] = col;
        to_letter[static_cast<std::size_t>(col)] = b;
      }
    }
  }

  std::vector<int> out(40, -1);
  // Duad {i,j} -> the syntheme shared by the corresponding totals.
  for (int d = 0; d < 15; ++d) {
    auto [a, b] = sys.duads()[static_cast<std::size_t>(d)];
    out[static_cast<std::size_t>(d)] =
        kGammaSynthemeBase +
        sys.table_entry(to_total[static_cast<std::size_t>(a)], to_total[static_cast<std::size_t>(b)]);
  }
  // Syntheme -> the duad of the letters of its two totals.
  for (int s = 0; s < 15; ++s) {
    std::vector<int> owners;
    for (int t = 0; t < 6; ++t) {
      const auto& total = sys.totals()[static_cast<std::size_t>(t)];
      if (std::find(total.begin(), total.end(), s) != total.end()) owners.push_back(t);
    }
    if (owners.size() != 2) throw std::logic_error("outer_automorphism: syntheme not in 2 totals");
    out[static_cast<std::size_t>(kGammaSynthemeBase + s)] =
        sys.duad_id(to_letter[static_cast<std::size_t>(owners[0])],
                    to_letter[static_cast<std::size_t>(owners[1])]);
  }
  // Splits: forced by pairing preservation against the images above.
  IntersectionGraph gamma = combinatorial_gamma();
  for (int v = 0; v < 10; ++v) {
    int self = kGammaSplitBase + v;
    int image = -1;
    for (int w = 0; w < 10; ++w) {
      bool ok = true;
      for (int x = 0; x < kGammaSplitBase && ok; ++x)
        ok = gamma.pairing(static_cast<std::size_t>(self), static_cast<std::size_t>(x)) ==
             gamma.pairing(static_cast<std::size_t>(kGammaSplitBase + w),
                           static_cast<std::size_t>(out[static_cast<std::size_t>(x)]));
      if (!ok) continue;
      if (image != -1) throw std::logic_error("outer_automorphism: split image not unique");
      image = kGammaSplitBase + w;
    }
    if (image == -1) throw std::logic_error("outer_automorphism: no split image");
    out[static_cast<std::size_t>(self)] = image;
  }

  // Involution on all three blocks, and full pairing preservation.
  for (int x = 0; x < 40; ++x) {
    int y = out[static_cast<std::size_t>(x)];
    if (out[static_cast<std::size_t>(y)] != x)
      throw std::logic_error("outer_automorphism: not an involution");
  }
  for (int x = 0; x < 40; ++x)
    for (int y = x + 1; y < 40; ++y)
      if (gamma.pairing(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) !=
          gamma.pairing(static_cast<std::size_t>(out[static_cast<std::size_t>(x)]),
                        static_cast<std::size_t>(out[static_cast<std::size_t>(y)])))
        throw std::logic_error("outer_automorphism: pairing not preserved");
  return out;
}

}  // namespace enriqueslab
