#pragma once

#include <string>
#include <vector>

#include "ghost/diagram.hpp"
#include "ghost/mat2.hpp"
#include "ghost/snf.hpp"

namespace ghost {

struct GroupWord {
  // (generator index, +-1); generator indices are 1-based into the owning
  // presentation's generator list
  std::vector<std::pair<int, int>> letters;

  GroupWord() = default;
  void append(int gen, int exp);  // reduces against the current tail
  GroupWord inverse() const;
  GroupWord conjugate_by(int gen) const;  // gen * w * gen^{-1}
  bool empty() const { return letters.empty(); }
  size_t length() const;  // total letter count (exponents are +-1)
};

GroupWord free_reduce(const GroupWord& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  std::string word_string(const GroupWord& w) const;
};

// n meridian generators, one conjugation relator per crossing with the
// relator of the crossing emitting arc m dropped as redundant.
GroupPresentation wirtinger_presentation(const KnotDiagram& d);

// Eliminate generators beyond the first `keep` through their defining
// relators; result has `keep` generators and keep-1 relators.
GroupPresentation tietze_reduce(const GroupPresentation& p, int keep);

// expansion of every generator as a word in the first `keep` meridians
std::vector<GroupWord> meridian_words(const GroupPresentation& p, int keep);

// Fox / Reidemeister-Schreier presentation of the 2-fold branched cover
// fundamental group on generators x_i = m_1 m_i (2 <= i <= m): rewrite each
// relator and its m_1-conjugate over the transversal {1, m_1}, kill m_1^2.
GroupPresentation branched_cover_presentation(const GroupPresentation& p);

// invariant factors of H_1 (ones dropped, zeros kept for free rank)
std::vector<Int> abelianization(const GroupPresentation& p);

Mat2 evaluate_word(const GroupWord& w, const std::vector<Mat2>& assignment);

std::string presentation_to_json(const GroupPresentation& p);

}  // namespace ghost
