#include "ghost/cover.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>

#include "json.hpp"

namespace ghost {

void GroupWord::append(int gen, int exp) {
  if (!letters.empty() && letters.back().first == gen && letters.back().second == -exp)
    letters.pop_back();
  else
    letters.emplace_back(gen, exp);
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const auto& [g, e] : w.letters) out.append(g, e);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.append(it->first, -it->second);
  return out;
}

GroupWord GroupWord::conjugate_by(int gen) const {
  GroupWord out;
  out.append(gen, +1);
  for (const auto& [g, e] : letters) out.append(g, e);
  out.append(gen, -1);
  return out;
}

size_t GroupWord::length() const { return letters.size(); }

std::string GroupPresentation::word_string(const GroupWord& w) const {
  if (w.letters.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : w.letters) {
    if (!s.empty()) s += " ";
    s += generators[static_cast<size_t>(g - 1)];
    if (e == -1) s += "^-1";
  }
  return s;
}

GroupPresentation wirtinger_presentation(const KnotDiagram& d) {
  GroupPresentation p;
  for (int i = 1; i <= d.arc_count; ++i) p.generators.push_back("m" + std::to_string(i));

  int m = d.braid_origin ? d.braid_origin->strands : 0;
  for (const auto& c : d.crossings) {
    if (m > 0 && c.out_under_arc == m) continue;  // the redundant relator
    // m_out = m_over^e m_in m_over^{-e}, e = crossing sign
    GroupWord w;
    w.append(c.over_arc, c.sign);
    w.append(c.in_under_arc, +1);
    w.append(c.over_arc, -c.sign);
    w.append(c.out_under_arc, -1);
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

std::vector<GroupWord> meridian_words(const GroupPresentation& p, int keep) {
  // defining relator for generator t > keep has shape (i,e)(j,+1)(i,-e)(t,-1)
  const int n = static_cast<int>(p.generators.size());
  std::vector<std::optional<std::array<int, 3>>> def(static_cast<size_t>(n + 1));  // t -> (i, e, j)
  for (const auto& r : p.relators) {
    if (r.letters.size() != 4) continue;
    const auto& L = r.letters;
    if (L[3].second != -1) continue;
    int t = L[3].first;
    if (t <= keep) continue;
    if (L[0].first != L[2].first || L[0].second != -L[2].second) continue;
    if (L[1].second != 1) continue;
    def[t] = std::array<int, 3>{L[0].first, L[0].second, L[1].first};
  }
  std::vector<GroupWord> words(static_cast<size_t>(n + 1));
  std::vector<int> state(static_cast<size_t>(n + 1), 0);
  std::function<void(int)> build = [&](int t) {
    if (state[t] == 2) return;
    if (state[t] == 1) throw InternalError("tietze_reduce: cyclic generator definition");
    state[t] = 1;
    if (t <= keep) {
      words[t].append(t, +1);
    } else {
      if (!def[t])
        throw InternalError("tietze_reduce: generator m" + std::to_string(t) +
                            " has no defining relator");
      auto [i, e, j] = *def[t];
      build(i);
      build(j);
      GroupWord w;
      for (const auto& [g, ex] : (e > 0 ? words[i] : words[i].inverse()).letters) w.append(g, ex);
      for (const auto& [g, ex] : words[j].letters) w.append(g, ex);
      for (const auto& [g, ex] : (e > 0 ? words[i].inverse() : words[i]).letters) w.append(g, ex);
      words[t] = w;
    }
    state[t] = 2;
  };
  for (int t = 1; t <= n; ++t) build(t);
  std::vector<GroupWord> out;
  for (int t = 0; t <= n; ++t) out.push_back(words[t]);
  return out;
}

GroupPresentation tietze_reduce(const GroupPresentation& p, int keep) {
  auto words = meridian_words(p, keep);
  const int n = static_cast<int>(p.generators.size());

  GroupPresentation out;
  for (int i = 1; i <= keep; ++i) out.generators.push_back(p.generators[static_cast<size_t>(i - 1)]);

  for (const auto& r : p.relators) {
    // skip the defining relators (they rewrite to nothing)
    if (r.letters.size() == 4 && r.letters[3].second == -1 && r.letters[3].first > keep) continue;
    GroupWord w;
    for (const auto& [g, e] : r.letters) {
      const GroupWord& sub = words[static_cast<size_t>(g)];
      for (const auto& [h, f] : (e > 0 ? sub : sub.inverse()).letters) w.append(h, f);
    }
    w = free_reduce(w);
    if (!w.empty()) out.relators.push_back(w);
  }
  (void)n;
  return out;
}

GroupPresentation branched_cover_presentation(const GroupPresentation& p) {
  const int m = static_cast<int>(p.generators.size());
  GroupPresentation out;
  static const char* short_names[] = {"x", "y", "z", "w"};
  for (int i = 2; i <= m; ++i) {
    if (m <= 5)
      out.generators.push_back(short_names[i - 2]);
    else
      out.generators.push_back("x" + std::to_string(i));
  }

  // rewrite over the transversal {1, m_1}: the letter m_i^e at prefix parity
  // p emits x_i^{+1} when p is odd and x_i^{-1} when p is even (i=1 emits
  // nothing once m_1^2 is killed)
  auto rewrite = [&](const GroupWord& r) {
    if (r.length() % 2 != 0)
      throw InternalError("branched_cover_presentation: odd-length relator");
    GroupWord w;
    size_t parity = 0;
    for (const auto& [g, e] : r.letters) {
      if (g != 1) w.append(g - 1, (parity % 2) ? +1 : -1);
      parity ^= 1u;
      (void)e;
    }
    return free_reduce(w);
  };

  std::vector<GroupWord> conjugated;
  for (const auto& r : p.relators) out.relators.push_back(rewrite(free_reduce(r)));
  for (const auto& r : p.relators) conjugated.push_back(rewrite(free_reduce(r.conjugate_by(1))));
  out.relators.insert(out.relators.end(), conjugated.begin(), conjugated.end());
  return out;
}

std::vector<Int> abelianization(const GroupPresentation& p) {
  const size_t g = p.generators.size(), r = p.relators.size();
  IntMatrix mtx(r, g);
  for (size_t i = 0; i < r; ++i)
    for (const auto& [gen, e] : p.relators[i].letters)
      mtx.at(i, static_cast<size_t>(gen - 1)) += e;
  std::vector<Int> diag = smith_normal_form(mtx);
  std::vector<Int> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  // generators beyond the matrix rank contribute free factors
  size_t zeros_needed = g > diag.size() ? g - diag.size() : 0;
  for (size_t i = 0; i < zeros_needed; ++i) out.push_back(Int(0));
  std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) {
    if ((a == 0) != (b == 0)) return b == 0;  // zeros last
    return a < b;
  });
  return out;
}

Mat2 evaluate_word(const GroupWord& w, const std::vector<Mat2>& assignment) {
  for (const auto& M : assignment) {
    // the det residual of a floating matrix scales with the squared entry size
    double n = std::max({1.0, std::abs(M.a), std::abs(M.b), std::abs(M.c), std::abs(M.d)});
    if (std::abs(M.det() - Cpx(1.0, 0.0)) > 1e-10 * n * n)
      throw InternalError("evaluate_word: determinant far from 1");
  }
  Mat2 acc = Mat2::identity();
  for (const auto& [g, e] : w.letters) {
    const Mat2& M = assignment.at(static_cast<size_t>(g - 1));
    acc = acc * (e > 0 ? M : M.inv_det1());
  }
  return acc;
}

std::string presentation_to_json(const GroupPresentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generators;
  j["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& [g, e] : r.letters) w.push_back({g, e});
    j["relators"].push_back(w);
  }
  return j.dump();
}

}  // namespace ghost
