#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghost/diagram.hpp"
#include "ghost/poly.hpp"

namespace ghost {

// unordered arc pair (p,q), normalized p <= q; (p,p) stands for the constant 2
struct PairSym {
  int p = 0, q = 0;
  PairSym() = default;
  PairSym(int a, int b) : p(std::min(a, b)), q(std::max(a, b)) {}
  bool diagonal() const { return p == q; }
  bool operator<(const PairSym& o) const { return p != o.p ? p < o.p : q < o.q; }
  bool operator==(const PairSym& o) const { return p == o.p && q == o.q; }
  std::string name() const;  // "x12" (or "x10_14" for two-digit indices)
};

// The crossing relations x_{a,out} = x_{over,in} x_{a,over} - x_{a,in},
// one for every arc a and crossing; the relation is symmetric in the two
// under-arcs, so this oriented family generates the same set.
struct FundamentalRelationSet {
  int n = 0;
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> closure_pairing;

  // vanishing polynomial of relation (a, crossing) over the pair symbols
  MultiPoly relation_poly(int a, const Crossing& c) const;
  size_t relation_count() const { return static_cast<size_t>(n) * crossings.size(); }
};

FundamentalRelationSet generate_f2_relations(const KnotDiagram& d);

// Rewrites every pair symbol into the seed symbols x_{ij}, 1 <= i < j <= m,
// following the crossing tree: the unique crossing emitting arc t > m gives
// x_{at} = x_{i_t j_t} x_{a i_t} - x_{a j_t}.
class SubstitutionChain {
 public:
  SubstitutionChain() = default;
  SubstitutionChain(int m, int n, const std::vector<Crossing>& crossings);

  int seed_count() const { return m_; }
  int arc_count() const { return n_; }
  // eliminated symbols, highest arc first (the replay order)
  const std::vector<PairSym>& eliminated() const { return elim_; }

  // exact seed-variable polynomial for any pair symbol (memoized)
  const MultiPoly& seed_poly(PairSym s) const;

  // numeric replay of one symbol at a seed assignment
  Cpx replay(PairSym s, const std::map<PairSym, Cpx>& seed) const;
  QuadVal replay_quad(PairSym s, const std::map<PairSym, QuadVal>& seed, const QuadCtx& ctx) const;

 private:
  int m_ = 0, n_ = 0;
  std::vector<std::pair<int, int>> rule_;  // arc t -> (over, in) of its crossing
  std::vector<PairSym> elim_;
  mutable std::map<PairSym, MultiPoly> memo_;
};

struct SymmetryClasses {
  // partition of seed pairs into cyclic classes; representative = lex-min
  std::vector<std::vector<PairSym>> classes;
  std::map<PairSym, PairSym> representative;
};

struct ReducedPresentation {
  int m = 0;
  std::vector<PairSym> seeds;                 // all (i,j), 1 <= i < j <= m
  std::vector<PairSym> var_pairs;             // pair behind each variable
  std::vector<std::string> variables;         // polynomial variables in use
  std::vector<MultiPoly> defining;            // vanishing convention
  std::optional<SymmetryClasses> classes;     // set by symmetry_reduce
  bool symmetry_applied = false;
};

std::pair<SubstitutionChain, ReducedPresentation> eliminate_to_seed(const FundamentalRelationSet& rels,
                                                                    int m);

// For full-cycle torus words (sigma_1...sigma_{m-1})^q: fold seed symbols
// along i -> i+1 (mod m) and deduplicate the defining polynomials. Other
// braids are returned unchanged with symmetry_applied == false.
ReducedPresentation symmetry_reduce(const ReducedPresentation& rp, const BraidWord& b);

struct F2Point {
  // values for the representative variables, aligned with rp.variables
  std::vector<Cpx> reduced;
  std::optional<QuadCtx> ext;                  // quadratic field of this point
  std::optional<std::vector<QuadVal>> reduced_exact;

  std::map<PairSym, Cpx> seed;                 // all seed pairs
  std::optional<std::map<PairSym, QuadVal>> seed_exact;

  std::optional<std::map<PairSym, Cpx>> full;  // all pairs, filled by lift_point
  double full_residual_max = -1.0;

  bool exact() const { return seed_exact.has_value(); }
  Cpx value(PairSym s) const;  // seed or full coordinate (diagonal = 2)
};

// All common zeros of the reduced system. Representative counts <= 2 go
// through the resultant path, larger systems through lex Groebner
// elimination. Throws InternalError when a positive-dimensional component is
// detected.
std::vector<F2Point> solve_reduced(const ReducedPresentation& rp);

// Populate full coordinates by class expansion and chain replay, then check
// every fundamental relation. Throws InternalError when the residual bound is
// violated.
void lift_point(F2Point& pt, const SubstitutionChain& chain, const FundamentalRelationSet& rels,
                double tol = kRelationTol);

// convenience: the whole pipeline for one knot
struct F2Result {
  KnotDiagram diagram;
  FundamentalRelationSet relations;
  SubstitutionChain chain;
  ReducedPresentation presentation;  // after symmetry reduction
  std::vector<F2Point> points;
};

F2Result compute_f2(const BraidWord& b, bool lift_full = false);

}  // namespace ghost
