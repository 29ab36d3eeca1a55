#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghost/common.hpp"

namespace ghost {

struct BraidWord {
  int strands = 0;                 // m >= 2
  std::vector<int> letters;       // +i = sigma_i, -i = sigma_i^{-1}, |i| <= m-1
};

// Parse "braid:<m>:<l1> <l2> ... [x<r>]"; the trailing x<r> repeats the
// letter block r times. Throws ParseError.
BraidWord parse_braid(const std::string& spec);

// (sigma_1 ... sigma_{p-1})^q on p strands; requires gcd(p,q) == 1.
BraidWord torus_braid(int p, int q);

// Either "torus:p,q" or a braid spec.
BraidWord parse_knot_spec(const std::string& spec);

struct Crossing {
  int sign = +1;           // braid generator sign
  int over_arc = 0;
  int in_under_arc = 0;
  int out_under_arc = 0;
};

struct KnotDiagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  std::optional<BraidWord> braid_origin;
  // left-edge arc label <-> label of the arc leaving the right edge at the
  // same strand position (identical under the closure-aware labeling; kept
  // explicit because the closure equations are generated from it)
  std::vector<std::pair<int, int>> closure_pairing;
};

// Closure diagram of a braid word. Arcs are numbered so the m strand arcs at
// the left edge are 1..m; walking the crossings left to right, an outgoing
// under-arc that is consumed by a later crossing takes the next fresh label,
// and one that runs to the right edge is the closure continuation of the
// left-edge arc at its exit position. Throws ParseError when the closure is
// not a knot.
KnotDiagram braid_closure(const BraidWord& b);

struct WirtingerTriple {
  int over = 0;
  int under_a = 0, under_b = 0;  // under_a < under_b
};

std::vector<WirtingerTriple> wirtinger_triples(const KnotDiagram& d);

// permutation underlying the braid (position -> position), 0-based
std::vector<int> braid_permutation(const BraidWord& b);

std::string diagram_to_json(const KnotDiagram& d);

}  // namespace ghost
