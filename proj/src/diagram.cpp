#include "ghost/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace ghost {

namespace {

int checked_int(const std::string& tok, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw ParseError("bad " + what + ": '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("bad " + what + ": '" + tok + "'");
  }
}

}  // namespace

BraidWord parse_braid(const std::string& spec) {
  if (spec.rfind("braid:", 0) != 0) throw ParseError("braid spec must start with 'braid:'");
  size_t second = spec.find(':', 6);
  if (second == std::string::npos) throw ParseError("braid spec missing strand count");
  int m = checked_int(spec.substr(6, second - 6), "strand count");
  if (m < 2) throw ParseError("braid needs at least 2 strands");

  std::istringstream is(spec.substr(second + 1));
  std::vector<int> letters;
  int repeat = 1;
  std::string tok;
  while (is >> tok) {
    if (tok.size() > 1 && (tok[0] == 'x' || tok[0] == 'X')) {
      repeat = checked_int(tok.substr(1), "repeat count");
      if (repeat < 1) throw ParseError("repeat count must be positive");
      std::string rest;
      if (is >> rest) throw ParseError("braid spec: tokens after repeat marker");
      break;
    }
    int e = checked_int(tok, "braid letter");
    if (e == 0 || std::abs(e) >= m)
      throw ParseError("braid letter " + tok + " out of range for " + std::to_string(m) + " strands");
    letters.push_back(e);
  }
  if (letters.empty()) throw ParseError("braid word is empty");
  BraidWord b{m, {}};
  for (int r = 0; r < repeat; ++r) b.letters.insert(b.letters.end(), letters.begin(), letters.end());
  return b;
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 2) throw ParseError("torus parameters must be >= 2");
  if (std::gcd(p, q) != 1) throw ParseError("torus(" + std::to_string(p) + "," + std::to_string(q) +
                                            ") closes to a link, not a knot");
  BraidWord b{p, {}};
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  return b;
}

BraidWord parse_knot_spec(const std::string& spec) {
  if (spec.rfind("torus:", 0) == 0) {
    std::string rest = spec.substr(6);
    size_t comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("torus spec needs 'torus:p,q'");
    int p = checked_int(rest.substr(0, comma), "torus p");
    int q = checked_int(rest.substr(comma + 1), "torus q");
    return torus_braid(p, q);
  }
  if (spec.rfind("braid:", 0) == 0) return parse_braid(spec);
  throw ParseError("unknown knot spec '" + spec + "' (expected torus:p,q or braid:m:...)");
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  // perm[p] = final position of the strand entering at position p
  for (int e : b.letters) {
    int i = std::abs(e) - 1;
    for (auto& p : perm) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return perm;
}

KnotDiagram braid_closure(const BraidWord& b) {
  const int m = b.strands;
  const int n = static_cast<int>(b.letters.size());

  // single component iff the underlying permutation is an m-cycle
  {
    auto perm = braid_permutation(b);
    std::vector<bool> seen(m, false);
    int len = 0, p = 0;
    while (!seen[p]) {
      seen[p] = true;
      ++len;
      p = perm[p];
    }
    if (len != m)
      throw ParseError("braid closure has more than one component");
  }

  // first pass: provisional labels, fresh for every under-out
  struct Prov {
    int over, in, out, sign;
  };
  std::vector<Prov> prov;
  std::vector<int> pos(m);  // strand positions -> provisional arc label
  std::iota(pos.begin(), pos.end(), 1);
  int next = m + 1;
  for (int e : b.letters) {
    int i = std::abs(e) - 1;  // crossing at positions i, i+1 (0-based)
    int sign = e > 0 ? +1 : -1;
    int over, in;
    if (sign > 0) {
      over = pos[i];
      in = pos[i + 1];
    } else {
      over = pos[i + 1];
      in = pos[i];
    }
    int out = next++;
    prov.push_back({over, in, out, sign});
    // strands swap positions; over keeps its label
    if (sign > 0) {
      pos[i] = out;       // under exits at position i
      pos[i + 1] = over;
    } else {
      pos[i] = over;
      pos[i + 1] = out;   // under exits at position i+1
    }
  }

  // closure identification: the arc leaving the right edge at position p is
  // the left-edge arc p+1. Union provisional labels, then renumber classes:
  // left-edge classes keep 1..m and the remaining classes take fresh labels
  // in crossing order, which reproduces the usual diagram numbering.
  const int total = m + n;
  std::vector<int> parent(static_cast<size_t>(total + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < m; ++p) {
    int a = find(p + 1), b = find(pos[p]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> relabel(static_cast<size_t>(total + 1), 0);
  int fresh = 0;
  for (int p = 1; p <= m; ++p) {
    int r = find(p);
    if (!relabel[r]) relabel[r] = ++fresh;
  }
  for (const auto& cr : prov) {
    int r = find(cr.out);
    if (!relabel[r]) relabel[r] = ++fresh;
  }
  for (int x = 1; x <= total; ++x) relabel[x] = relabel[find(x)];
  if (fresh != n)
    // arcs = crossings for every knot braid closure
    throw InternalError("braid_closure: arc/crossing count mismatch");

  KnotDiagram d;
  d.arc_count = n;
  d.braid_origin = b;
  for (const auto& cr : prov)
    d.crossings.push_back({cr.sign, relabel[cr.over], relabel[cr.in], relabel[cr.out]});
  for (int p = 0; p < m; ++p) d.closure_pairing.push_back({p + 1, relabel[pos[p]]});
  return d;
}

std::vector<WirtingerTriple> wirtinger_triples(const KnotDiagram& d) {
  std::vector<WirtingerTriple> out;
  out.reserve(d.crossings.size());
  for (const auto& c : d.crossings) {
    WirtingerTriple t;
    t.over = c.over_arc;
    t.under_a = std::min(c.in_under_arc, c.out_under_arc);
    t.under_b = std::max(c.in_under_arc, c.out_under_arc);
    out.push_back(t);
  }
  return out;
}

std::string diagram_to_json(const KnotDiagram& d) {
  nlohmann::ordered_json j;
  j["arcs"] = d.arc_count;
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& c : d.crossings) {
    j["crossings"].push_back({{"sign", c.sign},
                              {"over", c.over_arc},
                              {"under_in", c.in_under_arc},
                              {"under_out", c.out_under_arc}});
  }
  j["closure_pairing"] = nlohmann::ordered_json::array();
  for (const auto& [l, r] : d.closure_pairing) j["closure_pairing"].push_back({l, r});
  return j.dump();
}

}  // namespace ghost
