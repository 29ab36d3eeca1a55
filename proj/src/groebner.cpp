#include "ghost/groebner.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ghost {

namespace {

using Expo = MultiPoly::Expo;

// Working representation: terms sorted descending under the active order.
struct NPoly {
  std::vector<std::pair<Expo, Rat>> t;
  bool zero() const { return t.empty(); }
  const Expo& lm() const { return t.front().first; }
  const Rat& lc() const { return t.front().second; }
};

struct OrderCtx {
  OrderKind kind;
  std::vector<size_t> perm;  // priority position -> ring index

  // returns true if a > b in the order
  bool gt(const Expo& a, const Expo& b) const {
    if (kind == OrderKind::Lex) {
      for (size_t k : perm) {
        if (a[k] != b[k]) return a[k] > b[k];
      }
      return false;
    }
    unsigned da = 0, db = 0;
    for (unsigned x : a) da += x;
    for (unsigned x : b) db += x;
    if (da != db) return da > db;
    for (size_t i = perm.size(); i-- > 0;) {
      size_t k = perm[i];
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

unsigned total_deg(const Expo& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

bool divides(const Expo& a, const Expo& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo lcm_expo(const Expo& a, const Expo& b) {
  Expo e(a.size());
  for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

bool coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

NPoly to_npoly(const MultiPoly& p, const OrderCtx& ord) {
  NPoly n;
  n.t.assign(p.terms().begin(), p.terms().end());
  std::sort(n.t.begin(), n.t.end(),
            [&](const auto& x, const auto& y) { return ord.gt(x.first, y.first); });
  return n;
}

// primitive integer form with positive leading coefficient
void content_normalize(NPoly& p) {
  if (p.zero()) return;
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.t) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.lc() < 0) scale = -scale;
  for (auto& [e, c] : p.t) c *= scale;
}

void make_monic(NPoly& p) {
  if (p.zero()) return;
  Rat inv = 1 / p.lc();
  for (auto& [e, c] : p.t) c *= inv;
}

// p -= coeff * x^shift * q   (q's terms scaled and shifted, order-merge)
NPoly axpy(const NPoly& p, const Rat& coeff, const Expo& shift, const NPoly& q, const OrderCtx& ord) {
  NPoly out;
  out.t.reserve(p.t.size() + q.t.size());
  size_t i = 0, j = 0;
  auto shifted = [&](size_t jj) {
    Expo e = q.t[jj].first;
    for (size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
    return e;
  };
  Expo ej;
  bool ej_valid = false;
  while (i < p.t.size() || j < q.t.size()) {
    if (j < q.t.size() && !ej_valid) {
      ej = shifted(j);
      ej_valid = true;
    }
    if (j >= q.t.size() || (i < p.t.size() && ord.gt(p.t[i].first, ej))) {
      out.t.push_back(p.t[i]);
      ++i;
    } else if (i >= p.t.size() || ord.gt(ej, p.t[i].first)) {
      Rat c = -coeff * q.t[j].second;
      if (c != 0) out.t.emplace_back(ej, std::move(c));
      ++j;
      ej_valid = false;
    } else {
      Rat c = p.t[i].second - coeff * q.t[j].second;
      if (c != 0) out.t.emplace_back(p.t[i].first, std::move(c));
      ++i;
      ++j;
      ej_valid = false;
    }
  }
  return out;
}

// full reduction of f modulo basis
NPoly reduce_full(NPoly f, const std::vector<NPoly>& basis, const OrderCtx& ord, unsigned max_degree) {
  NPoly rem;
  while (!f.zero()) {
    if (total_deg(f.lm()) > max_degree)
      throw ResourceCapError("buchberger: degree cap exceeded (" + std::to_string(max_degree) + ")");
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.zero()) continue;
      if (divides(g.lm(), f.lm())) {
        Expo shift(f.lm().size());
        for (size_t k = 0; k < shift.size(); ++k) shift[k] = f.lm()[k] - g.lm()[k];
        Rat c = f.lc() / g.lc();
        f = axpy(f, c, shift, g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
    }
  }
  return rem;
}

struct Pair {
  size_t i, j;
  Expo lcm;
  unsigned deg;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerCaps& caps) {
  // assemble the common ring
  std::set<std::string> names;
  for (const auto& g : ideal.generators)
    for (const auto& v : g.vars()) names.insert(v);
  for (const auto& v : order.priority) names.insert(v);
  std::vector<std::string> ring(names.begin(), names.end());

  OrderCtx ord;
  ord.kind = order.kind;
  std::vector<bool> placed(ring.size(), false);
  for (const auto& v : order.priority) {
    auto it = std::lower_bound(ring.begin(), ring.end(), v);
    size_t idx = static_cast<size_t>(it - ring.begin());
    if (!placed[idx]) {
      ord.perm.push_back(idx);
      placed[idx] = true;
    }
  }
  for (size_t i = 0; i < ring.size(); ++i)
    if (!placed[i]) ord.perm.push_back(i);

  auto ring_vars = MultiPoly::intern_vars(std::vector<std::string>(ring));
  std::vector<NPoly> G;
  std::vector<Pair> pairs;

  auto add_pairs_for = [&](size_t h) {
    // Gebauer-Moeller update
    const Expo& lh = G[h].lm();
    std::vector<Pair> fresh;
    for (size_t i = 0; i < h; ++i) {
      if (G[i].zero()) continue;
      fresh.push_back({i, h, lcm_expo(G[i].lm(), lh), 0});
      fresh.back().deg = total_deg(fresh.back().lcm);
    }
    // drop old pairs made redundant by h
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                               [&](const Pair& p) {
                                 if (!divides(lh, p.lcm)) return false;
                                 Expo l1 = lcm_expo(G[p.i].lm(), lh);
                                 Expo l2 = lcm_expo(G[p.j].lm(), lh);
                                 return l1 != p.lcm && l2 != p.lcm;
                               }),
                pairs.end());
    // within the fresh pairs: keep minimal lcms only, one per lcm value
    std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      return a.i < b.i;
    });
    std::vector<Pair> kept;
    for (const auto& p : fresh) {
      bool redundant = false;
      for (const auto& k : kept) {
        if (divides(k.lcm, p.lcm)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(p);
    }
    // Buchberger's first criterion
    for (const auto& p : kept)
      if (!coprime(G[p.i].lm(), G[p.j].lm())) pairs.push_back(p);
  };

  for (const auto& g : ideal.generators) {
    MultiPoly a = align(g, ring_vars);
    NPoly n = to_npoly(a, ord);
    if (n.zero()) continue;
    content_normalize(n);
    G.push_back(std::move(n));
    add_pairs_for(G.size() - 1);
  }

  size_t processed = 0;
  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree first, ties broken by order then index
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.lcm != b.lcm) return !ord.gt(a.lcm, b.lcm);
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *best;
    pairs.erase(best);
    if (++processed > caps.max_pairs)
      throw ResourceCapError("buchberger: pair cap exceeded (" + std::to_string(caps.max_pairs) + ")");

    const NPoly &f = G[p.i], &g = G[p.j];
    if (f.zero() || g.zero()) continue;
    // S-polynomial
    Expo sf(p.lcm.size()), sg(p.lcm.size());
    for (size_t k = 0; k < p.lcm.size(); ++k) {
      sf[k] = p.lcm[k] - f.lm()[k];
      sg[k] = p.lcm[k] - g.lm()[k];
    }
    // s = (1/lc f) x^sf f - (1/lc g) x^sg g
    NPoly s;
    s = axpy(NPoly{}, Rat(-1) / f.lc(), sf, f, ord);
    s = axpy(s, Rat(1) / g.lc(), sg, g, ord);
    NPoly r = reduce_full(std::move(s), G, ord, caps.max_degree);
    if (r.zero()) continue;
    content_normalize(r);
    G.push_back(std::move(r));
    add_pairs_for(G.size() - 1);
    // quick exit: a nonzero constant means the whole ring
    if (G.back().t.size() == 1 && total_deg(G.back().lm()) == 0) {
      pairs.clear();
      break;
    }
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<size_t> keep;
  for (size_t i = 0; i < G.size(); ++i) {
    if (G[i].zero()) continue;
    bool dominated = false;
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || G[j].zero()) continue;
      if (divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  std::vector<NPoly> M;
  for (size_t i : keep) M.push_back(G[i]);
  // inter-reduce tails
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < M.size(); ++i) {
      std::vector<NPoly> others;
      for (size_t j = 0; j < M.size(); ++j)
        if (j != i) others.push_back(M[j]);
      NPoly r = reduce_full(M[i], others, ord, caps.max_degree);
      if (r.t != M[i].t) {
        changed = true;
        M[i] = std::move(r);
      }
    }
    M.erase(std::remove_if(M.begin(), M.end(), [](const NPoly& p) { return p.zero(); }), M.end());
  }
  for (auto& m : M) make_monic(m);
  std::sort(M.begin(), M.end(), [&](const NPoly& a, const NPoly& b) { return !ord.gt(a.lm(), b.lm()) && a.lm() != b.lm(); });

  GroebnerBasis out;
  out.order = order;
  out.ring = ring;
  for (const auto& m : M) {
    MultiPoly::TermMap t;
    for (const auto& [e, c] : m.t) t[e] = c;
    out.basis.emplace_back(ring_vars, std::move(t));
  }
  return out;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& Gb) {
  std::set<std::string> names(Gb.ring.begin(), Gb.ring.end());
  for (const auto& v : p.vars()) names.insert(v);
  std::vector<std::string> ring(names.begin(), names.end());
  auto ring_vars = MultiPoly::intern_vars(std::vector<std::string>(ring));

  OrderCtx ord;
  ord.kind = Gb.order.kind;
  std::vector<bool> placed(ring.size(), false);
  auto place = [&](const std::string& v) {
    auto it = std::lower_bound(ring.begin(), ring.end(), v);
    if (it == ring.end() || *it != v) return;
    size_t idx = static_cast<size_t>(it - ring.begin());
    if (!placed[idx]) {
      ord.perm.push_back(idx);
      placed[idx] = true;
    }
  };
  for (const auto& v : Gb.order.priority) place(v);
  for (const auto& v : Gb.ring) place(v);
  for (size_t i = 0; i < ring.size(); ++i)
    if (!placed[i]) ord.perm.push_back(i);

  std::vector<NPoly> basis;
  for (const auto& g : Gb.basis) basis.push_back(to_npoly(align(g, ring_vars), ord));
  NPoly f = to_npoly(align(p, ring_vars), ord);
  NPoly r = reduce_full(std::move(f), basis, ord, 1000000u);
  MultiPoly::TermMap t;
  for (const auto& [e, c] : r.t) t[e] = c;
  return MultiPoly(ring_vars, std::move(t));
}

bool ideal_contains_one(const GroebnerBasis& G) {
  return G.basis.size() == 1 && G.basis[0].is_constant() && !G.basis[0].is_zero();
}

std::string ideal_to_json(const Ideal& ideal) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : ideal.generators) j["generators"].push_back(g.to_string());
  return j.dump();
}

std::string basis_to_json(const GroebnerBasis& G) {
  nlohmann::ordered_json j;
  j["order"] = G.order.kind == OrderKind::Lex ? "lex" : "grevlex";
  j["priority"] = G.order.priority;
  j["ring"] = G.ring;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& g : G.basis) j["basis"].push_back(g.to_string());
  return j.dump();
}

}  // namespace ghost
