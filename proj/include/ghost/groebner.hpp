#pragma once

#include <cstdint>
#include <vector>

#include "ghost/poly.hpp"

namespace ghost {

enum class OrderKind { Lex, GrevLex };

// Monomial order with explicit variable priority. Ring variables not listed
// in `priority` are appended after it in name order.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<std::string> priority;

  static MonomialOrder grevlex(std::vector<std::string> prio = {}) {
    return {OrderKind::GrevLex, std::move(prio)};
  }
  static MonomialOrder lex(std::vector<std::string> prio = {}) {
    return {OrderKind::Lex, std::move(prio)};
  }
};

struct Ideal {
  std::vector<MultiPoly> generators;

  Ideal() = default;
  explicit Ideal(std::vector<MultiPoly> gens) {
    for (auto& g : gens)
      if (!g.is_zero()) generators.push_back(std::move(g));
  }
};

struct GroebnerBasis {
  std::vector<MultiPoly> basis;  // reduced, monic, sorted by leading monomial
  MonomialOrder order;
  std::vector<std::string> ring;  // full variable list of the computation
};

struct BuchbergerCaps {
  std::size_t max_pairs = 1000000;  // S-pairs processed
  unsigned max_degree = 60;         // total degree of any intermediate polynomial
};

// Reduced Groebner basis; deterministic for fixed input and order.
// Throws ResourceCapError when a cap is exceeded.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerCaps& caps = {});

// Fully reduced normal form of p modulo G.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& G);

// True iff the reduced basis is {1}; over Q this certifies the generators
// have no common complex zero.
bool ideal_contains_one(const GroebnerBasis& G);

std::string ideal_to_json(const Ideal& ideal);
std::string basis_to_json(const GroebnerBasis& G);

}  // namespace ghost
