#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ghost/cover.hpp"
#include "ghost/f2.hpp"
#include "ghost/groebner.hpp"

namespace ghost {

// 2x2 matrix with polynomial entries, [[a, b], [c, d]]
struct PolyMat2 {
  MultiPoly a, b, c, d;
  static PolyMat2 identity();
  PolyMat2 operator*(const PolyMat2& o) const;
  PolyMat2 adjugate() const;  // the inverse modulo det = 1
};

// Pairwise-trace constraint system for SL2(C) images X_p of the cover
// generators m_1 m_p: det(X_p) = 1, tr(X_p) = x_{1p}, and
// tr(X_p^{-1} X_q) = x_{pq} via m_p m_q = (m_1 m_p)^{-1} (m_1 m_q).
// The pairwise conditions are necessary for a point of the preimage; when
// they alone are not contradictory, the emptiness check adjoins the images
// of the cover relators (which a genuine representation must send to the
// identity).
struct TraceSystem {
  int m = 0;
  int normalized = 0;  // generator index modeled as diag(a, x_{1p}-a); 0 = none
  std::optional<QuadCtx> ext;            // adjoined quadratic target field
  std::vector<std::string> variables;    // Buchberger priority order
  std::vector<MultiPoly> base;           // constraints shared by every case
  std::vector<PolyMat2> gen_matrix;      // index p in 2..m
  std::vector<GroupWord> relators;       // cover relators over x_2..x_m

  struct Case {
    std::string label;
    std::vector<MultiPoly> extra;        // added generators (may bind inverse witnesses)
    std::vector<std::string> extra_vars;
  };
  std::vector<Case> cases;               // covering case split; >= 1 entry

  std::vector<MultiPoly> case_generators(size_t idx) const;
};

// Throws InternalError when the point lacks exact seed coordinates (the
// certification layer is exact by design).
TraceSystem build_trace_system(const F2Point& pt, int m,
                               const GroupPresentation* cover = nullptr);

struct EmptinessCertificate {
  struct CaseResult {
    std::string label;
    GroebnerBasis basis;        // final reduced basis for the case
    bool contains_one = false;
    bool used_relators = false;  // pairwise traces alone were not contradictory
  };
  std::vector<CaseResult> cases;  // processed cases, in order
  bool empty = false;             // all cases reduced to {1}
  bool conclusive = false;        // false when a resource cap interrupted
  std::string note;
};

EmptinessCertificate emptiness_check(const TraceSystem& ts, const BuchbergerCaps& caps = {});

// Normal forms of the staged intermediate polynomials of the trace-1
// normalized system (the m = 5, all-targets-1 shape); each pairs the
// polynomial with its normal form modulo the full system's basis.
std::vector<std::pair<MultiPoly, MultiPoly>> derivation_trace(const TraceSystem& ts,
                                                              const BuchbergerCaps& caps = {});

struct RepWitness {
  std::vector<Mat2> matrices;
  bool accepted = false;
  std::string failure;  // first failing check when rejected
  double det_residual = 0.0;
  double trace_residual = 0.0;   // worst |tr - target| over all pair traces
  double relator_residual = 0.0; // worst relator image deviation from identity
};

RepWitness verify_witness(const std::vector<Mat2>& matrices, const GroupPresentation& cover,
                          const F2Point& pt, double tol = kRelationTol);

// the explicit representation over the (0,-1) point of the (5,6)-torus knot
std::vector<Mat2> stored_witness_t56_0m1();

// numeric generator matrices of a trace system at a variable assignment
std::vector<Mat2> matrices_at(const TraceSystem& ts, const std::vector<Cpx>& x);

struct KnotContext {
  std::string spec;  // canonical knot spec string
  int m = 0;
  GroupPresentation cover;
};

struct PreimageReport {
  enum class Verdict { InImage, Empty, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<EmptinessCertificate> certificate;
  std::optional<RepWitness> witness;
};

PreimageReport preimage_report(const F2Point& pt, bool is_ghost, const KnotContext& ctx,
                               const BuchbergerCaps& caps = {});

// Random-start Gauss-Newton search for a numeric solution of a polynomial
// system; the falsification harness for emptiness certificates.
std::optional<std::vector<Cpx>> numeric_solution_search(const std::vector<MultiPoly>& gens,
                                                        const std::vector<std::string>& vars,
                                                        int starts, std::uint64_t rng_seed,
                                                        double tol = 1e-6);

// Falsification harness over the full preimage condition of a trace system:
// trace constraints plus relator images, relators evaluated as numeric matrix
// products with a finite-difference Jacobian.
std::optional<std::vector<Cpx>> numeric_preimage_search(const TraceSystem& ts, int starts,
                                                        std::uint64_t rng_seed, double tol = 1e-6);

}  // namespace ghost
