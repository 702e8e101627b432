#pragma once

// Commutative subalgebras of U(q) of transcendence degree b(q): shift of
// argument subalgebras, the Heisenberg hat map, the abelian-ideal reduction
// and the recursive orchestrator tying them together.

#include <lieshift/invariants.hpp>
#include <lieshift/pbw.hpp>
#include <lieshift/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lieshift {

struct ConstructOptions {
  SamplingOptions sampling;
  /// Degree cap for the invariant search in the reductive case.
  int max_deg = 4;
  /// Recursion depth cap.
  int depth = kMaxTowerDepth;
  /// Linear form on q for the shift of argument, when given. Restricted to l
  /// through Heisenberg reductions; not carried through the abelian one.
  std::optional<LinearForm> gamma;
};

// ------------------------------------------------------------------ MF

/// All nonconstant shifts d^k_gamma H (0 <= k < deg H) of the given invariants.
/// Throws VerificationError if an input is not invariant or two shifts fail to
/// Poisson-commute.
GeneratorSet mf_subalgebra(const LieAlgebra& L, const std::vector<PolyElement>& casimirs, const LinearForm& gamma);

/// Seeded search for a form with dim stabilizer = ind q.
LinearForm sample_regular_form(const LieAlgebra& L, const SamplingOptions& opts, std::size_t ind);

struct QuantumMF {
  GeneratorSet poisson;      // the MF set
  GeneratorSet generators;   // symmetrized, in U(q)
  bool commutative = false;
  bool symbols_match = false;  // principal symbols reproduce the MF set
  std::vector<std::string> failures;
};

QuantumMF quantum_mf(const PBWAlgebraPtr& U, const std::vector<PolyElement>& casimirs, const LinearForm& gamma);

// ------------------------------------------------------------------ Heisenberg

/// A basis change putting l, x_1..x_n, y_1..y_n, z on coordinate vectors,
/// z last. `basis[k]` are the new basis vectors in the old coordinates.
struct SplitFrame {
  LieAlgebra algebra;
  std::vector<Vector> basis;
  std::vector<std::size_t> l_indices;  // in the new basis; includes z for an ltilde frame
  std::vector<std::size_t> x_indices;
  std::vector<std::size_t> y_indices;
  std::size_t z_index = 0;
  HeisenbergSplit split;  // in the new coordinates
  PBWAlgebraPtr U;        // U(q)[z^-1] in the new coordinates
};

/// `l` spans the l part; when it contains z the frame keeps z only once.
SplitFrame split_frame(const LieAlgebra& L, const HeisenbergSplit& split, const Subspace& l);

/// xi + (1/2z) sum([xi, x_i] y_i - [xi, y_i] x_i) in U; z must be a scalar
/// multiple of a Laurent basis element of U.
PBWElement hat_map(const PBWAlgebraPtr& U, const HeisenbergSplit& split, const Vector& xi);

struct HatLemmaReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// [v, hat xi] = 0 for v in h and [hat xi, hat eta] = hat [xi, eta] on a basis of l.
HatLemmaReport verify_hat_lemmas(const LieAlgebra& L, const HeisenbergSplit& split);

struct LiftResult {
  GeneratorSet generators;  // in U(q) of the original algebra
  PBWAlgebraPtr U;
  SampledRank trdeg;
  std::vector<std::string> failures;
};

/// Hat images of A_l (elements of U(l) with l realised as frame.l_indices),
/// cleared of z^-1, together with x_1..x_n and z. The result lives in
/// `target` (a fresh U(L) when null).
LiftResult heisenberg_lift(const LieAlgebra& L, const SplitFrame& frame, const GeneratorSet& A_l,
                           const SamplingOptions& opts = {}, PBWAlgebraPtr target = nullptr);

// ------------------------------------------------------------------ abelian ideal

struct HatAlgebra {
  FieldPtr base_field;                      // K(h*)
  std::vector<Vector> ideal_basis;          // eta_j in q
  std::vector<std::size_t> complement;      // indices of the complement basis xi_i
  std::vector<Vector> qhat_vectors;         // F-coefficients over the complement
  std::size_t delta_index = 0;              // last basis element of `algebra`
  LieAlgebra algebra;                       // q-hat over base_field
  std::size_t expected_dim = 0;             // min_alpha dim q_alpha - dim h + 1, sampled
};

HatAlgebra abelian_qhat(const LieAlgebra& L, const Subspace& h, const SamplingOptions& opts = {});

struct SpecializeResult {
  bool success = false;
  FieldElement value;
  GeneratorSet generators;
  std::size_t trdeg_before = 0;
  std::size_t trdeg_after = 0;
};

/// First candidate c (default 1..20) with trdeg A(c) >= trdeg A - 1.
SpecializeResult specialize_search(const GeneratorSet& A, std::size_t var, const SamplingOptions& opts = {},
                                   std::vector<FieldElement> candidates = {});

/// Image in U(q) of elements of U(q-hat)/(delta - 1), cleared of
/// denominators in the ideal variables.
std::vector<PBWElement> lift_from_qhat(const HatAlgebra& H, const PBWAlgebraPtr& Uq,
                                       const std::vector<PBWElement>& elements);

// ------------------------------------------------------------------ orchestrator

struct TraceStep {
  int depth = 0;
  std::string label;
  std::string detail;
};

struct ConstructionCertificate {
  LieAlgebra algebra;
  PBWAlgebraPtr U;
  GeneratorSet generators;
  SampledRank trdeg;
  Rational b_target;
  bool commutative = false;
  int degree_bound = 0;  // highest filtration degree among the generators
  std::vector<TraceStep> trace;
  std::vector<std::string> failures;
  bool success() const { return failures.empty() && commutative && Rational(static_cast<long>(trdeg.value)) == b_target; }
};

ConstructionCertificate construct_theorem(const LieAlgebra& L, const ConstructOptions& opts = {});

/// Recomputes every pairwise commutator and the Jacobian rank from scratch.
std::vector<std::string> recheck(const ConstructionCertificate& cert, const SamplingOptions& opts = {});

/// Pairwise commutators; returns the failing pairs.
std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const std::vector<PBWElement>& elements);

struct MaximalityReport {
  int degree = 0;
  std::vector<PBWElement> centralizer;  // basis of Z(A) up to the degree
  std::vector<PBWElement> new_elements; // centralizer elements outside the span of products of A
  bool trdeg_increases = false;         // some new element is algebraically independent of A
  bool enlarged_commutative = false;
};

MaximalityReport maximality_probe(const GeneratorSet& A, int d, const SamplingOptions& opts = {});

}  // namespace lieshift
