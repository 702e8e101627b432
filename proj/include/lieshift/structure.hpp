#pragma once

// Structural computations on Lie algebras given by structure constants.

#include <lieshift/lie_algebra.hpp>

#include <string>
#include <vector>

namespace lieshift {

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Jacobi identity on all basis triples plus every annotation validator.
ValidationReport validate(const LieAlgebra& L);

Matrix coadjoint_form(const LieAlgebra& L, const LinearForm& gamma);
Subspace stabilizer(const LieAlgebra& L, const LinearForm& gamma);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_space(const LieAlgebra& L, const Subspace& A, const Subspace& B);
bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L, const Subspace& S);
/// Lower central series of S taken inside S (S must be a subalgebra).
std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& S);
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S);
bool is_nilpotent(const LieAlgebra& L, const Subspace& S);
/// {x in S : [x, S] = 0}.
Subspace center_of(const LieAlgebra& L, const Subspace& S);

struct StructureSeries {
  Subspace center;
  Subspace derived;
  std::vector<Subspace> lower_central_series;
  bool is_nilpotent = false;
  bool is_abelian = false;
};
StructureSeries structure_series(const LieAlgebra& L);

Matrix ad_matrix(const LieAlgebra& L, const Vector& x);
Matrix killing_form(const LieAlgebra& L);

/// Annotated radical if present, else the Killing-orthogonal of [q, q].
Subspace solvable_radical(const LieAlgebra& L);
/// Annotated nilradical if present, else the ad-nilpotent part of the radical.
Subspace nilradical(const LieAlgebra& L);
Subspace compute_solvable_radical(const LieAlgebra& L);
Subspace compute_nilradical(const LieAlgebra& L);
/// Radical equals center; Killing nondegeneracy on [q,q] is cross-checked.
bool is_reductive(const LieAlgebra& L);

/// Intrinsic structure constants of a subalgebra on the given basis.
LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& S, std::vector<std::string> labels = {});
LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B);

enum class NilradicalKind { trivial, line, heisenberg, abelian_ideal };
std::string to_string(NilradicalKind kind);

struct NilradicalClass {
  NilradicalKind kind = NilradicalKind::trivial;
  Subspace nilradical;
  Subspace ideal;                  // abelian_ideal case
  HeisenbergSplit split;           // heisenberg case
  bool levi_stabilizes_v = false;  // heisenberg case: algebraic route available
  std::string candidate;           // which characteristic ideal was chosen
};

NilradicalClass classify_nilradical(const LieAlgebra& L);

/// {xi : [xi, v] in v}; verified to satisfy q = ltilde + h and ltilde ∩ h = z.
Subspace ltilde(const LieAlgebra& L, const HeisenbergSplit& split);

/// Checks the Heisenberg relations, [q, z] = 0 and stability of v under l_basis.
std::vector<std::string> check_split(const LieAlgebra& L, const HeisenbergSplit& split);

}  // namespace lieshift
