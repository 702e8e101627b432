#pragma once

// Index, b(q), symmetric invariants and transcendence degrees. Everything
// "generic" is sampled at random integer points with a seeded generator.

#include <lieshift/pbw.hpp>
#include <lieshift/poly.hpp>
#include <lieshift/structure.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lieshift {

struct SamplingOptions {
  std::uint64_t seed = 2020;
  int samples = 5;
  long bound = 10000;
};

/// A random point of q* (nonzero integer coordinates) together with values
/// for every variable of the scalar tower below `field`.
struct SamplePoint {
  Vector point;
  TowerPoint tower;
};

/// Deterministic in (seed, index, attempt).
SamplePoint draw_point(std::size_t n, const FieldPtr& field, const SamplingOptions& opts, int index, int attempt = 0);

/// Substitutes the tower values into every coefficient; empty if a denominator vanishes.
std::optional<Matrix> specialize_matrix(const Matrix& m, const TowerPoint& point);
std::optional<PolyElement> specialize_poly(const PolyElement& p, const TowerPoint& point);

/// Outcome of a maximum-rank sampling run.
struct SampledRank {
  std::size_t value = 0;       // the certified quantity
  std::size_t max_rank = 0;
  std::vector<std::size_t> ranks;  // one per sample
  SamplePoint witness;          // a point where max_rank is attained
  std::uint64_t seed = 0;
  /// Number of samples attaining the maximum.
  std::size_t agreement() const;
};

SampledRank index_sampled(const LieAlgebra& L, const SamplingOptions& opts = {});
std::size_t index(const LieAlgebra& L, const SamplingOptions& opts = {});
/// (dim q + ind q) / 2.
Rational b_of(const LieAlgebra& L, const SamplingOptions& opts = {});
/// b(q) - b(l) + ind l for a subalgebra l.
Rational b_rel(const LieAlgebra& L, const Subspace& l, const SamplingOptions& opts = {});

/// Basis of the invariants of degree 1..max_deg, each homogeneous and in
/// reduced echelon form within its degree.
std::vector<PolyElement> symmetric_invariants(const LieAlgebra& L, int max_deg);
/// Invariants of degree <= max_deg that are not polynomials in lower ones.
std::vector<PolyElement> invariant_generators(const LieAlgebra& L, int max_deg);

/// p is a linear combination of the given polynomials.
bool in_linear_span(const PolyElement& p, const std::vector<PolyElement>& polys);

enum class Flavor { poisson, associative };

struct GeneratorSet {
  Flavor flavor = Flavor::poisson;
  std::vector<PolyElement> poisson_elements;
  std::vector<PBWElement> associative_elements;
  /// One note per element saying which construction step produced it.
  std::vector<std::string> provenance;

  static GeneratorSet of_poisson(std::vector<PolyElement> elements, const std::string& note = "");
  static GeneratorSet of_associative(std::vector<PBWElement> elements, const std::string& note = "");

  std::size_t size() const;
  void add(const PolyElement& p, const std::string& note);
  void add(const PBWElement& u, const std::string& note);
  /// The polynomials themselves, or principal symbols for associative sets.
  std::vector<PolyElement> symbols() const;
  std::vector<std::string> rendered(const std::vector<std::string>& labels) const;
};

/// Max over samples of the rank of the Jacobian of the given polynomials.
SampledRank trdeg_jacobian(const std::vector<PolyElement>& polys, const FieldPtr& field,
                           const SamplingOptions& opts = {});
SampledRank trdeg_jacobian(const GeneratorSet& G, const FieldPtr& field, const SamplingOptions& opts = {});

/// dim stabilizer(gamma) == ind.
bool is_regular(const LieAlgebra& L, const LinearForm& gamma, std::size_t ind);

}  // namespace lieshift
