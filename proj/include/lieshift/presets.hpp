#pragma once

#include <lieshift/lie_algebra.hpp>

#include <string>
#include <vector>

namespace lieshift {

LieAlgebra abelian(std::size_t n);
/// Basis x1..xn, y1..yn, z (x, y, z when n = 1).
LieAlgebra heisenberg(std::size_t n);
LieAlgebra gl(std::size_t n);

/// Structure constants of the span of the given rational matrices, which
/// must be linearly independent and closed under the commutator.
LieAlgebra from_matrices(std::string name, std::vector<std::string> labels,
                         const std::vector<Matrix>& matrices);

/// Looks up a shipped preset ("sl2", "abelian(4)", "heisenberg:2", ...).
LieAlgebra preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace lieshift
