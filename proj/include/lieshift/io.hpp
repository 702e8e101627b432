#pragma once

// AlgebraFile ("lieshift/1") reading and writing, and a small expression
// language for field elements, polynomials and elements of U(q).
//
// AlgebraFile layout:
//   {
//     "format": "lieshift/1",
//     "name": "sl2",                          optional
//     "field": [["t"], ["s1", "s2"]],         optional tower, one list per level
//     "dim": 3,
//     "basis": ["e", "h", "f"],
//     "brackets": [{"i": "e", "j": "f", "coeffs": {"h": "1"}}],
//     "annotations": {                        optional
//       "central": ["z"],
//       "levi": [{"e": "1"}, ...],            subspaces are lists of sparse vectors
//       "nilradical": [...], "solvable_radical": [...],
//       "heisenberg_split": {"l_basis": [...], "x": [...], "y": [...], "z": {"z": "1"}}
//     }
//   }
// "i"/"j" may be labels or 0-based indices. Coefficients are strings: integers,
// fractions "p/q", or expressions in the tower variables. Floats are rejected.

#include <lieshift/lie_algebra.hpp>
#include <lieshift/pbw.hpp>
#include <lieshift/poly.hpp>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lieshift {

/// With `check`, an algebra failing validate() is an InputError.
LieAlgebra algebra_from_json(const nlohmann::json& j, bool check = true);
nlohmann::json algebra_to_json(const LieAlgebra& L);
LieAlgebra read_algebra_file(const std::string& path, bool check = true);
void write_algebra_file(const LieAlgebra& L, const std::string& path);

/// Scalar expression over the tower of `field` (nullptr means Q).
FieldElement parse_field_element(std::string_view text, const FieldPtr& field);
/// Polynomial in the basis labels of L.
PolyElement parse_poly(std::string_view text, const LieAlgebra& L);
/// Element of U, products taken in the order written. symm(...) symmetrizes
/// its polynomial argument; z^-k is allowed at Laurent variables.
PBWElement parse_pbw(std::string_view text, const PBWAlgebraPtr& U);
/// Degree-one element written in the labels, e.g. "e + 2*f".
Vector parse_vector(std::string_view text, const LieAlgebra& L);
/// Either a comma-separated coordinate list or a linear expression in the
/// labels read against the dual basis ("h" means h*).
LinearForm parse_linear_form(std::string_view text, const LieAlgebra& L);

/// Splits on a separator at parenthesis depth zero.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace lieshift
