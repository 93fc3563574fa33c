#pragma once

#include <string_view>
#include <vector>

#include "hamcurve/multipoly.hpp"
#include "hamcurve/unipoly.hpp"

namespace hamcurve {

/// Sylvester matrix of a and b in `var`, coefficients leading first, with the
/// deg(b) shifted rows of a on top followed by the deg(a) rows of b. With this
/// layout resultant(z - a, z - b, z) = a - b.
std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& a, const MultiPoly& b, std::string_view var);

/// Determinant by fraction-free (Bareiss) elimination.
Rational determinant(std::vector<std::vector<Rational>> m);
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Resultant in `var`; the other variables are parameters. Throws PolyError
/// when both inputs are zero.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view var);
Rational resultant(const UniPoly& a, const UniPoly& b);

/// (-1)^(n(n-1)/2) * Res(P, P') / lc(P), n = deg P. Throws for degree < 2.
MultiPoly discriminant(const MultiPoly& p, std::string_view var);
Rational discriminant_uni(const UniPoly& p);

}  // namespace hamcurve
