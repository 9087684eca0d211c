#pragma once

// The vertical-flag valuation: on the big cell Y_i = {t_1 = ... = t_i = 0}, so
// nu(s) is the lex-minimal exponent of the cell polynomial (t_1 heaviest).

#include "okbody/variety.hpp"

namespace okbody {

using ValuationVector = std::vector<int>;

ValuationVector valuation(const Poly& s);
ValuationVector valuation(const SectionPoly& s);

/// Triangularises a basis so that leading monomials are pairwise distinct.
/// Output is sorted by valuation; each member keeps the weight of the input it came from.
SectionBasis adapted_basis(const SectionBasis& b);

/// Valuation vectors of an adapted basis, sorted.
std::vector<ValuationVector> valuation_set(const SectionBasis& b);

}  // namespace okbody
