#include "okbody/valuation.hpp"

#include "okbody/errors.hpp"
#include "poly_echelon.hpp"

#include <algorithm>

namespace okbody {

ValuationVector valuation(const Poly& s) {
  require(!s.is_zero(), ErrorCode::InvalidInput, "valuation of the zero section");
  return s.lead();
}

ValuationVector valuation(const SectionPoly& s) { return valuation(s.poly); }

SectionBasis adapted_basis(const SectionBasis& b) {
  PolyEchelon ech;
  std::map<Exponent, const SectionPoly*> origin;
  for (const auto& s : b.members) {
    const size_t before = ech.rank();
    ech.insert(s.poly);
    if (ech.rank() == before) continue;
    for (const auto& [lead, row] : ech.rows())
      if (!origin.count(lead)) origin[lead] = &s;
  }
  SectionBasis out;
  out.word = b.word;
  out.canonical = b.canonical;
  for (const auto& [lead, row] : ech.rows())
    out.members.push_back(SectionPoly{row.poly, origin[lead]->multidegree, origin[lead]->weight});
  return out;
}

std::vector<ValuationVector> valuation_set(const SectionBasis& b) {
  const SectionBasis a = adapted_basis(b);
  std::vector<ValuationVector> out;
  for (const auto& s : a.members) out.push_back(valuation(s));
  return out;
}

}  // namespace okbody
