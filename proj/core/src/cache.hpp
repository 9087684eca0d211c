#pragma once

#include "okbody/variety.hpp"

#include <tuple>

namespace okbody {

// Nef-model basis of one class. Member i equals
//   sum over (p, xi, coef) in prov[i] of coef * parent member p * cell(step, xi).
struct NefEntry {
  SectionBasis basis;
  size_t step = 0;
  IVec parent;
  std::vector<std::vector<std::tuple<size_t, size_t, Q>>> prov;
};

struct BottSamelson::Cache {
  std::recursive_mutex mu;
  std::optional<BasisChange> basis_change;
  std::map<IVec, std::shared_ptr<const NefEntry>> nef;
  std::map<IVec, std::shared_ptr<const SectionBasis>> glue;
  std::map<size_t, std::shared_ptr<const std::vector<SectionPoly>>> cells;
  std::map<size_t, IVec> boundary;
};

}  // namespace okbody
