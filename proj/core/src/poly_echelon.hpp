#pragma once

#include "okbody/polynomial.hpp"

#include <map>
#include <utility>

namespace okbody {

using Prov = std::map<std::pair<size_t, size_t>, Q>;

// Echelon basis of polynomials keyed by the lex-minimal monomial, optionally
// tracking how each row was combined from candidates.
class PolyEchelon {
 public:
  struct Row {
    Poly poly;
    Prov prov;
  };

  bool insert(Poly p, Prov prov = {}) {
    while (!p.is_zero()) {
      auto it = rows_.find(p.lead());
      if (it == rows_.end()) {
        const Q inv = 1 / p.lead_coeff();
        p *= inv;
        for (auto& [k, v] : prov) v *= inv;
        const Exponent lead = p.lead();
        rows_.emplace(lead, Row{std::move(p), std::move(prov)});
        return true;
      }
      const Q c = p.lead_coeff();
      p -= it->second.poly * c;
      for (const auto& [k, v] : it->second.prov) {
        Q& slot = prov[k];
        slot -= c * v;
        if (slot == 0) prov.erase(k);
      }
    }
    return false;
  }
  size_t rank() const { return rows_.size(); }
  const std::map<Exponent, Row>& rows() const { return rows_; }

 private:
  std::map<Exponent, Row> rows_;
};

}  // namespace okbody
