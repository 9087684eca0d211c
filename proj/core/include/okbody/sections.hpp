#pragma once

// Global sections of line bundles on Z_w as polynomials on the big cell.
//
// A section of the canonical class m is a function F on P_w with
//   F(p_1 b_1, b_1^{-1} p_2 b_2, ...) = prod_k omega_{i_k}(b_k)^{m_k} F(p),
// recorded by its restriction P(t) = F(exp(t_1 f_{i_1}), ..., exp(t_n f_{i_n})).
// Weights are those of the left torus action F(tau p) = mu(tau) F(p).

#include "okbody/variety.hpp"

namespace okbody {

/// <xi, exp(t_1 f_{i_1}) ... exp(t_k f_{i_k}) v_{omega_{i_k}}> with xi the dual of
/// basis vector `xi` of V_{omega_{i_k}} (k is 0-based). May be the zero polynomial.
SectionPoly cell_polynomial(const BottSamelson& bs, size_t k, size_t xi);

/// Basis from products of cell polynomials, one weight space at a time.
/// Throws NotNef for non-nef input and SpanDeficiency if products fall short.
SectionBasis section_basis_nef(const BottSamelson& bs, const DivisorClass& m);

/// Basis from the chart-gluing conditions inside a degree box (independent oracle).
SectionBasis section_basis_glue(const BottSamelson& bs, const DivisorClass& m);

/// Nef model when it applies, gluing otherwise (and on SpanDeficiency).
SectionBasis section_basis(const BottSamelson& bs, const DivisorClass& m);

/// Dimension of H^0 via the gluing oracle.
long long section_dimension(const BottSamelson& bs, const DivisorClass& m);

/// The section t_j whose zero locus is the boundary divisor Z_{w(j)} (j 0-based).
SectionPoly boundary_section(const BottSamelson& bs, size_t j);

/// Canonical coordinates of the class of a big-cell polynomial with no zeros
/// or poles along the boundary charts except those forced by P itself: solves
/// sum_k m_k ord_l(c_k) + ord_l(P) = 0 for every chart l.
IVec divisor_class_of(const BottSamelson& bs, const Poly& p);

struct PeelResult {
  DivisorClass fixed;         // effective coordinates
  long long movable_dim = 0;  // dim H^0(kD - N) = dim H^0(kD)
  bool residual_common_factor = false;
};

/// Peels boundary divisors off kD while the section dimension stays put.
PeelResult fixed_part_peel(const BottSamelson& bs, const DivisorClass& d, long long k);

/// Evaluates member `index` of the nef basis of class m at a point of P_w.
Q evaluate_nef_member(const BottSamelson& bs, const IVec& canonical, size_t index, const PwPoint& p);

/// Values of all nef basis members of class m at p.
QVec evaluate_nef_basis(const BottSamelson& bs, const IVec& canonical, const PwPoint& p);

/// Value at a point of P_w of a section of a nef class, via its expansion in the nef basis.
Q section_value(const BottSamelson& bs, const SectionPoly& s, const PwPoint& p);

/// Character of a section basis (weight multiset).
Character basis_character(const SectionBasis& b);

/// Rank of the union of two bases as polynomial sets.
size_t joint_rank(const SectionBasis& a, const SectionBasis& b);

}  // namespace okbody
