#pragma once

// Pic(Z_w) with its effective basis {Z_{w(j)}} and canonical basis {O_k(1)}.

#include "okbody/variety.hpp"

namespace okbody {

DivisorClass to_canonical(const BottSamelson& bs, const DivisorClass& d);
DivisorClass to_effective(const BottSamelson& bs, const DivisorClass& d);

bool is_effective(const BottSamelson& bs, const DivisorClass& d);
bool is_nef(const BottSamelson& bs, const DivisorClass& d);

/// Columns are the canonical classes of the boundary sections. Every probe m
/// with |m_i| <= probe_radius and nef image is cross-checked: the character
/// dimension of M m must equal the gluing dimension. Throws VerificationFailure.
BasisChange compute_basis_change(const BottSamelson& bs, int probe_radius);

/// dim H^0(O(kD)) for k = 0..kmax via characters (D nef).
std::vector<long long> hilbert_values(const BottSamelson& bs, const DivisorClass& d, long long kmax);

/// Top self-intersection of a nef class by interpolation of k -> dim H^0(kD).
Q volume(const BottSamelson& bs, const DivisorClass& d);

/// The class whose section character equals the Demazure character of lambda.
DivisorClass pullback_from_flag_variety(const BottSamelson& bs, const Weight& lambda);

}  // namespace okbody
