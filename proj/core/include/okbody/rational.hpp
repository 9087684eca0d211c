#pragma once

// Exact scalar types shared by every module. All arithmetic in the engine is
// over Z or Q; there is no floating point anywhere in the kernel.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace okbody {

using Q = mpq_class;
using Z = mpz_class;

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Z>;
using IVec = std::vector<long long>;

std::string to_string(const Q& q);
std::string to_string(const Z& z);

/// Parses "p", "p/q" or "-p/q". Throws Error(InvalidInput) on malformed text.
Q parse_rational(std::string_view text);

/// Least common multiple of the denominators of v (1 for an empty vector).
Z common_denominator(const QVec& v);

/// Scales a rational vector to the primitive integer vector on the same ray.
/// The zero vector maps to the zero vector.
ZVec primitive(const QVec& v);
ZVec primitive(const ZVec& v);

QVec to_q(const ZVec& v);
QVec to_q(const IVec& v);
ZVec to_z(const IVec& v);

/// Converts to long long, throwing if the value does not fit.
long long to_ll(const Z& z);
IVec to_ll(const ZVec& v);

Q dot(const QVec& a, const QVec& b);
Z dot(const ZVec& a, const ZVec& b);

Q factorial(unsigned n);

/// Integer floor / ceiling of a rational number.
Z floor(const Q& q);
Z ceil(const Q& q);

}  // namespace okbody
