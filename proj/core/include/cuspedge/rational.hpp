#pragma once

#include <gmpxx.h>

#include <string>

#include "cuspedge/errors.hpp"

namespace cuspedge {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator) through arithmetic, which is exactly the invariant
/// the symbolic modules rely on.
using Rational = mpq_class;

/// Parse "num/den" or "num" (optional sign, arbitrary precision).
/// Canonicalizes, so "4/6" and "2/-4" are accepted.
Rational rational_from_string(const std::string& s);

/// Canonical "num/den" form; integers print without the "/1".
std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

} // namespace cuspedge
