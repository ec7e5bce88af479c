#pragma once

#include <array>

#include "cuspedge/linalg.hpp"
#include "cuspedge/vector_field.hpp"

namespace cuspedge {

/// Which group-orbit tangent space gets assembled.
///   R1X: fields with vanishing 1-jet applied to g (M^2 xi1 + M {xi2, xi3}).
///   RX : all tangent fields applied to g (equals the extended version).
///   XA1: R1X plus pulled-back target monomials of degree >= 1, R-span.
///   XA : RX plus the same target columns.
///   XK : RX plus the E3-module generated by the pulled-back components.
enum class GroupTag { R1X, RX, XA1, XA, XK };

const char* group_name(GroupTag g);

/// Generator elements of the tangent space, each truncated at out_degree.
/// extended_targets additionally includes the degree-0 target directions
/// (constants e_i), turning XA into the extended tangent space used for
/// A_e-codimension; it has no effect on the source part.
std::vector<JetMap> tangent_generators(const JetMap& g, GroupTag group, int out_degree,
                                       bool extended_targets = false);

/// Subspace of the graded window [dmin, dmax] cut out by the given rows:
/// span(rows) intersected with the pure-window part, as a canonical reduced
/// basis. Rows must be truncated at dmax (higher terms already dropped).
Subspace window_subspace(const std::vector<JetMap>& rows, int components, int dmin, int dmax);

/// Tangent space to the group orbit of g on a degree window.
/// Throws InsufficientTruncationError unless g.degree() >= dmax + 1.
Subspace tangent_space(const JetMap& g, GroupTag group, int dmin, int dmax);

/// Full-frame reduced span of the rows over [deg_lo, dmax] (constants
/// included when deg_lo = 0); used for quotient dimensions, membership and
/// coverage tests rather than window intersections.
Subspace full_span(const std::vector<JetMap>& rows, int components, int deg_lo, int dmax);

} // namespace cuspedge
