#pragma once

#include <json.hpp>

#include <vector>

#include "cuspedge/jet.hpp"

namespace cuspedge {

using RatRow = std::vector<Rational>;

/// Reduced row echelon form over the rationals, computed fraction-free
/// (integer cross-multiplication with content removal) and then normalized
/// so pivots are 1. Zero rows are dropped. Returns the pivot column of each
/// surviving row, ascending. The result is the canonical RREF of the row
/// space, independent of input order.
std::vector<int> rref(std::vector<RatRow>& rows);

/// Reduce v against normalized RREF rows; returns the residual.
RatRow reduce_against(const std::vector<RatRow>& rows, const std::vector<int>& pivots, RatRow v);

bool is_zero(const RatRow& v);

/// Coordinate frame for the graded pieces of p-component jet tuples with
/// total degrees in [deg_lo, deg_hi]. Columns are ordered by degree, then
/// component, then grlex, so a degree block is contiguous.
class GradedFrame {
public:
    GradedFrame() = default;
    GradedFrame(int components, int deg_lo, int deg_hi);

    int components() const { return ncomp_; }
    int deg_lo() const { return lo_; }
    int deg_hi() const { return hi_; }
    int size() const { return static_cast<int>(cols_.size()); }

    const std::pair<int, Monomial>& col(int i) const { return cols_[static_cast<size_t>(i)]; }
    int degree_of_col(int i) const { return cols_[static_cast<size_t>(i)].second.degree(); }
    /// -1 when the (component, monomial) pair is outside the frame.
    int index_of(int component, const Monomial& m) const;

    /// Coordinates of g within the frame; terms outside [deg_lo, deg_hi] are
    /// silently dropped (the frame is a quotient/sub of the jet space).
    RatRow vector_of(const JetMap& g) const;
    JetMap jetmap_of(const RatRow& v, int trunc_degree) const;

    /// First column index of the given degree block (size() if none).
    int degree_block_begin(int degree) const;

private:
    int ncomp_ = 1;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<std::pair<int, Monomial>> cols_;
    std::map<std::pair<int, std::array<int, 3>>, int> index_;
};

/// All monomials of the exact total degree, in grlex order.
std::vector<Monomial> monomials_of_degree(int degree);

/// Reduced basis of a linear subspace of a graded jet-space window.
/// Rows are canonical RREF coordinates over `frame`; pivot columns ascend.
struct Subspace {
    GradedFrame frame;
    std::vector<RatRow> basis;
    std::vector<int> pivots;

    int dimension() const { return static_cast<int>(basis.size()); }
    bool contains(const RatRow& v) const;
    bool contains(const JetMap& g) const;

    nlohmann::json to_json() const;
};

} // namespace cuspedge
