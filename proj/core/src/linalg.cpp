#include "cuspedge/linalg.hpp"

#include <algorithm>

namespace cuspedge {

namespace {

// Divide an integral row by the gcd of its numerators.
void primitivize(RatRow& row) {
    mpz_class g(0);
    for (const auto& q : row) {
        if (q == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& q : row)
        if (q != 0) q /= Rational(g);
}

// Clear denominators, then divide by content.
void make_primitive_integral(RatRow& row) {
    mpz_class l(1);
    for (const auto& q : row)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    if (l != 1) {
        const Rational f(l);
        for (auto& q : row)
            if (q != 0) q *= f;
    }
    primitivize(row);
}

} // namespace

std::vector<int> rref(std::vector<RatRow>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows.front().size();
    for (auto& r : rows) make_primitive_integral(r);

    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const RatRow& p = rows[rank];
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational a = p[col];
            const Rational b = rows[i][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] = rows[i][j] * a - p[j] * b;
            primitivize(rows[i]);
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);

    // Back-substitute and normalize pivots to 1.
    for (size_t r = rank; r-- > 0;) {
        const int c = pivots[r];
        const Rational inv = 1 / rows[r][static_cast<size_t>(c)];
        for (size_t j = static_cast<size_t>(c); j < ncols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            const Rational f = rows[i][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (size_t j = static_cast<size_t>(c); j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
    }
    return pivots;
}

RatRow reduce_against(const std::vector<RatRow>& rows, const std::vector<int>& pivots, RatRow v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const size_t c = static_cast<size_t>(pivots[r]);
        if (v[c] == 0) continue;
        const Rational f = v[c];
        const RatRow& row = rows[r];
        for (size_t j = c; j < v.size(); ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    return v;
}

bool is_zero(const RatRow& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back(Monomial{i, j, degree - i - j});
    // The loop order above is exactly grlex within the degree.
    return out;
}

GradedFrame::GradedFrame(int components, int deg_lo, int deg_hi)
    : ncomp_(components), lo_(deg_lo), hi_(deg_hi) {
    if (components < 1 || components > 3) throw Error("frame needs 1 to 3 components");
    if (deg_lo < 0 || deg_hi < deg_lo) throw Error("bad frame degree window");
    for (int d = lo_; d <= hi_; ++d)
        for (int c = 0; c < ncomp_; ++c)
            for (const auto& m : monomials_of_degree(d)) {
                index_[{c, m.e}] = static_cast<int>(cols_.size());
                cols_.emplace_back(c, m);
            }
}

int GradedFrame::index_of(int component, const Monomial& m) const {
    auto it = index_.find({component, m.e});
    return it == index_.end() ? -1 : it->second;
}

RatRow GradedFrame::vector_of(const JetMap& g) const {
    RatRow v(static_cast<size_t>(size()), Rational(0));
    for (int c = 0; c < g.size() && c < ncomp_; ++c)
        for (const auto& [m, q] : g[c].terms()) {
            const int idx = index_of(c, m);
            if (idx >= 0) v[static_cast<size_t>(idx)] = q;
        }
    return v;
}

JetMap GradedFrame::jetmap_of(const RatRow& v, int trunc_degree) const {
    std::vector<Jet> comps(static_cast<size_t>(ncomp_), Jet(trunc_degree));
    for (int i = 0; i < size(); ++i) {
        if (v[static_cast<size_t>(i)] == 0) continue;
        const auto& [c, m] = cols_[static_cast<size_t>(i)];
        comps[static_cast<size_t>(c)].add_term(m, v[static_cast<size_t>(i)]);
    }
    return JetMap(std::move(comps));
}

int GradedFrame::degree_block_begin(int degree) const {
    for (int i = 0; i < size(); ++i)
        if (degree_of_col(i) >= degree) return i;
    return size();
}

bool Subspace::contains(const RatRow& v) const {
    return is_zero(reduce_against(basis, pivots, v));
}

bool Subspace::contains(const JetMap& g) const { return contains(frame.vector_of(g)); }

nlohmann::json Subspace::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : basis) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < r.size(); ++j) {
            if (r[j] == 0) continue;
            const auto& [c, m] = frame.col(static_cast<int>(j));
            row.push_back({{"component", c},
                           {"m", {m.e[0], m.e[1], m.e[2]}},
                           {"c", rational_to_string(r[j])}});
        }
        rows.push_back(row);
    }
    nlohmann::json pcols = nlohmann::json::array();
    for (int p : pivots) {
        const auto& [c, m] = frame.col(p);
        pcols.push_back({{"component", c}, {"m", {m.e[0], m.e[1], m.e[2]}}});
    }
    return {{"window", {frame.deg_lo(), frame.deg_hi()}},
            {"components", frame.components()},
            {"dimension", dimension()},
            {"pivots", pcols},
            {"basis", rows}};
}

} // namespace cuspedge
