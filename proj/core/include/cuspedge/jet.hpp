#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspedge/errors.hpp"
#include "cuspedge/monomial.hpp"
#include "cuspedge/rational.hpp"

namespace cuspedge {

/// Hard cap on truncation degrees. Everything in the classification runs at
/// degree <= 8; the cap bounds memory and flags runaway callers.
inline constexpr int kMaxDegree = 14;

/// Truncated polynomial with exact rational coefficients in up to three
/// variables (u,v,w), the carrier for germs, vector-field coefficients and
/// deformations. Invariants: no stored term has degree > truncation degree,
/// no stored coefficient is zero. Values are immutable in spirit: every
/// operation returns a fresh jet.
class Jet {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Jet(int truncation_degree = 0);
    Jet(int truncation_degree, std::initializer_list<std::pair<Monomial, Rational>> terms);

    static Jet zero(int degree) { return Jet(degree); }
    static Jet constant(const Rational& c, int degree);
    /// var(0)=u, var(1)=v, var(2)=w (or x,y in two-variable contexts).
    static Jet variable(int index, int degree);
    static Jet monomial(const Monomial& m, const Rational& c, int degree);

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of m (zero if absent).
    Rational coeff(const Monomial& m) const;
    /// Lowest total degree among stored terms; degree()+1 when zero.
    int order() const;

    Jet operator-() const;
    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Rational& c) const;

    Jet truncated(int new_degree) const;
    /// Homogeneous part of the given total degree, kept at this truncation.
    Jet graded_part(int deg) const;
    /// Terms with total degree >= lo (inclusive).
    Jet tail(int lo) const;

    /// d/d(var index), truncation drops by one (the top coefficient of a
    /// derivative is not determined by this jet).
    Jet derivative(int index) const;

    /// Restriction to the u-axis (v = w = 0); stays a jet in slot 0.
    Jet restrict_to_axis() const;

    Rational eval(const Rational& u, const Rational& v, const Rational& w) const;
    double eval(double u, double v, double w) const;

    /// Exact quotient by a monomial; throws Error if any term is not divisible.
    Jet divided_by_monomial(const Monomial& m) const;

    bool operator==(const Jet& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }
    bool operator!=(const Jet& o) const { return !(*this == o); }

    std::string str(const char* vars = "uvw") const;

    /// Used by builders; strips zeros and enforces the invariants.
    void add_term(const Monomial& m, const Rational& c);

private:
    int degree_;
    TermMap terms_;
};

/// Product of two jets of equal truncation degree, truncated there.
/// Mismatched degrees are a caller bug and throw DegreeMismatchError.
Jet jet_mul(const Jet& a, const Jet& b);

/// Product of the stored polynomials truncated at out_degree. The caller is
/// responsible for reliability bookkeeping (both factors must be exact to
/// out_degree, e.g. one factor an exact monomial multiplier).
Jet mul_trunc(const Jet& a, const Jet& b, int out_degree);

/// a^n truncated at out_degree.
Jet pow_trunc(const Jet& a, int n, int out_degree);

/// Substitute jets for the three variables: result = p(s0, s1, s2) truncated
/// at out_degree. Substituents of positive order keep the result exact to
/// out_degree whenever p is exact to out_degree.
Jet substitute(const Jet& p, const Jet& s0, const Jet& s1, const Jet& s2, int out_degree);

/// Tuple of jets sharing one truncation degree; 1 to 3 components.
class JetMap {
public:
    JetMap() = default;
    explicit JetMap(std::vector<Jet> components);

    int size() const { return static_cast<int>(comps_.size()); }
    int degree() const;
    const Jet& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<Jet>& components() const { return comps_; }

    bool operator==(const JetMap& o) const { return comps_ == o.comps_; }

    std::string str(const char* vars = "uvw") const;

private:
    std::vector<Jet> comps_;
};

/// Composition with the model parametrisation (x,y) -> (x, y^2, y^3):
/// h(x,y) = g(x, y^2, y^3) as a two-variable jet map (slots x=0, y=1),
/// truncated at out_degree.
Jet compose_with_model(const Jet& g, int out_degree);
JetMap compose_with_model(const JetMap& g, int out_degree);

} // namespace cuspedge
