#include "cuspedge/jet.hpp"

#include <sstream>

namespace cuspedge {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Monomial::str(const char* vars) const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        if (e[static_cast<size_t>(i)] == 0) continue;
        if (any) os << "*";
        os << vars[i];
        if (e[static_cast<size_t>(i)] > 1) os << "^" << e[static_cast<size_t>(i)];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

namespace {

void check_degree(int d) {
    if (d < 0) throw Error("negative truncation degree");
    if (d > kMaxDegree)
        throw TruncationCapError("truncation degree " + std::to_string(d) + " exceeds cap " +
                                 std::to_string(kMaxDegree));
}

} // namespace

Jet::Jet(int truncation_degree) : degree_(truncation_degree) { check_degree(degree_); }

Jet::Jet(int truncation_degree, std::initializer_list<std::pair<Monomial, Rational>> terms)
    : degree_(truncation_degree) {
    check_degree(degree_);
    for (const auto& [m, c] : terms) add_term(m, c);
}

Jet Jet::constant(const Rational& c, int degree) {
    Jet j(degree);
    j.add_term(Monomial{}, c);
    return j;
}

Jet Jet::variable(int index, int degree) {
    Monomial m;
    m.e[static_cast<size_t>(index)] = 1;
    return monomial(m, 1, degree);
}

Jet Jet::monomial(const Monomial& m, const Rational& c, int degree) {
    Jet j(degree);
    j.add_term(m, c);
    return j;
}

void Jet::add_term(const Monomial& m, const Rational& c) {
    if (m.degree() > degree_ || c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Jet::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Jet::order() const {
    if (terms_.empty()) return degree_ + 1;
    return terms_.begin()->first.degree(); // grlex: first key has minimal degree
}

Jet Jet::operator-() const {
    Jet r(degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Jet Jet::operator+(const Jet& o) const {
    if (degree_ != o.degree_) throw DegreeMismatchError("jet addition with mismatched degrees");
    Jet r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Jet Jet::operator-(const Jet& o) const {
    if (degree_ != o.degree_) throw DegreeMismatchError("jet subtraction with mismatched degrees");
    Jet r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Jet Jet::operator*(const Rational& c) const {
    Jet r(degree_);
    if (c == 0) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Jet Jet::truncated(int new_degree) const {
    check_degree(new_degree);
    Jet r(new_degree);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= new_degree) r.terms_.emplace(m, c);
    return r;
}

Jet Jet::graded_part(int deg) const {
    Jet r(degree_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
}

Jet Jet::tail(int lo) const {
    Jet r(degree_);
    for (const auto& [m, c] : terms_)
        if (m.degree() >= lo) r.terms_.emplace(m, c);
    return r;
}

Jet Jet::derivative(int index) const {
    Jet r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        const int k = m.e[static_cast<size_t>(index)];
        if (k == 0) continue;
        Monomial d = m;
        d.e[static_cast<size_t>(index)] = k - 1;
        r.add_term(d, c * k);
    }
    return r;
}

Jet Jet::restrict_to_axis() const {
    Jet r(degree_);
    for (const auto& [m, c] : terms_)
        if (m.e[1] == 0 && m.e[2] == 0) r.terms_.emplace(m, c);
    return r;
}

Rational Jet::eval(const Rational& u, const Rational& v, const Rational& w) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < m.e[0]; ++i) t *= u;
        for (int i = 0; i < m.e[1]; ++i) t *= v;
        for (int i = 0; i < m.e[2]; ++i) t *= w;
        acc += t;
    }
    return acc;
}

double Jet::eval(double u, double v, double w) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (int i = 0; i < m.e[0]; ++i) t *= u;
        for (int i = 0; i < m.e[1]; ++i) t *= v;
        for (int i = 0; i < m.e[2]; ++i) t *= w;
        acc += t;
    }
    return acc;
}

Jet Jet::divided_by_monomial(const Monomial& m) const {
    Jet r(degree_);
    for (const auto& [t, c] : terms_) {
        if (!m.divides(t)) throw Error("jet not divisible by " + m.str());
        r.terms_.emplace(t / m, c);
    }
    return r;
}

std::string Jet::str(const char* vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (a != 1 || m.degree() == 0) {
            os << rational_to_string(a);
            if (m.degree() > 0) os << "*";
        }
        if (m.degree() > 0) os << m.str(vars);
    }
    return os.str();
}

Jet jet_mul(const Jet& a, const Jet& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatchError("jet_mul with mismatched truncation degrees");
    return mul_trunc(a, b, a.degree());
}

Jet mul_trunc(const Jet& a, const Jet& b, int out_degree) {
    check_degree(out_degree);
    Jet r(out_degree);
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.degree() > out_degree) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.degree() + mb.degree() > out_degree) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Jet pow_trunc(const Jet& a, int n, int out_degree) {
    Jet r = Jet::constant(1, out_degree);
    for (int i = 0; i < n; ++i) r = mul_trunc(r, a, out_degree);
    return r;
}

Jet substitute(const Jet& p, const Jet& s0, const Jet& s1, const Jet& s2, int out_degree) {
    check_degree(out_degree);
    // Memoized powers of each substituent.
    std::vector<Jet> p0{Jet::constant(1, out_degree)};
    std::vector<Jet> p1{Jet::constant(1, out_degree)};
    std::vector<Jet> p2{Jet::constant(1, out_degree)};
    auto power = [out_degree](std::vector<Jet>& cache, const Jet& base, int n) -> const Jet& {
        while (static_cast<int>(cache.size()) <= n)
            cache.push_back(mul_trunc(cache.back(), base, out_degree));
        return cache[static_cast<size_t>(n)];
    };
    Jet r(out_degree);
    for (const auto& [m, c] : p.terms()) {
        Jet t = Jet::constant(c, out_degree);
        if (m.e[0] > 0) t = mul_trunc(t, power(p0, s0, m.e[0]), out_degree);
        if (m.e[1] > 0) t = mul_trunc(t, power(p1, s1, m.e[1]), out_degree);
        if (m.e[2] > 0) t = mul_trunc(t, power(p2, s2, m.e[2]), out_degree);
        r = r + t;
    }
    return r;
}

JetMap::JetMap(std::vector<Jet> components) : comps_(std::move(components)) {
    if (comps_.empty() || comps_.size() > 3) throw Error("JetMap needs 1 to 3 components");
    for (const auto& c : comps_)
        if (c.degree() != comps_.front().degree())
            throw DegreeMismatchError("JetMap components with mismatched degrees");
}

int JetMap::degree() const { return comps_.empty() ? 0 : comps_.front().degree(); }

std::string JetMap::str(const char* vars) const {
    std::string s = "(";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += ", ";
        s += comps_[i].str(vars);
    }
    return s + ")";
}

Jet compose_with_model(const Jet& g, int out_degree) {
    const Jet x = Jet::variable(0, out_degree);
    const Jet y = Jet::variable(1, out_degree);
    return substitute(g, x, mul_trunc(y, y, out_degree),
                      mul_trunc(mul_trunc(y, y, out_degree), y, out_degree), out_degree);
}

JetMap compose_with_model(const JetMap& g, int out_degree) {
    std::vector<Jet> comps;
    comps.reserve(static_cast<size_t>(g.size()));
    for (const auto& c : g.components()) comps.push_back(compose_with_model(c, out_degree));
    return JetMap(std::move(comps));
}

} // namespace cuspedge
