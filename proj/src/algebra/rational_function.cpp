#include "cuboid/algebra/rational_function.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid::algebra {

namespace {

std::mutex policy_lock;
GcdPolicy current_policy;

bool within(const Polynomial& num, const Polynomial& den, const GcdPolicy& p) {
    return den.used_variables().size() <= p.max_vars && den.total_degree() <= p.max_degree &&
           num.size() <= p.max_terms && den.size() <= p.max_terms;
}

bool small_enough(const Polynomial& p, const GcdPolicy& pol) {
    return p.size() <= pol.max_terms && p.total_degree() <= pol.max_degree;
}

Polynomial min_monomial(const Polynomial& a, const Polynomial& b) {
    Polynomial ma = a.monomial_content(), mb = b.monomial_content();
    Universe u = universe_union(ma.universe(), mb.universe());
    Polynomial la = ma.lifted(u), lb = mb.lifted(u);
    std::vector<std::uint32_t> row(u.size());
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        row[i] = std::min(la.exponents(0)[i], lb.exponents(0)[i]);
        any = any || row[i] != 0;
    }
    if (!any) return Polynomial(1L);
    return Polynomial::from_terms(u, row, {Rational(1)});
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_constant()) return a.scaled(Rational(1) / b.leading_coefficient());
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorKind::MalformedInput, "internal: gcd does not divide");
    return *q;
}

}  // namespace

GcdPolicy gcd_policy() {
    std::lock_guard guard(policy_lock);
    return current_policy;
}

void set_gcd_policy(const GcdPolicy& p) {
    std::lock_guard guard(policy_lock);
    current_policy = p;
}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(1L) {
    normalize(Mode::Coprime);
}

RationalFunction::RationalFunction(const Rational& c) : num_(c), den_(1L) {
    normalize(Mode::Coprime);
}

RationalFunction::RationalFunction(long c) : RationalFunction(Rational(c)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    normalize(Mode::Policy);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Mode mode)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize(mode);
}

RationalFunction RationalFunction::var(std::string_view name) {
    return RationalFunction(Polynomial::var(name));
}

RationalFunction RationalFunction::var(VarId v) { return RationalFunction(Polynomial::var(v)); }

void RationalFunction::normalize(Mode mode) {
    if (den_.is_zero()) throw Error(ErrorKind::MalformedInput, "rational function with zero denominator");
    if (num_.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1L);
        reduced_ = true;
        return;
    }
    const Rational cn = num_.content(), cd = den_.content();
    Polynomial n = num_.scaled(Rational(1) / cn);
    Polynomial d = den_.scaled(Rational(1) / cd);
    if (!d.is_constant()) {
        Polynomial m = min_monomial(n, d);
        if (!m.is_constant()) {
            n = n.divided_by_monomial(m);
            d = d.divided_by_monomial(m);
        }
    }
    bool reduced = true;
    if (!d.is_constant() && mode != Mode::Coprime) {
        GcdPolicy pol = gcd_policy();
        bool go = within(n, d, pol);
        if (mode == Mode::Force && d.used_variables().size() <= 4 && d.total_degree() <= 16)
            go = true;
        if (go) {
            Polynomial g = gcd(n, d);
            if (!g.is_constant()) {
                n = exact(n, g);
                d = exact(d, g);
                // Dividing primitive by primitive keeps both primitive.
                Rational fix = d.content();
                n = n.scaled(Rational(1) / fix);
                d = d.scaled(Rational(1) / fix);
            }
        } else {
            reduced = false;
        }
    }
    const Rational k = cn / cd;
    num_ = n.scaled(Rational(k.get_num())).trimmed();
    den_ = d.scaled(Rational(k.get_den())).trimmed();
    reduced_ = reduced;
}

std::optional<Rational> RationalFunction::as_constant() const {
    if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
    return num_.constant_term() / den_.constant_term();
}

Universe RationalFunction::used_variables() const {
    return universe_union(num_.used_variables(), den_.used_variables());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    using Mode = RationalFunction::Mode;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, Mode::Policy);
    if (a.den_.is_constant() || b.den_.is_constant()) {
        Mode m = (a.reduced_ && b.reduced_) ? Mode::Coprime : Mode::Policy;
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, m);
    }
    GcdPolicy pol = gcd_policy();
    if (a.reduced_ && b.reduced_ && small_enough(a.den_, pol) && small_enough(b.den_, pol)) {
        Polynomial g = gcd(a.den_, b.den_);
        if (g.is_constant())
            return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Mode::Coprime);
        Polynomial ad = exact(a.den_, g), bd = exact(b.den_, g);
        Polynomial num = a.num_ * bd + b.num_ * ad;
        Polynomial den = a.den_ * bd;
        if (num.is_zero()) return RationalFunction();
        Polynomial h = gcd(num, g);
        if (!h.is_constant()) {
            num = exact(num, h);
            den = exact(den, h);
        }
        return RationalFunction(std::move(num), std::move(den), Mode::Coprime);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Mode::Policy);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    using Mode = RationalFunction::Mode;
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    GcdPolicy pol = gcd_policy();
    if (a.reduced_ && b.reduced_ && small_enough(a.num_, pol) && small_enough(b.num_, pol) &&
        small_enough(a.den_, pol) && small_enough(b.den_, pol)) {
        Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        if (!bd.is_constant()) {
            Polynomial g = gcd(an, bd);
            if (!g.is_constant()) {
                an = exact(an, g);
                bd = exact(bd, g);
            }
        }
        if (!ad.is_constant()) {
            Polynomial g = gcd(bn, ad);
            if (!g.is_constant()) {
                bn = exact(bn, g);
                ad = exact(ad, g);
            }
        }
        return RationalFunction(an * bn, ad * bd, Mode::Coprime);
    }
    bool coprime = a.den_.is_constant() && b.den_.is_constant();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, coprime ? Mode::Coprime : Mode::Policy);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorKind::Domain, "division by zero rational function");
    return RationalFunction(den_, num_, reduced_ ? Mode::Coprime : Mode::Policy);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return RationalFunction(1L);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                            reduced_ ? Mode::Coprime : Mode::Policy);
}

Rational RationalFunction::evaluate(const std::map<VarId, Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (sgn(d) == 0) throw Error(ErrorKind::Domain, "denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::evaluated(VarId v, const Rational& x) const {
    Polynomial d = den_.evaluated(v, x);
    if (d.is_zero()) throw Error(ErrorKind::Domain, "denominator vanishes identically after evaluation");
    return RationalFunction(num_.evaluated(v, x), d, Mode::Policy);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (reduced_ && o.reduced_) return num_ == o.num_ && den_ == o.den_;
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction normal(const RationalFunction& x) {
    if (x.reduced_) return x;
    return RationalFunction(x.num_, x.den_, RationalFunction::Mode::Force);
}

Polynomial numer(const RationalFunction& x) { return normal(x).numerator(); }

std::pair<Polynomial, Polynomial> substitute_cleared(const Polynomial& p, const Bindings& b) {
    // Bound columns of p, grouped by shared binding denominator.
    struct Group {
        Polynomial den;
        std::vector<std::size_t> cols;
        std::uint32_t degree = 0;
        std::vector<Polynomial> den_powers;
    };
    const Universe& u = p.universe();
    std::vector<Group> groups;
    std::vector<std::size_t> bound_cols;
    std::vector<const RationalFunction*> value(u.size(), nullptr);
    std::vector<std::size_t> group_of(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto it = b.find(u[i]);
        if (it == b.end()) continue;
        value[i] = &it->second;
        bound_cols.push_back(i);
        const Polynomial& d = it->second.denominator();
        std::size_t g = 0;
        while (g < groups.size() && groups[g].den != d) ++g;
        if (g == groups.size()) groups.push_back({d, {}, 0, {}});
        groups[g].cols.push_back(i);
        group_of[i] = g;
    }
    if (bound_cols.empty()) return {p, Polynomial(1L)};

    // Split p by the exponent pattern on bound columns.
    std::map<std::vector<std::uint32_t>, std::pair<std::vector<std::uint32_t>, std::vector<Rational>>> parts;
    for (std::size_t t = 0; t < p.size(); ++t) {
        const std::uint32_t* row = p.exponents(t);
        std::vector<std::uint32_t> key;
        key.reserve(bound_cols.size());
        for (std::size_t c : bound_cols) key.push_back(row[c]);
        auto& [exps, coeffs] = parts[key];
        exps.insert(exps.end(), row, row + u.size());
        for (std::size_t c : bound_cols) exps[exps.size() - u.size() + c] = 0;
        coeffs.push_back(p.coefficient(t));
    }
    for (auto& [key, part] : parts) {
        std::vector<std::uint32_t> per(groups.size(), 0);
        for (std::size_t k = 0; k < bound_cols.size(); ++k) per[group_of[bound_cols[k]]] += key[k];
        for (std::size_t g = 0; g < groups.size(); ++g) groups[g].degree = std::max(groups[g].degree, per[g]);
    }
    for (auto& g : groups) {
        g.den_powers.push_back(Polynomial(1L));
        for (std::uint32_t k = 1; k <= g.degree; ++k) g.den_powers.push_back(g.den_powers.back() * g.den);
    }
    std::map<std::size_t, std::vector<Polynomial>> num_powers;
    auto num_power = [&](std::size_t col, std::uint32_t k) -> const Polynomial& {
        auto& pw = num_powers[col];
        if (pw.empty()) pw.push_back(Polynomial(1L));
        while (pw.size() <= k) pw.push_back(pw.back() * value[col]->numerator());
        return pw[k];
    };

    Polynomial num;
    for (auto& [key, part] : parts) {
        Polynomial term = Polynomial::from_terms(u, std::move(part.first), std::move(part.second));
        std::vector<std::uint32_t> per(groups.size(), 0);
        for (std::size_t k = 0; k < bound_cols.size(); ++k) {
            per[group_of[bound_cols[k]]] += key[k];
            if (key[k] > 0) term = term * num_power(bound_cols[k], key[k]);
        }
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (groups[g].degree > per[g]) term = term * groups[g].den_powers[groups[g].degree - per[g]];
        num += term;
    }
    Polynomial den(1L);
    for (auto& g : groups) den = den * g.den_powers[g.degree];
    return {num, den};
}

RationalFunction substitute(const Polynomial& p, const Bindings& b) {
    auto [num, den] = substitute_cleared(p, b);
    return RationalFunction(num, den);
}

RationalFunction substitute(const RationalFunction& x, const Bindings& b) {
    auto [nn, nd] = substitute_cleared(x.numerator(), b);
    auto [dn, dd] = substitute_cleared(x.denominator(), b);
    if (dn.is_zero()) throw Error(ErrorKind::Domain, "substitution makes the denominator vanish");
    return RationalFunction(nn * dd, nd * dn);
}

}  // namespace cuboid::algebra
