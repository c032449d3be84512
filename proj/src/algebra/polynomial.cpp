#include "cuboid/algebra/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cuboid/error.hpp"
#include "packing.hpp"

namespace cuboid::algebra {

using detail::KeyHash;
using detail::Packer;
using detail::u128;

// Raw access for the free functions in this file.
class PolynomialBuilder {
public:
    static Polynomial make(Universe u, std::vector<std::uint32_t> exps, std::vector<Rational> coeffs) {
        Polynomial p;
        p.universe_ = std::move(u);
        p.exps_ = std::move(exps);
        p.coeffs_ = std::move(coeffs);
        return p;
    }
    static const std::vector<std::uint32_t>& exps(const Polynomial& p) { return p.exps_; }
    static const std::vector<Rational>& coeffs(const Polynomial& p) { return p.coeffs_; }
};

namespace {

int compare_rows(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::size_t index_of(const Universe& u, VarId v) {
    auto it = std::lower_bound(u.begin(), u.end(), v);
    if (it == u.end() || *it != v) return u.size();
    return static_cast<std::size_t>(it - u.begin());
}

// Sorted terms from an unordered (key, coefficient) list.
Polynomial collect(const Universe& u, const Packer& pk,
                   std::vector<std::pair<u128, Rational>>& terms) {
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const auto& t) { return sgn(t.second) == 0; }),
                terms.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::uint32_t> exps(terms.size() * u.size());
    std::vector<Rational> coeffs;
    coeffs.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        pk.decode(terms[i].first, exps.data() + i * u.size());
        coeffs.push_back(std::move(terms[i].second));
    }
    return PolynomialBuilder::make(u, std::move(exps), std::move(coeffs));
}

[[noreturn]] void packing_overflow() {
    throw Error(ErrorKind::UnsupportedDegree, "polynomial exponents exceed the supported range");
}

}  // namespace

Universe universe_union(const Universe& a, const Universe& b) {
    if (a == b) return a;
    Universe out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::var(VarId v, std::uint32_t e) {
    if (e == 0) return Polynomial(1L);
    return PolynomialBuilder::make({v}, {e}, {Rational(1)});
}

Polynomial Polynomial::var(std::string_view name, std::uint32_t e) {
    return var(variable(name), e);
}

Polynomial Polynomial::monomial(const Rational& c, const PowerList& powers) {
    if (sgn(c) == 0) return {};
    Universe u;
    for (auto& [v, e] : powers)
        if (e > 0) u.push_back(v);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<std::uint32_t> row(u.size(), 0);
    for (auto& [v, e] : powers)
        if (e > 0) row[index_of(u, v)] += e;
    return PolynomialBuilder::make(std::move(u), std::move(row), {c});
}

Polynomial Polynomial::from_terms(Universe u, std::vector<std::uint32_t> exps,
                                  std::vector<Rational> coeffs) {
    if (!std::is_sorted(u.begin(), u.end()) ||
        std::adjacent_find(u.begin(), u.end()) != u.end())
        throw Error(ErrorKind::MalformedInput, "universe must be strictly ascending");
    const std::size_t n = u.size();
    if (exps.size() != coeffs.size() * n)
        throw Error(ErrorKind::MalformedInput, "exponent rows do not match coefficients");
    std::vector<std::size_t> order(coeffs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_rows(exps.data() + a * n, exps.data() + b * n, n) > 0;
    });
    std::vector<std::uint32_t> out_exps;
    std::vector<Rational> out_coeffs;
    for (std::size_t k = 0; k < order.size();) {
        std::size_t i = order[k];
        Rational c = coeffs[i];
        std::size_t j = k + 1;
        while (j < order.size() &&
               compare_rows(exps.data() + i * n, exps.data() + order[j] * n, n) == 0) {
            c += coeffs[order[j]];
            ++j;
        }
        if (sgn(c) != 0) {
            out_exps.insert(out_exps.end(), exps.begin() + static_cast<long>(i * n),
                            exps.begin() + static_cast<long>((i + 1) * n));
            out_coeffs.push_back(std::move(c));
        }
        k = j;
    }
    return PolynomialBuilder::make(std::move(u), std::move(out_exps), std::move(out_coeffs));
}

bool Polynomial::is_constant() const {
    if (coeffs_.size() > 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint32_t Polynomial::term_degree(std::size_t term) const {
    const std::uint32_t* row = exponents(term);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < universe_.size(); ++i) d += row[i];
    return d;
}

Rational Polynomial::coefficient_of(const PowerList& powers) const {
    std::vector<std::uint32_t> row(universe_.size(), 0);
    for (auto& [v, e] : powers) {
        if (e == 0) continue;
        std::size_t i = index_of(universe_, v);
        if (i == universe_.size()) return 0;
        row[i] += e;
    }
    for (std::size_t t = 0; t < size(); ++t)
        if (std::equal(row.begin(), row.end(), exponents(t))) return coeffs_[t];
    return 0;
}

Rational Polynomial::constant_term() const {
    if (is_zero()) return 0;
    std::size_t last = size() - 1;
    return term_degree(last) == 0 ? coeffs_[last] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
    return is_zero() ? Rational(0) : coeffs_.front();
}

std::uint32_t Polynomial::degree(VarId v) const {
    std::size_t i = index_of(universe_, v);
    if (i == universe_.size()) return 0;
    std::uint32_t d = 0;
    for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exponents(t)[i]);
    return d;
}

std::uint32_t Polynomial::total_degree() const {
    // Terms are sorted by total degree first.
    return is_zero() ? 0 : term_degree(0);
}

Universe Polynomial::used_variables() const {
    Universe out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        for (std::size_t t = 0; t < size(); ++t) {
            if (exponents(t)[i] != 0) {
                out.push_back(universe_[i]);
                break;
            }
        }
    }
    return out;
}

Polynomial Polynomial::lifted(const Universe& u) const {
    if (u == universe_) return *this;
    std::vector<std::size_t> where(universe_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        where[i] = index_of(u, universe_[i]);
        if (where[i] == u.size())
            throw Error(ErrorKind::MalformedInput, "lift target is not a superset universe");
    }
    std::vector<std::uint32_t> exps(size() * u.size(), 0);
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t i = 0; i < universe_.size(); ++i)
            exps[t * u.size() + where[i]] = exponents(t)[i];
    return PolynomialBuilder::make(u, std::move(exps), coeffs_);
}

Polynomial Polynomial::trimmed() const {
    Universe used = used_variables();
    if (used == universe_) return *this;
    std::vector<std::size_t> cols;
    for (VarId v : used) cols.push_back(index_of(universe_, v));
    std::vector<std::uint32_t> exps(size() * used.size());
    for (std::size_t t = 0; t < size(); ++t)
        for (std::size_t i = 0; i < cols.size(); ++i)
            exps[t * used.size() + i] = exponents(t)[cols[i]];
    return PolynomialBuilder::make(std::move(used), std::move(exps), coeffs_);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

Polynomial merge(const Polynomial& a0, const Polynomial& b0, bool subtract) {
    Universe u = universe_union(a0.universe(), b0.universe());
    Polynomial a = a0.lifted(u), b = b0.lifted(u);
    const std::size_t n = u.size();
    const auto& ae = PolynomialBuilder::exps(a);
    const auto& be = PolynomialBuilder::exps(b);
    const auto& ac = PolynomialBuilder::coeffs(a);
    const auto& bc = PolynomialBuilder::coeffs(b);
    std::vector<std::uint32_t> exps;
    std::vector<Rational> coeffs;
    exps.reserve(ae.size() + be.size());
    coeffs.reserve(ac.size() + bc.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const std::uint32_t* row, Rational c) {
        exps.insert(exps.end(), row, row + n);
        coeffs.push_back(std::move(c));
    };
    while (i < ac.size() || j < bc.size()) {
        int cmp;
        if (i == ac.size()) cmp = -1;
        else if (j == bc.size()) cmp = 1;
        else cmp = compare_rows(ae.data() + i * n, be.data() + j * n, n);
        if (cmp > 0) {
            push(ae.data() + i * n, ac[i]);
            ++i;
        } else if (cmp < 0) {
            push(be.data() + j * n, subtract ? Rational(-bc[j]) : bc[j]);
            ++j;
        } else {
            Rational c = subtract ? Rational(ac[i] - bc[j]) : Rational(ac[i] + bc[j]);
            if (sgn(c) != 0) push(ae.data() + i * n, std::move(c));
            ++i;
            ++j;
        }
    }
    return PolynomialBuilder::make(std::move(u), std::move(exps), std::move(coeffs));
}

Polynomial times_monomial(const Polynomial& p, const std::uint32_t* row, const Rational& c) {
    // p and row share p's universe; multiplying by a monomial keeps the order.
    const std::size_t n = p.nvars();
    std::vector<std::uint32_t> exps = PolynomialBuilder::exps(p);
    std::vector<Rational> coeffs = PolynomialBuilder::coeffs(p);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) exps[t * n + i] += row[i];
        coeffs[t] *= c;
    }
    return PolynomialBuilder::make(p.universe(), std::move(exps), std::move(coeffs));
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    return *this = merge(*this, o, false);
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    return *this = merge(*this, o, true);
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a0, const Polynomial& b0) {
    if (a0.is_zero() || b0.is_zero()) return {};
    Universe u = universe_union(a0.universe(), b0.universe());
    Polynomial a = a0.lifted(u), b = b0.lifted(u);
    if (b.size() == 1) return times_monomial(a, b.exponents(0), b.coefficient(0));
    if (a.size() == 1) return times_monomial(b, a.exponents(0), a.coefficient(0));
    const std::size_t n = u.size();
    std::vector<std::uint32_t> max_exp(n);
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = a.degree(u[i]) + b.degree(u[i]);
    Packer pk(max_exp, std::uint64_t(a.total_degree()) + b.total_degree());
    if (!pk.ok()) packing_overflow();
    std::vector<u128> ka(a.size()), kb(b.size());
    for (std::size_t t = 0; t < a.size(); ++t) ka[t] = pk.encode(a.exponents(t));
    for (std::size_t t = 0; t < b.size(); ++t) kb[t] = pk.encode(b.exponents(t));
    std::unordered_map<u128, Rational, KeyHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    mpq_class tmp;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpq_srcptr ca = a.coefficient(i).get_mpq_t();
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), ca, b.coefficient(j).get_mpq_t());
            auto& slot = acc[ka[i] + kb[j]];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    std::vector<std::pair<u128, Rational>> terms;
    terms.reserve(acc.size());
    for (auto& [k, c] : acc) terms.emplace_back(k, std::move(c));
    return collect(u, pk, terms);
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0) return {};
    Polynomial out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1L), base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(VarId v) const {
    std::size_t iv = index_of(universe_, v);
    if (iv == universe_.size()) return {*this};
    const std::size_t n = universe_.size();
    std::uint32_t d = degree(v);
    std::vector<std::vector<std::uint32_t>> exps(d + 1);
    std::vector<std::vector<Rational>> coeffs(d + 1);
    for (std::size_t t = 0; t < size(); ++t) {
        std::uint32_t k = exponents(t)[iv];
        auto& row = exps[k];
        row.insert(row.end(), exponents(t), exponents(t) + n);
        row[row.size() - n + iv] = 0;
        coeffs[k].push_back(coeffs_[t]);
    }
    // Terms sharing the exponent of v keep their relative order.
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k)
        out.push_back(PolynomialBuilder::make(universe_, std::move(exps[k]), std::move(coeffs[k])));
    return out;
}

Polynomial Polynomial::leading_coefficient_in(VarId v) const {
    if (is_zero()) return {};
    return coefficients_in(v).back();
}

Polynomial Polynomial::evaluated(VarId v, const Rational& x) const {
    std::size_t iv = index_of(universe_, v);
    if (iv == universe_.size()) return *this;
    std::vector<std::uint32_t> exps = exps_;
    std::vector<Rational> coeffs = coeffs_;
    const std::size_t n = universe_.size();
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        std::uint32_t& e = exps[t * n + iv];
        if (e > 0) coeffs[t] *= algebra::pow(x, static_cast<int>(e));
        e = 0;
    }
    return from_terms(universe_, std::move(exps), std::move(coeffs));
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& point) const {
    const std::size_t n = universe_.size();
    std::vector<std::vector<Rational>> powers(n);
    std::vector<const Rational*> value(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = point.find(universe_[i]);
        if (it != point.end()) value[i] = &it->second;
    }
    Rational total = 0;
    for (std::size_t t = 0; t < size(); ++t) {
        Rational term = coeffs_[t];
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t e = exponents(t)[i];
            if (e == 0) continue;
            if (!value[i])
                throw Error(ErrorKind::MalformedInput,
                            "no value for variable " + variable_name(universe_[i]));
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (pw.size() <= e) pw.push_back(pw.back() * *value[i]);
            term *= pw[e];
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substituted(VarId v, const Polynomial& q) const {
    auto cs = coefficients_in(v);
    Polynomial out;
    for (std::size_t k = cs.size(); k-- > 0;) out = out * q + cs[k];
    return out;
}

Rational Polynomial::content() const {
    if (is_zero()) return 0;
    Integer g = 0, l = 1;
    for (auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(g, l);
    out.canonicalize();
    return sgn(coeffs_.front()) < 0 ? Rational(-out) : out;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Rational c = content();
    if (c == 1) return *this;
    return scaled(Rational(1) / c);
}

Polynomial Polynomial::monomial_content() const {
    const std::size_t n = universe_.size();
    if (is_zero()) return Polynomial(1L);
    std::vector<std::uint32_t> row(exponents(0), exponents(0) + n);
    for (std::size_t t = 1; t < size(); ++t)
        for (std::size_t i = 0; i < n; ++i) row[i] = std::min(row[i], exponents(t)[i]);
    return PolynomialBuilder::make(universe_, std::move(row), {Rational(1)});
}

Polynomial Polynomial::divided_by_monomial(const Polynomial& m) const {
    if (m.size() != 1) throw Error(ErrorKind::MalformedInput, "divisor is not a monomial");
    Universe u = universe_union(universe_, m.universe_);
    Polynomial a = lifted(u), b = m.lifted(u);
    const std::size_t n = u.size();
    Rational inv = Rational(1) / b.coeffs_[0];
    for (std::size_t t = 0; t < a.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a.exps_[t * n + i] < b.exps_[i])
                throw Error(ErrorKind::MalformedInput, "monomial division is not exact");
            a.exps_[t * n + i] -= b.exps_[i];
        }
        a.coeffs_[t] *= inv;
    }
    return a;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (universe_ == o.universe_) return exps_ == o.exps_ && coeffs_ == o.coeffs_;
    if (size() != o.size()) return false;
    Polynomial a = trimmed(), b = o.trimmed();
    return a.universe_ == b.universe_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t t = 0; t < size(); ++t) {
        Rational c = coeffs_[t];
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (t == 0) out << (negative ? "-" : "");
        else out << (negative ? " - " : " + ");
        bool constant = term_degree(t) == 0;
        bool wrote = false;
        if (c != 1 || constant) {
            out << algebra::to_string(c);
            wrote = true;
        }
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            std::uint32_t e = exponents(t)[i];
            if (e == 0) continue;
            if (wrote) out << '*';
            out << variable_name(universe_[i]);
            if (e > 1) out << '^' << e;
            wrote = true;
        }
    }
    return out.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& a0, const Polynomial& b0) {
    if (b0.is_zero()) throw Error(ErrorKind::MalformedInput, "division by the zero polynomial");
    if (a0.is_zero()) return Polynomial();
    Universe u = universe_union(a0.universe(), b0.universe());
    Polynomial a = a0.lifted(u), b = b0.lifted(u);
    const std::size_t n = u.size();
    if (b.total_degree() > a.total_degree()) return std::nullopt;
    for (VarId v : u)
        if (b.degree(v) > a.degree(v)) return std::nullopt;
    if (b.size() == 1) {
        for (std::size_t t = 0; t < a.size(); ++t)
            for (std::size_t i = 0; i < n; ++i)
                if (a.exponents(t)[i] < b.exponents(0)[i]) return std::nullopt;
        return a.divided_by_monomial(b);
    }
    const std::uint32_t top = a.total_degree();
    Packer pk(std::vector<std::uint32_t>(n, top), top);
    if (!pk.ok()) packing_overflow();
    std::map<u128, Rational, std::greater<>> rem;
    for (std::size_t t = 0; t < a.size(); ++t) rem.emplace(pk.encode(a.exponents(t)), a.coefficient(t));
    std::vector<u128> kb(b.size());
    for (std::size_t t = 0; t < b.size(); ++t) kb[t] = pk.encode(b.exponents(t));
    const std::uint32_t* lead = b.exponents(0);
    const Rational& lc = b.coefficient(0);
    std::vector<std::uint32_t> qexps, row(n);
    std::vector<Rational> qcoeffs;
    mpq_class tmp;
    while (!rem.empty()) {
        auto it = rem.begin();
        pk.decode(it->first, row.data());
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] < lead[i]) return std::nullopt;
            row[i] -= lead[i];
        }
        u128 tkey = it->first - kb[0];
        Rational tc = it->second / lc;
        qexps.insert(qexps.end(), row.begin(), row.end());
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), tc.get_mpq_t(), b.coefficient(j).get_mpq_t());
            auto [slot, fresh] = rem.try_emplace(tkey + kb[j]);
            mpq_sub(slot->second.get_mpq_t(), slot->second.get_mpq_t(), tmp.get_mpq_t());
            if (sgn(slot->second) == 0) rem.erase(slot);
        }
        qcoeffs.push_back(std::move(tc));
    }
    return PolynomialBuilder::make(u, std::move(qexps), std::move(qcoeffs));
}

namespace {

void require_divisor(const Polynomial& b, VarId v) {
    if (b.is_zero()) throw Error(ErrorKind::MalformedInput, "pseudo-division by zero");
    if (b.degree(v) == 0)
        throw Error(ErrorKind::MalformedInput,
                    "divisor has degree 0 in " + variable_name(v));
}

// Integer content and the monomial content in variables other than v.
Polynomial strip_content(const Polynomial& p, VarId v) {
    if (p.is_zero()) return p;
    Polynomial out = p.primitive_part();
    Polynomial mono = out.monomial_content();
    const Universe& u = mono.universe();
    std::vector<std::uint32_t> row(mono.exponents(0), mono.exponents(0) + u.size());
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v) row[i] = 0;
        any = any || row[i] != 0;
    }
    if (!any) return out;
    return out.divided_by_monomial(Polynomial::from_terms(u, row, {Rational(1)}));
}

}  // namespace

Polynomial prem(const Polynomial& a, const Polynomial& b, VarId v) {
    require_divisor(b, v);
    if (a.is_zero()) return {};
    const std::uint32_t db = b.degree(v);
    const std::uint32_t da = a.degree(v);
    if (da < db) return a;
    const Polynomial lcb = b.leading_coefficient_in(v);
    const unsigned delta = da - db + 1;
    Polynomial r = a;
    unsigned steps = 0;
    while (!r.is_zero() && r.degree(v) >= db) {
        std::uint32_t dr = r.degree(v);
        Polynomial lcr = r.leading_coefficient_in(v);
        r = lcb * r - lcr * Polynomial::var(v, dr - db) * b;
        ++steps;
    }
    if (steps < delta && !r.is_zero()) r *= lcb.pow(delta - steps);
    return r;
}

Polynomial reduce_modulo(const Polynomial& a, const Polynomial& b, VarId v) {
    require_divisor(b, v);
    const std::uint32_t db = b.degree(v);
    const Polynomial lcb = b.leading_coefficient_in(v);
    Polynomial r = strip_content(a, v);
    while (!r.is_zero() && r.degree(v) >= db) {
        std::uint32_t dr = r.degree(v);
        Polynomial lcr = r.leading_coefficient_in(v);
        r = strip_content(lcb * r - lcr * Polynomial::var(v, dr - db) * b, v);
    }
    return r;
}

Polynomial discriminant(const Polynomial& p, VarId v) {
    if (p.degree(v) != 2)
        throw Error(ErrorKind::UnsupportedDegree,
                    "discriminant needs degree 2 in " + variable_name(v) + ", got " +
                        std::to_string(p.degree(v)));
    auto c = p.coefficients_in(v);
    return c[1] * c[1] - Polynomial(4L) * c[2] * c[0];
}

}  // namespace cuboid::algebra
