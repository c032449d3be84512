#include "cuboid/trig/expand.hpp"

#include <sstream>
#include <unordered_map>

#include "cuboid/error.hpp"

namespace cuboid::trig {

using algebra::Polynomial;

bool AtomMonomial::is_one() const {
    if (w != 0) return false;
    for (auto e : c)
        if (e != 0) return false;
    return true;
}

std::string AtomMonomial::to_string(const AngleEnv& env) const {
    if (is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << '*';
        first = false;
    };
    if (w) {
        sep();
        out << "sqrt2";
    }
    for (std::size_t i = 0; i < kMaxAngles; ++i) {
        if (c[i] == 0) continue;
        sep();
        std::string name = i < env.angles().size() ? env.angles()[i].name : "#" + std::to_string(i);
        out << "cos(" << name << "/2)";
        if (c[i] != 1) out << '^' << c[i];
    }
    return out.str();
}

AtomPolynomial::AtomPolynomial(const RationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(AtomMonomial{}, c);
}

AtomPolynomial AtomPolynomial::atom(const AtomMonomial& m, const RationalFunction& c) {
    AtomPolynomial out;
    out.add_term(m, c);
    return out;
}

bool AtomPolynomial::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RationalFunction AtomPolynomial::rational_part() const {
    auto it = terms_.find(AtomMonomial{});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void AtomPolynomial::add_term(const AtomMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

AtomPolynomial AtomPolynomial::operator-() const {
    AtomPolynomial out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

AtomPolynomial operator+(const AtomPolynomial& a, const AtomPolynomial& b) {
    AtomPolynomial out = a;
    for (auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

AtomPolynomial operator-(const AtomPolynomial& a, const AtomPolynomial& b) { return a + (-b); }

AtomPolynomial operator*(const AtomPolynomial& a, const AtomPolynomial& b) {
    AtomPolynomial out;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            AtomMonomial m;
            for (std::size_t i = 0; i < kMaxAngles; ++i) m.c[i] = static_cast<std::int16_t>(ma.c[i] + mb.c[i]);
            int w = ma.w + mb.w;
            RationalFunction c = ca * cb;
            if (w == 2) {
                c = c * RationalFunction(2L);
                w = 0;
            }
            m.w = static_cast<std::uint8_t>(w);
            out.add_term(m, c);
        }
    }
    return out;
}

AtomPolynomial AtomPolynomial::scaled(const RationalFunction& c) const {
    if (c.is_zero()) return {};
    AtomPolynomial out;
    for (auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

namespace {

RationalFunction one_plus_square(const AngleEnv& env, std::size_t i) {
    RationalFunction g = RationalFunction::var(env.angles()[i].slot);
    return RationalFunction(1L) + g * g;
}

AtomPolynomial reduce_impl(const AtomPolynomial& e, const AngleEnv& env) {
    AtomPolynomial out;
    for (auto& [m, c] : e.terms()) {
        AtomMonomial r = m;
        RationalFunction k = c;
        for (std::size_t i = 0; i < env.angles().size(); ++i) {
            int ex = m.c[i];
            int half = ex >= 0 ? ex / 2 : -((-ex + 1) / 2);
            r.c[i] = static_cast<std::int16_t>(ex - 2 * half);
            if (half != 0) k = k * one_plus_square(env, i).pow(-half);
        }
        out = out + AtomPolynomial::atom(r, k);
    }
    return out;
}

AtomPolynomial invert_monomial(const AtomMonomial& m, const RationalFunction& c) {
    AtomMonomial inv;
    for (std::size_t i = 0; i < kMaxAngles; ++i) inv.c[i] = static_cast<std::int16_t>(-m.c[i]);
    RationalFunction k = c.inverse();
    if (m.w) {
        inv.w = 1;
        k = k * RationalFunction(Rational(1, 2));
    }
    return AtomPolynomial::atom(inv, k);
}

struct CosSin {
    AtomPolynomial c, s;
};

CosSin combine(const CosSin& a, const CosSin& b) {
    return {a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s};
}

class Expander {
public:
    explicit Expander(const AngleEnv& env) : env_(env) {}

    AtomPolynomial run(const Expr& e) {
        const auto& n = e.node();
        switch (n.kind) {
            case Expr::Kind::Const: return RationalFunction(n.constant);
            case Expr::Kind::Var: return RationalFunction::var(n.var);
            case Expr::Kind::Value: return n.value;
            case Expr::Kind::Named: {
                auto it = named_.find(&n);
                if (it != named_.end()) return it->second;
                AtomPolynomial v = run(n.children[0]);
                named_.emplace(&n, v);
                return v;
            }
            case Expr::Kind::Sqrt2: {
                AtomMonomial m;
                m.w = 1;
                return AtomPolynomial::atom(m, RationalFunction(1L));
            }
            case Expr::Kind::HalfCos: {
                AtomMonomial m;
                m.c[env_.index(n.name)] = 1;
                return AtomPolynomial::atom(m, RationalFunction(1L));
            }
            case Expr::Kind::Trig: return trig(n.fn, n.angle);
            case Expr::Kind::Add: {
                AtomPolynomial out;
                for (auto& ch : n.children) out = out + run(ch);
                return out;
            }
            case Expr::Kind::Mul: {
                AtomPolynomial num(RationalFunction(1L)), den(RationalFunction(1L));
                bool has_den = false;
                for (auto& ch : n.children) {
                    const auto& cn = ch.node();
                    if (cn.kind == Expr::Kind::Pow && cn.exponent < 0) {
                        den = den * power(run(cn.children[0]), -cn.exponent);
                        has_den = true;
                    } else {
                        num = num * run(ch);
                    }
                    if (num.is_zero()) return {};
                }
                return has_den ? divide(num, den, env_) : num;
            }
            case Expr::Kind::Pow: {
                AtomPolynomial base = run(n.children[0]);
                if (n.exponent >= 0) return power(base, n.exponent);
                return divide(RationalFunction(1L), power(base, -n.exponent), env_);
            }
            case Expr::Kind::Reduce: return reduce_impl(run(n.children[0]), env_);
        }
        return {};
    }

private:
    static AtomPolynomial power(AtomPolynomial base, int e) {
        AtomPolynomial out(RationalFunction(1L));
        while (e > 0) {
            if (e & 1) out = out * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return out;
    }

    // cos and sin of q full copies of bound angle i, in its slot variable.
    CosSin full_multiple(std::size_t i, int q) {
        RationalFunction g = RationalFunction::var(env_.angles()[i].slot);
        RationalFunction d = RationalFunction(1L) + g * g;
        RationalFunction c1 = (RationalFunction(1L) - g * g) / d, s1 = RationalFunction(2L) * g / d;
        RationalFunction c(1L), s(0L);
        for (int k = 0; k < std::abs(q); ++k) {
            RationalFunction nc = c * c1 - s * s1;
            s = s * c1 + c * s1;
            c = nc;
        }
        if (q < 0) s = -s;
        return {c, s};
    }

    static CosSin quarter_pi(int q) {
        q = ((q % 8) + 8) % 8;
        AtomMonomial wm;
        wm.w = 1;
        AtomPolynomial h = AtomPolynomial::atom(wm, RationalFunction(Rational(1, 2)));
        AtomPolynomial one(RationalFunction(1L)), zero;
        switch (q) {
            case 0: return {one, zero};
            case 1: return {h, h};
            case 2: return {zero, one};
            case 3: return {-h, h};
            case 4: return {-one, zero};
            case 5: return {-h, -h};
            case 6: return {zero, -one};
            default: return {h, -h};
        }
    }

    const CosSin& cos_sin(const AngleCombo& x) {
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        CosSin acc{AtomPolynomial(RationalFunction(1L)), AtomPolynomial()};
        for (auto& [name, k] : x.halves) {
            std::size_t i = env_.index(name);
            int q = k >= 0 ? k / 2 : -((-k + 1) / 2);
            int r = k - 2 * q;
            if (q != 0) acc = combine(acc, full_multiple(i, q));
            if (r != 0) {
                AtomMonomial m;
                m.c[i] = 1;
                RationalFunction g = RationalFunction::var(env_.angles()[i].slot);
                acc = combine(acc, {AtomPolynomial::atom(m, RationalFunction(1L)), AtomPolynomial::atom(m, g)});
            }
        }
        if (x.quarter_pi != 0) acc = combine(acc, quarter_pi(x.quarter_pi));
        return cache_.emplace(x, std::move(acc)).first->second;
    }

    AtomPolynomial trig(TrigFn fn, const AngleCombo& x) {
        if ((fn == TrigFn::Tan || fn == TrigFn::Cot) && x.quarter_pi == 0 && x.halves.size() == 1 &&
            std::abs(x.halves.begin()->second) == 1) {
            std::size_t i = env_.index(x.halves.begin()->first);
            RationalFunction g = RationalFunction::var(env_.angles()[i].slot);
            if (x.halves.begin()->second < 0) g = -g;
            return fn == TrigFn::Tan ? AtomPolynomial(g) : AtomPolynomial(g.inverse());
        }
        const CosSin& cs = cos_sin(x);
        switch (fn) {
            case TrigFn::Sin: return cs.s;
            case TrigFn::Cos: return cs.c;
            case TrigFn::Tan:
                if (cs.c.is_zero()) throw Error(ErrorKind::Domain, "tan(" + x.to_string() + ") is undefined");
                return divide(cs.s, cs.c, env_);
            case TrigFn::Cot:
                if (cs.s.is_zero()) throw Error(ErrorKind::Domain, "cot(" + x.to_string() + ") is undefined");
                return divide(cs.c, cs.s, env_);
        }
        return {};
    }

    const AngleEnv& env_;
    std::unordered_map<const Expr::Node*, AtomPolynomial> named_;
    std::map<AngleCombo, CosSin> cache_;
};

}  // namespace

AtomPolynomial expand(const Expr& e, const AngleEnv& env) { return Expander(env).run(e); }

AtomPolynomial half_angle_reduce(const AtomPolynomial& e, const AngleEnv& env) { return reduce_impl(e, env); }

AtomPolynomial divide(const AtomPolynomial& a, const AtomPolynomial& b, const AngleEnv& env) {
    if (b.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
    if (b.terms().size() == 1) {
        auto& [m, c] = *b.terms().begin();
        return a * invert_monomial(m, c);
    }
    AtomPolynomial num = a, den = reduce_impl(b, env);
    while (true) {
        if (den.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
        if (den.terms().size() == 1) {
            auto& [m, c] = *den.terms().begin();
            return num * invert_monomial(m, c);
        }
        // Pick an atom still present in the divisor and multiply by its conjugate.
        int slot = -1;
        bool use_w = false;
        for (auto& [m, c] : den.terms()) {
            if (m.w) {
                use_w = true;
                break;
            }
            for (std::size_t i = 0; i < kMaxAngles && slot < 0; ++i)
                if (m.c[i] != 0) slot = static_cast<int>(i);
        }
        AtomPolynomial conj;
        for (auto& [m, c] : den.terms()) {
            bool has = use_w ? m.w != 0 : m.c[slot] != 0;
            conj = conj + AtomPolynomial::atom(m, has ? -c : c);
        }
        AtomPolynomial next = reduce_impl(den * conj, env);
        if (next.is_zero())
            throw Error(ErrorKind::NonRationalizable, "divisor cannot be rationalized");
        num = num * conj;
        den = std::move(next);
    }
}

RationalFunction expand_trig(const Expr& e, const AngleEnv& env) {
    AtomPolynomial r = half_angle_reduce(expand(e, env), env);
    if (!r.is_rational()) {
        std::string atoms;
        for (auto& [m, c] : r.terms())
            if (!m.is_one()) atoms += (atoms.empty() ? "" : ", ") + m.to_string(env);
        throw Error(ErrorKind::NonRationalizable, "atoms survive: " + atoms);
    }
    return env.to_generators(r.rational_part());
}

}  // namespace cuboid::trig
