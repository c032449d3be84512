#include "cuboid/trig/expression.hpp"

#include <sstream>

namespace cuboid::trig {

Expr Expr::make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr::Expr(const Rational& c) {
    Node n{Kind::Const, c, 0, {}, {}, TrigFn::Sin, {}, 0, {}};
    node_ = std::make_shared<const Node>(std::move(n));
}

Expr::Expr(long c) : Expr(Rational(c)) {}

Expr Expr::var(VarId v) {
    Node n{Kind::Var, 0, v, {}, {}, TrigFn::Sin, {}, 0, {}};
    return make(std::move(n));
}

Expr Expr::var(const std::string& name) { return var(algebra::variable(name)); }

Expr Expr::value(const RationalFunction& v) {
    Node n{Kind::Value, 0, 0, v, {}, TrigFn::Sin, {}, 0, {}};
    return make(std::move(n));
}

Expr Expr::named(const std::string& name, const Expr& definition) {
    Node n{Kind::Named, 0, 0, {}, name, TrigFn::Sin, {}, 0, {definition}};
    return make(std::move(n));
}

Expr Expr::sqrt2() {
    Node n{Kind::Sqrt2, 0, 0, {}, {}, TrigFn::Sin, {}, 0, {}};
    return make(std::move(n));
}

Expr Expr::half_cos(const std::string& angle) {
    Node n{Kind::HalfCos, 0, 0, {}, angle, TrigFn::Sin, {}, 0, {}};
    return make(std::move(n));
}

Expr Expr::trig(TrigFn fn, const AngleCombo& angle) {
    Node n{Kind::Trig, 0, 0, {}, {}, fn, angle, 0, {}};
    return make(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
    if (terms.size() == 1) return terms.front();
    Node n{Kind::Add, 0, 0, {}, {}, TrigFn::Sin, {}, 0, std::move(terms)};
    return make(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
    if (factors.size() == 1) return factors.front();
    Node n{Kind::Mul, 0, 0, {}, {}, TrigFn::Sin, {}, 0, std::move(factors)};
    return make(std::move(n));
}

Expr Expr::reduce(const Expr& e) {
    Node n{Kind::Reduce, 0, 0, {}, {}, TrigFn::Sin, {}, 0, {e}};
    return make(std::move(n));
}

Expr Expr::pow(int e) const {
    if (e == 1) return *this;
    Node n{Kind::Pow, 0, 0, {}, {}, TrigFn::Sin, {}, e, {*this}};
    return make(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }

Expr Expr::operator-() const { return product({Expr(-1L), *this}); }

namespace {

const char* fn_name(TrigFn f) {
    switch (f) {
        case TrigFn::Sin: return "sin";
        case TrigFn::Cos: return "cos";
        case TrigFn::Tan: return "tan";
        case TrigFn::Cot: return "cot";
    }
    return "?";
}

void write(std::ostringstream& out, const Expr& e) {
    const auto& n = e.node();
    switch (n.kind) {
        case Expr::Kind::Const: out << algebra::to_string(n.constant); break;
        case Expr::Kind::Var: out << algebra::variable_name(n.var); break;
        case Expr::Kind::Value: out << '[' << n.value.to_string() << ']'; break;
        case Expr::Kind::Named: out << n.name; break;
        case Expr::Kind::Sqrt2: out << "sqrt2"; break;
        case Expr::Kind::HalfCos: out << "cos(" << n.name << "/2)"; break;
        case Expr::Kind::Trig: out << fn_name(n.fn) << '(' << n.angle.to_string() << ')'; break;
        case Expr::Kind::Add:
        case Expr::Kind::Mul: {
            out << '(';
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i) out << (n.kind == Expr::Kind::Add ? " + " : "*");
                write(out, n.children[i]);
            }
            out << ')';
            break;
        }
        case Expr::Kind::Pow:
            write(out, n.children[0]);
            out << '^' << n.exponent;
            break;
        case Expr::Kind::Reduce:
            out << "reduce(";
            write(out, n.children[0]);
            out << ')';
            break;
    }
}

}  // namespace

std::string Expr::to_string() const {
    std::ostringstream out;
    write(out, *this);
    return out.str();
}

Expr omega(Sign sign, const AngleCombo& x) {
    return sign == Sign::Plus ? cos(x) + sin(x) : cos(x) - sin(x);
}

Expr hkmn(HKMN kind, const AngleCombo& x, const Expr& Q) {
    Expr wp = omega(Sign::Plus, x), wm = omega(Sign::Minus, x);
    switch (kind) {
        case HKMN::H: return wm - Q * wp;
        case HKMN::K: return wm + Q * wp;
        case HKMN::M: return wp - Q * wm;
        case HKMN::N: return wp + Q * wm;
    }
    return wp;
}

}  // namespace cuboid::trig
