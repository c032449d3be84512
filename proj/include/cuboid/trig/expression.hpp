#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cuboid/trig/angle.hpp"

namespace cuboid::trig {

enum class TrigFn { Sin, Cos, Tan, Cot };

/// Immutable expression tree. Copies share nodes.
class Expr {
public:
    enum class Kind { Const, Var, Value, Named, Sqrt2, HalfCos, Trig, Add, Mul, Pow, Reduce };

    struct Node {
        Kind kind;
        Rational constant;
        VarId var = 0;
        RationalFunction value;
        std::string name;  // Named: symbol name; HalfCos: angle name
        TrigFn fn = TrigFn::Sin;
        AngleCombo angle;
        int exponent = 0;
        std::vector<Expr> children;
    };

    Expr() : Expr(Rational(0)) {}
    Expr(const Rational& c);  // NOLINT(google-explicit-constructor)
    Expr(long c);             // NOLINT(google-explicit-constructor)

    static Expr var(VarId v);
    static Expr var(const std::string& name);
    static Expr value(const RationalFunction& v);
    /// A named subexpression; expansion caches it per node.
    static Expr named(const std::string& name, const Expr& definition);
    static Expr sqrt2();
    static Expr half_cos(const std::string& angle);
    static Expr trig(TrigFn fn, const AngleCombo& angle);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    /// Expands the child, then applies the half-angle rewrite to it alone.
    static Expr reduce(const Expr& e);

    Expr pow(int e) const;

    const Node& node() const { return *node_; }
    Kind kind() const { return node_->kind; }

    friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return product({a, b.pow(-1)}); }
    Expr operator-() const;

    std::string to_string() const;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Node n);

    std::shared_ptr<const Node> node_;
};

inline Expr sin(const AngleCombo& x) { return Expr::trig(TrigFn::Sin, x); }
inline Expr cos(const AngleCombo& x) { return Expr::trig(TrigFn::Cos, x); }
inline Expr tan(const AngleCombo& x) { return Expr::trig(TrigFn::Tan, x); }
inline Expr cot(const AngleCombo& x) { return Expr::trig(TrigFn::Cot, x); }

enum class Sign { Plus, Minus };

/// cos x + sin x (Plus) or cos x - sin x (Minus).
Expr omega(Sign sign, const AngleCombo& x);

enum class HKMN { H, K, M, N };

/// H = w- - Q w+, K = w- + Q w+, M = w+ - Q w-, N = w+ + Q w-.
Expr hkmn(HKMN kind, const AngleCombo& x, const Expr& Q);

}  // namespace cuboid::trig
