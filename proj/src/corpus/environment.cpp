#include "cuboid/corpus/environment.hpp"

#include <mutex>

#include "cuboid/error.hpp"
#include "cuboid/model/cuboid.hpp"

namespace cuboid::corpus {

using trig::AngleCombo;
using trig::Expr;

namespace {

RationalFunction rf(long c) { return RationalFunction(c); }

RationalFunction sk(int k) { return RationalFunction::var("s" + std::to_string(k)); }

AngleCombo half(const std::string& a) { return AngleCombo::half(a); }

void add_edges(Environment& env) {
    for (int k = 1; k <= 4; ++k) {
        env.variables.insert("s" + std::to_string(k));
        env.symbols.emplace("u" + std::to_string(k), Expr::value(edge_u(k)));
        env.symbols.emplace("v" + std::to_string(k), Expr::value(edge_v(k)));
    }
    env.symbols.emplace("Q", Expr::value(sk(3) * sk(4)));
    env.modulus = model::basic_equation();
    env.modulus_var = algebra::vars::s1();
}

// (2a + b - c) / (2d + b + c), the generator pattern shared by every angle here.
RationalFunction generator(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c,
                           const RationalFunction& d) {
    return algebra::normal((rf(2) * a + b - c) / (rf(2) * d + b + c));
}

Environment build_sec4() {
    Environment env;
    env.id = "SEC4";
    RationalFunction u1 = RationalFunction::var("u1"), u2 = RationalFunction::var("u2");
    RationalFunction n = RationalFunction::var("n");
    auto [u3, u4] = model::parallelogram_from_n(u1, u2, n);
    RationalFunction m = algebra::normal((u2 - n * u1) / (u1 + n * u2));
    for (auto name : {"u1", "u2", "n"}) env.variables.insert(name);
    env.symbols.emplace("u3", Expr::value(u3));
    env.symbols.emplace("u4", Expr::value(u4));
    env.symbols.emplace("m", Expr::value(m));
    env.angles = trig::bind_angle(env.angles, "alpha", m);
    env.angles = trig::bind_angle(env.angles, "beta", n);
    env.angle_names["sigma"] = half("alpha") + half("beta");
    env.angle_names["delta"] = half("alpha") - half("beta");
    return env;
}

Environment build_sec5() {
    Environment env;
    env.id = "SEC5";
    add_edges(env);
    RationalFunction m = generator(edge_u(2), edge_u(3), edge_u(4), edge_u(1));
    RationalFunction m1 = generator(edge_v(2), edge_v(3), edge_v(4), edge_u(1));
    RationalFunction m2 = generator(edge_u(2), edge_v(3), edge_v(4), edge_v(1));
    env.symbols.emplace("m", Expr::value(m));
    env.symbols.emplace("m1", Expr::value(m1));
    env.symbols.emplace("m2", Expr::value(m2));
    env.angles = trig::bind_angle(env.angles, "alpha", m);
    env.angles = trig::bind_angle(env.angles, "alpha1", m1);
    env.angles = trig::bind_angle(env.angles, "alpha2", m2);
    AngleCombo pi4 = AngleCombo::pi_quarters(1);
    env.angle_names["psi"] = pi4 - half("alpha") - half("alpha1");
    env.angle_names["phi"] = pi4 - half("alpha") - half("alpha2");
    env.angle_names["sigma1"] = half("alpha") + half("alpha1");
    env.symbols.emplace("lambda", Expr::named("lambda", trig::tan(env.angle_names["psi"])));
    return env;
}

Environment build_sec7() {
    Environment env;
    env.id = "SEC7";
    add_edges(env);
    RationalFunction ma = generator(edge_u(2), edge_u(3), edge_u(4), edge_u(1));
    RationalFunction ma1 = generator(edge_v(2), edge_v(3), edge_v(4), edge_u(1));
    RationalFunction mb = generator(edge_u(2), edge_u(4), edge_u(3), edge_u(1));
    RationalFunction mb1 = generator(edge_v(2), edge_v(4), edge_v(3), edge_u(1));
    env.angles = trig::bind_angle(env.angles, "alpha", ma);
    env.angles = trig::bind_angle(env.angles, "alpha1", ma1);
    env.angles = trig::bind_angle(env.angles, "beta", mb);
    env.angles = trig::bind_angle(env.angles, "beta1", mb1);
    AngleCombo pi4 = AngleCombo::pi_quarters(1);
    env.angle_names["psi"] = pi4 - half("alpha") - half("alpha1");
    // (alpha + alpha1)/2, the earlier meaning of sigma1 before the renaming.
    env.angle_names["sigma_aa1"] = half("alpha") + half("alpha1");
    env.angle_names["sigma"] = half("alpha") + half("beta");
    env.angle_names["delta"] = half("alpha") - half("beta");
    env.angle_names["sigma1"] = half("alpha1") + half("beta1");
    env.angle_names["delta1"] = half("alpha1") - half("beta1");

    RationalFunction k = algebra::normal((ma + ma1) / (rf(1) - ma * ma1));
    RationalFunction bar_k = algebra::normal((mb + mb1) / (rf(1) - mb * mb1));
    RationalFunction bar_lambda = algebra::normal((rf(1) - bar_k) / (rf(1) + bar_k));
    env.symbols.emplace("k", Expr::value(k));
    env.symbols.emplace("bar_k", Expr::value(bar_k));
    env.symbols.emplace("bar_lambda", Expr::value(bar_lambda));
    for (auto [name, angle] : {std::pair{"M", "sigma"}, {"M1", "sigma1"}, {"N", "delta"}, {"N1", "delta1"}})
        env.symbols.emplace(name, Expr::named(name, trig::tan(env.angle_names[angle])));
    env.symbols.emplace("uuu", Expr::named("uuu", Expr::reduce(trig::cos(env.angle_names["sigma"]).pow(2))));
    env.symbols.emplace("uuu1", Expr::named("uuu1", Expr::reduce(trig::cos(env.angle_names["sigma1"]).pow(2))));
    return env;
}

}  // namespace

RationalFunction edge_u(int k) { return (rf(1) - sk(k) * sk(k)) / (rf(2) * sk(k)); }

RationalFunction edge_v(int k) { return (rf(1) + sk(k) * sk(k)) / (rf(2) * sk(k)); }

AngleCombo Environment::angle(const std::string& name) const {
    if (name == "pi4") return AngleCombo::pi_quarters(1);
    auto it = angle_names.find(name);
    if (it != angle_names.end()) return it->second;
    if (angles.is_bound(name)) return AngleCombo::angle(name);
    throw Error(ErrorKind::UnboundAngle, "angle '" + name + "' is not defined in " + id);
}

Expr Environment::symbol(const std::string& name) const {
    auto it = symbols.find(name);
    if (it != symbols.end()) return it->second;
    if (variables.count(name)) return Expr::var(name);
    throw Error(ErrorKind::MalformedInput, "symbol '" + name + "' is not defined in " + id);
}

const Environment& environment(std::string_view id) {
    static std::once_flag once;
    static std::map<std::string, Environment, std::less<>> table;
    std::call_once(once, [] {
        table.emplace("SEC4", build_sec4());
        table.emplace("SEC5", build_sec5());
        table.emplace("SEC7", build_sec7());
    });
    auto it = table.find(id);
    if (it == table.end()) throw Error(ErrorKind::MalformedInput, "unknown environment '" + std::string(id) + "'");
    return it->second;
}

}  // namespace cuboid::corpus
