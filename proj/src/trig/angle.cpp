#include "cuboid/trig/angle.hpp"

#include <cstdlib>
#include <sstream>

#include "cuboid/error.hpp"

namespace cuboid::trig {

AngleCombo AngleCombo::angle(const std::string& name) { return AngleCombo{{{name, 2}}, 0}; }

AngleCombo AngleCombo::half(const std::string& name) { return AngleCombo{{{name, 1}}, 0}; }

AngleCombo AngleCombo::pi_quarters(int k) { return AngleCombo{{}, k}; }

AngleCombo AngleCombo::operator+(const AngleCombo& o) const {
    AngleCombo out = *this;
    for (auto& [name, k] : o.halves) {
        int& slot = out.halves[name];
        slot += k;
        if (slot == 0) out.halves.erase(name);
    }
    out.quarter_pi += o.quarter_pi;
    return out;
}

AngleCombo AngleCombo::operator-() const { return times(-1); }

AngleCombo AngleCombo::operator-(const AngleCombo& o) const { return *this + (-o); }

AngleCombo AngleCombo::times(int k) const {
    if (k == 0) return {};
    AngleCombo out = *this;
    for (auto& [name, c] : out.halves) c *= k;
    out.quarter_pi *= k;
    return out;
}

AngleCombo AngleCombo::times(const Rational& k) const {
    auto scale = [&](int c) {
        Rational v = k * c;
        if (v.get_den() != 1 || !v.get_num().fits_sint_p())
            throw Error(ErrorKind::MalformedInput,
                        "angle " + to_string() + " times " + algebra::to_string(k) +
                            " leaves the half-angle lattice");
        return static_cast<int>(v.get_num().get_si());
    };
    AngleCombo out;
    for (auto& [name, c] : halves) {
        int v = scale(c);
        if (v != 0) out.halves[name] = v;
    }
    out.quarter_pi = scale(quarter_pi);
    return out;
}

bool AngleCombo::is_zero() const { return halves.empty() && quarter_pi == 0; }

namespace {

void write_term(std::ostringstream& out, bool& first, int num, int den, const std::string& name) {
    Rational q(num, den);
    q.canonicalize();
    bool negative = q < 0;
    if (negative) q = -q;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (q.get_num() != 1) out << q.get_num().get_str() << '*';
    out << name;
    if (q.get_den() != 1) out << '/' << q.get_den().get_str();
}

}  // namespace

std::string AngleCombo::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [name, k] : halves) write_term(out, first, k, 2, name);
    if (quarter_pi != 0) write_term(out, first, quarter_pi, 4, "pi");
    return out.str();
}

bool AngleEnv::is_bound(const std::string& name) const {
    for (auto& a : angles_)
        if (a.name == name) return true;
    return false;
}

std::size_t AngleEnv::index(const std::string& name) const {
    for (std::size_t i = 0; i < angles_.size(); ++i)
        if (angles_[i].name == name) return i;
    throw Error(ErrorKind::UnboundAngle, "angle '" + name + "' is not bound");
}

RationalFunction AngleEnv::sin(const std::string& name) const {
    RationalFunction g = generator(name);
    return RationalFunction(2L) * g / (RationalFunction(1L) + g * g);
}

RationalFunction AngleEnv::cos(const std::string& name) const {
    RationalFunction g = generator(name);
    return (RationalFunction(1L) - g * g) / (RationalFunction(1L) + g * g);
}

RationalFunction AngleEnv::tan_half(const std::string& name) const { return generator(name); }

RationalFunction AngleEnv::cot_half(const std::string& name) const {
    RationalFunction g = generator(name);
    if (g.is_zero()) throw Error(ErrorKind::Domain, "cot of a zero half-angle");
    return g.inverse();
}

RationalFunction AngleEnv::to_generators(const RationalFunction& slot_form) const {
    return algebra::substitute(slot_form, slot_bindings_);
}

AngleEnv bind_angle(const AngleEnv& env, const std::string& angle, const RationalFunction& generator) {
    if (env.is_bound(angle)) throw Error(ErrorKind::Conflict, "angle '" + angle + "' is already bound");
    if (env.angles_.size() >= kMaxAngles)
        throw Error(ErrorKind::MalformedInput, "too many bound angles");
    AngleEnv out = env;
    VarId slot = algebra::variable("tan(" + angle + "/2)");
    out.angles_.push_back({angle, generator, slot});
    out.slot_bindings_[slot] = generator;
    return out;
}

}  // namespace cuboid::trig
