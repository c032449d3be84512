#pragma once

#include <map>
#include <string>
#include <vector>

#include "cuboid/algebra/rational_function.hpp"

namespace cuboid::trig {

using algebra::Rational;
using algebra::RationalFunction;
using algebra::VarId;

/// Integer combination of half-angles of bound angles plus a multiple of pi/4.
/// The full angle x is {x: 2}; x/2 is {x: 1}.
struct AngleCombo {
    std::map<std::string, int> halves;
    int quarter_pi = 0;

    static AngleCombo angle(const std::string& name);       // x
    static AngleCombo half(const std::string& name);        // x/2
    static AngleCombo pi_quarters(int k);                   // k*pi/4

    AngleCombo operator+(const AngleCombo& o) const;
    AngleCombo operator-(const AngleCombo& o) const;
    AngleCombo operator-() const;
    AngleCombo times(int k) const;
    /// Throws Error(MalformedInput) unless every coefficient stays integral.
    AngleCombo times(const Rational& k) const;

    bool is_zero() const;
    bool operator==(const AngleCombo& o) const = default;
    auto operator<=>(const AngleCombo& o) const = default;

    std::string to_string() const;
};

inline constexpr std::size_t kMaxAngles = 8;

/// Angles bound to rational-function generators g = tan(x/2).
///
/// Each bound angle also owns a private slot variable standing for its
/// generator during expansion; results are mapped back to the generator at
/// the end, so intermediate expressions stay small.
class AngleEnv {
public:
    struct Bound {
        std::string name;
        RationalFunction generator;
        VarId slot;
    };

    bool is_bound(const std::string& name) const;
    const std::vector<Bound>& angles() const { return angles_; }
    /// Slot index; throws Error(UnboundAngle).
    std::size_t index(const std::string& name) const;
    const Bound& bound(const std::string& name) const { return angles_[index(name)]; }

    RationalFunction generator(const std::string& name) const { return bound(name).generator; }
    RationalFunction sin(const std::string& name) const;
    RationalFunction cos(const std::string& name) const;
    RationalFunction tan_half(const std::string& name) const;
    /// Throws Error(Domain) for a zero generator.
    RationalFunction cot_half(const std::string& name) const;

    /// slot variable -> generator, for mapping expansion results back.
    const algebra::Bindings& slot_bindings() const { return slot_bindings_; }
    RationalFunction to_generators(const RationalFunction& slot_form) const;

private:
    std::vector<Bound> angles_;
    algebra::Bindings slot_bindings_;

    friend AngleEnv bind_angle(const AngleEnv& env, const std::string& angle,
                               const RationalFunction& generator);
};

/// Throws Error(Conflict) when angle is already bound.
AngleEnv bind_angle(const AngleEnv& env, const std::string& angle, const RationalFunction& generator);

}  // namespace cuboid::trig
