#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuboid/algebra/rational_function.hpp"

namespace cuboid::limit {

using algebra::Rational;
using algebra::RationalFunction;

/// Double-angle values from a half-angle generator g = tan(x/2).
Rational sin2_from_generator(const Rational& g);
Rational cos2_from_generator(const Rational& g);
/// tan x and cot x; throw Error(Domain) where undefined.
Rational tan_from_generator(const Rational& g);
Rational cot_from_generator(const Rational& g);

/// Delta^2 = 1 + 4 D sin(2a).
Rational delta_from_D(const Rational& sin2a, const Rational& D);

/// (M+, M-) = (-2r - cot a, 2r + tan a). Throws Error(Domain) unless 0 < gen < 1.
std::pair<Rational, Rational> solve_M(const Rational& gen, const Rational& r);

struct LimitScenario {
    Rational gen_alpha;
    Rational gen_alpha1;
    Rational f;
};

/// Throws Error(Domain) for generators outside (0,1) or f = 0, and
/// Error(Singular) when f^2 sin2a sin2a1 = 1.
void check_scenario(const LimitScenario& sc);

std::pair<Rational, Rational> r_r1_from_f(const LimitScenario& sc);

struct DDelta {
    Rational D, Delta, Delta1;
};
DDelta D_Delta_from_f(const LimitScenario& sc);
/// Same closed forms from the double-angle sines directly; Error(Singular)
/// when f^2 S S1 = 1.
DDelta D_Delta_from_sines(const Rational& S, const Rational& S1, const Rational& f);

struct LimitResult {
    Rational r, r1, D, Delta, Delta1;
    Rational M_plus, M_minus, M1_plus, M1_minus;
    Rational r_minus_r1;
};
LimitResult analyze(const LimitScenario& sc);

struct CaseReport {
    int case_number = 1;    // 1: r != r1, 2: r == r1
    bool identity_holds = false;
    std::string option;     // case 2: "alpha1 = alpha", "alpha1 + alpha = pi/2" or "none"
};
CaseReport case_split(const LimitScenario& sc);

struct RefutationRow {
    Rational f, r, r1, r_minus_r1, D;
    Rational remainder;  // r - f - f^2 sin2a1
    bool within_bound = false;
};

struct RefutationReport {
    Rational gen_alpha, gen_alpha1, sin2a, sin2a1;
    Rational bound_constant;  // C with |remainder| <= C |f|^3 for |f| <= max |f|
    std::vector<RefutationRow> rows;
};

/// Throws Error(Inapplicable) when sin2a = sin2a1, Error(Domain) or
/// Error(Singular) for a bad f.
RefutationReport refutation_demo(const Rational& gen_alpha, const Rational& gen_alpha1,
                                 const std::vector<Rational>& fs);

std::vector<Rational> default_f_sequence();

/// Named symbolic identities of the general-case analysis; each entry is
/// true when the identity normalizes to zero.
std::vector<std::pair<std::string, bool>> symbolic_checks();

}  // namespace cuboid::limit
