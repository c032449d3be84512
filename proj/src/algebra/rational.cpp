#include "cuboid/algebra/rational.hpp"

#include <cctype>

#include "cuboid/error.hpp"

namespace cuboid::algebra {

std::string to_string(const Rational& q, bool full_form) {
    std::string out = q.get_num().get_str();
    if (full_form || q.get_den() != 1) {
        out += '/';
        out += q.get_den().get_str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                            : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::Parse, "not a fraction: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow(const Rational& q, int e) {
    if (e < 0) {
        if (q == 0) throw Error(ErrorKind::Domain, "zero to a negative power");
        return pow(Rational(1) / q, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

}  // namespace cuboid::algebra
