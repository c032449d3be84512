#include "cuboid/corpus/manifest.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "cuboid/error.hpp"

namespace cuboid::corpus {

using trig::AngleCombo;
using trig::Expr;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Error parse_error(int line, const std::string& msg) {
    return Error(ErrorKind::Parse, "manifest line " + std::to_string(line) + ": " + msg);
}

// --- s-expressions -------------------------------------------------------

struct Sexp {
    std::string atom;  // empty for a list
    std::vector<Sexp> items;
    bool is_list() const { return atom.empty(); }
};

class Reader {
public:
    explicit Reader(const std::string& t) : text_(t) {}

    Sexp read_all() {
        Sexp s = read();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return s;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    Sexp read() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end");
        if (text_[pos_] == ')') fail("unexpected ')'");
        if (text_[pos_] == '(') {
            ++pos_;
            Sexp list;
            for (;;) {
                skip_space();
                if (pos_ >= text_.size()) fail("missing ')'");
                if (text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                list.items.push_back(read());
            }
            if (list.items.empty()) fail("empty list");
            return list;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            ++pos_;
        return Sexp{text_.substr(start, pos_ - start), {}};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

const std::regex& number_re() {
    static const std::regex re(R"([-+]?[0-9]+(/[0-9]+)?)");
    return re;
}

std::optional<Rational> as_number(const std::string& atom) {
    if (!std::regex_match(atom, number_re())) return std::nullopt;
    std::string s = atom[0] == '+' ? atom.substr(1) : atom;
    Rational r(s);
    if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + atom + "'");
    r.canonicalize();
    return r;
}

class Builder {
public:
    explicit Builder(const Environment& env) : env_(env) {}

    Expr expr(const Sexp& s) {
        if (!s.is_list()) {
            if (auto q = as_number(s.atom)) return Expr(*q);
            return env_.symbol(s.atom);
        }
        const std::string& head = head_of(s);
        auto args = [&] {
            std::vector<Expr> out;
            for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(expr(s.items[i]));
            return out;
        };
        if (head == "+") return Expr::sum(args());
        if (head == "*") return Expr::product(args());
        if (head == "-") {
            auto a = args();
            if (a.empty()) bad(s, "'-' needs an argument");
            if (a.size() == 1) return -a[0];
            std::vector<Expr> terms{a[0]};
            for (std::size_t i = 1; i < a.size(); ++i) terms.push_back(-a[i]);
            return Expr::sum(terms);
        }
        if (head == "/") {
            auto a = arity(s, 2);
            return expr(a[0]) / expr(a[1]);
        }
        if (head == "^") {
            auto a = arity(s, 2);
            auto e = a[1].is_list() ? std::nullopt : as_number(a[1].atom);
            if (!e || e->get_den() != 1 || !e->get_num().fits_sint_p()) bad(s, "exponent must be an integer");
            return expr(a[0]).pow(static_cast<int>(e->get_num().get_si()));
        }
        if (head == "sqrt2") {
            arity(s, 0);
            return Expr::sqrt2();
        }
        if (head == "reduce") return Expr::reduce(expr(arity(s, 1)[0]));
        if (head == "chalf") {
            auto a = arity(s, 1);
            if (a[0].is_list() || !env_.angles.is_bound(a[0].atom)) bad(s, "chalf needs a bound angle");
            return Expr::half_cos(a[0].atom);
        }
        static const std::map<std::string, trig::TrigFn> fns = {
            {"sin", trig::TrigFn::Sin}, {"cos", trig::TrigFn::Cos},
            {"tan", trig::TrigFn::Tan}, {"cot", trig::TrigFn::Cot}};
        if (auto it = fns.find(head); it != fns.end()) return Expr::trig(it->second, angle(arity(s, 1)[0]));
        if (head == "op+") return trig::omega(trig::Sign::Plus, angle(arity(s, 1)[0]));
        if (head == "op-") return trig::omega(trig::Sign::Minus, angle(arity(s, 1)[0]));
        static const std::map<std::string, trig::HKMN> hk = {
            {"H", trig::HKMN::H}, {"K", trig::HKMN::K}, {"M", trig::HKMN::M}, {"N", trig::HKMN::N}};
        if (auto it = hk.find(head); it != hk.end())
            return trig::hkmn(it->second, angle(arity(s, 1)[0]), env_.symbol("Q"));
        bad(s, "unknown operator '" + head + "'");
    }

    AngleCombo angle(const Sexp& s) {
        if (!s.is_list()) return env_.angle(s.atom);
        const std::string& head = head_of(s);
        if (head == "a+" || head == "a-") {
            if (s.items.size() < 2) bad(s, head + " needs an argument");
            AngleCombo acc = angle(s.items[1]);
            if (head == "a-" && s.items.size() == 2) return -acc;
            for (std::size_t i = 2; i < s.items.size(); ++i)
                acc = head == "a+" ? acc + angle(s.items[i]) : acc - angle(s.items[i]);
            return acc;
        }
        if (head == "a*") {
            auto a = arity(s, 2);
            auto k = a[0].is_list() ? std::nullopt : as_number(a[0].atom);
            if (!k) bad(s, "a* needs a rational factor");
            return angle(a[1]).times(*k);
        }
        bad(s, "not an angle");
    }

private:
    static const std::string& head_of(const Sexp& s) {
        if (s.items[0].is_list()) throw Error(ErrorKind::Parse, "operator position holds a list");
        return s.items[0].atom;
    }

    std::vector<Sexp> arity(const Sexp& s, std::size_t n) {
        if (s.items.size() != n + 1)
            bad(s, "'" + s.items[0].atom + "' takes " + std::to_string(n) + " argument(s)");
        return {s.items.begin() + 1, s.items.end()};
    }

    [[noreturn]] void bad(const Sexp& s, const std::string& msg) {
        (void)s;
        throw Error(ErrorKind::Parse, msg);
    }

    const Environment& env_;
};

void apply_flag(IdentityRecord& r, const std::string& flag) {
    if (flag == "mod") r.modular = true;
    else if (flag == "plain") r.modular = false;
    else if (flag == "halfangle") r.halfangle = true;
    else if (flag == "derived") r.derived = true;
    else if (flag == "skipped-by-paper") r.status = RecordStatus::SkippedByPaper;
    else if (flag.rfind("subst:", 0) == 0) {
        auto eq = flag.find('=');
        if (eq == std::string::npos || eq == 6 || eq + 1 == flag.size())
            throw Error(ErrorKind::Parse, "bad substitution '" + flag + "'");
        r.substitutions.emplace_back(flag.substr(6, eq - 6), flag.substr(eq + 1));
    } else
        throw Error(ErrorKind::Parse, "unknown flag '" + flag + "'");
}

}  // namespace

std::vector<IdentityRecord> parse_manifest(const std::string& text) {
    std::vector<IdentityRecord> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split(t, '|');
        if (fields.size() != 5) throw parse_error(line, "expected 5 '|'-separated fields");
        IdentityRecord r;
        r.id = fields[0];
        r.env = fields[1];
        r.anchor = fields[3];
        r.expression = fields[4];
        r.line = line;
        if (r.id.empty()) throw parse_error(line, "empty id");
        if (!seen.insert(r.id).second) throw parse_error(line, "duplicate id " + r.id);
        try {
            if (fields[2] != "-")
                for (auto& f : split(fields[2], ',')) apply_flag(r, f);
        } catch (const Error& e) {
            throw parse_error(line, e.what());
        }
        if (r.status == RecordStatus::Active && (r.expression.empty() || r.expression == "-"))
            throw parse_error(line, "active record " + r.id + " has no expression");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IdentityRecord> load_manifest(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Io, "cannot read manifest " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_manifest(ss.str());
}

Expr parse_expression(const std::string& text, const Environment& env) {
    Sexp s = Reader(text).read_all();
    return Builder(env).expr(s);
}

}  // namespace cuboid::corpus
