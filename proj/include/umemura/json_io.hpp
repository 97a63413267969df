#pragma once

// Canonical JSON for polynomials: fixed variable order, grlex-sorted terms,
// decimal-string coefficients (they outgrow 64 bits fast), den > 0, gcd = 1.
// The encoding is the byte-stable interchange format for golden files and the
// cache, so nothing here may depend on locale or platform.

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "poly.hpp"
#include "rational.hpp"

namespace umemura {

inline const std::array<const char*, kNumVars>& json_var_names() {
    static const std::array<const char*, kNumVars> names = {"z",  "w",  "a", "b",
                                                            "b1", "b2", "v"};
    return names;
}

inline nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json out;
    out["vars"] = json_var_names();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coef] : p) {
        nlohmann::ordered_json t;
        t["num"] = coef.get_num().get_str();
        t["den"] = coef.get_den().get_str();
        t["exps"] = mono;
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

struct PolyDecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail_io {

[[noreturn]] inline void decode_fail(std::size_t term, const std::string& what) {
    std::ostringstream os;
    os << "poly decode: term " << term << ": " << what;
    throw PolyDecodeError(os.str());
}

inline mpz_class parse_decimal(const std::string& s, std::size_t term, const char* field) {
    if (s.empty()) decode_fail(term, std::string(field) + " is empty");
    const std::size_t digits = s[0] == '-' ? 1 : 0;
    if (s.size() == digits) decode_fail(term, std::string(field) + " has no digits");
    for (std::size_t i = digits; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            decode_fail(term, std::string(field) + " is not a decimal integer: " + s);
    }
    return mpz_class(s, 10);
}

}  // namespace detail_io

inline Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw PolyDecodeError("poly decode: expected an object with vars and terms");
    const auto& names = json_var_names();
    const auto& vars = j.at("vars");
    if (!vars.is_array() || vars.size() != kNumVars)
        throw PolyDecodeError("poly decode: vars must list the 7 canonical variables");
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (!vars.at(i).is_string() || vars.at(i).get<std::string>() != names[i])
            throw PolyDecodeError("poly decode: vars[" + std::to_string(i) +
                                  "] must be \"" + names[i] + "\"");
    }
    const auto& terms = j.at("terms");
    if (!terms.is_array()) throw PolyDecodeError("poly decode: terms must be an array");
    Poly p;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms.at(i);
        if (!t.is_object() || !t.contains("num") || !t.contains("den") || !t.contains("exps"))
            detail_io::decode_fail(i, "expected {num, den, exps}");
        if (!t.at("num").is_string() || !t.at("den").is_string())
            detail_io::decode_fail(i, "num and den must be decimal strings");
        const mpz_class num =
            detail_io::parse_decimal(t.at("num").get<std::string>(), i, "num");
        const mpz_class den =
            detail_io::parse_decimal(t.at("den").get<std::string>(), i, "den");
        if (den == 0) detail_io::decode_fail(i, "zero denominator");
        if (num == 0) detail_io::decode_fail(i, "zero term");
        const auto& exps = t.at("exps");
        if (!exps.is_array() || exps.size() != kNumVars)
            detail_io::decode_fail(i, "exps must hold 7 integers");
        Monomial mono = kMonoOne;
        for (std::size_t k = 0; k < kNumVars; ++k) {
            if (!exps.at(k).is_number_integer()) detail_io::decode_fail(i, "non-integer exponent");
            const long e = exps.at(k).get<long>();
            if (e < 0) detail_io::decode_fail(i, "negative exponent");
            mono[k] = static_cast<int>(e);
        }
        Rational c(num, den);
        c.canonicalize();
        auto [it, inserted] = p.try_emplace(mono, c);
        if (!inserted) detail_io::decode_fail(i, "duplicate monomial");
    }
    return p;
}

// Display form: terms by descending w-degree, then descending z-degree.
inline std::string poly_to_text(const Poly& p) {
    if (p.empty()) return "0";
    std::vector<const Poly::value_type*> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back(&t);
    std::stable_sort(terms.begin(), terms.end(), [](const auto* x, const auto* y) {
        if (x->first[VarW] != y->first[VarW]) return x->first[VarW] > y->first[VarW];
        if (x->first[VarZ] != y->first[VarZ]) return x->first[VarZ] > y->first[VarZ];
        return GrlexLess{}(y->first, x->first);
    });
    const auto& names = json_var_names();
    std::ostringstream os;
    bool first = true;
    for (const auto* t : terms) {
        const Rational& c = t->second;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t k = 0; k < kNumVars; ++k) {
            const int e = t->first[k];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[k];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << rat_str(mag);
        } else {
            if (mag != 1) os << rat_str(mag) << "*";
            os << vars;
        }
    }
    return os.str();
}

}  // namespace umemura
