#pragma once

#include "logpoly.hpp"

#include <sstream>
#include <string>

namespace qsym {
namespace render {

/// Dense polynomial in q, highest power first, compact signs: "q^2-2*q+1".
inline std::string compact_poly(const PolyQ& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        Rational c = f.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        Rational a = neg ? -c : c;
        bool unit_coeff = a.is_one() && i > 0;
        if (!unit_coeff) os << a.str();
        if (i > 0) {
            if (!unit_coeff) os << '*';
            os << 'q';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

/// Denominator as a product of parenthesized factors: "(q-1)^2*(q+1)".
inline std::string denominator(const RatFuncQ& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, e] : f.den_cyc()) {
        if (e == 0) continue;
        if (!first) os << '*';
        os << '(' << compact_poly(cyclotomic(d)) << ')';
        if (e > 1) os << '^' << e;
        first = false;
    }
    if (!f.den_other().is_one()) {
        if (!first) os << '*';
        os << '(' << compact_poly(f.den_other()) << ')';
        first = false;
    }
    if (first) return {};
    std::string s = os.str();
    if (s.find('*') != std::string::npos) s = "(" + s + ")";
    return s;
}

/// Polynomial in L with rational-function coefficients, one term per L power:
/// "1/(q-1) + (-q)*L/(q-1)^2". A unit numerator in front of L is dropped, so
/// the first value of the sequence renders as "L/(q-1)".
inline std::string logpoly(const LogPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= f.degree(); ++i) {
        const RatFuncQ& c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        std::string num = compact_poly(c.num());
        std::string den = denominator(c);
        bool wrote_head = false;
        if (i == 0 || num != "1") {
            bool bare = c.num().degree() <= 0 && !(c.num().coeff(0) < Rational(0));
            os << (bare ? num : "(" + num + ")");
            wrote_head = true;
        }
        if (i > 0) {
            if (wrote_head) os << '*';
            os << 'L';
            if (i > 1) os << '^' << i;
        }
        if (!den.empty()) os << '/' << den;
        first = false;
    }
    return os.str();
}

/// Dense polynomial in q, lowest power first with spaced signs:
/// "q + 4*q^2". Used where the natural reading order is by exponent.
inline std::string compact_ascending(const PolyQ& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= f.degree(); ++i) {
        Rational c = f.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? -c : c;
        bool unit_coeff = a.is_one() && i > 0;
        if (!unit_coeff) os << a.str();
        if (i > 0) {
            if (!unit_coeff) os << '*';
            os << 'q';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

/// Rational function in q alone: plain polynomial when the denominator is 1.
inline std::string ratfunc(const RatFuncQ& f) {
    std::string den = denominator(f);
    std::string num = compact_ascending(f.num());
    if (den.empty()) return num;
    bool bare = f.num().degree() <= 0;
    return (bare ? num : "(" + num + ")") + "/" + den;
}

} // namespace render
} // namespace qsym
