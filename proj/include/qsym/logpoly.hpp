#pragma once

#include "ratfunc.hpp"

#include <optional>

namespace qsym {

/// Polynomial in the formal symbol L over Q(q). L stands for the logarithm
/// of q, so substituting q -> q^w rescales L by w alongside the coefficient
/// substitution. Degrees stay tiny (at most 3 in this code base); storage is
/// dense with no trailing zeros.
class LogPoly {
public:
    LogPoly() = default;
    LogPoly(long v) { if (v != 0) c_.assign(1, RatFuncQ(v)); }
    LogPoly(const Rational& v) { if (!v.is_zero()) c_.assign(1, RatFuncQ(v)); }
    LogPoly(const RatFuncQ& v) { if (!v.is_zero()) c_.assign(1, v); }
    explicit LogPoly(std::vector<RatFuncQ> coeffs) : c_(std::move(coeffs)) { prune(); }

    static LogPoly monomial(long deg, const RatFuncQ& coeff) {
        LogPoly p;
        if (!coeff.is_zero()) {
            p.c_.assign(deg + 1, RatFuncQ());
            p.c_[deg] = coeff;
        }
        return p;
    }
    static LogPoly var_l() { return monomial(1, RatFuncQ(1)); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const RatFuncQ& coeff(long i) const {
        static const RatFuncQ zero;
        return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : zero;
    }
    const RatFuncQ& constant_term() const { return coeff(0); }
    const RatFuncQ& leading() const {
        if (is_zero()) throw std::domain_error("LogPoly: leading of zero");
        return c_.back();
    }

    LogPoly operator-() const {
        LogPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    LogPoly& operator+=(const LogPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        prune();
        return *this;
    }
    LogPoly& operator-=(const LogPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        prune();
        return *this;
    }
    friend LogPoly operator+(LogPoly a, const LogPoly& b) { a += b; return a; }
    friend LogPoly operator-(LogPoly a, const LogPoly& b) { a -= b; return a; }

    friend LogPoly operator*(const LogPoly& a, const LogPoly& b) {
        if (a.is_zero() || b.is_zero()) return LogPoly();
        LogPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFuncQ());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j].add_lazy(a.c_[i] * b.c_[j]);
            }
        }
        for (auto& c : r.c_) c.reduce();
        r.prune();
        return r;
    }
    LogPoly& operator*=(const LogPoly& o) { *this = *this * o; return *this; }

    LogPoly& scale(const RatFuncQ& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& c : c_) c *= s;
        prune();
        return *this;
    }
    LogPoly& scale(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& c : c_) c.scale(s);
        return *this;
    }
    friend LogPoly operator*(LogPoly a, const Rational& s) { a.scale(s); return a; }
    friend LogPoly operator*(const Rational& s, LogPoly a) { a.scale(s); return a; }
    friend LogPoly operator*(LogPoly a, const RatFuncQ& s) { a.scale(s); return a; }
    friend LogPoly operator*(const RatFuncQ& s, LogPoly a) { a.scale(s); return a; }

    /// Multiplies every coefficient by coeff * q^exp.
    LogPoly& mul_qpow(long exp, const Rational& coeff = Rational(1)) {
        if (coeff.is_zero()) { c_.clear(); return *this; }
        for (auto& c : c_) c.mul_monomial(exp, coeff);
        return *this;
    }

    friend bool operator==(const LogPoly& a, const LogPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LogPoly& a, const LogPoly& b) { return !(a == b); }
    friend bool operator<(const LogPoly& a, const LogPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    /// q -> q^w, L -> w*L.
    LogPoly substitute_power(long w) const {
        if (w < 1) throw std::invalid_argument("LogPoly: substitution power must be >= 1");
        if (w == 1 || is_zero()) return *this;
        LogPoly r;
        r.c_.reserve(c_.size());
        Rational wpow(1);
        for (size_t i = 0; i < c_.size(); ++i) {
            RatFuncQ c = c_[i].substitute_power(w);
            c.scale(wpow);
            r.c_.push_back(std::move(c));
            wpow *= Rational(w);
        }
        r.prune();
        return r;
    }

    /// Exact division; nullopt when the remainder is nonzero.
    std::optional<LogPoly> try_divide(const LogPoly& b) const {
        if (b.is_zero()) throw std::domain_error("LogPoly: division by zero");
        if (is_zero()) return LogPoly();
        if (b.is_constant()) {
            LogPoly r = *this;
            RatFuncQ inv = b.constant_term().inv();
            for (auto& c : r.c_) c *= inv;
            return r;
        }
        long db = b.degree();
        if (degree() < db) return std::nullopt;
        LogPoly rem = *this;
        std::vector<RatFuncQ> quo(degree() - db + 1);
        RatFuncQ lead_inv = b.leading().inv();
        for (long i = degree() - db; i >= 0; --i) {
            RatFuncQ c = rem.coeff(db + i) * lead_inv;
            if (!c.is_zero()) {
                quo[i] = c;
                rem -= monomial(i, c) * b;
            }
            if (rem.degree() >= db + i) return std::nullopt;
        }
        if (!rem.is_zero()) return std::nullopt;
        return LogPoly(std::move(quo));
    }

    // -- accumulation interface (deferred coefficient reduction) -------------
    void add_lazy(const LogPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i].add_lazy(o.c_[i]);
    }
    void reduce() {
        for (auto& c : c_) c.reduce();
        prune();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c_[i].str();
            bool wrap = cs.find_first_of("+-*/ ") != std::string::npos;
            if (i == 0) {
                out += wrap ? "(" + cs + ")" : cs;
            } else {
                if (!c_[i].is_one()) out += (wrap ? "(" + cs + ")" : cs) + "*";
                out += i == 1 ? "L" : "L^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<RatFuncQ> c_;
};

inline std::optional<LogPoly> try_exact_div(const LogPoly& a, const LogPoly& b) {
    return a.try_divide(b);
}
inline std::optional<RatFuncQ> try_exact_div(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
    return a / b;
}

} // namespace qsym
