#pragma once

#include "logpoly.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace qsym {

/// Variables available to the multivariate layer: one generic argument x and
/// the blocks y, y1, y2, y3 used by the symmetry statements.
enum class Var : int { x = 0, y = 1, y1 = 2, y2 = 3, y3 = 4 };
inline constexpr int kNumVars = 5;
inline constexpr long kMaxTotalDegree = 64;

inline const char* var_name(Var v) {
    static const char* names[kNumVars] = {"x", "y", "y1", "y2", "y3"};
    return names[static_cast<int>(v)];
}

struct Mono {
    std::array<std::uint16_t, kNumVars> e{};

    long total() const {
        long t = 0;
        for (auto v : e) t += v;
        return t;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

/// Graded lexicographic order, highest terms first in map iteration.
struct MonoGradedLexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        long ta = a.total(), tb = b.total();
        if (ta != tb) return ta > tb;
        return a.e > b.e;
    }
};

/// Sparse polynomial in x, y, y1, y2, y3 with LogPoly coefficients, i.e. an
/// element of Q(q)[L][x, y, y1, y2, y3]. Canonical form: no zero
/// coefficients stored, terms ordered graded-lex descending.
class MPoly {
public:
    using TermMap = std::map<Mono, LogPoly, MonoGradedLexGreater>;

    MPoly() = default;
    MPoly(long v) { if (v != 0) terms_[Mono{}] = LogPoly(v); }
    MPoly(const Rational& v) { if (!v.is_zero()) terms_[Mono{}] = LogPoly(v); }
    MPoly(const RatFuncQ& v) { if (!v.is_zero()) terms_[Mono{}] = LogPoly(v); }
    MPoly(const LogPoly& v) { if (!v.is_zero()) terms_[Mono{}] = v; }

    static MPoly variable(Var v, long exp = 1) {
        MPoly p;
        if (exp < 0) throw std::invalid_argument("MPoly: negative exponent");
        if (exp > kMaxTotalDegree) throw std::overflow_error("MPoly: degree cap exceeded");
        Mono m;
        m.e[static_cast<int>(v)] = static_cast<std::uint16_t>(exp);
        p.terms_[m] = LogPoly(1);
        return p;
    }
    static MPoly term(const Mono& m, const LogPoly& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
    }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    long total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
    const LogPoly& coeff(const Mono& m) const {
        static const LogPoly zero;
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }
    const LogPoly& constant_term() const { return coeff(Mono{}); }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    MPoly& operator-=(const MPoly& o) { return *this += -o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = mono_mul(ma, mb);
                r.terms_[m].add_lazy(ca * cb);
            }
        }
        r.finalize();
        return r;
    }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly pow(long k) const {
        if (k < 0) throw std::invalid_argument("MPoly: negative power");
        MPoly r(1);
        for (long i = 0; i < k; ++i) r *= *this;
        return r;
    }

    MPoly& scale(const LogPoly& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        prune();
        return *this;
    }
    MPoly& scale(const RatFuncQ& s) { return scale(LogPoly(s)); }
    MPoly& scale(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c.scale(s);
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rational& s) { a.scale(s); return a; }
    friend MPoly operator*(const Rational& s, MPoly a) { a.scale(s); return a; }
    friend MPoly operator*(MPoly a, const LogPoly& s) { a.scale(s); return a; }
    friend MPoly operator*(const LogPoly& s, MPoly a) { a.scale(s); return a; }

    /// Multiplies every coefficient by coeff * q^exp.
    MPoly& mul_qpow(long exp, const Rational& coeff = Rational(1)) {
        if (coeff.is_zero()) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c.mul_qpow(exp, coeff);
        return *this;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    friend bool operator<(const MPoly& a, const MPoly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        MonoGradedLexGreater gl;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first)) return gl(ib->first, ia->first);
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ib != b.terms_.end();
    }

    /// q -> q^w, L -> w*L applied to every coefficient.
    MPoly substitute_power(long w) const {
        MPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c.substitute_power(w);
        return r;
    }

    /// Adds delta to the coefficient of the given monomial in the given
    /// variable power; used to perturb values under test.
    MPoly& add_to_coeff(const Mono& m, const LogPoly& delta) {
        auto [it, fresh] = terms_.try_emplace(m, delta);
        if (!fresh) {
            it->second += delta;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    // -- accumulation interface (deferred coefficient reduction) -------------
    void add_lazy(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) terms_[m].add_lazy(c);
    }
    void finalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second.reduce();
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string cs = c.str();
            bool wrap = cs.find_first_of("+-*/ ") != std::string::npos;
            std::string vars;
            for (int i = 0; i < kNumVars; ++i) {
                if (m.e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += var_name(static_cast<Var>(i));
                if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
            }
            if (vars.empty()) {
                out += wrap ? "(" + cs + ")" : cs;
            } else if (c.is_one()) {
                out += vars;
            } else {
                out += (wrap ? "(" + cs + ")" : cs) + "*" + vars;
            }
        }
        return out;
    }

private:
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono m;
        long total = 0;
        for (int i = 0; i < kNumVars; ++i) {
            long s = static_cast<long>(a.e[i]) + b.e[i];
            total += s;
            m.e[i] = static_cast<std::uint16_t>(s);
        }
        if (total > kMaxTotalDegree) throw std::overflow_error("MPoly: degree cap exceeded");
        return m;
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    TermMap terms_;
};

/// Equality by checking that the difference normalizes to zero.
inline bool mpoly_equal(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

/// Exact division restricted to single-term divisors; nullopt otherwise or
/// when any exponent would go negative or a coefficient fails to divide.
inline std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
    if (a.is_zero()) return MPoly();
    if (b.term_count() != 1) return std::nullopt;
    const auto& [mb, cb] = *b.terms().begin();
    MPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) {
            if (ma.e[i] < mb.e[i]) return std::nullopt;
            m.e[i] = static_cast<std::uint16_t>(ma.e[i] - mb.e[i]);
        }
        auto q = ca.try_divide(cb);
        if (!q) return std::nullopt;
        r += MPoly::term(m, *q);
    }
    return r;
}

} // namespace qsym
