#pragma once

#include "logpoly.hpp"

#include <limits>

namespace qsym {

inline constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;
inline constexpr long kMaxPoleOrder = 16;

/// Truncated Laurent series in eps, where q = 1 + eps. Stores exact rational
/// coefficients for exponents [start, start + len) together with an exclusive
/// precision bound: every exponent below `prec()` outside the stored window
/// is known to be zero, everything from `prec()` on is unknown. Exact values
/// (finite Laurent polynomials) carry infinite precision.
class EpsLaurent {
public:
    EpsLaurent() : start_(kInfPrec), prec_(kInfPrec) {}
    EpsLaurent(const Rational& v) : start_(0), prec_(kInfPrec) {
        if (v.is_zero()) start_ = kInfPrec;
        else c_.assign(1, v);
    }
    EpsLaurent(long v) : EpsLaurent(Rational(v)) {}
    EpsLaurent(long start, std::vector<Rational> coeffs, long prec)
        : start_(start), c_(std::move(coeffs)), prec_(prec) {
        normalize();
    }

    static EpsLaurent monomial(long exp, const Rational& coeff = Rational(1)) {
        return EpsLaurent(exp, {coeff}, kInfPrec);
    }
    /// The zero value known only up to O(eps^prec).
    static EpsLaurent approx_zero(long prec) { return EpsLaurent(prec, {}, prec); }

    /// True when every known coefficient is zero (exactly or within the
    /// precision window).
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return prec_ == kInfPrec; }
    bool is_exact_zero() const { return c_.empty() && is_exact(); }
    long prec() const { return prec_; }
    long valuation() const {
        if (c_.empty()) throw std::logic_error("EpsLaurent: valuation of zero");
        return start_;
    }
    /// Count of known coefficients from the valuation on.
    long rel_prec() const {
        if (is_exact()) return kInfPrec;
        return c_.empty() ? 0 : prec_ - start_;
    }

    /// Coefficient of eps^i; throws when i is at or beyond the precision bound.
    Rational coeff(long i) const {
        if (i >= prec_) throw std::logic_error("EpsLaurent: coefficient beyond precision");
        if (c_.empty() || i < start_ || i >= start_ + static_cast<long>(c_.size()))
            return Rational(0);
        return c_[i - start_];
    }

    EpsLaurent operator-() const {
        EpsLaurent r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b) {
        long prec = std::min(a.prec_, b.prec_);
        long start = std::min(a.window_start(), b.window_start());
        if (start >= prec) return approx_zero_or_exact(prec);
        long end = std::min(prec, std::max(a.window_end(), b.window_end()));
        EpsLaurent r;
        r.start_ = start;
        r.prec_ = prec;
        if (end > start) {
            r.c_.resize(end - start);
            for (long i = start; i < end; ++i) r.c_[i - start] = a.window_at(i) + b.window_at(i);
        }
        r.normalize();
        return r;
    }
    friend EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b) { return a + (-b); }

    friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return EpsLaurent();
        long prec = std::min(add_inf(a.window_start(), b.prec_),
                             add_inf(b.window_start(), a.prec_));
        if (a.c_.empty() || b.c_.empty()) return approx_zero_or_exact(prec);
        long start = a.start_ + b.start_;
        long end = std::min(prec, start + static_cast<long>(a.c_.size() + b.c_.size()) - 1);
        EpsLaurent r;
        r.start_ = start;
        r.prec_ = prec;
        if (end > start) {
            r.c_.assign(end - start, Rational(0));
            for (size_t i = 0; i < a.c_.size(); ++i) {
                if (a.c_[i].is_zero()) continue;
                for (size_t j = 0; j < b.c_.size(); ++j) {
                    long k = start + static_cast<long>(i + j);
                    if (k >= end) break;
                    r.c_[k - start] += a.c_[i] * b.c_[j];
                }
            }
        }
        r.normalize();
        return r;
    }

    EpsLaurent& operator+=(const EpsLaurent& o) { *this = *this + o; return *this; }
    EpsLaurent& operator-=(const EpsLaurent& o) { *this = *this - o; return *this; }
    EpsLaurent& operator*=(const EpsLaurent& o) { *this = *this * o; return *this; }

    EpsLaurent& scale(const Rational& s) {
        if (s.is_zero()) { c_.clear(); start_ = prec_; return *this; }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend EpsLaurent operator*(EpsLaurent a, const Rational& s) { a.scale(s); return a; }
    friend EpsLaurent operator*(const Rational& s, EpsLaurent a) { a.scale(s); return a; }

    /// Multiplies by eps^k.
    EpsLaurent shifted(long k) const {
        EpsLaurent r = *this;
        r.start_ = add_inf(r.start_, k);
        r.prec_ = add_inf(r.prec_, k);
        return r;
    }

    friend bool operator==(const EpsLaurent& a, const EpsLaurent& b) {
        return a.start_ == b.start_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }
    friend bool operator!=(const EpsLaurent& a, const EpsLaurent& b) { return !(a == b); }

    std::string str() const {
        if (is_exact_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long e = start_ + static_cast<long>(i);
            if (!out.empty()) out += " + ";
            if (e == 0) {
                out += c_[i].str();
            } else {
                if (!c_[i].is_one()) out += c_[i].str() + "*";
                out += e == 1 ? "eps" : "eps^" + std::to_string(e);
            }
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(eps^" + std::to_string(prec_) + ")";
        return out;
    }

private:
    static long add_inf(long a, long b) {
        return a >= kInfPrec || b >= kInfPrec ? kInfPrec : a + b;
    }
    static EpsLaurent approx_zero_or_exact(long prec) {
        return prec >= kInfPrec ? EpsLaurent() : approx_zero(prec);
    }
    long window_start() const { return c_.empty() ? prec_ : start_; }
    long window_end() const {
        return c_.empty() ? prec_ : start_ + static_cast<long>(c_.size());
    }
    Rational window_at(long i) const {
        if (c_.empty() || i < start_ || i >= window_end()) return Rational(0);
        return c_[i - start_];
    }

    void normalize() {
        if (start_ + static_cast<long>(c_.size()) > prec_)
            c_.resize(std::max<long>(0, prec_ - start_));
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + lead);
            start_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) start_ = prec_;
    }

    long start_;
    std::vector<Rational> c_;
    long prec_;
};

/// Division; nullopt when the divisor has no known nonzero coefficient. Two
/// exact multi-term operands fall back to a generous finite window so the
/// result is never silently wrong, only marked approximate.
inline std::optional<EpsLaurent> try_exact_div(const EpsLaurent& a, const EpsLaurent& b) {
    if (b.is_zero()) return std::nullopt;
    long vb = b.valuation();
    if (b.is_exact() && (b - EpsLaurent::monomial(vb, b.coeff(vb))).is_exact_zero()) {
        // single-term exact divisor: exact shift and scale
        EpsLaurent r = a.shifted(-vb);
        r.scale(b.coeff(vb).inv());
        return r;
    }
    if (a.is_exact_zero()) return EpsLaurent();
    long rel = std::min(a.rel_prec(), b.rel_prec());
    if (rel >= kInfPrec) rel = 64;
    if (a.is_zero()) return EpsLaurent::approx_zero(a.prec() - vb);
    long va = a.valuation();
    Rational lead_inv = b.coeff(vb).inv();
    std::vector<Rational> q(rel, Rational(0));
    std::vector<Rational> rem(rel, Rational(0));
    for (long i = 0; i < rel; ++i) {
        long idx = va + i;
        rem[i] = idx < a.prec() ? a.coeff(idx) : Rational(0);
    }
    for (long i = 0; i < rel; ++i) {
        Rational c = rem[i] * lead_inv;
        q[i] = c;
        if (c.is_zero()) continue;
        for (long j = i; j < rel; ++j) {
            long bidx = vb + (j - i);
            if (bidx >= b.prec()) break;
            rem[j] -= c * b.coeff(bidx);
        }
    }
    return EpsLaurent(va - vb, std::move(q), va - vb + rel);
}

namespace detail {

/// Coefficients of log(1 + eps) for exponents 1..nterms.
inline std::vector<Rational> log1p_coeffs(long nterms) {
    std::vector<Rational> v;
    v.reserve(nterms);
    for (long k = 1; k <= nterms; ++k) v.emplace_back(k % 2 == 1 ? 1 : -1, k);
    return v;
}

} // namespace detail

/// Exact substitution q = 1 + eps into a polynomial.
inline EpsLaurent eps_expand(const PolyQ& p) {
    std::vector<Rational> acc;
    for (long i = p.degree(); i >= 0; --i) {
        // acc = acc * (1 + eps) + p[i]
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j];
            next[j + 1] += acc[j];
        }
        if (next.empty()) next.assign(1, Rational(0));
        next[0] += p.coeff(i);
        acc = std::move(next);
    }
    return EpsLaurent(0, std::move(acc), kInfPrec);
}

/// Laurent expansion of a rational function around q = 1, carrying at least
/// `terms` coefficients from the true valuation on.
inline EpsLaurent eps_expand(const RatFuncQ& f, long terms) {
    if (f.is_zero()) return EpsLaurent();
    long m = f.pole_order_at_one();
    if (m > kMaxPoleOrder) throw std::overflow_error("eps_expand: pole order beyond bound");
    EpsLaurent num = eps_expand(f.num());
    EpsLaurent den = eps_expand(f.den_expanded());
    // den has valuation exactly m; cap both to the needed finite window so
    // the division returns a finite-precision result
    long va = num.valuation();
    long target = va - m + terms;
    EpsLaurent num_cut(num.valuation(), {}, target + m);
    num_cut += num;
    EpsLaurent den_cut(den.valuation(), {}, den.valuation() + terms + 1);
    den_cut += den;
    auto r = try_exact_div(num_cut, den_cut);
    if (!r) throw std::logic_error("eps_expand: denominator expansion vanished");
    return *r;
}

/// Laurent expansion of a value in Q(q)[L] around q = 1 (with L = log q),
/// carrying at least `terms` coefficients from the true valuation, or an
/// honest approximate zero if cancellation exceeds the search window.
inline EpsLaurent eps_expand(const LogPoly& g, long terms) {
    if (g.is_zero()) return EpsLaurent();
    long floor = 0;
    for (long i = 0; i <= g.degree(); ++i)
        floor = std::min(floor, i - g.coeff(i).pole_order_at_one());
    long extra = 2;
    while (true) {
        long target = floor + terms + extra;
        EpsLaurent log1p(1, detail::log1p_coeffs(std::max<long>(1, target)), target + 1);
        EpsLaurent acc = EpsLaurent::approx_zero(target);
        for (long i = g.degree(); i >= 0; --i) {
            acc *= log1p;
            if (!g.coeff(i).is_zero())
                acc += eps_expand(g.coeff(i), target + kMaxPoleOrder);
        }
        if (!acc.is_zero() && acc.prec() - acc.valuation() >= terms) return acc;
        if (acc.is_zero() && extra >= 64) return acc;
        extra *= 4;
    }
}

} // namespace qsym
