#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace qsym {

/// Maximum admitted exponent of q after power substitutions.
inline constexpr long kMaxQDegree = 1L << 20;

/// Dense univariate polynomial in q with rational coefficients.
///
/// Invariant: the coefficient vector carries no trailing zeros, so the zero
/// polynomial is the empty vector and degree() of a nonzero value is the
/// index of its last (nonzero) coefficient.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long v) { if (v != 0) c_.push_back(Rational(v)); }
    PolyQ(const Rational& v) { if (!v.is_zero()) c_.push_back(v); }
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }

    static PolyQ monomial(long exp, const Rational& coeff = Rational(1)) {
        if (exp < 0) throw std::invalid_argument("PolyQ: negative exponent");
        if (exp > kMaxQDegree) throw std::overflow_error("PolyQ: exponent exceeds cap");
        PolyQ p;
        if (!coeff.is_zero()) {
            p.c_.assign(static_cast<size_t>(exp) + 1, Rational(0));
            p.c_.back() = coeff;
        }
        return p;
    }

    /// q^n - 1.
    static PolyQ qpow_minus_one(long n) {
        PolyQ p = monomial(n);
        p -= PolyQ(1);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& coeff(size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("PolyQ: leading coefficient of zero");
        return c_.back();
    }

    Rational constant_term() const { return coeff(0); }

    PolyQ operator-() const {
        PolyQ r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    PolyQ& operator+=(const PolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        prune();
        return *this;
    }
    PolyQ& operator-=(const PolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        prune();
        return *this;
    }
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { a += b; return a; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { a -= b; return a; }

    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        PolyQ r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.prune();
        return r;
    }

    PolyQ& scale(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend PolyQ operator*(PolyQ a, const Rational& s) { a.scale(s); return a; }
    friend PolyQ operator*(const Rational& s, PolyQ a) { a.scale(s); return a; }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }
    friend bool operator<(const PolyQ& a, const PolyQ& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    /// Substitutes q -> q^w. Rejects w < 1 and results beyond the degree cap.
    PolyQ substitute_power(long w) const {
        if (w < 1) throw std::invalid_argument("PolyQ: substitution power must be >= 1");
        if (is_zero() || w == 1) return *this;
        if (degree() * w > kMaxQDegree) throw std::overflow_error("PolyQ: substituted exponent exceeds cap");
        PolyQ r;
        r.c_.assign(static_cast<size_t>(degree()) * w + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) r.c_[i * w] = c_[i];
        return r;
    }

    Rational eval_rat(const Rational& x) const {
        Rational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    double eval_double(double x) const {
        double r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
        return r;
    }

    /// Quotient and remainder; the divisor must be nonzero.
    friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
        if (b.is_zero()) throw std::domain_error("PolyQ: division by zero polynomial");
        if (a.degree() < b.degree()) return {PolyQ(), a};
        PolyQ rem = a;
        PolyQ quo;
        quo.c_.assign(a.c_.size() - b.c_.size() + 1, Rational(0));
        const Rational lead_inv = b.leading().inv();
        for (long i = a.degree(); i >= b.degree(); --i) {
            if (rem.coeff(static_cast<size_t>(i)).is_zero()) continue;
            Rational f = rem.c_[static_cast<size_t>(i)] * lead_inv;
            quo.c_[static_cast<size_t>(i - b.degree())] = f;
            for (long j = 0; j <= b.degree(); ++j)
                rem.c_[static_cast<size_t>(i - b.degree() + j)] -= f * b.c_[static_cast<size_t>(j)];
        }
        rem.prune();
        quo.prune();
        return {quo, rem};
    }

    /// Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<PolyQ> div_exact(const PolyQ& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    PolyQ monic() const {
        if (is_zero()) return *this;
        PolyQ r = *this;
        r.scale(leading().inv());
        return r;
    }

    std::string str() const;

private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Integer-cleared helpers and gcd.

/// Clears denominators and content: p == content * primitive, primitive an
/// integer polynomial with content 1 and positive leading coefficient.
inline std::pair<Rational, std::vector<mpz_class>> integer_primitive(const PolyQ& p) {
    if (p.is_zero()) return {Rational(0), {}};
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z(p.coeffs().size());
    mpz_class content = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        z[i] = c.num() * (den_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sgn(z.back()) < 0) content = -content;
    for (auto& x : z) x /= content;
    return {Rational(content, den_lcm), z};
}

namespace detail {

inline long zdeg(const std::vector<mpz_class>& a) {
    long d = static_cast<long>(a.size()) - 1;
    while (d >= 0 && a[static_cast<size_t>(d)] == 0) --d;
    return d;
}

/// Pseudo-remainder of a by b over the integers.
inline std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    long da = zdeg(a), db = zdeg(b);
    const mpz_class& lb = b[static_cast<size_t>(db)];
    while (da >= db) {
        mpz_class la = a[static_cast<size_t>(da)];
        for (long i = 0; i <= da; ++i) {
            a[static_cast<size_t>(i)] *= lb;
            if (i >= da - db) a[static_cast<size_t>(i)] -= la * b[static_cast<size_t>(i - (da - db))];
        }
        long nd = da - 1;
        while (nd >= 0 && a[static_cast<size_t>(nd)] == 0) --nd;
        da = nd;
    }
    a.resize(static_cast<size_t>(da + 1));
    return a;
}

inline void zcontent_normalize(std::vector<mpz_class>& a) {
    mpz_class g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    if (sgn(a[static_cast<size_t>(zdeg(a))]) < 0) g = -g;
    for (auto& x : a) x /= g;
}

} // namespace detail

/// Monic gcd over the rationals (subresultant PRS on integer-cleared inputs).
inline PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto A = integer_primitive(a).second;
    auto B = integer_primitive(b).second;
    if (detail::zdeg(A) < detail::zdeg(B)) std::swap(A, B);
    mpz_class g = 1, h = 1;
    while (true) {
        long da = detail::zdeg(A), db = detail::zdeg(B);
        long delta = da - db;
        auto R = detail::prem(A, B);
        if (detail::zdeg(R) < 0) break;
        if (detail::zdeg(R) == 0) {
            B.assign(1, mpz_class(1));
            break;
        }
        A = std::move(B);
        B = std::move(R);
        mpz_class divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        for (auto& x : B) x /= divisor;
        g = A[static_cast<size_t>(detail::zdeg(A))];
        mpz_class gpow = 1;
        for (long i = 0; i < delta; ++i) gpow *= g;
        if (delta > 0) {
            mpz_class hpow = 1;
            for (long i = 0; i < delta - 1; ++i) hpow *= h;
            h = gpow / hpow;
        }
    }
    detail::zcontent_normalize(B);
    std::vector<Rational> rc(B.size());
    for (size_t i = 0; i < B.size(); ++i) rc[i] = Rational(B[i]);
    return PolyQ(std::move(rc)).monic();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.

namespace detail {

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

/// d-th cyclotomic polynomial, cached. cyclotomic(1) == q - 1.
inline const PolyQ& cyclotomic(long d) {
    static std::map<long, PolyQ> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 1) throw std::invalid_argument("cyclotomic: index must be >= 1");
    PolyQ result = PolyQ::qpow_minus_one(d);
    for (long e : detail::divisors(d)) {
        if (e == d) continue;
        auto itE = cache.find(e);
        const PolyQ* phiE;
        if (itE != cache.end()) {
            phiE = &itE->second;
        } else {
            // fill recursively in ascending order; divisors() is sorted
            PolyQ sub = PolyQ::qpow_minus_one(e);
            for (long f : detail::divisors(e)) {
                if (f == e) continue;
                sub = *sub.div_exact(cache.at(f));
            }
            phiE = &cache.emplace(e, std::move(sub)).first->second;
        }
        result = *result.div_exact(*phiE);
    }
    return cache.emplace(d, std::move(result)).first->second;
}

// ---------------------------------------------------------------------------
// Fast modular divisibility filter.
//
// A sound "definitely not divisible" test: reduce both polynomials modulo a
// fixed 61-bit prime and divide there. A nonzero remainder rules divisibility
// out; a zero remainder must still be confirmed by exact division.

namespace modfilter {

inline constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

inline uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}

inline uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a) { return powmod(a, kP - 2); }

inline uint64_t reduce_mpz(const mpz_class& z) {
    mpz_class m = z % static_cast<unsigned long>(kP);
    if (m < 0) m += static_cast<unsigned long>(kP);
    return m.get_ui();
}

/// Rational coefficients mod kP; nullopt when a denominator vanishes mod kP.
inline std::optional<std::vector<uint64_t>> project(const PolyQ& p) {
    std::vector<uint64_t> r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) { r[i] = 0; continue; }
        uint64_t d = reduce_mpz(c.den());
        if (d == 0) return std::nullopt;
        uint64_t n = reduce_mpz(c.num());
        r[i] = mulmod(n, invmod(d));
    }
    return r;
}

/// False means "b definitely does not divide a"; true means "maybe".
inline bool maybe_divides(const PolyQ& b, const PolyQ& a) {
    if (a.is_zero()) return true;
    if (b.degree() > a.degree()) return false;
    auto am = project(a);
    auto bm = project(b);
    if (!am || !bm) return true;
    auto& rem = *am;
    const auto& div = *bm;
    long db = b.degree();
    uint64_t lead_inv = invmod(div[static_cast<size_t>(db)]);
    for (long i = a.degree(); i >= db; --i) {
        uint64_t c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        uint64_t f = mulmod(c, lead_inv);
        for (long j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            uint64_t sub = mulmod(f, div[static_cast<size_t>(j)]);
            rem[k] = rem[k] >= sub ? rem[k] - sub : rem[k] + kP - sub;
        }
    }
    for (long i = 0; i < db; ++i)
        if (rem[static_cast<size_t>(i)] != 0) return false;
    return true;
}

} // namespace modfilter

inline std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        if (i == 0) {
            out += a.str();
        } else {
            if (!a.is_one()) out += a.str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
        first = false;
    }
    return out;
}

} // namespace qsym
