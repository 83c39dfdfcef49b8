#pragma once

#include "rational.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace qsym {

// ---------------------------------------------------------------------------
// Fixed-precision p-adic numbers with pessimistic precision tracking.
//
// A nonzero value is stored as u * p^v with u a unit known modulo p^M (the
// relative precision). Addition can cancel leading digits, which honestly
// reduces the relative precision; multiplying or dividing by exact rationals
// preserves it. Two zero-like states exist: the exact zero, and an
// "approximate zero" O(p^A) whose digits below p^A are all known to vanish
// but about which nothing further is known.

class PadicNum {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    static PadicNum zero(long p) { return PadicNum(p, kExact, 0, 0); }
    static PadicNum approx_zero(long p, long abs_bound) { return PadicNum(p, abs_bound, 0, 0); }

    /// Value known exactly modulo p^abs_prec.
    static PadicNum from_integer_mod(long p, const mpz_class& z, long abs_prec) {
        return normalized(p, z, 0, abs_prec);
    }

    /// Exact rational embedded with rel_prec significant digits (the
    /// denominator must be coprime to p after removing powers of p).
    static PadicNum from_rational(long p, const Rational& r, long rel_prec) {
        if (r.is_zero()) return zero(p);
        check_p(p);
        if (rel_prec < 1) throw std::invalid_argument("relative precision must be positive");
        auto [vn, nu] = split_p(p, r.num());
        auto [vd, du] = split_p(p, r.den());
        mpz_class mod = ppow(p, rel_prec);
        mpz_class u = (nu * invert(du, mod)) % mod;
        if (u < 0) u += mod;
        return PadicNum(p, vn - vd, u, rel_prec);
    }

    long p() const { return p_; }
    bool is_exact_zero() const { return u_ == 0 && v_ == kExact; }
    /// All digits within the precision window vanish.
    bool is_zero_like() const { return u_ == 0; }
    long rel_prec() const { return M_; }

    /// Position of the first unknown digit (kExact for the exact zero).
    long abs_prec() const { return u_ == 0 ? v_ : v_ + M_; }

    long valuation() const {
        if (u_ == 0) throw std::domain_error("valuation of a zero-like value");
        return v_;
    }
    /// Valuation for nonzero values; for zero-like values, the bound showing
    /// how deep the zeros are known to reach.
    long valuation_bound() const { return v_; }

    const mpz_class& unit() const { return u_; }

    /// Value modulo p^k as an integer in [0, p^k); requires v >= 0 and at
    /// least k known digits.
    mpz_class residue(long k) const {
        if (is_exact_zero()) return 0;
        if (abs_prec() < k) throw std::domain_error("insufficient precision for residue");
        if (u_ == 0) return 0;
        if (v_ < 0) throw std::domain_error("negative valuation has no integer residue");
        return (u_ * ppow(p_, v_)) % ppow(p_, k);
    }

    friend PadicNum operator+(const PadicNum& a, const PadicNum& b) {
        a.check_same(b);
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        long A = std::min(a.abs_prec(), b.abs_prec());
        long s = std::min({a.u_ != 0 ? a.v_ : A, b.u_ != 0 ? b.v_ : A});
        mpz_class sum = 0;
        if (a.u_ != 0) sum += a.u_ * ppow(a.p_, a.v_ - s);
        if (b.u_ != 0) sum += b.u_ * ppow(b.p_, b.v_ - s);
        return normalized(a.p_, sum, s, A);
    }

    friend PadicNum operator-(const PadicNum& a) {
        if (a.u_ == 0) return a;
        PadicNum r = a;
        r.u_ = ppow(a.p_, a.M_) - a.u_;
        return r;
    }
    friend PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

    friend PadicNum operator*(const PadicNum& a, const PadicNum& b) {
        a.check_same(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.p_);
        if (a.u_ == 0 || b.u_ == 0) return approx_zero(a.p_, a.v_ + b.v_);
        long M = std::min(a.M_, b.M_);
        return PadicNum(a.p_, a.v_ + b.v_, (a.u_ * b.u_) % ppow(a.p_, M), M);
    }

    friend PadicNum operator/(const PadicNum& a, const PadicNum& b) {
        a.check_same(b);
        if (b.u_ == 0) throw std::domain_error("division by a zero-like p-adic value");
        if (a.is_exact_zero()) return a;
        if (a.u_ == 0) return approx_zero(a.p_, a.v_ - b.v_);
        long M = std::min(a.M_, b.M_);
        mpz_class mod = ppow(a.p_, M);
        return PadicNum(a.p_, a.v_ - b.v_, (a.u_ * invert(b.u_, mod)) % mod, M);
    }

    /// Exact rational scaling; the relative precision is preserved.
    PadicNum scaled(const Rational& r) const {
        if (r.is_zero()) return zero(p_);
        if (is_exact_zero()) return *this;
        auto [vn, nu] = split_p(p_, r.num());
        auto [vd, du] = split_p(p_, r.den());
        long shift = vn - vd;
        if (u_ == 0) return approx_zero(p_, v_ + shift);
        mpz_class mod = ppow(p_, M_);
        mpz_class u = (((u_ * nu) % mod) * invert(du, mod)) % mod;
        if (u < 0) u += mod;
        return PadicNum(p_, v_ + shift, u, M_);
    }

    std::string str() const {
        if (is_exact_zero()) return "0";
        if (u_ == 0) return "O(" + std::to_string(p_) + "^" + std::to_string(v_) + ")";
        std::string tail = " + O(" + std::to_string(p_) + "^" + std::to_string(v_ + M_) + ")";
        if (v_ >= 0) return mpz_class(u_ * ppow(p_, v_)).get_str() + tail;
        return u_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(v_) + tail;
    }

private:
    PadicNum(long p, long v, mpz_class u, long M) : p_(p), v_(v), u_(std::move(u)), M_(M) {
        check_p(p_);
    }

    static void check_p(long p) {
        if (p < 2) throw std::invalid_argument("p must be at least 2");
    }
    void check_same(const PadicNum& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    }
    static mpz_class ppow(long p, long k) {
        if (k < 0) throw std::logic_error("negative precision window");
        if (k > (1L << 20)) throw std::overflow_error("precision window too large");
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(k));
        return r;
    }
    static std::pair<long, mpz_class> split_p(long p, const mpz_class& z) {
        mpz_class u, pz(p);
        long v = static_cast<long>(mpz_remove(u.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
        return {v, u};
    }
    static mpz_class invert(const mpz_class& x, const mpz_class& mod) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("value not invertible modulo p^M");
        return inv;
    }

    /// Value s * p^scale known modulo p^abs_prec.
    static PadicNum normalized(long p, mpz_class s, long scale, long abs_prec) {
        check_p(p);
        long window = abs_prec - scale;
        if (window <= 0) return approx_zero(p, abs_prec);
        mpz_class mod = ppow(p, window);
        s %= mod;
        if (s < 0) s += mod;
        if (s == 0) return approx_zero(p, abs_prec);
        auto [vs, u] = split_p(p, s);
        long v = scale + vs;
        return PadicNum(p, v, u % ppow(p, abs_prec - v), abs_prec - v);
    }

    long p_;
    long v_;
    mpz_class u_;
    long M_;
};

/// p-adic logarithm via the alternating series in (x - 1); the argument must
/// be congruent to 1 modulo p with p odd, which makes every series term
/// integral enough for the truncation bound below.
inline PadicNum padic_log(const PadicNum& x) {
    const long p = x.p();
    if (p == 2) throw std::domain_error("log requires an odd p");
    if (x.is_zero_like()) throw std::domain_error("log of a zero-like value");
    PadicNum z = x - PadicNum::from_integer_mod(p, 1, x.abs_prec());
    if (z.is_exact_zero()) return PadicNum::zero(p);
    if (z.is_zero_like()) return PadicNum::approx_zero(p, z.abs_prec());
    const long zeta = z.valuation();
    if (zeta < 1) throw std::domain_error("log requires an argument congruent to 1 mod p");
    const long A = z.abs_prec();

    // Term k of the series has valuation k*zeta - v_p(k) >= k*zeta - flog(k)
    // where flog(k) = floor(log_p k). Because zeta >= 1 and flog increases by
    // at most one when k does, k*zeta - flog(k) is nondecreasing, so the scan
    // below may stop at the first k whose bound reaches the target precision.
    auto flog = [p](long k) {
        long e = 0;
        while (k >= p) {
            k /= p;
            ++e;
        }
        return e;
    };
    PadicNum acc = PadicNum::zero(p);
    PadicNum zk = z;
    for (long k = 1; k * zeta - flog(k) < A; ++k) {
        if (k > 1) zk = zk * z;
        acc = acc + zk.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return acc;
}

} // namespace qsym
