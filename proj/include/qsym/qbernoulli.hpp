#pragma once

#include "mpoly.hpp"
#include "series.hpp"

#include <deque>
#include <mutex>

namespace qsym {

/// n-th q-analogue Bernoulli number over the base q^w, an element of
/// Q(q)[L] determined by
///     B_0 = wL/(q^w - 1),
///     (q^w - 1) B_n = [n == 1] - q^w * sum_{k<n} C(n,k) B_k   (n >= 1),
/// i.e. the coefficients of the exponential generating function
/// (wL + t) / (q^w e^t - 1). Values are cached per base; the recurrence is
/// run natively over each base rather than substituting q -> q^w into the
/// base-1 values (the two routes are checked against each other in tests).
inline const LogPoly& qbernoulli_number(long n, long base = 1) {
    if (n < 0 || base < 1) throw std::invalid_argument("qbernoulli_number: bad arguments");
    static std::map<long, std::deque<LogPoly>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& seq = cache[base];
    while (static_cast<long>(seq.size()) <= n) {
        long m = static_cast<long>(seq.size());
        if (m == 0) {
            RatFuncQ c = RatFuncQ::from_cyc_den(PolyQ(base), RatFuncQ::qpow1_factors(base));
            seq.push_back(LogPoly::monomial(1, c));
            continue;
        }
        LogPoly acc;
        for (long k = 0; k < m; ++k)
            acc.add_lazy(seq[k] * Rational(binomial_z(m, k)));
        acc.reduce();
        acc.mul_qpow(base, Rational(-1)); // * (-q^base)
        if (m == 1) acc += LogPoly(1);
        RatFuncQ inv_qw1 = RatFuncQ::from_cyc_den(PolyQ(1), RatFuncQ::qpow1_factors(base));
        seq.push_back(acc * inv_qw1);
    }
    return seq[n];
}

/// B_n(arg) over base q^w: sum_k C(n,k) B_{k, q^w} arg^{n-k}, evaluated by
/// Horner in arg.
inline MPoly qbernoulli_poly(long n, const MPoly& arg, long base = 1) {
    MPoly acc(qbernoulli_number(0, base));
    for (long k = 1; k <= n; ++k) {
        acc *= arg;
        acc += MPoly(qbernoulli_number(k, base) * Rational(binomial_z(n, k)));
    }
    return acc;
}

/// sum_{i=0}^{upper} i^k q^{base*i} with 0^0 = 1; a polynomial in q.
inline RatFuncQ power_sum(long k, long upper, long base = 1) {
    if (k < 0 || upper < 0 || base < 1) throw std::invalid_argument("power_sum: bad arguments");
    std::vector<Rational> c(static_cast<size_t>(base) * upper + 1, Rational(0));
    for (long i = 0; i <= upper; ++i) {
        mpz_class p;
        if (i == 0) p = (k == 0) ? 1 : 0;
        else mpz_pow_ui(p.get_mpz_t(), mpz_class(i).get_mpz_t(), static_cast<unsigned long>(k));
        c[base * i] += Rational(p);
    }
    return RatFuncQ(PolyQ(std::move(c)));
}

/// Exponential generating function of the B-numbers over base q^w,
/// truncated: sum_n B_{n, q^w} t^n / n!.
inline TruncSeries<LogPoly> qbernoulli_series(long order, long base = 1) {
    TruncSeries<LogPoly> f(order);
    Rational inv_fact(1);
    for (long n = 0; n < order; ++n) {
        if (n > 0) inv_fact /= Rational(n);
        f.set_coeff(n, qbernoulli_number(n, base) * inv_fact);
    }
    return f;
}

/// Classical Bernoulli numbers (B_1 = -1/2 convention), cached.
inline const Rational& classical_bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("classical_bernoulli: negative index");
    static std::deque<Rational> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational acc = m == 0 ? Rational(1) : Rational(0);
        for (long k = 0; k < m; ++k)
            acc -= Rational(binomial_z(m + 1, k)) * cache[k];
        cache.push_back(acc / Rational(m + 1));
    }
    return cache[n];
}

} // namespace qsym
