#pragma once

#include "padic.hpp"
#include "qbernoulli.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace qsym {

/// Evaluate a polynomial in L with rational-function coefficients at a
/// concrete rational q and a p-adic value for L, by Horner's rule. Each
/// coefficient is evaluated exactly in Q first and then embedded with rel
/// significant p-adic digits.
inline PadicNum eval_padic(const LogPoly& f, long p, const Rational& q,
                           const PadicNum& logq, long rel) {
    PadicNum acc = PadicNum::zero(p);
    for (long i = f.degree(); i >= 0; --i)
        acc = acc * logq + PadicNum::from_rational(p, f.coeff(i).eval_rat(q), rel);
    return acc;
}

/// Level-N moment p^{-N} * sum_{j=0}^{p^N-1} j^n q^j, computed as an exact
/// residue sum modulo p^{abs_prec+N} and then divided exactly by p^N, so the
/// result carries abs_prec correct digits. q may be any rational whose
/// denominator is invertible modulo p. Cached: the shift check reuses the
/// same moments for every n.
inline PadicNum volkenborn_moment(long p, const Rational& q, long n, long abs_prec,
                                  long N) {
    if (N < 1 || n < 0 || abs_prec < 1) throw std::invalid_argument("bad moment parameters");
    using Key = std::tuple<long, std::string, long, long, long>;
    static std::map<Key, PadicNum> cache;
    static std::mutex mtx;
    Key key{p, q.str(), n, abs_prec, N};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long pn = 1;
    for (long i = 0; i < N; ++i) pn *= p;
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(abs_prec + N));
    mpz_class qm, den = q.den();
    if (mpz_invert(qm.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::domain_error("denominator of q is not invertible modulo p");
    qm = mpz_class(qm * q.num()) % mod;
    if (qm < 0) qm += mod;
    mpz_class S = 0, qj = 1, jn;
    for (long j = 0; j < pn; ++j) {
        if (n == 0) {
            jn = 1;
        } else if (j == 0) {
            jn = 0;
        } else {
            mpz_powm_ui(jn.get_mpz_t(), mpz_class(j).get_mpz_t(),
                        static_cast<unsigned long>(n), mod.get_mpz_t());
        }
        S += jn * qj;
        S %= mod;
        qj = (qj * qm) % mod;
    }
    PadicNum r =
        PadicNum::from_integer_mod(p, S, abs_prec + N).scaled(Rational(1, pn));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.try_emplace(key, r).first->second;
}

/// Outcome of one p-adic witness run: the per-level valuations of a quantity
/// that should tend to zero, the valuation and precision of the reference
/// limit value, and the margin demanded of the final level.
struct WitnessReport {
    long p = 0;
    std::string q;
    long n = 0;
    std::vector<long> levels;
    std::vector<long> valuations;
    long reference_valuation = 0;
    long reference_precision = -1; ///< -1 when the limit is exactly zero
    long threshold = 0;
    bool monotone = false;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline bool nondecreasing(const std::vector<long>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

inline std::string witness_detail(const char* what, const WitnessReport& r) {
    std::ostringstream os;
    os << what << " p=" << r.p << " q=" << r.q << " n=" << r.n << ": valuations";
    for (long v : r.valuations) os << ' ' << v;
    os << "; limit valuation " << r.reference_valuation;
    if (r.reference_precision >= 0)
        os << " known to O(p^" << r.reference_precision << ")";
    os << "; final must reach " << r.threshold << (r.monotone ? "" : "; NOT monotone");
    return os.str();
}

inline long valuation_of(const PadicNum& x) { return x.valuation_bound(); }

inline void check_witness_params(long p, const Rational& q,
                                 const std::vector<long>& levels) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and at least 3");
    if (mpz_class(q.den() % p) == 0)
        throw std::invalid_argument("denominator of q must be coprime to p");
    Rational d = q - Rational(1);
    if (d.is_zero() || mpz_class(d.num() % p) != 0)
        throw std::invalid_argument("q must differ from 1 by a nonzero multiple of p");
    if (levels.empty()) throw std::invalid_argument("at least one level is required");
    for (size_t i = 0; i < levels.size(); ++i)
        if (levels[i] < 1 || (i > 0 && levels[i] <= levels[i - 1]))
            throw std::invalid_argument("levels must be increasing positive integers");
}

inline std::vector<long> default_levels(long nmax) {
    std::vector<long> v;
    for (long N = 1; N <= nmax; ++N) v.push_back(N);
    return v;
}

} // namespace detail

/// Witness that the level-N moments of j^n q^j converge to the degree-n
/// coefficient value of (log q + t)/(q e^t - 1): the valuations of the
/// differences must be nondecreasing in N and the final one must exceed the
/// limit's own valuation by at least 3 digits.
inline WitnessReport moment_check(long p, const Rational& q, long n, long abs_prec,
                                  const std::vector<long>& levels) {
    detail::check_witness_params(p, q, levels);
    WitnessReport r;
    r.p = p;
    r.q = q.str();
    r.n = n;
    r.levels = levels;
    const long rel = abs_prec + 4 * n + 32;
    PadicNum logq = padic_log(PadicNum::from_rational(p, q, rel + 4));
    PadicNum limit = eval_padic(qbernoulli_number(n), p, q, logq, rel);
    if (limit.abs_prec() < abs_prec + 1)
        throw std::logic_error("reference value computed with too little precision");
    r.reference_valuation = detail::valuation_of(limit);
    r.reference_precision = limit.abs_prec();
    for (long N : levels) {
        PadicNum d = volkenborn_moment(p, q, n, abs_prec, N) - limit;
        r.valuations.push_back(detail::valuation_of(d));
    }
    r.monotone = detail::nondecreasing(r.valuations);
    r.threshold = r.reference_valuation + 3;
    r.pass = r.monotone && r.valuations.back() >= r.threshold;
    r.detail = detail::witness_detail("moment", r);
    return r;
}

inline WitnessReport moment_check(long p, long n, long abs_prec = 12, long nmax = 5) {
    return moment_check(p, Rational(1 + p), n, abs_prec, detail::default_levels(nmax));
}

/// Witness for the moment-level shift relation: with V_N the level-N moments,
/// the combination q * sum_j C(n,j) V_N(j) - V_N(n) tends to log q for n = 0,
/// to 1 for n = 1 and to 0 otherwise. The report tracks the valuations of the
/// residual after subtracting that limit.
inline WitnessReport shift_check(long p, const Rational& q, long n, long abs_prec,
                                 const std::vector<long>& levels) {
    detail::check_witness_params(p, q, levels);
    WitnessReport r;
    r.p = p;
    r.q = q.str();
    r.n = n;
    r.levels = levels;
    PadicNum limit = PadicNum::zero(p);
    if (n == 0) limit = padic_log(PadicNum::from_rational(p, q, abs_prec + 6));
    if (n == 1) limit = PadicNum::from_integer_mod(p, 1, abs_prec + 6);
    r.reference_valuation = limit.is_zero_like() ? 0 : limit.valuation();
    r.reference_precision = limit.is_exact_zero() ? -1 : limit.abs_prec();
    for (long N : levels) {
        PadicNum sum = PadicNum::zero(p);
        for (long j = 0; j <= n; ++j)
            sum = sum + volkenborn_moment(p, q, j, abs_prec, N)
                            .scaled(Rational(binomial_z(n, j)));
        PadicNum d = sum.scaled(q) - volkenborn_moment(p, q, n, abs_prec, N) - limit;
        r.valuations.push_back(detail::valuation_of(d));
    }
    r.monotone = detail::nondecreasing(r.valuations);
    r.threshold = r.reference_valuation + 3;
    r.pass = r.monotone && r.valuations.back() >= r.threshold;
    r.detail = detail::witness_detail("shift", r);
    return r;
}

inline WitnessReport shift_check(long p, long n, long abs_prec = 12, long nmax = 5) {
    return shift_check(p, Rational(1 + p), n, abs_prec, detail::default_levels(nmax));
}

} // namespace qsym
