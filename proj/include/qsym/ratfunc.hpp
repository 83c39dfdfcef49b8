#pragma once

#include "polyq.hpp"

#include <map>
#include <mutex>

namespace qsym {

/// Element of the rational function field Q(q), kept in canonical form:
/// denominator monic with gcd(num, den) == 1, and zero represented as 0/1.
///
/// The denominator is stored factored: a product of cyclotomic polynomials
/// (map d -> exponent) times a monic cyclotomic-free remainder part. All
/// denominators produced by the q-Bernoulli recurrences and power-sum
/// arithmetic live entirely in the cyclotomic part, which makes reduction a
/// matter of trial division instead of general gcd computation.
class RatFuncQ {
public:
    using CycMap = std::map<long, long>;

    RatFuncQ() : other_(1) {}
    RatFuncQ(long v) : num_(v), other_(1) {}
    RatFuncQ(const Rational& v) : num_(v), other_(1) {}
    RatFuncQ(const PolyQ& p) : num_(p), other_(1) {}

    /// Canonical form of num/den for arbitrary polynomials; den must be nonzero.
    static RatFuncQ normalize(const PolyQ& num, const PolyQ& den) {
        if (den.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
        RatFuncQ r;
        r.num_ = num;
        r.split_in_denominator(den);
        r.reduce();
        return r;
    }

    /// num / prod_{(d,e)} cyclotomic(d)^e; hot-path constructor.
    static RatFuncQ from_cyc_den(PolyQ num, CycMap cyc) {
        RatFuncQ r;
        r.num_ = std::move(num);
        r.cyc_ = std::move(cyc);
        r.reduce();
        return r;
    }

    /// Factor map of (q^a - 1)^mult.
    static CycMap qpow1_factors(long a, long mult = 1) {
        CycMap m;
        for (long d : detail::divisors(a)) m[d] = mult;
        return m;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && cyc_.empty() && other_.is_one(); }
    bool is_polynomial() const { return cyc_.empty() && other_.is_one(); }
    bool is_rational() const { return is_polynomial() && num_.is_constant(); }

    const PolyQ& num() const { return num_; }
    const CycMap& den_cyc() const { return cyc_; }
    const PolyQ& den_other() const { return other_; }

    PolyQ den_expanded() const {
        PolyQ d(1);
        for (const auto& [idx, e] : cyc_)
            for (long i = 0; i < e; ++i) d *= cyclotomic(idx);
        if (!other_.is_one()) d *= other_;
        return d;
    }

    /// Multiplicity of the (q-1) factor in the denominator.
    long pole_order_at_one() const {
        auto it = cyc_.find(1);
        return it == cyc_.end() ? 0 : it->second;
    }

    RatFuncQ operator-() const {
        RatFuncQ r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        RatFuncQ r = a;
        r.add_lazy(b);
        r.reduce();
        return r;
    }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) return RatFuncQ();
        RatFuncQ r;
        r.num_ = a.num_ * b.num_;
        r.cyc_ = a.cyc_;
        for (const auto& [d, e] : b.cyc_) r.cyc_[d] += e;
        r.other_ = a.other_.is_one() ? b.other_ : (b.other_.is_one() ? a.other_ : a.other_ * b.other_);
        r.reduce();
        return r;
    }

    RatFuncQ& operator+=(const RatFuncQ& o) { *this = *this + o; return *this; }
    RatFuncQ& operator-=(const RatFuncQ& o) { *this = *this - o; return *this; }
    RatFuncQ& operator*=(const RatFuncQ& o) { *this = *this * o; return *this; }
    RatFuncQ& operator/=(const RatFuncQ& o) { *this = *this / o; return *this; }

    RatFuncQ inv() const {
        if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
        return normalize(den_expanded(), num_);
    }

    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
        if (a.is_zero()) return RatFuncQ();
        if (b.is_rational()) {
            RatFuncQ r = a;
            r.num_.scale(b.num_.constant_term().inv());
            return r;
        }
        return a * b.inv();
    }

    RatFuncQ& scale(const Rational& s) {
        if (s.is_zero()) { *this = RatFuncQ(); return *this; }
        num_.scale(s);
        return *this;
    }
    friend RatFuncQ operator*(RatFuncQ a, const Rational& s) { a.scale(s); return a; }
    friend RatFuncQ operator*(const Rational& s, RatFuncQ a) { a.scale(s); return a; }

    /// Multiplies by coeff * q^exp. A power of q is coprime to every
    /// cyclotomic polynomial, so only the non-cyclotomic denominator part
    /// can require rereduction.
    RatFuncQ& mul_monomial(long exp, const Rational& coeff = Rational(1)) {
        if (coeff.is_zero() || is_zero()) { *this = RatFuncQ(); return *this; }
        if (exp == 0) { num_.scale(coeff); return *this; }
        num_ = num_ * PolyQ::monomial(exp, coeff);
        if (!other_.is_one()) reduce_vs_other();
        return *this;
    }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.cyc_ == b.cyc_ && a.other_ == b.other_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }
    friend bool operator<(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.cyc_ != b.cyc_) return a.cyc_ < b.cyc_;
        if (a.other_ != b.other_) return a.other_ < b.other_;
        return a.num_ < b.num_;
    }

    /// q -> q^w on both numerator and denominator.
    RatFuncQ substitute_power(long w) const {
        if (w < 1) throw std::invalid_argument("RatFuncQ: substitution power must be >= 1");
        if (w == 1 || is_zero()) return *this;
        RatFuncQ r;
        r.num_ = num_.substitute_power(w);
        for (const auto& [d, e] : cyc_)
            for (const auto& [d2, e2] : cyclotomic_power_factors(d, w)) r.cyc_[d2] += e * e2;
        if (!other_.is_one()) {
            PolyQ den = r.den_expanded() * other_.substitute_power(w);
            return normalize(r.num_, den);
        }
        r.reduce();
        return r;
    }

    /// Exact value at a rational point; the denominator must not vanish there.
    Rational eval_rat(const Rational& x) const {
        Rational d(1);
        for (const auto& [idx, e] : cyc_) d *= cyclotomic(idx).eval_rat(x).pow(e);
        if (!other_.is_one()) d *= other_.eval_rat(x);
        if (d.is_zero()) throw std::domain_error("RatFuncQ: evaluation at a pole");
        return num_.eval_rat(x) / d;
    }

    double eval_double(double x) const {
        double d = 1;
        for (const auto& [idx, e] : cyc_)
            for (long i = 0; i < e; ++i) d *= cyclotomic(idx).eval_double(x);
        if (!other_.is_one()) d *= other_.eval_double(x);
        return num_.eval_double(x) / d;
    }

    std::string str() const {
        std::string n = num_.str();
        if (cyc_.empty() && other_.is_one()) return n;
        if (num_.degree() > 0) n = "(" + n + ")";
        std::string d;
        for (const auto& [idx, e] : cyc_) {
            if (!d.empty()) d += "*";
            d += "(" + cyclotomic(idx).str() + ")";
            if (e > 1) d += "^" + std::to_string(e);
        }
        if (!other_.is_one()) {
            if (!d.empty()) d += "*";
            d += "(" + other_.str() + ")";
        }
        bool composite = cyc_.size() + (other_.is_one() ? 0 : 1) > 1;
        return n + "/" + (composite ? "(" + d + ")" : d);
    }

    // -- accumulation interface (deferred reduction) -------------------------
    // Used by the polynomial layers above when summing many terms over a
    // shared denominator; callers must invoke reduce() before the value
    // escapes.

    void add_lazy(const RatFuncQ& o) {
        if (o.is_zero()) return;
        if (is_zero()) { *this = o; return; }
        if (cyc_ == o.cyc_ && other_ == o.other_) {
            num_ += o.num_;
            if (num_.is_zero()) { cyc_.clear(); other_ = PolyQ(1); }
            return;
        }
        // lcm of the cyclotomic parts
        CycMap lcm = cyc_;
        for (const auto& [d, e] : o.cyc_) {
            long& cur = lcm[d];
            cur = std::max(cur, e);
        }
        PolyQ cof_a(1), cof_b(1);
        for (const auto& [d, e] : lcm) {
            long ea = cyc_.count(d) ? cyc_.at(d) : 0;
            long eb = o.cyc_.count(d) ? o.cyc_.at(d) : 0;
            for (long i = 0; i < e - ea; ++i) cof_a *= cyclotomic(d);
            for (long i = 0; i < e - eb; ++i) cof_b *= cyclotomic(d);
        }
        PolyQ lcm_other = other_;
        if (other_ != o.other_) {
            PolyQ g = poly_gcd(other_, o.other_);
            PolyQ qa = *o.other_.div_exact(g);
            PolyQ qb = *other_.div_exact(g);
            lcm_other = other_ * qa;
            cof_a *= qa;
            cof_b *= qb;
        }
        num_ = num_ * cof_a + o.num_ * cof_b;
        cyc_ = std::move(lcm);
        other_ = lcm_other;
        if (num_.is_zero()) { cyc_.clear(); other_ = PolyQ(1); }
    }

    /// Restores the canonical-form invariant after lazy accumulation.
    void reduce() {
        if (num_.is_zero()) {
            cyc_.clear();
            other_ = PolyQ(1);
            return;
        }
        for (auto it = cyc_.begin(); it != cyc_.end();) {
            const PolyQ& phi = cyclotomic(it->first);
            while (it->second > 0 && modfilter::maybe_divides(phi, num_)) {
                auto q = num_.div_exact(phi);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            it = it->second == 0 ? cyc_.erase(it) : std::next(it);
        }
        if (!other_.is_one()) reduce_vs_other();
    }

private:
    void reduce_vs_other() {
        PolyQ g = poly_gcd(num_, other_);
        if (g.degree() > 0) {
            num_ = *num_.div_exact(g);
            other_ = *other_.div_exact(g);
        }
        if (other_.degree() == 0) {
            num_.scale(other_.constant_term().inv());
            other_ = PolyQ(1);
        }
    }

    /// Factors den into content * cyclotomics * monic rest; content and the
    /// rest's leading coefficient are folded into the numerator.
    void split_in_denominator(const PolyQ& den) {
        PolyQ rest = den;
        long degree_bound = rest.degree();
        for (long d = 1; rest.degree() > 0 && d <= 2 * degree_bound * degree_bound + 2; ++d) {
            const PolyQ& phi = cyclotomic(d);
            if (phi.degree() > rest.degree()) continue;
            while (modfilter::maybe_divides(phi, rest)) {
                auto q = rest.div_exact(phi);
                if (!q) break;
                rest = std::move(*q);
                ++cyc_[d];
            }
        }
        if (rest.degree() > 0) {
            Rational lead = rest.leading();
            other_ = rest.monic();
            num_.scale(lead.inv());
        } else {
            other_ = PolyQ(1);
            num_.scale(rest.constant_term().inv());
        }
    }

    /// Cyclotomic factorization of cyclotomic(d)(q^w), cached.
    static const CycMap& cyclotomic_power_factors(long d, long w) {
        static std::map<std::pair<long, long>, CycMap> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(d, w);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        PolyQ rest = cyclotomic(d).substitute_power(w);
        CycMap m;
        for (long e : detail::divisors(d * w)) {
            const PolyQ& phi = cyclotomic(e);
            while (rest.degree() >= phi.degree()) {
                if (!modfilter::maybe_divides(phi, rest)) break;
                auto q = rest.div_exact(phi);
                if (!q) break;
                rest = std::move(*q);
                ++m[e];
            }
            if (rest.degree() == 0) break;
        }
        if (rest.degree() != 0)
            throw std::logic_error("RatFuncQ: cyclotomic power factorization failed");
        return cache.emplace(key, std::move(m)).first->second;
    }

    PolyQ num_;
    CycMap cyc_;
    PolyQ other_;
};

} // namespace qsym
