#pragma once

#include "rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qsym {

/// Power series in t truncated at a fixed order: coefficients for t^0 ..
/// t^{order-1} over any coefficient ring R supporting +, -, *, is_zero(),
/// scale-by-Rational via operator*(R, Rational), and an ADL-visible
/// try_exact_div(R, R) -> std::optional<R>.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(long order) : c_(order) {
        if (order < 1) throw std::invalid_argument("TruncSeries: order must be positive");
    }
    TruncSeries(long order, std::vector<R> coeffs) : TruncSeries(order) {
        if (static_cast<long>(coeffs.size()) > order)
            throw std::invalid_argument("TruncSeries: too many coefficients");
        for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    long order() const { return static_cast<long>(c_.size()); }
    const R& coeff(long k) const {
        if (k < 0 || k >= order()) throw std::out_of_range("TruncSeries: coefficient index");
        return c_[k];
    }
    void set_coeff(long k, R v) {
        if (k < 0 || k >= order()) throw std::out_of_range("TruncSeries: coefficient index");
        c_[k] = std::move(v);
    }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = R() - v;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r = a;
        for (long i = 0; i < r.order(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r = a;
        for (long i = 0; i < r.order(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_orders(a, b);
        TruncSeries r(a.order());
        for (long i = 0; i < a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (long j = 0; i + j < b.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries& operator-=(const TruncSeries& o) { *this = *this - o; return *this; }
    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }

    TruncSeries& scale(const Rational& s) {
        for (auto& v : c_) v = v * s;
        return *this;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    static void check_orders(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncSeries: mismatched truncation orders");
    }

    std::vector<R> c_;
};

/// Quotient a / b; every step divides exactly by the constant term of b and
/// throws when a coefficient fails to divide (the quotient would then leave
/// the coefficient ring).
template <class R>
TruncSeries<R> series_div(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_div: mismatched truncation orders");
    const R& b0 = b.coeff(0);
    if (b0.is_zero()) throw std::domain_error("series_div: divisor has zero constant term");
    TruncSeries<R> q(a.order());
    for (long k = 0; k < a.order(); ++k) {
        R acc = a.coeff(k);
        for (long j = 0; j < k; ++j) {
            if (q.coeff(j).is_zero() || b.coeff(k - j).is_zero()) continue;
            acc = acc - q.coeff(j) * b.coeff(k - j);
        }
        auto step = try_exact_div(acc, b0);
        if (!step) throw std::domain_error("series_div: coefficient not divisible");
        q.set_coeff(k, std::move(*step));
    }
    return q;
}

/// exp(c * t) truncated: sum_k c^k / k! t^k.
template <class R>
TruncSeries<R> exp_linear(const R& c, long order) {
    TruncSeries<R> r(order);
    r.set_coeff(0, R(Rational(1)));
    R power = c;
    Rational inv_fact(1);
    for (long k = 1; k < order; ++k) {
        inv_fact /= Rational(k);
        r.set_coeff(k, power * inv_fact);
        if (k + 1 < order) power = power * c;
    }
    return r;
}

} // namespace qsym
