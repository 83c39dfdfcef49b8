#pragma once

#include "qbernoulli.hpp"

#include <array>

namespace qsym {

/// q^a e^{a t} - 1 truncated: constant term q^a - 1, then q^a a^k / k!.
inline TruncSeries<MPoly> qexp_factor(long a, long order) {
    TruncSeries<MPoly> f(order);
    f.set_coeff(0, MPoly(RatFuncQ(PolyQ::monomial(a, Rational(1)))) - MPoly(1));
    Rational coeff(1);
    for (long k = 1; k < order; ++k) {
        coeff *= Rational(a, k);
        f.set_coeff(k, MPoly(RatFuncQ(PolyQ::monomial(a, coeff))));
    }
    return f;
}

/// L + t.
inline TruncSeries<MPoly> log_plus_t(long order) {
    TruncSeries<MPoly> f(order);
    f.set_coeff(0, MPoly(LogPoly::var_l()));
    if (order > 1) f.set_coeff(1, MPoly(1));
    return f;
}

template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, long k) {
    TruncSeries<R> r(a.order());
    r.set_coeff(0, R(Rational(1)));
    for (long i = 0; i < k; ++i) r *= a;
    return r;
}

/// The four shapes of quotient expression behind the symmetry statements.
/// With W = w1 w2 w3 and P_a = W / w_a:
///   cross(i):  W^{2-i} (L+t)^{3-i} exp(W(y1+..+y_{3-i}) t) (q^W e^{Wt}-1)^i
///                / prod_a (q^{P_a} e^{P_a t} - 1)
///   direct(i): W^{1-i} (L+t)^{3-i} exp(W(y1+..+y_{3-i}) t) (q^W e^{Wt}-1)^i
///                / prod_a (q^{w_a} e^{w_a t} - 1)
///   mixed0:    W (L+t)^3 exp((P_1+P_2+P_3) y t) / prod_a (q^{w_a} e^{w_a t} - 1)
///   mixed1:    (1/W) prod_a (q^{P_a} e^{P_a t} - 1) / prod_a (q^{w_a} e^{w_a t} - 1)
enum class FormKind { cross, direct, mixed0, mixed1 };

inline TruncSeries<MPoly> closed_form(FormKind kind, int i, std::array<long, 3> w, long order) {
    const long W = w[0] * w[1] * w[2];
    const std::array<long, 3> P{w[1] * w[2], w[0] * w[2], w[0] * w[1]};
    const std::array<Var, 3> yvars{Var::y1, Var::y2, Var::y3};

    if (kind == FormKind::mixed1) {
        TruncSeries<MPoly> num(order), den(order);
        num = qexp_factor(P[0], order) * qexp_factor(P[1], order) * qexp_factor(P[2], order);
        den = qexp_factor(w[0], order) * qexp_factor(w[1], order) * qexp_factor(w[2], order);
        TruncSeries<MPoly> r = series_div(num, den);
        r.scale(Rational(1, W));
        return r;
    }
    if (kind == FormKind::mixed0) {
        MPoly arg = MPoly::variable(Var::y) * Rational(P[0] + P[1] + P[2]);
        TruncSeries<MPoly> num = series_pow(log_plus_t(order), 3) * exp_linear(arg, order);
        num.scale(Rational(W));
        TruncSeries<MPoly> den =
            qexp_factor(w[0], order) * qexp_factor(w[1], order) * qexp_factor(w[2], order);
        return series_div(num, den);
    }

    if (i < 0 || i > 3) throw std::invalid_argument("closed_form: bad replacement count");
    MPoly arg;
    for (int j = 0; j < 3 - i; ++j) arg += MPoly::variable(yvars[j]);
    arg.scale(Rational(W));
    TruncSeries<MPoly> num = series_pow(log_plus_t(order), 3 - i) * exp_linear(arg, order) *
                             series_pow(qexp_factor(W, order), i);
    num.scale(Rational(W).pow(kind == FormKind::cross ? 2 - i : 1 - i));
    TruncSeries<MPoly> den(order);
    if (kind == FormKind::cross)
        den = qexp_factor(P[0], order) * qexp_factor(P[1], order) * qexp_factor(P[2], order);
    else
        den = qexp_factor(w[0], order) * qexp_factor(w[1], order) * qexp_factor(w[2], order);
    return series_div(num, den);
}

/// q -> q^W, L -> W L, t -> W t applied coefficientwise to a series.
inline TruncSeries<MPoly> rescale_series(const TruncSeries<MPoly>& s, long W) {
    TruncSeries<MPoly> r(s.order());
    Rational wk(1);
    for (long k = 0; k < s.order(); ++k) {
        MPoly c = s.coeff(k).substitute_power(W);
        c.scale(wk);
        r.set_coeff(k, std::move(c));
        wk *= Rational(W);
    }
    return r;
}

} // namespace qsym
