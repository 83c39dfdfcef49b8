#include <catch2/catch_amalgamated.hpp>

#include "qsym/closed_forms.hpp"

using namespace qsym;

namespace {

// sum_{i<count} q^{qstep*i} e^{(tstep*i) t}, expanded directly
TruncSeries<MPoly> geometric_series(long count, long qstep, long tstep, long order) {
    TruncSeries<MPoly> f(order);
    for (long k = 0; k < order; ++k) {
        PolyQ c;
        for (long i = 0; i < count; ++i) {
            mpz_class p;
            if (i == 0) p = (k == 0) ? 1 : 0;
            else mpz_pow_ui(p.get_mpz_t(), mpz_class(tstep * i).get_mpz_t(),
                            static_cast<unsigned long>(k));
            c += PolyQ::monomial(qstep * i, Rational(p));
        }
        c.scale(Rational(1, factorial_z(k)));
        f.set_coeff(k, MPoly(RatFuncQ(c)));
    }
    return f;
}

} // namespace

TEST_CASE("truncated series form a ring with exact division") {
    const long K = 8;

    SECTION("multiplication and division roundtrip") {
        TruncSeries<RatFuncQ> a(K), b(K);
        for (long k = 0; k < K; ++k) {
            a.set_coeff(k, RatFuncQ(PolyQ::monomial(k % 3, Rational(k + 1, 2))));
            b.set_coeff(k, RatFuncQ(PolyQ::monomial(k % 2, Rational(2 * k + 1, 3))));
        }
        REQUIRE(series_div(a * b, b) == a);
        REQUIRE(series_div(a, a).coeff(0) == RatFuncQ(1));
    }
    SECTION("division by a series with non-invertible constant term can still be exact") {
        // b = L + t over Q(q)[L]: dividing a*b by b recovers a even though
        // the constant term L is not invertible in the coefficient ring
        TruncSeries<LogPoly> a(K), b(K);
        for (long k = 0; k < K; ++k)
            a.set_coeff(k, LogPoly(RatFuncQ(PolyQ::monomial(1, Rational(k + 2)))));
        b.set_coeff(0, LogPoly::var_l());
        b.set_coeff(1, LogPoly(1));
        REQUIRE(series_div(a * b, b) == a);
        TruncSeries<LogPoly> one(K);
        one.set_coeff(0, LogPoly(1));
        REQUIRE_THROWS_AS(series_div(one, b), std::domain_error);
    }
    SECTION("order mismatch is rejected") {
        TruncSeries<RatFuncQ> a(4), b(5);
        REQUIRE_THROWS_AS(a + b, std::invalid_argument);
        REQUIRE_THROWS_AS(series_div(a, b), std::invalid_argument);
    }
}

TEST_CASE("exponential series obey the addition law") {
    const long K = 9;
    MPoly a = MPoly::variable(Var::y1) * Rational(2);
    MPoly b = MPoly::variable(Var::y2) - MPoly::variable(Var::y1);
    TruncSeries<MPoly> ea = exp_linear(a, K), eb = exp_linear(b, K);
    REQUIRE(ea * eb == exp_linear(a + b, K));

    TruncSeries<MPoly> one(K);
    one.set_coeff(0, MPoly(1));
    REQUIRE(ea * exp_linear(MPoly() - a, K) == one);
}

TEST_CASE("the geometric telescoping of exponential factors holds") {
    // (q^{aw} e^{aw t} - 1)/(q^a e^{a t} - 1) == sum_{i<w} q^{a i} e^{a i t}
    const long K = 8;
    for (long a : {1, 2, 3}) {
        for (long w : {1, 2, 4}) {
            TruncSeries<MPoly> lhs = series_div(qexp_factor(a * w, K), qexp_factor(a, K));
            REQUIRE(lhs == geometric_series(w, a, a, K));
        }
    }
}

TEST_CASE("quotient forms match explicit products of geometric sums") {
    const long K = 8;
    const std::array<long, 3> w{2, 3, 1};
    const long W = w[0] * w[1] * w[2];
    const std::array<long, 3> P{w[1] * w[2], w[0] * w[2], w[0] * w[1]};

    SECTION("fully replaced numerator") {
        TruncSeries<MPoly> expect =
            geometric_series(w[0], P[0], P[0], K) * geometric_series(w[1], P[1], P[1], K) *
            geometric_series(w[2], P[2], P[2], K);
        expect.scale(Rational(1, W));
        REQUIRE(closed_form(FormKind::cross, 3, w, K) == expect);
    }
    SECTION("ratio of the two denominator conventions") {
        TruncSeries<MPoly> expect =
            geometric_series(w[2], w[1], w[1], K) * geometric_series(w[0], w[2], w[2], K) *
            geometric_series(w[1], w[0], w[0], K);
        expect.scale(Rational(1, W));
        REQUIRE(closed_form(FormKind::mixed1, 0, w, K) == expect);
    }
    SECTION("degenerate weights collapse the ratio to one") {
        TruncSeries<MPoly> one(K);
        one.set_coeff(0, MPoly(1));
        REQUIRE(closed_form(FormKind::mixed1, 0, {1, 1, 1}, K) == one);
    }
}
