#include <catch2/catch_amalgamated.hpp>

#include "qsym/eps.hpp"
#include "qsym/mpoly.hpp"

#include <random>

using namespace qsym;

namespace {

Rational rr(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

PolyQ rpoly(std::mt19937_64& rng, long maxdeg) {
    std::uniform_int_distribution<long> d(0, maxdeg);
    long deg = d(rng);
    std::vector<Rational> c;
    for (long i = 0; i <= deg; ++i) c.push_back(rr(rng));
    return PolyQ(std::move(c));
}

PolyQ rpoly_nonzero(std::mt19937_64& rng, long maxdeg) {
    PolyQ p = rpoly(rng, maxdeg);
    while (p.is_zero()) p = rpoly(rng, maxdeg);
    return p;
}

RatFuncQ rfrac(std::mt19937_64& rng) {
    PolyQ den(1);
    std::uniform_int_distribution<int> pick(0, 4), rep(1, 2);
    static const long cyc_choices[4] = {1, 2, 3, 4};
    int kind = pick(rng);
    if (kind < 4) {
        for (int i = rep(rng); i > 0; --i) den *= cyclotomic(cyc_choices[kind]);
        if (pick(rng) == 0) den *= cyclotomic(cyc_choices[(kind + 1) % 4]);
    } else {
        den = PolyQ(std::vector<Rational>{Rational(2), Rational(1)}); // q + 2
    }
    return RatFuncQ::normalize(rpoly(rng, 4), den);
}

LogPoly rlog(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(0, 2);
    long deg = d(rng);
    std::vector<RatFuncQ> c;
    for (long i = 0; i <= deg; ++i) c.push_back(rfrac(rng));
    return LogPoly(std::move(c));
}

MPoly rmpoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expd(0, 3), vard(0, kNumVars - 1);
    MPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        Mono m;
        m.e[vard(rng)] = static_cast<std::uint16_t>(expd(rng));
        m.e[vard(rng)] = static_cast<std::uint16_t>(expd(rng));
        p += MPoly::term(m, LogPoly(rfrac(rng)));
    }
    return p;
}

const PolyQ kQ = PolyQ::monomial(1, Rational(1));

} // namespace

TEST_CASE("rational arithmetic is canonical and exact") {
    REQUIRE(Rational(2, 6) == Rational(1, 3));
    REQUIRE(Rational(-2, -6) == Rational(1, 3));
    REQUIRE(Rational(2, -6) == Rational(-1, 3));
    REQUIRE(Rational::parse("-3/6") == Rational(-1, 2));
    REQUIRE(Rational::parse("7") == Rational(7));
    REQUIRE(Rational(3, 4) + Rational(1, 4) == Rational(1));
    REQUIRE(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    REQUIRE(Rational(2, 3).pow(-2) == Rational(9, 4));
    REQUIRE(Rational(5).pow(0) == Rational(1));
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    REQUIRE(Rational(22, 7).str() == "22/7");
    REQUIRE(rat_binomial(5, 2) == Rational(10));
    REQUIRE(rat_binomial(4, 7) == Rational(0));
    REQUIRE(binomial_z(40, 20) == mpz_class("137846528820"));
    REQUIRE(factorial_z(12) == mpz_class("479001600"));
}

TEST_CASE("univariate polynomials multiply, divide and evaluate") {
    std::mt19937_64 rng(0x5eed0001);

    SECTION("division roundtrip") {
        for (int it = 0; it < 40; ++it) {
            PolyQ a = rpoly(rng, 8), b = rpoly_nonzero(rng, 4);
            auto [quo, rem] = divmod(a, b);
            REQUIRE(quo * b + rem == a);
            REQUIRE(rem.degree() < b.degree());
        }
    }
    SECTION("exact division detects remainders") {
        PolyQ a = rpoly_nonzero(rng, 5), b = rpoly_nonzero(rng, 3);
        REQUIRE(*(a * b).div_exact(b) == a);
        PolyQ off = a * b + PolyQ(1);
        if (b.degree() > 0) REQUIRE(!off.div_exact(b).has_value());
    }
    SECTION("power substitution is a ring morphism") {
        for (int it = 0; it < 20; ++it) {
            PolyQ a = rpoly(rng, 5), b = rpoly(rng, 5);
            for (long w : {2, 3, 5}) {
                REQUIRE((a * b).substitute_power(w) ==
                        a.substitute_power(w) * b.substitute_power(w));
                REQUIRE((a + b).substitute_power(w) ==
                        a.substitute_power(w) + b.substitute_power(w));
            }
        }
        REQUIRE_THROWS_AS(kQ.substitute_power(0), std::invalid_argument);
    }
    SECTION("rendering") {
        PolyQ p(std::vector<Rational>{Rational(1), Rational(-2), Rational(0), Rational(1, 2)});
        REQUIRE(p.str() == "1 - 2*q + 1/2*q^3");
        REQUIRE(PolyQ().str() == "0");
    }
}

TEST_CASE("cyclotomic factors multiply back to q^n - 1") {
    REQUIRE(cyclotomic(1) == PolyQ(std::vector<Rational>{Rational(-1), Rational(1)}));
    REQUIRE(cyclotomic(2) == PolyQ(std::vector<Rational>{Rational(1), Rational(1)}));
    REQUIRE(cyclotomic(4) == PolyQ(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}));
    REQUIRE(cyclotomic(6) == PolyQ(std::vector<Rational>{Rational(1), Rational(-1), Rational(1)}));
    for (long n : {1, 2, 3, 4, 6, 8, 12, 15, 30}) {
        PolyQ prod(1);
        for (long d : detail::divisors(n)) prod *= cyclotomic(d);
        REQUIRE(prod == PolyQ::qpow_minus_one(n));
    }
}

TEST_CASE("gcd and the modular divisibility filter agree with exact division") {
    std::mt19937_64 rng(0x5eed0002);
    for (int it = 0; it < 30; ++it) {
        PolyQ a = rpoly_nonzero(rng, 4), b = rpoly_nonzero(rng, 4), g = rpoly_nonzero(rng, 3);
        PolyQ ga = a * g, gb = b * g;
        PolyQ h = poly_gcd(ga, gb);
        REQUIRE(ga.div_exact(h).has_value());
        REQUIRE(gb.div_exact(h).has_value());
        REQUIRE(h.div_exact(g.monic()).has_value());

        REQUIRE(modfilter::maybe_divides(g, ga));
        PolyQ shifted = ga + PolyQ(1);
        bool filter = modfilter::maybe_divides(g, shifted);
        bool exact = shifted.div_exact(g).has_value();
        if (!filter) REQUIRE(!exact); // rejection is always sound
    }
}

TEST_CASE("rational functions normalize to canonical reduced form") {
    const PolyQ qm1 = cyclotomic(1), qp1 = cyclotomic(2);

    SECTION("frozen examples") {
        RatFuncQ a = RatFuncQ::normalize(qm1 * qp1, qm1); // (q^2-1)/(q-1)
        REQUIRE(a.is_polynomial());
        REQUIRE(a.num() == qp1);
        REQUIRE(a.str() == "1 + q");

        RatFuncQ z = RatFuncQ::normalize(PolyQ(), PolyQ::monomial(3, Rational(1)));
        REQUIRE(z.is_zero());
        REQUIRE(z.str() == "0");

        RatFuncQ half_q = RatFuncQ::normalize(PolyQ::monomial(1, Rational(2)), PolyQ(4));
        REQUIRE(half_q.is_polynomial());
        REQUIRE(half_q.num() == PolyQ::monomial(1, Rational(1, 2)));

        RatFuncQ b = RatFuncQ::normalize(PolyQ(1), PolyQ::qpow_minus_one(6));
        REQUIRE(b.den_cyc() == RatFuncQ::CycMap({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
        REQUIRE(b.den_other().is_one());
        REQUIRE(b.den_expanded() == PolyQ::qpow_minus_one(6));
    }

    SECTION("denominators that are not products of cyclotomics") {
        PolyQ qp2(std::vector<Rational>{Rational(2), Rational(1)});
        RatFuncQ r = RatFuncQ::normalize(PolyQ(3), qm1 * qp2 * Rational(5));
        REQUIRE(r.den_cyc() == RatFuncQ::CycMap({{1, 1}}));
        REQUIRE(r.den_other() == qp2);
        REQUIRE(r.num() == PolyQ(Rational(3, 5)));
    }

    SECTION("normalization is idempotent") {
        std::mt19937_64 rng(0x5eed0003);
        for (int it = 0; it < 25; ++it) {
            RatFuncQ r = rfrac(rng);
            if (r.is_zero()) continue;
            REQUIRE(RatFuncQ::normalize(r.num(), r.den_expanded()) == r);
        }
    }
}

TEST_CASE("rational function field satisfies the field axioms") {
    std::mt19937_64 rng(0x5eed0004);
    for (int it = 0; it < 25; ++it) {
        RatFuncQ a = rfrac(rng), b = rfrac(rng), c = rfrac(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a - a == RatFuncQ());
        REQUIRE(a + RatFuncQ() == a);
        REQUIRE(a * RatFuncQ(1) == a);
        if (!a.is_zero()) {
            REQUIRE(a * a.inv() == RatFuncQ(1));
            REQUIRE(b / a * a == b);
        }
    }
}

TEST_CASE("rational function operations match floating point evaluation") {
    std::mt19937_64 rng(0x5eed0005);
    const double x = 1.37;
    for (int it = 0; it < 25; ++it) {
        RatFuncQ a = rfrac(rng), b = rfrac(rng);
        double lhs = (a * b + a - b).eval_double(x);
        double rhs = a.eval_double(x) * b.eval_double(x) + a.eval_double(x) - b.eval_double(x);
        REQUIRE_THAT(lhs, Catch::Matchers::WithinRel(rhs, 1e-9) ||
                              Catch::Matchers::WithinAbs(rhs, 1e-9));
    }
    RatFuncQ r = RatFuncQ::normalize(PolyQ(1), cyclotomic(1));
    REQUIRE(r.eval_rat(Rational(3)) == Rational(1, 2));
    REQUIRE_THROWS_AS(r.eval_rat(Rational(1)), std::domain_error);
}

TEST_CASE("rational function power substitution refactors denominators") {
    std::mt19937_64 rng(0x5eed0006);
    RatFuncQ base = RatFuncQ::normalize(PolyQ(1), cyclotomic(1)); // 1/(q-1)
    RatFuncQ sub = base.substitute_power(6);                      // 1/(q^6-1)
    REQUIRE(sub.den_cyc() == RatFuncQ::CycMap({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
    for (int it = 0; it < 15; ++it) {
        RatFuncQ a = rfrac(rng), b = rfrac(rng);
        for (long w : {2, 3}) {
            REQUIRE((a * b).substitute_power(w) ==
                    a.substitute_power(w) * b.substitute_power(w));
            REQUIRE((a + b).substitute_power(w) ==
                    a.substitute_power(w) + b.substitute_power(w));
        }
    }
}

TEST_CASE("lazy accumulation matches eager addition") {
    std::mt19937_64 rng(0x5eed0007);
    for (int it = 0; it < 10; ++it) {
        std::vector<RatFuncQ> vals;
        RatFuncQ eager;
        for (int k = 0; k < 8; ++k) {
            vals.push_back(rfrac(rng));
            eager += vals.back();
        }
        RatFuncQ lazy;
        for (const auto& v : vals) lazy.add_lazy(v);
        lazy.reduce();
        REQUIRE(lazy == eager);
    }
}

TEST_CASE("log polynomials divide exactly when possible") {
    std::mt19937_64 rng(0x5eed0008);
    for (int it = 0; it < 15; ++it) {
        LogPoly a = rlog(rng), b = rlog(rng);
        while (b.is_zero()) b = rlog(rng);
        auto q = (a * b).try_divide(b);
        REQUIRE(q.has_value());
        REQUIRE(*q == a);
        if (b.degree() > 0) {
            LogPoly off = a * b + LogPoly(1);
            auto bad = off.try_divide(b);
            if (bad) REQUIRE(*bad * b == off);
        }
    }
    LogPoly ell = LogPoly::var_l();
    REQUIRE(!LogPoly(1).try_divide(ell).has_value());
    REQUIRE(*(ell * ell).try_divide(ell) == ell);
}

TEST_CASE("log polynomial power substitution rescales the log symbol") {
    // L represents log q, so q -> q^w sends L to w*L
    LogPoly ell = LogPoly::var_l();
    REQUIRE(ell.substitute_power(3) == LogPoly(Rational(3)) * ell);
    RatFuncQ inv_qm1 = RatFuncQ::normalize(PolyQ(1), cyclotomic(1));
    LogPoly v = LogPoly::monomial(2, inv_qm1); // L^2/(q-1)
    LogPoly s = v.substitute_power(2);
    REQUIRE(s.coeff(2) == RatFuncQ::normalize(PolyQ(4), PolyQ::qpow_minus_one(2)));
    std::mt19937_64 rng(0x5eed0009);
    for (int it = 0; it < 10; ++it) {
        LogPoly a = rlog(rng), b = rlog(rng);
        REQUIRE((a * b).substitute_power(2) ==
                a.substitute_power(2) * b.substitute_power(2));
        REQUIRE((a + b).substitute_power(2) ==
                a.substitute_power(2) + b.substitute_power(2));
    }
}

TEST_CASE("multivariate polynomials form a commutative ring") {
    std::mt19937_64 rng(0x5eed000a);
    for (int it = 0; it < 10; ++it) {
        MPoly a = rmpoly(rng), b = rmpoly(rng), c = rmpoly(rng);
        REQUIRE(mpoly_equal(a + b, b + a));
        REQUIRE(mpoly_equal((a + b) + c, a + (b + c)));
        REQUIRE(mpoly_equal(a * b, b * a));
        REQUIRE(mpoly_equal(a * (b + c), a * b + a * c));
        REQUIRE(mpoly_equal((a * b) * c, a * (b * c)));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("multivariate division and perturbation detection") {
    MPoly x = MPoly::variable(Var::x), y1 = MPoly::variable(Var::y1);
    MPoly p = (x + y1) * (x - y1);
    REQUIRE(mpoly_equal(p, x * x - y1 * y1));

    auto q = try_exact_div(x * x * y1, x);
    REQUIRE(q.has_value());
    REQUIRE(mpoly_equal(*q, x * y1));
    REQUIRE(!try_exact_div(x + y1, x).has_value());

    MPoly perturbed = p;
    Mono m;
    m.e[static_cast<int>(Var::x)] = 2;
    perturbed.add_to_coeff(m, LogPoly(1));
    REQUIRE(!mpoly_equal(p, perturbed));
    MPoly diff = perturbed - p;
    REQUIRE(diff.term_count() == 1);
    REQUIRE(diff.terms().begin()->first == m);

    REQUIRE_THROWS_AS(x.pow(40) * x.pow(40), std::overflow_error);
}

TEST_CASE("series expansion around q = 1 reproduces known leading terms") {
    const RatFuncQ inv_qm1 = RatFuncQ::normalize(PolyQ(1), cyclotomic(1));

    SECTION("simple pole") {
        EpsLaurent e = eps_expand(inv_qm1, 2);
        REQUIRE(e.valuation() == -1);
        REQUIRE(e.coeff(-1) == Rational(1));
        REQUIRE(e.coeff(0) == Rational(0));
    }
    SECTION("logarithm series") {
        EpsLaurent e = eps_expand(LogPoly::var_l(), 3);
        REQUIRE(e.valuation() == 1);
        REQUIRE(e.coeff(1) == Rational(1));
        REQUIRE(e.coeff(2) == Rational(-1, 2));
        REQUIRE(e.coeff(3) == Rational(1, 3));
    }
    SECTION("log over simple pole has a finite limit") {
        LogPoly v = LogPoly::monomial(1, inv_qm1); // L/(q-1)
        EpsLaurent e = eps_expand(v, 3);
        REQUIRE(e.valuation() == 0);
        REQUIRE(e.coeff(0) == Rational(1));
        REQUIRE(e.coeff(1) == Rational(-1, 2));
        REQUIRE(e.coeff(2) == Rational(1, 3));
    }
    SECTION("exact polynomial expansion") {
        EpsLaurent e = eps_expand(PolyQ::qpow_minus_one(2)); // q^2-1 = 2eps + eps^2
        REQUIRE(e.is_exact());
        REQUIRE(e.coeff(0) == Rational(0));
        REQUIRE(e.coeff(1) == Rational(2));
        REQUIRE(e.coeff(2) == Rational(1));
    }
    SECTION("exact zero stays exact") {
        REQUIRE(eps_expand(LogPoly(), 4).is_exact_zero());
    }
}

TEST_CASE("laurent series arithmetic tracks precision honestly") {
    EpsLaurent a(-1, {Rational(1), Rational(2)}, 3); // eps^-1 + 2 + O(eps^3)
    EpsLaurent b(0, {Rational(1)}, 2);               // 1 + O(eps^2)
    EpsLaurent s = a + b;
    REQUIRE(s.prec() == 2);
    REQUIRE(s.coeff(-1) == Rational(1));
    REQUIRE(s.coeff(0) == Rational(3));
    REQUIRE_THROWS_AS(s.coeff(2), std::logic_error);

    EpsLaurent p = a * b;
    REQUIRE(p.prec() == 1); // error eps^-1 * O(eps^2)
    REQUIRE(p.coeff(-1) == Rational(1));
    REQUIRE(p.coeff(0) == Rational(2));

    // cancellation raises the valuation and shrinks relative precision
    EpsLaurent c1(-1, {Rational(1), Rational(5)}, 4);
    EpsLaurent c2(-1, {Rational(-1)}, 4);
    EpsLaurent d = c1 + c2;
    REQUIRE(d.valuation() == 0);
    REQUIRE(d.coeff(0) == Rational(5));

    auto quo = try_exact_div(EpsLaurent::monomial(2, Rational(6)),
                             EpsLaurent::monomial(1, Rational(2)));
    REQUIRE(quo.has_value());
    REQUIRE(*quo == EpsLaurent::monomial(1, Rational(3)));

    // (1 + eps) * (1 - eps + eps^2 - ...) == 1
    EpsLaurent one_plus(0, {Rational(1), Rational(1)}, kInfPrec);
    auto inv = try_exact_div(EpsLaurent(Rational(1)), one_plus);
    REQUIRE(inv.has_value());
    REQUIRE(inv->coeff(0) == Rational(1));
    REQUIRE(inv->coeff(1) == Rational(-1));
    REQUIRE(inv->coeff(2) == Rational(1));
    REQUIRE(!try_exact_div(one_plus, EpsLaurent()).has_value());
}
