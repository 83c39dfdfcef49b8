#pragma once

#include "catalog.hpp"
#include "eval.hpp"

namespace qsym {

// ---------------------------------------------------------------------------
// Drivers that decide identities by exact polynomial equality and report the
// first differing monomial on failure.

inline std::string mono_str(const Mono& m) {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        if (m.e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(v));
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    }
    return s.empty() ? "1" : s;
}

/// Deliberate single-coefficient perturbation of one variant, used to confirm
/// that the comparison detects and localizes any corruption.
struct FaultSpec {
    size_t variant = 0;
    Mono mono;
};

struct VariantCheck {
    bool pass = true;
    std::string detail;
    size_t mismatch_variant = 0;
    Mono mismatch_mono{};
};

namespace detail {

inline VariantCheck compare_values(const std::vector<MPoly>& vals,
                                   const std::vector<size_t>& owner, const char* label) {
    VariantCheck r;
    for (size_t j = 1; j < vals.size(); ++j) {
        MPoly diff = vals[j] - vals[0];
        if (diff.is_zero()) continue;
        r.pass = false;
        r.mismatch_variant = j;
        r.mismatch_mono = diff.terms().begin()->first;
        r.detail = std::string(label) + " " + std::to_string(owner.empty() ? j : owner[j]) +
                   " differs at monomial " + mono_str(r.mismatch_mono);
        return r;
    }
    return r;
}

} // namespace detail

struct FamilyReport {
    bool pass = true;
    std::string detail;
    size_t orbit = 0;    // symmetry variants generated
    size_t distinct = 0; // distinct instances after weight substitution
    Mono mismatch_mono{};
    std::vector<std::string> flags; // stated rows deviating from the orbit
};

inline FamilyReport verify_family(const Family& fam, long n, std::array<long, 3> w,
                                  const FaultSpec* fault = nullptr) {
    auto orbit = symmetry_orbit(fam.canonical);
    std::vector<InstExpr> insts;
    std::vector<std::string> keys;
    for (const auto& v : orbit) {
        InstExpr ie = instantiate(v, w);
        if (std::find(keys.begin(), keys.end(), ie.canonical) == keys.end()) {
            keys.push_back(ie.canonical);
            insts.push_back(std::move(ie));
        }
    }
    std::vector<MPoly> vals;
    vals.reserve(insts.size());
    for (const auto& ie : insts) vals.push_back(evaluate_cached(ie, n));
    if (fault && fault->variant < vals.size())
        vals[fault->variant].add_to_coeff(fault->mono, LogPoly(1));

    VariantCheck cmp = detail::compare_values(vals, {}, "variant");
    FamilyReport rep;
    rep.pass = cmp.pass;
    rep.detail = cmp.detail;
    rep.orbit = orbit.size();
    rep.distinct = vals.size();
    rep.mismatch_mono = cmp.mismatch_mono;
    if (fault) return rep; // perturbed values would poison the row audit

    auto audit = [&](const IdentityExpr& row, const std::string& label) {
        InstExpr ie = instantiate(row, w);
        if (std::find(keys.begin(), keys.end(), ie.canonical) != keys.end()) return;
        MPoly diff = evaluate_cached(ie, n) - vals[0];
        if (diff.is_zero()) return;
        rep.flags.push_back(label + " deviates from the symmetry orbit at monomial " +
                            mono_str(diff.terms().begin()->first));
    };
    for (size_t i = 0; i < fam.rows.size(); ++i)
        audit(fam.rows[i], "row " + std::to_string(i + 1));
    for (size_t i = 0; i < fam.restatements.size(); ++i)
        audit(fam.restatements[i], "restatement " + std::to_string(i + 1));
    return rep;
}

struct RowsReport {
    bool pass = true;
    std::string detail;
    size_t distinct = 0;
};

inline RowsReport verify_rows(const std::vector<IdentityExpr>& rows, std::array<long, 3> w,
                              long n) {
    std::vector<InstExpr> insts;
    std::vector<std::string> keys;
    std::vector<size_t> owner;
    for (size_t i = 0; i < rows.size(); ++i) {
        InstExpr ie = instantiate(rows[i], w);
        if (std::find(keys.begin(), keys.end(), ie.canonical) == keys.end()) {
            keys.push_back(ie.canonical);
            insts.push_back(std::move(ie));
            owner.push_back(i + 1);
        }
    }
    std::vector<MPoly> vals;
    vals.reserve(insts.size());
    for (const auto& ie : insts) vals.push_back(evaluate_cached(ie, n));
    VariantCheck cmp = detail::compare_values(vals, owner, "row");
    return {cmp.pass, cmp.detail, vals.size()};
}

struct CorollaryReport {
    bool pass = true;
    std::string detail;
    size_t distinct = 0;
};

/// Rows must agree with each other and with the parent family specialized to
/// the padded weights (scaled as recorded).
inline CorollaryReport verify_corollary(const Corollary& c, long n, std::array<long, 3> w) {
    RowsReport rr = verify_rows(c.rows, w, n);
    if (!rr.pass) return {false, rr.detail, rr.distinct};
    const Family& fam = catalog::family(c.parent);
    MPoly parent = evaluate_cached(instantiate(fam.canonical, w), n);
    parent.scale(c.parent_scale.value(w));
    MPoly diff = evaluate_cached(instantiate(c.rows[0], w), n) - parent;
    if (!diff.is_zero())
        return {false,
                "disagrees with " + c.parent + " at monomial " +
                    mono_str(diff.terms().begin()->first),
                rr.distinct};
    return {true, "", rr.distinct};
}

struct SeriesReport {
    bool pass = true;
    std::string detail;
};

/// The exponential generating function of the expression must match the
/// closed quotient form through the given truncation order.
inline SeriesReport verify_expansion(const Expansion& x, std::array<long, 3> w, long order) {
    TruncSeries<MPoly> closed = closed_form(x.kind, x.split, w, order);
    InstExpr ie = instantiate(x.expr, w);
    mpz_class fact(1);
    for (long n = 0; n < order; ++n) {
        if (n > 0) fact *= n;
        MPoly lhs = evaluate_cached(ie, n);
        lhs.scale(Rational(mpz_class(1), fact));
        MPoly diff = lhs - closed.coeff(n);
        if (!diff.is_zero())
            return {false, "coefficient mismatch at order " + std::to_string(n) +
                               ", monomial " + mono_str(diff.terms().begin()->first)};
    }
    return {};
}

/// Splitting the weights across blocks is equivalent to rescaling the whole
/// series: the cross form at the complementary weights must equal the direct
/// form with q -> q^W, coefficient transport included.
inline SeriesReport verify_substitution(std::array<long, 3> w, long order) {
    const long W = w[0] * w[1] * w[2];
    const std::array<long, 3> P{W / w[0], W / w[1], W / w[2]};
    for (int i = 0; i <= 3; ++i) {
        TruncSeries<MPoly> lhs = closed_form(FormKind::cross, i, P, order);
        TruncSeries<MPoly> rhs = rescale_series(closed_form(FormKind::direct, i, w, order), W);
        if (!(lhs == rhs)) return {false, "split " + std::to_string(i) + " mismatch"};
    }
    return {};
}

/// Coefficient-level scaling law: w * B_k(q) expands over the base change
/// q -> q^w with geometric weight sums.
inline bool scaling_identity_holds(long k, long wv) {
    LogPoly lhs = qbernoulli_number(k);
    lhs.scale(Rational(wv));
    LogPoly rhs;
    for (long l = 0; l <= k; ++l) {
        RatFuncQ coef(power_sum(l, wv - 1));
        coef.scale(rat_binomial(k, l) * Rational(wv).pow(k - l));
        LogPoly term = qbernoulli_number(k - l, wv);
        term.scale(coef);
        rhs = rhs + term;
    }
    return (lhs - rhs).is_zero();
}

/// Enumerates single-coefficient perturbations across every distinct variant
/// and every monomial of the common value (plus one absent monomial), and
/// requires each to be detected and localized exactly.
struct FaultSweepReport {
    size_t variants = 0;
    size_t cases = 0;
    size_t detected = 0;
    size_t localized = 0;
    bool pass = false;
};

inline FaultSweepReport fault_sweep(const Family& fam, long n, std::array<long, 3> w) {
    FaultSweepReport rep;
    FamilyReport base = verify_family(fam, n, w);
    if (!base.pass || base.distinct < 2) return rep;
    rep.variants = base.distinct;

    const MPoly& value = evaluate_cached(instantiate(symmetry_orbit(fam.canonical)[0], w), n);
    std::vector<Mono> monos;
    for (const auto& [m, c] : value.terms()) monos.push_back(m);
    Mono absent;
    absent.e[0] = static_cast<uint16_t>(value.total_degree() + 1);
    monos.push_back(absent);

    for (size_t v = 0; v < rep.variants; ++v) {
        for (const Mono& m : monos) {
            ++rep.cases;
            FaultSpec fault{v, m};
            FamilyReport r = verify_family(fam, n, w, &fault);
            if (!r.pass) {
                ++rep.detected;
                if (r.mismatch_mono == m) ++rep.localized;
            }
        }
    }
    rep.pass = rep.detected == rep.cases && rep.localized == rep.cases;
    return rep;
}

} // namespace qsym
