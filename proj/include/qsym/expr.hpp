#pragma once

#include "qbernoulli.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace qsym {

// ---------------------------------------------------------------------------
// Symbolic summation expressions over three weight slots w1, w2, w3.
//
// An IdentityExpr denotes
//
//   scalar * sum_{parts} multinomial(n; parts) * sum_{residues} q^(...)
//          * prod_s w_s^(wexp_s) * prod B-factors * prod S-factors
//
// where `parts` runs over compositions of n of length sym_arity (indices
// 0..2) and each residue index (ids 3..4) runs from 0 to w_slot - 1. The
// factors are B_{order, q^base}(arg) and S_{order, q^base}(w_slot - 1), with
// arg a linear combination of one block variable and residue indices.

inline constexpr int kSymIdxCount = 3;
inline constexpr int kIdxCount = 5;

/// Linear form a0 + an*n + sum_j a[j]*index_j.
struct IdxForm {
    long a0 = 0, an = 0;
    std::array<long, kIdxCount> a{};

    static IdxForm constant(long c) { IdxForm f; f.a0 = c; return f; }
    static IdxForm of_n(long shift = 0) { IdxForm f; f.an = 1; f.a0 = shift; return f; }
    static IdxForm index(int j, long shift = 0) { IdxForm f; f.a.at(j) = 1; f.a0 = shift; return f; }

    long eval(long n, const std::array<long, kIdxCount>& v) const {
        long r = a0 + an * n;
        for (int j = 0; j < kIdxCount; ++j) r += a[j] * v[j];
        return r;
    }
    bool is_zero() const {
        if (a0 != 0 || an != 0) return false;
        return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
    }
    /// Inside a composition sum n is the sum of the composition indices.
    void fold_n(int sym_arity) {
        if (an == 0 || sym_arity == 0) return;
        for (int j = 0; j < sym_arity; ++j) a[j] += an;
        an = 0;
    }
    IdxForm renamed(const std::array<int, kIdxCount>& pi) const {
        IdxForm f;
        f.a0 = a0;
        f.an = an;
        for (int j = 0; j < kIdxCount; ++j) f.a[pi[j]] = a[j];
        return f;
    }
    void drop_index(int j) { a[j] = 0; }

    friend IdxForm operator+(IdxForm x, const IdxForm& y) {
        x.a0 += y.a0;
        x.an += y.an;
        for (int j = 0; j < kIdxCount; ++j) x.a[j] += y.a[j];
        return x;
    }
    friend IdxForm operator*(IdxForm x, long c) {
        x.a0 *= c;
        x.an *= c;
        for (auto& t : x.a) t *= c;
        return x;
    }
    auto tie() const { return std::tuple(a0, an, a); }
    friend bool operator==(const IdxForm& x, const IdxForm& y) { return x.tie() == y.tie(); }
    friend bool operator<(const IdxForm& x, const IdxForm& y) { return x.tie() < y.tie(); }

    std::string str() const {
        std::string s = "[" + std::to_string(a0) + ";" + std::to_string(an) + ";";
        for (int j = 0; j < kIdxCount; ++j) s += std::to_string(a[j]) + (j + 1 < kIdxCount ? "," : "]");
        return s;
    }
};

/// Monomial in the three weight slots; exponents may be negative.
struct SlotMono {
    std::array<int, 3> e{};

    static SlotMono one() { return {}; }
    static SlotMono slot(int s, int pow = 1) {
        SlotMono m;
        m.e.at(s) = pow;
        return m;
    }
    Rational value(const std::array<long, 3>& w) const {
        Rational r(1);
        for (int s = 0; s < 3; ++s)
            if (e[s] != 0) r *= Rational(w[s]).pow(e[s]);
        return r;
    }
    SlotMono permuted(const std::array<int, 3>& sigma) const {
        SlotMono m;
        for (int s = 0; s < 3; ++s) m.e[sigma[s]] = e[s];
        return m;
    }
    friend SlotMono operator*(SlotMono x, const SlotMono& y) {
        for (int s = 0; s < 3; ++s) x.e[s] += y.e[s];
        return x;
    }
    friend bool operator==(const SlotMono& x, const SlotMono& y) { return x.e == y.e; }
    friend bool operator<(const SlotMono& x, const SlotMono& y) { return x.e < y.e; }
    std::string str() const {
        return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
               std::to_string(e[2]) + ")";
    }
};

struct BArgTerm {
    Rational coef;
    SlotMono mono;
    int idx = -1; // residue index id, or -1 for a constant contribution
};

/// Argument of a B-factor: ycoef * ymono * yvar + sum of index terms.
struct BArg {
    Rational ycoef;
    SlotMono ymono;
    Var yvar = Var::y1;
    std::vector<BArgTerm> terms;

    static BArg block(Var v, SlotMono m = SlotMono::one(), Rational c = Rational(1)) {
        BArg a;
        a.ycoef = c;
        a.ymono = m;
        a.yvar = v;
        return a;
    }
    BArg& plus(Rational coef, SlotMono mono, int idx) {
        terms.push_back({std::move(coef), mono, idx});
        return *this;
    }
};

struct BFactor {
    IdxForm order;
    SlotMono base;
    BArg arg;
};
struct SFactor {
    IdxForm order;
    SlotMono base;
    int upper_slot = 0;
};
struct QPow {
    SlotMono scale;
    int idx = 3;
};
struct ResidueSum {
    int idx = 3;
    int bound_slot = 0;
};

struct IdentityExpr {
    int sym_arity = 0;
    Rational scalar = Rational(1);
    std::array<IdxForm, 3> wexp{};
    std::vector<ResidueSum> rsums;
    std::vector<QPow> qpows;
    std::vector<BFactor> bfactors;
    std::vector<SFactor> sfactors;

    IdentityExpr permuted_slots(const std::array<int, 3>& sigma) const {
        IdentityExpr r = *this;
        for (int s = 0; s < 3; ++s) r.wexp[sigma[s]] = wexp[s];
        for (auto& rs : r.rsums) rs.bound_slot = sigma[rs.bound_slot];
        for (auto& qp : r.qpows) qp.scale = qp.scale.permuted(sigma);
        for (auto& b : r.bfactors) {
            b.base = b.base.permuted(sigma);
            b.arg.ymono = b.arg.ymono.permuted(sigma);
            for (auto& t : b.arg.terms) t.mono = t.mono.permuted(sigma);
        }
        for (auto& s : r.sfactors) {
            s.base = s.base.permuted(sigma);
            s.upper_slot = sigma[s.upper_slot];
        }
        return r;
    }

    void fold() {
        for (auto& f : wexp) f.fold_n(sym_arity);
        for (auto& b : bfactors) b.order.fold_n(sym_arity);
        for (auto& s : sfactors) s.order.fold_n(sym_arity);
    }

    std::string canonical_string() const;
};

namespace detail {

inline void rename_indices(IdentityExpr& e, const std::array<int, kIdxCount>& pi) {
    for (auto& f : e.wexp) f = f.renamed(pi);
    for (auto& rs : e.rsums) rs.idx = pi[rs.idx];
    for (auto& qp : e.qpows) qp.idx = pi[qp.idx];
    for (auto& b : e.bfactors) {
        b.order = b.order.renamed(pi);
        for (auto& t : b.arg.terms)
            if (t.idx >= 0) t.idx = pi[t.idx];
    }
    for (auto& s : e.sfactors) s.order = s.order.renamed(pi);
}

inline std::string serialize(const IdentityExpr& e) {
    std::string s = "A" + std::to_string(e.sym_arity) + "|c" + e.scalar.str() + "|w";
    for (int i = 0; i < 3; ++i) s += e.wexp[i].str();
    std::vector<std::string> list;
    for (const auto& rs : e.rsums)
        list.push_back("#" + std::to_string(rs.idx) + "<" + std::to_string(rs.bound_slot));
    std::sort(list.begin(), list.end());
    s += "|R";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& qp : e.qpows)
        list.push_back(qp.scale.str() + "#" + std::to_string(qp.idx));
    std::sort(list.begin(), list.end());
    s += "|Q";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& b : e.bfactors) {
        std::string t = "B" + b.order.str() + "@" + b.base.str() + ":" + b.arg.ycoef.str() +
                        "*" + b.arg.ymono.str() + "*" + var_name(b.arg.yvar);
        std::vector<std::string> terms;
        for (const auto& at : b.arg.terms)
            terms.push_back("+" + at.coef.str() + "*" + at.mono.str() + "#" +
                            std::to_string(at.idx));
        std::sort(terms.begin(), terms.end());
        for (const auto& x : terms) t += x;
        list.push_back(t);
    }
    std::sort(list.begin(), list.end());
    s += "|";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& sf : e.sfactors)
        list.push_back("S" + sf.order.str() + "@" + sf.base.str() + "<" +
                       std::to_string(sf.upper_slot));
    std::sort(list.begin(), list.end());
    s += "|";
    for (const auto& x : list) s += x;
    return s;
}

/// All permutations of {0..count-1} extended by the identity elsewhere.
inline std::vector<std::array<int, kIdxCount>> index_renamings(int sym_count) {
    std::array<int, kIdxCount> base{0, 1, 2, 3, 4};
    std::vector<int> sym(sym_count);
    std::iota(sym.begin(), sym.end(), 0);
    std::vector<std::array<int, kIdxCount>> out;
    do {
        std::array<int, kIdxCount> pi = base;
        for (int j = 0; j < sym_count; ++j) pi[j] = sym[j];
        out.push_back(pi);
        std::array<int, kIdxCount> swapped = pi;
        std::swap(swapped[3], swapped[4]);
        out.push_back(swapped);
    } while (std::next_permutation(sym.begin(), sym.end()));
    return out;
}

} // namespace detail

inline std::string IdentityExpr::canonical_string() const {
    IdentityExpr folded = *this;
    folded.fold();
    std::string best;
    for (const auto& pi : detail::index_renamings(sym_arity)) {
        IdentityExpr r = folded;
        detail::rename_indices(r, pi);
        std::string s = detail::serialize(r);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

/// The distinct images of an expression under all slot permutations, in a
/// deterministic order (first occurrence of each canonical form).
inline std::vector<IdentityExpr> symmetry_orbit(const IdentityExpr& e) {
    std::array<int, 3> sigma{0, 1, 2};
    std::vector<IdentityExpr> out;
    std::vector<std::string> seen;
    do {
        IdentityExpr v = e.permuted_slots(sigma);
        std::string c = v.canonical_string();
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
            seen.push_back(std::move(c));
            out.push_back(std::move(v));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace qsym
