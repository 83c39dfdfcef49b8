#pragma once

#include "expr.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace qsym {

// ---------------------------------------------------------------------------
// Instantiation of a symbolic expression at concrete weights, followed by
// exact evaluation to a multivariate polynomial. Instantiated expressions are
// normalized aggressively (weight factors split into prime powers, unit
// residue sums eliminated, summation indices renamed canonically) so that
// coincident instances from different symmetry variants or weight tuples get
// evaluated only once via a shared memo.

struct InstBArgTerm {
    Rational coef;
    int idx = 3;
};
struct InstBFactor {
    IdxForm order;
    long base = 1;
    Rational ycoef;
    Var yvar = Var::y1;
    std::vector<InstBArgTerm> terms;
};
struct InstSFactor {
    IdxForm order;
    long base = 1;
    long upper = 0;
};
struct InstQPow {
    long scale = 1;
    int idx = 3;
};
struct InstRSum {
    int idx = 3;
    long bound = 2;
};

struct InstExpr {
    int sym_arity = 0;
    Rational scalar = Rational(1);
    std::vector<std::pair<long, IdxForm>> wfactors; // prime -> exponent form
    std::vector<InstRSum> rsums;
    std::vector<InstQPow> qpows;
    std::vector<InstBFactor> bfactors;
    std::vector<InstSFactor> sfactors;
    std::string canonical;
};

namespace detail {

inline std::vector<std::pair<long, int>> factorize_small(long m) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

inline long integer_value(const SlotMono& m, const std::array<long, 3>& w, const char* what) {
    Rational v = m.value(w);
    if (v.den() != 1 || v.num() <= 0)
        throw std::logic_error(std::string(what) + " must be a positive integer");
    if (!v.num().fits_slong_p()) throw std::overflow_error("weight product too large");
    return v.num().get_si();
}

inline void rename_inst(InstExpr& e, const std::array<int, kIdxCount>& pi) {
    for (auto& [p, f] : e.wfactors) f = f.renamed(pi);
    for (auto& rs : e.rsums) rs.idx = pi[rs.idx];
    for (auto& qp : e.qpows) qp.idx = pi[qp.idx];
    for (auto& b : e.bfactors) {
        b.order = b.order.renamed(pi);
        for (auto& t : b.terms) t.idx = pi[t.idx];
    }
    for (auto& s : e.sfactors) s.order = s.order.renamed(pi);
}

inline std::string serialize_inst(const InstExpr& e) {
    std::string s = "A" + std::to_string(e.sym_arity) + "|c" + e.scalar.str() + "|w";
    for (const auto& [p, f] : e.wfactors) s += std::to_string(p) + "^" + f.str();
    std::vector<std::string> list;
    for (const auto& rs : e.rsums)
        list.push_back("#" + std::to_string(rs.idx) + "<" + std::to_string(rs.bound));
    std::sort(list.begin(), list.end());
    s += "|R";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& qp : e.qpows)
        list.push_back(std::to_string(qp.scale) + "#" + std::to_string(qp.idx));
    std::sort(list.begin(), list.end());
    s += "|Q";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& b : e.bfactors) {
        std::string t = "B" + b.order.str() + "@" + std::to_string(b.base) + ":" +
                        b.ycoef.str() + "*" + var_name(b.yvar);
        std::vector<std::string> terms;
        for (const auto& at : b.terms)
            terms.push_back("+" + at.coef.str() + "#" + std::to_string(at.idx));
        std::sort(terms.begin(), terms.end());
        for (const auto& x : terms) t += x;
        list.push_back(t);
    }
    std::sort(list.begin(), list.end());
    s += "|";
    for (const auto& x : list) s += x;
    list.clear();
    for (const auto& sf : e.sfactors)
        list.push_back("S" + sf.order.str() + "@" + std::to_string(sf.base) + "(" +
                       std::to_string(sf.upper) + ")");
    std::sort(list.begin(), list.end());
    s += "|";
    for (const auto& x : list) s += x;
    return s;
}

} // namespace detail

inline InstExpr instantiate(const IdentityExpr& sym, const std::array<long, 3>& w) {
    for (long v : w)
        if (v < 1) throw std::invalid_argument("weights must be positive");
    IdentityExpr e = sym;
    e.fold();

    // Residue sums over fewer than two values collapse to index = 0.
    std::set<int> dropped;
    InstExpr r;
    r.sym_arity = e.sym_arity;
    r.scalar = e.scalar;
    for (const auto& rs : e.rsums) {
        long bound = w[rs.bound_slot];
        if (bound >= 2)
            r.rsums.push_back({rs.idx, bound});
        else
            dropped.insert(rs.idx);
    }
    auto strip = [&dropped](IdxForm f) {
        for (int j : dropped) f.drop_index(j);
        return f;
    };

    std::map<long, IdxForm> primes;
    for (int s = 0; s < 3; ++s) {
        IdxForm f = strip(e.wexp[s]);
        if (f.is_zero()) continue;
        for (auto [p, m] : detail::factorize_small(w[s])) primes[p] = primes[p] + f * m;
    }
    for (auto& [p, f] : primes)
        if (!f.is_zero()) r.wfactors.push_back({p, f});

    std::map<int, long> qmerge;
    for (const auto& qp : e.qpows) {
        if (dropped.count(qp.idx)) continue;
        qmerge[qp.idx] += detail::integer_value(qp.scale, w, "q-power scale");
    }
    for (auto [idx, scale] : qmerge)
        if (scale != 0) r.qpows.push_back({scale, idx});

    for (const auto& b : e.bfactors) {
        InstBFactor ib;
        ib.order = strip(b.order);
        ib.base = detail::integer_value(b.base, w, "B-factor base");
        ib.ycoef = b.arg.ycoef * b.arg.ymono.value(w);
        ib.yvar = b.arg.yvar;
        std::map<int, Rational> tmerge;
        for (const auto& t : b.arg.terms) {
            if (dropped.count(t.idx)) continue;
            tmerge[t.idx] += t.coef * t.mono.value(w);
        }
        for (auto& [idx, coef] : tmerge)
            if (!coef.is_zero()) ib.terms.push_back({coef, idx});
        r.bfactors.push_back(std::move(ib));
    }
    for (const auto& s : e.sfactors) {
        InstSFactor is;
        is.order = strip(s.order);
        is.base = detail::integer_value(s.base, w, "S-factor base");
        is.upper = w[s.upper_slot] - 1;
        r.sfactors.push_back(is);
    }

    std::string best;
    for (const auto& pi : detail::index_renamings(r.sym_arity)) {
        InstExpr c = r;
        detail::rename_inst(c, pi);
        std::string s = detail::serialize_inst(c);
        if (best.empty() || s < best) best = std::move(s);
    }
    r.canonical = std::move(best);
    return r;
}

namespace detail {

/// Call fn(parts, multinomial) for every composition of n of given length.
template <typename F>
inline void for_each_composition(long n, int arity, F&& fn) {
    std::array<long, kSymIdxCount> parts{};
    if (arity == 0) {
        fn(parts, Rational(1));
        return;
    }
    std::vector<long> ks(arity);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == arity - 1) {
            ks[pos] = left;
            std::array<long, kSymIdxCount> p{};
            for (int j = 0; j < arity; ++j) p[j] = ks[j];
            fn(p, Rational(mpz_class(multinomial_z(ks))));
            return;
        }
        for (long v = 0; v <= left; ++v) {
            ks[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);
}

inline const RatFuncQ& power_sum_cached(long k, long upper, long base) {
    struct Key {
        long k, upper, base;
        auto tie() const { return std::tuple(k, upper, base); }
        bool operator<(const Key& o) const { return tie() < o.tie(); }
    };
    static std::map<Key, RatFuncQ> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, fresh] = cache.try_emplace({k, upper, base});
    if (fresh) it->second = power_sum(k, upper, base);
    return it->second;
}

inline const MPoly& bpoly_cached(long order, long base, const Rational& ycoef, Var yvar,
                                 const Rational& cst) {
    struct Key {
        long order, base;
        int yvar;
        Rational ycoef, cst;
        auto tie() const { return std::tuple(order, base, yvar, ycoef, cst); }
        bool operator<(const Key& o) const { return tie() < o.tie(); }
    };
    static std::map<Key, MPoly> cache;
    static std::mutex mtx;
    Key key{order, base, static_cast<int>(yvar), ycoef, cst};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MPoly arg;
    if (!ycoef.is_zero()) arg = arg + MPoly::variable(yvar).scale(ycoef);
    if (!cst.is_zero()) arg = arg + MPoly(cst);
    MPoly value = qbernoulli_poly(order, arg, base);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.try_emplace(key, std::move(value)).first->second;
}

} // namespace detail

/// Exact evaluation of an instantiated expression at outer degree n.
inline MPoly evaluate_inst(const InstExpr& e, long n) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    MPoly total;
    detail::for_each_composition(n, e.sym_arity, [&](const std::array<long, kSymIdxCount>& parts,
                                                     const Rational& multi) {
        std::array<long, kIdxCount> idx{};
        for (int j = 0; j < kSymIdxCount; ++j) idx[j] = parts[j];
        // residue loops (at most two)
        std::vector<long> bounds;
        for (const auto& rs : e.rsums) bounds.push_back(rs.bound);
        std::vector<long> rv(bounds.size(), 0);
        while (true) {
            for (size_t t = 0; t < rv.size(); ++t) idx[e.rsums[t].idx] = rv[t];

            Rational coef = e.scalar * multi;
            for (const auto& [p, f] : e.wfactors) coef *= Rational(p).pow(f.eval(n, idx));
            long qexp = 0;
            for (const auto& qp : e.qpows) qexp += qp.scale * idx[qp.idx];

            RatFuncQ scal(coef);
            bool zero = false;
            for (const auto& sf : e.sfactors) {
                long k = sf.order.eval(n, idx);
                if (k < 0) throw std::logic_error("negative S-factor order");
                const RatFuncQ& ps = detail::power_sum_cached(k, sf.upper, sf.base);
                if (ps.is_zero()) {
                    zero = true;
                    break;
                }
                scal = scal * ps;
            }
            if (!zero) {
                MPoly prod;
                bool have = false;
                for (const auto& b : e.bfactors) {
                    long k = b.order.eval(n, idx);
                    if (k < 0) throw std::logic_error("negative B-factor order");
                    Rational cst;
                    for (const auto& t : b.terms) cst += t.coef * Rational(idx[t.idx]);
                    const MPoly& bp = detail::bpoly_cached(k, b.base, b.ycoef, b.yvar, cst);
                    prod = have ? prod * bp : bp;
                    have = true;
                }
                if (!have) prod = MPoly(Rational(1));
                prod.scale(scal);
                if (qexp != 0) prod.mul_qpow(qexp);
                total.add_lazy(prod);
            }

            size_t t = 0;
            for (; t < rv.size(); ++t) {
                if (++rv[t] < bounds[t]) break;
                rv[t] = 0;
            }
            if (t == rv.size()) break;
        }
    });
    total.finalize();
    return total;
}

/// Memoized evaluation keyed by the canonical form; safe for concurrent use
/// and guarantees each distinct instance is computed exactly once.
inline const MPoly& evaluate_cached(const InstExpr& e, long n) {
    static std::map<std::string, std::shared_future<MPoly>> memo;
    static std::mutex mtx;
    const std::string key = e.canonical + "#n" + std::to_string(n);
    std::promise<MPoly> prom;
    std::shared_future<MPoly> fut;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it == memo.end()) {
            fut = prom.get_future().share();
            memo.emplace(key, fut);
            owner = true;
        } else {
            fut = it->second;
        }
    }
    if (owner) {
        try {
            prom.set_value(evaluate_inst(e, n));
        } catch (...) {
            prom.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

inline const MPoly& evaluate_at(const IdentityExpr& sym, const std::array<long, 3>& w, long n) {
    return evaluate_cached(instantiate(sym, w), n);
}

} // namespace qsym
