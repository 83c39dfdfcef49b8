#pragma once

#include "closed_forms.hpp"
#include "expr.hpp"

namespace qsym {

// ---------------------------------------------------------------------------
// The identity catalog. Each family states one canonical summation expression
// whose full symmetry orbit (under permutations of the weight slots) consists
// of expressions with equal values; `rows` lists the variants as explicitly
// stated, which are audited against the generated orbit. `restatements` are
// additional stated forms expected to coincide with orbit members up to a
// renaming of summation indices.

struct Family {
    std::string id;
    std::string blocks;
    IdentityExpr canonical;
    std::vector<IdentityExpr> rows;
    std::vector<IdentityExpr> restatements;
};

/// Specialization of a family to fewer live weight slots.
struct Corollary {
    std::string id;
    std::string parent;
    int arity = 2;          // live weight slots (trailing slots pinned to 1)
    SlotMono parent_scale;  // row value == parent value * parent_scale
    std::vector<IdentityExpr> rows;
};

/// A summation expression whose exponential generating function has a known
/// closed quotient form.
struct Expansion {
    std::string id;
    FormKind kind = FormKind::cross;
    int split = 0;
    IdentityExpr expr;
};

namespace catalog {

namespace dsl {

inline SlotMono w(int s) { return SlotMono::slot(s - 1); }
inline SlotMono w(int s, int t) { return SlotMono::slot(s - 1) * SlotMono::slot(t - 1); }
inline SlotMono wover(int s, int t) {
    SlotMono m;
    m.e.at(s - 1) += 1;
    m.e.at(t - 1) -= 1;
    return m;
}
inline SlotMono winv(int s) {
    SlotMono m;
    m.e.at(s - 1) = -1;
    return m;
}
/// Product of the two weight slots other than s.
inline SlotMono wco(int s) {
    SlotMono m;
    m.e = {1, 1, 1};
    m.e.at(s - 1) = 0;
    return m;
}
inline IdxForm kf() { return IdxForm::index(0); }
inline IdxForm lf() { return IdxForm::index(1); }
inline IdxForm mf() { return IdxForm::index(2); }
inline IdxForm nf(long shift = 0) { return IdxForm::of_n(shift); }
inline IdxForm cf(long c) { return IdxForm::constant(c); }
inline constexpr int I = 3, J = 4;
inline const Rational one{1};

} // namespace dsl

// ---- family row builders, parametrized by a slot pattern (a, b, c) ----

inline IdentityExpr f1_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    e.wexp[a - 1] = lf() + mf();
    e.wexp[b - 1] = kf() + mf();
    e.wexp[c - 1] = kf() + lf();
    e.bfactors = {{kf(), wco(a), BArg::block(Var::y1, w(a))},
                  {lf(), wco(b), BArg::block(Var::y2, w(b))},
                  {mf(), wco(c), BArg::block(Var::y3, w(c))}};
    return e;
}

inline IdentityExpr f2_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    e.wexp[a - 1] = lf() + mf();
    e.wexp[b - 1] = kf() + mf();
    e.wexp[c - 1] = kf() + lf() + cf(-1);
    e.bfactors = {{kf(), wco(a), BArg::block(Var::y1, w(a))},
                  {lf(), wco(b), BArg::block(Var::y2, w(b))}};
    e.sfactors = {{mf(), wco(c), c - 1}};
    return e;
}

inline IdentityExpr f3_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 2;
    e.wexp[a - 1] = nf(-1);
    e.wexp[b - 1] = kf();
    e.wexp[c - 1] = lf();
    e.rsums = {{I, a - 1}};
    e.qpows = {{w(b, c), I}};
    e.bfactors = {{kf(), w(a, b), BArg::block(Var::y1, w(c))},
                  {lf(), w(a, c), BArg::block(Var::y2, w(b)).plus(one, wover(b, a), I)}};
    return e;
}

inline IdentityExpr f4_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    e.wexp[a - 1] = lf() + mf();
    e.wexp[b - 1] = kf() + mf() + cf(-1);
    e.wexp[c - 1] = kf() + lf() + cf(-1);
    e.bfactors = {{kf(), wco(a), BArg::block(Var::y1, w(a))}};
    e.sfactors = {{lf(), wco(b), b - 1}, {mf(), wco(c), c - 1}};
    return e;
}

inline IdentityExpr f5_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 2;
    e.wexp[a - 1] = nf(-1);
    e.wexp[b - 1] = lf();
    e.wexp[c - 1] = kf() + cf(-1);
    e.rsums = {{I, a - 1}};
    e.qpows = {{w(b, c), I}};
    e.sfactors = {{lf(), w(a, b), c - 1}};
    e.bfactors = {{kf(), w(a, c), BArg::block(Var::y1, w(b)).plus(one, wover(b, a), I)}};
    return e;
}

inline IdentityExpr f6_row(int a, int b, int c) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 0;
    e.wexp[a - 1] = nf(-1);
    e.wexp[b - 1] = nf(-1);
    e.rsums = {{I, a - 1}, {J, b - 1}};
    e.qpows = {{w(b, c), I}, {w(a, c), J}};
    e.bfactors = {{nf(), w(a, b),
                   BArg::block(Var::y1, w(c))
                       .plus(one, wover(c, a), I)
                       .plus(one, wover(c, b), J)}};
    return e;
}

/// Three single-base B-blocks sharing one variable; f[j] = (base slot,
/// argument slot) for summation index j.
inline IdentityExpr btriple(std::array<std::array<int, 2>, 3> f) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    for (int j = 0; j < 3; ++j) {
        e.wexp[f[j][0] - 1] = IdxForm::index(j);
        e.bfactors.push_back({IdxForm::index(j), w(f[j][0]), BArg::block(Var::y, w(f[j][1]))});
    }
    return e;
}

/// Three single-base S-blocks; f[j] = (base slot, upper slot) for index j.
inline IdentityExpr striple(std::array<std::array<int, 2>, 3> f) {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    for (int j = 0; j < 3; ++j) {
        e.wexp[f[j][0] - 1] = IdxForm::index(j) + cf(-1);
        e.sfactors.push_back({IdxForm::index(j), w(f[j][0]), f[j][1] - 1});
    }
    return e;
}

inline IdentityExpr x7_expr() {
    using namespace dsl;
    IdentityExpr e;
    e.sym_arity = 3;
    e.wexp[0] = lf() + mf() + cf(-1);
    e.wexp[1] = kf() + mf() + cf(-1);
    e.wexp[2] = kf() + lf() + cf(-1);
    e.sfactors = {{kf(), wco(1), 0}, {lf(), wco(2), 1}, {mf(), wco(3), 2}};
    return e;
}

inline const std::vector<Family>& families() {
    using namespace dsl;
    static const std::vector<Family> fams = [] {
        std::vector<Family> v;

        v.push_back({"F1",
                     "three B-blocks",
                     f1_row(1, 2, 3),
                     {f1_row(1, 2, 3), f1_row(1, 3, 2), f1_row(2, 1, 3), f1_row(2, 3, 1),
                      f1_row(3, 1, 2), f1_row(3, 2, 1)},
                     {}});

        v.push_back({"F2",
                     "two B-blocks, one S-block",
                     f2_row(1, 2, 3),
                     {f2_row(1, 2, 3), f2_row(1, 3, 2), f2_row(2, 1, 3), f2_row(2, 3, 1),
                      f2_row(3, 2, 1), f2_row(3, 1, 2)},
                     {}});

        v.push_back({"F3",
                     "two B-blocks, residue sum",
                     f3_row(1, 2, 3),
                     {f3_row(1, 2, 3), f3_row(1, 3, 2), f3_row(2, 1, 3), f3_row(2, 3, 1),
                      f3_row(3, 1, 2), f3_row(3, 2, 1)},
                     {}});

        v.push_back({"F4",
                     "one B-block, two S-blocks",
                     f4_row(1, 2, 3),
                     {f4_row(1, 2, 3), f4_row(2, 3, 1), f4_row(3, 1, 2)},
                     {f4_row(1, 3, 2), f4_row(2, 1, 3), f4_row(3, 2, 1)}});

        // Row 4 is stated with the slot-(2,3,1) pattern except that the
        // residue term divides by w1 where the pattern yields w2; it is kept
        // exactly as stated so the audit reports the deviation.
        IdentityExpr f5r4 = f5_row(2, 3, 1);
        f5r4.bfactors[0].arg.terms[0].mono = wover(3, 1);
        v.push_back({"F5",
                     "B-block and S-block, residue sum",
                     f5_row(1, 2, 3),
                     {f5_row(1, 2, 3), f5_row(1, 3, 2), f5_row(2, 1, 3), f5r4, f5_row(3, 1, 2),
                      f5_row(3, 2, 1)},
                     {}});

        v.push_back({"F6",
                     "one B-block, double residue sum",
                     f6_row(1, 2, 3),
                     {f6_row(1, 2, 3), f6_row(2, 3, 1), f6_row(3, 1, 2)},
                     {}});

        v.push_back({"F7",
                     "three B-blocks, shared variable",
                     btriple({{{3, 1}, {1, 2}, {2, 3}}}),
                     {btriple({{{3, 1}, {1, 2}, {2, 3}}}), btriple({{{2, 1}, {1, 3}, {3, 2}}})},
                     {}});

        v.push_back({"F8",
                     "three S-blocks",
                     striple({{{3, 1}, {1, 2}, {2, 3}}}),
                     {striple({{{3, 1}, {1, 2}, {2, 3}}}), striple({{{2, 1}, {1, 3}, {3, 2}}})},
                     {striple({{{1, 2}, {2, 3}, {3, 1}}}), striple({{{2, 3}, {3, 1}, {1, 2}}}),
                      striple({{{1, 3}, {3, 2}, {2, 1}}}), striple({{{3, 2}, {2, 1}, {1, 3}}})}});

        return v;
    }();
    return fams;
}

inline const Family& family(const std::string& id) {
    for (const auto& f : families())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown family " + id);
}

// ---- two-slot and one-slot specializations ----

namespace rows {

using namespace dsl;

// sum_k C(n,k) B_{k,base1}(m1*v1) B_{n-k,base2}(m2*v2) * w-powers
inline IdentityExpr bb(SlotMono base1, SlotMono m1, SlotMono base2, SlotMono m2,
                       std::array<IdxForm, 3> wexp) {
    IdentityExpr e;
    e.sym_arity = 2;
    e.wexp = wexp;
    e.bfactors = {{kf(), base1, BArg::block(Var::y1, m1)},
                  {lf(), base2, BArg::block(Var::y2, m2)}};
    return e;
}

inline std::array<IdxForm, 3> wx(int s, IdxForm f) {
    std::array<IdxForm, 3> a{};
    a.at(s - 1) = f;
    return a;
}
inline std::array<IdxForm, 3> wx(int s, IdxForm f, int t, IdxForm g) {
    std::array<IdxForm, 3> a{};
    a.at(s - 1) = f;
    a.at(t - 1) = g;
    return a;
}

// C1: two-slot split of F2.
inline std::vector<IdentityExpr> c1() {
    std::vector<IdentityExpr> r;
    r.push_back(bb(w(2), w(1), w(1), w(2), wx(1, lf(), 2, kf())));
    r.push_back(bb(w(1), w(2), w(2), w(1), wx(2, lf(), 1, kf())));
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(2, kf() + mf(), 1, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1)},
                      {lf(), w(1), BArg::block(Var::y2, w(2))}};
        e.sfactors = {{mf(), w(2), 0}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(2, lf() + mf(), 1, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1, w(2))},
                      {lf(), w(1, 2), BArg::block(Var::y2)}};
        e.sfactors = {{mf(), w(2), 0}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(1, kf() + mf(), 2, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1)},
                      {lf(), w(2), BArg::block(Var::y2, w(1))}};
        e.sfactors = {{mf(), w(1), 1}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(1, lf() + mf(), 2, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(2), BArg::block(Var::y1, w(1))},
                      {lf(), w(1, 2), BArg::block(Var::y2)}};
        e.sfactors = {{mf(), w(1), 1}};
        r.push_back(e);
    }
    return r;
}

// C2: one-slot split of F2.
inline std::vector<IdentityExpr> c2() {
    std::vector<IdentityExpr> r;
    r.push_back(bb(SlotMono::one(), w(1), w(1), SlotMono::one(), wx(1, lf())));
    r.push_back(bb(w(1), SlotMono::one(), SlotMono::one(), w(1), wx(1, kf())));
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(1, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1)}, {lf(), w(1), BArg::block(Var::y2)}};
        e.sfactors = {{mf(), SlotMono::one(), 0}};
        r.push_back(e);
    }
    return r;
}

// C3: two-slot split of F3.
inline std::vector<IdentityExpr> c3() {
    std::vector<IdentityExpr> r;
    r.push_back(bb(w(2), w(1), w(1), w(2), wx(1, lf(), 2, kf())));
    r.push_back(bb(w(1), w(2), w(2), w(1), wx(2, lf(), 1, kf())));
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, nf(-1), 2, kf());
        e.rsums = {{I, 0}};
        e.qpows = {{w(2), I}};
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1)},
                      {lf(), w(1), BArg::block(Var::y2, w(2)).plus(one, wover(2, 1), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, nf(-1), 2, lf());
        e.rsums = {{I, 0}};
        e.qpows = {{w(2), I}};
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1, w(2))},
                      {lf(), w(1, 2), BArg::block(Var::y2).plus(one, winv(1), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(2, nf(-1), 1, kf());
        e.rsums = {{I, 1}};
        e.qpows = {{w(1), I}};
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1)},
                      {lf(), w(2), BArg::block(Var::y2, w(1)).plus(one, wover(1, 2), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(2, nf(-1), 1, lf());
        e.rsums = {{I, 1}};
        e.qpows = {{w(1), I}};
        e.bfactors = {{kf(), w(2), BArg::block(Var::y1, w(1))},
                      {lf(), w(1, 2), BArg::block(Var::y2).plus(one, winv(2), I)}};
        r.push_back(e);
    }
    return r;
}

// C4: one-slot split of F3; the second row is stated with the block
// variables interchanged.
inline std::vector<IdentityExpr> c4() {
    std::vector<IdentityExpr> r;
    r.push_back(bb(w(1), SlotMono::one(), SlotMono::one(), w(1), wx(1, kf())));
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, kf());
        e.bfactors = {{kf(), w(1), BArg::block(Var::y2)},
                      {lf(), SlotMono::one(), BArg::block(Var::y1, w(1))}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, nf(-1));
        e.rsums = {{I, 0}};
        e.qpows = {{SlotMono::one(), I}};
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1)},
                      {lf(), w(1), BArg::block(Var::y2).plus(one, winv(1), I)}};
        r.push_back(e);
    }
    return r;
}

inline IdentityExpr bs(SlotMono bbase, SlotMono bm, SlotMono sbase, int supper,
                       std::array<IdxForm, 3> wexp) {
    IdentityExpr e;
    e.sym_arity = 2;
    e.wexp = wexp;
    e.bfactors = {{kf(), bbase, BArg::block(Var::y1, bm)}};
    e.sfactors = {{lf(), sbase, supper}};
    return e;
}

// C5: two-slot split of F4.
inline std::vector<IdentityExpr> c5() {
    std::vector<IdentityExpr> r;
    r.push_back(bs(w(2), w(1), w(1), 1, wx(1, lf(), 2, kf() + cf(-1))));
    r.push_back(bs(w(1), w(2), w(2), 0, wx(2, lf(), 1, kf() + cf(-1))));
    {
        IdentityExpr e;
        e.sym_arity = 3;
        e.wexp = wx(1, kf() + mf() + cf(-1), 2, kf() + lf() + cf(-1));
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1)}};
        e.sfactors = {{lf(), w(2), 0}, {mf(), w(1), 1}};
        r.push_back(e);
    }
    return r;
}

// C6: one-slot split of F4.
inline std::vector<IdentityExpr> c6() {
    std::vector<IdentityExpr> r;
    {
        IdentityExpr e;
        e.bfactors = {{nf(), SlotMono::one(), BArg::block(Var::y1, w(1))}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, kf() + cf(-1));
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1)}};
        e.sfactors = {{lf(), SlotMono::one(), 0}};
        r.push_back(e);
    }
    return r;
}

// C7: two-slot split of F5.
inline std::vector<IdentityExpr> c7() {
    std::vector<IdentityExpr> r;
    {
        IdentityExpr e;
        e.wexp = wx(1, nf(-1));
        e.rsums = {{I, 0}};
        e.qpows = {{w(2), I}};
        e.bfactors = {{nf(), w(1), BArg::block(Var::y1, w(2)).plus(one, wover(2, 1), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.wexp = wx(2, nf(-1));
        e.rsums = {{I, 1}};
        e.qpows = {{w(1), I}};
        e.bfactors = {{nf(), w(2), BArg::block(Var::y1, w(1)).plus(one, wover(1, 2), I)}};
        r.push_back(e);
    }
    r.push_back(bs(w(1), w(2), w(2), 0, wx(2, lf(), 1, kf() + cf(-1))));
    r.push_back(bs(w(2), w(1), w(1), 1, wx(1, lf(), 2, kf() + cf(-1))));
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, nf(-1), 2, kf() + cf(-1));
        e.rsums = {{I, 0}};
        e.qpows = {{w(2), I}};
        e.sfactors = {{lf(), w(1), 1}};
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1).plus(one, winv(1), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(2, nf(-1), 1, kf() + cf(-1));
        e.rsums = {{I, 1}};
        e.qpows = {{w(1), I}};
        e.sfactors = {{lf(), w(2), 0}};
        e.bfactors = {{kf(), w(1, 2), BArg::block(Var::y1).plus(one, winv(2), I)}};
        r.push_back(e);
    }
    return r;
}

// C8: one-slot split of F5.
inline std::vector<IdentityExpr> c8() {
    std::vector<IdentityExpr> r;
    {
        IdentityExpr e;
        e.bfactors = {{nf(), SlotMono::one(), BArg::block(Var::y1, w(1))}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.wexp = wx(1, nf(-1));
        e.rsums = {{I, 0}};
        e.qpows = {{SlotMono::one(), I}};
        e.bfactors = {{nf(), w(1), BArg::block(Var::y1).plus(one, winv(1), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, kf() + cf(-1));
        e.bfactors = {{kf(), w(1), BArg::block(Var::y1)}};
        e.sfactors = {{lf(), SlotMono::one(), 0}};
        r.push_back(e);
    }
    return r;
}

// C9: two-slot split of F6.
inline std::vector<IdentityExpr> c9() {
    std::vector<IdentityExpr> r;
    {
        IdentityExpr e;
        e.wexp = wx(1, nf(-1));
        e.rsums = {{J, 0}};
        e.qpows = {{w(2), J}};
        e.bfactors = {{nf(), w(1), BArg::block(Var::y1, w(2)).plus(one, wover(2, 1), J)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.wexp = wx(2, nf(-1));
        e.rsums = {{I, 1}};
        e.qpows = {{w(1), I}};
        e.bfactors = {{nf(), w(2), BArg::block(Var::y1, w(1)).plus(one, wover(1, 2), I)}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.wexp = wx(1, nf(-1), 2, nf(-1));
        e.rsums = {{I, 0}, {J, 1}};
        e.qpows = {{w(2), I}, {w(1), J}};
        e.bfactors = {
            {nf(), w(1, 2), BArg::block(Var::y1).plus(one, winv(1), I).plus(one, winv(2), J)}};
        r.push_back(e);
    }
    return r;
}

// C10: two-slot split of F8, scaled by w1*w2.
inline std::vector<IdentityExpr> c10() {
    std::vector<IdentityExpr> r;
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(1, kf());
        e.sfactors = {{kf(), w(1), 1}, {lf(), SlotMono::one(), 0}};
        r.push_back(e);
    }
    {
        IdentityExpr e;
        e.sym_arity = 2;
        e.wexp = wx(2, kf());
        e.sfactors = {{kf(), w(2), 0}, {lf(), SlotMono::one(), 1}};
        r.push_back(e);
    }
    return r;
}

} // namespace rows

inline const std::vector<Corollary>& corollaries() {
    static const std::vector<Corollary> cors = [] {
        std::vector<Corollary> v;
        v.push_back({"C1", "F2", 2, SlotMono::one(), rows::c1()});
        v.push_back({"C2", "F2", 1, SlotMono::one(), rows::c2()});
        v.push_back({"C3", "F3", 2, SlotMono::one(), rows::c3()});
        v.push_back({"C4", "F3", 1, SlotMono::one(), rows::c4()});
        v.push_back({"C5", "F4", 2, SlotMono::one(), rows::c5()});
        v.push_back({"C6", "F4", 1, SlotMono::one(), rows::c6()});
        v.push_back({"C7", "F5", 2, SlotMono::one(), rows::c7()});
        v.push_back({"C8", "F5", 1, SlotMono::one(), rows::c8()});
        v.push_back({"C9", "F6", 2, SlotMono::one(), rows::c9()});
        v.push_back({"C10", "F8", 2, dsl::w(1, 2), rows::c10()});
        return v;
    }();
    return cors;
}

inline const Corollary& corollary(const std::string& id) {
    for (const auto& c : corollaries())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown corollary " + id);
}

/// Eight two-slot expressions with one common value.
inline const std::vector<IdentityExpr>& chain_rows() {
    static const std::vector<IdentityExpr> rows_ = [] {
        auto c5 = rows::c5();
        auto c7 = rows::c7();
        auto c9 = rows::c9();
        return std::vector<IdentityExpr>{c5[0], c5[1], c7[0], c7[1],
                                         c5[2], c7[4], c7[5], c9[2]};
    }();
    return rows_;
}

inline const std::vector<Expansion>& expansions() {
    static const std::vector<Expansion> exps = [] {
        std::vector<Expansion> v;
        v.push_back({"X1", FormKind::cross, 0, f1_row(1, 2, 3)});
        v.push_back({"X2", FormKind::cross, 1, f2_row(1, 2, 3)});
        v.push_back({"X3", FormKind::cross, 1, f3_row(3, 2, 1)});
        v.push_back({"X4", FormKind::cross, 2, f4_row(1, 2, 3)});
        v.push_back({"X5", FormKind::cross, 2, f5_row(2, 1, 3)});
        v.push_back({"X6", FormKind::cross, 2, f6_row(2, 3, 1)});
        v.push_back({"X7", FormKind::cross, 3, x7_expr()});
        v.push_back({"X8", FormKind::mixed0, 0, btriple({{{1, 2}, {2, 3}, {3, 1}}})});
        v.push_back({"X9", FormKind::mixed1, 0, striple({{{1, 2}, {2, 3}, {3, 1}}})});
        return v;
    }();
    return exps;
}

inline const Expansion& expansion(const std::string& id) {
    for (const auto& x : expansions())
        if (x.id == id) return x;
    throw std::invalid_argument("unknown expansion " + id);
}

} // namespace catalog
} // namespace qsym
