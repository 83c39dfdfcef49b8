#include <CLI11.hpp>

#include "qsym/eps.hpp"
#include "qsym/render.hpp"
#include "qsym/report.hpp"
#include "qsym/verify.hpp"
#include "qsym/volkenborn.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qsym;
using nlohmann::ordered_json;

namespace {

std::string wstr(const std::array<long, 3>& w, int arity = 3) {
    std::string s = "(";
    for (int i = 0; i < arity; ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string nstr(long n) { return "n=" + std::to_string(n); }

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::vector<std::array<long, 3>> weight_grid(long w_max, const std::vector<long>& fixed) {
    std::vector<std::array<long, 3>> grid;
    if (!fixed.empty()) {
        grid.push_back({fixed[0], fixed[1], fixed[2]});
        return grid;
    }
    for (long a = 1; a <= w_max; ++a)
        for (long b = 1; b <= w_max; ++b)
            for (long c = 1; c <= w_max; ++c) grid.push_back({a, b, c});
    return grid;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    int threads = 1;
    bool timings = false;
};

int finish(Report rep, const CommonOpts& c) {
    int wr = write_output(rep.render(c.format), c.out_path);
    if (wr != 0) return wr;
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_compute(const std::string& what, long n, long k, long rebase,
                const CommonOpts& c) {
    std::string value;
    if (what == "bernoulli") {
        value = render::logpoly(qbernoulli_number(n, rebase));
    } else if (what == "poly") {
        value = qbernoulli_poly(n, MPoly::variable(Var::x), rebase).str();
    } else {
        value = render::ratfunc(power_sum(k, n, rebase));
    }
    if (c.format == "json") {
        ordered_json j;
        j["config"] = {{"command", "compute"}, {"what", what}, {"n", n}};
        if (what == "powersum") j["config"]["k"] = k;
        j["config"]["rebase"] = rebase;
        j["value"] = value;
        return write_output(j.dump(2) + "\n", c.out_path);
    }
    return write_output(value + "\n", c.out_path);
}

int run_verify(std::vector<std::string> fams, std::vector<std::string> cors, bool chain,
               bool any_selector, long n_max, long w_max, const std::vector<long>& wv,
               const CommonOpts& c) {
    if (!wv.empty() && wv.size() != 3) return usage_error("--w needs three weights");
    for (long x : wv)
        if (x < 1) return usage_error("weights must be >= 1");
    if (!any_selector) {
        fams = {"all"};
        cors = {"all"};
        chain = true;
    }
    std::vector<std::string> fam_ids, cor_ids;
    for (const auto& s : fams) {
        if (s == "all") {
            fam_ids.clear();
            for (const auto& f : catalog::families()) fam_ids.push_back(f.id);
            break;
        }
        bool known = false;
        for (const auto& f : catalog::families()) known |= f.id == s;
        if (!known) return usage_error("unknown family: " + s);
        fam_ids.push_back(s);
    }
    for (const auto& s : cors) {
        if (s == "all") {
            cor_ids.clear();
            for (const auto& x : catalog::corollaries()) cor_ids.push_back(x.id);
            break;
        }
        bool known = false;
        for (const auto& x : catalog::corollaries()) known |= x.id == s;
        if (!known) return usage_error("unknown corollary: " + s);
        cor_ids.push_back(s);
    }

    std::vector<std::function<Result()>> tasks;
    for (const auto& id : fam_ids) {
        const Family& fam = catalog::family(id);
        for (long n = 0; n <= n_max; ++n)
            for (const auto& w : weight_grid(w_max, wv))
                tasks.push_back([&fam, id, n, w] {
                    FamilyReport r = verify_family(fam, n, w);
                    std::ostringstream os;
                    if (r.pass)
                        os << "variants=" << r.orbit << " distinct=" << r.distinct;
                    else
                        os << r.detail;
                    return Result{"family", id + " " + nstr(n) + " w=" + wstr(w), r.pass,
                                  os.str(), r.flags, -1};
                });
    }
    for (const auto& id : cor_ids) {
        const Corollary& cor = catalog::corollary(id);
        for (long n = 0; n <= n_max; ++n) {
            std::vector<std::array<long, 3>> grid;
            if (!wv.empty()) {
                grid.push_back({wv[0], cor.arity == 2 ? wv[1] : 1, 1});
            } else if (cor.arity == 2) {
                for (long a = 1; a <= w_max; ++a)
                    for (long b = 1; b <= w_max; ++b) grid.push_back({a, b, 1});
            } else {
                for (long a = 1; a <= w_max; ++a) grid.push_back({a, 1, 1});
            }
            for (const auto& w : grid)
                tasks.push_back([&cor, id, n, w] {
                    CorollaryReport r = verify_corollary(cor, n, w);
                    return Result{"corollary",
                                  id + " " + nstr(n) + " w=" + wstr(w, cor.arity), r.pass,
                                  r.pass ? "distinct=" + std::to_string(r.distinct)
                                         : r.detail,
                                  {},
                                  -1};
                });
        }
    }
    if (chain) {
        for (long n = 0; n <= n_max; ++n) {
            std::vector<std::array<long, 3>> grid;
            if (!wv.empty())
                grid.push_back({wv[0], wv[1], 1});
            else
                for (long a = 1; a <= w_max; ++a)
                    for (long b = 1; b <= w_max; ++b) grid.push_back({a, b, 1});
            for (const auto& w : grid)
                tasks.push_back([n, w] {
                    RowsReport r = verify_rows(catalog::chain_rows(), w, n);
                    return Result{"chain", nstr(n) + " w=" + wstr(w, 2), r.pass,
                                  r.pass ? "distinct=" + std::to_string(r.distinct)
                                         : r.detail,
                                  {},
                                  -1};
                });
        }
    }

    Report rep;
    rep.config = {{"command", "verify"},
                  {"families", fam_ids},
                  {"corollaries", cor_ids},
                  {"chain", chain},
                  {"n_max", n_max},
                  {"w_max", w_max}};
    if (!wv.empty()) rep.config["w"] = wv;
    rep.results = run_tasks(tasks, effective_threads(c.threads), c.timings);
    return finish(std::move(rep), c);
}

int run_crosscheck(std::vector<std::string> exps, bool subst, bool scaling,
                   bool any_selector, long order, long w_max, long k_max,
                   const CommonOpts& c) {
    if (order < 1) return usage_error("--order must be >= 1");
    if (!any_selector) {
        exps = {"all"};
        subst = true;
        scaling = true;
    }
    std::vector<std::string> exp_ids;
    for (const auto& s : exps) {
        if (s == "all") {
            exp_ids.clear();
            for (const auto& x : catalog::expansions()) exp_ids.push_back(x.id);
            break;
        }
        bool known = false;
        for (const auto& x : catalog::expansions()) known |= x.id == s;
        if (!known) return usage_error("unknown expansion: " + s);
        exp_ids.push_back(s);
    }

    std::vector<std::function<Result()>> tasks;
    for (const auto& id : exp_ids) {
        const Expansion& x = catalog::expansion(id);
        for (const auto& w : weight_grid(w_max, {}))
            tasks.push_back([&x, id, w, order] {
                SeriesReport r = verify_expansion(x, w, order);
                return Result{"expansion",
                              id + " w=" + wstr(w) + " order=" + std::to_string(order),
                              r.pass, r.detail, {}, -1};
            });
    }
    if (subst) {
        for (const auto& w : weight_grid(w_max, {}))
            tasks.push_back([w, order] {
                SeriesReport r = verify_substitution(w, order);
                return Result{"substitution",
                              "w=" + wstr(w) + " order=" + std::to_string(order), r.pass,
                              r.detail, {}, -1};
            });
    }
    if (scaling) {
        for (long k = 0; k <= k_max; ++k)
            for (long wv = 1; wv <= w_max; ++wv)
                tasks.push_back([k, wv] {
                    bool ok = scaling_identity_holds(k, wv);
                    return Result{"scaling", "k=" + std::to_string(k) +
                                                 " w=" + std::to_string(wv),
                                  ok, ok ? "" : "coefficient identity fails", {}, -1};
                });
    }

    Report rep;
    rep.config = {{"command", "crosscheck"}, {"expansions", exp_ids},
                  {"substitution", subst},   {"scaling", scaling},
                  {"order", order},          {"w_max", w_max},
                  {"k_max", k_max}};
    rep.results = run_tasks(tasks, effective_threads(c.threads), c.timings);
    return finish(std::move(rep), c);
}

int run_padic(const std::vector<long>& ps, long q_opt, const std::vector<long>& levels,
              long M, long n_max, const CommonOpts& c) {
    if (M < 1) return usage_error("--M must be >= 1");
    if (n_max < 0) return usage_error("--n-max must be >= 0");
    std::vector<long> ls = levels;
    std::sort(ls.begin(), ls.end());
    for (size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] < 1 || (i > 0 && ls[i] == ls[i - 1]))
            return usage_error("--N must be distinct positive levels");
    }
    if (ls.empty()) return usage_error("--N needs at least one level");
    struct Job {
        long p, q;
    };
    std::vector<Job> jobs;
    for (long p : ps) {
        if (p < 3 || p % 2 == 0) return usage_error("--p entries must be odd and >= 3");
        long q = q_opt == 0 ? 1 + p : q_opt;
        if (q < 2 || (q - 1) % p != 0)
            return usage_error("q must be an integer > 1 congruent to 1 mod p (got q=" +
                               std::to_string(q) + ", p=" + std::to_string(p) + ")");
        jobs.push_back({p, q});
    }

    auto levels_str = [&ls] {
        std::string s = "N=(";
        for (size_t i = 0; i < ls.size(); ++i)
            s += (i ? "," : "") + std::to_string(ls[i]);
        return s + ")";
    }();

    std::vector<std::function<Result()>> tasks;
    for (const Job& j : jobs)
        for (long n = 0; n <= n_max; ++n)
            tasks.push_back([j, n, M, ls, levels_str] {
                WitnessReport r = moment_check(j.p, j.q, n, M, ls);
                return Result{"moment",
                              "p=" + std::to_string(j.p) + " q=" + std::to_string(j.q) +
                                  " " + nstr(n) + " M=" + std::to_string(M) + " " +
                                  levels_str,
                              r.pass, r.detail, {}, -1};
            });
    for (const Job& j : jobs)
        for (long n = 0; n <= n_max; ++n)
            tasks.push_back([j, n, M, ls, levels_str] {
                WitnessReport r = shift_check(j.p, j.q, n, M, ls);
                return Result{"shift",
                              "p=" + std::to_string(j.p) + " q=" + std::to_string(j.q) +
                                  " " + nstr(n) + " M=" + std::to_string(M) + " " +
                                  levels_str,
                              r.pass, r.detail, {}, -1};
            });

    Report rep;
    rep.config = {{"command", "padic"}, {"p", ps}, {"q", q_opt == 0 ? ordered_json() : ordered_json(q_opt)},
                  {"M", M},             {"N", ls}, {"n_max", n_max}};
    rep.results = run_tasks(tasks, effective_threads(c.threads), c.timings);
    return finish(std::move(rep), c);
}

int run_limit(long n_max, const CommonOpts& c) {
    if (n_max < 0) return usage_error("--n-max must be >= 0");
    std::vector<std::function<Result()>> tasks;
    for (long n = 0; n <= n_max; ++n)
        tasks.push_back([n] {
            Rational expected = classical_bernoulli(n);
            Rational got = eps_expand(qbernoulli_number(n), n + 4).coeff(0);
            bool ok = got == expected;
            std::string detail = ok ? "value " + got.str()
                                    : "got " + got.str() + ", classical value " +
                                          expected.str();
            return Result{"limit", nstr(n), ok, detail, {}, -1};
        });
    Report rep;
    rep.config = {{"command", "limit"}, {"n_max", n_max}};
    rep.results = run_tasks(tasks, effective_threads(c.threads), c.timings);
    return finish(std::move(rep), c);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for q-analogue symmetry identities"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    app.add_option("--format", common.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", common.out_path, "write the report to this file");
    app.add_option("--threads", common.threads, "worker threads (QSYM_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timings", common.timings, "record per-check wall times");

    // compute ---------------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "render exact values");
    compute->require_subcommand(1);
    long cn = 0, ck = 0, crebase = 1;
    auto* cb = compute->add_subcommand("bernoulli", "the n-th number over base q^rebase");
    cb->add_option("--n", cn, "index")->required()->check(CLI::NonNegativeNumber);
    cb->add_option("--rebase", crebase, "base exponent")->check(CLI::PositiveNumber);
    auto* cp = compute->add_subcommand("poly", "the n-th polynomial at x");
    cp->add_option("--n", cn, "index")->required()->check(CLI::NonNegativeNumber);
    cp->add_option("--rebase", crebase, "base exponent")->check(CLI::PositiveNumber);
    auto* cs = compute->add_subcommand("powersum", "sum of i^k q^(rebase*i), i = 0..n");
    cs->add_option("--k", ck, "power")->required()->check(CLI::NonNegativeNumber);
    cs->add_option("--n", cn, "upper limit")->required()->check(CLI::NonNegativeNumber);
    cs->add_option("--rebase", crebase, "base exponent")->check(CLI::PositiveNumber);

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check identity families on a grid");
    std::vector<std::string> fams, cors;
    bool chain = false;
    long n_max = 3, w_max = 2;
    std::vector<long> wv;
    auto* fam_opt = verify->add_option("--family", fams, "family ids or 'all'")
                        ->delimiter(',');
    auto* cor_opt = verify->add_option("--corollary", cors, "corollary ids or 'all'")
                        ->delimiter(',');
    auto* chain_opt = verify->add_flag("--chain", chain, "check the chained expressions");
    verify->add_option("--n-max", n_max, "largest degree")->check(CLI::NonNegativeNumber);
    verify->add_option("--w-max", w_max, "largest weight")->check(CLI::PositiveNumber);
    verify->add_option("--w", wv, "fixed weight triple w1,w2,w3")->delimiter(',');

    // crosscheck ------------------------------------------------------------
    auto* cross = app.add_subcommand("crosscheck",
                                     "generating-function and coefficient checks");
    std::vector<std::string> exps;
    bool subst = false, scaling = false;
    long order = 6, cc_wmax = 2, k_max = 8;
    auto* exp_opt = cross->add_option("--expansion", exps, "expansion ids or 'all'")
                        ->delimiter(',');
    auto* sub_opt = cross->add_flag("--substitution", subst,
                                    "whole-series rescaling consistency");
    auto* sca_opt = cross->add_flag("--scaling", scaling,
                                    "coefficient-level one-slot scaling law");
    cross->add_option("--order", order, "series truncation order")
        ->check(CLI::PositiveNumber);
    cross->add_option("--w-max", cc_wmax, "largest weight")->check(CLI::PositiveNumber);
    cross->add_option("--k-max", k_max, "largest coefficient index for --scaling")
        ->check(CLI::NonNegativeNumber);

    // padic -----------------------------------------------------------------
    auto* padic = app.add_subcommand("padic", "p-adic convergence witnesses");
    std::vector<long> ps{3, 5, 7}, levels{1, 2, 3, 4, 5};
    long pq = 0, M = 12, pn_max = 6;
    padic->add_option("--p", ps, "primes")->delimiter(',');
    padic->add_option("--q", pq, "integer q (default 1+p, must be 1 mod p)");
    padic->add_option("--N", levels, "moment levels")->delimiter(',');
    padic->add_option("--M", M, "digits of working precision");
    padic->add_option("--n-max", pn_max, "largest moment index");

    // limit -----------------------------------------------------------------
    auto* limit = app.add_subcommand("limit", "compare the q->1 limit with the "
                                              "classical values");
    long ln_max = 12;
    limit->add_option("--n-max", ln_max, "largest index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) {
            std::string what = cb->parsed() ? "bernoulli" : cp->parsed() ? "poly"
                                                                         : "powersum";
            return run_compute(what, cn, ck, crebase, common);
        }
        if (verify->parsed()) {
            bool any = fam_opt->count() || cor_opt->count() || chain_opt->count();
            return run_verify(fams, cors, chain, any, n_max, w_max, wv, common);
        }
        if (cross->parsed()) {
            bool any = exp_opt->count() || sub_opt->count() || sca_opt->count();
            return run_crosscheck(exps, subst, scaling, any, order, cc_wmax, k_max,
                                  common);
        }
        if (padic->parsed()) return run_padic(ps, pq, levels, M, pn_max, common);
        if (limit->parsed()) return run_limit(ln_max, common);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
