#include "qsym/eps.hpp"
#include "qsym/verify.hpp"
#include "qsym/volkenborn.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qsym;

namespace {

int failures = 0;

void report(int index, bool pass, const std::string& label, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << label;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string wtxt(const std::array<long, 3>& w, int arity = 3) {
    std::string s = "(";
    for (int i = 0; i < arity; ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./qsym";

    // 1: every symmetry variant of every family agrees exactly over the full
    //    grid, within the time budget.
    {
        Timer t;
        long checks = 0;
        std::string first_fail;
        for (const auto& fam : catalog::families()) {
            for (long n = 0; n <= 8; ++n)
                for (long a = 1; a <= 3; ++a)
                    for (long b = 1; b <= 3; ++b)
                        for (long c = 1; c <= 3; ++c) {
                            FamilyReport r = verify_family(fam, n, {a, b, c});
                            ++checks;
                            if (!r.pass && first_fail.empty())
                                first_fail = fam.id + " n=" + std::to_string(n) + " w=" +
                                             wtxt({a, b, c}) + ": " + r.detail;
                        }
        }
        double secs = t.seconds();
        bool pass = first_fail.empty() && secs < 300.0;
        std::string detail = std::to_string(checks) + " grid points in " +
                             fmt_seconds(secs) + " (budget 300 s)";
        if (!first_fail.empty()) detail += "; first failure: " + first_fail;
        report(1, pass, "family variants all equal for n <= 8, weights in {1,2,3}^3",
               detail);
    }

    // 2: corollaries match their rows and their parent family; the one-slot
    //    scaling law holds coefficientwise on a larger grid.
    {
        long checks = 0;
        std::string first_fail;
        for (const auto& cor : catalog::corollaries()) {
            for (long n = 0; n <= 8; ++n) {
                std::vector<std::array<long, 3>> grid;
                if (cor.arity == 2) {
                    for (long a = 1; a <= 4; ++a)
                        for (long b = 1; b <= 4; ++b) grid.push_back({a, b, 1});
                } else {
                    for (long a = 1; a <= 4; ++a) grid.push_back({a, 1, 1});
                }
                for (const auto& w : grid) {
                    CorollaryReport r = verify_corollary(cor, n, w);
                    ++checks;
                    if (!r.pass && first_fail.empty())
                        first_fail = cor.id + " n=" + std::to_string(n) + " w=" +
                                     wtxt(w, cor.arity) + ": " + r.detail;
                }
            }
        }
        long scaling_checks = 0;
        for (long k = 0; k <= 12; ++k)
            for (long w = 1; w <= 5; ++w) {
                ++scaling_checks;
                if (!scaling_identity_holds(k, w) && first_fail.empty())
                    first_fail = "scaling k=" + std::to_string(k) +
                                 " w=" + std::to_string(w);
            }
        report(2, first_fail.empty(),
               "corollaries agree with parents (n <= 8, weights <= 4); scaling law "
               "exact for k <= 12, w <= 5",
               first_fail.empty() ? std::to_string(checks) + " corollary checks, " +
                                        std::to_string(scaling_checks) +
                                        " scaling checks"
                                  : "first failure: " + first_fail);
    }

    // 3: the chained expressions are pairwise equal.
    {
        long checks = 0;
        std::string first_fail;
        for (long n = 0; n <= 8; ++n)
            for (long a = 1; a <= 4; ++a)
                for (long b = 1; b <= 4; ++b) {
                    RowsReport r = verify_rows(catalog::chain_rows(), {a, b, 1}, n);
                    ++checks;
                    if (!r.pass && first_fail.empty())
                        first_fail = "n=" + std::to_string(n) + " w=(" +
                                     std::to_string(a) + "," + std::to_string(b) +
                                     "): " + r.detail;
                }
        report(3, first_fail.empty(),
               "chained expressions all equal for n <= 8, weights <= 4",
               first_fail.empty() ? std::to_string(checks) + " grid points"
                                  : "first failure: " + first_fail);
    }

    // 4: summation expressions match their closed generating functions to
    //    order 10, and splitting weights matches whole-series rescaling to
    //    order 8.
    {
        long checks = 0;
        std::string first_fail;
        for (const auto& x : catalog::expansions()) {
            for (long a = 1; a <= 2; ++a)
                for (long b = 1; b <= 2; ++b)
                    for (long c = 1; c <= 2; ++c) {
                        SeriesReport r = verify_expansion(x, {a, b, c}, 10);
                        ++checks;
                        if (!r.pass && first_fail.empty())
                            first_fail = x.id + " w=" + wtxt({a, b, c}) + ": " + r.detail;
                    }
        }
        for (long a = 1; a <= 2; ++a)
            for (long b = 1; b <= 2; ++b)
                for (long c = 1; c <= 2; ++c) {
                    SeriesReport r = verify_substitution({a, b, c}, 8);
                    ++checks;
                    if (!r.pass && first_fail.empty())
                        first_fail = "substitution w=" + wtxt({a, b, c}) + ": " + r.detail;
                }
        report(4, first_fail.empty(),
               "expansions match closed forms to order 10; rescaling consistency to "
               "order 8 (weights in {1,2}^3)",
               first_fail.empty() ? std::to_string(checks) + " series comparisons"
                                  : "first failure: " + first_fail);
    }

    // 5: the q -> 1 limit of each number equals the classical value exactly.
    {
        std::string first_fail;
        for (long n = 0; n <= 12; ++n) {
            Rational got = eps_expand(qbernoulli_number(n), n + 4).coeff(0);
            if (!(got == classical_bernoulli(n)) && first_fail.empty())
                first_fail = "n=" + std::to_string(n) + ": got " + got.str() +
                             ", classical " + classical_bernoulli(n).str();
        }
        report(5, first_fail.empty(),
               "limit coefficients equal the classical values exactly for n <= 12",
               first_fail.empty() ? "13 exact comparisons" : first_fail);
    }

    // 6: p-adic witnesses: valuations nondecreasing with a >= 3 digit final
    //    margin, within the time budget.
    {
        Timer t;
        long checks = 0;
        std::string first_fail;
        for (long p : {3L, 5L, 7L})
            for (long n = 0; n <= 6; ++n) {
                WitnessReport m = moment_check(p, n, 12, 5);
                WitnessReport s = shift_check(p, n, 12, 5);
                checks += 2;
                if (!m.pass && first_fail.empty()) first_fail = m.detail;
                if (!s.pass && first_fail.empty()) first_fail = s.detail;
            }
        double secs = t.seconds();
        bool pass = first_fail.empty() && secs < 60.0;
        report(6, pass,
               "p-adic witnesses monotone with >= 3 digit margin (p in {3,5,7}, "
               "n <= 6, levels 1..5)",
               first_fail.empty()
                   ? std::to_string(checks) + " witness runs in " + fmt_seconds(secs) +
                         " (budget 60 s)"
                   : "first failure: " + first_fail);
    }

    // 7: perturbing any single coefficient of any variant is detected and the
    //    perturbed monomial is located.
    {
        size_t cases = 0, detected = 0, localized = 0;
        bool pass = true;
        std::string first_fail;
        for (const auto& fam : catalog::families()) {
            FaultSweepReport r = fault_sweep(fam, 3, {1, 2, 3});
            cases += r.cases;
            detected += r.detected;
            localized += r.localized;
            if (!r.pass) {
                pass = false;
                if (first_fail.empty())
                    first_fail = fam.id + ": " + std::to_string(r.detected) + "/" +
                                 std::to_string(r.cases) + " detected, " +
                                 std::to_string(r.localized) + " localized";
            }
        }
        report(7, pass,
               "single-coefficient perturbations detected and localized (n=3, "
               "w=(1,2,3))",
               pass ? std::to_string(cases) + " injections, all detected and localized"
                    : "first failure: " + first_fail);
    }

    // 8: the full suite renders byte-identical JSON reports at 1 and 8 worker
    //    threads (run through the real command-line tool in separate
    //    processes).
    {
        const std::string dir = "acceptance_tmp";
        int mkrc = std::system(("mkdir -p " + dir).c_str());
        (void)mkrc;
        const std::vector<std::string> runs = {
            "verify --family all --corollary all --chain --n-max 4 --w-max 3",
            "crosscheck --expansion all --substitution --scaling --order 6 --w-max 2 "
            "--k-max 8",
            "padic",
            "limit",
        };
        bool pass = true;
        std::string detail;
        for (size_t i = 0; i < runs.size() && pass; ++i) {
            std::string f8 = dir + "/r" + std::to_string(i) + "_t8.json";
            std::string f1 = dir + "/r" + std::to_string(i) + "_t1.json";
            std::string c8 = "QSYM_THREADS=8 " + cli + " " + runs[i] +
                             " --format json --out " + f8;
            std::string c1 = "QSYM_THREADS=1 " + cli + " " + runs[i] +
                             " --format json --out " + f1;
            int rc8 = std::system(c8.c_str());
            int rc1 = std::system(c1.c_str());
            if (rc8 != 0 || rc1 != 0) {
                pass = false;
                detail = "run '" + runs[i] + "' exited nonzero";
                break;
            }
            std::string a = slurp(f8), b = slurp(f1);
            if (a.empty() || a != b) {
                pass = false;
                detail = "reports differ for '" + runs[i] + "'";
            }
        }
        if (pass) {
            detail = std::to_string(runs.size()) + " paired runs, all byte-identical";
            int rmrc = std::system(("rm -rf " + dir).c_str());
            (void)rmrc;
        }
        report(8, pass, "reports byte-identical at 1 and 8 worker threads", detail);
    }

    std::cout << "acceptance: " << (8 - failures) << "/8 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
