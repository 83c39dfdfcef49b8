#pragma once

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qsym {

/// One row of a run report. A negative duration means "not measured" and
/// serializes as null, keeping reports byte-identical across machines and
/// thread counts unless timings are explicitly requested.
struct Result {
    std::string suite;
    std::string params;
    bool pass = true;
    std::string detail;
    std::vector<std::string> flags;
    long millis = -1;
};

/// Runs every task and places its Result at the task's own index, so the
/// report order is fixed by construction order no matter how many workers
/// execute the queue. A thrown exception becomes a failing Result rather
/// than tearing the run down.
inline std::vector<Result> run_tasks(const std::vector<std::function<Result()>>& tasks,
                                     int threads, bool timings) {
    std::vector<Result> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = tasks[i]();
            } catch (const std::exception& e) {
                out[i].pass = false;
                out[i].detail = std::string("exception: ") + e.what();
            }
            if (timings)
                out[i].millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

struct Report {
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<Result> results;

    size_t failed() const {
        size_t f = 0;
        for (const auto& r : results) f += !r.pass;
        return f;
    }
    bool all_pass() const { return failed() == 0; }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["config"] = config;
        j["results"] = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json e;
            e["suite"] = r.suite;
            e["params"] = r.params;
            e["status"] = r.pass ? "pass" : "fail";
            e["detail"] = r.detail;
            e["flags"] = r.flags;
            if (r.millis < 0)
                e["millis"] = nullptr;
            else
                e["millis"] = r.millis;
            j["results"].push_back(std::move(e));
        }
        j["summary"] = {{"total", results.size()},
                        {"passed", results.size() - failed()},
                        {"failed", failed()}};
        return j.dump(2) + "\n";
    }

    std::string to_csv() const {
        auto quote = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        };
        std::string out = "suite,params,status,detail,flags,millis\n";
        for (const auto& r : results) {
            std::string fl;
            for (size_t i = 0; i < r.flags.size(); ++i)
                fl += (i ? "; " : "") + r.flags[i];
            out += quote(r.suite) + "," + quote(r.params) + "," +
                   (r.pass ? "pass" : "fail") + "," + quote(r.detail) + "," + quote(fl) +
                   "," + (r.millis < 0 ? "" : std::to_string(r.millis)) + "\n";
        }
        return out;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& r : results) {
            out += r.pass ? "[PASS] " : "[FAIL] ";
            out += r.suite + " " + r.params;
            if (!r.detail.empty()) out += ": " + r.detail;
            if (r.millis >= 0) out += " (" + std::to_string(r.millis) + " ms)";
            out += "\n";
            for (const auto& f : r.flags) out += "       flag: " + f + "\n";
        }
        out += "passed " + std::to_string(results.size() - failed()) + "/" +
               std::to_string(results.size()) + "\n";
        return out;
    }

    std::string render(const std::string& format) const {
        if (format == "json") return to_json();
        if (format == "csv") return to_csv();
        return to_text();
    }
};

/// Worker count for a run: the QSYM_THREADS environment variable wins over
/// the flag when set to a positive integer.
inline int effective_threads(int flag_value) {
    if (const char* env = std::getenv("QSYM_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return flag_value >= 1 ? flag_value : 1;
}

} // namespace qsym
