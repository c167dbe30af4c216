#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "asmkit/enumerate.hpp"
#include "asmkit/polynomial.hpp"

namespace asmkit {

using nlohmann::json;

// Resolves the worker count: explicit flag, then the ASMKIT_JOBS environment
// variable, then 1.
inline int resolve_jobs(int cli_jobs) {
    if (cli_jobs > 0) return cli_jobs;
    if (const char* env = std::getenv("ASMKIT_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Runs jobs 0..count-1 on a small pool and collects results by index, so the
// output is independent of the worker count and scheduling.
inline std::vector<json> run_jobs(size_t count, int jobs, const std::function<json(size_t)>& fn) {
    std::vector<json> out(count);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

inline json matrix_to_json(const SignMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(static_cast<int>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json poly_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (int e = 0; e <= p.degree(); ++e) coeffs.push_back(to_string(p.coeff(e)));
    return json{{"text", to_string(p)}, {"coeffs", coeffs}};
}

// Report envelope.  elapsed_ms is the single volatile field; everything else
// is a pure function of the run configuration.
inline json make_report(const std::string& command, json inputs, json records, uint64_t seed,
                        double elapsed_ms) {
    return json{{"command", command}, {"inputs", std::move(inputs)},
                {"records", std::move(records)}, {"seed", seed},
                {"elapsed_ms", elapsed_ms},      {"version", "asmkit 1.0.0"}};
}

// One line per record; scalar fields only, arrays and objects serialized
// inline as JSON text.
inline std::string report_to_tsv(const json& report) {
    std::string out;
    const auto& records = report.at("records");
    if (records.empty()) return out;
    std::vector<std::string> keys;
    for (auto it = records[0].begin(); it != records[0].end(); ++it) keys.push_back(it.key());
    for (size_t i = 0; i < keys.size(); ++i) out += (i ? "\t" : "") + keys[i];
    out += "\n";
    for (const auto& rec : records) {
        for (size_t i = 0; i < keys.size(); ++i) {
            if (i) out += "\t";
            if (!rec.contains(keys[i])) continue;
            const auto& v = rec.at(keys[i]);
            if (v.is_string()) out += v.get<std::string>();
            else out += v.dump();
        }
        out += "\n";
    }
    return out;
}

}  // namespace asmkit
