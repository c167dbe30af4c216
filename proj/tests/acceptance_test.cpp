// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: acceptance_test [path-to-asmkit-cli]   (the CLI path enables the
// report-determinism criterion; it is skipped-as-failure when absent).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "asmkit/counting.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/identities.hpp"
#include "asmkit/kuperberg.hpp"
#include "reference_oracles.hpp"

using namespace asmkit;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void report(int criterion, bool ok, const std::string& what) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), ms);
    if (!ok) ++failures;
}

Weight delta(long r, long s) { return make_delta(DeltaKind::Delta, Rational(r), Rational(s)); }
Weight delta_h(long tr, long ts) {
    return make_delta(DeltaKind::Delta, make_rational(tr, 2), make_rational(ts, 2));
}
Weight delta2(long r, long s) { return make_delta(DeltaKind::Delta2, Rational(r), Rational(s)); }
Weight delta2_h(long tr, long ts) {
    return make_delta(DeltaKind::Delta2, make_rational(tr, 2), make_rational(ts, 2));
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;

    // 1. ASM counts for n = 1..7 equal the product formula
    begin();
    {
        std::vector<long> expected = {1, 2, 7, 42, 429, 7436, 218348};
        bool ok = true;
        for (int n = 1; n <= 7; ++n) {
            Integer count = count_class(ClassTag::ASM, n);
            ok = ok && count == expected[static_cast<size_t>(n - 1)] &&
                 asm_product_formula(n) == count;
        }
        report(1, ok, "ASM counts 1..7 match prod (3k+1)!/(n+k)!");
    }

    // 2. brute ASM counts equal the GL_{2n} staircase dimension formula
    begin();
    {
        bool ok = true;
        for (int n = 1; n <= 6; ++n)
            ok = ok && class_count_formula(ClassTag::ASM, n) == Rational(count_class(ClassTag::ASM, n));
        report(2, ok, "ASM counts 1..6 match 3^{-n(n-1)/2} dim GL_{2n}(delta(n-1,n-1))");
    }

    // 3. HTS at orders 2, 4, 6 and QTS at orders 4, 8 (fundamental-domain backtracking)
    begin();
    {
        bool ok = true;
        for (int o : {2, 4, 6})
            ok = ok && class_count_formula(ClassTag::HTS, o) == Rational(count_class(ClassTag::HTS, o));
        for (int o : {4, 8})
            ok = ok && class_count_formula(ClassTag::QTS, o) == Rational(count_class(ClassTag::QTS, o));
        report(3, ok, "HTS orders 2,4,6 and QTS orders 4,8 match their dimension products");
    }

    // 4. VS at 3, 5, 7 and VHS at 5, 7, with the even-pin doubling rule
    begin();
    {
        bool ok = weyl_dim(pin_group(4), delta_h(3, 1)) == 12;
        std::vector<std::pair<int, long>> vs = {{3, 1}, {5, 3}, {7, 26}};
        for (auto [o, c] : vs) {
            ok = ok && count_class(ClassTag::VS, o) == c &&
                 class_count_formula(ClassTag::VS, o) == Rational(c);
        }
        for (int o : {5, 7})
            ok = ok && class_count_formula(ClassTag::VHS, o) == Rational(count_class(ClassTag::VHS, o));
        report(4, ok, "VS counts (1,3,26) and VHS counts match Sp/pin formulas (dim Pin_4(3/2,1/2)=12)");
    }

    // 5. the off-diagonal and U-turn classes
    begin();
    {
        bool ok = true;
        for (int o : {2, 4, 6})
            ok = ok && class_count_formula(ClassTag::OS, o) == Rational(count_class(ClassTag::OS, o));
        for (int o : {2, 4, 6})
            ok = ok && class_count_formula(ClassTag::UASM, o) == Rational(count_class(ClassTag::UASM, o));
        ok = ok && class_count_formula(ClassTag::UUASM, 4) == Rational(count_class(ClassTag::UUASM, 4));
        ok = ok && class_count_formula(ClassTag::VHPASM, 6) == Rational(count_class(ClassTag::VHPASM, 6));
        ok = ok && class_count_formula(ClassTag::UOSASM, 8) == Rational(count_class(ClassTag::UOSASM, 8));
        for (int o : {1, 3, 9, 11})
            ok = ok && class_count_formula(ClassTag::VOS, o) == Rational(count_class(ClassTag::VOS, o));
        report(5, ok, "OS/UASM/UUASM/VHPASM/UOSASM/VOSASM counts match the formulas");
    }

    // 6. x-enumeration specializations against the partition-function predictions
    begin();
    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            IntPolynomial gen = x_enumeration(ClassTag::ASM, n);
            ok = ok && gen.eval(Rational(0)) == Rational(factorial(static_cast<unsigned long>(n)));
            ok = ok && gen.eval(Rational(2)) == pow2(static_cast<long>(n) * (n - 1) / 2);
            ok = ok && gen.eval(Rational(3)) == specialized_enumeration(ClassTag::ASM, 3, n);
        }
        for (int o : {5, 7}) {
            IntPolynomial gen = x_enumeration(ClassTag::VS, o);
            for (int xv : {0, 2})
                ok = ok && gen.eval(Rational(xv)) == specialized_enumeration(ClassTag::VS, xv, o);
        }
        for (int o : {4, 6}) {
            IntPolynomial gen = x_enumeration(ClassTag::HTS, o);
            for (int xv : {0, 2})
                ok = ok && gen.eval(Rational(xv)) == specialized_enumeration(ClassTag::HTS, xv, o);
        }
        report(6, ok, "0-, 2-, 3-enumerations match the specialized partition functions");
    }

    // 7. all seventeen identities, sizes 1..3, 10 seeds each
    begin();
    {
        bool ok = true;
        for (IdentityId id : all_identity_ids())
            for (int size = 1; size <= 3; ++size)
                for (uint64_t seed = 1; seed <= 10; ++seed) ok = ok && verify_identity(id, size, seed).equal;
        report(7, ok, "17 determinant/Pfaffian identities hold at sizes 1..3 for 10 seeds");
    }

    // 8. every theorem row: partition function = character side at n = 1, 2
    begin();
    {
        bool ok = true;
        for (const auto& row : all_partition_rows())
            for (int n = 1; n <= 2; ++n) ok = ok && verify_partition_row(row, n, 1, 5).all_equal;
        report(8, ok, "40 evaluation-theorem rows agree in exact Q(zeta_24) arithmetic at n=1,2");
    }

    // 9. every specialization-table row at its smallest nontrivial size, 5 seeds
    begin();
    {
        bool ok = true;
        for (const char* table : {"T1", "T2", "T3", "T4"})
            for (size_t i = 0; i < table_rows(table).size(); ++i)
                for (uint64_t seed = 1; seed <= 5; ++seed)
                    ok = ok && verify_table_row(table, i, 2, seed).equal;
        report(9, ok, "39 table recipes (0..3-enumeration) verify for 5 seeds");
    }

    // 10. dimension oracle equivalence + SSYT cross-check
    begin();
    {
        bool ok = true;
        std::vector<std::pair<GroupSpec, Weight>> pairs;
        for (long n = 1; 2 * n <= 8; ++n) {
            pairs.push_back({gl(static_cast<int>(2 * n)), delta(n - 1, n - 1)});
            pairs.push_back({gl(static_cast<int>(2 * n)), delta(n, n - 1)});
            pairs.push_back({sp_group(static_cast<int>(4 * n)), delta(n - 1, n - 1)});
            pairs.push_back({pin_group(static_cast<int>(4 * n)), delta_h(2 * n + 1, 2 * n - 1)});
            pairs.push_back({pin_group(static_cast<int>(4 * n + 1)), delta(n, n - 1)});
            pairs.push_back({gl(static_cast<int>(2 * n)), delta2(2 * n - 2, 2 * n - 2)});
        }
        for (long n = 1; 2 * n + 1 <= 8; ++n) {
            pairs.push_back({gl(static_cast<int>(2 * n + 1)), delta(n, n - 1)});
            pairs.push_back({sp_group(static_cast<int>(4 * n + 2)), delta(n, n - 1)});
        }
        for (long n = 1; n <= 8; ++n) {
            pairs.push_back({gl(static_cast<int>(n)), delta(n / 2, n / 2 - 1)});
            pairs.push_back({gl(static_cast<int>(n)), delta((n - 1) / 2, (n - 1) / 2)});
            pairs.push_back({gl(static_cast<int>(n)), delta2(n, n - 2)});
            pairs.push_back({gl(static_cast<int>(n)), delta2(n - 1, n - 1)});
            pairs.push_back({pin_group(static_cast<int>(2 * n + 1)), delta2(n, n - 2)});
            pairs.push_back({pin_group(static_cast<int>(2 * n + 1)), delta2(n - 1, n - 1)});
            pairs.push_back({pin_group(static_cast<int>(2 * n)), delta2_h(2 * n + 1, 2 * n - 3)});
            pairs.push_back({pin_group(static_cast<int>(2 * n)), delta2_h(2 * n - 1, 2 * n - 1)});
            pairs.push_back({pin_group(static_cast<int>(2 * n + 1)),
                             detail::delta_union(DeltaKind::Delta, make_rational(n, 2),
                                                 make_rational(n - 2, 2))});
            pairs.push_back({pin_group(static_cast<int>(2 * n + 1)),
                             detail::delta_union(DeltaKind::Delta, make_rational(n - 1, 2),
                                                 make_rational(n - 1, 2))});
        }
        // independent pure computations; sweep them on a small pool
        std::vector<char> equal(pairs.size(), 0);
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= pairs.size()) return;
                equal[i] = weyl_dim(pairs[i].first, pairs[i].second) ==
                           dim_principal(pairs[i].first, pairs[i].second);
            }
        };
        {
            std::vector<std::thread> pool;
            unsigned hw = std::max(2u, std::thread::hardware_concurrency());
            for (unsigned t = 0; t < hw; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (char e : equal) ok = ok && e;

        std::vector<std::vector<int>> shapes = {{1},    {2},    {1, 1},    {3},       {2, 1},
                                                {1, 1, 1}, {2, 2}, {3, 2, 1}, {2, 2, 1, 1}, {4, 2},
                                                {3, 3}, {2, 2, 2}};
        for (int rank = 1; rank <= 4; ++rank)
            for (const auto& shape : shapes) {
                if (static_cast<int>(shape.size()) > rank) continue;
                std::vector<long> doubled;
                for (int p : shape) doubled.push_back(2 * p);
                ok = ok && weyl_dim(gl(rank), Weight(doubled)) ==
                               Rational(static_cast<long>(testing::ssyt_count(shape, rank)));
            }
        report(10, ok, "weyl_dim = principal-specialization oracle on all theorem weights; GL dims = SSYT counts");
    }

    // 11. odd-order conjecture report: HTS side proves out at 1, 3, 5; DS reported
    begin();
    {
        bool ok = true;
        for (int o : {1, 3, 5})
            ok = ok && class_count_formula(ClassTag::HTS, o) == Rational(count_class(ClassTag::HTS, o));
        ok = ok && class_count_formula(ClassTag::DS, 1) == Rational(count_class(ClassTag::DS, 1));
        std::string note = "conjecture check: HTS orders 1,3,5 equal";
        for (int o : {3, 5}) {
            bool agree = class_count_formula(ClassTag::DS, o) == Rational(count_class(ClassTag::DS, o));
            note += std::string("; DS order ") + std::to_string(o) +
                    (agree ? " agrees" : " reported (formula differs from brute force)");
        }
        report(11, ok, note);
    }

    // 12. census reports are byte-identical across worker counts (elapsed excluded)
    begin();
    {
        bool ok = false;
        if (cli_path) {
            auto run = [&](int jobs, const std::string& path) {
                std::string cmd = std::string(cli_path) +
                                  " census --class asm,vs,qts,uasm --max-order 5 --seed 7 --jobs " +
                                  std::to_string(jobs) + " --out " + path;
                return std::system(cmd.c_str()) == 0;
            };
            bool ran = run(1, "/tmp/asmkit_census_j1.json") && run(4, "/tmp/asmkit_census_j4.json") &&
                       run(8, "/tmp/asmkit_census_j8.json");
            if (ran) {
                auto load = [](const std::string& path) {
                    std::ifstream f(path);
                    nlohmann::json j = nlohmann::json::parse(f);
                    j.erase("elapsed_ms");
                    return j.dump();
                };
                std::string a = load("/tmp/asmkit_census_j1.json");
                ok = a == load("/tmp/asmkit_census_j4.json") && a == load("/tmp/asmkit_census_j8.json");
            }
        }
        report(12, ok, "census JSON identical across --jobs 1, 4, 8 (elapsed_ms excluded)");
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures);
    return failures == 0 ? 0 : 1;
}
