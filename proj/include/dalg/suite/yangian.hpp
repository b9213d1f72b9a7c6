#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dalg/examples.hpp"
#include "dalg/suite/report.hpp"

namespace dalg::suite {

/// Index of T_m^{ij} (0-based i, j) in dY(N, D).
inline std::size_t yangian_index(std::size_t N, std::size_t m, std::size_t i, std::size_t j) { return (m * N + i) * N + j; }

/// The multiplication table written out directly:
///   [[T_m^{ij}, T_n^{kl}]] = sum_{r=0}^{min(m,n)-1} (T_r^{kj} ⊗ T_{m+n-r-1}^{il} - T_{m+n-r-1}^{kj} ⊗ T_r^{il}).
/// Only entries with m+n-1 < D are filled in; the others are left zero.
template <FieldScalar S>
DoubleAlgebra<S> yangian_formula(const field_of<S>& f, std::size_t N, std::size_t D) {
    const std::size_t dim = N * N * D;
    auto table = DoubleAlgebra<S>::empty_table(f, dim);
    for (std::size_t m = 0; m < D; ++m)
        for (std::size_t n = 0; n < D; ++n) {
            if (m + n >= D + 1) continue;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    for (std::size_t k = 0; k < N; ++k)
                        for (std::size_t l = 0; l < N; ++l) {
                            auto& t = table[yangian_index(N, m, i, j) * dim + yangian_index(N, n, k, l)];
                            for (std::size_t r = 0; r < std::min(m, n); ++r) {
                                const std::size_t s = m + n - r - 1;
                                auto a = yangian_index(N, r, k, j), b = yangian_index(N, s, i, l);
                                auto c = yangian_index(N, s, k, j), d = yangian_index(N, r, i, l);
                                t(a, b) = t(a, b) + f.one();
                                t(c, d) = t(c, d) - f.one();
                            }
                        }
        }
    return DoubleAlgebra<S>(f, dim, std::move(table), "dY formula");
}

struct YangianReport {
    std::size_t N = 0, D = 0;
    std::size_t compared = 0;
    std::size_t mismatch_count = 0;
    std::vector<std::string> mismatches;
    /// The construction agrees with the formula multiplied by -1.
    bool matches_negated = false;
    bool is_lie = false;

    bool ok() const { return mismatch_count == 0 && is_lie; }

    RunReport to_report() const {
        RunReport r;
        r.run = "yangian N=" + std::to_string(N) + " D=" + std::to_string(D);
        r.add("table_matches_formula", mismatch_count == 0,
              {{"compared_brackets", compared}, {"mismatches", mismatch_count}, {"first_mismatches", mismatches}});
        r.add("is_lie", is_lie);
        r.observe("table_matches_negated_formula", {{"holds", matches_negated}});
        r.counts["dimension"] = N * N * D;
        return r;
    }
};

/// Compares p1_quotient(D) ⊗ V_c^op(N) ⊗ V_c(N) with the written-out
/// table on every pair (T_m^{ij}, T_n^{kl}) with m+n-1 < D.
template <FieldScalar S>
YangianReport run_yangian_check(const field_of<S>& f, std::size_t N, std::size_t D) {
    if (N == 0 || D == 0) throw invalid_argument("N and D must be positive");
    if (N * N * D > 64) throw cap_exceeded("N^2 D must be at most 64");
    YangianReport rep;
    rep.N = N;
    rep.D = D;
    const auto built = yangian_dy<S>(f, N, D);
    const auto formula = yangian_formula<S>(f, N, D);
    rep.matches_negated = true;
    for (std::size_t m = 0; m < D; ++m)
        for (std::size_t n = 0; n < D; ++n) {
            if (m + n >= D + 1) continue;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    for (std::size_t k = 0; k < N; ++k)
                        for (std::size_t l = 0; l < N; ++l) {
                            const auto a = yangian_index(N, m, i, j), b = yangian_index(N, n, k, l);
                            const auto& got = built.constants(a, b);
                            const auto& want = formula.constants(a, b);
                            ++rep.compared;
                            if (!(got == -want)) rep.matches_negated = false;
                            if (got == want) continue;
                            if (rep.mismatch_count++ < 10)
                                rep.mismatches.push_back("(m,i,j,n,k,l) = (" + std::to_string(m) + "," + std::to_string(i + 1) +
                                                         "," + std::to_string(j + 1) + "," + std::to_string(n) + "," +
                                                         std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
                        }
        }
    rep.is_lie = classify_direct(built).is_lie;
    return rep;
}

}  // namespace dalg::suite
