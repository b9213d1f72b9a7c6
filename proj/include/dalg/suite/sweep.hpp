#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dalg/algebra.hpp"
#include "dalg/endv.hpp"
#include "dalg/ideals.hpp"
#include "dalg/structure.hpp"
#include "dalg/suite/report.hpp"

namespace dalg::suite {

struct SweepOptions {
    std::uint32_t p = 2;
    std::size_t n = 2;
    bool full = true;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    /// Largest operator count accepted in full mode.
    double full_cap = 1e7;
};

struct Violation {
    std::string check;
    std::string op;
    std::string detail;
};

inline const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names{
        "classification_agreement",
        "identity_equivalence",
        "lie_has_proper_ideal",
        "rota_baxter_image_avoids_identity",
        "simple_associative_is_commutative",
        "averaging_difference_is_skew_rota_baxter",
        "general_properties",
        "nondegenerate_case",
        "full_sum_forces_injective",
        "dichotomy_for_simple",
        "image_applied_is_ideal",
        "image_applied_proper_when_irreducible",
    };
    return names;
}

struct SweepReport {
    std::string field;
    std::size_t n = 0;
    std::string mode;
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> counts;
    std::map<std::string, std::uint64_t> violation_counts;
    std::vector<Violation> violations;
    std::map<std::string, std::vector<std::string>> witnesses;

    static constexpr std::size_t kept_per_check = 10;
    static constexpr std::size_t witnesses_per_kind = 3;

    SweepReport() {
        for (const auto& c : sweep_check_names()) violation_counts[c] = 0;
    }

    void violate(const std::string& check, const std::string& op, std::string detail = {}) {
        if (violation_counts[check]++ < kept_per_check) violations.push_back({check, op, std::move(detail)});
    }
    void witness(const std::string& kind, const std::string& op) {
        auto& w = witnesses[kind];
        if (w.size() < witnesses_per_kind) w.push_back(op);
    }
    void merge(const SweepReport& o) {
        total += o.total;
        for (const auto& [k, v] : o.counts) counts[k] += v;
        for (const auto& v : o.violations)
            if (std::count_if(violations.begin(), violations.end(), [&](const Violation& x) { return x.check == v.check; }) <
                static_cast<long>(kept_per_check))
                violations.push_back(v);
        for (const auto& [k, v] : o.violation_counts) violation_counts[k] += v;
        for (const auto& [k, ws] : o.witnesses)
            for (const auto& w : ws) witness(k, w);
    }
    std::uint64_t violation_total() const {
        std::uint64_t t = 0;
        for (const auto& [k, v] : violation_counts) t += v;
        return t;
    }
    bool ok() const { return violation_total() == 0; }

    RunReport to_report() const {
        RunReport r;
        r.run = "sweep " + field + " n=" + std::to_string(n) + " " + mode;
        for (const auto& name : sweep_check_names()) {
            json d = {{"violations", violation_counts.at(name)}};
            json ex = json::array();
            for (const auto& v : violations)
                if (v.check == name) ex.push_back({{"operator", v.op}, {"detail", v.detail}});
            if (!ex.empty()) d["examples"] = ex;
            r.add(name, violation_counts.at(name) == 0, d);
        }
        json obs = json::object();
        for (const char* k : {"dichotomy_other_type", "image_applied_full_for_proper_right_ideal",
                              "simple_associative_dim_gt_1"})
            obs[k] = counts.count(k) ? counts.at(k) : 0;
        json wit = json::object();
        for (const auto& [k, ws] : witnesses) wit[k] = ws;
        r.observe("unconditional_forms", {{"counts", obs}, {"witnesses", wit}});
        r.counts["total"] = total;
        for (const auto& [k, v] : counts) r.counts[k] = v;
        return r;
    }
};

/// Row-major entries of the operator matrix, e.g. "0110000110000110".
inline std::string operator_code(const EndOperator<Zp>& R) {
    std::string s;
    const auto& m = R.matrix();
    const bool small = R.field().modulus() < 10;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!small && !s.empty()) s += ",";
            s += std::to_string(m(r, c).value());
        }
    return s;
}

inline EndOperator<Zp> operator_from_digits(const PrimeField& F, std::size_t n, const std::vector<std::uint32_t>& d) {
    const std::size_t N = n * n;
    Matrix<Zp> m(F, N, N);
    for (std::size_t i = 0; i < N * N; ++i) m(i / N, i % N) = F.from_int(d[i]);
    return EndOperator<Zp>(n, std::move(m));
}

/// Every check of the sweep on one operator.
inline void examine_operator(const EndOperator<Zp>& R, SweepReport& rep) {
    const std::size_t n = R.n();
    const auto code = operator_code(R);
    ++rep.total;

    const auto ids = check_identities(R);
    const auto fo = flags_from_report(ids);
    const auto V = bracket_from_operator(R);
    const auto fd = classify_direct(V);
    if (!(fo == fd)) rep.violate("classification_agreement", code, "operator " + fo.to_string() + " / direct " + fd.to_string());
    if (!(ids.eq3 == ids.eq4 && ids.eq4 == ids.eq5 && ids.eq6 == ids.eq7 && ids.eq7 == ids.eq8))
        rep.violate("identity_equivalence", code);

    if (fo.is_lie) {
        ++rep.counts["skew_rota_baxter"];
        if (preimage_of_identity(R)) rep.violate("rota_baxter_image_avoids_identity", code);
        if (n > 1) {
            auto res = find_ideals_exhaustive(V);
            if (res.ideals.empty()) rep.violate("lie_has_proper_ideal", code);
        }
    }
    if (fo.is_commutative) ++rep.counts["symmetric_averaging"];
    if (ids.symmetric && ids.averaging) {
        if (averaging_type(R) == AveragingType::Other) {
            ++rep.counts["dichotomy_other_type"];
            rep.witness("dichotomy_other_type", code);
        }
    }
    if (!fo.is_associative) return;

    ++rep.counts["left_averaging_pair"];
    const auto verdict = exhaustive_ideal_search(V);
    const bool simple = verdict.simple();
    if (simple) {
        ++rep.counts["simple_associative"];
        rep.witness("simple_associative", code);
        if (n > 1) ++rep.counts["simple_associative_dim_gt_1"];
        if (!(ids.symmetric && fd.is_commutative)) rep.violate("simple_associative_is_commutative", code);
        if (fo.is_commutative) {
            auto t = averaging_type(R);
            bool ok = t == AveragingType::Split || (t == AveragingType::Nilpotent && characteristic_divides_dim(R));
            if (!ok) rep.violate("dichotomy_for_simple", code, to_string(t));
        }
    }

    const auto diff = check_identities(averaging_difference(R));
    if (!(diff.skew && diff.rota_baxter)) rep.violate("averaging_difference_is_skew_rota_baxter", code);

    const auto gp = general_properties(R);
    if (!gp.all()) rep.violate("general_properties", code);
    if (!nondegenerate_case_holds(R)) rep.violate("nondegenerate_case", code);
    if (!full_sum_forces_injective(R)) rep.violate("full_sum_forces_injective", code);

    const auto IV = image_applied(R);
    if (!is_ideal(V, IV)) rep.violate("image_applied_is_ideal", code);
    const auto img = image(R);
    const auto B = img + image(conjugate(R));
    if (!(img == B) && IV.is_full()) {
        if (acts_irreducibly(B, n)) rep.violate("image_applied_proper_when_irreducible", code);
        ++rep.counts["image_applied_full_for_proper_right_ideal"];
        rep.witness("image_applied_full_for_proper_right_ideal", code);
    }
}

/// Full enumeration of GF(p)-operators on End F^n, or a seeded sample.
inline SweepReport run_sweep(const SweepOptions& opt) {
    const PrimeField F(opt.p);
    const std::size_t N = opt.n * opt.n, entries = N * N;
    SweepReport base;
    base.field = F.tag();
    base.n = opt.n;

    std::vector<std::vector<std::uint32_t>> samples;
    std::uint64_t count;
    if (opt.full) {
        double total = std::pow(static_cast<double>(opt.p), static_cast<double>(entries));
        if (total > opt.full_cap)
            throw cap_exceeded("full sweep needs " + std::to_string(static_cast<long double>(total)) + " operators");
        count = static_cast<std::uint64_t>(total);
        base.mode = "full";
    } else {
        base.mode = "sample k=" + std::to_string(opt.samples) + " seed=" + std::to_string(opt.seed);
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint32_t> dist(0, opt.p - 1);
        samples.resize(opt.samples, std::vector<std::uint32_t>(entries));
        for (auto& s : samples)
            for (auto& d : s) d = dist(rng);
        count = opt.samples;
    }

    auto digits_of = [&](std::uint64_t idx) {
        if (!opt.full) return samples[idx];
        std::vector<std::uint32_t> d(entries);
        for (std::size_t i = 0; i < entries; ++i, idx /= opt.p) d[i] = static_cast<std::uint32_t>(idx % opt.p);
        return d;
    };
    auto work = [&](std::uint64_t lo, std::uint64_t hi, SweepReport& out) {
        for (std::uint64_t i = lo; i < hi; ++i) examine_operator(operator_from_digits(F, opt.n, digits_of(i)), out);
    };

    const unsigned w = std::max(1u, opt.workers);
    std::vector<SweepReport> parts(w);
    if (w == 1) {
        work(0, count, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned k = 0; k < w; ++k)
            threads.emplace_back(work, count * k / w, count * (k + 1) / w, std::ref(parts[k]));
        for (auto& t : threads) t.join();
    }
    for (const auto& part : parts) base.merge(part);
    return base;
}

}  // namespace dalg::suite
