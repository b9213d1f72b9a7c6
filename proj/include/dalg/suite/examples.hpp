#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dalg/examples.hpp"
#include "dalg/ideals.hpp"
#include "dalg/suite/report.hpp"

namespace dalg::suite {

struct ExampleReport {
    std::string name;
    std::string field;
    ClassificationFlags flags;
    std::optional<std::string> verdict;
    /// (statement, holds)
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> table_diffs;

    bool ok() const {
        if (!table_diffs.empty()) return false;
        for (const auto& [what, holds] : checks)
            if (!holds) return false;
        return true;
    }
    void expect(std::string what, bool holds) { checks.emplace_back(std::move(what), holds); }

    json to_json() const {
        json j;
        j["name"] = name;
        j["field"] = field;
        j["flags"] = flags.to_string();
        if (verdict) j["simplicity"] = *verdict;
        json c = json::array();
        for (const auto& [what, holds] : checks) c.push_back({{"expect", what}, {"holds", holds}});
        j["expectations"] = c;
        if (!table_diffs.empty()) j["table_diffs"] = table_diffs;
        return j;
    }
};

template <FieldScalar S>
std::string format_tensor_brief(const Tensor2<S>& t) {
    std::string out;
    for (std::size_t k = 0; k < t.dim(); ++k)
        for (std::size_t l = 0; l < t.dim(); ++l)
            if (!t(k, l).is_zero())
                out += (out.empty() ? "" : " + ") + t(k, l).to_string() + " e" + std::to_string(k + 1) + "⊗e" +
                       std::to_string(l + 1);
    return out.empty() ? "0" : out;
}

/// Entry-wise differences between two tables, as text.
template <FieldScalar S>
std::vector<std::string> table_diff(const DoubleAlgebra<S>& got, const DoubleAlgebra<S>& want) {
    std::vector<std::string> out;
    if (got.dim() != want.dim()) return {"dimension " + std::to_string(got.dim()) + " vs " + std::to_string(want.dim())};
    const std::size_t n = got.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(got.constants(i, j) == want.constants(i, j)))
                out.push_back("{{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}}: got " +
                              format_tensor_brief(got.constants(i, j)) + ", expected " +
                              format_tensor_brief(want.constants(i, j)));
    return out;
}

namespace detail {

struct Expect {
    std::optional<bool> lie, associative, commutative;
    std::optional<VerdictKind> verdict;
    bool not_simple_unless_complete = false;
};

template <FieldScalar S>
ExampleReport describe(const DoubleAlgebra<S>& V, const Expect& e) {
    ExampleReport r;
    r.name = V.name();
    r.field = V.field().tag();
    r.flags = classify_direct(V);
    if (e.lie) r.expect(std::string(*e.lie ? "" : "not ") + "Lie", r.flags.is_lie == *e.lie);
    if (e.associative) r.expect(std::string(*e.associative ? "" : "not ") + "associative", r.flags.is_associative == *e.associative);
    if (e.commutative) r.expect(std::string(*e.commutative ? "" : "not ") + "commutative", r.flags.is_commutative == *e.commutative);

    bool complete = V.dim() <= 2 || V.is_zero_bracket();
    if constexpr (FiniteFieldDescriptor<field_of<S>>) complete = true;
    if (complete) {
        auto v = simplicity_report(V);
        r.verdict = to_string(v.kind) + " (" + to_string(v.method) + ")";
        if (v.witness) {
            r.expect("witness is a nonzero proper ideal",
                     !v.witness->is_zero() && !v.witness->is_full() && is_ideal(V, *v.witness));
            *r.verdict += " witness " + v.witness->to_string();
        }
        if (e.verdict) r.expect("simplicity: " + to_string(*e.verdict), v.kind == *e.verdict);
        if (e.not_simple_unless_complete) r.expect("not simple", v.kind != VerdictKind::Simple);
    }
    return r;
}

}  // namespace detail

/// Builds every standard example over Q (and the GF(2)(t) example),
/// classifies it and checks the stated properties.
inline std::vector<ExampleReport> run_examples() {
    using detail::describe;
    using detail::Expect;
    RationalField Q;
    using Q_t = Rational;
    std::vector<ExampleReport> out;
    const Expect comm{{}, true, true, {}, false};
    const Expect lie{true, {}, {}, {}, true};

    for (std::size_t n : {1, 2, 3}) {
        auto vc = commutative_vc<Q_t>(Q, n);
        Expect e = comm;
        e.verdict = n == 1 ? VerdictKind::Simple : VerdictKind::NotSimple;
        out.push_back(describe(vc, e));
        auto op = describe(opposite(vc).renamed(vc.name() + "^op"), comm);
        auto swapped = DoubleAlgebra<Q_t>::empty_table(Q, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) swapped[i * n + j] = vc.constants(j, i);
        op.expect("{{u,v}}^op = {{v,u}}", opposite(vc) == DoubleAlgebra<Q_t>(Q, n, swapped));
        op.expect(n == 1 ? "V_c^op = V_c" : "V_c^op != V_c", (opposite(vc) == vc) == (n == 1));
        out.push_back(op);
    }
    {
        auto V = v2<Q_t>(Q);
        out.push_back(describe(V, {{}, true, false, {}, false}));
        out.push_back(describe(opposite(V).renamed("V_2^op"), {{}, true, {}, {}, false}));
    }
    {
        Matrix<Q_t> phi(Q, 2, 2);
        phi(0, 1) = Q.one();
        out.push_back(describe(phi_algebra(phi), comm));
    }
    {
        auto Z = module_extension(AssociativeAlgebra<Q_t>::ground_field(Q), {Matrix<Q_t>::identity(Q, 1)});
        auto r = describe(Z.renamed("Z+A (A = Q)"), {{}, true, false, {}, false});
        auto d = table_diff(Z, v2<Q_t>(Q));
        r.expect("equals V_2", d.empty());
        out.push_back(r);
    }
    {
        auto L = l2<Q_t>(Q);
        auto r = describe(L, lie);
        r.table_diffs = table_diff(commutator_algebra(v2<Q_t>(Q)), L);
        r.expect("V_2^(-) = L_2", r.table_diffs.empty());
        out.push_back(r);
        out.push_back(describe(opposite(L).renamed("L_2^op"), lie));
    }
    {
        auto Ld = l2_dual<Q_t>(Q);
        auto r = describe(Ld, lie);
        r.table_diffs = table_diff(dual(l2<Q_t>(Q)), Ld);
        r.expect("dual(L_2) = L_2*", r.table_diffs.empty());
        out.push_back(r);
    }
    for (std::size_t n : {1, 2}) out.push_back(describe(l2n<Q_t>(Q, n), lie));
    for (std::size_t D = 1; D <= 5; ++D) out.push_back(describe(p1_quotient<Q_t>(Q, D), lie));
    out.push_back(describe(yangian_dy<Q_t>(Q, 2, 4), lie));
    {
        const auto R = real_example_operator();
        auto r = describe(real_example(), {{}, {}, true, VerdictKind::Simple, false});
        r.table_diffs = table_diff(bracket_from_operator(R), real_example());
        r.expect("operator reproduces the table", r.table_diffs.empty());
        r.expect("R^2 = 2R", R * R == Q.from_int(2) * R);
        out.push_back(r);
    }
    {
        const auto R = gf2t_example_operator();
        const auto ids = check_identities(R);
        auto r = describe(gf2t_example(), {{}, {}, true, VerdictKind::Simple, false});
        r.expect("symmetric", ids.symmetric);
        r.expect("averaging", ids.averaging);
        r.expect("R^2 = 0", (R * R).is_zero());
        out.push_back(r);
    }
    return out;
}

inline RunReport examples_report(const std::vector<ExampleReport>& reports) {
    RunReport r;
    r.run = "examples";
    for (const auto& e : reports) r.add(e.name + " over " + e.field, e.ok(), e.to_json());
    r.counts["examples"] = reports.size();
    return r;
}

}  // namespace dalg::suite
