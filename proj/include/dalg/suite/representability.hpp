#pragma once

#include <cstdint>

#include "dalg/examples.hpp"
#include "dalg/suite/report.hpp"
#include "dalg/suite/sweep.hpp"

namespace dalg::suite {

struct RepresentabilityReport {
    std::uint64_t operators = 0;
    std::uint64_t associative = 0;
    /// Associative algebras V with V^(-) equal to the L_2* table.
    std::uint64_t preimages = 0;
    bool l2_has_preimage = false;
    bool zero_has_preimage = false;

    bool ok() const { return preimages == 0 && l2_has_preimage && zero_has_preimage; }

    RunReport to_report() const {
        RunReport r;
        r.run = "representability GF(2) n=2";
        r.add("no_associative_preimage_of_L2_dual", preimages == 0,
              {{"kind", "evidence (finite field, dimension 2 only)"}, {"associative_operators", associative},
               {"preimages", preimages}});
        r.add("L2_is_commutator_of_V2", l2_has_preimage);
        r.add("zero_bracket_is_commutator_of_V_c", zero_has_preimage);
        r.counts["operators"] = operators;
        r.counts["associative"] = associative;
        return r;
    }
};

/// Over GF(2), n = 2: no associative double algebra V has V^(-) = L_2*.
inline RepresentabilityReport run_negative_representability_check() {
    const PrimeField F(2);
    RepresentabilityReport rep;
    const auto target = l2_dual<Zp>(F);
    std::vector<std::uint32_t> d(16);
    for (std::uint64_t code = 0; code < (1u << 16); ++code) {
        for (std::size_t i = 0; i < 16; ++i) d[i] = (code >> i) & 1u;
        const auto R = operator_from_digits(F, 2, d);
        ++rep.operators;
        if (!classify_operator(R).is_associative) continue;
        ++rep.associative;
        if (commutator_algebra(bracket_from_operator(R)) == target) ++rep.preimages;
    }
    rep.l2_has_preimage = commutator_algebra(v2<Zp>(F)) == l2<Zp>(F);
    rep.zero_has_preimage = commutator_algebra(commutative_vc<Zp>(F, 2)).is_zero_bracket();
    return rep;
}

}  // namespace dalg::suite
