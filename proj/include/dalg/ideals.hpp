#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dalg/algebra.hpp"
#include "dalg/endv.hpp"
#include "dalg/field/roots.hpp"

namespace dalg {

/// {{V,I}} + {{I,V}} ⊆ I⊗V + V⊗I.
template <FieldScalar S>
bool is_ideal(const DoubleAlgebra<S>& V, const Subspace<S>& I) {
    const std::size_t n = V.dim();
    if (I.ambient() != n) throw dimension_mismatch("subspace is not in the algebra's space");
    if (I.is_zero() || I.is_full()) return true;
    const auto sl = sleeve(I);
    for (const auto& u : I.basis_vectors())
        for (std::size_t j = 0; j < n; ++j) {
            auto e = unit_vector<S>(V.field(), n, j);
            if (!sl.contains(V.bracket(e, u).coords()) || !sl.contains(V.bracket(u, e).coords())) return false;
        }
    return true;
}

enum class VerdictKind { Simple, NotSimple, Unknown };
enum class SearchMethod { Definition, Exhaustive, InvariantClosure, Projective1D };

inline std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Simple: return "simple";
    case VerdictKind::NotSimple: return "not-simple";
    case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

inline std::string to_string(SearchMethod m) {
    switch (m) {
    case SearchMethod::Definition: return "definition";
    case SearchMethod::Exhaustive: return "exhaustive";
    case SearchMethod::InvariantClosure: return "invariant-closure";
    case SearchMethod::Projective1D: return "projective-1d";
    }
    return "?";
}

/// A witness, when present, is a nonzero proper ideal. Simple comes only
/// from complete methods.
template <FieldScalar S>
struct IdealVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    SearchMethod method = SearchMethod::Definition;
    std::optional<Subspace<S>> witness;
    std::string reason;

    bool simple() const { return kind == VerdictKind::Simple; }
    bool not_simple() const { return kind == VerdictKind::NotSimple; }
};

/// Proper nonzero ideals invariant under R(End V) and R*(End V), found by
/// closing basis vectors and kernel vectors of those operators. Incomplete:
/// an empty result says nothing about simplicity.
template <FieldScalar S>
std::vector<Subspace<S>> invariant_ideal_search(const DoubleAlgebra<S>& V) {
    const std::size_t n = V.dim();
    const auto& f = V.field();
    const auto R = operator_from_bracket(V);
    const auto Rs = conjugate(R);
    std::vector<Matrix<S>> gens;
    auto add_gen = [&](Matrix<S> m) {
        if (m.is_zero() || std::find(gens.begin(), gens.end(), m) != gens.end()) return;
        gens.push_back(std::move(m));
    };
    for (std::size_t c = 0; c < n * n; ++c) {
        add_gen(R.on_unit(c));
        add_gen(Rs.on_unit(c));
    }
    std::vector<Vector<S>> seeds;
    for (std::size_t j = 0; j < n; ++j) seeds.push_back(unit_vector<S>(f, n, j));
    for (const auto& g : gens)
        for (auto& v : kernel_basis(g).basis_vectors()) seeds.push_back(std::move(v));

    std::vector<Subspace<S>> found;
    for (const auto& seed : seeds) {
        auto closure = cyclic_closure<S>(f, n, {seed}, gens);
        if (closure.is_zero() || closure.is_full()) continue;
        if (std::find(found.begin(), found.end(), closure) != found.end()) continue;
        if (is_ideal(V, closure)) found.push_back(std::move(closure));
    }
    return found;
}

/// Number of d-dimensional subspaces of GF(q)^n (Gaussian binomial).
inline double subspace_count(double q, std::size_t n, std::size_t d) {
    if (d > n) return 0;
    double num = 1, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
        num *= std::pow(q, static_cast<double>(n - i)) - 1;
        den *= std::pow(q, static_cast<double>(i + 1)) - 1;
    }
    return std::round(num / den);
}

/// Visits every d-dimensional subspace of F^n exactly once, in order of
/// pivot pattern and then free entries. Stops early if `visit` returns
/// false.
template <FieldScalar S>
    requires FiniteFieldDescriptor<field_of<S>>
void enumerate_subspaces(const field_of<S>& f, std::size_t n, std::size_t d,
                         const std::function<bool(const Subspace<S>&)>& visit) {
    if (d > n) return;
    const std::uint64_t q = f.order();
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        // free slots: (row, col) with col > pivot of row and col not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
        std::vector<std::uint64_t> digits(free.size(), 0);
        while (true) {
            std::vector<Vector<S>> rows(d, Vector<S>(n, f.zero()));
            for (std::size_t r = 0; r < d; ++r) rows[r][piv[r]] = f.one();
            for (std::size_t s = 0; s < free.size(); ++s) rows[free[s].first][free[s].second] = f.element(digits[s]);
            if (!visit(Subspace<S>::span(f, n, rows))) return;
            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
            if (s == digits.size()) break;
        }
        // next combination of pivot columns
        std::size_t i = d;
        while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
        if (i == 0) return;
        ++piv[i - 1];
        for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
}

struct ExhaustiveOptions {
    /// Dimensions to search; empty means every proper dimension 1..n-1.
    std::vector<std::size_t> dims;
    /// Maximum number of candidate subspaces.
    double cap = 1e6;
    /// Keep going after the first ideal.
    bool collect_all = false;
};

template <FieldScalar S>
struct ExhaustiveResult {
    std::vector<Subspace<S>> ideals;
    std::size_t examined = 0;
    /// Every proper dimension was searched.
    bool complete = false;
};

/// Tests every candidate subspace of the requested dimensions for the ideal
/// property. Throws cap_exceeded if there are too many candidates.
template <FieldScalar S>
    requires FiniteFieldDescriptor<field_of<S>>
ExhaustiveResult<S> find_ideals_exhaustive(const DoubleAlgebra<S>& V, const ExhaustiveOptions& opt = {}) {
    const std::size_t n = V.dim();
    const auto& f = V.field();
    std::vector<std::size_t> dims = opt.dims;
    if (dims.empty())
        for (std::size_t d = 1; d < n; ++d) dims.push_back(d);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    ExhaustiveResult<S> res;
    res.complete = true;
    for (std::size_t d = 1; d < n; ++d)
        if (std::find(dims.begin(), dims.end(), d) == dims.end()) res.complete = false;

    double total = 0;
    for (auto d : dims) {
        if (d == 0 || d >= n) throw invalid_argument("ideal search dimension must lie in 1..n-1");
        total += subspace_count(static_cast<double>(f.order()), n, d);
    }
    if (total > opt.cap)
        throw cap_exceeded("exhaustive ideal search needs " + std::to_string(static_cast<long double>(total)) +
                           " candidates (cap " + std::to_string(static_cast<long double>(opt.cap)) + ")");
    for (auto d : dims) {
        bool stop = false;
        enumerate_subspaces<S>(f, n, d, [&](const Subspace<S>& cand) {
            ++res.examined;
            if (is_ideal(V, cand)) {
                res.ideals.push_back(cand);
                if (!opt.collect_all) stop = true;
            }
            return !stop;
        });
        if (stop) break;
    }
    return res;
}

template <FieldScalar S>
    requires FiniteFieldDescriptor<field_of<S>>
IdealVerdict<S> exhaustive_ideal_search(const DoubleAlgebra<S>& V, const ExhaustiveOptions& opt = {}) {
    IdealVerdict<S> v;
    v.method = SearchMethod::Exhaustive;
    ExhaustiveResult<S> res;
    try {
        res = find_ideals_exhaustive(V, opt);
    } catch (const cap_exceeded& e) {
        v.kind = VerdictKind::Unknown;
        v.reason = e.what();
        return v;
    }
    if (!res.ideals.empty()) {
        v.kind = VerdictKind::NotSimple;
        v.witness = res.ideals.front();
        v.reason = "nonzero proper ideal found";
    } else if (!res.complete) {
        v.kind = VerdictKind::Unknown;
        v.reason = "no ideals in the searched dimensions";
    } else if (V.is_zero_bracket()) {
        v.kind = VerdictKind::NotSimple;
        v.reason = "{{V,V}} = 0";
    } else {
        v.kind = VerdictKind::Simple;
        v.reason = "no nonzero proper ideals";
    }
    return v;
}

/// Outcome of the 1-dimensional ideal search in dimension 2.
template <FieldScalar S>
struct OneDimSearchResult {
    /// Every line is an ideal (all constraint polynomials vanish).
    bool all = false;
    std::vector<Subspace<S>> lines;
};

/// All 1-dimensional ideals of a 2-dimensional algebra. The line spanned by
/// v is an ideal iff xi⊗xi kills {{v,e_i}} and {{e_i,v}} (i = 1, 2), where
/// xi is the functional vanishing on v. Chart v = e1 + b e2, xi = b e1* - e2*
/// gives four polynomials in b; the remaining line e2 (xi = e1*) is checked
/// directly.
template <FieldScalar S>
OneDimSearchResult<S> projective_1d_ideal_search(const DoubleAlgebra<S>& V, const RootOptions& ropt = {}) {
    if (V.dim() != 2) throw invalid_argument("projective 1-d search needs a 2-dimensional algebra");
    const auto& f = V.field();
    using P = UniPoly<S>;
    const P beta = P::variable(f);
    const P one = P::constant(f, f.one());
    const std::array<P, 2> v{one, beta};
    const std::array<P, 2> xi{beta, -one};

    // (xi⊗xi)(sum_a v_a * T_a) for tensors T_a.
    auto constraint = [&](const Tensor2<S>& t0, const Tensor2<S>& t1) {
        P acc(f);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l)
                acc = acc + xi[k] * xi[l] * (v[0] * t0(k, l) + v[1] * t1(k, l));
        return acc;
    };
    std::vector<P> polys;
    for (std::size_t i = 0; i < 2; ++i) {
        polys.push_back(constraint(V.constants(0, i), V.constants(1, i)));
        polys.push_back(constraint(V.constants(i, 0), V.constants(i, 1)));
    }

    OneDimSearchResult<S> res;
    P g(f);
    for (const auto& p : polys) g = poly_gcd(g, p);
    if (g.is_zero()) {
        res.all = true;
        return res;
    }
    if (g.degree() > 0)
        for (const auto& b : roots_in_field(g, ropt))
            res.lines.push_back(Subspace<S>::span(f, 2, std::vector<Vector<S>>{Vector<S>{f.one(), b}}));

    bool e2_line = true;
    for (std::size_t i = 0; i < 2; ++i)
        if (!V.constants(1, i)(0, 0).is_zero() || !V.constants(i, 1)(0, 0).is_zero()) e2_line = false;
    if (e2_line) res.lines.push_back(Subspace<S>::span(f, 2, std::vector<Vector<S>>{unit_vector<S>(f, 2, 1)}));
    return res;
}

struct SimplicityOptions {
    double exhaustive_cap = 1e6;
    RootOptions roots;
};

/// Dispatch: the definition ({{V,V}} != 0), then exhaustive enumeration
/// over a small finite field, then the projective search in dimension 2,
/// then invariant closures (which can only refute simplicity).
template <FieldScalar S>
IdealVerdict<S> simplicity_report(const DoubleAlgebra<S>& V, const SimplicityOptions& opt = {}) {
    const auto& f = V.field();
    const std::size_t n = V.dim();
    IdealVerdict<S> v;
    if (V.is_zero_bracket()) {
        v.kind = VerdictKind::NotSimple;
        v.method = SearchMethod::Definition;
        v.reason = "{{V,V}} = 0";
        if (n > 1) v.witness = Subspace<S>::span(f, n, std::vector<Vector<S>>{unit_vector<S>(f, n, 0)});
        return v;
    }
    if (n == 1) {
        v.kind = VerdictKind::Simple;
        v.method = SearchMethod::Exhaustive;
        v.reason = "dimension 1 with nonzero bracket";
        return v;
    }
    if constexpr (FiniteFieldDescriptor<field_of<S>>) {
        double total = 0;
        for (std::size_t d = 1; d < n; ++d) total += subspace_count(static_cast<double>(f.order()), n, d);
        if (total <= opt.exhaustive_cap) return exhaustive_ideal_search(V, {{}, opt.exhaustive_cap, false});
    }
    std::string note;
    if (n == 2) {
        try {
            auto r = projective_1d_ideal_search(V, opt.roots);
            v.method = SearchMethod::Projective1D;
            if (r.all || !r.lines.empty()) {
                v.kind = VerdictKind::NotSimple;
                v.witness = r.all ? Subspace<S>::span(f, 2, std::vector<Vector<S>>{unit_vector<S>(f, 2, 0)}) : r.lines.front();
                v.reason = r.all ? "every line is an ideal" : "1-dimensional ideal found";
            } else {
                v.kind = VerdictKind::Simple;
                v.reason = "no 1-dimensional ideals";
            }
            return v;
        } catch (const cap_exceeded& e) {
            note = std::string(" (projective search: ") + e.what() + ")";
        }
    }
    auto found = invariant_ideal_search(V);
    v.method = SearchMethod::InvariantClosure;
    if (!found.empty()) {
        v.kind = VerdictKind::NotSimple;
        v.witness = found.front();
        v.reason = "invariant subspace ideal found";
    } else {
        v.kind = VerdictKind::Unknown;
        v.reason = "no complete method applies" + note;
    }
    return v;
}

}  // namespace dalg
