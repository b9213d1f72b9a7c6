#pragma once

#include <optional>
#include <string>

#include "dalg/endv.hpp"
#include "dalg/ideals.hpp"

// Subspaces of End V attached to an operator, and the structural facts
// about left averaging pairs (R, R*) and symmetric averaging operators.
// Subspaces of End V use the vec coordinates of endv.hpp.

namespace dalg {

template <FieldScalar S>
Subspace<S> image(const EndOperator<S>& R) {
    return Subspace<S>::column_space(R.matrix());
}

template <FieldScalar S>
Subspace<S> kernel(const EndOperator<S>& R) {
    return kernel_basis(R.matrix());
}

/// Whether x*y lies in `target` for all x in `left`, y in `right`.
template <FieldScalar S>
bool products_within(const Subspace<S>& left, const Subspace<S>& right, const Subspace<S>& target, std::size_t n) {
    const auto& f = target.field();
    for (const auto& x : left.basis_vectors()) {
        auto X = unvec(f, n, x);
        for (const auto& y : right.basis_vectors())
            if (!target.contains(vec(X * unvec(f, n, y)))) return false;
    }
    return true;
}

/// Some x with R(x) = 1, if the identity lies in the image.
template <FieldScalar S>
std::optional<Matrix<S>> preimage_of_identity(const EndOperator<S>& R) {
    auto x = solve(R.matrix(), vec(Matrix<S>::identity(R.field(), R.n())));
    if (!x) return std::nullopt;
    return unvec(R.field(), R.n(), *x);
}

/// For R and R* both left averaging, with A = End V and B = R(A) + R*(A).
struct GeneralPropReport {
    bool b_is_subalgebra = false;              ///< B B ⊆ B
    bool image_right_ideal = false;            ///< R(A) B ⊆ R(A)
    bool conj_image_right_ideal = false;       ///< R*(A) B ⊆ R*(A)
    bool kernel_left_module = false;           ///< B Ker R ⊆ Ker R
    bool conj_kernel_left_module = false;      ///< B Ker R* ⊆ Ker R*
    bool kernel_times_conj_image = false;      ///< Ker R R*(A) ⊆ Ker R ∩ Ker R*
    bool conj_kernel_times_image = false;      ///< Ker R* R(A) ⊆ Ker R ∩ Ker R*

    bool all() const {
        return b_is_subalgebra && image_right_ideal && conj_image_right_ideal && kernel_left_module &&
               conj_kernel_left_module && kernel_times_conj_image && conj_kernel_times_image;
    }
};

template <FieldScalar S>
GeneralPropReport general_properties(const EndOperator<S>& R) {
    const std::size_t n = R.n();
    const auto Rs = conjugate(R);
    const auto img = image(R), cimg = image(Rs), ker = kernel(R), cker = kernel(Rs);
    const auto B = img + cimg;
    const auto both_kernels = ker.intersect(cker);
    GeneralPropReport rep;
    rep.b_is_subalgebra = products_within(B, B, B, n);
    rep.image_right_ideal = products_within(img, B, img, n);
    rep.conj_image_right_ideal = products_within(cimg, B, cimg, n);
    rep.kernel_left_module = products_within(B, ker, ker, n);
    rep.conj_kernel_left_module = products_within(B, cker, cker, n);
    rep.kernel_times_conj_image = products_within(ker, cimg, both_kernels, n);
    rep.conj_kernel_times_image = products_within(cker, img, both_kernels, n);
    return rep;
}

/// If alpha*id equals R, returns alpha.
template <FieldScalar S>
std::optional<S> scalar_multiple_of_identity(const EndOperator<S>& R) {
    const auto& m = R.matrix();
    const S alpha = m(0, 0);
    if (!(R == alpha * EndOperator<S>::identity(R.field(), R.n()))) return std::nullopt;
    return alpha;
}

/// Ker R = 0 implies R = R* = alpha id with alpha != 0 (vacuous otherwise).
template <FieldScalar S>
bool nondegenerate_case_holds(const EndOperator<S>& R) {
    if (!kernel(R).is_zero()) return true;
    auto alpha = scalar_multiple_of_identity(R);
    return alpha && !alpha->is_zero() && conjugate(R) == R;
}

/// R(A) + R*(A) = A implies Ker R = 0 (vacuous otherwise).
template <FieldScalar S>
bool full_sum_forces_injective(const EndOperator<S>& R) {
    if (!(image(R) + image(conjugate(R))).is_full()) return true;
    return kernel(R).is_zero();
}

/// The two shapes of a symmetric averaging operator R with u = R(1).
enum class AveragingType {
    Zero,
    /// R(A) ∩ Ker R = 0, R^2 = uR, u commutes with R(A).
    Split,
    /// R(A) ⊆ Ker R, so R^2 = 0.
    Nilpotent,
    Other,
};

inline std::string to_string(AveragingType t) {
    switch (t) {
    case AveragingType::Zero: return "zero";
    case AveragingType::Split: return "split";
    case AveragingType::Nilpotent: return "nilpotent";
    case AveragingType::Other: return "other";
    }
    return "?";
}

template <FieldScalar S>
AveragingType averaging_type(const EndOperator<S>& R) {
    if (R.is_zero()) return AveragingType::Zero;
    const std::size_t n = R.n();
    const auto& f = R.field();
    const auto img = image(R), ker = kernel(R);
    if (ker.contains(img)) return AveragingType::Nilpotent;
    if (!img.intersect(ker).is_zero()) return AveragingType::Other;
    const auto u = R(Matrix<S>::identity(f, n));
    for (const auto& y : img.basis_vectors()) {
        auto Y = unvec(f, n, y);
        if (!(u * Y == Y * u)) return AveragingType::Other;
    }
    for (std::size_t c = 0; c < n * n; ++c) {
        auto Rx = R.on_unit(c);
        if (!(R(Rx) == u * Rx)) return AveragingType::Other;
    }
    return AveragingType::Split;
}

/// Nilpotent nonzero symmetric averaging operators need char F | dim V.
template <FieldScalar S>
bool characteristic_divides_dim(const EndOperator<S>& R) {
    auto p = R.field().characteristic();
    return p != 0 && R.n() % p == 0;
}

/// R(A)V: the span of R(x)v over x in End V, v in V.
template <FieldScalar S>
Subspace<S> image_applied(const EndOperator<S>& R) {
    const std::size_t n = R.n();
    const auto& f = R.field();
    std::vector<Vector<S>> gens;
    for (std::size_t c = 0; c < n * n; ++c) {
        const auto Rx = R.on_unit(c);
        for (std::size_t j = 0; j < n; ++j) gens.push_back(Rx.column(j));
    }
    return Subspace<S>::span(f, n, gens);
}

/// Whether the algebra spanned by `ops` (given by vec coordinates) has no
/// invariant subspace of V other than 0 and V. Enumerates every subspace,
/// so only for small finite fields.
template <FieldScalar S>
    requires FiniteFieldDescriptor<field_of<S>>
bool acts_irreducibly(const Subspace<S>& algebra, std::size_t n) {
    const auto& f = algebra.field();
    std::vector<Matrix<S>> ops;
    for (const auto& b : algebra.basis_vectors()) ops.push_back(unvec(f, n, b));
    for (std::size_t d = 1; d < n; ++d) {
        bool invariant_found = false;
        enumerate_subspaces<S>(f, n, d, [&](const Subspace<S>& W) {
            for (const auto& op : ops)
                for (const auto& w : W.basis_vectors())
                    if (!W.contains(op * w)) return true;
            invariant_found = true;
            return false;
        });
        if (invariant_found) return false;
    }
    return true;
}

}  // namespace dalg
