#pragma once

#include <cassert>

#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/matrix.hpp"

namespace congr {

/// The three algebraically equal routes to sigma. They must agree exactly on
/// every nonsingular input; the test suites verify this rather than assume it.
enum class SigmaMode {
    TraceForm,    // Tr(^tA * A^-1)
    CofactorForm, // (1/|A|) * sum over i,j of a_ij * cof_ji(A)
    AdjugateForm, // (1/|A|) * Tr(A * adj(^tA))
};

/// sigma(A) = Tr(^tA * A^-1), the congruence invariant of a nonsingular
/// matrix, computed by the requested route.
inline Scalar sigma(const Matrix& a, SigmaMode mode) {
    switch (mode) {
    case SigmaMode::TraceForm:
        return trace(mat_mul(transpose(a), inverse(a)));
    case SigmaMode::CofactorForm: {
        const Scalar det = determinant(a);
        if (det.is_zero()) throw SingularMatrixError();
        Scalar acc = Scalar::zero(a.field());
        for (int i = 1; i <= a.dim(); ++i)
            for (int j = 1; j <= a.dim(); ++j) acc += a.at(i, j) * cofactor(a, j, i);
        return acc / det;
    }
    case SigmaMode::AdjugateForm: {
        const Scalar det = determinant(a);
        if (det.is_zero()) throw SingularMatrixError();
        return trace(mat_mul(a, adjugate(transpose(a)))) / det;
    }
    }
    throw ParseError("unknown sigma mode");
}

inline Scalar sigma(const Matrix& a) {
    Scalar value = sigma(a, SigmaMode::TraceForm);
#ifndef NDEBUG
    assert(value == sigma(a, SigmaMode::CofactorForm));
#endif
    return value;
}

/// ^tX * A * X. The transform X must be nonsingular.
inline Matrix congruence_transform(const Matrix& a, const Matrix& x) {
    detail::require_compatible(a, x);
    if (!is_nonsingular(x)) throw SingularTransformError();
    return mat_mul(transpose(x), mat_mul(a, x));
}

/// det(X)^-1 * ^tX * A * X, the transform under which two 3x3 structure
/// matrices describe isomorphic zeropotent algebras. Defined for all n.
inline Matrix scaled_congruence_transform(const Matrix& a, const Matrix& x) {
    detail::require_compatible(a, x);
    const Scalar det = determinant(x);
    if (det.is_zero()) throw SingularTransformError();
    return scalar_mul(det.inverse(), mat_mul(transpose(x), mat_mul(a, x)));
}

namespace detail {

inline void require_dim3(const Matrix& a) {
    if (a.dim() != 3)
        throw DimensionMismatchError("kappa is defined for 3x3 matrices, got n = " +
                                     std::to_string(a.dim()));
}

} // namespace detail

/// kappa(A) = 3 - sigma(A) for nonsingular 3x3 A.
inline Scalar kappa(const Matrix& a) {
    detail::require_dim3(a);
    return Scalar::of_integer(a.field(), 3) - sigma(a);
}

/// kappa as the explicit homogeneous degree-3 polynomial in the entries,
/// divided by the determinant. Equal to kappa() on every nonsingular 3x3
/// matrix; the equivalence is enforced by tests, never assumed.
inline Scalar kappa_explicit(const Matrix& a) {
    detail::require_dim3(a);
    const Scalar det = determinant(a);
    if (det.is_zero()) throw SingularMatrixError();

    const FieldDescriptor& f = a.field();
    const auto e = [&](int i, int j) -> const Scalar& { return a.at(i, j); };
    const auto num = [&](long long v) { return Scalar::of_integer(f, v); };

    const Scalar poly =
        e(1, 3) * e(1, 3) * e(2, 2)
        + num(3) * e(1, 2) * e(2, 3) * e(3, 1)
        - e(2, 1) * e(2, 3) * e(3, 1)
        + e(2, 2) * e(3, 1) * e(3, 1)
        + e(1, 1) * (e(2, 3) - e(3, 2)) * (e(2, 3) - e(3, 2))
        - e(1, 2) * e(3, 1) * e(3, 2)
        - e(2, 1) * e(3, 1) * e(3, 2)
        - e(1, 3) * (e(2, 1) * e(2, 3) + num(2) * e(2, 2) * e(3, 1)
                     - num(3) * e(2, 1) * e(3, 2) + e(1, 2) * (e(2, 3) + e(3, 2)))
        + e(1, 2) * e(1, 2) * e(3, 3)
        - num(2) * e(1, 2) * e(2, 1) * e(3, 3)
        + e(2, 1) * e(2, 1) * e(3, 3);

    return poly / det;
}

/// D(a,b,c) = a^2 + b^2 + c^2 - abc, the value kappa takes on the canonical
/// form below.
inline Scalar d_invariant(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.field() != b.field() || a.field() != c.field()) throw FieldMismatchError();
    return a * a + b * b + c * c - a * b * c;
}

/// The upper unitriangular canonical form
///   [1 a b]
///   [0 1 c]
///   [0 0 1]
/// representing a rank-3 straight zeropotent algebra. Always nonsingular.
inline Matrix canonical_form(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.field() != b.field() || a.field() != c.field()) throw FieldMismatchError();
    const FieldDescriptor& f = a.field();
    const Scalar zero = Scalar::zero(f);
    const Scalar one = Scalar::one(f);
    return Matrix(f, 3, {one, a, b, zero, one, c, zero, zero, one});
}

} // namespace congr
