#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "congr/detail/gf_small.hpp"
#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/invariant.hpp"
#include "congr/matrix.hpp"

// Three-dimensional zeropotent algebras presented by a structure matrix A:
// with basis e1, e2, e3 the products of basis vectors are read off rows of A
// via ^t(e2 e3, e3 e1, e1 e2) = A ^t(e1, e2, e3). General products follow by
// bilinearity and x^2 = 0.

namespace congr {

/// A vector in the underlying 3-dimensional space, with 1-based coordinates.
class Vector3 {
public:
    Vector3(Scalar c1, Scalar c2, Scalar c3)
        : c_{std::move(c1), std::move(c2), std::move(c3)} {
        if (!(c_[0].field() == c_[1].field()) || !(c_[0].field() == c_[2].field()))
            throw FieldMismatchError("vector coordinates lie in different fields");
    }

    static Vector3 zero(const FieldDescriptor& f) {
        return Vector3(Scalar::zero(f), Scalar::zero(f), Scalar::zero(f));
    }

    /// Basis vector e_i, i in {1,2,3}.
    static Vector3 basis(const FieldDescriptor& f, int i) {
        Vector3 v = zero(f);
        v.at(i) = Scalar::one(f);
        return v;
    }

    const FieldDescriptor& field() const { return c_[0].field(); }

    const Scalar& at(int i) const {
        if (i < 1 || i > 3)
            throw IndexOutOfRangeError("vector index " + std::to_string(i) +
                                       " outside 1..3");
        return c_[static_cast<std::size_t>(i - 1)];
    }
    Scalar& at(int i) { return const_cast<Scalar&>(std::as_const(*this).at(i)); }

    friend bool operator==(const Vector3& x, const Vector3& y) {
        return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2];
    }

    friend Vector3 operator+(const Vector3& x, const Vector3& y) {
        return Vector3(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2]);
    }

    friend Vector3 operator*(const Scalar& c, const Vector3& x) {
        return Vector3(c * x.c_[0], c * x.c_[1], c * x.c_[2]);
    }

private:
    std::array<Scalar, 3> c_;
};

/// Options for the brute-force isomorphism search over GF(p).
struct IsoOptions {
    std::uint32_t max_p = 5; ///< refuse moduli above this (hard ceiling 7)
};

struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix> witness; ///< first X in entry-lexicographic order
};

class ZeropotentAlgebra3 {
public:
    explicit ZeropotentAlgebra3(Matrix structure) : a_(std::move(structure)) {
        if (a_.dim() != 3)
            throw DimensionMismatchError("structure matrix must be 3 x 3, got " +
                                         std::to_string(a_.dim()));
    }

    const Matrix& structure() const { return a_; }
    const FieldDescriptor& field() const { return a_.field(); }

    /// Bilinear product determined by the structure matrix: xy = w A where
    /// w = (x2 y3 - x3 y2, x3 y1 - x1 y3, x1 y2 - x2 y1).
    Vector3 product(const Vector3& x, const Vector3& y) const {
        if (!(x.field() == field()) || !(y.field() == field()))
            throw FieldMismatchError("product arguments lie outside the algebra's field");
        const Scalar w1 = x.at(2) * y.at(3) - x.at(3) * y.at(2);
        const Scalar w2 = x.at(3) * y.at(1) - x.at(1) * y.at(3);
        const Scalar w3 = x.at(1) * y.at(2) - x.at(2) * y.at(1);
        Vector3 out = Vector3::zero(field());
        for (int j = 1; j <= 3; ++j)
            out.at(j) = w1 * a_.at(1, j) + w2 * a_.at(2, j) + w3 * a_.at(3, j);
        return out;
    }

private:
    Matrix a_;
};

/// The invariant of the algebra, via its structure matrix. Only defined when
/// the structure matrix is nonsingular.
inline Scalar sigma_of_algebra(const ZeropotentAlgebra3& alg) {
    if (!is_nonsingular(alg.structure()))
        throw SingularMatrixError("algebra invariant needs a nonsingular structure matrix");
    return sigma(alg.structure());
}

/// Decides isomorphism of two algebras over the same small prime field by
/// exhausting GL(3,p): they are isomorphic exactly when some nonsingular X
/// satisfies B = det(X)^-1 ^tX A X. Returns the first witness in
/// entry-lexicographic order when one exists.
inline IsoResult is_isomorphic_bruteforce(const ZeropotentAlgebra3& lhs,
                                          const ZeropotentAlgebra3& rhs,
                                          const IsoOptions& opts = {}) {
    if (!(lhs.field() == rhs.field()))
        throw FieldMismatchError("isomorphism test needs both algebras over one field");
    if (!lhs.field().is_prime())
        throw UnsupportedFieldError(
            "brute-force isomorphism search only runs over prime fields");
    const std::uint32_t p = lhs.field().prime_modulus();
    const std::uint32_t cap = std::min<std::uint32_t>(opts.max_p, detail::kGfMaxPrime);
    if (p > cap)
        throw UnsupportedFieldError("isomorphism search capped at p <= " +
                                    std::to_string(cap) + ", got p = " + std::to_string(p));

    const detail::GfMat a = detail::gf_from_matrix(lhs.structure());
    const detail::GfMat b = detail::gf_from_matrix(rhs.structure());
    IsoResult result;
    detail::for_each_gl(3, p, [&](const detail::GfMat& x, std::uint64_t) {
        if (result.isomorphic) return;
        if (detail::gf_scaled_congruence(a, x) == b) {
            result.isomorphic = true;
            result.witness = detail::gf_to_matrix(x);
        }
    });
    return result;
}

} // namespace congr
