#include <catch2/catch_amalgamated.hpp>

#include <congr/invariant.hpp>
#include <congr/matrix.hpp>
#include <congr/rng.hpp>

#include <vector>

using congr::FieldDescriptor;
using congr::Matrix;
using congr::Rng;
using congr::Scalar;
using congr::SigmaMode;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rational();

// Independent oracle for 2x2 input: on A = [[a,b],[c,d]] with det = ad - bc,
//   A^-1 = det^-1 [[d,-b],[-c,a]],  ^tA A^-1 = det^-1 [[ad-bc, ...],[..., ad-bc? ]]
// Working the trace out by hand:
//   ^tA = [[a,c],[b,d]]
//   (^tA A^-1)_11 = (a*d + c*(-c)) / det
//   (^tA A^-1)_22 = (b*(-b) + d*a) / det
//   trace = (2ad - b^2 - c^2) / (ad - bc).
Scalar sigma2_closed_form(const Matrix& m) {
    const Scalar a = m.at(1, 1), b = m.at(1, 2), c = m.at(2, 1), d = m.at(2, 2);
    const Scalar two = Scalar::of_integer(m.field(), 2);
    return (two * a * d - b * b - c * c) / (a * d - b * c);
}

// Trace-route oracle assembled from public matrix primitives only.
Scalar sigma_by_direct_trace(const Matrix& m) {
    return congr::trace(congr::transpose(m) * congr::inverse(m));
}

} // namespace

TEST_CASE("sigma matches hand-worked values", "[invariant]") {
    for (int n = 1; n <= 5; ++n)
        REQUIRE(congr::sigma(Matrix::identity(kQ, n)) == Scalar::of_integer(kQ, n));

    // Any nonsingular diagonal matrix: ^tA A^-1 = I.
    REQUIRE(congr::sigma(Matrix::from_integers(kQ, 3, {2, 0, 0, 0, -5, 0, 0, 0, 7}))
                .str() == "3");

    // Unitriangular shear: trace(^tA A^-1) = 1 + (1 - 1) + ... worked by the
    // 2x2 closed form (2*1*1 - 1 - 0) / 1 = 1.
    REQUIRE(congr::sigma(Matrix::from_integers(kQ, 2, {1, 1, 0, 1})).str() == "1");

    // Skew 2x2: (0 - 1 - 1) / (0 + 1) = -2.
    REQUIRE(congr::sigma(Matrix::from_integers(kQ, 2, {0, 1, -1, 0})).str() == "-2");

    // One-element base case: sigma([[c]]) = 1 for any nonzero c.
    REQUIRE(congr::sigma(Matrix::from_integers(kQ, 1, {-17})).str() == "1");
}

TEST_CASE("the three sigma routes agree with each other and the oracles", "[invariant]") {
    Rng rng(101);
    for (const auto& f : {kQ, FieldDescriptor::prime(7)}) {
        for (int n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 30; ++trial) {
                const Matrix a = congr::random_nonsingular(n, f, rng, 9);
                const Scalar t = congr::sigma(a, SigmaMode::TraceForm);
                const Scalar c = congr::sigma(a, SigmaMode::CofactorForm);
                const Scalar j = congr::sigma(a, SigmaMode::AdjugateForm);
                REQUIRE(t == c);
                REQUIRE(t == j);
                REQUIRE(t == sigma_by_direct_trace(a));
                if (n == 2) REQUIRE(t == sigma2_closed_form(a));
            }
        }
    }
}

TEST_CASE("sigma rejects singular input on every route", "[invariant]") {
    const Matrix s = Matrix::from_integers(kQ, 2, {1, 2, 2, 4});
    REQUIRE_THROWS_AS(congr::sigma(s, SigmaMode::TraceForm), congr::SingularMatrixError);
    REQUIRE_THROWS_AS(congr::sigma(s, SigmaMode::CofactorForm), congr::SingularMatrixError);
    REQUIRE_THROWS_AS(congr::sigma(s, SigmaMode::AdjugateForm), congr::SingularMatrixError);
}

TEST_CASE("congruence transforms match the worked example", "[invariant]") {
    const Matrix a = Matrix::from_integers(kQ, 2, {1, 1, 0, 1});
    const Matrix x = Matrix::from_integers(kQ, 2, {2, 0, 0, 1});
    REQUIRE(congr::congruence_transform(a, x) ==
            Matrix::from_integers(kQ, 2, {4, 2, 0, 1}));
    REQUIRE(congr::congruence_transform(a, Matrix::identity(kQ, 2)) == a);

    REQUIRE_THROWS_AS(
        congr::congruence_transform(a, Matrix::from_integers(kQ, 2, {1, 2, 2, 4})),
        congr::SingularTransformError);
    REQUIRE_THROWS_AS(congr::congruence_transform(a, Matrix::identity(kQ, 3)),
                      congr::DimensionMismatchError);
}

TEST_CASE("sigma is invariant under congruence", "[invariant]") {
    Rng rng(103);
    for (const auto& f : {kQ, FieldDescriptor::prime(5)}) {
        for (int n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 25; ++trial) {
                const Matrix a = congr::random_nonsingular(n, f, rng, 9);
                const Matrix x = congr::random_nonsingular(n, f, rng, 9);
                REQUIRE(congr::sigma(congr::congruence_transform(a, x)) == congr::sigma(a));
                REQUIRE(congr::sigma(congr::scaled_congruence_transform(a, x)) ==
                        congr::sigma(a));
            }
        }
    }
}

TEST_CASE("scaled congruence by c*I rescales by c^(2-n)", "[invariant]") {
    Rng rng(107);
    const Scalar c = Scalar::of_integer(kQ, 3);
    for (int n = 2; n <= 4; ++n) {
        const Matrix a = congr::random_nonsingular(n, kQ, rng, 9);
        const Matrix ci = congr::scalar_mul(c, Matrix::identity(kQ, n));
        // det(cI) = c^n, ^t(cI) a (cI) = c^2 a, so the result is c^(2-n) a.
        Scalar factor = Scalar::one(kQ);
        for (int k = 0; k < n - 2; ++k) factor /= c;
        REQUIRE(congr::scaled_congruence_transform(a, ci) == congr::scalar_mul(factor, a));
    }
}

TEST_CASE("sigma identities: transpose, inverse, adjugate, scaling, symmetric",
          "[invariant]") {
    Rng rng(109);
    for (const auto& f : {kQ, FieldDescriptor::prime(7)}) {
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                const Matrix a = congr::random_nonsingular(n, f, rng, 9);
                const Scalar s = congr::sigma(a);
                REQUIRE(congr::sigma(congr::transpose(a)) == s);
                REQUIRE(congr::sigma(congr::inverse(a)) == s);
                if (n >= 2) REQUIRE(congr::sigma(congr::adjugate(a)) == s);
                const Scalar c = congr::detail::random_nonzero(f, rng, 9);
                REQUIRE(congr::sigma(congr::scalar_mul(c, a)) == s);
            }
        }
    }

    // Symmetric matrices: sigma = n reduced into the field. In GF(3) the 3x3
    // case reads 0, which the field arithmetic produces on its own.
    const FieldDescriptor f3 = FieldDescriptor::prime(3);
    const Matrix sym3 = Matrix::from_integers(f3, 3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    REQUIRE(congr::is_symmetric(sym3));
    REQUIRE(congr::is_nonsingular(sym3));
    REQUIRE(congr::sigma(sym3) == Scalar::of_integer(f3, 3));
    REQUIRE(congr::sigma(sym3).residue_value() == 0);
}

TEST_CASE("kappa is 3 minus sigma and needs a 3x3 input", "[invariant]") {
    REQUIRE(congr::kappa(Matrix::identity(kQ, 3)).is_zero());
    REQUIRE(congr::kappa(Matrix::from_integers(kQ, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}))
                .str() == "1");
    REQUIRE_THROWS_AS(congr::kappa(Matrix::identity(kQ, 2)), congr::DimensionMismatchError);
    REQUIRE_THROWS_AS(congr::kappa(Matrix::from_integers(kQ, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1})),
                      congr::SingularMatrixError);
}

TEST_CASE("the explicit kappa polynomial matches its worked values", "[invariant]") {
    REQUIRE(congr::kappa_explicit(Matrix::identity(kQ, 3)).is_zero());

    // Hand evaluation: on [[1,0,0],[0,1,1],[0,-1,1]] every monomial with an
    // a12, a13, a21, or a31 factor vanishes; the survivor is
    // a11*(a23 - a32)^2 = 1*(1-(-1))^2 = 4, and det = 2, so kappa = 2.
    REQUIRE(congr::kappa_explicit(Matrix::from_integers(kQ, 3, {1, 0, 0, 0, 1, 1, 0, -1, 1}))
                .str() == "2");

    REQUIRE_THROWS_AS(congr::kappa_explicit(Matrix::identity(kQ, 2)),
                      congr::DimensionMismatchError);
    REQUIRE_THROWS_AS(
        congr::kappa_explicit(Matrix::from_integers(kQ, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1})),
        congr::SingularMatrixError);
}

TEST_CASE("both kappa routes agree on random nonsingular input", "[invariant]") {
    Rng rng(113);
    for (const auto& f : {kQ, FieldDescriptor::prime(5), FieldDescriptor::prime(2)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Matrix a = congr::random_nonsingular(3, f, rng, 9);
            REQUIRE(congr::kappa_explicit(a) == congr::kappa(a));
        }
    }
}

TEST_CASE("d_invariant and the canonical form", "[invariant]") {
    const Scalar z = Scalar::zero(kQ);
    REQUIRE(congr::d_invariant(z, z, z).is_zero());
    REQUIRE(congr::d_invariant(Scalar::of_integer(kQ, 1), Scalar::of_integer(kQ, 2),
                               Scalar::of_integer(kQ, 3))
                .str() == "8"); // 1 + 4 + 9 - 6

    REQUIRE(congr::canonical_form(z, z, z) == Matrix::identity(kQ, 3));
    REQUIRE_THROWS_AS(
        congr::d_invariant(z, z, Scalar::zero(FieldDescriptor::prime(5))),
        congr::FieldMismatchError);

    Rng rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = Scalar::of_rational(rng.int_in(-9, 9), rng.int_in(1, 9));
        const Scalar b = Scalar::of_rational(rng.int_in(-9, 9), rng.int_in(1, 9));
        const Scalar c = Scalar::of_rational(rng.int_in(-9, 9), rng.int_in(1, 9));
        const Matrix cf = congr::canonical_form(a, b, c);
        REQUIRE(congr::determinant(cf).is_one());
        // kappa on the canonical form recovers D: expanding ^tA A^-1 on the
        // unitriangular form gives diagonal 1, 1 - a^2, 1 + abc - b^2 - c^2,
        // so the trace is 3 - D and kappa = D.
        REQUIRE(congr::kappa(cf) == congr::d_invariant(a, b, c));
        REQUIRE(congr::sigma(cf) ==
                Scalar::of_integer(kQ, 3) - congr::d_invariant(a, b, c));
    }

    // Exhaustive over GF(3)^3 as a small-field cross-check.
    const FieldDescriptor f3 = FieldDescriptor::prime(3);
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            for (std::uint32_t c = 0; c < 3; ++c) {
                const Scalar sa = Scalar::of_residue(f3, a);
                const Scalar sb = Scalar::of_residue(f3, b);
                const Scalar sc = Scalar::of_residue(f3, c);
                REQUIRE(congr::kappa(congr::canonical_form(sa, sb, sc)) ==
                        congr::d_invariant(sa, sb, sc));
            }
}
