#include <catch2/catch_amalgamated.hpp>

#include <congr/detail/gf_small.hpp>
#include <congr/invariant.hpp>
#include <congr/rng.hpp>

#include <cstdint>
#include <vector>

using congr::FieldDescriptor;
using congr::Matrix;
using congr::Rng;
using congr::Scalar;
namespace gfd = congr::detail;

namespace {

gfd::GfMat random_gf(int n, std::uint32_t p, Rng& rng) {
    gfd::GfMat m{n, p, {}};
    for (int k = 0; k < n * n; ++k)
        m.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rng.below(p));
    return m;
}

} // namespace

TEST_CASE("packed codes round-trip and order lexicographically", "[gf]") {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (const int n : {1, 2, 3}) {
            const std::uint64_t total = gfd::gf_code_count(n, p);
            if (total > 20000) continue;
            std::uint32_t prev_packed = 0;
            for (std::uint64_t code = 0; code < total; ++code) {
                const gfd::GfMat m = gfd::gf_decode(code, n, p);
                REQUIRE(gfd::gf_encode(m) == code);
                const std::uint32_t w = gfd::gf_pack(m);
                REQUIRE(gfd::gf_unpack(w, n, p) == m);
                // Both codes increase together, so they sort identically.
                if (code > 0) REQUIRE(w > prev_packed);
                prev_packed = w;
            }
        }
    }
}

TEST_CASE("packed arithmetic agrees with the exact layer", "[gf]") {
    Rng rng(211);
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        for (const int n : {1, 2, 3}) {
            for (int trial = 0; trial < 50; ++trial) {
                const gfd::GfMat a = random_gf(n, p, rng);
                const gfd::GfMat b = random_gf(n, p, rng);
                const Matrix am = gfd::gf_to_matrix(a);
                const Matrix bm = gfd::gf_to_matrix(b);

                REQUIRE(gfd::gf_from_matrix(am) == a); // conversion round trip
                REQUIRE(gfd::gf_to_matrix(gfd::gf_mul(a, b)) == am * bm);
                REQUIRE(gfd::gf_to_matrix(gfd::gf_transpose(a)) == congr::transpose(am));
                REQUIRE(Scalar::of_residue(f, gfd::gf_det(a)) == congr::determinant(am));
                REQUIRE(gfd::gf_nonsingular(a) == congr::is_nonsingular(am));

                if (gfd::gf_nonsingular(a)) {
                    REQUIRE(Scalar::of_residue(f, gfd::gf_sigma(a)) == congr::sigma(am));
                    REQUIRE(gfd::gf_to_matrix(gfd::gf_adjugate(a)) == congr::adjugate(am));
                }
                if (gfd::gf_nonsingular(b)) {
                    REQUIRE(gfd::gf_to_matrix(gfd::gf_congruence(a, b)) ==
                            congr::congruence_transform(am, bm));
                    REQUIRE(gfd::gf_to_matrix(gfd::gf_scaled_congruence(a, b)) ==
                            congr::scaled_congruence_transform(am, bm));
                }
            }
        }
    }
}

TEST_CASE("packed sigma agrees on every element of GL(2,3)", "[gf]") {
    const FieldDescriptor f = FieldDescriptor::prime(3);
    std::uint64_t seen = 0;
    gfd::for_each_gl(2, 3, [&](const gfd::GfMat& m, std::uint64_t) {
        REQUIRE(Scalar::of_residue(f, gfd::gf_sigma(m)) == congr::sigma(gfd::gf_to_matrix(m)));
        ++seen;
    });
    REQUIRE(seen == 48);
}

TEST_CASE("for_each_gl streams exactly the nonsingular matrices in order", "[gf]") {
    for (const auto& [n, p, expected] :
         {std::tuple{1, 3u, 2ull}, {1, 5u, 4ull}, {2, 3u, 48ull}, {2, 5u, 480ull},
          {3, 2u, 168ull}, {3, 3u, 11232ull}}) {
        std::uint64_t count = 0;
        std::uint64_t prev_code = 0;
        gfd::for_each_gl(n, p, [&](const gfd::GfMat& m, std::uint64_t code) {
            REQUIRE(gfd::gf_nonsingular(m));
            REQUIRE(gfd::gf_encode(m) == code);
            if (count > 0) REQUIRE(code > prev_code);
            prev_code = code;
            ++count;
        });
        REQUIRE(count == expected);
        REQUIRE(gfd::gl_order(n, p) == expected);
    }

    // The closed form alone, beyond what is enumerated here.
    REQUIRE(gfd::gl_order(3, 5) == 1488000ull);
    REQUIRE(gfd::gl_order(3, 7) == 33784128ull);

    REQUIRE_THROWS_AS(gfd::for_each_gl(4, 3, [](const gfd::GfMat&, std::uint64_t) {}),
                      congr::CapExceededError);
    REQUIRE_THROWS_AS(gfd::for_each_gl(2, 11, [](const gfd::GfMat&, std::uint64_t) {}),
                      congr::CapExceededError);
}

TEST_CASE("matrix conversion rejects unusable input", "[gf]") {
    REQUIRE_THROWS_AS(gfd::gf_from_matrix(Matrix::identity(FieldDescriptor::rational(), 2)),
                      congr::UnsupportedFieldError);
    REQUIRE_THROWS_AS(gfd::gf_from_matrix(Matrix::identity(FieldDescriptor::prime(11), 2)),
                      congr::CapExceededError);
    REQUIRE_THROWS_AS(gfd::gf_from_matrix(Matrix::identity(FieldDescriptor::prime(3), 4)),
                      congr::CapExceededError);
}
