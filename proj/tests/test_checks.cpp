#include <catch2/catch_amalgamated.hpp>

#include <congr/checks.hpp>

#include <cstdint>
#include <string>
#include <vector>

using congr::CheckReport;
using congr::FieldDescriptor;
using congr::Matrix;
using congr::Rng;
using congr::Scalar;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rational();
const FieldDescriptor kF5 = FieldDescriptor::prime(5);

void require_clean(const CheckReport& r, std::uint64_t trials) {
    CAPTURE(r.name);
    REQUIRE(r.passed());
    REQUIRE(r.trials == trials);
    REQUIRE(r.checks > 0);
}

} // namespace

TEST_CASE("seeded runners pass cleanly over both field kinds", "[checks]") {
    for (const FieldDescriptor& f : {kQ, kF5}) {
        require_clean(congr::check_congruence_invariance(3, 20, 7, f), 20);
        require_clean(congr::check_basic_identities(2, 20, 7, f), 20);
        require_clean(congr::check_basic_identities(1, 10, 7, f), 10);
        require_clean(congr::check_kappa_agreement(20, 7, f), 20);
        require_clean(congr::check_canonical_identity(20, 7, f), 20);
        require_clean(congr::check_product_laws(20, 7, f), 20);
    }
    // GF(2) is the stress field for symmetric draws: B + ^tB has a zero
    // diagonal there, so the runner leans on its perturbation path.
    require_clean(congr::check_basic_identities(3, 10, 7, FieldDescriptor::prime(2)), 10);
}

TEST_CASE("exhaustive runners cover the advertised grids", "[checks]") {
    const CheckReport modes = congr::check_mode_agreement_exhaustive(2, 3);
    REQUIRE(modes.passed());
    REQUIRE(modes.trials == 48);

    const CheckReport kappa = congr::check_kappa_agreement_exhaustive(2);
    REQUIRE(kappa.passed());
    REQUIRE(kappa.trials == 168);

    const CheckReport canon = congr::check_canonical_identity_exhaustive(3);
    REQUIRE(canon.passed());
    REQUIRE(canon.trials == 27);
    REQUIRE(canon.checks == 27);
}

TEST_CASE("isomorphism runners pass cleanly", "[checks]") {
    require_clean(congr::check_iso_roundtrip(5, 11), 5);
    require_clean(congr::check_iso_sigma_separation(5, 11), 5);
}

TEST_CASE("reports are byte-stable for a fixed seed", "[checks]") {
    congr::FuzzOptions opts;
    opts.n = 3;
    opts.count = 10;
    opts.seed = 42;
    opts.field = kQ;

    const std::string once = congr::check_report_to_json(congr::run_fuzz(opts)).dump(2);
    const std::string twice = congr::check_report_to_json(congr::run_fuzz(opts)).dump(2);
    REQUIRE(once == twice);

    const congr::Json j = congr::check_report_to_json(congr::run_fuzz(opts));
    REQUIRE(j["name"] == "fuzz");
    REQUIRE(j["parameters"]["seed"] == 42);
    REQUIRE(j["passed"] == true);
    REQUIRE(j["violations"].empty());
    REQUIRE(j["trials"] == 30);
}

TEST_CASE("expect_equal records the mismatching values", "[checks]") {
    CheckReport r;
    const Scalar zero = Scalar::zero(kQ);
    const Scalar one = Scalar::one(kQ);

    congr::detail::expect_equal(r, 0, "demo", one, one, congr::Json{{"note", "same"}});
    REQUIRE(r.checks == 1);
    REQUIRE(r.violations.empty());

    congr::detail::expect_equal(r, 3, "demo", one, zero, congr::Json{{"note", "differ"}});
    REQUIRE(r.checks == 2);
    REQUIRE(r.violations.size() == 1);
    REQUIRE(r.violations[0].property == "demo");
    REQUIRE(r.violations[0].trial == 3);
    REQUIRE(r.violations[0].detail["expected"] == "1");
    REQUIRE(r.violations[0].detail["actual"] == "0");
    REQUIRE(r.violations[0].detail["note"] == "differ");
    REQUIRE_FALSE(r.passed());
}

TEST_CASE("symmetric nonsingular draws hold their contract", "[checks]") {
    for (const FieldDescriptor& f : {kQ, kF5, FieldDescriptor::prime(2)}) {
        for (int n = 1; n <= 3; ++n) {
            Rng rng(5);
            const Matrix m = congr::random_symmetric_nonsingular(n, f, rng, 9);
            CAPTURE(f.is_rational(), n);
            REQUIRE(congr::is_symmetric(m));
            REQUIRE(congr::is_nonsingular(m));
        }
    }

    Rng r1(17), r2(17);
    REQUIRE(congr::random_symmetric_nonsingular(3, kQ, r1, 9) ==
            congr::random_symmetric_nonsingular(3, kQ, r2, 9));
}

TEST_CASE("single-matrix identity lines skip what does not apply", "[checks]") {
    const auto line = [](const std::vector<congr::PropCheckLine>& lines,
                         const std::string& name) {
        for (const congr::PropCheckLine& l : lines)
            if (l.name == name) return l;
        FAIL("missing line: " << name);
        return congr::PropCheckLine{};
    };

    const std::vector<congr::PropCheckLine> id3 =
        congr::check_basic_identities_on(Matrix::identity(kQ, 3), 0);
    REQUIRE(id3.size() == 5);
    for (const congr::PropCheckLine& l : id3) {
        CAPTURE(l.name);
        REQUIRE(l.applicable);
        REQUIRE(l.pass);
    }

    // A non-symmetric shear: the symmetric identity is skipped, not failed.
    const Matrix shear(kQ, 2,
                       {Scalar::one(kQ), Scalar::one(kQ), Scalar::zero(kQ),
                        Scalar::one(kQ)});
    const auto shear_lines = congr::check_basic_identities_on(shear, 0);
    REQUIRE_FALSE(line(shear_lines, "sigma_symmetric").applicable);
    REQUIRE(line(shear_lines, "sigma_symmetric").pass);
    REQUIRE(line(shear_lines, "sigma_transpose").applicable);

    // 1 x 1: the adjugate identity needs n >= 2.
    const auto one_lines =
        congr::check_basic_identities_on(Matrix(kQ, 1, {Scalar::of_integer(kQ, 2)}), 0);
    REQUIRE_FALSE(line(one_lines, "sigma_adjugate").applicable);

    REQUIRE_THROWS_AS(
        congr::check_basic_identities_on(Matrix(kQ, 1, {Scalar::zero(kQ)}), 0),
        congr::SingularMatrixError);
}

TEST_CASE("the fuzz battery is the sum of its families", "[checks]") {
    congr::FuzzOptions opts;
    opts.n = 3;
    opts.count = 5;
    opts.seed = 9;
    opts.field = kF5;
    const CheckReport fz = congr::run_fuzz(opts);

    CheckReport manual = congr::check_congruence_invariance(3, 5, 9, kF5, 9);
    manual.absorb(congr::check_basic_identities(3, 5, 9, kF5, 9));
    manual.absorb(congr::check_kappa_agreement(5, 9, kF5, 9));
    REQUIRE(fz.trials == manual.trials);
    REQUIRE(fz.checks == manual.checks);
    REQUIRE(fz.trials == 15);
    REQUIRE(fz.passed());

    // Away from n = 3 the kappa family drops out.
    opts.n = 2;
    REQUIRE(congr::run_fuzz(opts).trials == 10);
}
