#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/invariant.hpp"
#include "congr/matrix.hpp"
#include "congr/matrix_json.hpp"
#include "congr/orbit.hpp"
#include "congr/rng.hpp"
#include "congr/zeropotent.hpp"

// Seeded property-check runners. Each runner draws its inputs from a
// deterministic stream, evaluates exact equalities, and returns a CheckReport
// that serializes to byte-stable JSON: same seed, same bytes. A failed check
// is recorded as a violation with the offending inputs, never asserted away.

namespace congr {

struct CheckViolation {
    std::string property;
    std::uint64_t trial = 0;
    Json detail;
};

struct CheckReport {
    std::string name;
    Json parameters; ///< echo of the run's options, in a fixed key order
    std::uint64_t trials = 0;
    std::uint64_t checks = 0;
    std::vector<CheckViolation> violations;

    bool passed() const { return violations.empty(); }

    /// Folds another report into this one (used by composite runs).
    void absorb(CheckReport other) {
        trials += other.trials;
        checks += other.checks;
        violations.insert(violations.end(),
                          std::make_move_iterator(other.violations.begin()),
                          std::make_move_iterator(other.violations.end()));
    }
};

inline Json check_report_to_json(const CheckReport& r) {
    Json violations = Json::array();
    for (const CheckViolation& v : r.violations)
        violations.push_back(
            {{"property", v.property}, {"trial", v.trial}, {"detail", v.detail}});
    return Json{{"name", r.name},          {"parameters", r.parameters},
                {"trials", r.trials},      {"checks", r.checks},
                {"passed", r.passed()},    {"violations", std::move(violations)}};
}

namespace detail {

/// sigma through every mode, recording a violation if the three routes ever
/// disagree. Returns the trace-form value.
inline Scalar sigma_all_modes(const Matrix& a, CheckReport& report, std::uint64_t trial) {
    const Scalar t = sigma(a, SigmaMode::TraceForm);
    const Scalar c = sigma(a, SigmaMode::CofactorForm);
    const Scalar j = sigma(a, SigmaMode::AdjugateForm);
    ++report.checks;
    if (!(t == c) || !(t == j))
        report.violations.push_back({"mode_agreement", trial,
                                     Json{{"matrix", matrix_to_json(a)},
                                          {"trace_form", t.str()},
                                          {"cofactor_form", c.str()},
                                          {"adjugate_form", j.str()}}});
    return t;
}

inline void expect_equal(CheckReport& report, std::uint64_t trial, const char* property,
                         const Scalar& expected, const Scalar& actual, Json detail) {
    ++report.checks;
    if (expected == actual) return;
    detail["expected"] = expected.str();
    detail["actual"] = actual.str();
    report.violations.push_back({property, trial, std::move(detail)});
}

} // namespace detail

/// Symmetric nonsingular draw: S = B + ^tB with random diagonal
/// perturbations, discarding singular results; falls back to a nonzero
/// diagonal matrix, which is symmetric and nonsingular in every field.
inline Matrix random_symmetric_nonsingular(int n, const FieldDescriptor& f, Rng& rng,
                                           std::int64_t bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n * n; ++k) e.push_back(detail::random_entry(f, rng, bound));
        Matrix b(f, n, std::move(e));
        Matrix s = b + transpose(b);
        if (attempt > 0) {
            // Perturb the diagonal; the draw stays symmetric.
            std::vector<Scalar> d;
            d.reserve(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d.push_back(i == j ? detail::random_entry(f, rng, bound)
                                       : Scalar::zero(f));
            s = s + Matrix(f, n, std::move(d));
        }
        if (is_nonsingular(s)) return s;
    }
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e.push_back(i == j ? detail::random_nonzero(f, rng, bound) : Scalar::zero(f));
    return Matrix(f, n, std::move(e));
}

/// sigma(^tX A X) = sigma(A) on seeded random nonsingular pairs, with the
/// scaled variant and a polynomial spot check riding along. Every sigma is
/// evaluated through all three modes.
inline CheckReport check_congruence_invariance(int n, std::uint64_t count,
                                               std::uint64_t seed,
                                               const FieldDescriptor& f,
                                               std::int64_t bound = 9) {
    CheckReport report;
    report.name = "congruence_invariance";
    report.parameters = Json{{"n", n},
                             {"count", count},
                             {"seed", seed},
                             {"field", field_to_json(f)},
                             {"bound", bound}};
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Matrix a = random_nonsingular(n, f, rng, bound);
        const Matrix x = random_nonsingular(n, f, rng, bound);
        const Scalar sa = detail::sigma_all_modes(a, report, trial);

        const Matrix t = congruence_transform(a, x);
        const Scalar st = detail::sigma_all_modes(t, report, trial);
        detail::expect_equal(report, trial, "congruence_invariance", sa, st,
                             Json{{"a", matrix_to_json(a)}, {"x", matrix_to_json(x)}});

        const Matrix ts = scaled_congruence_transform(a, x);
        detail::expect_equal(report, trial, "scaled_congruence_invariance", sa,
                             detail::sigma_all_modes(ts, report, trial),
                             Json{{"a", matrix_to_json(a)}, {"x", matrix_to_json(x)}});

        // Any polynomial in sigma inherits the invariance; spot check t^2 + 1.
        const Scalar one = Scalar::one(f);
        detail::expect_equal(report, trial, "polynomial_invariance", sa * sa + one,
                             st * st + one,
                             Json{{"a", matrix_to_json(a)}, {"x", matrix_to_json(x)}});
        ++report.trials;
    }
    return report;
}

/// The five basic sigma identities on seeded random nonsingular matrices:
/// transpose, inverse, adjugate (n >= 2), nonzero scaling, and sigma = n for
/// symmetric draws (n reduced into the field).
inline CheckReport check_basic_identities(int n, std::uint64_t count, std::uint64_t seed,
                                          const FieldDescriptor& f,
                                          std::int64_t bound = 9) {
    CheckReport report;
    report.name = "basic_identities";
    report.parameters = Json{{"n", n},
                             {"count", count},
                             {"seed", seed},
                             {"field", field_to_json(f)},
                             {"bound", bound}};
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Matrix a = random_nonsingular(n, f, rng, bound);
        const Scalar sa = detail::sigma_all_modes(a, report, trial);
        const Json aj{{"a", matrix_to_json(a)}};

        detail::expect_equal(report, trial, "sigma_transpose", sa,
                             detail::sigma_all_modes(transpose(a), report, trial), aj);
        detail::expect_equal(report, trial, "sigma_inverse", sa,
                             detail::sigma_all_modes(inverse(a), report, trial), aj);
        if (n >= 2)
            detail::expect_equal(report, trial, "sigma_adjugate", sa,
                                 detail::sigma_all_modes(adjugate(a), report, trial), aj);
        const Scalar c = detail::random_nonzero(f, rng, bound);
        detail::expect_equal(report, trial, "sigma_scaling", sa,
                             detail::sigma_all_modes(scalar_mul(c, a), report, trial),
                             Json{{"a", matrix_to_json(a)}, {"c", c.str()}});

        const Matrix s = random_symmetric_nonsingular(n, f, rng, bound);
        detail::expect_equal(report, trial, "sigma_symmetric", Scalar::of_integer(f, n),
                             detail::sigma_all_modes(s, report, trial),
                             Json{{"s", matrix_to_json(s)}});
        ++report.trials;
    }
    return report;
}

/// Mode agreement over every nonsingular matrix of GL(n,p).
inline CheckReport check_mode_agreement_exhaustive(int n, std::uint32_t p) {
    CheckReport report;
    report.name = "mode_agreement_exhaustive";
    report.parameters = Json{{"n", n}, {"p", p}};
    enumerate_gl(n, p, [&](const Matrix& m) {
        detail::sigma_all_modes(m, report, report.trials);
        ++report.trials;
    });
    return report;
}

/// kappa_explicit = kappa on seeded random nonsingular 3x3 matrices.
inline CheckReport check_kappa_agreement(std::uint64_t count, std::uint64_t seed,
                                         const FieldDescriptor& f,
                                         std::int64_t bound = 9) {
    CheckReport report;
    report.name = "kappa_agreement";
    report.parameters = Json{{"count", count},
                             {"seed", seed},
                             {"field", field_to_json(f)},
                             {"bound", bound}};
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Matrix a = random_nonsingular(3, f, rng, bound);
        detail::expect_equal(report, trial, "kappa_agreement", kappa(a),
                             kappa_explicit(a), Json{{"a", matrix_to_json(a)}});
        ++report.trials;
    }
    return report;
}

/// kappa_explicit = kappa over all of GL(3,p).
inline CheckReport check_kappa_agreement_exhaustive(std::uint32_t p) {
    CheckReport report;
    report.name = "kappa_agreement_exhaustive";
    report.parameters = Json{{"p", p}};
    enumerate_gl(3, p, [&](const Matrix& m) {
        detail::expect_equal(report, report.trials, "kappa_agreement", kappa(m),
                             kappa_explicit(m), Json{{"a", matrix_to_json(m)}});
        ++report.trials;
    });
    return report;
}

/// kappa(A(a,b,c)) = D(a,b,c) on seeded random triples.
inline CheckReport check_canonical_identity(std::uint64_t count, std::uint64_t seed,
                                            const FieldDescriptor& f,
                                            std::int64_t bound = 9) {
    CheckReport report;
    report.name = "canonical_identity";
    report.parameters = Json{{"count", count},
                             {"seed", seed},
                             {"field", field_to_json(f)},
                             {"bound", bound}};
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Scalar a = detail::random_entry(f, rng, bound);
        const Scalar b = detail::random_entry(f, rng, bound);
        const Scalar c = detail::random_entry(f, rng, bound);
        detail::expect_equal(
            report, trial, "canonical_identity", d_invariant(a, b, c),
            kappa(canonical_form(a, b, c)),
            Json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}});
        ++report.trials;
    }
    return report;
}

/// kappa(A(a,b,c)) = D(a,b,c) for every triple in GF(p)^3.
inline CheckReport check_canonical_identity_exhaustive(std::uint32_t p) {
    CheckReport report;
    report.name = "canonical_identity_exhaustive";
    report.parameters = Json{{"p", p}};
    const FieldDescriptor f = FieldDescriptor::prime(p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c) {
                const Scalar sa = Scalar::of_residue(f, a);
                const Scalar sb = Scalar::of_residue(f, b);
                const Scalar sc = Scalar::of_residue(f, c);
                detail::expect_equal(report, report.trials, "canonical_identity",
                                     d_invariant(sa, sb, sc),
                                     kappa(canonical_form(sa, sb, sc)),
                                     Json{{"a", a}, {"b", b}, {"c", c}});
                ++report.trials;
            }
    return report;
}

/// Zeropotency, anticommutativity, bilinearity, and the basis products on
/// seeded random vector triples over a random structure matrix.
inline CheckReport check_product_laws(std::uint64_t count, std::uint64_t seed,
                                      const FieldDescriptor& f, std::int64_t bound = 9) {
    CheckReport report;
    report.name = "product_laws";
    report.parameters = Json{{"count", count},
                             {"seed", seed},
                             {"field", field_to_json(f)},
                             {"bound", bound}};
    const std::uint64_t stream = seed ^ fnv1a64(report.name);

    const auto random_vector = [&](Rng& rng) {
        return Vector3(detail::random_entry(f, rng, bound),
                       detail::random_entry(f, rng, bound),
                       detail::random_entry(f, rng, bound));
    };
    const auto vector_json = [](const Vector3& v) {
        return Json::array({v.at(1).str(), v.at(2).str(), v.at(3).str()});
    };
    const auto expect_vec = [&](std::uint64_t trial, const char* property,
                                const Vector3& expected, const Vector3& actual,
                                Json detail) {
        ++report.checks;
        if (expected == actual) return;
        detail["expected"] = vector_json(expected);
        detail["actual"] = vector_json(actual);
        report.violations.push_back({property, trial, std::move(detail)});
    };

    for (std::uint64_t trial = 0; trial < count; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        std::vector<Scalar> e;
        e.reserve(9);
        for (int k = 0; k < 9; ++k) e.push_back(detail::random_entry(f, rng, bound));
        const ZeropotentAlgebra3 alg{Matrix(f, 3, std::move(e))};
        const Json aj{{"structure", matrix_to_json(alg.structure())}};

        const Vector3 x = random_vector(rng);
        const Vector3 y = random_vector(rng);
        const Vector3 z = random_vector(rng);
        const Scalar c = detail::random_entry(f, rng, bound);
        const Vector3 zero = Vector3::zero(f);

        expect_vec(trial, "zeropotency", zero, alg.product(x, x), aj);
        expect_vec(trial, "zeropotency", zero, alg.product(x + y, x + y), aj);
        expect_vec(trial, "anticommutativity", Scalar::of_integer(f, -1) * alg.product(y, x),
                   alg.product(x, y), aj);
        expect_vec(trial, "bilinearity_left",
                   c * alg.product(x, z) + alg.product(y, z),
                   alg.product(c * x + y, z), aj);
        expect_vec(trial, "bilinearity_right",
                   c * alg.product(z, x) + alg.product(z, y),
                   alg.product(z, c * x + y), aj);

        // Basis products read off the structure matrix rows.
        const Vector3 e1 = Vector3::basis(f, 1);
        const Vector3 e2 = Vector3::basis(f, 2);
        const Vector3 e3 = Vector3::basis(f, 3);
        const auto row = [&](int i) {
            return Vector3(alg.structure().at(i, 1), alg.structure().at(i, 2),
                           alg.structure().at(i, 3));
        };
        expect_vec(trial, "basis_products", row(1), alg.product(e2, e3), aj);
        expect_vec(trial, "basis_products", row(2), alg.product(e3, e1), aj);
        expect_vec(trial, "basis_products", row(3), alg.product(e1, e2), aj);
        ++report.trials;
    }
    return report;
}

/// Pairs (A, det(X)^-1 ^tX A X) over GF(p) must test isomorphic; the witness
/// must revalidate exactly and the two invariants must agree.
inline CheckReport check_iso_roundtrip(std::uint64_t pairs, std::uint64_t seed,
                                       std::uint32_t p = 3) {
    CheckReport report;
    report.name = "iso_roundtrip";
    report.parameters = Json{{"pairs", pairs}, {"seed", seed}, {"p", p}};
    const FieldDescriptor f = FieldDescriptor::prime(p);
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < pairs; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Matrix a = random_nonsingular(3, f, rng, 9);
        const Matrix x = random_nonsingular(3, f, rng, 9);
        const Matrix b = scaled_congruence_transform(a, x);
        const Json pj{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};

        const ZeropotentAlgebra3 lhs{a}, rhs{b};
        const IsoResult r = is_isomorphic_bruteforce(lhs, rhs, {p});
        ++report.checks;
        if (!r.isomorphic) {
            report.violations.push_back({"iso_expected_true", trial, pj});
            ++report.trials;
            continue;
        }
        ++report.checks;
        if (!r.witness || !(scaled_congruence_transform(a, *r.witness) == b)) {
            Json detail = pj;
            if (r.witness) detail["witness"] = matrix_to_json(*r.witness);
            report.violations.push_back({"iso_witness_revalidates", trial,
                                         std::move(detail)});
        }
        detail::expect_equal(report, trial, "iso_sigma_equal",
                             sigma_of_algebra(lhs), sigma_of_algebra(rhs), pj);
        ++report.trials;
    }
    return report;
}

/// Nonsingular pairs with different invariants can never be isomorphic.
inline CheckReport check_iso_sigma_separation(std::uint64_t pairs, std::uint64_t seed,
                                              std::uint32_t p = 3) {
    CheckReport report;
    report.name = "iso_sigma_separation";
    report.parameters = Json{{"pairs", pairs}, {"seed", seed}, {"p", p}};
    const FieldDescriptor f = FieldDescriptor::prime(p);
    const std::uint64_t stream = seed ^ fnv1a64(report.name);
    for (std::uint64_t trial = 0; trial < pairs; ++trial) {
        Rng rng = Rng::for_trial(stream, trial);
        const Matrix a = random_nonsingular(3, f, rng, 9);
        const Scalar sa = sigma(a);

        Matrix b = random_nonsingular(3, f, rng, 9);
        for (int attempt = 0; attempt < 64 && sigma(b) == sa; ++attempt)
            b = random_nonsingular(3, f, rng, 9);
        if (sigma(b) == sa) {
            // Deterministic fallback: canonical forms realize 3 - D, and D
            // takes several values, so one of these differs from sa.
            for (long long t = 0; t < 4 && sigma(b) == sa; ++t)
                b = canonical_form(Scalar::of_integer(f, t), Scalar::zero(f),
                                   Scalar::zero(f));
        }

        const IsoResult r =
            is_isomorphic_bruteforce(ZeropotentAlgebra3{a}, ZeropotentAlgebra3{b}, {p});
        ++report.checks;
        if (r.isomorphic)
            report.violations.push_back(
                {"iso_expected_false", trial,
                 Json{{"a", matrix_to_json(a)},
                      {"b", matrix_to_json(b)},
                      {"witness", r.witness ? matrix_to_json(*r.witness) : Json(nullptr)}}});
        ++report.trials;
    }
    return report;
}

struct FuzzOptions {
    int n = 3;
    std::uint64_t count = 100;
    std::uint64_t seed = 0;
    FieldDescriptor field;
    std::int64_t bound = 9;
};

/// The CLI fuzz battery: congruence invariance plus the basic identities,
/// and the kappa agreement when the dimension admits it.
inline CheckReport run_fuzz(const FuzzOptions& opts) {
    CheckReport report;
    report.name = "fuzz";
    report.parameters = Json{{"n", opts.n},
                             {"count", opts.count},
                             {"seed", opts.seed},
                             {"field", field_to_json(opts.field)},
                             {"bound", opts.bound}};
    report.absorb(
        check_congruence_invariance(opts.n, opts.count, opts.seed, opts.field, opts.bound));
    report.absorb(
        check_basic_identities(opts.n, opts.count, opts.seed, opts.field, opts.bound));
    if (opts.n == 3)
        report.absorb(check_kappa_agreement(opts.count, opts.seed, opts.field, opts.bound));
    return report;
}

/// Single-matrix identity checks behind the props command: one line per
/// identity, skipping those whose preconditions the input does not meet.
struct PropCheckLine {
    std::string name;
    bool applicable = true;
    bool pass = true;
};

inline std::vector<PropCheckLine> check_basic_identities_on(const Matrix& a,
                                                            std::uint64_t seed) {
    std::vector<PropCheckLine> lines;
    const Scalar sa = sigma(a);
    Rng rng(seed ^ fnv1a64("basic_identities_on"));

    lines.push_back({"sigma_transpose", true, sigma(transpose(a)) == sa});
    lines.push_back({"sigma_inverse", true, sigma(inverse(a)) == sa});
    if (a.dim() >= 2)
        lines.push_back({"sigma_adjugate", true, sigma(adjugate(a)) == sa});
    else
        lines.push_back({"sigma_adjugate", false, true});
    const Scalar c = detail::random_nonzero(a.field(), rng, 9);
    lines.push_back({"sigma_scaling", true, sigma(scalar_mul(c, a)) == sa});
    if (is_symmetric(a))
        lines.push_back(
            {"sigma_symmetric", true, sa == Scalar::of_integer(a.field(), a.dim())});
    else
        lines.push_back({"sigma_symmetric", false, true});
    return lines;
}

} // namespace congr
