#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congr/detail/gf_small.hpp"
#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/invariant.hpp"
#include "congr/matrix.hpp"
#include "congr/matrix_json.hpp"
#include "congr/rng.hpp"

// Exhaustive finite-field machinery: enumerate GL(n,p), split the nonsingular
// matrices into congruence orbits while checking that sigma is constant on
// each, and search small prime fields for witnesses of the
// A(a,b,c) -> A(s,0,0) reduction.

namespace congr {

inline constexpr std::uint32_t kOrbitDefaultMaxPrime = 5;

/// |GL(n,p)| by the closed form prod_{k<n} (p^n - p^k).
inline std::uint64_t gl_order(int n, std::uint32_t p) {
    detail::require_gf_caps(n, p);
    FieldDescriptor::prime(p); // validates primality
    return detail::gl_order(n, p);
}

/// Streams every nonsingular n x n matrix over GF(p) exactly once, in
/// lexicographic entry order, as fn(const Matrix&).
template <typename Fn>
inline void enumerate_gl(int n, std::uint32_t p, Fn&& fn) {
    FieldDescriptor::prime(p);
    detail::for_each_gl(n, p, [&](const detail::GfMat& m, std::uint64_t) {
        fn(detail::gf_to_matrix(m));
    });
}

/// One congruence orbit: all ^tX A X for X in GL(n,p). The representative is
/// the orbit member that comes first in lexicographic entry order.
struct OrbitClass {
    Matrix representative;
    std::uint64_t size = 0;
    Scalar sigma;
};

/// An orbit member whose sigma disagrees with the representative's. Expected
/// to never occur; recorded rather than asserted so a run can show its work.
struct OrbitViolation {
    Matrix representative;
    Matrix member;
    Scalar expected_sigma;
    Scalar actual_sigma;
};

struct OrbitReport {
    FieldDescriptor field;
    int n = 0;
    std::uint64_t gl_order = 0;
    std::uint64_t orbit_count = 0;
    std::vector<OrbitClass> orbits;
    std::vector<OrbitViolation> violations;
};

/// Partitions the nonsingular n x n matrices over GF(p) into congruence
/// orbits (seed-and-close: take the least unvisited matrix, apply every X in
/// GL(n,p), mark the images) and records sigma per orbit. Any member whose
/// sigma differs from its representative's becomes a violation entry.
///
/// Default cap is p <= 5; p = 7 needs allow_large (the GL(3,7) pass touches
/// ~3.4e7 matrices per orbit).
inline OrbitReport congruence_orbits(int n, std::uint32_t p, bool allow_large = false) {
    detail::require_gf_caps(n, p);
    const FieldDescriptor f = FieldDescriptor::prime(p); // validates primality first
    if (p > kOrbitDefaultMaxPrime && !allow_large)
        throw CapExceededError("orbit enumeration capped at p <= 5 by default; pass the "
                               "large-modulus override to run p = " + std::to_string(p));

    // Inverse table for the per-member sigma evaluations.
    std::vector<std::uint32_t> inv(p, 0);
    for (std::uint32_t r = 1; r < p; ++r) inv[r] = detail::inverse_mod(r, p);
    const auto sigma_res = [&](const detail::GfMat& m) {
        const detail::GfMat adj = detail::gf_adjugate(m);
        std::uint32_t acc = 0;
        for (int k = 0; k < n * n; ++k)
            acc += static_cast<std::uint32_t>(m.e[k]) * adj.e[k];
        return acc % p * inv[detail::gf_det(m)] % p;
    };

    // One pass over all entry tuples collects GL(n,p) as packed words, in
    // lexicographic order.
    std::vector<std::uint32_t> gl;
    gl.reserve(detail::gl_order(n, p));
    detail::for_each_gl(n, p, [&](const detail::GfMat& m, std::uint64_t) {
        gl.push_back(detail::gf_pack(m));
    });

    OrbitReport report;
    report.field = f;
    report.n = n;
    report.gl_order = gl.size();

    std::vector<bool> visited(std::uint64_t{1} << (3 * n * n), false);
    for (const std::uint32_t seed_word : gl) {
        if (visited[seed_word]) continue;
        const detail::GfMat rep = detail::gf_unpack(seed_word, n, p);
        const std::uint32_t rep_sigma = sigma_res(rep);
        std::uint64_t size = 0;
        for (const std::uint32_t xw : gl) {
            const detail::GfMat x = detail::gf_unpack(xw, n, p);
            const detail::GfMat t = detail::gf_congruence(rep, x);
            const std::uint32_t tw = detail::gf_pack(t);
            if (visited[tw]) continue;
            visited[tw] = true;
            ++size;
            const std::uint32_t s = sigma_res(t);
            if (s != rep_sigma)
                report.violations.push_back({detail::gf_to_matrix(rep),
                                             detail::gf_to_matrix(t),
                                             Scalar::of_residue(f, rep_sigma),
                                             Scalar::of_residue(f, s)});
        }
        report.orbits.push_back(
            {detail::gf_to_matrix(rep), size, Scalar::of_residue(f, rep_sigma)});
    }
    report.orbit_count = report.orbits.size();
    return report;
}

// --- exploratory reduction search ------------------------------------------

/// How a triple (a,b,c) fared against the reduction preconditions.
enum class TripleStatus {
    ExcludedDZero,      ///< D(a,b,c) = 0
    ExcludedDegenerate, ///< a^2 + b^2 - abc = 0
    NoSquareRoot,       ///< D is not a square in GF(p)
    Searched,           ///< all preconditions met; GL(3,p) was searched
};

inline const char* to_string(TripleStatus status) {
    switch (status) {
    case TripleStatus::ExcludedDZero: return "excluded_d_zero";
    case TripleStatus::ExcludedDegenerate: return "excluded_degenerate";
    case TripleStatus::NoSquareRoot: return "no_square_root";
    case TripleStatus::Searched: return "searched";
    }
    return "unknown";
}

struct ReductionTriple {
    std::uint32_t a = 0, b = 0, c = 0; ///< residues
    Scalar d;                          ///< D(a,b,c)
    std::vector<Scalar> roots;         ///< square roots of D in GF(p), ascending
    TripleStatus status = TripleStatus::ExcludedDZero;
    bool found = false;
    std::optional<Scalar> root;    ///< the s whose A(s,0,0) was reached
    std::optional<Matrix> witness; ///< first X in lexicographic order
    bool revalidated = false;      ///< witness re-checked with exact arithmetic
};

/// Either every triple in GF(p)^3 or a seeded sample of k distinct ones.
struct ReductionMode {
    enum class Kind { All, Sample };
    Kind kind = Kind::All;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;

    static ReductionMode all() { return {}; }
    static ReductionMode sample(std::uint64_t k, std::uint64_t seed) {
        return {Kind::Sample, k, seed};
    }
};

struct ReductionReport {
    FieldDescriptor field;
    std::uint32_t p = 0;
    ReductionMode mode;
    std::vector<ReductionTriple> triples;
    std::uint64_t excluded_d_zero = 0;
    std::uint64_t excluded_degenerate = 0;
    std::uint64_t no_square_root = 0;
    std::uint64_t searched = 0;
    std::uint64_t found = 0;
};

/// For each chosen (a,b,c) in GF(p)^3 that passes the filters D != 0,
/// a^2 + b^2 - abc != 0, and D a square, brute-force search GL(3,p) for an X
/// with ^tX A(a,b,c) X = A(s,0,0) for some root s of D. Outcomes are
/// reported, not asserted: over a finite field the reduction may or may not
/// go through, and the report is the point.
inline ReductionReport explore_reduction(std::uint32_t p,
                                         const ReductionMode& mode = ReductionMode::all()) {
    const FieldDescriptor f = FieldDescriptor::prime(p); // validates primality first
    if (p > kOrbitDefaultMaxPrime)
        throw CapExceededError("reduction exploration capped at p <= 5, got p = " +
                               std::to_string(p));

    const std::uint64_t total = std::uint64_t{p} * p * p;
    std::vector<std::uint32_t> picks(total);
    std::iota(picks.begin(), picks.end(), 0u);
    if (mode.kind == ReductionMode::Kind::Sample) {
        const std::uint64_t k = std::min<std::uint64_t>(mode.k, total);
        Rng rng(mode.seed);
        for (std::uint64_t i = 0; i < k; ++i)
            std::swap(picks[i], picks[i + rng.below(total - i)]);
        picks.resize(k);
        std::sort(picks.begin(), picks.end());
    }

    ReductionReport report;
    report.field = f;
    report.p = p;
    report.mode = mode;
    report.triples.reserve(picks.size());

    for (const std::uint32_t idx : picks) {
        ReductionTriple t;
        t.c = idx % p;
        t.b = idx / p % p;
        t.a = idx / (p * p);
        const Scalar sa = Scalar::of_residue(f, t.a);
        const Scalar sb = Scalar::of_residue(f, t.b);
        const Scalar sc = Scalar::of_residue(f, t.c);
        t.d = d_invariant(sa, sb, sc);

        if (t.d.is_zero()) {
            t.status = TripleStatus::ExcludedDZero;
            ++report.excluded_d_zero;
        } else if ((sa * sa + sb * sb - sa * sb * sc).is_zero()) {
            t.status = TripleStatus::ExcludedDegenerate;
            ++report.excluded_degenerate;
        } else {
            t.roots = sqrt_in_field(t.d);
            if (t.roots.empty()) {
                t.status = TripleStatus::NoSquareRoot;
                ++report.no_square_root;
            } else {
                t.status = TripleStatus::Searched;
                ++report.searched;

                const detail::GfMat lhs{3, p,
                                        {1, static_cast<std::uint8_t>(t.a),
                                         static_cast<std::uint8_t>(t.b), 0, 1,
                                         static_cast<std::uint8_t>(t.c), 0, 0, 1}};
                std::vector<std::pair<std::uint32_t, Scalar>> targets;
                for (const Scalar& s : t.roots) {
                    const std::uint8_t r = static_cast<std::uint8_t>(s.residue_value());
                    targets.emplace_back(
                        detail::gf_pack(detail::GfMat{3, p, {1, r, 0, 0, 1, 0, 0, 0, 1}}),
                        s);
                }
                detail::for_each_gl(3, p, [&](const detail::GfMat& x, std::uint64_t) {
                    if (t.found) return;
                    const std::uint32_t image =
                        detail::gf_pack(detail::gf_congruence(lhs, x));
                    for (const auto& [target, s] : targets) {
                        if (image == target) {
                            t.found = true;
                            t.root = s;
                            t.witness = detail::gf_to_matrix(x);
                            break;
                        }
                    }
                });
                if (t.found) {
                    ++report.found;
                    const Matrix before = canonical_form(sa, sb, sc);
                    const Matrix after = canonical_form(*t.root, Scalar::zero(f),
                                                        Scalar::zero(f));
                    t.revalidated = congruence_transform(before, *t.witness) == after;
                }
            }
        }
        report.triples.push_back(std::move(t));
    }
    return report;
}

// --- JSON serialization -----------------------------------------------------

inline Json orbit_report_to_json(const OrbitReport& report) {
    Json orbits = Json::array();
    for (const OrbitClass& o : report.orbits)
        orbits.push_back({{"representative", matrix_to_json(o.representative)},
                          {"size", o.size},
                          {"sigma", o.sigma.str()}});
    Json violations = Json::array();
    for (const OrbitViolation& v : report.violations)
        violations.push_back({{"representative", matrix_to_json(v.representative)},
                              {"member", matrix_to_json(v.member)},
                              {"expected_sigma", v.expected_sigma.str()},
                              {"actual_sigma", v.actual_sigma.str()}});
    return Json{{"field", field_to_json(report.field)},
                {"n", report.n},
                {"gl_order", report.gl_order},
                {"orbit_count", report.orbit_count},
                {"orbits", std::move(orbits)},
                {"violations", std::move(violations)}};
}

inline Json reduction_report_to_json(const ReductionReport& report) {
    Json mode;
    if (report.mode.kind == ReductionMode::Kind::All)
        mode = Json{{"kind", "all"}};
    else
        mode = Json{{"kind", "sample"}, {"k", report.mode.k}, {"seed", report.mode.seed}};
    Json triples = Json::array();
    for (const ReductionTriple& t : report.triples) {
        Json roots = Json::array();
        for (const Scalar& s : t.roots) roots.push_back(s.str());
        Json entry{{"a", t.a},
                   {"b", t.b},
                   {"c", t.c},
                   {"D", t.d.str()},
                   {"roots", std::move(roots)},
                   {"status", to_string(t.status)},
                   {"found", t.found}};
        entry["root"] = t.root ? Json(t.root->str()) : Json(nullptr);
        entry["witness"] = t.witness ? matrix_to_json(*t.witness) : Json(nullptr);
        entry["revalidated"] = t.revalidated;
        triples.push_back(std::move(entry));
    }
    return Json{{"field", field_to_json(report.field)},
                {"p", report.p},
                {"mode", std::move(mode)},
                {"counts",
                 Json{{"triples", report.triples.size()},
                      {"excluded_d_zero", report.excluded_d_zero},
                      {"excluded_degenerate", report.excluded_degenerate},
                      {"no_square_root", report.no_square_root},
                      {"searched", report.searched},
                      {"found", report.found}}},
                {"triples", std::move(triples)}};
}

} // namespace congr
