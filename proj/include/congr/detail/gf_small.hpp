#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/matrix.hpp"

// Compact GF(p) matrices for the exhaustive enumeration paths (n <= 3,
// p <= 7). Entries are residues in machine integers; arithmetic never
// overflows 32 bits at these sizes. The Scalar-based Matrix type stays the
// public face; conversions happen at the boundary.

namespace congr::detail {

inline constexpr int kGfMaxDim = 3;
inline constexpr std::uint32_t kGfMaxPrime = 7;

struct GfMat {
    int n;
    std::uint32_t p;
    std::array<std::uint8_t, 9> e{}; // row-major, entries in [0, p)

    std::uint8_t& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; } // 0-based
    std::uint8_t at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const GfMat& a, const GfMat& b) {
        if (a.n != b.n || a.p != b.p) return false;
        for (int k = 0; k < a.n * a.n; ++k)
            if (a.e[k] != b.e[k]) return false;
        return true;
    }
};

inline void require_gf_caps(int n, std::uint32_t p) {
    if (n < 1 || n > kGfMaxDim)
        throw CapExceededError("dimension cap for GF enumeration is n <= 3, got n = " +
                               std::to_string(n));
    if (p > kGfMaxPrime)
        throw CapExceededError("modulus cap for GF enumeration is p <= 7, got p = " +
                               std::to_string(p));
}

inline GfMat gf_identity(int n, std::uint32_t p) {
    GfMat m{n, p, {}};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline GfMat gf_transpose(const GfMat& a) {
    GfMat t{a.n, a.p, {}};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

inline GfMat gf_mul(const GfMat& a, const GfMat& b) {
    GfMat c{a.n, a.p, {}};
    for (int i = 0; i < a.n; ++i) {
        for (int j = 0; j < a.n; ++j) {
            std::uint32_t acc = 0;
            for (int k = 0; k < a.n; ++k)
                acc += static_cast<std::uint32_t>(a.at(i, k)) * b.at(k, j);
            c.at(i, j) = static_cast<std::uint8_t>(acc % a.p);
        }
    }
    return c;
}

inline std::uint32_t gf_det(const GfMat& a) {
    const std::uint32_t p = a.p;
    switch (a.n) {
    case 1:
        return a.e[0];
    case 2: {
        const std::uint32_t pos = static_cast<std::uint32_t>(a.at(0, 0)) * a.at(1, 1);
        const std::uint32_t neg = static_cast<std::uint32_t>(a.at(0, 1)) * a.at(1, 0);
        return (pos + p * p - neg) % p;
    }
    default: {
        std::uint32_t pos = static_cast<std::uint32_t>(a.at(0, 0)) * a.at(1, 1) * a.at(2, 2)
                          + static_cast<std::uint32_t>(a.at(0, 1)) * a.at(1, 2) * a.at(2, 0)
                          + static_cast<std::uint32_t>(a.at(0, 2)) * a.at(1, 0) * a.at(2, 1);
        std::uint32_t neg = static_cast<std::uint32_t>(a.at(0, 2)) * a.at(1, 1) * a.at(2, 0)
                          + static_cast<std::uint32_t>(a.at(0, 0)) * a.at(1, 2) * a.at(2, 1)
                          + static_cast<std::uint32_t>(a.at(0, 1)) * a.at(1, 0) * a.at(2, 2);
        return (pos + 3 * p * p * p - neg) % p;
    }
    }
}

inline bool gf_nonsingular(const GfMat& a) { return gf_det(a) != 0; }

inline GfMat gf_scale(std::uint32_t c, const GfMat& a) {
    GfMat s{a.n, a.p, {}};
    for (int k = 0; k < a.n * a.n; ++k)
        s.e[k] = static_cast<std::uint8_t>(c * a.e[k] % a.p);
    return s;
}

/// ^tX * A * X over GF(p).
inline GfMat gf_congruence(const GfMat& a, const GfMat& x) {
    return gf_mul(gf_transpose(x), gf_mul(a, x));
}

/// det(X)^-1 * ^tX * A * X over GF(p). X must be nonsingular.
inline GfMat gf_scaled_congruence(const GfMat& a, const GfMat& x) {
    const std::uint32_t d = gf_det(x);
    return gf_scale(inverse_mod(d, x.p), gf_congruence(a, x));
}

/// Adjugate entry (i,j) = cofactor(j,i), 0-based here.
inline GfMat gf_adjugate(const GfMat& a) {
    const std::uint32_t p = a.p;
    GfMat adj{a.n, a.p, {}};
    switch (a.n) {
    case 1:
        adj.e[0] = 1;
        return adj;
    case 2:
        adj.at(0, 0) = a.at(1, 1);
        adj.at(0, 1) = static_cast<std::uint8_t>((p - a.at(0, 1)) % p);
        adj.at(1, 0) = static_cast<std::uint8_t>((p - a.at(1, 0)) % p);
        adj.at(1, 1) = a.at(0, 0);
        return adj;
    default:
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                // cofactor(j,i): delete row j, column i from a.
                const int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
                const int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
                const std::uint32_t minor =
                    (static_cast<std::uint32_t>(a.at(r0, c0)) * a.at(r1, c1) + p * p -
                     static_cast<std::uint32_t>(a.at(r0, c1)) * a.at(r1, c0)) % p;
                adj.at(i, j) = static_cast<std::uint8_t>((i + j) % 2 == 0 ? minor
                                                                          : (p - minor) % p);
            }
        }
        return adj;
    }
}

/// sigma as a residue, by the cofactor route. A must be nonsingular.
inline std::uint32_t gf_sigma(const GfMat& a) {
    const std::uint32_t det = gf_det(a);
    const GfMat adj = gf_adjugate(a);
    std::uint32_t acc = 0;
    for (int k = 0; k < a.n * a.n; ++k)
        acc += static_cast<std::uint32_t>(a.e[k]) * adj.e[k]; // a_ij * cof(j,i)
    return acc % a.p * inverse_mod(det, a.p) % a.p;
}

/// Row-major base-p code; the first entry is the most significant digit, so
/// ascending codes enumerate matrices in lexicographic entry order.
inline std::uint64_t gf_encode(const GfMat& a) {
    std::uint64_t code = 0;
    for (int k = 0; k < a.n * a.n; ++k) code = code * a.p + a.e[k];
    return code;
}

inline GfMat gf_decode(std::uint64_t code, int n, std::uint32_t p) {
    GfMat m{n, p, {}};
    for (int k = n * n - 1; k >= 0; --k) {
        m.e[k] = static_cast<std::uint8_t>(code % p);
        code /= p;
    }
    return m;
}

/// Entries are < 8 under the caps, so a matrix also packs into 3-bit fields
/// of a single word (entry (0,0) in the most significant field). The map is
/// monotone with respect to gf_encode, so ascending packed words enumerate
/// matrices in the same lexicographic order.
inline std::uint32_t gf_pack(const GfMat& a) {
    std::uint32_t w = 0;
    for (int k = 0; k < a.n * a.n; ++k)
        w = (w << 3) | a.e[k];
    return w;
}

inline GfMat gf_unpack(std::uint32_t w, int n, std::uint32_t p) {
    GfMat m{n, p, {}};
    for (int k = n * n - 1; k >= 0; --k) {
        m.e[k] = static_cast<std::uint8_t>(w & 7u);
        w >>= 3;
    }
    return m;
}

inline std::uint64_t gf_code_count(int n, std::uint32_t p) {
    std::uint64_t total = 1;
    for (int k = 0; k < n * n; ++k) total *= p;
    return total;
}

/// |GL(n,p)| = prod over k of (p^n - p^k).
inline std::uint64_t gl_order(int n, std::uint32_t p) {
    std::uint64_t pn = 1;
    for (int k = 0; k < n; ++k) pn *= p;
    std::uint64_t order = 1, pk = 1;
    for (int k = 0; k < n; ++k) {
        order *= pn - pk;
        pk *= p;
    }
    return order;
}

/// Calls fn(mat, code) for every nonsingular n x n matrix over GF(p), each
/// exactly once, in ascending code (lexicographic) order.
template <typename Fn>
inline void for_each_gl(int n, std::uint32_t p, Fn&& fn) {
    require_gf_caps(n, p);
    const std::uint64_t total = gf_code_count(n, p);
    for (std::uint64_t code = 0; code < total; ++code) {
        GfMat m = gf_decode(code, n, p);
        if (gf_nonsingular(m)) fn(m, code);
    }
}

inline GfMat gf_from_matrix(const Matrix& a) {
    const FieldDescriptor& f = a.field();
    if (!f.is_prime())
        throw UnsupportedFieldError("exhaustive enumeration needs a prime field, got " +
                                    f.to_string());
    require_gf_caps(a.dim(), f.prime_modulus());
    GfMat m{a.dim(), f.prime_modulus(), {}};
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j)
            m.at(i - 1, j - 1) = static_cast<std::uint8_t>(a.at(i, j).residue_value());
    return m;
}

inline Matrix gf_to_matrix(const GfMat& m) {
    const FieldDescriptor f = FieldDescriptor::prime(m.p);
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(m.n) * m.n);
    for (int k = 0; k < m.n * m.n; ++k) e.push_back(Scalar::of_residue(f, m.e[k]));
    return Matrix(f, m.n, std::move(e));
}

} // namespace congr::detail
