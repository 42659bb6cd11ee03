#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/rng.hpp"

namespace congr {

/// Dense square matrix of exact scalars over one field. Immutable after
/// construction; all operations are pure functions returning new values.
/// Entry access is 1-based, matching the usual a_ij subscript convention.
class Matrix {
public:
    /// Largest supported dimension. Exact adjugates are O(n^5); this library
    /// targets verification workloads, not scale.
    static constexpr int kMaxDim = 64;

    Matrix(FieldDescriptor f, int n, std::vector<Scalar> row_major)
        : desc_(std::move(f)), n_(n), e_(std::move(row_major)) {
        if (n_ < 1) throw DimensionMismatchError("matrix dimension must be >= 1");
        if (n_ > kMaxDim)
            throw CapExceededError("matrix dimension above " + std::to_string(kMaxDim));
        if (e_.size() != static_cast<std::size_t>(n_) * n_)
            throw DimensionMismatchError("entry count does not match dimension");
        for (const Scalar& s : e_)
            if (s.field() != desc_) throw FieldMismatchError("entry field differs from matrix field");
    }

    static Matrix identity(const FieldDescriptor& f, int n) {
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                e.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
        return Matrix(f, n, std::move(e));
    }

    static Matrix from_rows(const FieldDescriptor& f, const std::vector<std::vector<Scalar>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw DimensionMismatchError("matrix rows must form a square");
            for (const Scalar& s : row) e.push_back(s);
        }
        return Matrix(f, n, std::move(e));
    }

    /// Convenience builder from small integers in row-major order (reduced
    /// into prime fields).
    static Matrix from_integers(const FieldDescriptor& f, int n,
                                std::initializer_list<long long> entries) {
        std::vector<Scalar> e;
        e.reserve(entries.size());
        for (long long v : entries) e.push_back(Scalar::of_integer(f, v));
        return Matrix(f, n, std::move(e));
    }

    int dim() const noexcept { return n_; }
    const FieldDescriptor& field() const noexcept { return desc_; }

    /// Entry a_ij with 1-based indices.
    const Scalar& at(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw IndexOutOfRangeError("matrix index (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") outside 1.." + std::to_string(n_));
        return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.desc_ == b.desc_ && a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldDescriptor desc_;
    int n_;
    std::vector<Scalar> e_; // row-major
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& a) {
    os << "[";
    for (int i = 1; i <= a.dim(); ++i) {
        os << (i == 1 ? "[" : " [");
        for (int j = 1; j <= a.dim(); ++j) os << (j == 1 ? "" : ", ") << a.at(i, j).str();
        os << "]";
        if (i != a.dim()) os << ",";
    }
    return os << "] over " << a.field().to_string();
}

inline Matrix transpose(const Matrix& a) {
    const int n = a.dim();
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) e.push_back(a.at(j, i));
    return Matrix(a.field(), n, std::move(e));
}

namespace detail {

inline void require_compatible(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("matrix fields differ: " + a.field().to_string() + " vs " +
                                 b.field().to_string());
    if (a.dim() != b.dim())
        throw DimensionMismatchError("matrix dimensions differ: " + std::to_string(a.dim()) +
                                     " vs " + std::to_string(b.dim()));
}

} // namespace detail

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    detail::require_compatible(a, b);
    const int n = a.dim();
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Scalar acc = a.at(i, 1) * b.at(1, j);
            for (int k = 2; k <= n; ++k) acc += a.at(i, k) * b.at(k, j);
            e.push_back(std::move(acc));
        }
    }
    return Matrix(a.field(), n, std::move(e));
}

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
    detail::require_compatible(a, b);
    const int n = a.dim();
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) e.push_back(a.at(i, j) + b.at(i, j));
    return Matrix(a.field(), n, std::move(e));
}

inline Matrix scalar_mul(const Scalar& c, const Matrix& a) {
    if (c.field() != a.field()) throw FieldMismatchError();
    const int n = a.dim();
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) e.push_back(c * a.at(i, j));
    return Matrix(a.field(), n, std::move(e));
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator*(const Scalar& c, const Matrix& a) { return scalar_mul(c, a); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }

inline Scalar trace(const Matrix& a) {
    Scalar acc = a.at(1, 1);
    for (int i = 2; i <= a.dim(); ++i) acc += a.at(i, i);
    return acc;
}

inline bool is_symmetric(const Matrix& a) {
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = i + 1; j <= a.dim(); ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

namespace detail {

/// Exact determinant by Gaussian elimination over the scalar field.
inline Scalar determinant_gaussian(const Matrix& a) {
    const int n = a.dim();
    const FieldDescriptor& f = a.field();
    std::vector<Scalar> w;
    w.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) w.push_back(a.at(i, j));
    const auto at = [&](int i, int j) -> Scalar& { return w[static_cast<std::size_t>(i) * n + j]; };

    Scalar det = Scalar::one(f);
    bool negate = false;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!at(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Scalar::zero(f);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            negate = !negate;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            const Scalar factor = at(i, k) / at(k, k);
            for (int j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
        }
    }
    return negate ? -det : det;
}

/// Fraction-free Bareiss determinant over cleared-denominator integers.
/// Controls coefficient growth on larger rational matrices. Rational only.
inline Scalar determinant_bareiss(const Matrix& a) {
    const int n = a.dim();
    std::vector<mpz_class> z(static_cast<std::size_t>(n) * n);
    const auto at = [&](int i, int j) -> mpz_class& { return z[static_cast<std::size_t>(i) * n + j]; };

    mpz_class row_factors = 1;
    for (int i = 1; i <= n; ++i) {
        mpz_class l = 1;
        for (int j = 1; j <= n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).rational_value().get_den_mpz_t());
        row_factors *= l;
        for (int j = 1; j <= n; ++j) {
            const mpq_class& q = a.at(i, j).rational_value();
            at(i - 1, j - 1) = q.get_num() * (l / q.get_den());
        }
    }

    mpz_class prev = 1;
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (at(r, k) != 0) { pivot = r; break; }
        if (pivot < 0) return Scalar::zero(FieldDescriptor::rational());
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }

    mpq_class det(negate ? mpz_class(-at(n - 1, n - 1)) : at(n - 1, n - 1), row_factors);
    det.canonicalize();
    return Scalar::of_mpq(std::move(det));
}

} // namespace detail

/// Exact determinant; 0 for singular inputs. Rational matrices of dimension
/// 6 and up take the fraction-free Bareiss route.
inline Scalar determinant(const Matrix& a) {
    if (a.field().is_rational() && a.dim() >= 6) return detail::determinant_bareiss(a);
    return detail::determinant_gaussian(a);
}

inline bool is_nonsingular(const Matrix& a) { return !determinant(a).is_zero(); }

/// The (i,j) cofactor: (-1)^(i+j) times the minor deleting row i, column j.
/// For n = 1 the single cofactor is 1. Indices are 1-based.
inline Scalar cofactor(const Matrix& a, int i, int j) {
    const int n = a.dim();
    if (i < 1 || i > n || j < 1 || j > n)
        throw IndexOutOfRangeError("cofactor index (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") outside 1.." + std::to_string(n));
    if (n == 1) return Scalar::one(a.field());

    std::vector<Scalar> minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int r = 1; r <= n; ++r) {
        if (r == i) continue;
        for (int c = 1; c <= n; ++c) {
            if (c == j) continue;
            minor.push_back(a.at(r, c));
        }
    }
    Scalar det = determinant(Matrix(a.field(), n - 1, std::move(minor)));
    return (i + j) % 2 == 0 ? det : -det;
}

/// Adjugate: entry (i,j) is the (j,i) cofactor. Defined for singular inputs
/// as well; a * adjugate(a) = det(a) * I holds for every a.
inline Matrix adjugate(const Matrix& a) {
    const int n = a.dim();
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) e.push_back(cofactor(a, j, i));
    return Matrix(a.field(), n, std::move(e));
}

/// Exact inverse by Gauss-Jordan elimination.
inline Matrix inverse(const Matrix& a) {
    const int n = a.dim();
    const FieldDescriptor& f = a.field();
    // Augmented [a | I], eliminated in place.
    std::vector<Scalar> w;
    w.reserve(static_cast<std::size_t>(n) * 2 * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) w.push_back(a.at(i, j));
        for (int j = 0; j < n; ++j) w.push_back(j == i - 1 ? Scalar::one(f) : Scalar::zero(f));
    }
    const int m = 2 * n;
    const auto at = [&](int i, int j) -> Scalar& { return w[static_cast<std::size_t>(i) * m + j]; };

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!at(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw SingularMatrixError();
        if (pivot != k)
            for (int j = k; j < m; ++j) std::swap(at(pivot, j), at(k, j));
        const Scalar inv_pivot = at(k, k).inverse();
        for (int j = k; j < m; ++j) at(k, j) *= inv_pivot;
        for (int i = 0; i < n; ++i) {
            if (i == k || at(i, k).is_zero()) continue;
            const Scalar factor = at(i, k);
            for (int j = k; j < m; ++j) at(i, j) -= factor * at(k, j);
        }
    }

    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = n; j < m; ++j) e.push_back(at(i, j));
    return Matrix(f, n, std::move(e));
}

namespace detail {

inline Scalar random_entry(const FieldDescriptor& f, Rng& rng, std::int64_t bound) {
    if (f.is_rational()) return Scalar::of_integer(f, rng.int_in(-bound, bound));
    return Scalar::of_residue(f, rng.below(f.prime_modulus()));
}

inline Scalar random_nonzero(const FieldDescriptor& f, Rng& rng, std::int64_t bound) {
    if (f.is_rational()) {
        const std::int64_t v = 1 + rng.int_in(0, bound - 1);
        return Scalar::of_integer(f, rng.coin() ? v : -v);
    }
    return Scalar::of_residue(f, 1 + rng.below(f.prime_modulus() - 1));
}

/// Rejection sampling with a bounded retry budget, then a guaranteed
/// fallback: the product of random elementary matrices (shears and nonzero
/// diagonal scalings), which is nonsingular by construction.
inline Matrix random_nonsingular_impl(int n, const FieldDescriptor& f, Rng& rng,
                                      std::int64_t bound, int max_attempts) {
    if (n < 1) throw DimensionMismatchError("matrix dimension must be >= 1");
    if (bound < 1) throw ParseError("entry bound must be >= 1");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Scalar> e;
        e.reserve(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n * n; ++k) e.push_back(random_entry(f, rng, bound));
        Matrix m(f, n, std::move(e));
        if (is_nonsingular(m)) return m;
    }

    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    const auto at = [&](int i, int j) -> Scalar& { return e[static_cast<std::size_t>(i) * n + j]; };

    const int ops = 3 * n * n;
    for (int t = 0; t < ops; ++t) {
        if (n > 1 && rng.below(4) != 0) {
            // Right-multiply by I + c*E(i,j): column j += c * column i.
            const int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n - 1));
            if (j >= i) ++j;
            const Scalar c = random_entry(f, rng, bound);
            for (int r = 0; r < n; ++r) at(r, j) += c * at(r, i);
        } else {
            // Right-multiply by a nonzero diagonal scaling of column i.
            const int i = static_cast<int>(rng.below(n));
            const Scalar u = random_nonzero(f, rng, bound);
            for (int r = 0; r < n; ++r) at(r, i) *= u;
        }
    }
    return Matrix(f, n, std::move(e));
}

} // namespace detail

/// Seeded random nonsingular matrix. Over the rationals entries start as
/// integers in [-bound, bound]; over GF(p) as residues. Deterministic for a
/// fixed seed.
inline Matrix random_nonsingular(int n, const FieldDescriptor& f, std::uint64_t seed,
                                 std::int64_t bound) {
    Rng rng(seed);
    return detail::random_nonsingular_impl(n, f, rng, bound, 64);
}

inline Matrix random_nonsingular(int n, const FieldDescriptor& f, Rng& rng, std::int64_t bound) {
    return detail::random_nonsingular_impl(n, f, rng, bound, 64);
}

} // namespace congr
