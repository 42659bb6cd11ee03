#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "congr/error.hpp"

namespace congr {

/// Deterministic primality test for 32-bit candidates (trial division).
inline bool is_prime_u32(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    // mod < 2^31, so all intermediate products fit in 64 bits.
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZeroError("no inverse of 0 in GF(p)");
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return static_cast<std::uint32_t>(s0 < 0 ? s0 + p : s0);
}

/// One square root of a modulo an odd prime p (a in [1, p)), or nullopt when
/// a is a non-residue. Tonelli-Shanks in the p = 1 (mod 4) case.
inline std::optional<std::uint32_t> sqrt_mod_odd(std::uint32_t a, std::uint32_t p) {
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3)
        return static_cast<std::uint32_t>(pow_mod(a, (p + 1) / 4, p));

    // p = 1 (mod 4): write p-1 = q * 2^s with q odd.
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }

    std::uint32_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) == 1) ++z; // smallest non-residue

    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, t2 = t;
        while (t2 != 1) { t2 = t2 * t2 % p; ++i; }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace detail

/// Which exact field scalars live in: the rationals or a prime field GF(p).
/// Descriptors are small immutable values; equality compares kind and modulus.
class FieldDescriptor {
public:
    enum class Kind { Rational, Prime };

    /// Default-constructed descriptors name the rationals.
    FieldDescriptor() noexcept : FieldDescriptor(Kind::Rational, 0) {}

    static FieldDescriptor rational() noexcept { return FieldDescriptor(Kind::Rational, 0); }

    /// GF(p) for a prime p with 2 <= p < 2^31. Primality is checked here.
    static FieldDescriptor prime(std::uint32_t p) {
        if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
            throw UnsupportedFieldError("GF(p) requires a prime 2 <= p < 2^31, got " +
                                        std::to_string(p));
        return FieldDescriptor(Kind::Prime, p);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }

    std::uint32_t prime_modulus() const {
        if (kind_ != Kind::Prime)
            throw UnsupportedFieldError("prime_modulus() on the rational field");
        return p_;
    }

    /// 0 for the rationals, p for GF(p).
    std::uint64_t characteristic() const noexcept { return kind_ == Kind::Prime ? p_ : 0; }

    std::string to_string() const {
        return kind_ == Kind::Rational ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
        return !(a == b);
    }

private:
    FieldDescriptor(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

/// One exact field element. Rational values are kept canonical
/// (gcd(|num|, den) = 1, den > 0, zero as 0/1); prime-field values store the
/// unique representative in [0, p). Scalars are immutable values and every
/// operation is pure, so they can be shared between threads freely.
class Scalar {
public:
    /// Default-constructed scalars are rational zero.
    Scalar() : Scalar(FieldDescriptor::rational()) {}

    static Scalar zero(const FieldDescriptor& f) { return Scalar(f); }

    static Scalar one(const FieldDescriptor& f) { return of_integer(f, 1); }

    static Scalar of_integer(const FieldDescriptor& f, long long v) {
        Scalar s(f);
        if (f.is_rational()) {
            s.rat_ = make_mpz(v);
        } else {
            const std::uint32_t p = f.prime_modulus();
            long long r = v % static_cast<long long>(p);
            if (r < 0) r += p;
            s.res_ = static_cast<std::uint32_t>(r);
        }
        return s;
    }

    /// Rational num/den, canonicalized. den must be nonzero.
    static Scalar of_rational(long long num, long long den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        Scalar s(FieldDescriptor::rational());
        s.rat_ = mpq_class(make_mpz(num), make_mpz(den));
        s.rat_.canonicalize();
        return s;
    }

    static Scalar of_mpq(mpq_class q) {
        Scalar s(FieldDescriptor::rational());
        q.canonicalize();
        s.rat_ = std::move(q);
        return s;
    }

    static Scalar of_residue(const FieldDescriptor& f, std::uint64_t r) {
        if (!f.is_prime())
            throw UnsupportedFieldError("of_residue requires a prime field");
        Scalar s(f);
        s.res_ = static_cast<std::uint32_t>(r % f.prime_modulus());
        return s;
    }

    const FieldDescriptor& field() const noexcept { return desc_; }

    bool is_zero() const {
        return desc_.is_rational() ? sgn(rat_) == 0 : res_ == 0;
    }
    bool is_one() const {
        return desc_.is_rational() ? rat_ == 1 : res_ == 1;
    }

    Scalar operator-() const {
        Scalar s(desc_);
        if (desc_.is_rational()) s.rat_ = -rat_;
        else s.res_ = res_ == 0 ? 0 : desc_.prime_modulus() - res_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        Scalar s(desc_);
        if (desc_.is_rational()) s.rat_ = 1 / rat_;
        else s.res_ = detail::inverse_mod(res_, desc_.prime_modulus());
        return s;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        require_same_field(x, y);
        Scalar s(x.desc_);
        if (x.desc_.is_rational()) s.rat_ = x.rat_ + y.rat_;
        else s.res_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(x.res_) + y.res_) % x.desc_.prime_modulus());
        return s;
    }

    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        require_same_field(x, y);
        Scalar s(x.desc_);
        if (x.desc_.is_rational()) s.rat_ = x.rat_ - y.rat_;
        else {
            const std::uint32_t p = x.desc_.prime_modulus();
            s.res_ = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(x.res_) + p - y.res_) % p);
        }
        return s;
    }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        require_same_field(x, y);
        Scalar s(x.desc_);
        if (x.desc_.is_rational()) s.rat_ = x.rat_ * y.rat_;
        else s.res_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(x.res_) * y.res_ % x.desc_.prime_modulus());
        return s;
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        require_same_field(x, y);
        if (y.is_zero()) throw DivisionByZeroError();
        Scalar s(x.desc_);
        if (x.desc_.is_rational()) s.rat_ = x.rat_ / y.rat_;
        else s.res_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(x.res_) *
            detail::inverse_mod(y.res_, x.desc_.prime_modulus()) % x.desc_.prime_modulus());
        return s;
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    /// Exact equality. Scalars from different fields compare unequal.
    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.desc_ != y.desc_) return false;
        return x.desc_.is_rational() ? x.rat_ == y.rat_ : x.res_ == y.res_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Canonical text form: "n" or "n/d" with the sign on the numerator for
    /// rationals, the decimal residue for prime fields.
    std::string str() const {
        return desc_.is_rational() ? rat_.get_str() : std::to_string(res_);
    }

    const mpq_class& rational_value() const {
        if (!desc_.is_rational())
            throw UnsupportedFieldError("rational_value() on a prime-field scalar");
        return rat_;
    }

    std::uint32_t residue_value() const {
        if (!desc_.is_prime())
            throw UnsupportedFieldError("residue_value() on a rational scalar");
        return res_;
    }

private:
    explicit Scalar(const FieldDescriptor& f) : desc_(f), rat_(0), res_(0) {}

    static mpz_class make_mpz(long long v) {
        if constexpr (sizeof(long) == sizeof(long long))
            return mpz_class(static_cast<long>(v));
        else
            return mpz_class(std::to_string(v));
    }

    static void require_same_field(const Scalar& x, const Scalar& y) {
        if (x.desc_ != y.desc_)
            throw FieldMismatchError("scalar fields differ: " + x.desc_.to_string() + " vs " +
                                     y.desc_.to_string());
    }

    FieldDescriptor desc_;
    mpq_class rat_;      // valid iff rational
    std::uint32_t res_;  // valid iff prime
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Parses the canonical scalar grammar: optional sign and digits, plus an
/// optional "/digits" part over the rationals. Prime-field values are reduced
/// into [0, p).
inline Scalar parse_scalar(const FieldDescriptor& f, std::string_view text) {
    const auto bad = [&] { throw ParseError("malformed scalar: '" + std::string(text) + "'"); };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) bad();
    const std::string num_digits(text.substr(num_begin, pos - num_begin));

    std::string den_digits;
    if (pos < text.size() && text[pos] == '/') {
        if (f.is_prime()) bad(); // residues are plain integers
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin) bad();
        den_digits = text.substr(den_begin, pos - den_begin);
    }
    if (pos != text.size()) bad();

    mpz_class num(num_digits, 10);
    if (negative) num = -num;

    if (f.is_rational()) {
        mpz_class den = den_digits.empty() ? mpz_class(1) : mpz_class(den_digits, 10);
        if (den == 0) throw ParseError("scalar with zero denominator: '" + std::string(text) + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar::of_mpq(std::move(q));
    }
    const std::uint32_t p = f.prime_modulus();
    mpz_class r = num % p;
    if (r < 0) r += p;
    return Scalar::of_residue(f, r.get_ui());
}

/// All s in the scalar's field with s*s = d, in ascending order. The empty
/// list means d has no square root in this field.
inline std::vector<Scalar> sqrt_in_field(const Scalar& d) {
    const FieldDescriptor& f = d.field();
    if (d.is_zero()) return {Scalar::zero(f)};

    if (f.is_rational()) {
        const mpq_class& q = d.rational_value();
        if (sgn(q) < 0) return {};
        const mpz_class& num = q.get_num();
        const mpz_class& den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return {};
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        mpq_class root(rn, rd); // already canonical: gcd(num, den) = 1
        return {Scalar::of_mpq(-root), Scalar::of_mpq(root)};
    }

    const std::uint32_t p = f.prime_modulus();
    const std::uint32_t r = d.residue_value();
    if (p == 2) return {d}; // x^2 = x over GF(2)
    const auto s = detail::sqrt_mod_odd(r, p);
    if (!s) return {};
    const std::uint32_t lo = std::min(*s, p - *s);
    return {Scalar::of_residue(f, lo), Scalar::of_residue(f, p - lo)};
}

} // namespace congr
