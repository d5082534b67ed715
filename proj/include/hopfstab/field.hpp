#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfstab {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField };

/// Ground field descriptor. PrimeField carries its (prime) modulus.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string name() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element: a canonical fraction over Q, or a residue in [0,p).
class Scalar {
public:
    Scalar() = default;  // zero over Q
    Scalar(const FieldSpec& f, long value);
    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    static Scalar from_rational(const mpq_class& q);
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical string: "a/b" (b>1) or "a" over Q, decimal residue over F_p.
    std::string str() const;
    /// Strict parse of the canonical form; rejects "3/6", "1/1", "-0", "007".
    static Scalar parse(const FieldSpec& f, const std::string& s);

    const mpq_class& rational() const;
    std::uint64_t residue() const;

private:
    FieldSpec field_;
    mpq_class rat_;         // Rationals only, always canonicalized
    std::uint64_t res_ = 0; // PrimeField only

    void require_same_field(const Scalar& o) const;
};

}  // namespace hopfstab
