#include "hopfstab/field.hpp"

namespace hopfstab {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(modulus);
}

Scalar::Scalar(const FieldSpec& f, long value) : field_(f) {
    if (f.kind == FieldKind::Rationals) {
        rat_ = value;
    } else {
        long m = static_cast<long>(f.modulus);
        long r = value % m;
        if (r < 0) r += m;
        res_ = static_cast<std::uint64_t>(r);
    }
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.kind != FieldKind::PrimeField) throw FieldError("from_residue requires a prime field");
    Scalar s;
    s.field_ = f;
    s.res_ = r % f.modulus;
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.kind == FieldKind::Rationals) return from_rational(rat_ + o.rat_);
    return from_residue(field_, res_ + o.res_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (field_.kind == FieldKind::Rationals) return from_rational(rat_ - o.rat_);
    return from_residue(field_, res_ + field_.modulus - o.res_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.kind == FieldKind::Rationals) return from_rational(rat_ * o.rat_);
    return from_residue(field_, res_ * o.res_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (field_.kind == FieldKind::Rationals) return from_rational(-rat_);
    return from_residue(field_, field_.modulus - res_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (field_.kind == FieldKind::Rationals) return from_rational(1 / rat_);
    // Fermat: p is small enough that repeated squaring on 64 bits is safe.
    return pow(static_cast<long>(field_.modulus) - 2);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return field_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::PrimeField) return std::to_string(res_);
    if (rat_.get_den() == 1) return rat_.get_num().get_str();
    return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

namespace {
bool canonical_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    if (s[i] == '0' && s.size() > i + 1) return false;  // no leading zeros
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    if (s == "-0") return false;
    return true;
}
}  // namespace

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
    if (f.kind == FieldKind::PrimeField) {
        if (!canonical_integer_token(s) || s[0] == '-')
            throw FieldError("malformed prime-field scalar '" + s + "'");
        mpz_class v(s);
        if (v >= static_cast<long>(f.modulus))
            throw FieldError("non-canonical residue '" + s + "' (modulus " +
                             std::to_string(f.modulus) + ")");
        return from_residue(f, v.get_ui());
    }
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    if (!canonical_integer_token(num)) throw FieldError("malformed rational '" + s + "'");
    if (slash == std::string::npos) return from_rational(mpq_class(mpz_class(num)));
    std::string den = s.substr(slash + 1);
    if (!canonical_integer_token(den) || den[0] == '-')
        throw FieldError("malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d <= 1) throw FieldError("non-canonical rational '" + s + "'");
    if (gcd(n, d) != 1) throw FieldError("non-canonical rational '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return from_rational(q);
}

const mpq_class& Scalar::rational() const {
    if (field_.kind != FieldKind::Rationals) throw FieldError("not a rational scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (field_.kind != FieldKind::PrimeField) throw FieldError("not a prime-field scalar");
    return res_;
}

}  // namespace hopfstab
