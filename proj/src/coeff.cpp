#include "gbd/coeff.hpp"

#include <utility>

#include "gbd/errors.hpp"

namespace gbd {

bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (!is_prime(p))
        throw InvalidArgument("GF modulus must be prime, got " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
    // extended Euclid; p prime, a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw InvalidArgument("residue has no inverse");
    return static_cast<std::uint64_t>(t < 0 ? t + p : t);
}

} // namespace

Coeff Coeff::integer(const FieldSpec& field, long v) {
    if (field.kind == FieldSpec::Kind::rationals)
        return Coeff(mpq_class(v));
    std::int64_t r = v % static_cast<std::int64_t>(field.p);
    if (r < 0)
        r += field.p;
    return Coeff(Residue{static_cast<std::uint64_t>(r), field.p});
}

Coeff Coeff::from_digits(const FieldSpec& field, const std::string& digits, bool negative) {
    mpz_class z(digits, 10);
    if (negative)
        z = -z;
    if (field.kind == FieldSpec::Kind::rationals)
        return Coeff(mpq_class(z));
    mpz_class m = z % field.p;
    if (m < 0)
        m += field.p;
    return Coeff(Residue{m.get_ui(), field.p});
}

Coeff Coeff::rational(long num, long den) {
    if (den == 0)
        throw InvalidArgument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(q);
}

Coeff Coeff::rational(mpq_class q) {
    q.canonicalize();
    return Coeff(std::move(q));
}

Coeff Coeff::residue(std::uint64_t value, std::uint32_t p) {
    if (!is_prime(p))
        throw InvalidArgument("GF modulus must be prime");
    return Coeff(Residue{value % p, p});
}

bool Coeff::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return sgn(*q) == 0;
    return std::get<Residue>(v_).value == 0;
}

bool Coeff::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return *q == 1;
    return std::get<Residue>(v_).value == 1;
}

bool Coeff::is_integral() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return q->get_den() == 1;
    return true;
}

bool Coeff::negative() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return sgn(*q) < 0;
    return false;
}

FieldSpec Coeff::field() const {
    if (std::holds_alternative<mpq_class>(v_))
        return FieldSpec::rationals();
    return FieldSpec{FieldSpec::Kind::prime, std::get<Residue>(v_).p};
}

const mpq_class& Coeff::rational_value() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return *q;
    throw FieldMismatch("not a rational coefficient");
}

namespace {

void check_same_field(const Coeff& a, const Coeff& b) {
    if (a.field() != b.field())
        throw FieldMismatch("coefficients from different fields");
}

} // namespace

Coeff Coeff::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Coeff(mpq_class(-*q));
    auto r = std::get<Residue>(v_);
    return Coeff(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Coeff operator+(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (const auto* qa = std::get_if<mpq_class>(&a.v_))
        return Coeff(mpq_class(*qa + std::get<mpq_class>(b.v_)));
    auto ra = std::get<Coeff::Residue>(a.v_);
    auto rb = std::get<Coeff::Residue>(b.v_);
    return Coeff(Coeff::Residue{(ra.value + rb.value) % ra.p, ra.p});
}

Coeff operator-(const Coeff& a, const Coeff& b) {
    return a + (-b);
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (const auto* qa = std::get_if<mpq_class>(&a.v_))
        return Coeff(mpq_class(*qa * std::get<mpq_class>(b.v_)));
    auto ra = std::get<Coeff::Residue>(a.v_);
    auto rb = std::get<Coeff::Residue>(b.v_);
    return Coeff(Coeff::Residue{(ra.value * rb.value) % ra.p, ra.p});
}

Coeff operator/(const Coeff& a, const Coeff& b) {
    check_same_field(a, b);
    if (b.is_zero())
        throw InvalidArgument("division by zero coefficient");
    if (const auto* qa = std::get_if<mpq_class>(&a.v_))
        return Coeff(mpq_class(*qa / std::get<mpq_class>(b.v_)));
    auto ra = std::get<Coeff::Residue>(a.v_);
    auto rb = std::get<Coeff::Residue>(b.v_);
    return Coeff(Coeff::Residue{(ra.value * mod_inverse(rb.value, ra.p)) % ra.p, ra.p});
}

bool Coeff::operator==(const Coeff& o) const {
    if (v_.index() != o.v_.index())
        return false;
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return *q == std::get<mpq_class>(o.v_);
    return std::get<Residue>(v_) == std::get<Residue>(o.v_);
}

std::string Coeff::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return q->get_str();
    return std::to_string(std::get<Residue>(v_).value);
}

std::string Coeff::magnitude_string() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        mpq_class m = *q < 0 ? mpq_class(-*q) : *q;
        return m.get_str();
    }
    return std::to_string(std::get<Residue>(v_).value);
}

} // namespace gbd
