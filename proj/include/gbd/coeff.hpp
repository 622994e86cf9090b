#ifndef GBD_COEFF_HPP
#define GBD_COEFF_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gbd {

/// Which field coefficients live in: Q (default) or GF(p) for prime p.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(std::uint32_t p); // validates primality

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint32_t n);

/// Exact field element: arbitrary-precision rational or residue mod p.
/// All arithmetic is exact; mixing fields throws FieldMismatch.
class Coeff {
public:
    Coeff() : v_(mpq_class(0)) {}

    static Coeff integer(const FieldSpec& field, long v);
    static Coeff from_digits(const FieldSpec& field, const std::string& digits, bool negative);
    static Coeff rational(long num, long den);
    static Coeff rational(mpq_class q);
    static Coeff residue(std::uint64_t value, std::uint32_t p);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    // True when representable as an integer literal of the input grammar.
    bool is_integral() const;
    bool negative() const; // rationals only; residues are canonical in [0,p)

    FieldSpec field() const;
    const mpq_class& rational_value() const;

    Coeff operator-() const;
    friend Coeff operator+(const Coeff& a, const Coeff& b);
    friend Coeff operator-(const Coeff& a, const Coeff& b);
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    friend Coeff operator/(const Coeff& a, const Coeff& b); // b != 0

    bool operator==(const Coeff& o) const;

    std::string to_string() const;
    // |value| as text, for monomial rendering ("8" in "- 8x1").
    std::string magnitude_string() const;

private:
    struct Residue {
        std::uint64_t value;
        std::uint32_t p;
        bool operator==(const Residue&) const = default;
    };

    explicit Coeff(mpq_class q) : v_(std::move(q)) {}
    explicit Coeff(Residue r) : v_(r) {}

    std::variant<mpq_class, Residue> v_;
};

} // namespace gbd

#endif
