#ifndef GBD_TERM_HPP
#define GBD_TERM_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbd {

/// Ordered list of distinct variable names; fixes the number of variables.
class RingContext {
public:
    explicit RingContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const RingContext&) const = default;

private:
    std::vector<std::string> names_;
};

/// A term: unit-coefficient monomial, stored as an exponent vector.
class Term {
public:
    Term() = default;
    explicit Term(std::size_t n) : e_(n, 0) {}
    Term(std::initializer_list<std::uint32_t> e) : e_(e) {}

    static Term identity(std::size_t n) { return Term(n); }

    std::size_t vars() const { return e_.size(); }
    std::uint32_t deg(std::size_t i) const { return e_.at(i); }
    std::uint64_t total_degree() const;
    bool is_identity() const;

    Term& set(std::size_t i, std::uint32_t e) {
        e_.at(i) = e;
        return *this;
    }

    bool operator==(const Term&) const = default;
    // Canonical ordering-agnostic key (plain lexicographic on exponents);
    // used for polynomial storage, not as a term ordering.
    auto operator<=>(const Term&) const = default;

    std::string to_string(const RingContext& ctx) const;

    friend Term operator*(const Term& a, const Term& b);
    friend Term operator/(const Term& a, const Term& b); // requires b | a
    friend bool divides(const Term& a, const Term& b);   // a | b
    friend Term gcd(const Term& a, const Term& b);
    friend Term lcm(const Term& a, const Term& b);

private:
    std::vector<std::uint32_t> e_;
};

} // namespace gbd

#endif
