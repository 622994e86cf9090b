#ifndef GBD_ORDERING_HPP
#define GBD_ORDERING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gbd/term.hpp"

namespace gbd {

enum class OrderKind { lex, grlex, grevlex };

const char* order_kind_name(OrderKind k);
std::optional<OrderKind> order_kind_from(std::string_view name);

/// Admissible term ordering: total, multiplicative, identity-minimal.
/// `priority` is a permutation of variable indices, most significant first.
class Ordering {
public:
    Ordering(OrderKind kind, std::size_t n); // priority = declaration order
    Ordering(OrderKind kind, std::vector<std::uint32_t> priority);

    OrderKind kind() const { return kind_; }
    std::size_t vars() const { return priority_.size(); }
    const std::vector<std::uint32_t>& priority() const { return priority_; }

    std::strong_ordering compare(const Term& a, const Term& b) const;
    bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }
    bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }

    bool operator==(const Ordering&) const = default;

private:
    OrderKind kind_;
    std::vector<std::uint32_t> priority_;
};

} // namespace gbd

#endif
