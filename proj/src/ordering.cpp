#include "gbd/ordering.hpp"

#include <numeric>
#include <set>

#include "gbd/errors.hpp"

namespace gbd {

const char* order_kind_name(OrderKind k) {
    switch (k) {
    case OrderKind::lex:
        return "lex";
    case OrderKind::grlex:
        return "grlex";
    case OrderKind::grevlex:
        return "grevlex";
    }
    return "?";
}

std::optional<OrderKind> order_kind_from(std::string_view name) {
    if (name == "lex")
        return OrderKind::lex;
    if (name == "grlex")
        return OrderKind::grlex;
    if (name == "grevlex")
        return OrderKind::grevlex;
    return std::nullopt;
}

Ordering::Ordering(OrderKind kind, std::size_t n) : kind_(kind), priority_(n) {
    std::iota(priority_.begin(), priority_.end(), 0);
}

Ordering::Ordering(OrderKind kind, std::vector<std::uint32_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::set<std::uint32_t> seen(priority_.begin(), priority_.end());
    if (priority_.empty() || seen.size() != priority_.size() ||
        *seen.rbegin() != priority_.size() - 1)
        throw InvalidArgument("ordering priority must be a permutation of all variables");
}

std::strong_ordering Ordering::compare(const Term& a, const Term& b) const {
    if (a.vars() != priority_.size() || b.vars() != priority_.size())
        throw ContextMismatch("term does not match ordering's ring");

    if (kind_ != OrderKind::lex) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0)
            return c;
    }
    if (kind_ == OrderKind::grevlex) {
        // graded reverse lex: scan least significant variable first;
        // the term with the smaller exponent at the first difference is greater.
        for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
            if (a.deg(*it) != b.deg(*it))
                return a.deg(*it) < b.deg(*it) ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }
    for (auto i : priority_) {
        if (auto c = a.deg(i) <=> b.deg(i); c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

} // namespace gbd
