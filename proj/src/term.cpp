#include "gbd/term.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gbd/errors.hpp"

namespace gbd {

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw InvalidArgument("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw InvalidArgument("empty variable name");
        if (!seen.insert(n).second)
            throw InvalidArgument("duplicate variable name: " + n);
    }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::uint64_t Term::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : e_)
        d += e;
    return d;
}

bool Term::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e == 0; });
}

namespace {

void check_same_context(const Term& a, const Term& b) {
    if (a.vars() != b.vars())
        throw ContextMismatch("terms from different rings");
}

} // namespace

Term operator*(const Term& a, const Term& b) {
    check_same_context(a, b);
    Term r(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i) {
        std::uint64_t s = std::uint64_t(a.e_[i]) + b.e_[i];
        if (s > std::numeric_limits<std::uint32_t>::max())
            throw OverflowError("exponent overflow in term product");
        r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

bool divides(const Term& a, const Term& b) {
    check_same_context(a, b);
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a.e_[i] > b.e_[i])
            return false;
    return true;
}

Term operator/(const Term& a, const Term& b) {
    check_same_context(a, b);
    Term r(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i) {
        if (b.e_[i] > a.e_[i])
            throw InvalidArgument("term division by a non-divisor");
        r.e_[i] = a.e_[i] - b.e_[i];
    }
    return r;
}

Term gcd(const Term& a, const Term& b) {
    check_same_context(a, b);
    Term r(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

Term lcm(const Term& a, const Term& b) {
    check_same_context(a, b);
    Term r(a.vars());
    for (std::size_t i = 0; i < a.vars(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

std::string Term::to_string(const RingContext& ctx) const {
    if (is_identity())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ctx.name(i);
        if (e_[i] > 1) {
            out += '^';
            out += std::to_string(e_[i]);
        }
    }
    return out;
}

} // namespace gbd
