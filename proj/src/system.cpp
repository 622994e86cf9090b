#include "gbd/system.hpp"

#include "gbd/errors.hpp"

namespace gbd {

std::vector<Term> SystemFile::leading_terms() const {
    std::vector<Term> lts;
    lts.reserve(polys.size());
    for (const auto& p : polys)
        lts.push_back(p.leading_term(order));
    return lts;
}

void validate_system(const SystemFile& sys) {
    if (sys.polys.empty())
        throw InvalidArgument("system has no polynomials");
    if (sys.order.vars() != sys.ring.size())
        throw InvalidArgument("ordering does not cover the ring's variables");
    if (!sys.labels.empty() && sys.labels.size() != sys.polys.size())
        throw InvalidArgument("label count does not match polynomial count");
    for (const auto& p : sys.polys) {
        if (p.is_zero())
            throw InvalidArgument("zero polynomial not admitted as system element");
        if (p.vars() != sys.ring.size())
            throw InvalidArgument("polynomial does not match the declared ring");
        for (const auto& [t, c] : p.terms())
            if (c.field() != sys.field)
                throw InvalidArgument("coefficient outside the declared field");
    }
}

} // namespace gbd
