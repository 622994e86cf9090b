#include "gbd/reduce.hpp"

#include <numeric>
#include <set>

#include "gbd/errors.hpp"

namespace gbd {

Term sigma(const Polynomial& f, const Polynomial& g, const Ordering& ord) {
    if (f.is_zero() || g.is_zero())
        throw InvalidArgument("sigma of a zero polynomial");
    const Term& tf = f.leading_term(ord);
    const Term& tg = g.leading_term(ord);
    return lcm(tf, tg) / tf;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ordering& ord) {
    if (f.is_zero() || g.is_zero())
        throw InvalidArgument("S-polynomial of a zero polynomial");
    return f.scaled(g.leading_coeff(ord), sigma(f, g, ord)) -
           g.scaled(f.leading_coeff(ord), sigma(g, f, ord));
}

ReductionTrace reduce_subset(const Polynomial& p, std::span<const Polynomial> basis,
                             std::span<const int> subset, const Ordering& ord) {
    ReductionTrace trace;
    trace.target = p;
    trace.available.assign(subset.begin(), subset.end());

    std::vector<const Polynomial*> g;
    std::vector<const Term*> lt;
    std::vector<const Coeff*> lc;
    g.reserve(subset.size());
    for (int idx : subset) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= basis.size())
            throw InvalidArgument("reducer index out of range");
        const Polynomial& gi = basis[idx];
        if (gi.is_zero())
            throw InvalidArgument("zero polynomial in reducer list");
        g.push_back(&gi);
        auto lead = gi.leading(ord);
        lt.push_back(lead.first);
        lc.push_back(lead.second);
    }

    std::set<int> used;
    Polynomial active = p;
    while (!active.is_zero()) {
        auto [head, coeff] = active.leading(ord);
        std::size_t hit = g.size();
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (divides(*lt[k], *head)) {
                hit = k;
                break;
            }
        }
        if (hit == g.size()) {
            trace.remainder.add_term(*coeff, *head);
            active.add_term(-*coeff, *head);
            continue;
        }
        Term qt = *head / *lt[hit];
        Coeff qc = *coeff / *lc[hit];
        trace.steps.push_back({qc, qt, subset[hit]});
        used.insert(subset[hit]);
        active = active - g[hit]->scaled(qc, qt);
    }
    trace.reducers_used.assign(used.begin(), used.end());
    return trace;
}

ReductionTrace reduce(const Polynomial& p, std::span<const Polynomial> basis, const Ordering& ord) {
    std::vector<int> all(basis.size());
    std::iota(all.begin(), all.end(), 0);
    return reduce_subset(p, basis, all, ord);
}

} // namespace gbd
