#ifndef GBD_REDUCE_HPP
#define GBD_REDUCE_HPP

#include <span>
#include <vector>

#include "gbd/ordering.hpp"
#include "gbd/polynomial.hpp"

namespace gbd {

struct ReductionStep {
    Coeff coeff;  // quotient coefficient
    Term term;    // quotient term
    int reducer;  // 0-based index into the original basis
};

/// Full record of one division run. Invariants:
///   target == sum(step.coeff * step.term * g[step.reducer]) + remainder,
///   each step cancels the leading term of the partial remainder,
///   no remainder term is divisible by any available reducer's leading term.
struct ReductionTrace {
    Polynomial target;
    Polynomial remainder;
    std::vector<ReductionStep> steps;
    std::vector<int> reducers_used; // sorted, unique
    std::vector<int> available;     // reducer indices the run was performed against

    bool reduces_to_zero() const { return remainder.is_zero(); }
};

/// lcm(lt f, lt g) / lt f
Term sigma(const Polynomial& f, const Polynomial& g, const Ordering& ord);

/// lc(g)*sigma(f,g)*f - lc(f)*sigma(g,f)*g, not rescaled.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ordering& ord);

/// Deterministic division: repeatedly cancel the leading term of the partial
/// remainder by the lowest-index divisor; terms divisible by no leading term
/// move to the remainder. Reduces to zero iff the remainder is zero.
ReductionTrace reduce(const Polynomial& p, std::span<const Polynomial> basis, const Ordering& ord);

/// Same, against the sub-basis basis[subset[0]], basis[subset[1]], ...;
/// the trace reports original indices.
ReductionTrace reduce_subset(const Polynomial& p, std::span<const Polynomial> basis,
                             std::span<const int> subset, const Ordering& ord);

} // namespace gbd

#endif
