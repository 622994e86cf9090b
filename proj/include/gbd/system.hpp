#ifndef GBD_SYSTEM_HPP
#define GBD_SYSTEM_HPP

#include <string>
#include <vector>

#include "gbd/coeff.hpp"
#include "gbd/ordering.hpp"
#include "gbd/polynomial.hpp"
#include "gbd/term.hpp"

namespace gbd {

/// A parsed input: ring declaration, coefficient field, term ordering and a
/// nonempty list of nonzero polynomials.
struct SystemFile {
    RingContext ring;
    FieldSpec field;
    Ordering order;
    std::vector<Polynomial> polys;
    std::vector<std::string> labels; // defaults g1..gm

    std::size_t size() const { return polys.size(); }
    std::vector<Term> leading_terms() const;

    bool operator==(const SystemFile&) const = default;
};

/// Throws InvalidArgument unless all invariants hold (nonzero polynomials,
/// consistent variable counts, valid ordering, labels matching polys).
void validate_system(const SystemFile& sys);

} // namespace gbd

#endif
