#ifndef GBD_POLYNOMIAL_HPP
#define GBD_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbd/coeff.hpp"
#include "gbd/ordering.hpp"
#include "gbd/term.hpp"

namespace gbd {

/// Sparse multivariate polynomial: finite map Term -> nonzero Coeff.
///
/// Terms are stored under the ordering-agnostic canonical key, so the same
/// value can be queried under any term ordering; the leading term is
/// computed against the ordering supplied at the call site.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial monomial(Coeff c, Term t);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t vars() const; // 0 for the zero polynomial
    const std::map<Term, Coeff>& terms() const { return terms_; }

    void add_term(const Coeff& c, const Term& t); // += c*t, drops zeros

    const Term& leading_term(const Ordering& ord) const;    // p != 0
    const Coeff& leading_coeff(const Ordering& ord) const;  // p != 0
    std::pair<const Term*, const Coeff*> leading(const Ordering& ord) const;

    /// Terms in descending order under `ord` (head first).
    std::vector<std::pair<Term, Coeff>> ordered_terms(const Ordering& ord) const;

    Polynomial scaled(const Coeff& c, const Term& t) const; // c*t*this

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

    std::string to_string(const RingContext& ctx, const Ordering& ord) const;

private:
    std::map<Term, Coeff> terms_;
};

} // namespace gbd

#endif
