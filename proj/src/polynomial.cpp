#include "gbd/polynomial.hpp"

#include <algorithm>

#include "gbd/errors.hpp"

namespace gbd {

Polynomial Polynomial::monomial(Coeff c, Term t) {
    Polynomial p;
    p.add_term(c, t);
    return p;
}

std::size_t Polynomial::vars() const {
    return terms_.empty() ? 0 : terms_.begin()->first.vars();
}

void Polynomial::add_term(const Coeff& c, const Term& t) {
    if (c.is_zero())
        return;
    if (!terms_.empty() && t.vars() != vars())
        throw ContextMismatch("term does not match polynomial's ring");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

const Term& Polynomial::leading_term(const Ordering& ord) const {
    return *leading(ord).first;
}

const Coeff& Polynomial::leading_coeff(const Ordering& ord) const {
    return *leading(ord).second;
}

std::pair<const Term*, const Coeff*> Polynomial::leading(const Ordering& ord) const {
    if (terms_.empty())
        throw InvalidArgument("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first))
            best = it;
    return {&best->first, &best->second};
}

std::vector<std::pair<Term, Coeff>> Polynomial::ordered_terms(const Ordering& ord) const {
    std::vector<std::pair<Term, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return ord.greater(x.first, y.first); });
    return out;
}

Polynomial Polynomial::scaled(const Coeff& c, const Term& t) const {
    Polynomial r;
    if (c.is_zero())
        return r;
    for (const auto& [term, coeff] : terms_)
        r.add_term(coeff * c, term * t);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [term, coeff] : terms_)
        r.terms_.emplace(term, -coeff);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [term, coeff] : b.terms_)
        r.add_term(coeff, term);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_)
            r.add_term(ca * cb, ta * tb);
    return r;
}

std::string Polynomial::to_string(const RingContext& ctx, const Ordering& ord) const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [term, coeff] : ordered_terms(ord)) {
        bool neg = coeff.negative();
        if (out.empty()) {
            if (neg)
                out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = coeff.magnitude_string();
        if (term.is_identity()) {
            out += mag;
        } else {
            if (mag != "1")
                out += mag; // coefficient concatenates onto the first variable
            out += term.to_string(ctx);
        }
    }
    return out;
}

} // namespace gbd
