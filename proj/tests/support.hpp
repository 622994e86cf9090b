#ifndef GBD_TESTS_SUPPORT_HPP
#define GBD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "gbd/parser.hpp"
#include "gbd/reduce.hpp"
#include "gbd/system.hpp"

namespace gbd::test {

inline std::string data_file(const std::string& name) {
    std::ifstream in(std::string(GBD_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline SystemFile load_system(const std::string& name) {
    return parse_system(data_file(name));
}

inline Polynomial poly(const std::string& expr, const RingContext& ring,
                       const FieldSpec& field = FieldSpec::rationals()) {
    return parse_poly_expr(expr, ring, field);
}

/// Deterministic platform-independent draws.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed * 0x2545f4914f6cdd1dULL + 1) {}

    std::uint64_t below(std::uint64_t n) { return eng() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
};

inline Term rand_term(Rng& rng, std::size_t nvars, int max_total_deg) {
    Term t = Term::identity(nvars);
    int budget = rng.range(0, max_total_deg);
    for (int b = 0; b < budget; ++b) {
        auto v = static_cast<std::size_t>(rng.below(nvars));
        t.set(v, t.deg(v) + 1);
    }
    return t;
}

inline Polynomial rand_poly(Rng& rng, std::size_t nvars, int max_terms = 4,
                            int max_total_deg = 3) {
    for (;;) {
        Polynomial p;
        int terms = rng.range(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            long c = rng.range(1, 9);
            if (rng.range(0, 1))
                c = -c;
            p.add_term(Coeff::rational(c, 1), rand_term(rng, nvars, max_total_deg));
        }
        if (!p.is_zero())
            return p;
    }
}

inline Ordering rand_ordering(Rng& rng, std::size_t nvars) {
    OrderKind kind = static_cast<OrderKind>(rng.range(0, 2));
    return Ordering(kind, nvars);
}

/// Random small system per the property-test regime: <= 3 variables,
/// <= 4 polynomials, total degree <= 3, coefficients in -9..9 minus 0.
inline SystemFile rand_system(std::uint64_t seed) {
    Rng rng(seed);
    std::size_t nvars = static_cast<std::size_t>(rng.range(1, 3));
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nvars);
    RingContext ring(names);
    SystemFile sys{ring, FieldSpec::rationals(), rand_ordering(rng, nvars), {}, {}};
    int m = rng.range(2, 4);
    for (int i = 0; i < m; ++i) {
        sys.polys.push_back(rand_poly(rng, nvars));
        sys.labels.push_back("g" + std::to_string(i + 1));
    }
    return sys;
}

/// Independent replay of a reduction trace; checks the trace identity, the
/// step-cancels-leading-term rule, strict descent of the processed heads,
/// and remainder purity. Returns the number of verified steps.
inline std::size_t verify_trace(const ReductionTrace& trace,
                                const std::vector<Polynomial>& basis, const Ordering& ord) {
    Polynomial work = trace.target;
    Polynomial remainder_acc;
    std::size_t next_step = 0;
    const Term* prev_head = nullptr;
    Term prev_head_value;

    while (!work.is_zero()) {
        auto [head, coeff] = work.leading(ord);
        if (prev_head) {
            REQUIRE(ord.less(*head, prev_head_value)); // strict descent
        }
        prev_head_value = *head;
        prev_head = &prev_head_value;

        bool stepped = false;
        if (next_step < trace.steps.size()) {
            const auto& step = trace.steps[next_step];
            const Polynomial& g = basis.at(step.reducer);
            if (step.term * g.leading_term(ord) == *head) {
                REQUIRE(step.coeff == *coeff / g.leading_coeff(ord));
                work = work - g.scaled(step.coeff, step.term);
                ++next_step;
                stepped = true;
            }
        }
        if (!stepped) {
            for (int idx : trace.available)
                REQUIRE_FALSE(divides(basis.at(idx).leading_term(ord), *head));
            remainder_acc.add_term(*coeff, *head);
            work.add_term(-*coeff, *head);
        }
    }
    REQUIRE(next_step == trace.steps.size());
    REQUIRE(remainder_acc == trace.remainder);

    // purity, directly on the stored remainder
    for (const auto& [t, c] : trace.remainder.terms())
        for (int idx : trace.available)
            REQUIRE_FALSE(divides(basis.at(idx).leading_term(ord), t));

    // a zero-remainder trace is an S-representation bounded by lt(target)
    if (trace.reduces_to_zero() && !trace.target.is_zero()) {
        const Term& top = trace.target.leading_term(ord);
        for (const auto& step : trace.steps) {
            Term product = step.term * basis.at(step.reducer).leading_term(ord);
            REQUIRE_FALSE(ord.greater(product, top));
        }
    }
    return next_step;
}

} // namespace gbd::test

#endif
