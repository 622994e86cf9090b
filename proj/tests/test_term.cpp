#include "doctest.h"

#include "gbd/errors.hpp"
#include "gbd/term.hpp"
#include "support.hpp"

using namespace gbd;

TEST_CASE("term product adds exponents") {
    // x0x1 * x0 = x0^2 x1, t * 1 = t, x0x1 * x0^2 x2 = x0^3 x1 x2
    Term a{1, 1, 0, 0, 0};
    Term b{1, 0, 0, 0, 0};
    CHECK(a * b == Term{2, 1, 0, 0, 0});
    CHECK(a * Term::identity(5) == a);
    CHECK(a * Term{2, 0, 1, 0, 0} == Term{3, 1, 1, 0, 0});
}

TEST_CASE("term gcd, lcm, divisibility, division") {
    // gcd(x0x1, x0^3 x4) = x0
    CHECK(gcd(Term{1, 1, 0, 0, 0}, Term{3, 0, 0, 0, 1}) == Term{1, 0, 0, 0, 0});
    // lcm(x^2 y, x y^2) = x^2 y^2
    CHECK(lcm(Term{2, 1}, Term{1, 2}) == Term{2, 2});
    // x0^2 does not divide x0 x1
    CHECK_FALSE(divides(Term{2, 0}, Term{1, 1}));
    CHECK(divides(Term{1, 0}, Term{1, 1}));
    CHECK(Term{3, 1} / Term{1, 1} == Term{2, 0});
    CHECK_THROWS_AS((void)(Term{1, 2} / Term{2, 0}), InvalidArgument);
}

TEST_CASE("term context mismatch is a hard error") {
    CHECK_THROWS_AS((void)(Term{1, 0} * Term{1, 0, 0}), ContextMismatch);
    CHECK_THROWS_AS((void)gcd(Term{1}, Term{1, 1}), ContextMismatch);
}

TEST_CASE("exponent overflow detected, not wrapped") {
    Term big(1);
    big.set(0, 0xffffffffu);
    Term one{1u};
    CHECK_THROWS_AS(big * one, OverflowError);
    CHECK_NOTHROW(lcm(big, one));
}

TEST_CASE("gcd * lcm == product, on random term pairs") {
    test::Rng rng(7);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
        Term a = test::rand_term(rng, n, 6);
        Term b = test::rand_term(rng, n, 6);
        CHECK(gcd(a, b) * lcm(a, b) == a * b);
        CHECK(divides(gcd(a, b), a));
        CHECK(divides(a, lcm(a, b)));
    }
}

TEST_CASE("term rendering") {
    RingContext ctx({"x0", "x1", "x2", "x3", "x4"});
    CHECK(Term{3, 0, 0, 0, 1}.to_string(ctx) == "x0^3*x4");
    CHECK(Term::identity(5).to_string(ctx) == "1");
}

TEST_CASE("ring context validation") {
    CHECK_THROWS_AS(RingContext({}), InvalidArgument);
    CHECK_THROWS_AS(RingContext({"x", "x"}), InvalidArgument);
    RingContext ctx({"x", "y"});
    CHECK(ctx.index_of("y") == 1);
    CHECK_FALSE(ctx.index_of("z").has_value());
}
