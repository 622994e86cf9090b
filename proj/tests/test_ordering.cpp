#include "doctest.h"

#include "gbd/errors.hpp"
#include "gbd/ordering.hpp"
#include "support.hpp"

using namespace gbd;

TEST_CASE("lex compares highest-priority variable first") {
    Ordering lex(OrderKind::lex, 5);
    // x0x1 < x0^2 x2 because the x0 exponents decide
    CHECK(lex.less(Term{1, 1, 0, 0, 0}, Term{2, 0, 1, 0, 0}));
    CHECK(lex.compare(Term{1, 1, 0, 0, 0}, Term{1, 1, 0, 0, 0}) == std::strong_ordering::equal);
}

TEST_CASE("graded lex: degree first, lex tiebreak") {
    Ordering grlex(OrderKind::grlex, 3);
    // deg(x0^3) = deg(x0 x1 x2) = 3, lex tiebreak on x0
    CHECK(grlex.greater(Term{3, 0, 0}, Term{1, 1, 1}));
    CHECK(grlex.less(Term{1, 0, 0}, Term{1, 1, 1}));
}

TEST_CASE("graded reverse lex") {
    Ordering grevlex(OrderKind::grevlex, 2);
    // x^2 y > x y^2: equal degree, smaller exponent in the last variable wins
    CHECK(grevlex.greater(Term{2, 1}, Term{1, 2}));
    Ordering g3(OrderKind::grevlex, 3);
    // classic: x y z > x^2 z? deg 3 vs 3 ... compare z: 1 vs 1, y: 1 vs 0 -> first smaller y wins? no:
    // scan from last: z equal, y: 1 vs 0 differ, smaller is the second -> second is greater? smaller wins:
    // a=(1,1,1), b=(2,0,1): y: 1 vs 0, b smaller -> b greater.
    CHECK(g3.greater(Term{2, 0, 1}, Term{1, 1, 1}));
}

TEST_CASE("custom variable priority") {
    // priority y > x
    Ordering lex(OrderKind::lex, std::vector<std::uint32_t>{1, 0});
    CHECK(lex.greater(Term{0, 1}, Term{3, 0})); // y > x^3 under lex(y,x)
    CHECK_THROWS_AS(Ordering(OrderKind::lex, std::vector<std::uint32_t>{0, 0}), InvalidArgument);
    CHECK_THROWS_AS(Ordering(OrderKind::lex, std::vector<std::uint32_t>{1, 2}), InvalidArgument);
}

TEST_CASE("admissibility properties on random terms") {
    test::Rng rng(11);
    for (int kind = 0; kind < 3; ++kind) {
        for (int it = 0; it < 200; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
            Ordering ord(static_cast<OrderKind>(kind), n);
            Term a = test::rand_term(rng, n, 5);
            Term b = test::rand_term(rng, n, 5);
            Term c = test::rand_term(rng, n, 5);
            Term s = test::rand_term(rng, n, 5);

            // trichotomy
            int rel = (ord.less(a, b) ? 1 : 0) + (ord.greater(a, b) ? 1 : 0) +
                      (ord.compare(a, b) == std::strong_ordering::equal ? 1 : 0);
            CHECK(rel == 1);
            CHECK((ord.compare(a, b) == std::strong_ordering::equal) == (a == b));

            // transitivity
            if (!ord.greater(a, b) && !ord.greater(b, c))
                CHECK_FALSE(ord.greater(a, c));

            // multiplicativity
            if (ord.less(a, b))
                CHECK(ord.less(a * s, b * s));

            // identity term minimal
            if (!a.is_identity())
                CHECK(ord.greater(a, Term::identity(n)));
        }
    }
}
