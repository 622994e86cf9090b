#include "doctest.h"

#include "gbd/criteria.hpp"
#include "gbd/errors.hpp"
#include "gbd/pham.hpp"
#include "support.hpp"

using namespace gbd;

TEST_CASE("pham detection") {
    // (x^3, y^2, z^5) pairwise coprime
    CHECK(detect_pham(std::vector<Term>{Term{3, 0, 0}, Term{0, 2, 0}, Term{0, 0, 5}}));
    // (xy, yz) share y
    CHECK_FALSE(detect_pham(std::vector<Term>{Term{1, 1, 0}, Term{0, 1, 1}}));
    CHECK(detect_pham(std::vector<Term>{Term{1, 1, 0}}));
    CHECK_THROWS_AS(detect_pham({}), InvalidArgument);
}

TEST_CASE("pham-like factorization") {
    // (xy, xz): d = x, cofactors (y, z)
    auto f = detect_pham_like(std::vector<Term>{Term{1, 1, 0}, Term{1, 0, 1}});
    REQUIRE(f.has_value());
    CHECK(f->d == Term{1, 0, 0});
    CHECK(f->cofactors == std::vector<Term>{Term{0, 1, 0}, Term{0, 0, 1}});

    // the worked example's leading terms are not pham-like: d = x0 but the
    // cofactor of g4 still contains x0
    auto sys = test::load_system("easy-example.sys");
    CHECK_FALSE(detect_pham_like(sys.leading_terms()).has_value());

    // a pham system is pham-like with d = 1
    auto pham = detect_pham_like(std::vector<Term>{Term{3, 0, 0}, Term{0, 2, 0}, Term{0, 0, 5}});
    REQUIRE(pham.has_value());
    CHECK(pham->d.is_identity());

    // cofactors equal to 1 are allowed: (x, xy) has d = x, cofactors (1, y)
    auto ones = detect_pham_like(std::vector<Term>{Term{1, 0, 0}, Term{1, 1, 0}});
    REQUIRE(ones.has_value());
    CHECK(ones->cofactors[0].is_identity());
}

TEST_CASE("generation is deterministic per seed") {
    PhamGenParams params;
    params.m = 5;
    params.seed = 42;
    auto a = generate_pham_like(params);
    auto b = generate_pham_like(params);
    CHECK(a.system == b.system);
    CHECK(a.common_factor == b.common_factor);
    params.seed = 43;
    CHECK(generate_pham_like(params).system != a.system);
    params.m = 1;
    CHECK_THROWS_AS(generate_pham_like(params), InvalidArgument);
}

TEST_CASE("generated GB instances detect as pham-like and verify") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        PhamGenParams params;
        params.m = 2 + static_cast<int>(seed % 5);
        params.seed = seed;
        auto gen = generate_pham_like(params);
        CAPTURE(serialize_system(gen.system));
        auto fact = detect_pham_like(gen.system.leading_terms());
        REQUIRE(fact.has_value());
        CHECK(fact->d == gen.common_factor.leading_term(gen.system.order));
        CHECK(decide_plain(gen.system).is_groebner);
        CHECK(decide(gen.system, Mode::extended).is_groebner);
    }
}

TEST_CASE("generated non-GB instances stay pham-like and always fail") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        PhamGenParams params;
        params.m = 2 + static_cast<int>(seed % 5);
        params.seed = seed;
        params.make_gb = false;
        auto gen = generate_pham_like(params);
        CHECK(detect_pham_like(gen.system.leading_terms()).has_value());
        CHECK_FALSE(decide_plain(gen.system).is_groebner);
    }
}

TEST_CASE("trivial common factor yields a pham system decided without reductions") {
    PhamGenParams params;
    params.m = 2;
    params.trivial_p = true;
    auto gen = generate_pham_like(params);
    CHECK(detect_pham(gen.system.leading_terms()));
    auto report = decide(gen.system, Mode::extended);
    CHECK(report.is_groebner);
    CHECK(report.reductions == 0);
    CHECK(report.rule_count(Rule::B1) == 1);
}

TEST_CASE("decide_pham_like on the counterexample: one reduction, verdict false") {
    auto sys = test::load_system("pham-not-gb.sys");
    auto report = decide_pham_like(sys);
    CHECK_FALSE(report.is_groebner);
    CHECK(report.reductions == 1);
    CHECK(report.division_runs == 1);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].trace.remainder == test::poly("y*z", sys.ring));
    REQUIRE(report.pham_d.has_value());
    CHECK(*report.pham_d == Term{1, 0, 0});
}

TEST_CASE("decide_pham_like agrees with the oracle at a fraction of the cost") {
    PhamGenParams params;
    params.m = 6;
    params.seed = 7;
    auto gen = generate_pham_like(params);
    auto fast = decide_pham_like(gen.system);
    auto oracle = decide_plain(gen.system);
    CHECK(fast.is_groebner == oracle.is_groebner);
    CHECK(fast.is_groebner);
    CHECK(fast.reductions == 5);
    CHECK(oracle.reductions == 15);
    CHECK(fast.rule_count(Rule::B0) == 5);
    CHECK(fast.rule_count(Rule::PHAM) == 10);
    for (const auto& d : fast.dispositions)
        CHECK(verify_disposition(gen.system, d));

    // non-consecutive dispositions cite the corollary with the factorization
    REQUIRE(fast.pham_d.has_value());
    CHECK(*fast.pham_d == gen.factorization.d);
    CHECK(fast.pham_cofactors == gen.factorization.cofactors);
}

TEST_CASE("decide_pham_like with worker threads matches the sequential report") {
    PhamGenParams params;
    params.m = 7;
    params.seed = 3;
    auto gen = generate_pham_like(params);
    DecideOptions opt;
    opt.threads = 3;
    auto parallel = decide_pham_like(gen.system, opt);
    auto serial = decide_pham_like(gen.system);
    CHECK(parallel.is_groebner == serial.is_groebner);
    CHECK(parallel.reductions == serial.reductions);
    REQUIRE(parallel.dispositions.size() == serial.dispositions.size());
    for (std::size_t k = 0; k < serial.dispositions.size(); ++k)
        CHECK(parallel.dispositions[k].rule == serial.dispositions[k].rule);
}

TEST_CASE("decide_pham_like refuses non-pham-like systems") {
    auto sys = test::load_system("easy-example.sys");
    CHECK_THROWS_AS(decide_pham_like(sys), PreconditionError);
}

TEST_CASE("pham-like leading terms defeat the classic criteria but pass EC") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        PhamGenParams params;
        params.m = 2 + static_cast<int>(seed % 4);
        params.seed = seed;
        auto gen = generate_pham_like(params);
        auto lts = gen.system.leading_terms();
        const int m = static_cast<int>(lts.size());

        // no coprime pair, no lcm-criterion triple (d != 1, all cofactors != 1)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                CHECK_FALSE(gcd_criterion(lts[i], lts[j]));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (i != j && j != k && i != k)
                        CHECK_FALSE(lcm_criterion(lts[i], lts[j], lts[k]));

        // any permutation of the list passes the extended criterion
        test::Rng rng(seed);
        std::vector<Term> image = lts;
        for (int shuffle = 0; shuffle < 8; ++shuffle) {
            for (std::size_t k = image.size(); k > 1; --k)
                std::swap(image[k - 1], image[rng.below(k)]);
            CHECK(extended_criterion(image).pass());
        }
    }
}
