#include "gbd/pham.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <numeric>
#include <random>

#include "gbd/criteria.hpp"
#include "gbd/errors.hpp"
#include "gbd/reduce.hpp"

namespace gbd {

bool detect_pham(std::span<const Term> lts) {
    if (lts.empty())
        throw InvalidArgument("empty leading term list");
    for (std::size_t i = 0; i < lts.size(); ++i)
        for (std::size_t j = i + 1; j < lts.size(); ++j)
            if (!gcd_criterion(lts[i], lts[j]))
                return false;
    return true;
}

std::optional<PhamFactorization> detect_pham_like(std::span<const Term> lts) {
    if (lts.empty())
        throw InvalidArgument("empty leading term list");
    Term d = lts.front();
    for (std::size_t i = 1; i < lts.size(); ++i)
        d = gcd(d, lts[i]);

    PhamFactorization f;
    f.d = d;
    f.cofactors.reserve(lts.size());
    for (const auto& t : lts)
        f.cofactors.push_back(t / d);

    for (std::size_t i = 0; i < f.cofactors.size(); ++i) {
        if (!gcd_criterion(f.cofactors[i], d))
            return std::nullopt;
        for (std::size_t j = i + 1; j < f.cofactors.size(); ++j)
            if (!gcd_criterion(f.cofactors[i], f.cofactors[j]))
                return std::nullopt;
    }
    return f;
}

namespace {

// Platform-independent draw in [lo, hi].
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

// Nonzero integer coefficient in [-9, 9].
Coeff draw_coeff(std::mt19937_64& rng) {
    long v = static_cast<long>(draw(rng, 1, 9));
    if (draw(rng, 0, 1))
        v = -v;
    return Coeff::rational(v, 1);
}

// A term of total degree <= max_deg over the extra variables only.
Term draw_tail_term(std::mt19937_64& rng, std::size_t nvars, int first_extra, int extra_vars,
                    std::uint32_t max_deg) {
    Term t = Term::identity(nvars);
    if (extra_vars == 0 || max_deg == 0)
        return t;
    std::uint32_t budget = static_cast<std::uint32_t>(draw(rng, 0, max_deg));
    for (std::uint32_t step = 0; step < budget; ++step) {
        int v = first_extra + static_cast<int>(draw(rng, 0, extra_vars - 1));
        t.set(v, t.deg(v) + 1);
    }
    return t;
}

} // namespace

GeneratedPham generate_pham_like(const PhamGenParams& params) {
    if (params.m < 2)
        throw InvalidArgument("Pham-like generation needs m >= 2");
    if (params.extra_vars < 0)
        throw InvalidArgument("extra_vars must be nonnegative");

    std::mt19937_64 rng(params.seed * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL);
    const int m = params.m;
    const int extra = params.extra_vars;

    // Variables: one private head variable per polynomial, one variable
    // carrying the common factor's head, then the shared tail variables.
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back("x" + std::to_string(i + 1));
    names.push_back("y");
    for (int i = 0; i < extra; ++i)
        names.push_back("z" + std::to_string(i + 1));
    RingContext ring(names);
    const std::size_t nvars = ring.size();
    const int yvar = m;
    const int first_extra = m + 1;
    const FieldSpec field = FieldSpec::rationals();
    Ordering order(OrderKind::grevlex, nvars);

    if (!params.make_gb && params.trivial_p)
        throw InvalidArgument("a non-GB instance needs a nontrivial common factor");

    // Common factor p: leading term y^e plus a strictly smaller tail. Non-GB
    // instances use pure monomials so the failing remainder is certain.
    Polynomial p;
    std::uint32_t e = static_cast<std::uint32_t>(draw(rng, 1, 2));
    if (params.trivial_p) {
        p.add_term(Coeff::rational(1, 1), Term::identity(nvars));
    } else {
        p.add_term(Coeff::rational(1, 1), Term(nvars).set(yvar, e));
        if (params.make_gb) {
            int tail_terms = static_cast<int>(draw(rng, 1, 2));
            for (int t = 0; t < tail_terms; ++t)
                p.add_term(draw_coeff(rng), draw_tail_term(rng, nvars, first_extra, extra, e - 1));
        }
    }

    // Cofactor polynomials f_i: private head x_i^{d_i} plus tails below d_i.
    std::vector<Polynomial> fs;
    for (int i = 0; i < m; ++i) {
        Polynomial f;
        std::uint32_t deg = static_cast<std::uint32_t>(draw(rng, 1, 3));
        f.add_term(draw_coeff(rng), Term(nvars).set(i, deg));
        if (params.make_gb) {
            int tail_terms = static_cast<int>(draw(rng, 0, 2));
            for (int t = 0; t < tail_terms; ++t)
                f.add_term(draw_coeff(rng),
                           draw_tail_term(rng, nvars, first_extra, extra, deg - 1));
        }
        fs.push_back(std::move(f));
    }

    SystemFile sys{ring, field, order, {}, {}};
    for (int i = 0; i < m; ++i) {
        sys.polys.push_back(fs[i] * p);
        sys.labels.push_back("g" + std::to_string(i + 1));
    }

    if (!params.make_gb) {
        // Tail-only perturbation in the pattern of (x*y + y, x*z): add the
        // head cofactor of g1 without the common factor. S(g1, gj) is then a
        // nonzero multiple of c1*cj, which no leading term c_k*d divides.
        const Term& c1 = fs[0].leading_term(order);
        Coeff b = draw_coeff(rng);
        sys.polys[0].add_term(b, c1);
    }

    auto fact = detect_pham_like(sys.leading_terms());
    if (!fact)
        throw Error("generated system is not Pham-like"); // unreachable by construction
    return GeneratedPham{std::move(sys), std::move(p), std::move(fs), std::move(*fact)};
}

DecisionReport decide_pham_like(const SystemFile& sys, const DecideOptions& opt) {
    validate_system(sys);
    auto start = std::chrono::steady_clock::now();
    const auto lts = sys.leading_terms();
    auto fact = detect_pham_like(lts);
    if (!fact)
        throw PreconditionError("system's leading terms are not Pham-like");

    const int m = static_cast<int>(sys.size());
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);

    DecisionReport report;
    report.mode = Mode::pham_like;
    report.pham_d = fact->d;
    report.pham_cofactors = fact->cofactors;

    auto reduce_start = std::chrono::steady_clock::now();
    std::vector<ReductionTrace> traces(std::max(0, m - 1));
    auto run_one = [&](int k) {
        traces[k] =
            reduce(s_polynomial(sys.polys[k], sys.polys[k + 1], sys.order), sys.polys, sys.order);
    };
    if (opt.threads > 1 && m > 2) {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int k = next.fetch_add(1);
                if (k >= m - 1)
                    return;
                run_one(k);
            }
        };
        std::vector<std::future<void>> futs;
        for (int t = 1; t < opt.threads; ++t)
            futs.push_back(std::async(std::launch::async, worker));
        worker();
        for (auto& f : futs)
            f.get();
    } else {
        for (int k = 0; k + 1 < m; ++k)
            run_one(k);
    }
    report.reduce_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                 reduce_start)
                           .count();

    for (int k = 0; k + 1 < m; ++k) {
        if (traces[k].reduces_to_zero()) {
            PairDisposition disp;
            disp.i = k + 1;
            disp.j = k + 2;
            disp.rule = Rule::B0;
            disp.trace = traces[k];
            report.dispositions.push_back(std::move(disp));
        } else {
            report.failures.push_back({k + 1, k + 2, traces[k]});
        }
    }
    report.is_groebner = report.failures.empty();
    report.reductions = m - 1;
    report.division_runs = m - 1;

    // All consecutive S-polynomials reduce to zero, so every remaining pair
    // is settled by the Pham-like argument; no further reductions needed.
    if (report.is_groebner) {
        for (int dist = 2; dist < m; ++dist) {
            for (int i = 0; i + dist < m; ++i) {
                PairDisposition disp;
                disp.i = i + 1;
                disp.j = i + dist + 1;
                disp.rule = Rule::PHAM;
                report.dispositions.push_back(std::move(disp));
            }
        }
    }
    for (const auto& d : report.dispositions)
        ++report.by_rule[static_cast<std::size_t>(d.rule)];
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

} // namespace gbd
