#include "gbd/theory.hpp"

#include <algorithm>
#include <sstream>

#include "gbd/criteria.hpp"
#include "gbd/errors.hpp"
#include "gbd/parser.hpp"

namespace gbd {

SRepresentation srep_from_trace(const ReductionTrace& trace, int i, int j,
                                std::span<const Polynomial> basis, const Ordering& ord) {
    if (!trace.reduces_to_zero())
        throw InvalidArgument("S-representation needs a zero-remainder trace");

    SRepresentation rep;
    rep.h.assign(basis.size(), Polynomial{});
    for (const auto& step : trace.steps)
        rep.h[step.reducer].add_term(step.coeff, step.term);

    Polynomial sum;
    for (std::size_t nu = 0; nu < basis.size(); ++nu)
        if (!rep.h[nu].is_zero())
            sum = sum + rep.h[nu] * basis[nu];
    if (sum != trace.target)
        throw CheckFailure("trace does not aggregate to a representation of its target");

    for (std::size_t nu = 0; nu < basis.size(); ++nu) {
        if (rep.h[nu].is_zero())
            continue;
        Term t = rep.h[nu].leading_term(ord) * basis[nu].leading_term(ord);
        if (!rep.bound || ord.less(*rep.bound, t))
            rep.bound = t;
    }
    rep.all_zero = !rep.bound.has_value();

    if (rep.bound) {
        Term big = lcm(basis[i].leading_term(ord), basis[j].leading_term(ord));
        if (!ord.less(*rep.bound, big))
            throw CheckFailure("representation bound is not below the pair's lcm");
    }
    return rep;
}

std::pair<Polynomial, Polynomial> build_z(int i, int j, const SRepresentation& srep,
                                          std::span<const Polynomial> basis, const Ordering& ord) {
    if (i >= j)
        throw InvalidArgument("build_z expects i < j");
    const Polynomial& gi = basis[i];
    const Polynomial& gj = basis[j];
    Term sigma_ij = sigma(gi, gj, ord);
    Term sigma_ji = sigma(gj, gi, ord);

    Polynomial z_ij = Polynomial::monomial(-gj.leading_coeff(ord), sigma_ij) + srep.h[i];
    Polynomial z_ji = Polynomial::monomial(gi.leading_coeff(ord), sigma_ji) + srep.h[j];

    if (z_ij.is_zero() || z_ij.leading_term(ord) != sigma_ij)
        throw CheckFailure("lt(Z_ij) differs from sigma_ij");
    if (z_ji.is_zero() || z_ji.leading_term(ord) != sigma_ji)
        throw CheckFailure("lt(Z_ji) differs from sigma_ji");
    return {std::move(z_ij), std::move(z_ji)};
}

namespace {

Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    // cofactor expansion along the first row
    Polynomial det;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(a[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = a[0][c] * matrix_determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

ChainMatrixCheck check_chain_matrix(const SystemFile& sys, int k) {
    validate_system(sys);
    const int m = static_cast<int>(sys.size());
    if (k < 1 || k > m - 1)
        throw InvalidArgument("chain matrix needs 1 <= k <= m-1");
    if (k > 4)
        throw InvalidArgument("chain matrix capped at k = 4 (cofactor-expansion cost)");

    std::vector<std::pair<Polynomial, Polynomial>> zs; // (Z_{l,l+1}, Z_{l+1,l})
    std::vector<SRepresentation> reps;
    for (int l = 0; l < k; ++l) {
        Polynomial s = s_polynomial(sys.polys[l], sys.polys[l + 1], sys.order);
        ReductionTrace trace = reduce(s, sys.polys, sys.order);
        if (!trace.reduces_to_zero())
            throw PreconditionError("S(g" + std::to_string(l + 1) + ",g" + std::to_string(l + 2) +
                                    ") does not reduce to zero");
        reps.push_back(srep_from_trace(trace, l, l + 1, sys.polys, sys.order));
        zs.push_back(build_z(l, l + 1, reps.back(), sys.polys, sys.order));
    }

    // Row r holds the coefficients of g_{c+2} (1-based g_2..g_{k+1}) in the
    // relation Z_{r,r+1} g_r + Z_{r+1,r} g_{r+1} + sum h_nu g_nu = 0.
    std::vector<std::vector<Polynomial>> a(k, std::vector<Polynomial>(k));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            int poly_index = c + 1;
            if (poly_index == r)
                a[r][c] = zs[r].first;
            else if (poly_index == r + 1)
                a[r][c] = zs[r].second;
            else
                a[r][c] = reps[r].h[poly_index];
        }
    }

    ChainMatrixCheck check;
    check.k = k;
    Term expected = Term::identity(sys.ring.size());
    for (int l = 0; l < k; ++l)
        expected = expected * sigma(sys.polys[l + 1], sys.polys[l], sys.order);
    check.expected = expected;

    Polynomial det = matrix_determinant(a);
    if (det.is_zero()) {
        check.pass = false;
        return check;
    }
    check.actual = det.leading_term(sys.order);
    check.pass = (check.actual == check.expected);
    return check;
}

std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& p,
                                         const Ordering& ord) {
    if (p.is_zero())
        throw InvalidArgument("division by the zero polynomial");
    std::vector<Polynomial> basis{p};
    ReductionTrace trace = reduce(g, basis, ord);
    if (!trace.reduces_to_zero())
        return std::nullopt;
    Polynomial q;
    for (const auto& step : trace.steps)
        q.add_term(step.coeff, step.term);
    return q;
}

FactorCheck check_factor_entry(const SystemFile& sys, const FactorEntry& entry) {
    validate_system(sys);
    const int m = static_cast<int>(sys.size());
    if (entry.i < 1 || entry.j <= entry.i || entry.j > m)
        throw InvalidArgument("factor entry indices out of range");
    if (entry.p.is_zero())
        throw InvalidArgument("factor polynomial is zero");

    std::vector<Polynomial> sub(sys.polys.begin() + (entry.i - 1), sys.polys.begin() + entry.j);

    for (std::size_t r = 0; r < sub.size(); ++r)
        if (!exact_quotient(sub[r], entry.p, sys.order))
            throw PreconditionError("factor does not divide g" +
                                    std::to_string(entry.i + static_cast<int>(r)));

    std::vector<Term> lts;
    for (const auto& g : sub)
        lts.push_back(g.leading_term(sys.order));
    if (!extended_criterion(lts).pass())
        throw PreconditionError("subrange leading terms fail the extended criterion");

    for (std::size_t r = 0; r + 1 < sub.size(); ++r) {
        Polynomial s = s_polynomial(sub[r], sub[r + 1], sys.order);
        if (!reduce(s, sub, sys.order).reduces_to_zero())
            throw PreconditionError("S(g" + std::to_string(entry.i + static_cast<int>(r)) + ",g" +
                                    std::to_string(entry.i + static_cast<int>(r) + 1) +
                                    ") does not reduce to zero over the subrange");
    }

    FactorCheck check;
    check.entry = entry;
    check.lt_p = entry.p.leading_term(sys.order);
    check.lt_gcd = gcd(lts.front(), lts.back());
    check.gcd_commutes = (check.lt_gcd == check.lt_p);
    check.lt_gcd_divides = divides(check.lt_p, check.lt_gcd);
    if (divides(check.lt_p, lts.front()) && divides(check.lt_p, lts.back()))
        check.cofactor_coprime = gcd_criterion(lts.front() / check.lt_p, lts.back() / check.lt_p);
    return check;
}

FactorCheck check_gcd_commutes(const SystemFile& sys, const Polynomial& p) {
    auto c = check_factor_entry(sys, FactorEntry{1, static_cast<int>(sys.size()), p});
    if (!c.gcd_commutes)
        throw CheckFailure("gcd of the endpoint leading terms is not lt(p): gcd = " +
                           c.lt_gcd.to_string(sys.ring) + ", lt(p) = " +
                           c.lt_p.to_string(sys.ring));
    return c;
}

FactorCheck check_cofactor_coprime(const SystemFile& sys, const Polynomial& p) {
    auto c = check_factor_entry(sys, FactorEntry{1, static_cast<int>(sys.size()), p});
    if (!c.cofactor_coprime)
        throw CheckFailure("cofactor leading terms share a variable");
    return c;
}

std::vector<FactorEntry> parse_factors(std::string_view text, const SystemFile& sys) {
    std::vector<FactorEntry> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword))
            continue;
        if (keyword != "factor")
            throw ParseError("expected 'factor <i> <j> <poly>'", number, 1);
        int i = 0, j = 0;
        if (!(ls >> i >> j))
            throw ParseError("factor entry needs two indices", number, 1);
        std::string expr;
        std::getline(ls, expr);
        FactorEntry entry;
        entry.i = i;
        entry.j = j;
        try {
            entry.p = parse_poly_expr(expr, sys.ring, sys.field);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in factor entry: ") + e.what(), number, 1);
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

TheoryReport run_theory_checks(const SystemFile& sys, const std::vector<FactorEntry>& factors) {
    TheoryReport report;
    report.pass = true;
    for (const auto& entry : factors) {
        report.factors.push_back(check_factor_entry(sys, entry));
        const auto& c = report.factors.back();
        if (!c.gcd_commutes || !c.cofactor_coprime || !c.lt_gcd_divides)
            report.pass = false;
    }
    const int m = static_cast<int>(sys.size());
    for (int k = 1; k <= std::min(m - 1, 4); ++k) {
        report.chain.push_back(check_chain_matrix(sys, k));
        if (!report.chain.back().pass)
            report.pass = false;
    }
    return report;
}

} // namespace gbd
