#ifndef GBD_THEORY_HPP
#define GBD_THEORY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbd/reduce.hpp"
#include "gbd/system.hpp"

namespace gbd {

/// p = sum h_nu * g_nu with every nonzero lt(h_nu * g_nu) below `bound`,
/// and bound strictly below the pair's lcm (an S-representation).
struct SRepresentation {
    std::vector<Polynomial> h;
    std::optional<Term> bound; // empty when all h are zero
    bool all_zero = false;
};

/// Aggregate a zero-remainder trace of S(g_i, g_j) into an S-representation;
/// verifies the identity and the bound by exact arithmetic.
SRepresentation srep_from_trace(const ReductionTrace& trace, int i, int j,
                                std::span<const Polynomial> basis, const Ordering& ord);

/// Z_{i,j} = -lc(g_j) sigma_{gi,gj} + h_i and Z_{j,i} = lc(g_i) sigma_{gj,gi} + h_j,
/// for i < j; checks lt(Z_{i,j}) = sigma_{gi,gj} and lt(Z_{j,i}) = sigma_{gj,gi}.
std::pair<Polynomial, Polynomial> build_z(int i, int j, const SRepresentation& srep,
                                          std::span<const Polynomial> basis, const Ordering& ord);

struct ChainMatrixCheck {
    int k = 0;
    bool pass = false;
    Term expected; // sigma_{2,1} sigma_{3,2} ... sigma_{k+1,k}
    Term actual;   // lt(det A_k)
};

/// Assemble the k x k matrix of Z entries and S-representation coefficients
/// from the consecutive pairs (1,2)...(k,k+1), take its determinant by
/// cofactor expansion, and compare the leading term with the sigma product.
/// Requires the consecutive S-polynomials to reduce to zero and k <= 4.
ChainMatrixCheck check_chain_matrix(const SystemFile& sys, int k);

/// Constructed-factor checks on the subrange g_i..g_j (1-based, inclusive):
/// the supplied p must divide each member exactly, the subrange leading
/// terms must pass the extended criterion, and consecutive S-polynomials
/// must reduce to zero over the subrange (else PreconditionError).
struct FactorEntry {
    int i = 0, j = 0;
    Polynomial p;
};

struct FactorCheck {
    FactorEntry entry;
    bool gcd_commutes = false;    // gcd(lt g_i, lt g_j) == lt(p)
    bool cofactor_coprime = false; // gcd(lt g_i / lt p, lt g_j / lt p) == 1
    bool lt_gcd_divides = false;   // the easy direction: lt(p) | gcd(lt g_i, lt g_j)
    Term lt_gcd;
    Term lt_p;
};

FactorCheck check_factor_entry(const SystemFile& sys, const FactorEntry& entry);

/// Whole-system forms of the two constructed-factor checks: the known common
/// factor p spans g_1..g_m. Same preconditions as check_factor_entry; each
/// throws CheckFailure when its asserted identity fails.
FactorCheck check_gcd_commutes(const SystemFile& sys, const Polynomial& p);
FactorCheck check_cofactor_coprime(const SystemFile& sys, const Polynomial& p);

/// Sidecar format: `factor <i> <j> <poly-expr>` lines, `#` comments.
std::vector<FactorEntry> parse_factors(std::string_view text, const SystemFile& sys);

struct TheoryReport {
    std::vector<FactorCheck> factors;
    std::vector<ChainMatrixCheck> chain;
    bool pass = false;
};

/// Run every factor-entry check plus chain-matrix checks for k = 1..min(m-1, 4).
TheoryReport run_theory_checks(const SystemFile& sys, const std::vector<FactorEntry>& factors);

/// Quotient g / p when the division is exact, std::nullopt otherwise.
std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& p,
                                         const Ordering& ord);

} // namespace gbd

#endif
