#ifndef GBD_PHAM_HPP
#define GBD_PHAM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbd/decide.hpp"
#include "gbd/system.hpp"

namespace gbd {

/// Leading terms split as t_i = c_i * d with the c_i pairwise coprime and
/// each coprime to the common factor d.
struct PhamFactorization {
    Term d;
    std::vector<Term> cofactors;

    bool operator==(const PhamFactorization&) const = default;
};

/// Pham: all leading terms pairwise coprime.
bool detect_pham(std::span<const Term> lts);

/// Pham-like: d = gcd of all leading terms, cofactors t_i/d pairwise coprime
/// and coprime to d. Pham systems qualify with d = 1.
std::optional<PhamFactorization> detect_pham_like(std::span<const Term> lts);

struct PhamGenParams {
    int m = 2;               // number of polynomials, >= 2
    int extra_vars = 1;      // shared tail variables
    std::uint64_t seed = 0;
    bool make_gb = true;     // false: perturb one tail so S(g1,g2) cannot reduce
    bool trivial_p = false;  // common factor 1 (a plain Pham system)
};

struct GeneratedPham {
    SystemFile system;
    Polynomial common_factor; // the drawn p (1 when trivial_p)
    std::vector<Polynomial> cofactor_polys;
    PhamFactorization factorization;
};

/// Deterministic per seed. make_gb instances are Groebner bases by
/// construction (pairwise-coprime cofactor heads sharing one multiplier);
/// non-GB instances stay Pham-like (tail-only perturbation) and always fail.
GeneratedPham generate_pham_like(const PhamGenParams& params);

/// Fast verification path for Pham-like systems: reduces only the m-1
/// consecutive S-polynomials. Throws PreconditionError if the system's
/// leading terms are not Pham-like.
DecisionReport decide_pham_like(const SystemFile& sys, const DecideOptions& opt = {});

} // namespace gbd

#endif
