#ifndef GBD_CRITERIA_HPP
#define GBD_CRITERIA_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gbd/term.hpp"

namespace gbd {

/// Buchberger's gcd criterion: gcd(a, b) = 1.
bool gcd_criterion(const Term& a, const Term& b);

/// Buchberger's lcm criterion on (a, b, c): b | lcm(a, c).
bool lcm_criterion(const Term& a, const Term& b, const Term& c);

/// Extended criterion on an ordered list of terms:
///   EDiv: gcd(t_1, t_m) divides every t_k, and
///   EVar: per variable of gcd(t_1, t_m), the degree sequence is monotonic.
/// A list passes iff its reversal does.
struct EcResult {
    enum class Fail { none, div, var };
    Fail fail = Fail::none;
    std::size_t index = 0; // failing term (div, 0-based) or variable (var)

    bool pass() const { return fail == Fail::none; }
};

EcResult extended_criterion(std::span<const Term> ts);

/// First permutation (lexicographic index order) whose image passes the
/// extended criterion, if any; exhaustive, so |ts| is capped.
std::optional<std::vector<std::size_t>> ec_permutation(std::span<const Term> ts,
                                                       std::size_t cap = 8);

/// Shortest path i -> j (0-based) through vertices whose leading terms divide
/// lcm(lts[i], lts[j]) using only confirmed pair edges; at least one
/// intermediate vertex. Deterministic: BFS, ascending neighbors.
std::optional<std::vector<int>> find_b2_chain(int i, int j, std::span<const Term> lts,
                                              const std::set<std::pair<int, int>>& confirmed);

} // namespace gbd

#endif
