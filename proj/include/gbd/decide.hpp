#ifndef GBD_DECIDE_HPP
#define GBD_DECIDE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gbd/reduce.hpp"
#include "gbd/system.hpp"

namespace gbd {

/// plain      - reduce every S-polynomial (brute-force oracle)
/// buchberger - gcd criterion (B1) and lcm-chain criterion (B2) before B0
/// extended   - B1, B2, then extended-criterion chains (B3) before B0
/// pham_like  - consecutive pairs only; valid for Pham-like systems
enum class Mode { plain, buchberger, extended, pham_like };

const char* mode_name(Mode m);
std::optional<Mode> mode_from(std::string_view name);

enum class Rule { B0, B1, B2, B3, PHAM };

const char* rule_name(Rule r);

struct EdgeCertificate {
    enum class Kind { coprime, reused, rereduced };
    int a = 0, b = 0; // 1-based
    Kind kind = Kind::coprime;
    std::vector<int> over; // 1-based G' of a re-reduction
};

/// How one pair was discharged. All indices 1-based.
struct PairDisposition {
    int i = 0, j = 0;
    Rule rule = Rule::B0;
    std::optional<ReductionTrace> trace;  // B0
    std::vector<int> chain;               // B2 / B3
    std::vector<EdgeCertificate> edges;   // B2 / B3
};

struct PairFailure {
    int i = 0, j = 0;
    ReductionTrace trace; // nonzero remainder
};

/// A B3 candidate whose edge re-reduction left a nonzero remainder over G'.
struct RejectedChain {
    int i = 0, j = 0;
    std::vector<int> chain;
    int edge_a = 0, edge_b = 0;
    std::vector<int> over;
    Polynomial remainder;
};

struct DecideOptions {
    bool b3_rereduce = true;    // re-reduce cached edges whose trace used reducers outside G'
    std::size_t b3_subset_cap = 6;
    int threads = 1;
};

struct DecisionReport {
    Mode mode = Mode::plain;
    bool is_groebner = false;
    std::vector<PairDisposition> dispositions; // in processing order
    std::vector<PairFailure> failures;
    std::vector<RejectedChain> rejected_b3;
    long reductions = 0;    // distinct S-polynomials reduced
    long division_runs = 0; // distinct (S-polynomial, reducer-set) division runs
    std::array<long, 5> by_rule{};
    double total_ms = 0;
    double reduce_ms = 0;
    // set by the Pham-like path
    std::optional<Term> pham_d;
    std::vector<Term> pham_cofactors;

    long rule_count(Rule r) const { return by_rule[static_cast<std::size_t>(r)]; }
};

/// Decide whether the system is a Groebner basis. The verdict is identical
/// across modes; only the amount of reduction work differs.
DecisionReport decide(const SystemFile& sys, Mode mode, const DecideOptions& opt = {});

/// Brute-force oracle: reduces all m(m-1)/2 S-polynomials, never short-circuits.
DecisionReport decide_plain(const SystemFile& sys, const DecideOptions& opt = {});

/// Re-checks a disposition's certificate from scratch, independently of the
/// search that produced it.
bool verify_disposition(const SystemFile& sys, const PairDisposition& d,
                        const DecideOptions& opt = {});

} // namespace gbd

#endif
