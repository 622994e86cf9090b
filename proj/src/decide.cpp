#include "gbd/decide.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "gbd/criteria.hpp"
#include "gbd/errors.hpp"
#include "gbd/pham.hpp"

namespace gbd {

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::plain:
        return "plain";
    case Mode::buchberger:
        return "buchberger";
    case Mode::extended:
        return "extended";
    case Mode::pham_like:
        return "pham";
    }
    return "?";
}

std::optional<Mode> mode_from(std::string_view name) {
    if (name == "plain")
        return Mode::plain;
    if (name == "buchberger")
        return Mode::buchberger;
    if (name == "extended")
        return Mode::extended;
    if (name == "pham")
        return Mode::pham_like;
    return std::nullopt;
}

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::B0:
        return "B0";
    case Rule::B1:
        return "B1";
    case Rule::B2:
        return "B2";
    case Rule::B3:
        return "B3";
    case Rule::PHAM:
        return "PHAM";
    }
    return "?";
}

namespace {

using Pair = std::pair<int, int>; // 0-based, i < j

std::vector<Pair> pairs_in_order(int m) {
    std::vector<Pair> out;
    for (int dist = 1; dist < m; ++dist)
        for (int i = 0; i + dist < m; ++i)
            out.push_back({i, i + dist});
    return out;
}

std::vector<int> to_one_based(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](int x) { return x + 1; });
    return out;
}

class Clock {
public:
    Clock() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Shared division bookkeeping: memoizes runs by (pair, reducer set), tracks
/// the distinct-S-polynomial and distinct-run tallies, and remembers which
/// pairs are confirmed (have some zero-remainder trace).
class Engine {
public:
    Engine(const SystemFile& sys, const DecideOptions& opt)
        : sys_(sys), opt_(opt), lts_(sys.leading_terms()), m_(static_cast<int>(sys.size())) {
        all_.resize(m_);
        std::iota(all_.begin(), all_.end(), 0);
    }

    int size() const { return m_; }
    const std::vector<Term>& lts() const { return lts_; }
    const std::vector<int>& all_indices() const { return all_; }
    const DecideOptions& options() const { return opt_; }

    const Polynomial& spoly(Pair p) {
        auto it = spolys_.find(p);
        if (it == spolys_.end())
            it = spolys_
                     .emplace(p, s_polynomial(sys_.polys[p.first], sys_.polys[p.second],
                                              sys_.order))
                     .first;
        return it->second;
    }

    /// Perform (or recall) the division of S(pair) against the given
    /// reducer index set. Every distinct (pair, set) run is counted once.
    const ReductionTrace& run(Pair p, const std::vector<int>& available) {
        auto key = std::make_pair(p, available);
        auto it = runs_.find(key);
        if (it != runs_.end())
            return it->second;
        Clock c;
        ReductionTrace trace = reduce_subset(spoly(p), sys_.polys, available, sys_.order);
        reduce_ms_ += c.ms();
        it = runs_.emplace(std::move(key), std::move(trace)).first;
        pairs_reduced_.insert(p);
        if (it->second.reduces_to_zero())
            confirmed_.insert(p);
        return it->second;
    }

    /// Reusable zero-remainder trace whose reducers all lie in `gprime`.
    const ReductionTrace* reusable(Pair p, const std::vector<int>& gprime) const {
        for (const auto& [key, trace] : runs_) {
            if (key.first != p || !trace.reduces_to_zero())
                continue;
            if (std::includes(gprime.begin(), gprime.end(), trace.reducers_used.begin(),
                              trace.reducers_used.end()))
                return &trace;
        }
        return nullptr;
    }

    bool confirmed(Pair p) const { return confirmed_.count(p) != 0; }
    const std::set<Pair>& confirmed_pairs() const { return confirmed_; }

    /// Pre-run a batch of full-basis divisions concurrently. Results land in
    /// the same memo table, so the subsequent sequential pass is unchanged.
    void prefetch_full_runs(const std::vector<Pair>& pairs) {
        int threads = std::max(1, opt_.threads);
        if (threads <= 1 || pairs.size() < 2)
            return;
        Clock c;
        std::vector<std::pair<Pair, ReductionTrace>> results(pairs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= pairs.size())
                    return;
                results[k] = {pairs[k], reduce_subset(s_polynomial(sys_.polys[pairs[k].first],
                                                                   sys_.polys[pairs[k].second],
                                                                   sys_.order),
                                                      sys_.polys, all_, sys_.order)};
            }
        };
        std::vector<std::future<void>> futs;
        for (int t = 1; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, worker));
        worker();
        for (auto& f : futs)
            f.get();
        reduce_ms_ += c.ms();
        for (auto& [p, trace] : results) {
            bool zero = trace.reduces_to_zero();
            spolys_.emplace(p, trace.target);
            if (runs_.emplace(std::make_pair(p, all_), std::move(trace)).second) {
                pairs_reduced_.insert(p);
                if (zero)
                    confirmed_.insert(p);
            }
        }
    }

    long reductions() const { return static_cast<long>(pairs_reduced_.size()); }
    long division_runs() const { return static_cast<long>(runs_.size()); }
    double reduce_ms() const { return reduce_ms_; }

private:
    const SystemFile& sys_;
    const DecideOptions& opt_;
    std::vector<Term> lts_;
    int m_;
    std::vector<int> all_;
    std::map<Pair, Polynomial> spolys_;
    std::map<std::pair<Pair, std::vector<int>>, ReductionTrace> runs_;
    std::set<Pair> pairs_reduced_;
    std::set<Pair> confirmed_;
    double reduce_ms_ = 0;
};

struct ChainOutcome {
    bool ok = false;
    std::vector<EdgeCertificate> edges;
};

/// Validate one candidate B3 chain: extended criterion on its leading terms,
/// then edge certificates. Edges must already be confirmed (zero trace) or
/// coprime; membership is checked for the whole chain before any counted
/// re-reduction is spent.
ChainOutcome try_b3_chain(Engine& eng, Pair target, const std::vector<int>& chain,
                          std::vector<RejectedChain>& rejected) {
    const auto& lts = eng.lts();
    std::vector<Term> image;
    image.reserve(chain.size());
    for (int k : chain)
        image.push_back(lts[k]);
    if (!extended_criterion(image).pass())
        return {};

    std::vector<int> gprime = chain;
    std::sort(gprime.begin(), gprime.end());

    struct EdgeRef {
        Pair p;
        bool coprime;
    };
    std::vector<EdgeRef> refs;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        Pair e{std::min(chain[k], chain[k + 1]), std::max(chain[k], chain[k + 1])};
        bool cop = gcd_criterion(lts[e.first], lts[e.second]);
        if (!cop && !eng.confirmed(e))
            return {};
        refs.push_back({e, cop});
    }

    ChainOutcome out;
    for (const auto& ref : refs) {
        EdgeCertificate cert;
        cert.a = ref.p.first + 1;
        cert.b = ref.p.second + 1;
        if (ref.coprime) {
            cert.kind = EdgeCertificate::Kind::coprime;
        } else if (eng.reusable(ref.p, gprime)) {
            cert.kind = EdgeCertificate::Kind::reused;
        } else if (eng.options().b3_rereduce) {
            const ReductionTrace& t = eng.run(ref.p, gprime);
            if (!t.reduces_to_zero()) {
                rejected.push_back({target.first + 1, target.second + 1, to_one_based(chain),
                                    ref.p.first + 1, ref.p.second + 1, to_one_based(gprime),
                                    t.remainder});
                return {};
            }
            cert.kind = EdgeCertificate::Kind::rereduced;
            cert.over = to_one_based(gprime);
        } else {
            return {};
        }
        out.edges.push_back(std::move(cert));
    }
    out.ok = true;
    return out;
}

/// Two-stage B3 search. Stage 1 sorts the divisor-closed candidate set by the
/// degree vector restricted to the variables of gcd(lt gi, lt gj), directions
/// taken from the endpoints. Stage 2 exhausts subsets up to the cap.
std::optional<PairDisposition> find_b3(Engine& eng, Pair target,
                                       std::vector<RejectedChain>& rejected) {
    const auto& lts = eng.lts();
    const int i = target.first, j = target.second;
    const Term d = gcd(lts[i], lts[j]);

    std::vector<int> candidates;
    for (int k = 0; k < eng.size(); ++k)
        if (divides(d, lts[k]))
            candidates.push_back(k);
    if (candidates.size() < 3)
        return std::nullopt;

    std::vector<std::size_t> dvars;
    for (std::size_t x = 0; x < d.vars(); ++x)
        if (d.deg(x) > 0)
            dvars.push_back(x);

    auto make_disposition = [&](const std::vector<int>& chain, ChainOutcome&& out) {
        PairDisposition disp;
        disp.i = i + 1;
        disp.j = j + 1;
        disp.rule = Rule::B3;
        disp.chain = to_one_based(chain);
        disp.edges = std::move(out.edges);
        return disp;
    };

    // Stage 1: restricted-degree sort.
    std::vector<int> sorted;
    for (int k : candidates) {
        bool between = true;
        for (auto x : dvars) {
            auto lo = std::min(lts[i].deg(x), lts[j].deg(x));
            auto hi = std::max(lts[i].deg(x), lts[j].deg(x));
            if (lts[k].deg(x) < lo || lts[k].deg(x) > hi)
                between = false;
        }
        if (between)
            sorted.push_back(k);
    }
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        for (auto x : dvars) {
            if (lts[a].deg(x) == lts[b].deg(x))
                continue;
            bool ascending = lts[i].deg(x) <= lts[j].deg(x);
            return ascending ? lts[a].deg(x) < lts[b].deg(x) : lts[a].deg(x) > lts[b].deg(x);
        }
        return false;
    });

    std::vector<int> heuristic;
    if (sorted.size() >= 3 && sorted.front() == i && sorted.back() == j) {
        heuristic = sorted;
        if (auto out = try_b3_chain(eng, target, heuristic, rejected); out.ok)
            return make_disposition(heuristic, std::move(out));
    }

    // Stage 2: exhaustive subsets containing both endpoints.
    std::vector<int> others;
    for (int k : candidates)
        if (k != i && k != j)
            others.push_back(k);

    std::size_t cap = std::min(eng.options().b3_subset_cap, candidates.size());
    for (std::size_t size = 3; size <= cap; ++size) {
        std::size_t middles = size - 2;
        if (middles > others.size())
            break;
        // combinations of `middles` elements of `others`, lexicographic
        std::vector<std::size_t> pick(middles);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::vector<int> mids;
            mids.reserve(middles);
            for (auto p : pick)
                mids.push_back(others[p]);
            std::sort(mids.begin(), mids.end());
            do {
                std::vector<int> chain;
                chain.reserve(size);
                chain.push_back(i);
                chain.insert(chain.end(), mids.begin(), mids.end());
                chain.push_back(j);
                if (chain != heuristic) {
                    if (auto out = try_b3_chain(eng, target, chain, rejected); out.ok)
                        return make_disposition(chain, std::move(out));
                }
            } while (std::next_permutation(mids.begin(), mids.end()));

            // next combination
            std::size_t r = middles;
            while (r > 0 && pick[r - 1] == others.size() - middles + (r - 1))
                --r;
            if (r == 0)
                break;
            ++pick[r - 1];
            for (std::size_t q = r; q < middles; ++q)
                pick[q] = pick[q - 1] + 1;
        }
    }
    return std::nullopt;
}

DecisionReport decide_impl(const SystemFile& sys, Mode mode, const DecideOptions& opt) {
    validate_system(sys);
    Clock total;
    Engine eng(sys, opt);
    const auto pairs = pairs_in_order(eng.size());
    const auto& lts = eng.lts();

    DecisionReport report;
    report.mode = mode;

    if (mode == Mode::plain && opt.threads > 1)
        eng.prefetch_full_runs(pairs);

    // Coprime pairs double as chain edges: their S-polynomials reduce to zero
    // by the gcd criterion, no trace needed.
    std::set<Pair> coprime_edges;
    for (const auto& p : pairs)
        if (gcd_criterion(lts[p.first], lts[p.second]))
            coprime_edges.insert(p);

    for (const auto& p : pairs) {
        const auto [i, j] = p;

        if (mode != Mode::plain && coprime_edges.count(p)) {
            PairDisposition disp;
            disp.i = i + 1;
            disp.j = j + 1;
            disp.rule = Rule::B1;
            report.dispositions.push_back(std::move(disp));
            continue;
        }

        if (mode != Mode::plain) {
            std::set<Pair> edges = eng.confirmed_pairs();
            edges.insert(coprime_edges.begin(), coprime_edges.end());
            if (auto chain = find_b2_chain(i, j, lts, edges)) {
                PairDisposition disp;
                disp.i = i + 1;
                disp.j = j + 1;
                disp.rule = Rule::B2;
                disp.chain = to_one_based(*chain);
                for (std::size_t k = 0; k + 1 < chain->size(); ++k) {
                    Pair e{std::min((*chain)[k], (*chain)[k + 1]),
                           std::max((*chain)[k], (*chain)[k + 1])};
                    EdgeCertificate cert;
                    cert.a = e.first + 1;
                    cert.b = e.second + 1;
                    cert.kind = coprime_edges.count(e) ? EdgeCertificate::Kind::coprime
                                                       : EdgeCertificate::Kind::reused;
                    disp.edges.push_back(std::move(cert));
                }
                report.dispositions.push_back(std::move(disp));
                continue;
            }
        }

        if (mode == Mode::extended) {
            if (auto disp = find_b3(eng, p, report.rejected_b3)) {
                report.dispositions.push_back(std::move(*disp));
                continue;
            }
        }

        const ReductionTrace& trace = eng.run(p, eng.all_indices());
        if (trace.reduces_to_zero()) {
            PairDisposition disp;
            disp.i = i + 1;
            disp.j = j + 1;
            disp.rule = Rule::B0;
            disp.trace = trace;
            report.dispositions.push_back(std::move(disp));
        } else {
            report.failures.push_back({i + 1, j + 1, trace});
        }
    }

    report.is_groebner = report.failures.empty();
    report.reductions = eng.reductions();
    report.division_runs = eng.division_runs();
    for (const auto& d : report.dispositions)
        ++report.by_rule[static_cast<std::size_t>(d.rule)];
    report.reduce_ms = eng.reduce_ms();
    report.total_ms = total.ms();
    return report;
}

} // namespace

DecisionReport decide_plain(const SystemFile& sys, const DecideOptions& opt) {
    return decide_impl(sys, Mode::plain, opt);
}

DecisionReport decide(const SystemFile& sys, Mode mode, const DecideOptions& opt) {
    if (mode == Mode::pham_like)
        return decide_pham_like(sys, opt);
    return decide_impl(sys, mode, opt);
}

bool verify_disposition(const SystemFile& sys, const PairDisposition& d,
                        const DecideOptions& opt) {
    validate_system(sys);
    const int m = static_cast<int>(sys.size());
    const auto lts = sys.leading_terms();
    const int i = d.i - 1, j = d.j - 1;
    if (i < 0 || j <= i || j >= m)
        return false;

    auto reduces_over = [&](Pair p, const std::vector<int>& avail) {
        Polynomial s = s_polynomial(sys.polys[p.first], sys.polys[p.second], sys.order);
        return reduce_subset(s, sys.polys, avail, sys.order).reduces_to_zero();
    };
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);

    switch (d.rule) {
    case Rule::B0: {
        if (!d.trace || !d.trace->reduces_to_zero())
            return false;
        return reduces_over({i, j}, all);
    }
    case Rule::B1:
        return gcd_criterion(lts[i], lts[j]);
    case Rule::B2: {
        if (d.chain.size() < 3 || d.chain.front() != d.i || d.chain.back() != d.j)
            return false;
        const Term big = lcm(lts[i], lts[j]);
        for (int k1 : d.chain)
            if (k1 < 1 || k1 > m || !divides(lts[k1 - 1], big))
                return false;
        for (std::size_t k = 0; k + 1 < d.chain.size(); ++k) {
            int a = d.chain[k] - 1, b = d.chain[k + 1] - 1;
            Pair e{std::min(a, b), std::max(a, b)};
            if (gcd_criterion(lts[e.first], lts[e.second]))
                continue;
            if (!reduces_over(e, all))
                return false;
        }
        return true;
    }
    case Rule::B3: {
        if (d.chain.size() < 3 || d.chain.front() != d.i || d.chain.back() != d.j)
            return false;
        std::vector<Term> image;
        std::vector<int> gprime;
        for (int k1 : d.chain) {
            if (k1 < 1 || k1 > m)
                return false;
            image.push_back(lts[k1 - 1]);
            gprime.push_back(k1 - 1);
        }
        if (!extended_criterion(image).pass())
            return false;
        std::sort(gprime.begin(), gprime.end());
        for (std::size_t k = 0; k + 1 < d.chain.size(); ++k) {
            int a = d.chain[k] - 1, b = d.chain[k + 1] - 1;
            Pair e{std::min(a, b), std::max(a, b)};
            if (gcd_criterion(lts[e.first], lts[e.second]))
                continue;
            if (!reduces_over(e, gprime))
                return false;
        }
        return true;
    }
    case Rule::PHAM: {
        if (j == i + 1)
            return false; // the pham rule covers non-consecutive pairs only
        if (!detect_pham_like(lts))
            return false;
        for (int k = 0; k + 1 < m; ++k)
            if (!reduces_over({k, k + 1}, all))
                return false;
        return true;
    }
    }
    (void)opt;
    return false;
}

} // namespace gbd
