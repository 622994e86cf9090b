#include "gbd/criteria.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gbd/errors.hpp"

namespace gbd {

bool gcd_criterion(const Term& a, const Term& b) {
    return gcd(a, b).is_identity();
}

bool lcm_criterion(const Term& a, const Term& b, const Term& c) {
    return divides(b, lcm(a, c));
}

EcResult extended_criterion(std::span<const Term> ts) {
    if (ts.empty())
        throw InvalidArgument("extended criterion on an empty list");
    const Term d = gcd(ts.front(), ts.back());
    for (std::size_t k = 0; k < ts.size(); ++k)
        if (!divides(d, ts[k]))
            return {EcResult::Fail::div, k};
    for (std::size_t x = 0; x < d.vars(); ++x) {
        if (d.deg(x) == 0)
            continue;
        bool nondec = true, noninc = true;
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            if (ts[k].deg(x) > ts[k + 1].deg(x))
                nondec = false;
            if (ts[k].deg(x) < ts[k + 1].deg(x))
                noninc = false;
        }
        if (!nondec && !noninc)
            return {EcResult::Fail::var, x};
    }
    return {};
}

std::optional<std::vector<std::size_t>> ec_permutation(std::span<const Term> ts, std::size_t cap) {
    if (ts.size() > cap)
        throw InvalidArgument("term list exceeds the permutation search cap");
    std::vector<std::size_t> perm(ts.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Term> image;
        image.reserve(ts.size());
        for (auto k : perm)
            image.push_back(ts[k]);
        if (extended_criterion(image).pass())
            return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<std::vector<int>> find_b2_chain(int i, int j, std::span<const Term> lts,
                                              const std::set<std::pair<int, int>>& confirmed) {
    const int m = static_cast<int>(lts.size());
    if (i < 0 || j < 0 || i >= m || j >= m || i == j)
        throw InvalidArgument("bad pair for B2 chain search");
    const Term big = lcm(lts[i], lts[j]);
    std::vector<bool> vertex(m, false);
    for (int k = 0; k < m; ++k)
        vertex[k] = divides(lts[k], big);

    auto edge = [&](int a, int b) {
        return confirmed.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    // BFS from i; the direct edge (i,j) is not a chain, so require length >= 3.
    std::vector<int> parent(m, -1);
    std::vector<bool> seen(m, false);
    seen[i] = true;
    std::deque<int> queue{i};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w = 0; w < m; ++w) {
            if (seen[w] || !vertex[w] || !edge(v, w))
                continue;
            if (w == j && v == i)
                continue; // skip the degenerate two-element chain
            parent[w] = v;
            if (w == j) {
                std::vector<int> chain{j};
                for (int c = v; c != -1; c = parent[c])
                    chain.push_back(c);
                std::reverse(chain.begin(), chain.end());
                return chain;
            }
            seen[w] = true;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

} // namespace gbd
