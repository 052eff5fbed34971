// Test-only oracles. Nothing here calls into the library's series or
// enumeration code paths; they exist to check those paths independently.
#ifndef OVERSCHUR_TESTS_ORACLES_HPP
#define OVERSCHUR_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <overschur/partition.hpp>

namespace oracle
{

using Poly = std::vector<std::int64_t>;

inline Poly one(int order)
{
    Poly p(order + 1, 0);
    p[0] = 1;
    return p;
}

// Schoolbook product, truncated.
inline Poly mul(const Poly &a, const Poly &b)
{
    Poly out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// (1 + c q^e) as a truncated polynomial.
inline Poly binomial(int order, std::int64_t c, int e)
{
    auto p = one(order);
    if (e <= order) {
        p[e] += c;
    }
    return p;
}

// Geometric series 1/(1 - q^e) = 1 + q^e + q^{2e} + ...
inline Poly geometric(int order, int e)
{
    Poly p(order + 1, 0);
    for (int k = 0; k <= order; k += e) {
        p[k] = 1;
    }
    return p;
}

// Number of partitions of n into parts drawn from `allowed`, each used at most
// once when distinct is set. Plain recursion, no tables.
inline std::int64_t count_partitions(int n, const std::vector<int> &allowed, bool distinct, std::size_t from = 0)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for (std::size_t i = from; i < allowed.size(); ++i) {
        const int p = allowed[i];
        if (p > n) {
            continue;
        }
        total += count_partitions(n - p, allowed, distinct, distinct ? i + 1 : i);
    }
    return total;
}

// Every canonical overpartition whose parts are overlined and == r, d-r, 0 mod
// d (each value at most once) or non-overlined multiples of d (repeatable),
// with weight <= max_n. Superset of both Bbar and Cbar.
inline void for_each_candidate(const overschur::Params &params, int max_n,
                               const std::function<void(const overschur::Overpartition &)> &visit)
{
    using overschur::OverPart;
    const int d = params.d();
    const int r = params.r();
    std::vector<OverPart> kinds;
    for (int v = max_n; v >= 1; --v) {
        const int res = v % d;
        if (res == r || res == d - r || res == 0) {
            kinds.push_back({v, true});
        }
        if (res == 0) {
            kinds.push_back({v, false});
        }
    }
    overschur::Overpartition cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int room) {
        visit(cur);
        for (std::size_t i = from; i < kinds.size(); ++i) {
            const auto k = kinds[i];
            if (k.value > room) {
                continue;
            }
            cur.parts.push_back(k);
            rec(k.overlined ? i + 1 : i, room - k.value);
            cur.parts.pop_back();
        }
    };
    rec(0, max_n);
}

} // namespace oracle

#endif
