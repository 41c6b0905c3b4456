#pragma once

// Random generators and the shared instance corpus for unit and acceptance tests.

#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pcring/pcr_core.hpp"

namespace pcring::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntGroupRingElem random_int_elem(Rng& rng, const GroupPtr& g, int lo = -3, int hi = 3)
{
    std::vector<Integer> dense;
    for (std::size_t i = 0; i < g->size(); ++i) {
        dense.emplace_back(uniform(rng, lo, hi));
    }
    return IntGroupRingElem::from_dense(g, std::move(dense));
}

inline CycloNum random_cyclo(Rng& rng, unsigned order)
{
    std::vector<Rational> poly;
    const int len = uniform(rng, 1, static_cast<int>(order) + 1);
    for (int i = 0; i < len; ++i) {
        poly.emplace_back(uniform(rng, -4, 4), uniform(rng, 1, 3));
    }
    return CycloNum::from_poly(order, poly);
}

inline CycloGroupRingElem random_cyclo_elem(Rng& rng, const GroupPtr& g)
{
    std::vector<CycloNum> dense;
    for (std::size_t i = 0; i < g->size(); ++i) {
        dense.push_back(uniform(rng, 0, 3) == 0 ? CycloNum::zero(g->conductor()) : random_cyclo(rng, g->conductor()));
    }
    return CycloGroupRingElem::from_dense(g, std::move(dense));
}

inline IntPair random_pair(Rng& rng, const GroupPtr& g)
{
    return {random_int_elem(rng, g), random_int_elem(rng, g)};
}

/// Every order tuple of rank 1..3 with entries <= max_lcm, lcm <= max_lcm and size in [2, max_size].
inline std::vector<std::vector<unsigned>> admissible_orders(unsigned max_lcm, std::size_t max_size)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    auto visit = [&](auto&& self, std::size_t rank) -> void {
        if (current.size() == rank) {
            unsigned l = 1;
            std::size_t s = 1;
            for (unsigned n : current) {
                l = std::lcm(l, n);
                s *= n;
            }
            if (l <= max_lcm && s >= 2 && s <= max_size) {
                out.push_back(current);
            }
            return;
        }
        for (unsigned n = 1; n <= max_lcm; ++n) {
            current.push_back(n);
            self(self, rank);
            current.pop_back();
        }
    };
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        visit(visit, rank);
    }
    return out;
}

inline bool valid_canonical(const IntGroupRingElem& c)
{
    return sgn(c.coeff(0)) > 0 && augmentation(c) >= 2;
}

/// A random canonical element with coefficients in 0..5, drawn from several shapes:
/// dense, sparse, a multiple of a cyclic subgroup's trace, or a subgroup trace times (1 + g).
inline IntGroupRingElem random_canonical(Rng& rng, const GroupPtr& g)
{
    const std::size_t s = g->size();
    for (;;) {
        std::vector<Integer> dense(s, Integer(0));
        switch (uniform(rng, 0, 3)) {
        case 0:
            for (auto& x : dense) {
                x = uniform(rng, 0, 5);
            }
            break;
        case 1: {
            const int extra = uniform(rng, 0, 3);
            for (int i = 0; i < extra; ++i) {
                dense[static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(s) - 1))] = uniform(rng, 1, 5);
            }
            break;
        }
        case 2: {
            const auto h = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s) - 1));
            const int m = uniform(rng, 1, 5);
            std::size_t x = 0;
            do {
                dense[x] = m;
                x = g->mul(x, h);
            } while (x != 0);
            break;
        }
        default: {
            const auto h = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s) - 1));
            const auto t = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s) - 1));
            std::size_t x = 0;
            do {
                dense[x] += 1;
                dense[g->mul(x, t)] += 1;
                x = g->mul(x, h);
            } while (x != 0);
            break;
        }
        }
        if (sgn(dense[0]) == 0) {
            dense[0] = uniform(rng, 1, 5);
        }
        auto c = IntGroupRingElem::from_dense(g, std::move(dense));
        if (valid_canonical(c)) {
            return c;
        }
    }
}

struct CorpusInstance {
    GroupPtr group;
    IntGroupRingElem c;
};

/// Deterministic corpus of (group, c) with lcm of the cyclic orders <= 30.
inline std::vector<CorpusInstance> make_corpus(std::size_t count, std::uint64_t seed, std::size_t max_size)
{
    Rng rng(seed);
    const auto orders = admissible_orders(30, max_size);
    std::vector<CorpusInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& o = orders[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(orders.size()) - 1))];
        auto g = make_group(o);
        auto c = random_canonical(rng, g);
        out.push_back({g, std::move(c)});
    }
    return out;
}

/// Floating-point character sum, used as an independent numeric oracle.
inline std::complex<double> numeric_character(const AbelianGroup& g, std::size_t b, const IntGroupRingElem& x)
{
    std::complex<double> sum = 0;
    for (const auto& [a, coeff] : x.terms()) {
        double phase = 0;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            phase += static_cast<double>(g.digit(a, i)) * g.digit(b, i) / g.orders()[i];
        }
        sum += coeff.get_d() * std::polar(1.0, 2.0 * 3.14159265358979323846 * phase);
    }
    return sum;
}

} // namespace pcring::testing
