#pragma once

// Brute-force ground truth for desk-scale graphs. Everything here works on
// 64-bit vertex masks and is deliberately independent of the closed-form
// routes in invariants.hpp / bounds.hpp: harmonic sums use a common
// denominator in __int128 instead of the rational type.

#include <smalllarge/graph.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/sets.hpp>

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace smalllarge
{
    struct OracleLimits
    {
        int max_n_subset = 20;
        int max_n_partition = 12;
        int max_n_enumerate = 7;
        int max_n_chromatic = 16;

        auto validate() const -> void
        {
            if (max_n_subset < 1 || max_n_partition < 1 || max_n_enumerate < 1 || max_n_chromatic < 1)
                throw InvalidInput("oracle limits must be at least 1");
            if (max_n_subset > 64 || max_n_partition > 64 || max_n_chromatic > 64)
                throw InvalidInput("oracle limits above 64 vertices are not supported");
            if (max_n_enumerate > 11)
                throw InvalidInput("enumeration limit above 11 vertices is not supported");
        }
    };

    enum class Invariant
    {
        Alpha,
        Omega,
        Chi,
        Theta,
        AlphaK,
        OmegaK
    };

    /// Membership test for a set class on vertex masks (n <= 64).
    class MaskClassifier
    {
    public:
        MaskClassifier(const Graph & g, SetClass cls) :
            _n(g.size()),
            _cls(cls),
            _rows(g.size()),
            _degrees(g.degrees().begin(), g.degrees().end())
        {
            if (_n > 64)
                throw InvalidInput("mask classifier supports at most 64 vertices");
            for (int v = 0; v < _n; ++v)
                _rows[v] = g.row_mask(v);

            if (cls.kind == SetKind::AlphaSmall || cls.kind == SetKind::AlphaLarge) {
                std::vector<long long> denominators(_n);
                for (int v = 0; v < _n; ++v)
                    denominators[v] = cls.kind == SetKind::AlphaSmall ? _n - _degrees[v] : _degrees[v] + 1;
                _unit = 1;
                for (auto d : denominators)
                    _unit = _unit / gcd128(_unit, d) * d;
                _weights.resize(_n);
                for (int v = 0; v < _n; ++v)
                    _weights[v] = _unit / denominators[v];
            }
        }

        auto operator()(std::uint64_t mask) const -> bool
        {
            const int size = std::popcount(mask);
            if (size == 0)
                return true;
            const int k = _cls.k;
            switch (_cls.kind) {
            case SetKind::KSmall:
                for (auto m = mask; m; m &= m - 1)
                    if (_degrees[std::countr_zero(m)] > _n - size + k)
                        return false;
                return true;
            case SetKind::KLarge:
                for (auto m = mask; m; m &= m - 1)
                    if (_degrees[std::countr_zero(m)] < size - k - 1)
                        return false;
                return true;
            case SetKind::KIndependent:
                for (auto m = mask; m; m &= m - 1)
                    if (std::popcount(_rows[std::countr_zero(m)] & mask) > k)
                        return false;
                return true;
            case SetKind::KNearClique:
                for (auto m = mask; m; m &= m - 1)
                    if (std::popcount(_rows[std::countr_zero(m)] & mask) < size - k - 1)
                        return false;
                return true;
            case SetKind::AlphaSmall:
            case SetKind::AlphaLarge: {
                __int128 sum = 0;
                for (auto m = mask; m; m &= m - 1)
                    sum += _weights[std::countr_zero(m)];
                return sum <= _unit;
            }
            case SetKind::BetaSmall:
            case SetKind::BetaLarge: {
                long long sum = 0;
                for (auto m = mask; m; m &= m - 1)
                    sum += _degrees[std::countr_zero(m)];
                if (_cls.kind == SetKind::BetaSmall)
                    return sum <= static_cast<long long>(_n - size) * size;
                return sum >= static_cast<long long>(size) * (size - 1);
            }
            }
            return false;
        }

    private:
        static auto gcd128(__int128 a, __int128 b) -> __int128
        {
            while (b != 0) {
                auto t = a % b;
                a = b;
                b = t;
            }
            return a;
        }

        int _n;
        SetClass _cls;
        std::vector<std::uint64_t> _rows;
        std::vector<int> _degrees;
        std::vector<__int128> _weights;
        __int128 _unit = 1;
    };

    namespace detail
    {
        inline auto require_limit(const Graph & g, int limit, const char * what) -> void
        {
            if (g.size() > limit)
                throw OracleLimitError(what, g.size(), limit);
        }

        inline auto full_mask(int n) -> std::uint64_t
        {
            return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        }

        /// Maximum independent set by include/exclude branching with a size bound.
        class IndependentSetSearch
        {
        public:
            explicit IndependentSetSearch(const Graph & g) : _rows(g.size())
            {
                for (int v = 0; v < g.size(); ++v)
                    _rows[v] = g.row_mask(v);
            }

            auto run(std::uint64_t candidates) -> int
            {
                _best = 0;
                expand(candidates, 0);
                return _best;
            }

        private:
            auto expand(std::uint64_t candidates, int size) -> void
            {
                if (candidates == 0) {
                    _best = std::max(_best, size);
                    return;
                }
                if (size + std::popcount(candidates) <= _best)
                    return;
                // branch on a vertex of minimum degree inside the candidates
                int pick = -1, pick_degree = 65;
                for (auto m = candidates; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    int d = std::popcount(_rows[v] & candidates);
                    if (d < pick_degree) {
                        pick = v;
                        pick_degree = d;
                    }
                }
                std::uint64_t bit = std::uint64_t{1} << pick;
                expand(candidates & ~bit & ~_rows[pick], size + 1);
                if (pick_degree > 0)
                    expand(candidates & ~bit, size);
            }

            std::vector<std::uint64_t> _rows;
            int _best = 0;
        };

        /// DSATUR branch and bound.
        class ColouringSearch
        {
        public:
            explicit ColouringSearch(const Graph & g) : _n(g.size()), _rows(g.size()), _colour(g.size(), -1)
            {
                for (int v = 0; v < _n; ++v)
                    _rows[v] = g.row_mask(v);
            }

            auto run() -> int
            {
                if (_n == 0)
                    return 0;
                _best = _n + 1;
                _neighbour_colours.assign(_n, 0);
                search(0, 0);
                return _best;
            }

        private:
            auto search(int coloured, int used) -> void
            {
                if (used >= _best)
                    return;
                if (coloured == _n) {
                    _best = used;
                    return;
                }
                int pick = -1, pick_sat = -1, pick_deg = -1;
                for (int v = 0; v < _n; ++v) {
                    if (_colour[v] >= 0)
                        continue;
                    int sat = std::popcount(_neighbour_colours[v]);
                    int deg = std::popcount(_rows[v]);
                    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                        pick = v;
                        pick_sat = sat;
                        pick_deg = deg;
                    }
                }
                for (int c = 0; c <= used && c < 64; ++c) {
                    if ((_neighbour_colours[pick] >> c) & 1u)
                        continue;
                    if (std::max(used, c + 1) >= _best)
                        break;
                    auto saved = _neighbour_colours;
                    _colour[pick] = c;
                    for (auto m = _rows[pick]; m; m &= m - 1)
                        _neighbour_colours[std::countr_zero(m)] |= std::uint64_t{1} << c;
                    search(coloured + 1, std::max(used, c + 1));
                    _colour[pick] = -1;
                    _neighbour_colours = std::move(saved);
                }
            }

            int _n;
            std::vector<std::uint64_t> _rows;
            std::vector<int> _colour;
            std::vector<std::uint64_t> _neighbour_colours;
            int _best = 0;
        };
    }

    struct MaxSet
    {
        int size = 0;
        VertexSet witness;
    };

    /**
     * Maximum-cardinality subset passing the class predicate; among maxima the
     * lexicographically smallest sorted vertex list is returned.
     */
    inline auto exact_max_set(const Graph & g, SetClass cls, const OracleLimits & limits = {}) -> MaxSet
    {
        detail::require_limit(g, limits.max_n_subset, "exact_max_set");
        const int n = g.size();
        MaskClassifier accepts(g, cls);
        std::vector<int> pick;
        for (int size = n; size >= 1; --size) {
            // combinations of `size` out of n in lexicographic order
            pick.resize(size);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::uint64_t mask = 0;
                for (auto v : pick)
                    mask |= std::uint64_t{1} << v;
                if (accepts(mask))
                    return {size, VertexSet(pick.begin(), pick.end())};
                int i = size - 1;
                while (i >= 0 && pick[i] == n - size + i)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (int j = i + 1; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
        return {0, {}};
    }

    inline auto exact_invariant(const Graph & g, Invariant which, int k = 0, const OracleLimits & limits = {}) -> int
    {
        switch (which) {
        case Invariant::Alpha:
            detail::require_limit(g, limits.max_n_subset, "alpha oracle");
            return detail::IndependentSetSearch(g).run(detail::full_mask(g.size()));
        case Invariant::Omega: {
            detail::require_limit(g, limits.max_n_subset, "omega oracle");
            auto co = complement(g);
            return detail::IndependentSetSearch(co).run(detail::full_mask(g.size()));
        }
        case Invariant::Chi:
            detail::require_limit(g, limits.max_n_chromatic, "chromatic oracle");
            return detail::ColouringSearch(g).run();
        case Invariant::Theta:
            detail::require_limit(g, limits.max_n_chromatic, "clique cover oracle");
            return detail::ColouringSearch(complement(g)).run();
        case Invariant::AlphaK:
            return exact_max_set(g, SetClass::independent(k), limits).size;
        case Invariant::OmegaK:
            return exact_max_set(complement(g), SetClass::independent(k), limits).size;
        }
        return 0;
    }

    /**
     * Minimum partition of V(G) into blocks of the class, by dynamic programming
     * over vertex subsets. Each step only considers blocks containing the lowest
     * remaining vertex, so the work is bounded by 3^n.
     */
    inline auto exact_min_partition(const Graph & g, SetClass cls, const OracleLimits & limits = {}) -> PartitionNumber
    {
        detail::require_limit(g, limits.max_n_partition, "exact_min_partition");
        const int n = g.size();
        const std::uint64_t all = detail::full_mask(n);
        const std::size_t states = std::size_t{1} << n;

        MaskClassifier accepts(g, cls);
        std::vector<bool> feasible(states);
        for (std::uint64_t m = 0; m < states; ++m)
            feasible[m] = accepts(m);

        constexpr int unreachable = 1 << 20;
        std::vector<int> best(states, unreachable);
        std::vector<std::uint64_t> choice(states, 0);
        best[0] = 0;
        for (std::uint64_t mask = 1; mask < states; ++mask) {
            std::uint64_t low = mask & (~mask + 1);
            std::uint64_t rest = mask ^ low;
            // every sub-block = low | (subset of rest)
            for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                std::uint64_t block = sub | low;
                if (feasible[block] && best[mask ^ block] + 1 < best[mask]) {
                    best[mask] = best[mask ^ block] + 1;
                    choice[mask] = block;
                }
                if (sub == 0)
                    break;
            }
        }

        PartitionNumber result;
        result.count = best[all];
        result.partition.source = "exact_subset_dp";
        for (std::uint64_t mask = all; mask; mask ^= choice[mask])
            result.partition.blocks.push_back({vertices_of(choice[mask]), cls});
        return result;
    }

    /// All labeled graphs on n vertices, indexed by edge mask over the pairs
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ... in that bit order.
    class LabeledGraphs
    {
    public:
        LabeledGraphs(int n, const OracleLimits & limits = {}) : _n(n)
        {
            if (n < 0)
                throw InvalidInput("vertex count must be non-negative");
            if (n > limits.max_n_enumerate)
                throw OracleLimitError("enumerate_graphs", n, limits.max_n_enumerate);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    _pairs.emplace_back(u, v);
        }

        auto vertex_count() const -> int { return _n; }

        auto count() const -> std::uint64_t { return std::uint64_t{1} << _pairs.size(); }

        auto at(std::uint64_t mask) const -> Graph
        {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < _pairs.size(); ++i)
                if ((mask >> i) & 1u)
                    edges.push_back(_pairs[i]);
            return build_graph(_n, edges);
        }

        /// Calls fn(mask, graph) for every mask in [start, count()).
        template <typename Fn>
        auto for_each(Fn && fn, std::uint64_t start = 0) const -> void
        {
            for (std::uint64_t mask = start; mask < count(); ++mask)
                fn(mask, at(mask));
        }

    private:
        int _n;
        std::vector<Edge> _pairs;
    };
}
