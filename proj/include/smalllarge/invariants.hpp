#pragma once

#include <smalllarge/exact.hpp>
#include <smalllarge/graph.hpp>
#include <smalllarge/seq_partition.hpp>
#include <smalllarge/sets.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace smalllarge
{
    struct SmallLargeNumbers
    {
        int small = 0;
        VertexSet small_witness;
        int large = 0;
        VertexSet large_witness;
    };

    struct PartitionNumber
    {
        int count = 0;
        VertexPartition partition;
    };

    /// Greedy decomposition: closed neighbourhoods of successive minimum-degree vertices.
    struct GreedyDecomposition
    {
        VertexSet independent_set;
        VertexPartition large_blocks;
    };

    struct SmallLargeSplit
    {
        VertexSet small;
        VertexSet large;
    };

    struct VariantMax
    {
        int size = 0;
        VertexSet witness;
    };

    namespace detail
    {
        inline auto sorted(VertexSet v) -> VertexSet
        {
            std::sort(v.begin(), v.end());
            return v;
        }

        inline auto lift_partition(const DegreeSequence & s, const SeqPartition & p, SetClass tag, std::string source)
            -> VertexPartition
        {
            VertexPartition result;
            result.source = std::move(source);
            for (const auto & r : p.ranges) {
                VertexSet block(s.order->begin() + r.begin, s.order->begin() + r.end);
                result.blocks.push_back({sorted(std::move(block)), tag});
            }
            return result;
        }
    }

    /// S_k and L_k with their canonical witnesses (prefix / suffix of the degree order).
    inline auto small_large_numbers(const Graph & g, int k) -> SmallLargeNumbers
    {
        auto seq = degree_sequence(g);
        SmallLargeNumbers result;
        result.small = max_k_small_prefix(seq, k);
        result.large = max_k_large_suffix(seq, k);
        result.small_witness = detail::sorted({seq.order->begin(), seq.order->begin() + result.small});
        result.large_witness = detail::sorted({seq.order->end() - result.large, seq.order->end()});
        return result;
    }

    /// phi_k(G): minimum number of k-small sets covering V(G), with the partition.
    inline auto min_k_small_partition(const Graph & g, int k) -> PartitionNumber
    {
        auto seq = degree_sequence(g);
        auto cut = partition_k_small(seq, k);
        return {cut.count(), detail::lift_partition(seq, cut, SetClass::small(k), "greedy_small_cut")};
    }

    /// Omega_k(G): minimum number of k-large sets covering V(G), with the partition.
    inline auto min_k_large_partition(const Graph & g, int k) -> PartitionNumber
    {
        auto seq = degree_sequence(g);
        auto cut = partition_k_large(seq, k);
        return {cut.count(), detail::lift_partition(seq, cut, SetClass::large(k), "greedy_large_cut")};
    }

    inline auto greedy_large_decomposition(const Graph & g) -> GreedyDecomposition
    {
        const int n = g.size();
        GreedyDecomposition result;
        result.large_blocks.source = "greedy_min_degree_neighbourhoods";
        std::vector<bool> alive(n, true);
        int remaining = n;

        while (remaining > 0) {
            int best = -1, best_degree = n;
            for (int v = 0; v < n; ++v) {
                if (! alive[v])
                    continue;
                int d = 0;
                for (int u = 0; u < n; ++u)
                    if (alive[u] && g.adjacent(v, u))
                        ++d;
                if (d < best_degree) {
                    best = v;
                    best_degree = d;
                }
            }

            VertexSet block;
            for (int u = 0; u < n; ++u)
                if (alive[u] && (u == best || g.adjacent(best, u)))
                    block.push_back(u);
            for (auto u : block)
                alive[u] = false;
            remaining -= static_cast<int>(block.size());
            result.independent_set.push_back(best);
            result.large_blocks.blocks.push_back({std::move(block), SetClass::large(0)});
        }
        return result;
    }

    /// The maximum k-small prefix and the (k-large) rest.
    inline auto small_large_split(const Graph & g, int k) -> SmallLargeSplit
    {
        auto seq = degree_sequence(g);
        int cut = max_k_small_prefix(seq, k);
        return {detail::sorted({seq.order->begin(), seq.order->begin() + cut}),
            detail::sorted({seq.order->begin() + cut, seq.order->end()})};
    }

    /**
     * Maximum alpha/beta-small or -large set. For a fixed size the smallest
     * degrees minimise both the harmonic sum and the average (largest degrees
     * for the large variants), and feasible sizes form an initial segment, so
     * the longest feasible prefix of the degree order is optimal.
     */
    inline auto variant_max(const Graph & g, SetKind kind) -> VariantMax
    {
        const int n = g.size();
        auto seq = degree_sequence(g);
        std::vector<int> order = *seq.order;
        bool small = kind == SetKind::AlphaSmall || kind == SetKind::BetaSmall;
        if (! small)
            std::reverse(order.begin(), order.end());

        Rational harmonic = 0;
        long long degree_sum = 0;
        int size = 0;
        for (auto v : order) {
            int d = g.degree(v);
            int next = size + 1;
            bool ok = false;
            switch (kind) {
            case SetKind::AlphaSmall: ok = harmonic + Rational(1, n - d) <= 1; break;
            case SetKind::AlphaLarge: ok = harmonic + Rational(1, d + 1) <= 1; break;
            case SetKind::BetaSmall: ok = degree_sum + d <= static_cast<long long>(n - next) * next; break;
            case SetKind::BetaLarge: ok = degree_sum + d >= static_cast<long long>(next) * (next - 1); break;
            default: throw InvalidInput("variant_max needs an alpha/beta class");
            }
            if (! ok)
                break;
            harmonic += (kind == SetKind::AlphaSmall) ? Rational(1, n - d) : Rational(1, d + 1);
            degree_sum += d;
            size = next;
        }
        return {size, detail::sorted({order.begin(), order.begin() + size})};
    }

    /// Havel-Hakimi residue: zeros left once the sequence is fully reduced.
    inline auto residue(const Graph & g) -> int
    {
        // (degree, vertex) pairs, kept in descending degree order with ascending id tie-break
        std::vector<std::pair<int, int>> items;
        for (int v = 0; v < g.size(); ++v)
            items.emplace_back(g.degree(v), v);

        auto resort = [&] {
            std::stable_sort(items.begin(), items.end(), [](const auto & a, const auto & b) {
                if (a.first != b.first)
                    return a.first > b.first;
                return a.second < b.second;
            });
        };

        resort();
        while (! items.empty() && items.front().first > 0) {
            int d = items.front().first;
            items.erase(items.begin());
            if (d > static_cast<int>(items.size()))
                throw std::logic_error("Havel-Hakimi: degree exceeds remaining entries");
            for (int i = 0; i < d; ++i)
                if (--items[i].first < 0)
                    throw std::logic_error("Havel-Hakimi: entry driven negative");
            resort();
        }
        return static_cast<int>(items.size());
    }

    /// Welsh-Powell colouring bound max{t : t <= d_{n-t+1} + 1}; always equals L_0(G).
    inline auto welsh_powell(const Graph & g) -> int
    {
        auto seq = degree_sequence(g);
        const int n = seq.size();
        int best = 0;
        for (int t = 1; t <= n; ++t)
            if (t <= seq.values[n - t] + 1)
                best = t;
        if (best != max_k_large_suffix(seq, 0))
            throw std::logic_error("Welsh-Powell bound disagrees with L_0");
        return best;
    }
}
