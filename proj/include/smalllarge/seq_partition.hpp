#pragma once

// Minimum partitions of an ascending integer sequence (not necessarily
// graphic) into k-small or k-large subsequences. Both greedy cuts run in
// O(m) on sorted input.

#include <smalllarge/graph.hpp>
#include <smalllarge/sets.hpp>

#include <algorithm>
#include <vector>

namespace smalllarge
{
    /// Half-open index interval [begin, end) into the sorted input.
    struct IndexRange
    {
        int begin = 0;
        int end = 0;

        auto size() const -> int { return end - begin; }

        friend auto operator==(const IndexRange &, const IndexRange &) -> bool = default;
    };

    struct SeqPartition
    {
        std::vector<std::vector<int>> blocks;
        std::vector<IndexRange> ranges;
        int k = 0;
        SetKind kind = SetKind::KSmall;

        auto count() const -> int { return static_cast<int>(blocks.size()); }

        auto block_sizes() const -> std::vector<int>
        {
            std::vector<int> sizes;
            for (const auto & r : ranges)
                sizes.push_back(r.size());
            return sizes;
        }
    };

    /// every x <= n - |block| + k
    inline auto is_k_small_sequence(std::span<const int> block, int n, int k) -> bool
    {
        int size = static_cast<int>(block.size());
        return std::all_of(block.begin(), block.end(), [&](int x) { return x <= n - size + k; });
    }

    /// every x >= |block| - k - 1
    inline auto is_k_large_sequence(std::span<const int> block, int k) -> bool
    {
        int size = static_cast<int>(block.size());
        return std::all_of(block.begin(), block.end(), [&](int x) { return x >= size - k - 1; });
    }

    namespace detail
    {
        inline auto check_sorted_sequence(const DegreeSequence & s, int k) -> void
        {
            if (k < 0)
                throw InvalidInput("k must be non-negative");
            for (int i = 0; i < s.size(); ++i) {
                if (s.values[i] < 0 || s.values[i] > s.ambient - 1)
                    throw InvalidInput("sequence value " + std::to_string(s.values[i]) + " outside [0, "
                        + std::to_string(s.ambient - 1) + "]");
                if (i > 0 && s.values[i - 1] > s.values[i])
                    throw InvalidInput("sequence is not ascending at position " + std::to_string(i));
            }
        }

        inline auto append_block(SeqPartition & p, const DegreeSequence & s, IndexRange r) -> void
        {
            p.ranges.push_back(r);
            p.blocks.emplace_back(s.values.begin() + r.begin, s.values.begin() + r.end);
        }
    }

    /// b_i = n - 1 - a_i, re-sorted ascending. The vertex order (if any) is reversed along with it.
    inline auto complement_sequence(const DegreeSequence & s) -> DegreeSequence
    {
        DegreeSequence result;
        result.ambient = s.ambient;
        result.values.reserve(s.values.size());
        for (auto it = s.values.rbegin(); it != s.values.rend(); ++it)
            result.values.push_back(s.ambient - 1 - *it);
        if (s.order)
            result.order = std::vector<int>(s.order->rbegin(), s.order->rend());
        return result;
    }

    /// max { s : a_s <= n - s + k }, or 0 when no s qualifies.
    inline auto max_k_small_prefix(const DegreeSequence & s, int k) -> int
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        for (int size = s.size(); size >= 1; --size)
            if (s.values[size - 1] <= s.ambient - size + k)
                return size;
        return 0;
    }

    /// max { t : t - k - 1 <= a_{m-t+1} } (1-based positions into the ascending sequence).
    inline auto max_k_large_suffix(const DegreeSequence & s, int k) -> int
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        const int m = s.size();
        for (int size = m; size >= 1; --size)
            if (size - k - 1 <= s.values[m - size])
                return size;
        return 0;
    }

    /**
     * Greedy top-down cut: with the n_i smallest values still unassigned, the
     * next block is the p_i = min{n_i, n - a_{n_i} + k} largest of them. The
     * resulting block count is the minimum over all k-small partitions.
     */
    inline auto partition_k_small(const DegreeSequence & s, int k) -> SeqPartition
    {
        detail::check_sorted_sequence(s, k);
        SeqPartition result;
        result.k = k;
        result.kind = SetKind::KSmall;

        int remaining = s.size();
        while (remaining > 0) {
            int take = std::min(remaining, s.ambient - s.values[remaining - 1] + k);
            detail::append_block(result, s, {remaining - take, remaining});
            remaining -= take;
        }
        return result;
    }

    /**
     * Greedy bottom-up cut, dual of partition_k_small: the next block is the
     * q_i = min{n_i, b + k + 1} smallest unassigned values, b being the smallest.
     */
    inline auto partition_k_large(const DegreeSequence & s, int k) -> SeqPartition
    {
        detail::check_sorted_sequence(s, k);
        SeqPartition result;
        result.k = k;
        result.kind = SetKind::KLarge;

        int first = 0;
        const int m = s.size();
        while (first < m) {
            int take = std::min(m - first, s.values[first] + k + 1);
            detail::append_block(result, s, {first, first + take});
            first += take;
        }
        return result;
    }
}
