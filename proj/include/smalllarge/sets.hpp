#pragma once

#include <smalllarge/exact.hpp>
#include <smalllarge/graph.hpp>

#include <string>
#include <vector>

namespace smalllarge
{
    enum class SetKind
    {
        KSmall,
        KLarge,
        KIndependent,
        KNearClique,
        AlphaSmall,
        BetaSmall,
        AlphaLarge,
        BetaLarge
    };

    /// A set class from the small/large family; k is ignored by the
    /// alpha/beta variants.
    struct SetClass
    {
        SetKind kind = SetKind::KSmall;
        int k = 0;

        static auto small(int k) -> SetClass { return {SetKind::KSmall, k}; }
        static auto large(int k) -> SetClass { return {SetKind::KLarge, k}; }
        static auto independent(int k) -> SetClass { return {SetKind::KIndependent, k}; }
        static auto near_clique(int k) -> SetClass { return {SetKind::KNearClique, k}; }
        static auto alpha_small() -> SetClass { return {SetKind::AlphaSmall, 0}; }
        static auto beta_small() -> SetClass { return {SetKind::BetaSmall, 0}; }
        static auto alpha_large() -> SetClass { return {SetKind::AlphaLarge, 0}; }
        static auto beta_large() -> SetClass { return {SetKind::BetaLarge, 0}; }

        auto has_k() const -> bool
        {
            return kind == SetKind::KSmall || kind == SetKind::KLarge || kind == SetKind::KIndependent
                || kind == SetKind::KNearClique;
        }

        auto name() const -> std::string
        {
            switch (kind) {
            case SetKind::KSmall: return "KSmall(" + std::to_string(k) + ")";
            case SetKind::KLarge: return "KLarge(" + std::to_string(k) + ")";
            case SetKind::KIndependent: return "KIndependent(" + std::to_string(k) + ")";
            case SetKind::KNearClique: return "KNearClique(" + std::to_string(k) + ")";
            case SetKind::AlphaSmall: return "AlphaSmall";
            case SetKind::BetaSmall: return "BetaSmall";
            case SetKind::AlphaLarge: return "AlphaLarge";
            case SetKind::BetaLarge: return "BetaLarge";
            }
            return "?";
        }

        friend auto operator==(const SetClass &, const SetClass &) -> bool = default;
    };

    namespace detail
    {
        inline auto check_vertex_set(const Graph & g, std::span<const int> a) -> void
        {
            std::vector<bool> seen(g.size(), false);
            for (auto v : a) {
                if (v < 0 || v >= g.size())
                    throw InvalidInput("vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.size()) + ")");
                if (seen[v])
                    throw InvalidInput("vertex " + std::to_string(v) + " repeated in set");
                seen[v] = true;
            }
        }

        inline auto neighbours_inside(const Graph & g, int v, std::span<const int> a) -> int
        {
            int count = 0;
            for (auto u : a)
                if (g.adjacent(v, u))
                    ++count;
            return count;
        }
    }

    /**
     * Membership test for every set class. The empty set belongs to every class.
     * Harmonic-sum classes are decided in exact rational arithmetic.
     */
    inline auto classify_set(const Graph & g, std::span<const int> a, SetClass cls) -> bool
    {
        detail::check_vertex_set(g, a);
        const int n = g.size();
        const int size = static_cast<int>(a.size());
        if (size == 0)
            return true;

        switch (cls.kind) {
        case SetKind::KSmall:
            return std::all_of(a.begin(), a.end(), [&](int v) { return g.degree(v) <= n - size + cls.k; });
        case SetKind::KLarge:
            return std::all_of(a.begin(), a.end(), [&](int v) { return g.degree(v) >= size - cls.k - 1; });
        case SetKind::KIndependent:
            return std::all_of(a.begin(), a.end(), [&](int v) { return detail::neighbours_inside(g, v, a) <= cls.k; });
        case SetKind::KNearClique:
            return std::all_of(
                a.begin(), a.end(), [&](int v) { return detail::neighbours_inside(g, v, a) >= size - cls.k - 1; });
        case SetKind::AlphaSmall: {
            Rational sum = 0;
            for (auto v : a)
                sum += Rational(1, n - g.degree(v));
            return sum <= 1;
        }
        case SetKind::AlphaLarge: {
            Rational sum = 0;
            for (auto v : a)
                sum += Rational(1, g.degree(v) + 1);
            return sum <= 1;
        }
        case SetKind::BetaSmall: {
            long long sum = 0;
            for (auto v : a)
                sum += g.degree(v);
            // d(A) <= n - |A|
            return sum <= static_cast<long long>(n - size) * size;
        }
        case SetKind::BetaLarge: {
            long long sum = 0;
            for (auto v : a)
                sum += g.degree(v);
            return sum >= static_cast<long long>(size) * (size - 1);
        }
        }
        return false;
    }

    struct TaggedBlock
    {
        VertexSet vertices;
        SetClass tag;
    };

    struct VertexPartition
    {
        std::vector<TaggedBlock> blocks;
        std::string source;

        auto count() const -> int { return static_cast<int>(blocks.size()); }
    };

    struct PartitionVerdict
    {
        bool ok = true;
        std::string reason;
        int block = -1;

        explicit operator bool() const { return ok; }
    };

    /// Disjoint, covering, non-empty blocks that each pass their own tag.
    inline auto validate_partition(const Graph & g, const VertexPartition & p) -> PartitionVerdict
    {
        std::vector<bool> seen(g.size(), false);
        for (int i = 0; i < p.count(); ++i) {
            const auto & block = p.blocks[i].vertices;
            if (block.empty())
                return {false, "empty block", i};
            for (auto v : block) {
                if (v < 0 || v >= g.size())
                    return {false, "vertex out of range", i};
                if (seen[v])
                    return {false, "blocks overlap", i};
                seen[v] = true;
            }
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            return {false, "not a cover", -1};
        for (int i = 0; i < p.count(); ++i)
            if (! classify_set(g, p.blocks[i].vertices, p.blocks[i].tag))
                return {false, "block violates " + p.blocks[i].tag.name(), i};
        return {};
    }
}
