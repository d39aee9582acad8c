#pragma once

#include <smalllarge/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smalllarge
{
    using Edge = std::pair<int, int>;

    /// Sorted ascending list of vertex ids.
    using VertexSet = std::vector<int>;

    /**
     * Undirected simple graph on vertices 0..n-1 with adjacency stored as packed
     * bit rows. Immutable once built; use build_graph() or complement().
     */
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n) :
            _n(n),
            _words(words_for(n)),
            _bits(static_cast<std::size_t>(n) * words_for(n), 0),
            _degrees(n, 0)
        {
            if (n < 0)
                throw InvalidInput("vertex count must be non-negative");
        }

        auto size() const -> int { return _n; }

        auto adjacent(int u, int v) const -> bool
        {
            return (_bits[index(u) + v / 64] >> (v % 64)) & 1u;
        }

        auto degree(int v) const -> int { return _degrees[v]; }

        auto degrees() const -> std::span<const int> { return _degrees; }

        auto edge_count() const -> long long
        {
            long long total = 0;
            for (auto d : _degrees)
                total += d;
            return total / 2;
        }

        auto max_degree() const -> int
        {
            return _n == 0 ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
        }

        auto min_degree() const -> int
        {
            return _n == 0 ? 0 : *std::min_element(_degrees.begin(), _degrees.end());
        }

        auto regular_degree() const -> std::optional<int>
        {
            if (_n == 0 || max_degree() != min_degree())
                return std::nullopt;
            return _degrees[0];
        }

        auto neighbours(int v) const -> VertexSet
        {
            VertexSet result;
            for (int u = 0; u < _n; ++u)
                if (adjacent(v, u))
                    result.push_back(u);
            return result;
        }

        auto row(int v) const -> std::span<const std::uint64_t>
        {
            return {_bits.data() + index(v), static_cast<std::size_t>(_words)};
        }

        /// Adjacency row as a single word; only meaningful for n <= 64.
        auto row_mask(int v) const -> std::uint64_t
        {
            return _words == 0 ? 0 : _bits[index(v)];
        }

        auto edges() const -> std::vector<Edge>
        {
            std::vector<Edge> result;
            for (int u = 0; u < _n; ++u)
                for (int v = u + 1; v < _n; ++v)
                    if (adjacent(u, v))
                        result.emplace_back(u, v);
            return result;
        }

        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a._n == b._n && a._bits == b._bits;
        }

        friend auto build_graph(int n, std::span<const Edge> edges) -> Graph;
        friend auto complement(const Graph & g) -> Graph;

    private:
        static auto words_for(int n) -> int { return n <= 0 ? 0 : (n + 63) / 64; }

        auto index(int v) const -> std::size_t { return static_cast<std::size_t>(v) * _words; }

        auto set_edge(int u, int v) -> void
        {
            auto & a = _bits[index(u) + v / 64];
            auto bit = std::uint64_t{1} << (v % 64);
            if (a & bit)
                return;
            a |= bit;
            _bits[index(v) + u / 64] |= std::uint64_t{1} << (u % 64);
            ++_degrees[u];
            ++_degrees[v];
        }

        int _n = 0;
        int _words = 0;
        std::vector<std::uint64_t> _bits;
        std::vector<int> _degrees;
    };

    /// Duplicate pairs (in either orientation) collapse to one edge.
    inline auto build_graph(int n, std::span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has a vertex outside [0, "
                    + std::to_string(n) + ")");
            if (u == v)
                throw InvalidInput("loop edge at vertex " + std::to_string(u));
            g.set_edge(u, v);
        }
        return g;
    }

    inline auto build_graph(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    inline auto build_graph(int n, const std::vector<Edge> & edges) -> Graph
    {
        return build_graph(n, std::span<const Edge>(edges));
    }

    inline auto complement(const Graph & g) -> Graph
    {
        Graph result(g._n);
        for (int u = 0; u < g._n; ++u) {
            for (int w = 0; w < g._words; ++w) {
                std::uint64_t valid = ~std::uint64_t{0};
                int remaining = g._n - 64 * w;
                if (remaining < 64)
                    valid = (std::uint64_t{1} << remaining) - 1;
                std::uint64_t bits = ~g._bits[g.index(u) + w] & valid;
                if (w == u / 64)
                    bits &= ~(std::uint64_t{1} << (u % 64));
                result._bits[result.index(u) + w] = bits;
            }
            result._degrees[u] = g._n - 1 - g._degrees[u];
        }
        return result;
    }

    /**
     * Ascending integer sequence a_1 <= ... <= a_m with every value in
     * [0, ambient - 1]. When derived from a graph, order[i] is the vertex whose
     * degree is values[i]; equal degrees are ordered by ascending vertex id.
     */
    struct DegreeSequence
    {
        std::vector<int> values;
        int ambient = 0;
        std::optional<std::vector<int>> order;

        auto size() const -> int { return static_cast<int>(values.size()); }
    };

    /// Validating constructor for sequences that do not come from a graph.
    inline auto make_sequence(std::vector<int> values, int ambient) -> DegreeSequence
    {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 0 || values[i] > ambient - 1)
                throw InvalidInput("sequence value " + std::to_string(values[i]) + " outside [0, "
                    + std::to_string(ambient - 1) + "]");
            if (i > 0 && values[i - 1] > values[i])
                throw InvalidInput("sequence is not ascending at position " + std::to_string(i));
        }
        return DegreeSequence{std::move(values), ambient, std::nullopt};
    }

    /// Counting sort over [0, n-1]; stable, so ties keep ascending vertex id.
    inline auto degree_sequence(const Graph & g) -> DegreeSequence
    {
        int n = g.size();
        std::vector<int> start(n + 1, 0);
        for (int v = 0; v < n; ++v)
            ++start[g.degree(v) + 1];
        for (int d = 0; d < n; ++d)
            start[d + 1] += start[d];

        DegreeSequence result{std::vector<int>(n), n, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) {
            int slot = start[g.degree(v)]++;
            result.values[slot] = g.degree(v);
            (*result.order)[slot] = v;
        }
        return result;
    }

    inline auto mask_of(std::span<const int> vertices) -> std::uint64_t
    {
        std::uint64_t mask = 0;
        for (auto v : vertices)
            mask |= std::uint64_t{1} << v;
        return mask;
    }

    inline auto vertices_of(std::uint64_t mask) -> VertexSet
    {
        VertexSet result;
        while (mask) {
            result.push_back(std::countr_zero(mask));
            mask &= mask - 1;
        }
        return result;
    }
}
