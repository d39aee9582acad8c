#pragma once

// Structured and seeded random graph families, including the sharpness
// constructions for the small/large bounds.

#include <smalllarge/errors.hpp>
#include <smalllarge/graph.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace smalllarge
{
    inline auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    namespace detail
    {
        inline auto require(bool ok, const std::string & message) -> void
        {
            if (! ok)
                throw InvalidInput(message);
        }

        inline auto require_order(int n) -> void { require(n >= 0, "vertex count must be non-negative"); }
    }

    inline auto empty_graph(int n) -> Graph
    {
        detail::require_order(n);
        return Graph(n);
    }

    inline auto complete_graph(int n) -> Graph { return complement(empty_graph(n)); }

    /// K_{1,leaves}: centre 0, leaves 1..leaves.
    inline auto star_graph(int leaves) -> Graph
    {
        detail::require_order(leaves);
        std::vector<Edge> edges;
        for (int v = 1; v <= leaves; ++v)
            edges.emplace_back(0, v);
        return build_graph(leaves + 1, edges);
    }

    inline auto path_graph(int n) -> Graph
    {
        detail::require_order(n);
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return build_graph(n, edges);
    }

    inline auto cycle_graph(int n) -> Graph
    {
        detail::require(n >= 3, "cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return build_graph(n, edges);
    }

    /// Complete multipartite graph with parts as equal as possible; vertex v lies in part v mod parts.
    inline auto turan_graph(int n, int parts) -> Graph
    {
        detail::require_order(n);
        detail::require(parts >= 1, "turan needs at least one part");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u % parts != v % parts)
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    /// Circulant with offsets 1..r/2, plus n/2 when r is odd.
    inline auto regular_circulant(int n, int r) -> Graph
    {
        detail::require(n >= 1, "circulant needs at least one vertex");
        detail::require(r >= 0 && r < n, "circulant degree must lie in [0, n-1]");
        detail::require(r % 2 == 0 || n % 2 == 0, "odd-degree circulant needs an even vertex count");
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v) {
            for (int s = 1; s <= r / 2; ++s)
                edges.emplace_back(v, (v + s) % n);
            if (r % 2 == 1 && v < n / 2)
                edges.emplace_back(v, v + n / 2);
        }
        return build_graph(n, edges);
    }

    /// Independent coin flips over the pairs (0,1), (0,2), ..., in that order.
    inline auto gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        detail::require_order(n);
        detail::require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        const bool always = p >= 1.0;
        const auto threshold = always ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uint64_t draw = rng(); always || draw < threshold)
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    /// Pairing model, rejecting loops and multi-edges; gives up after 1000 attempts.
    inline auto random_regular(int n, int r, std::uint64_t seed) -> Graph
    {
        detail::require_order(n);
        detail::require(r >= 0 && (n == 0 || r < n), "regular degree must lie in [0, n-1]");
        detail::require((static_cast<long long>(n) * r) % 2 == 0, "n*r must be even");
        std::mt19937_64 rng(seed);
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i)
                points.push_back(v);

        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::shuffle(points.begin(), points.end(), rng);
            std::vector<Edge> edges;
            std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
            bool ok = true;
            for (std::size_t i = 0; i < points.size() && ok; i += 2) {
                int u = points[i], v = points[i + 1];
                if (u == v || used[u][v])
                    ok = false;
                else {
                    used[u][v] = used[v][u] = true;
                    edges.emplace_back(u, v);
                }
            }
            if (ok)
                return build_graph(n, edges);
        }
        throw InvalidInput("random_regular: pairing model rejected 1000 attempts");
    }

    /**
     * Independent set {0..q-1} and clique {q..2q-1}; independent vertex i is
     * joined to clique vertex q + (i + j) mod q for j = 0..k, i.e. k+1
     * disjoint perfect matchings by cyclic shifts.
     */
    inline auto obs7_g1(int q, int k) -> Graph
    {
        detail::require(k >= 0, "k must be non-negative");
        detail::require(q > 2 * k + 2, "obs7_g1 needs q > 2k+2");
        std::vector<Edge> edges;
        for (int u = q; u < 2 * q; ++u)
            for (int v = u + 1; v < 2 * q; ++v)
                edges.emplace_back(u, v);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j <= k; ++j)
                edges.emplace_back(i, q + (i + j) % q);
        return build_graph(2 * q, edges);
    }

    namespace detail
    {
        inline auto two_cliques(int n) -> std::vector<Edge>
        {
            require(n >= 1, "clique size must be positive");
            std::vector<Edge> edges;
            for (int base : {0, n})
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        edges.emplace_back(base + u, base + v);
            return edges;
        }
    }

    /// Two copies of K_n joined by the perfect matching i -- i+n.
    inline auto two_cliques_matching(int n) -> Graph
    {
        auto edges = detail::two_cliques(n);
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, i + n);
        return build_graph(2 * n, edges);
    }

    /// Two copies of K_n with vertex 0 of the first joined to every vertex of the second.
    inline auto two_cliques_cone(int n) -> Graph
    {
        auto edges = detail::two_cliques(n);
        for (int i = 0; i < n; ++i)
            edges.emplace_back(0, i + n);
        return build_graph(2 * n, edges);
    }

    inline auto petersen_graph() -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return build_graph(10, edges);
    }

    struct FamilyParams
    {
        std::optional<int> n, r, parts, q, k;
        std::optional<double> p;
        std::uint64_t seed = 0;
    };

    inline auto family_names() -> std::vector<std::string>
    {
        return {"empty", "complete", "star", "cycle", "path", "turan", "regular_circulant", "gnp", "random_regular",
            "obs7_g1", "two_cliques_matching", "two_cliques_cone", "petersen"};
    }

    /// Dispatch by family name; missing parameters raise InvalidInput.
    inline auto generate(const std::string & family, const FamilyParams & params) -> Graph
    {
        auto need = [&](const std::optional<int> & value, const char * name) {
            if (! value)
                throw InvalidInput("family " + family + " needs --" + name);
            return *value;
        };
        if (family == "empty")
            return empty_graph(need(params.n, "n"));
        if (family == "complete")
            return complete_graph(need(params.n, "n"));
        if (family == "star")
            return star_graph(need(params.n, "n"));
        if (family == "cycle")
            return cycle_graph(need(params.n, "n"));
        if (family == "path")
            return path_graph(need(params.n, "n"));
        if (family == "turan")
            return turan_graph(need(params.n, "n"), need(params.parts, "parts"));
        if (family == "regular_circulant")
            return regular_circulant(need(params.n, "n"), need(params.r, "r"));
        if (family == "gnp") {
            if (! params.p)
                throw InvalidInput("family gnp needs --p");
            return gnp(need(params.n, "n"), *params.p, params.seed);
        }
        if (family == "random_regular")
            return random_regular(need(params.n, "n"), need(params.r, "r"), params.seed);
        if (family == "obs7_g1")
            return obs7_g1(need(params.q, "q"), need(params.k, "k"));
        if (family == "two_cliques_matching")
            return two_cliques_matching(need(params.n, "n"));
        if (family == "two_cliques_cone")
            return two_cliques_cone(need(params.n, "n"));
        if (family == "petersen")
            return petersen_graph();
        throw InvalidInput("unknown family: " + family);
    }
}
