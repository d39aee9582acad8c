#pragma once

// Closed-form bounds on phi_k, Omega_k, S_k, L_k and e(G). Every value is an
// exact integer or rational; square roots are carried as HalfRootBound and
// r-th roots are eliminated by comparing r-th powers.

#include <smalllarge/exact.hpp>
#include <smalllarge/graph.hpp>
#include <smalllarge/invariants.hpp>

#include <optional>
#include <string>
#include <vector>

namespace smalllarge
{
    /// sum of deg(v)^r over a vertex set; d_r^r = sum / count.
    struct PowerMean
    {
        Integer sum;
        int count = 0;
        int r = 1;

        auto power() const -> Rational { return Rational(sum, count); }

        auto approx() const -> double { return std::pow(to_double(power()), 1.0 / r); }
    };

    inline auto power_mean_degree(const Graph & g, std::span<const int> a, int r) -> PowerMean
    {
        if (a.empty())
            throw InvalidInput("power mean of an empty vertex set");
        if (r < 1)
            throw InvalidInput("power mean exponent must be positive");
        detail::check_vertex_set(g, a);
        PowerMean result{0, static_cast<int>(a.size()), r};
        for (auto v : a)
            result.sum += pow_int(Integer(g.degree(v)), r);
        return result;
    }

    inline auto power_mean_degree(const Graph & g, int r) -> PowerMean
    {
        std::vector<int> all(g.size());
        for (int v = 0; v < g.size(); ++v)
            all[v] = v;
        return power_mean_degree(g, all, r);
    }

    struct HarmonicBounds
    {
        Rational phi_lower;   // sum 1/(n - deg + k)
        Rational omega_lower; // sum 1/(deg + k + 1)
        Rational phi_jensen;  // n / (n - d + k)
        Rational omega_jensen; // n / (d + k + 1)
        Rational cw;           // sum 1/(deg + 1)
        Rational cw_complement; // sum 1/(n - deg)
    };

    inline auto harmonic_bounds(const Graph & g, int k) -> HarmonicBounds
    {
        const int n = g.size();
        if (n == 0)
            throw InvalidInput("harmonic bounds need at least one vertex");
        HarmonicBounds h;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            h.phi_lower += Rational(1, n - d + k);
            h.omega_lower += Rational(1, d + k + 1);
            h.cw += Rational(1, d + 1);
            h.cw_complement += Rational(1, n - d);
        }
        Integer nn = Integer(n) * n, twice_e = 2 * Integer(g.edge_count());
        // d = 2e / n
        h.phi_jensen = Rational(nn, nn - twice_e + Integer(k) * n);
        h.omega_jensen = Rational(nn, twice_e + Integer(k + 1) * n);
        return h;
    }

    struct DegreeWindow
    {
        Integer phi_lo, phi_hi;
        bool phi_hi_applicable = true;
        Integer omega_lo, omega_hi;
        /// phi_k = r forced by the average/maximum degree window
        std::optional<int> window_phi_exact;
        /// Omega_k = r forced by the minimum/average degree window
        std::optional<int> window_omega_exact;
        std::optional<int> regular_phi_exact;
        std::optional<int> regular_omega_exact;
    };

    inline auto degree_window_bounds(const Graph & g, int k) -> DegreeWindow
    {
        const int n = g.size();
        if (n == 0)
            throw InvalidInput("degree window bounds need at least one vertex");
        const Integer N = n, K = k, twice_e = 2 * Integer(g.edge_count());
        const int delta = g.min_degree(), Delta = g.max_degree();

        DegreeWindow w;
        w.phi_lo = ceil_of(Rational(N * N, N * N - twice_e + K * N));
        if (k <= Delta)
            w.phi_hi = ceil_of(Rational(N, N + K - Delta));
        else {
            w.phi_hi = 1;
            w.phi_hi_applicable = false;
        }
        w.omega_lo = ceil_of(Rational(N * N, twice_e + (K + 1) * N));
        w.omega_hi = ceil_of(Rational(N, Integer(delta) + K + 1));

        for (int r = 2; r <= n + 2; ++r) {
            const Integer R = r;
            // (r-2)/(r-1) n + k < 2e/n  and  Delta <= (r-1)/r n + k
            bool lower = (R - 2) * N * N + K * N * (R - 1) < twice_e * (R - 1);
            bool upper = Integer(Delta) * R <= (R - 1) * N + K * R;
            if (lower && upper) {
                w.window_phi_exact = r;
                break;
            }
        }
        for (int r = 2; r <= n + 1; ++r) {
            const Integer R = r;
            // n/r - k - 1 <= delta  and  2e/n < n/(r-1) - k - 1
            bool lower = N <= R * (Integer(delta) + K + 1);
            bool upper = (twice_e + N * (K + 1)) * (R - 1) < N * N;
            if (lower && upper) {
                w.window_omega_exact = r;
                break;
            }
        }
        if (auto r = g.regular_degree()) {
            w.regular_phi_exact = static_cast<int>(ceil_of(Rational(N, N + K - *r)));
            w.regular_omega_exact = static_cast<int>(ceil_of(Rational(N, Integer(*r) + K + 1)));
        }
        return w;
    }

    /// Exact minimum-partition numbers that only the oracles can supply.
    struct ExactVariantNumbers
    {
        std::optional<int> omega, alpha;
        std::optional<int> phi_alpha, phi_beta;
        std::optional<int> big_omega_alpha, big_omega_beta;
    };

    struct ChainLink
    {
        std::string label;
        std::optional<Rational> value;
        std::string reason;
    };

    struct EdgeBounds
    {
        Rational e_upper_from_phi;
        Rational e_lower_from_omega;
        /// Upper bounds (x-1) n^2 / (2x), weakest-to-strongest as read right to left.
        std::vector<ChainLink> upper_chain;
        std::vector<ChainLink> upper_chain_cw;
        /// Lower bounds n/2 (n/x - 1).
        std::vector<ChainLink> lower_chain;
        std::vector<ChainLink> lower_chain_cw;
    };

    /// (x - 1) n^2 / (2x)
    inline auto turan_edge_upper(const Rational & x, int n) -> Rational
    {
        return (x - 1) * Integer(n) * n / (2 * x);
    }

    /// n/2 (n/x - 1)
    inline auto turan_edge_lower(const Rational & x, int n) -> Rational
    {
        return Rational(n, 2) * (Rational(n) / x - 1);
    }

    inline auto edge_bounds(const Graph & g, int k, const ExactVariantNumbers & exact = {}) -> EdgeBounds
    {
        const int n = g.size();
        if (n == 0)
            throw InvalidInput("edge bounds need at least one vertex");
        const Integer N = n;
        int phi = min_k_small_partition(g, k).count;
        int big_omega = min_k_large_partition(g, k).count;
        int phi0 = min_k_small_partition(g, 0).count;
        int big_omega0 = min_k_large_partition(g, 0).count;
        auto h = harmonic_bounds(g, 0);

        EdgeBounds b;
        b.e_upper_from_phi = Rational(1, 2) * (Rational(N * N) - Rational(N * N, phi) + Rational(N * k));
        b.e_lower_from_omega = Rational(1, 2) * (Rational(N * N, big_omega) - Rational(N * (k + 1)));

        auto link = [&](std::string label, std::optional<int> x, bool upper) {
            if (! x)
                return ChainLink{std::move(label), std::nullopt, "exact value needs the partition oracle"};
            Rational v = upper ? turan_edge_upper(*x, n) : turan_edge_lower(*x, n);
            return ChainLink{std::move(label), v, ""};
        };
        auto rational_link = [&](std::string label, const Rational & x, bool upper) {
            return ChainLink{std::move(label), upper ? turan_edge_upper(x, n) : turan_edge_lower(x, n), ""};
        };

        b.upper_chain = {link("phi_beta", exact.phi_beta, true), link("phi_alpha", exact.phi_alpha, true),
            link("phi", phi0, true), link("omega", exact.omega, true)};
        b.upper_chain_cw = {rational_link("cw_complement", h.cw_complement, true),
            link("phi_alpha", exact.phi_alpha, true), link("phi", phi0, true), link("omega", exact.omega, true)};
        b.lower_chain = {link("Omega_beta", exact.big_omega_beta, false),
            link("Omega_alpha", exact.big_omega_alpha, false), link("Omega", big_omega0, false),
            link("alpha", exact.alpha, false)};
        b.lower_chain_cw = {rational_link("cw", h.cw, false), link("Omega_alpha", exact.big_omega_alpha, false),
            link("Omega", big_omega0, false), link("alpha", exact.alpha, false)};
        return b;
    }

    struct QuadraticBounds
    {
        HalfRootBound small_upper; // S_k <= (n-Delta+k)/2 + sqrt((n-Delta+k)^2/4 + n Delta - 2e)
        HalfRootBound large_upper; // L_k <= (delta+k+1)/2 + sqrt((delta+k+1)^2/4 - n delta + 2e)
        Integer hansen_zheng_alpha; // floor(1/2 + sqrt(1/4 + n^2 - n - 2e))
        Integer chi_upper;          // floor(1/2 + sqrt(1/4 + 2e))
    };

    inline auto quadratic_upper_bounds(const Graph & g, int k) -> QuadraticBounds
    {
        const Integer N = g.size(), E = Integer(g.edge_count());
        const Integer Delta = g.max_degree(), delta = g.min_degree();
        QuadraticBounds q;
        Integer c = N - Delta + k;
        q.small_upper = {c, c * c + 4 * (N * Delta - 2 * E)};
        Integer c2 = delta + k + 1;
        q.large_upper = {c2, c2 * c2 + 4 * (2 * E - N * delta)};
        q.hansen_zheng_alpha = HalfRootBound{1, (2 * N - 1) * (2 * N - 1) - 8 * E}.floor();
        q.chi_upper = HalfRootBound{1, 1 + 8 * E}.floor();
        return q;
    }

    /// t >= n / (n - d_r), decided as t^r * sum <= n^(r+1) (t-1)^r.
    inline auto dominates_power_mean(int t, const PowerMean & pm, int n) -> bool
    {
        const unsigned r = static_cast<unsigned>(pm.r);
        return pow_int(Integer(t), r) * pm.sum <= pow_int(Integer(n), r + 1) * pow_int(Integer(t - 1), r);
    }

    /// t == n / (n - d_r)
    inline auto matches_power_mean(int t, const PowerMean & pm, int n) -> bool
    {
        const unsigned r = static_cast<unsigned>(pm.r);
        return pow_int(Integer(t), r) * pm.sum == pow_int(Integer(n), r + 1) * pow_int(Integer(t - 1), r);
    }

    struct PowerMeanCheck
    {
        int r = 1;
        Integer sum_pow;
        bool holds = true;
        bool equality = false;
        bool applicable = true;
        std::string reason;
    };

    struct PowerMeanBounds
    {
        int phi = 0;
        int big_omega = 0;
        std::vector<PowerMeanCheck> phi_side;      // phi >= n/(n - d_r(G))
        std::vector<PowerMeanCheck> big_omega_side; // Omega >= n/(n - d_r(co-G))
    };

    /**
     * Applicability of the r-th power-mean bound for a partition number t:
     * always for r <= t, unconditionally for r = 3, for r = 4 unless t = 2.
     */
    inline auto power_mean_applicability(int r, int t) -> std::pair<bool, std::string>
    {
        if (r <= t)
            return {true, ""};
        if (r == 3)
            return {true, ""};
        if (r == 4)
            return t != 2 ? std::pair<bool, std::string>{true, ""}
                          : std::pair<bool, std::string>{false, "partition number is 2"};
        return {false, "r exceeds the partition number"};
    }

    inline auto power_mean_checks(const Graph & g, int t) -> std::vector<PowerMeanCheck>
    {
        std::vector<PowerMeanCheck> result;
        for (int r = 1; r <= std::max(4, t); ++r) {
            auto pm = power_mean_degree(g, r);
            auto [applicable, reason] = power_mean_applicability(r, t);
            result.push_back({r, pm.sum, dominates_power_mean(t, pm, g.size()), matches_power_mean(t, pm, g.size()),
                applicable, reason});
        }
        return result;
    }

    inline auto dr_lower_bounds(const Graph & g) -> PowerMeanBounds
    {
        if (g.size() == 0)
            throw InvalidInput("power-mean bounds need at least one vertex");
        PowerMeanBounds b;
        b.phi = min_k_small_partition(g, 0).count;
        b.big_omega = min_k_large_partition(g, 0).count;
        b.phi_side = power_mean_checks(g, b.phi);
        b.big_omega_side = power_mean_checks(complement(g), b.big_omega);
        return b;
    }

    struct FavaronValues
    {
        Rational favaron_as_written; // sum k / (1 + k deg)
        Rational conjecture_value;   // sum (k+1) / (deg + k + 1)
    };

    inline auto favaron_and_conjecture(const Graph & g, int k) -> FavaronValues
    {
        FavaronValues f;
        for (int v = 0; v < g.size(); ++v) {
            int d = g.degree(v);
            f.favaron_as_written += Rational(k, 1 + k * d);
            f.conjecture_value += Rational(k + 1, d + k + 1);
        }
        return f;
    }

    namespace detail
    {
        /// Sizes of the connected components if g is a disjoint union of cliques.
        inline auto clique_component_sizes(const Graph & g) -> std::optional<std::vector<int>>
        {
            const int n = g.size();
            std::vector<bool> seen(n, false);
            std::vector<int> sizes;
            for (int v = 0; v < n; ++v) {
                if (seen[v])
                    continue;
                auto block = g.neighbours(v);
                block.push_back(v);
                for (auto u : block) {
                    if (seen[u] || g.degree(u) + 1 != static_cast<int>(block.size()))
                        return std::nullopt;
                    for (auto w : block)
                        if (w != u && ! g.adjacent(u, w))
                            return std::nullopt;
                }
                for (auto u : block)
                    seen[u] = true;
                sizes.push_back(static_cast<int>(block.size()));
            }
            return sizes;
        }
    }

    /// Number of cliques if g is a disjoint union of equal-size cliques.
    inline auto equal_clique_union_count(const Graph & g) -> std::optional<int>
    {
        auto sizes = detail::clique_component_sizes(g);
        if (! sizes || sizes->empty())
            return std::nullopt;
        for (auto s : *sizes)
            if (s != sizes->front())
                return std::nullopt;
        return static_cast<int>(sizes->size());
    }

    /// Number of parts if g is a complete multipartite graph with equal parts.
    inline auto balanced_complete_multipartite_parts(const Graph & g) -> std::optional<int>
    {
        return equal_clique_union_count(complement(g));
    }
}
