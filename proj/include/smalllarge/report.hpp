#pragma once

// Every bound for one graph at one k, as a JSON object keyed by bound name.
// Each entry is {value, applicable, reason, anchor}; verdicts come from the
// property catalog.

#include <smalllarge/bounds.hpp>
#include <smalllarge/checker.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/oracles.hpp>
#include <smalllarge/serialize.hpp>

#include <string>

namespace smalllarge
{
    namespace detail
    {
        class ReportBuilder
        {
        public:
            auto add(const std::string & name, Json value, std::string anchor) -> void
            {
                _entries[name] = {{"value", std::move(value)}, {"applicable", true}, {"reason", nullptr},
                    {"anchor", std::move(anchor)}};
            }

            auto skip(const std::string & name, std::string reason, std::string anchor, Json exhibit = nullptr) -> void
            {
                _entries[name] = {{"value", std::move(exhibit)}, {"applicable", false}, {"reason", std::move(reason)},
                    {"anchor", std::move(anchor)}};
            }

            auto optional(const std::string & name, const std::optional<int> & value, std::string anchor,
                const std::string & missing) -> void
            {
                if (value)
                    add(name, *value, std::move(anchor));
                else
                    skip(name, missing, std::move(anchor));
            }

            auto entries() -> Json & { return _entries; }

        private:
            Json _entries = Json::object();
        };

        inline auto chain_links_json(const std::vector<ChainLink> & links) -> Json
        {
            Json out = Json::array();
            for (const auto & link : links)
                out.push_back({{"label", link.label},
                    {"value", link.value ? rational_json(*link.value) : Json(nullptr)},
                    {"reason", link.reason.empty() ? Json(nullptr) : Json(link.reason)}});
            return out;
        }
    }

    inline auto bounds_report(const Graph & g, int k, const OracleLimits & limits = {}) -> Json
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        if (g.size() == 0)
            throw InvalidInput("bounds need at least one vertex");
        limits.validate();
        const int n = g.size();
        const long long e = g.edge_count();
        detail::ReportBuilder b;

        b.add("n", n, "vertex count");
        b.add("e", e, "edge count");
        b.add("k", k, "partition parameter");
        b.add("degrees", degree_sequence(g).values, "non-decreasing degree sequence");
        b.add("avg_degree", rational_json(Rational(2 * e, n)), "d = 2e/n");

        auto numbers = small_large_numbers(g, k);
        auto phi = min_k_small_partition(g, k);
        auto big_omega = min_k_large_partition(g, k);
        b.add("S", numbers.small, "S_k(G) = max{ s : d_s <= n - s + k }");
        b.add("L", numbers.large, "L_k(G) = max{ t : t - k - 1 <= d_(n-t+1) }");
        b.add("phi", phi.count, "minimum k-small partition");
        b.add("Omega", big_omega.count, "minimum k-large partition");

        auto h = harmonic_bounds(g, k);
        b.add("phi_harmonic", rational_json(h.phi_lower), "sum 1/(n - deg v + k)");
        b.add("phi_average", rational_json(h.phi_jensen), "n/(n - d + k)");
        b.add("Omega_harmonic", rational_json(h.omega_lower), "sum 1/(deg v + k + 1)");
        b.add("Omega_average", rational_json(h.omega_jensen), "n/(d + k + 1)");
        b.add("caro_wei", rational_json(h.cw), "sum 1/(deg v + 1)");
        b.add("caro_wei_complement", rational_json(h.cw_complement), "sum 1/(n - deg v)");

        auto w = degree_window_bounds(g, k);
        b.add("phi_ceiling_lower", integer_json(w.phi_lo), "ceil(n/(n - d + k))");
        if (w.phi_hi_applicable)
            b.add("phi_ceiling_upper", integer_json(w.phi_hi), "ceil(n/(n + k - Delta))");
        else
            b.skip("phi_ceiling_upper", "n + k - Delta <= 0", "ceil(n/(n + k - Delta))");
        b.add("Omega_ceiling_lower", integer_json(w.omega_lo), "ceil(n/(d + k + 1))");
        b.add("Omega_ceiling_upper", integer_json(w.omega_hi), "ceil(n/(delta + k + 1))");
        b.optional("phi_window_exact", w.window_phi_exact,
            "(r-2)n/(r-1) + k < d <= Delta <= (r-1)n/r + k => phi_k = r", "degree window hypothesis not met");
        b.optional("Omega_window_exact", w.window_omega_exact,
            "n/r - k - 1 <= delta <= d < n/(r-1) - k - 1 => Omega_k = r", "degree window hypothesis not met");
        b.optional("phi_regular_exact", w.regular_phi_exact, "G r-regular: phi_k = ceil(n/(n + k - r))",
            "graph is not regular");
        b.optional("Omega_regular_exact", w.regular_omega_exact, "G r-regular: Omega_k = ceil(n/(r + k + 1))",
            "graph is not regular");

        auto q = quadratic_upper_bounds(g, k);
        b.add("S_upper", root_bound_json(q.small_upper),
            "(n - Delta + k)/2 + sqrt((n - Delta + k)^2/4 + n Delta - 2e)");
        b.add("L_upper", root_bound_json(q.large_upper),
            "(delta + k + 1)/2 + sqrt((delta + k + 1)^2/4 - n delta + 2e)");
        b.add("hansen_zheng_alpha", integer_json(q.hansen_zheng_alpha), "floor(1/2 + sqrt(1/4 + n^2 - n - 2e))");
        b.add("chi_upper", integer_json(q.chi_upper), "floor(1/2 + sqrt(1/4 + 2e))");
        b.add("large_part_bound", root_bound_json(HalfRootBound{Integer(k + 1), Integer(k + 1) * (k + 1) + 8 * Integer(e)}),
            "(k + 1 + sqrt((k + 1)^2 + 8e)) / 2");

        // exact oracle values, when within limits
        const bool subset_ok = n <= limits.max_n_subset;
        const bool partition_ok = n <= limits.max_n_partition;
        const bool chromatic_ok = n <= limits.max_n_chromatic;
        auto when = [](bool ok, auto && fn) -> std::optional<int> { return ok ? std::optional<int>(fn()) : std::nullopt; };
        ExactVariantNumbers exact;
        exact.alpha = when(subset_ok, [&] { return exact_invariant(g, Invariant::Alpha, 0, limits); });
        exact.omega = when(subset_ok, [&] { return exact_invariant(g, Invariant::Omega, 0, limits); });
        auto variant = [&](SetKind kind) {
            return when(partition_ok, [&] { return exact_min_partition(g, SetClass{kind, 0}, limits).count; });
        };
        exact.phi_alpha = variant(SetKind::AlphaSmall);
        exact.phi_beta = variant(SetKind::BetaSmall);
        exact.big_omega_alpha = variant(SetKind::AlphaLarge);
        exact.big_omega_beta = variant(SetKind::BetaLarge);
        const std::string over = "oracle limit exceeded";
        b.optional("alpha", exact.alpha, "independence number (exact)", over);
        b.optional("omega", exact.omega, "clique number (exact)", over);
        b.optional("chi", when(chromatic_ok, [&] { return exact_invariant(g, Invariant::Chi, 0, limits); }),
            "chromatic number (exact)", over);
        b.optional("theta", when(chromatic_ok, [&] { return exact_invariant(g, Invariant::Theta, 0, limits); }),
            "clique cover number (exact)", over);
        b.optional("alpha_k", when(subset_ok, [&] { return exact_invariant(g, Invariant::AlphaK, k, limits); }),
            "k-independence number (exact)", over);
        b.optional("omega_k", when(subset_ok, [&] { return exact_invariant(g, Invariant::OmegaK, k, limits); }),
            "largest k-near-clique (exact)", over);
        b.optional("phi_alpha", exact.phi_alpha, "minimum alpha-small partition (exact)", over);
        b.optional("phi_beta", exact.phi_beta, "minimum beta-small partition (exact)", over);
        b.optional("Omega_alpha", exact.big_omega_alpha, "minimum alpha-large partition (exact)", over);
        b.optional("Omega_beta", exact.big_omega_beta, "minimum beta-large partition (exact)", over);

        auto eb = edge_bounds(g, k, exact);
        b.add("e_upper_from_phi", rational_json(eb.e_upper_from_phi), "(n^2 - n^2/phi_k + nk) / 2");
        b.add("e_lower_from_Omega", rational_json(eb.e_lower_from_omega), "(n^2/Omega_k - n(k + 1)) / 2");
        b.add("e_upper_chain", detail::chain_links_json(eb.upper_chain),
            "(x - 1)n^2/(2x) for x = phi^beta, phi^alpha, phi, omega");
        b.add("e_upper_chain_cw", detail::chain_links_json(eb.upper_chain_cw),
            "(x - 1)n^2/(2x) for x = CW(co-G), phi^alpha, phi, omega");
        b.add("e_lower_chain", detail::chain_links_json(eb.lower_chain),
            "n/2 (n/x - 1) for x = Omega^beta, Omega^alpha, Omega, alpha");
        b.add("e_lower_chain_cw", detail::chain_links_json(eb.lower_chain_cw),
            "n/2 (n/x - 1) for x = CW(G), Omega^alpha, Omega, alpha");

        for (auto kind : {SetKind::AlphaSmall, SetKind::BetaSmall, SetKind::AlphaLarge, SetKind::BetaLarge}) {
            auto vm = variant_max(g, kind);
            b.add("max_" + SetClass{kind, 0}.name(), {{"size", vm.size}, {"witness", vm.witness}},
                "longest feasible degree-order prefix");
        }

        // power means d_r with r-th powers, on G and on its complement
        auto pmb = dr_lower_bounds(g);
        auto side = [&](const std::string & prefix, const std::vector<PowerMeanCheck> & checks, int t,
                        const char * t_name) {
            for (const auto & c : checks) {
                std::string r = std::to_string(c.r);
                b.add(prefix + "d" + r + "_pow" + r, rational_json(Rational(c.sum_pow, n)),
                    "d_" + r + "^" + r + " = sum deg^" + r + " / n" + (prefix.empty() ? "" : " in co-G"));
                Json value = {{"sum_deg_pow", integer_json(c.sum_pow)}, {"holds", c.holds}, {"equality", c.equality},
                    {t_name, t}};
                std::string name = std::string(t_name) + "_power_mean_r" + r;
                std::string anchor = std::string(t_name) + " >= n/(n - d_" + r + ")";
                if (c.applicable)
                    b.add(name, value, anchor);
                else
                    b.skip(name, c.reason, anchor, value);
            }
        };
        side("", pmb.phi_side, pmb.phi, "phi");
        side("complement_", pmb.big_omega_side, pmb.big_omega, "Omega");

        // open statements: logged, never asserted
        auto fav = favaron_and_conjecture(g, k);
        if (k == 0)
            b.skip("favaron_as_written", "vacuous at k = 0", "sum k/(1 + k deg v)", rational_json(fav.favaron_as_written));
        else
            b.add("favaron_as_written", rational_json(fav.favaron_as_written), "sum k/(1 + k deg v)");
        b.add("conjecture_value", rational_json(fav.conjecture_value), "sum (k + 1)/(deg v + k + 1)");
        if (exact.phi_beta)
            b.add("phibeta_vs_cw_complement",
                {{"phi_beta", *exact.phi_beta}, {"cw_complement", rational_json(h.cw_complement)},
                    {"holds", Rational(*exact.phi_beta) <= h.cw_complement}},
                "phi^beta <= CW(co-G) (observation only)");
        else
            b.skip("phibeta_vs_cw_complement", over, "phi^beta <= CW(co-G) (observation only)");

        Json verdicts = Json::array();
        for (const auto & r : properties_at(g, k, to_graph6(g), limits))
            verdicts.push_back(result_json(r));

        return {{"graph6", to_graph6(g)}, {"k", k}, {"bounds", b.entries()}, {"verdicts", verdicts}};
    }
}
