#pragma once

// Property harness: a fixed catalog of inequalities evaluated per graph and
// per k, an optimality audit of the greedy partitions, and the counterexample
// hunt for the two open statements. Results stream as JSON lines.

#include <smalllarge/bounds.hpp>
#include <smalllarge/generators.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/io.hpp>
#include <smalllarge/oracles.hpp>
#include <smalllarge/serialize.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace smalllarge
{
    enum class Status
    {
        Pass,
        Fail,
        Inapplicable
    };

    inline auto status_name(Status s) -> std::string
    {
        switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inapplicable: return "inapplicable";
        }
        return "?";
    }

    struct CheckResult
    {
        std::string graph_id;
        std::string property;
        std::string anchor;
        int k = 0;
        Status status = Status::Pass;
        std::string reason;
        /// null on pass; {graph6, n, values} on fail; {exhibit} for logged inapplicable comparisons
        Json witness;
    };

    inline auto result_json(const CheckResult & r) -> Json
    {
        Json j = {{"graph_id", r.graph_id}, {"property", r.property}, {"anchor", r.anchor}, {"k", r.k},
            {"status", status_name(r.status)}};
        if (! r.reason.empty())
            j["reason"] = r.reason;
        if (! r.witness.is_null())
            j["witness"] = r.witness;
        return j;
    }

    struct PropertyInfo
    {
        std::string name;
        std::string anchor;
        bool per_k = true;
    };

    namespace detail
    {
        struct Outcome
        {
            Status status = Status::Pass;
            std::string reason;
            Json values;
        };

        inline auto verdict(bool ok, Json values, std::string why) -> Outcome
        {
            if (ok)
                return {Status::Pass, "", std::move(values)};
            return {Status::Fail, std::move(why), std::move(values)};
        }

        inline auto not_applicable(std::string why, Json exhibit = nullptr) -> Outcome
        {
            return {Status::Inapplicable, std::move(why), std::move(exhibit)};
        }

        /// First position where a chain meant to be non-increasing goes up, or -1.
        inline auto descending_violation(const std::vector<Rational> & chain) -> int
        {
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                if (chain[i] < chain[i + 1])
                    return static_cast<int>(i);
            return -1;
        }

        inline auto chain_json(const std::vector<std::string> & labels, const std::vector<Rational> & chain) -> Json
        {
            Json j = Json::object();
            for (std::size_t i = 0; i < chain.size(); ++i)
                j[labels[i]] = rational_json(chain[i]);
            return j;
        }

        inline auto chain_verdict(const std::vector<std::string> & labels, const std::vector<Rational> & chain)
            -> Outcome
        {
            int bad = descending_violation(chain);
            if (bad < 0)
                return verdict(true, chain_json(labels, chain), "");
            return verdict(false, chain_json(labels, chain), labels[bad] + " < " + labels[bad + 1]);
        }

        /// Per-k values shared by several properties.
        struct KValues
        {
            SmallLargeNumbers numbers;
            PartitionNumber phi;
            PartitionNumber big_omega;
        };

        class SuiteContext
        {
        public:
            SuiteContext(const Graph & graph, const OracleLimits & limits) :
                g(graph), co(complement(graph)), n(graph.size()), e(graph.edge_count()), limits(limits)
            {
                subset_ok = n <= limits.max_n_subset;
                partition_ok = n <= limits.max_n_partition;
                chromatic_ok = n <= limits.max_n_chromatic;
            }

            const Graph & g;
            Graph co;
            int n;
            long long e;
            OracleLimits limits;
            bool subset_ok = false, partition_ok = false, chromatic_ok = false;

            auto at(int k) -> const KValues &
            {
                auto it = _per_k.find(k);
                if (it == _per_k.end()) {
                    KValues v{small_large_numbers(g, k), min_k_small_partition(g, k), min_k_large_partition(g, k)};
                    it = _per_k.emplace(k, std::move(v)).first;
                }
                return it->second;
            }

            auto alpha() -> std::optional<int> { return cached(_alpha, subset_ok, [&] { return exact_invariant(g, Invariant::Alpha, 0, limits); }); }
            auto omega() -> std::optional<int> { return cached(_omega, subset_ok, [&] { return exact_invariant(g, Invariant::Omega, 0, limits); }); }
            auto chi() -> std::optional<int> { return cached(_chi, chromatic_ok, [&] { return exact_invariant(g, Invariant::Chi, 0, limits); }); }
            auto theta() -> std::optional<int> { return cached(_theta, chromatic_ok, [&] { return exact_invariant(g, Invariant::Theta, 0, limits); }); }

            auto variant_partition(SetKind kind) -> std::optional<int>
            {
                if (! partition_ok)
                    return std::nullopt;
                auto it = _variants.find(kind);
                if (it == _variants.end())
                    it = _variants.emplace(kind, exact_min_partition(g, SetClass{kind, 0}, limits).count).first;
                return it->second;
            }

            auto exact_numbers() -> ExactVariantNumbers
            {
                return {omega(), alpha(), variant_partition(SetKind::AlphaSmall), variant_partition(SetKind::BetaSmall),
                    variant_partition(SetKind::AlphaLarge), variant_partition(SetKind::BetaLarge)};
            }

        private:
            template <typename Fn>
            static auto cached(std::optional<std::optional<int>> & slot, bool ok, Fn && fn) -> std::optional<int>
            {
                if (! slot)
                    slot = ok ? std::optional<int>(fn()) : std::nullopt;
                return *slot;
            }

            std::map<int, KValues> _per_k;
            std::optional<std::optional<int>> _alpha, _omega, _chi, _theta;
            std::map<SetKind, int> _variants;
        };

        using Evaluator = std::function<Outcome(SuiteContext &, int)>;

        struct PropertyEntry
        {
            PropertyInfo info;
            Evaluator evaluate;
        };

        inline auto R(long long x) -> Rational { return Rational(x); }

        inline auto oracle_missing(const char * which) -> Outcome
        {
            return not_applicable(std::string(which) + " oracle limit exceeded");
        }

        // ---- per-k properties ------------------------------------------------

        inline auto complement_duality(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            auto co_numbers = small_large_numbers(c.co, k);
            int phi_co = min_k_small_partition(c.co, k).count;
            int omega_co = min_k_large_partition(c.co, k).count;
            Json values = {{"phi", v.phi.count}, {"Omega_of_complement", omega_co}, {"Omega", v.big_omega.count},
                {"phi_of_complement", phi_co}, {"S", v.numbers.small}, {"L_of_complement", co_numbers.large},
                {"L", v.numbers.large}, {"S_of_complement", co_numbers.small}};
            bool ok = v.phi.count == omega_co && v.big_omega.count == phi_co && v.numbers.small == co_numbers.large
                && v.numbers.large == co_numbers.small;
            return verdict(ok, values, "complement values differ");
        }

        inline auto class_containment(SuiteContext & c, int k) -> Outcome
        {
            if (! c.partition_ok)
                return oracle_missing("subset enumeration");
            const std::uint64_t states = std::uint64_t{1} << c.n;
            for (std::uint64_t mask = 0; mask < states; ++mask) {
                auto a = vertices_of(mask);
                bool small = classify_set(c.g, a, SetClass::small(k));
                bool large = classify_set(c.g, a, SetClass::large(k));
                std::string bad;
                if (classify_set(c.g, a, SetClass::independent(k)) && ! small)
                    bad = "k-independent set is not k-small";
                else if (classify_set(c.g, a, SetClass::near_clique(k)) && ! large)
                    bad = "k-near-clique is not k-large";
                else if (small != classify_set(c.co, a, SetClass::large(k)))
                    bad = "k-small in G differs from k-large in the complement";
                if (! bad.empty())
                    return verdict(false, {{"set", a}}, bad);
            }
            return verdict(true, nullptr, "");
        }

        inline auto k_independence_below_S(SuiteContext & c, int k) -> Outcome
        {
            if (! c.subset_ok)
                return oracle_missing("subset");
            const auto & v = c.at(k);
            int alpha_k = exact_invariant(c.g, Invariant::AlphaK, k, c.limits);
            int omega_k = exact_invariant(c.g, Invariant::OmegaK, k, c.limits);
            Json values = {{"alpha_k", alpha_k}, {"S", v.numbers.small}, {"omega_k", omega_k}, {"L", v.numbers.large}};
            if (alpha_k > v.numbers.small)
                return verdict(false, values, "alpha_k > S_k");
            return verdict(omega_k <= v.numbers.large, values, "omega_k > L_k");
        }

        inline auto S_times_phi_covers_n(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            Json values = {{"S", v.numbers.small}, {"phi", v.phi.count}, {"L", v.numbers.large},
                {"Omega", v.big_omega.count}, {"n", c.n}};
            if (static_cast<long long>(v.numbers.small) * v.phi.count < c.n)
                return verdict(false, values, "S_k * phi_k < n");
            return verdict(static_cast<long long>(v.numbers.large) * v.big_omega.count >= c.n, values,
                "L_k * Omega_k < n");
        }

        inline auto formula_vs_oracle(SuiteContext & c, SetClass cls, int formula, const VertexSet & witness)
            -> Outcome
        {
            if (! c.subset_ok)
                return oracle_missing("subset");
            auto exact = exact_max_set(c.g, cls, c.limits);
            Json values = {{"formula", formula}, {"oracle", exact.size}, {"witness", witness},
                {"oracle_witness", exact.witness}};
            if (static_cast<int>(witness.size()) != formula || ! classify_set(c.g, witness, cls))
                return verdict(false, values, "canonical witness does not certify the formula value");
            return verdict(formula == exact.size, values, "formula differs from exhaustive maximum");
        }

        inline auto S_prefix_formula_exact(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            return formula_vs_oracle(c, SetClass::small(k), v.numbers.small, v.numbers.small_witness);
        }

        inline auto L_suffix_formula_exact(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            return formula_vs_oracle(c, SetClass::large(k), v.numbers.large, v.numbers.large_witness);
        }

        inline auto S_degree_window(SuiteContext & c, int k) -> Outcome
        {
            const int Delta = c.g.max_degree(), delta = c.g.min_degree();
            if (k > Delta)
                return not_applicable("k exceeds the maximum degree");
            int s = c.at(k).numbers.small;
            Json values = {{"lower", c.n - Delta + k}, {"S", s}, {"upper", c.n - delta + k}};
            return verdict(c.n - Delta + k <= s && s <= c.n - delta + k, values, "S_k outside the degree window");
        }

        inline auto L_degree_window(SuiteContext & c, int k) -> Outcome
        {
            const int Delta = c.g.max_degree(), delta = c.g.min_degree();
            if (k > c.n - delta - 1)
                return not_applicable("k exceeds n - delta - 1");
            int l = c.at(k).numbers.large;
            Json values = {{"lower", delta + k + 1}, {"L", l}, {"upper", Delta + k + 1}};
            return verdict(delta + k + 1 <= l && l <= Delta + k + 1, values, "L_k outside the degree window");
        }

        inline auto regular_S_L_exact(SuiteContext & c, int k) -> Outcome
        {
            auto r = c.g.regular_degree();
            if (! r)
                return not_applicable("graph is not regular");
            bool small_side = k <= *r, large_side = k <= c.n - *r - 1;
            if (! small_side && ! large_side)
                return not_applicable("k exceeds both regular-degree thresholds");
            const auto & v = c.at(k);
            Json values = {{"r", *r}, {"S", v.numbers.small}, {"L", v.numbers.large}};
            if (small_side && v.numbers.small != c.n - *r + k)
                return verdict(false, values, "S_k != n - r + k");
            return verdict(! large_side || v.numbers.large == *r + k + 1, values, "L_k != r + k + 1");
        }

        inline auto small_large_split_check(SuiteContext & c, int k) -> Outcome
        {
            auto split = smalllarge::small_large_split(c.g, k);
            VertexPartition p;
            p.source = "split";
            if (! split.small.empty())
                p.blocks.push_back({split.small, SetClass::small(k)});
            if (! split.large.empty())
                p.blocks.push_back({split.large, SetClass::large(k)});
            Json values = {{"small", split.small}, {"large", split.large}};
            auto check = validate_partition(c.g, p);
            if (! check)
                return verdict(false, values, check.reason);
            int biggest = static_cast<int>(std::max(split.small.size(), split.large.size()));
            return verdict(2 * biggest >= c.n, values, "both parts smaller than n/2");
        }

        inline auto S_plus_L_window(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            int sum = v.numbers.small + v.numbers.large;
            Json values = {{"S", v.numbers.small}, {"L", v.numbers.large}, {"n", c.n}};
            return verdict(c.n <= sum && sum <= c.n + 1 + 2 * k, values, "S_k + L_k outside [n, n + 1 + 2k]");
        }

        inline auto large_part_edge_bound(SuiteContext & c, int k) -> Outcome
        {
            auto split = smalllarge::small_large_split(c.g, k);
            HalfRootBound bound{Integer(k + 1), Integer(k + 1) * (k + 1) + 8 * Integer(c.e)};
            int size = static_cast<int>(split.large.size());
            Json values = {{"large_part", size}, {"bound", root_bound_json(bound)}};
            return verdict(bound.admits(size), values, "|V_L| exceeds the quadratic bound");
        }

        inline auto phi_harmonic_lower(SuiteContext & c, int k) -> Outcome
        {
            auto h = harmonic_bounds(c.g, k);
            return chain_verdict({"phi", "harmonic_sum", "average_degree_bound"},
                {R(c.at(k).phi.count), h.phi_lower, h.phi_jensen});
        }

        inline auto Omega_harmonic_lower(SuiteContext & c, int k) -> Outcome
        {
            auto h = harmonic_bounds(c.g, k);
            return chain_verdict({"Omega", "harmonic_sum", "average_degree_bound"},
                {R(c.at(k).big_omega.count), h.omega_lower, h.omega_jensen});
        }

        inline auto edge_upper_from_phi(SuiteContext & c, int k) -> Outcome
        {
            auto b = edge_bounds(c.g, k);
            return chain_verdict({"bound", "e"}, {b.e_upper_from_phi, R(c.e)});
        }

        inline auto edge_lower_from_Omega(SuiteContext & c, int k) -> Outcome
        {
            auto b = edge_bounds(c.g, k);
            return chain_verdict({"e", "bound"}, {R(c.e), b.e_lower_from_omega});
        }

        inline auto phi_ceiling_window(SuiteContext & c, int k) -> Outcome
        {
            auto w = degree_window_bounds(c.g, k);
            int phi = c.at(k).phi.count;
            Json values = {{"lower", integer_json(w.phi_lo)}, {"phi", phi}, {"upper", integer_json(w.phi_hi)},
                {"upper_applicable", w.phi_hi_applicable}};
            if (w.phi_lo > phi)
                return verdict(false, values, "phi_k below the ceiling lower bound");
            return verdict(! w.phi_hi_applicable || phi <= w.phi_hi, values, "phi_k above the ceiling upper bound");
        }

        inline auto Omega_ceiling_window(SuiteContext & c, int k) -> Outcome
        {
            auto w = degree_window_bounds(c.g, k);
            int big_omega = c.at(k).big_omega.count;
            Json values = {{"lower", integer_json(w.omega_lo)}, {"Omega", big_omega},
                {"upper", integer_json(w.omega_hi)}};
            return verdict(w.omega_lo <= big_omega && big_omega <= w.omega_hi, values,
                "Omega_k outside the ceiling window");
        }

        inline auto phi_window_exact(SuiteContext & c, int k) -> Outcome
        {
            auto w = degree_window_bounds(c.g, k);
            if (! w.window_phi_exact)
                return not_applicable("degree window hypothesis not met");
            int phi = c.at(k).phi.count;
            return verdict(phi == *w.window_phi_exact, {{"r", *w.window_phi_exact}, {"phi", phi}}, "phi_k != r");
        }

        inline auto Omega_window_exact(SuiteContext & c, int k) -> Outcome
        {
            auto w = degree_window_bounds(c.g, k);
            if (! w.window_omega_exact)
                return not_applicable("degree window hypothesis not met");
            int big_omega = c.at(k).big_omega.count;
            return verdict(big_omega == *w.window_omega_exact, {{"r", *w.window_omega_exact}, {"Omega", big_omega}},
                "Omega_k != r");
        }

        inline auto regular_phi_Omega_exact(SuiteContext & c, int k) -> Outcome
        {
            auto w = degree_window_bounds(c.g, k);
            if (! w.regular_phi_exact)
                return not_applicable("graph is not regular");
            const auto & v = c.at(k);
            Json values = {{"phi", v.phi.count}, {"phi_formula", *w.regular_phi_exact}, {"Omega", v.big_omega.count},
                {"Omega_formula", *w.regular_omega_exact}};
            return verdict(v.phi.count == *w.regular_phi_exact && v.big_omega.count == *w.regular_omega_exact, values,
                "regular-graph formula differs");
        }

        inline auto S_quadratic_upper(SuiteContext & c, int k) -> Outcome
        {
            auto q = quadratic_upper_bounds(c.g, k);
            int s = c.at(k).numbers.small;
            Json values = {{"S", s}, {"bound", root_bound_json(q.small_upper)}};
            if (c.subset_ok) {
                int alpha_k = exact_invariant(c.g, Invariant::AlphaK, k, c.limits);
                values["alpha_k"] = alpha_k;
                if (alpha_k > s)
                    return verdict(false, values, "alpha_k > S_k");
            }
            if (! q.small_upper.admits(s))
                return verdict(false, values, "S_k exceeds the quadratic bound");
            auto r = c.g.regular_degree();
            if (r && k <= *r)
                return verdict(q.small_upper.attained_by(s), values, "bound not attained on a regular graph");
            return verdict(true, values, "");
        }

        inline auto L_quadratic_upper(SuiteContext & c, int k) -> Outcome
        {
            auto q = quadratic_upper_bounds(c.g, k);
            int l = c.at(k).numbers.large;
            Json values = {{"L", l}, {"bound", root_bound_json(q.large_upper)}};
            if (c.subset_ok) {
                int omega_k = exact_invariant(c.g, Invariant::OmegaK, k, c.limits);
                values["omega_k"] = omega_k;
                if (omega_k > l)
                    return verdict(false, values, "omega_k > L_k");
            }
            if (! q.large_upper.admits(l))
                return verdict(false, values, "L_k exceeds the quadratic bound");
            auto r = c.g.regular_degree();
            if (r && k <= c.n - *r - 1)
                return verdict(q.large_upper.attained_by(l), values, "bound not attained on a regular graph");
            return verdict(true, values, "");
        }

        inline auto partition_minimal(SuiteContext & c, const PartitionNumber & greedy, SetClass cls) -> Outcome
        {
            auto own = validate_partition(c.g, greedy.partition);
            if (! own)
                return verdict(false, {{"partition", partition_json(greedy.partition)}}, own.reason);
            if (! c.partition_ok)
                return oracle_missing("partition");
            auto exact = exact_min_partition(c.g, cls, c.limits);
            Json values = {{"greedy", greedy.count}, {"oracle", exact.count}};
            auto oracle_check = validate_partition(c.g, exact.partition);
            if (! oracle_check)
                return verdict(false, values, "oracle partition invalid: " + oracle_check.reason);
            return verdict(greedy.count == exact.count, values, "greedy count differs from the exhaustive minimum");
        }

        inline auto small_partition_minimal(SuiteContext & c, int k) -> Outcome
        {
            return partition_minimal(c, c.at(k).phi, SetClass::small(k));
        }

        inline auto large_partition_minimal(SuiteContext & c, int k) -> Outcome
        {
            return partition_minimal(c, c.at(k).big_omega, SetClass::large(k));
        }

        inline auto trivial_partition_threshold(SuiteContext & c, int k) -> Outcome
        {
            const auto & v = c.at(k);
            bool small_all = k >= c.g.max_degree();
            bool large_all = k >= c.n - c.g.min_degree() - 1;
            Json values = {{"phi", v.phi.count}, {"S", v.numbers.small}, {"Omega", v.big_omega.count},
                {"L", v.numbers.large}, {"Delta", c.g.max_degree()}, {"delta", c.g.min_degree()}};
            if ((v.phi.count == 1) != small_all || (v.numbers.small == c.n) != small_all)
                return verdict(false, values, "phi_k = 1 / S_k = n do not match k >= Delta");
            return verdict((v.big_omega.count == 1) == large_all && (v.numbers.large == c.n) == large_all, values,
                "Omega_k = 1 / L_k = n do not match k >= n - delta - 1");
        }

        // ---- k-free properties -----------------------------------------------

        inline auto greedy_decomposition_chain(SuiteContext & c, int) -> Outcome
        {
            auto dec = greedy_large_decomposition(c.g);
            int q = static_cast<int>(dec.independent_set.size());
            Json values = {{"q", q}, {"Omega", c.at(0).big_omega.count}, {"independent_set", dec.independent_set}};
            if (q != dec.large_blocks.count())
                return verdict(false, values, "block count differs from independent set size");
            for (int i = 0; i < q; ++i) {
                const auto & block = dec.large_blocks.blocks[i].vertices;
                if (std::find(block.begin(), block.end(), dec.independent_set[i]) == block.end())
                    return verdict(false, values, "x_i outside its block");
            }
            if (! classify_set(c.g, dec.independent_set, SetClass::independent(0)))
                return verdict(false, values, "selected vertices are not independent");
            auto check = validate_partition(c.g, dec.large_blocks);
            if (! check)
                return verdict(false, values, check.reason);
            if (c.at(0).big_omega.count > q)
                return verdict(false, values, "Omega > q");
            auto alpha = c.alpha();
            if (! alpha)
                return verdict(true, values, "");
            values["alpha"] = *alpha;
            return verdict(q <= *alpha, values, "q > alpha");
        }

        inline auto welsh_powell_chromatic_chain(SuiteContext & c, int) -> Outcome
        {
            int wp = 0;
            try {
                wp = welsh_powell(c.g);
            }
            catch (const std::logic_error & e) {
                return verdict(false, nullptr, e.what());
            }
            auto chi = c.chi();
            auto omega = c.omega();
            if (! chi || ! omega)
                return oracle_missing("chromatic/clique");
            return chain_verdict({"welsh_powell", "chi", "omega"}, {R(wp), R(*chi), R(*omega)});
        }

        inline auto clique_cover_chain(SuiteContext & c, int) -> Outcome
        {
            auto theta = c.theta();
            auto alpha = c.alpha();
            if (! theta || ! alpha)
                return oracle_missing("clique cover/independence");
            return chain_verdict({"S_0", "theta", "alpha"}, {R(c.at(0).numbers.small), R(*theta), R(*alpha)});
        }

        inline auto avg_degree_clique_chain(SuiteContext & c, int) -> Outcome
        {
            auto omega = c.omega();
            if (! omega)
                return oracle_missing("clique");
            auto h = harmonic_bounds(c.g, 0);
            return chain_verdict({"omega", "phi", "harmonic_sum", "average_degree_bound"},
                {R(*omega), R(c.at(0).phi.count), h.phi_lower, h.phi_jensen});
        }

        inline auto avg_degree_independence_chain(SuiteContext & c, int) -> Outcome
        {
            auto alpha = c.alpha();
            if (! alpha)
                return oracle_missing("independence");
            auto h = harmonic_bounds(c.g, 0);
            return chain_verdict({"alpha", "Omega", "caro_wei", "average_degree_bound"},
                {R(*alpha), R(c.at(0).big_omega.count), h.cw, h.omega_jensen});
        }

        inline auto hansen_zheng_refinement(SuiteContext & c, int) -> Outcome
        {
            auto theta = c.theta();
            auto alpha = c.alpha();
            if (! theta || ! alpha)
                return oracle_missing("clique cover/independence");
            auto q = quadratic_upper_bounds(c.g, 0);
            return chain_verdict({"hansen_zheng", "floor_S_upper", "S_0", "theta", "alpha"},
                {Rational(q.hansen_zheng_alpha), Rational(q.small_upper.floor()), R(c.at(0).numbers.small),
                    R(*theta), R(*alpha)});
        }

        inline auto chromatic_edge_refinement(SuiteContext & c, int) -> Outcome
        {
            auto chi = c.chi();
            auto omega = c.omega();
            if (! chi || ! omega)
                return oracle_missing("chromatic/clique");
            auto q = quadratic_upper_bounds(c.g, 0);
            return chain_verdict({"edge_bound", "floor_L_upper", "L_0", "chi", "omega"},
                {Rational(q.chi_upper), Rational(q.large_upper.floor()), R(c.at(0).numbers.large), R(*chi),
                    R(*omega)});
        }

        enum class MeanSide
        {
            Phi,
            Clique,
            BigOmega,
            Independence
        };

        enum class MeanRange
        {
            UpToPartitionNumber,
            Cubic,
            Quartic
        };

        /// x >= n / (n - d_r) for the side's bound x; d_r is taken in G or its complement.
        inline auto power_mean_property(SuiteContext & c, MeanSide side, MeanRange range) -> Outcome
        {
            const bool on_complement = side == MeanSide::BigOmega || side == MeanSide::Independence;
            const Graph & h = on_complement ? c.co : c.g;
            const int t = on_complement ? c.at(0).big_omega.count : c.at(0).phi.count;
            const char * t_name = on_complement ? "Omega" : "phi";

            std::optional<int> x;
            switch (side) {
            case MeanSide::Phi: x = c.at(0).phi.count; break;
            case MeanSide::Clique: x = c.omega(); break;
            case MeanSide::BigOmega: x = c.at(0).big_omega.count; break;
            case MeanSide::Independence: x = c.alpha(); break;
            }
            if (! x)
                return oracle_missing(side == MeanSide::Clique ? "clique" : "independence");

            // the structural equality case of each side
            auto extremal = [&]() -> bool {
                switch (side) {
                case MeanSide::Phi: {
                    auto r = c.g.regular_degree();
                    return r && static_cast<long long>(*r) * t == static_cast<long long>(c.n) * (t - 1);
                }
                case MeanSide::Clique: return balanced_complete_multipartite_parts(c.g) == x;
                case MeanSide::BigOmega: {
                    auto r = c.g.regular_degree();
                    return r && static_cast<long long>(*r + 1) * t == c.n;
                }
                case MeanSide::Independence: return equal_clique_union_count(c.g) == x;
                }
                return false;
            };

            std::vector<int> exponents;
            if (range == MeanRange::UpToPartitionNumber)
                for (int r = 1; r <= t; ++r)
                    exponents.push_back(r);
            else
                exponents.push_back(range == MeanRange::Cubic ? 3 : 4);

            Json values = {{"bound_value", *x}, {t_name, t}, {"n", c.n}};
            Json rows = Json::array();
            bool ok = true;
            std::string why;
            for (int r : exponents) {
                auto pm = power_mean_degree(h, r);
                bool holds = dominates_power_mean(*x, pm, c.n);
                bool equal = matches_power_mean(*x, pm, c.n);
                rows.push_back({{"r", r}, {"sum_deg_pow", integer_json(pm.sum)}, {"holds", holds}, {"equality", equal}});
                if (range == MeanRange::Quartic && t == 2) {
                    values["comparisons"] = rows;
                    return not_applicable(std::string(t_name) + " = 2", values);
                }
                if (! holds && ok) {
                    ok = false;
                    why = "bound exceeds the partition/clique value at r = " + std::to_string(r);
                }
                if (range != MeanRange::Quartic && ok && equal != extremal()) {
                    ok = false;
                    why = "equality case disagrees with the extremal structure at r = " + std::to_string(r);
                }
            }
            values["comparisons"] = rows;
            return verdict(ok, values, why);
        }

        inline auto variant_class_chain(SuiteContext & c, int) -> Outcome
        {
            if (! c.partition_ok)
                return oracle_missing("subset enumeration");
            const std::uint64_t states = std::uint64_t{1} << c.n;
            for (std::uint64_t mask = 0; mask < states; ++mask) {
                auto a = vertices_of(mask);
                bool s = classify_set(c.g, a, SetClass::small(0));
                bool sa = classify_set(c.g, a, SetClass::alpha_small());
                bool sb = classify_set(c.g, a, SetClass::beta_small());
                bool l = classify_set(c.g, a, SetClass::large(0));
                bool la = classify_set(c.g, a, SetClass::alpha_large());
                bool lb = classify_set(c.g, a, SetClass::beta_large());
                if ((s && ! sa) || (sa && ! sb))
                    return verdict(false, {{"set", a}}, "small-variant chain broken");
                if ((l && ! la) || (la && ! lb))
                    return verdict(false, {{"set", a}}, "large-variant chain broken");
            }
            return verdict(true, nullptr, "");
        }

        inline auto variant_max_exact(SuiteContext & c, int) -> Outcome
        {
            if (! c.subset_ok)
                return oracle_missing("subset");
            Json values = Json::object();
            for (auto kind : {SetKind::AlphaSmall, SetKind::BetaSmall, SetKind::AlphaLarge, SetKind::BetaLarge}) {
                SetClass cls{kind, 0};
                auto formula = variant_max(c.g, kind);
                auto exact = exact_max_set(c.g, cls, c.limits);
                values[cls.name()] = {{"formula", formula.size}, {"oracle", exact.size}};
                if (! classify_set(c.g, formula.witness, cls) || static_cast<int>(formula.witness.size()) != formula.size)
                    return verdict(false, values, cls.name() + " witness does not certify");
                if (formula.size != exact.size)
                    return verdict(false, values, cls.name() + " prefix maximum differs from exhaustive maximum");
            }
            return verdict(true, values, "");
        }

        inline auto average_degree_ratio_small(const SuiteContext & c) -> Rational
        {
            // n / (n - d) with d = 2e/n
            Integer nn = Integer(c.n) * c.n;
            return Rational(nn, nn - 2 * Integer(c.e));
        }

        inline auto average_degree_ratio_large(const SuiteContext & c) -> Rational
        {
            Integer nn = Integer(c.n) * c.n;
            return Rational(nn, 2 * Integer(c.e) + c.n);
        }

        inline auto small_variant_partition_chain(SuiteContext & c, int) -> Outcome
        {
            auto omega = c.omega();
            auto pa = c.variant_partition(SetKind::AlphaSmall);
            auto pb = c.variant_partition(SetKind::BetaSmall);
            if (! omega || ! pa || ! pb)
                return oracle_missing("partition");
            return chain_verdict({"omega", "phi", "phi_alpha", "phi_beta", "ceil_average_degree_bound"},
                {R(*omega), R(c.at(0).phi.count), R(*pa), R(*pb), Rational(ceil_of(average_degree_ratio_small(c)))});
        }

        inline auto small_variant_caro_wei_chain(SuiteContext & c, int) -> Outcome
        {
            auto pa = c.variant_partition(SetKind::AlphaSmall);
            if (! pa)
                return oracle_missing("partition");
            auto h = harmonic_bounds(c.g, 0);
            return chain_verdict({"phi_alpha", "caro_wei_complement", "average_degree_bound"},
                {R(*pa), h.cw_complement, average_degree_ratio_small(c)});
        }

        inline auto large_variant_partition_chain(SuiteContext & c, int) -> Outcome
        {
            auto alpha = c.alpha();
            auto pa = c.variant_partition(SetKind::AlphaLarge);
            auto pb = c.variant_partition(SetKind::BetaLarge);
            if (! alpha || ! pa || ! pb)
                return oracle_missing("partition");
            return chain_verdict({"alpha", "Omega", "Omega_alpha", "Omega_beta", "average_degree_bound"},
                {R(*alpha), R(c.at(0).big_omega.count), R(*pa), R(*pb), average_degree_ratio_large(c)});
        }

        inline auto large_variant_caro_wei_chain(SuiteContext & c, int) -> Outcome
        {
            auto pa = c.variant_partition(SetKind::AlphaLarge);
            if (! pa)
                return oracle_missing("partition");
            auto h = harmonic_bounds(c.g, 0);
            return chain_verdict({"Omega_alpha", "caro_wei", "average_degree_bound"},
                {R(*pa), h.cw, average_degree_ratio_large(c)});
        }

        /// links read left to right; upper chains increase, lower chains decrease.
        inline auto edge_chain(SuiteContext & c, const std::vector<ChainLink> & links, bool upper) -> Outcome
        {
            std::vector<std::string> labels{"e"};
            std::vector<Rational> chain{R(c.e)};
            for (const auto & link : links) {
                if (! link.value)
                    return oracle_missing("partition");
                labels.push_back(link.label);
                chain.push_back(*link.value);
            }
            if (upper) {
                std::reverse(labels.begin(), labels.end());
                std::reverse(chain.begin(), chain.end());
            }
            return chain_verdict(labels, chain);
        }

        inline auto small_variant_edge_chain(SuiteContext & c, int) -> Outcome
        {
            return edge_chain(c, edge_bounds(c.g, 0, c.exact_numbers()).upper_chain, true);
        }

        inline auto small_variant_caro_wei_edge_chain(SuiteContext & c, int) -> Outcome
        {
            return edge_chain(c, edge_bounds(c.g, 0, c.exact_numbers()).upper_chain_cw, true);
        }

        inline auto large_variant_edge_chain(SuiteContext & c, int) -> Outcome
        {
            return edge_chain(c, edge_bounds(c.g, 0, c.exact_numbers()).lower_chain, false);
        }

        inline auto large_variant_caro_wei_edge_chain(SuiteContext & c, int) -> Outcome
        {
            return edge_chain(c, edge_bounds(c.g, 0, c.exact_numbers()).lower_chain_cw, false);
        }

        inline auto small_variant_max_chain(SuiteContext & c, int) -> Outcome
        {
            auto alpha = c.alpha();
            if (! alpha)
                return oracle_missing("independence");
            auto q = quadratic_upper_bounds(c.g, 0);
            return chain_verdict({"hansen_zheng", "floor_S_upper", "S_beta", "S_alpha", "S_0", "alpha"},
                {Rational(q.hansen_zheng_alpha), Rational(q.small_upper.floor()),
                    R(variant_max(c.g, SetKind::BetaSmall).size), R(variant_max(c.g, SetKind::AlphaSmall).size),
                    R(c.at(0).numbers.small), R(*alpha)});
        }

        inline auto large_variant_max_chain(SuiteContext & c, int) -> Outcome
        {
            auto omega = c.omega();
            if (! omega)
                return oracle_missing("clique");
            auto q = quadratic_upper_bounds(c.g, 0);
            return chain_verdict({"edge_bound", "floor_L_upper", "L_beta", "L_alpha", "L_0", "omega"},
                {Rational(q.chi_upper), Rational(q.large_upper.floor()), R(variant_max(c.g, SetKind::BetaLarge).size),
                    R(variant_max(c.g, SetKind::AlphaLarge).size), R(c.at(0).numbers.large), R(*omega)});
        }

        inline auto mean_entry(std::string name, std::string anchor, MeanSide side, MeanRange range) -> PropertyEntry
        {
            return {{std::move(name), std::move(anchor), false},
                [side, range](SuiteContext & c, int) { return power_mean_property(c, side, range); }};
        }

        inline auto catalog_entries() -> const std::vector<PropertyEntry> &
        {
            static const std::vector<PropertyEntry> entries = [] {
                std::vector<PropertyEntry> e = {
                    {{"complement_duality", "phi_k(G) = Omega_k(co-G); S_k(G) = L_k(co-G)"}, complement_duality},
                    {{"class_containment",
                         "k-independent => k-small; k-near-clique => k-large; k-small in G <=> k-large in co-G"},
                        class_containment},
                    {{"k_independence_below_S", "alpha_k(G) <= S_k(G); omega_k(G) <= L_k(G)"}, k_independence_below_S},
                    {{"S_times_phi_covers_n", "S_k(G) >= n / phi_k(G); L_k(G) >= n / Omega_k(G)"}, S_times_phi_covers_n},
                    {{"S_prefix_formula_exact", "S_k(G) = max{ s : d_s <= n - s + k }"}, S_prefix_formula_exact},
                    {{"L_suffix_formula_exact", "L_k(G) = max{ t : t - k - 1 <= d_(n-t+1) }"}, L_suffix_formula_exact},
                    {{"S_degree_window", "n - Delta + k <= S_k(G) <= n - delta + k"}, S_degree_window},
                    {{"L_degree_window", "delta + k + 1 <= L_k(G) <= Delta + k + 1"}, L_degree_window},
                    {{"regular_S_L_exact", "G r-regular: S_k = n - r + k, L_k = r + k + 1"}, regular_S_L_exact},
                    {{"small_large_split", "V = V_S + V_L, V_S k-small, V_L k-large, max(|V_S|, |V_L|) >= n/2"},
                        small_large_split_check},
                    {{"S_plus_L_window", "n <= S_k(G) + L_k(G) <= n + 1 + 2k"}, S_plus_L_window},
                    {{"large_part_edge_bound", "|V_L| <= (k + 1 + sqrt((k + 1)^2 + 8e)) / 2"}, large_part_edge_bound},
                    {{"phi_harmonic_lower", "phi_k >= sum 1/(n - deg v + k) >= n/(n - d + k)"}, phi_harmonic_lower},
                    {{"Omega_harmonic_lower", "Omega_k >= sum 1/(deg v + k + 1) >= n/(d + k + 1)"},
                        Omega_harmonic_lower},
                    {{"edge_upper_from_phi", "e <= (n^2 - n^2/phi_k + nk) / 2"}, edge_upper_from_phi},
                    {{"edge_lower_from_Omega", "e >= (n^2/Omega_k - n(k + 1)) / 2"}, edge_lower_from_Omega},
                    {{"phi_ceiling_window", "ceil(n/(n - d + k)) <= phi_k <= ceil(n/(n + k - Delta))"},
                        phi_ceiling_window},
                    {{"Omega_ceiling_window", "ceil(n/(d + k + 1)) <= Omega_k <= ceil(n/(delta + k + 1))"},
                        Omega_ceiling_window},
                    {{"phi_window_exact", "(r-2)n/(r-1) + k < d <= Delta <= (r-1)n/r + k => phi_k = r"},
                        phi_window_exact},
                    {{"Omega_window_exact", "n/r - k - 1 <= delta <= d < n/(r-1) - k - 1 => Omega_k = r"},
                        Omega_window_exact},
                    {{"regular_phi_Omega_exact", "G r-regular: phi_k = ceil(n/(n + k - r)), Omega_k = ceil(n/(r + k + 1))"},
                        regular_phi_Omega_exact},
                    {{"S_quadratic_upper", "alpha_k <= S_k <= (n - Delta + k)/2 + sqrt((n - Delta + k)^2/4 + n Delta - 2e)"},
                        S_quadratic_upper},
                    {{"L_quadratic_upper", "omega_k <= L_k <= (delta + k + 1)/2 + sqrt((delta + k + 1)^2/4 - n delta + 2e)"},
                        L_quadratic_upper},
                    {{"small_partition_minimal", "greedy k-small cut count = minimum k-small partition"},
                        small_partition_minimal},
                    {{"large_partition_minimal", "greedy k-large cut count = minimum k-large partition"},
                        large_partition_minimal},
                    {{"trivial_partition_threshold",
                         "phi_k = 1 <=> S_k = n <=> k >= Delta; Omega_k = 1 <=> L_k = n <=> k >= n - delta - 1"},
                        trivial_partition_threshold},
                    {{"greedy_decomposition_chain", "Omega(G) <= q <= alpha(G)", false}, greedy_decomposition_chain},
                    {{"welsh_powell_chromatic_chain", "omega <= chi <= max{t : t <= d_(n-t+1) + 1} = L_0", false},
                        welsh_powell_chromatic_chain},
                    {{"clique_cover_chain", "alpha <= theta <= S_0", false}, clique_cover_chain},
                    {{"avg_degree_clique_chain", "omega >= phi >= sum 1/(n - deg v) >= n/(n - d)", false},
                        avg_degree_clique_chain},
                    {{"avg_degree_independence_chain", "alpha >= Omega >= sum 1/(deg v + 1) >= n/(d + 1)", false},
                        avg_degree_independence_chain},
                    {{"hansen_zheng_refinement",
                         "alpha <= theta <= S_0 <= floor(S_upper) <= floor(1/2 + sqrt(1/4 + n^2 - n - 2e))", false},
                        hansen_zheng_refinement},
                    {{"chromatic_edge_refinement", "omega <= chi <= L_0 <= floor(L_upper) <= floor(1/2 + sqrt(1/4 + 2e))",
                         false},
                        chromatic_edge_refinement},
                };
                e.push_back(mean_entry("phi_power_mean_lower",
                    "r <= phi: phi >= n/(n - d_r(G)), equality iff n(phi - 1)/phi-regular", MeanSide::Phi,
                    MeanRange::UpToPartitionNumber));
                e.push_back(mean_entry("phi_cubic_mean_lower", "phi >= n/(n - d_3(G))", MeanSide::Phi, MeanRange::Cubic));
                e.push_back(mean_entry(
                    "phi_quartic_mean_lower", "phi != 2: phi >= n/(n - d_4(G))", MeanSide::Phi, MeanRange::Quartic));
                e.push_back(mean_entry("clique_power_mean_lower",
                    "r <= phi: omega >= n/(n - d_r(G)), equality iff balanced complete omega-partite", MeanSide::Clique,
                    MeanRange::UpToPartitionNumber));
                e.push_back(mean_entry("clique_cubic_mean_lower",
                    "omega >= n/(n - d_3(G)), equality iff balanced complete omega-partite", MeanSide::Clique,
                    MeanRange::Cubic));
                e.push_back(mean_entry("clique_quartic_mean_lower", "phi != 2: omega >= n/(n - d_4(G))",
                    MeanSide::Clique, MeanRange::Quartic));
                e.push_back(mean_entry("Omega_power_mean_lower",
                    "r <= Omega: Omega >= n/(n - d_r(co-G)), equality iff (n/Omega - 1)-regular", MeanSide::BigOmega,
                    MeanRange::UpToPartitionNumber));
                e.push_back(mean_entry(
                    "Omega_cubic_mean_lower", "Omega >= n/(n - d_3(co-G))", MeanSide::BigOmega, MeanRange::Cubic));
                e.push_back(mean_entry("Omega_quartic_mean_lower", "Omega != 2: Omega >= n/(n - d_4(co-G))",
                    MeanSide::BigOmega, MeanRange::Quartic));
                e.push_back(mean_entry("independence_power_mean_lower",
                    "r <= Omega: alpha >= n/(n - d_r(co-G)), equality iff alpha disjoint equal cliques",
                    MeanSide::Independence, MeanRange::UpToPartitionNumber));
                e.push_back(mean_entry("independence_cubic_mean_lower",
                    "alpha >= n/(n - d_3(co-G)), equality iff alpha disjoint equal cliques", MeanSide::Independence,
                    MeanRange::Cubic));
                e.push_back(mean_entry("independence_quartic_mean_lower", "Omega != 2: alpha >= n/(n - d_4(co-G))",
                    MeanSide::Independence, MeanRange::Quartic));
                std::vector<PropertyEntry> tail = {
                    {{"variant_class_chain", "small => alpha-small => beta-small; large => alpha-large => beta-large",
                         false},
                        variant_class_chain},
                    {{"variant_max_exact", "S^alpha, S^beta, L^alpha, L^beta = longest feasible degree-order prefix",
                         false},
                        variant_max_exact},
                    {{"small_variant_partition_chain", "omega >= phi >= phi^alpha >= phi^beta >= ceil(n/(n - d))", false},
                        small_variant_partition_chain},
                    {{"small_variant_caro_wei_chain", "phi^alpha >= CW(co-G) >= n/(n - d)", false},
                        small_variant_caro_wei_chain},
                    {{"large_variant_partition_chain", "alpha >= Omega >= Omega^alpha >= Omega^beta >= n/(d + 1)", false},
                        large_variant_partition_chain},
                    {{"large_variant_caro_wei_chain", "Omega^alpha >= CW(G) >= n/(d + 1)", false},
                        large_variant_caro_wei_chain},
                    {{"small_variant_edge_chain",
                         "e <= (x - 1)n^2/(2x) for x = phi^beta <= phi^alpha <= phi <= omega", false},
                        small_variant_edge_chain},
                    {{"small_variant_caro_wei_edge_chain",
                         "e <= (x - 1)n^2/(2x) for x = CW(co-G) <= phi^alpha <= phi <= omega", false},
                        small_variant_caro_wei_edge_chain},
                    {{"large_variant_edge_chain",
                         "e >= n/2 (n/x - 1) for x = Omega^beta <= Omega^alpha <= Omega <= alpha", false},
                        large_variant_edge_chain},
                    {{"large_variant_caro_wei_edge_chain",
                         "e >= n/2 (n/x - 1) for x = CW(G) <= Omega^alpha <= Omega <= alpha", false},
                        large_variant_caro_wei_edge_chain},
                    {{"small_variant_max_chain",
                         "alpha <= S_0 <= S^alpha <= S^beta <= floor(S_upper) <= floor(1/2 + sqrt(1/4 + n^2 - n - 2e))",
                         false},
                        small_variant_max_chain},
                    {{"large_variant_max_chain",
                         "omega <= L_0 <= L^alpha <= L^beta <= floor(L_upper) <= floor(1/2 + sqrt(1/4 + 2e))", false},
                        large_variant_max_chain},
                };
                e.insert(e.end(), tail.begin(), tail.end());
                return e;
            }();
            return entries;
        }

        inline auto make_result(const std::string & graph_id, const PropertyInfo & info, int k, Outcome outcome,
            const Graph & g) -> CheckResult
        {
            CheckResult r{graph_id, info.name, info.anchor, k, outcome.status, std::move(outcome.reason), nullptr};
            if (outcome.status == Status::Fail)
                r.witness = {{"graph6", to_graph6(g)}, {"n", g.size()}, {"values", std::move(outcome.values)}};
            else if (outcome.status == Status::Inapplicable && ! outcome.values.is_null())
                r.witness = {{"exhibit", std::move(outcome.values)}};
            return r;
        }

        inline auto evaluate_entry(SuiteContext & context, const PropertyEntry & entry, int k) -> Outcome
        {
            if (context.n == 0)
                return not_applicable("graph has no vertices");
            try {
                return entry.evaluate(context, k);
            }
            catch (const OracleLimitError & e) {
                return not_applicable(e.what());
            }
            catch (const std::logic_error & e) {
                return {Status::Fail, std::string("internal consistency: ") + e.what(), nullptr};
            }
        }
    }

    inline auto property_catalog() -> std::vector<PropertyInfo>
    {
        std::vector<PropertyInfo> infos;
        for (const auto & entry : detail::catalog_entries())
            infos.push_back(entry.info);
        return infos;
    }

    /// Every catalog property for k = 0..k_max, in catalog order within each k.
    inline auto property_suite(const Graph & g, int k_max, const std::string & graph_id = "graph",
        const OracleLimits & limits = {}) -> std::vector<CheckResult>
    {
        if (k_max < 0)
            throw InvalidInput("k_max must be non-negative");
        detail::SuiteContext context(g, limits);
        std::vector<CheckResult> results;
        for (int k = 0; k <= k_max; ++k)
            for (const auto & entry : detail::catalog_entries()) {
                detail::Outcome outcome = ! entry.info.per_k && k > 0
                    ? detail::not_applicable("statement has no k parameter")
                    : detail::evaluate_entry(context, entry, k);
                results.push_back(detail::make_result(graph_id, entry.info, k, std::move(outcome), g));
            }
        return results;
    }

    /// One property at one k (k-free properties are always evaluated at k = 0).
    inline auto check_property(const Graph & g, const std::string & property, int k,
        const std::string & graph_id = "graph", const OracleLimits & limits = {}) -> CheckResult
    {
        for (const auto & entry : detail::catalog_entries())
            if (entry.info.name == property) {
                detail::SuiteContext context(g, limits);
                int at = entry.info.per_k ? k : 0;
                return detail::make_result(graph_id, entry.info, at, detail::evaluate_entry(context, entry, at), g);
            }
        throw InvalidInput("unknown property: " + property);
    }

    /// Per-k properties at k and k-free properties at 0, sharing one oracle cache.
    inline auto properties_at(const Graph & g, int k, const std::string & graph_id = "graph",
        const OracleLimits & limits = {}) -> std::vector<CheckResult>
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        detail::SuiteContext context(g, limits);
        std::vector<CheckResult> results;
        for (const auto & entry : detail::catalog_entries()) {
            int at = entry.info.per_k ? k : 0;
            results.push_back(
                detail::make_result(graph_id, entry.info, at, detail::evaluate_entry(context, entry, at), g));
        }
        return results;
    }

    /// Names missing from a per-graph result list (the catalog must be complete for every k).
    inline auto missing_properties(const std::vector<CheckResult> & results, int k_max) -> std::vector<std::string>
    {
        std::set<std::pair<std::string, int>> seen;
        for (const auto & r : results)
            seen.emplace(r.property, r.k);
        std::vector<std::string> missing;
        for (int k = 0; k <= k_max; ++k)
            for (const auto & info : property_catalog())
                if (! seen.count({info.name, k}))
                    missing.push_back(info.name + "@k=" + std::to_string(k));
        return missing;
    }

    // ---- optimality audit ---------------------------------------------------

    struct AuditSummary
    {
        long long graphs = 0;
        long long checks = 0;
        long long mismatches = 0;
        std::vector<Json> failures;

        auto to_json() const -> Json
        {
            return {{"graphs", graphs}, {"checks", checks}, {"mismatches", mismatches}, {"failures", failures}};
        }
    };

    /// Greedy phi_k / Omega_k against the partition DP for k = 0..k_max.
    inline auto audit_graph(const Graph & g, const std::string & graph_id, int k_max, AuditSummary & summary,
        const OracleLimits & limits = {}) -> void
    {
        if (g.size() > limits.max_n_partition)
            throw OracleLimitError("audit_optimality", g.size(), limits.max_n_partition);
        ++summary.graphs;
        for (int k = 0; k <= k_max; ++k) {
            auto phi = min_k_small_partition(g, k);
            auto big_omega = min_k_large_partition(g, k);
            auto exact_small = exact_min_partition(g, SetClass::small(k), limits);
            auto exact_large = exact_min_partition(g, SetClass::large(k), limits);
            summary.checks += 2;
            auto report = [&](const char * which, int greedy, int exact, const std::string & reason) {
                ++summary.mismatches;
                summary.failures.push_back({{"graph_id", graph_id}, {"graph6", to_graph6(g)}, {"k", k},
                    {"class", which}, {"greedy", greedy}, {"oracle", exact}, {"reason", reason}});
            };
            if (phi.count != exact_small.count || ! validate_partition(g, phi.partition))
                report("ksmall", phi.count, exact_small.count, "count or partition mismatch");
            if (big_omega.count != exact_large.count || ! validate_partition(g, big_omega.partition))
                report("klarge", big_omega.count, exact_large.count, "count or partition mismatch");
        }
    }

    // ---- corpora and resume tokens -------------------------------------------

    struct CorpusSpec
    {
        enum class Kind
        {
            Enumerate,
            Random,
            List
        };

        Kind kind = Kind::Enumerate;
        int n_min = 1, n_max = 1;
        long long count = 0;
        std::vector<double> ps{0.5};
        std::uint64_t seed = 0;
        std::vector<std::pair<std::string, Graph>> graphs;
    };

    struct CorpusItem
    {
        std::string id;
        Graph graph;
    };

    namespace detail
    {
        inline auto format_p(double p) -> std::string
        {
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%g", p);
            return buffer;
        }

        inline auto random_item(const CorpusSpec & spec, long long index) -> CorpusItem
        {
            std::uint64_t s = splitmix64(spec.seed ^ static_cast<std::uint64_t>(index));
            int n = spec.n_min + static_cast<int>(s % static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1));
            double p = spec.ps[(s >> 32) % spec.ps.size()];
            return {"gnp:n=" + std::to_string(n) + ":p=" + format_p(p) + ":seed=" + std::to_string(s), gnp(n, p, s)};
        }

        inline auto split_token(const std::string & token) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::size_t start = 0;
            while (true) {
                auto colon = token.find(':', start);
                parts.push_back(token.substr(start, colon - start));
                if (colon == std::string::npos)
                    break;
                start = colon + 1;
            }
            return parts;
        }

        inline auto token_number(const std::string & text) -> unsigned long long
        {
            std::size_t used = 0;
            unsigned long long value = 0;
            try {
                value = std::stoull(text, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != text.size())
                throw InvalidInput("malformed resume token field: " + text);
            return value;
        }
    }

    /**
     * Walks the corpus from a resume token ("" = start). Tokens name the next
     * graph: "enumerate:<n>:<mask>", "random:<index>", "list:<index>".
     * fn(item, token_after) is called in corpus order.
     */
    template <typename Fn>
    auto for_each_graph(const CorpusSpec & spec, const std::string & resume, const OracleLimits & limits, Fn && fn)
        -> void
    {
        if (spec.n_min < 0 || spec.n_max < spec.n_min)
            throw InvalidInput("invalid vertex-count range");
        auto parts = resume.empty() ? std::vector<std::string>{} : detail::split_token(resume);
        switch (spec.kind) {
        case CorpusSpec::Kind::Enumerate: {
            if (spec.n_max > limits.max_n_enumerate)
                throw OracleLimitError("enumerate_graphs", spec.n_max, limits.max_n_enumerate);
            int n_start = spec.n_min;
            std::uint64_t mask_start = 0;
            if (! parts.empty()) {
                if (parts.size() != 3 || parts[0] != "enumerate")
                    throw InvalidInput("resume token does not match an enumeration corpus: " + resume);
                n_start = static_cast<int>(detail::token_number(parts[1]));
                mask_start = detail::token_number(parts[2]);
            }
            for (int n = n_start; n <= spec.n_max; ++n) {
                LabeledGraphs all(n, limits);
                for (std::uint64_t mask = n == n_start ? mask_start : 0; mask < all.count(); ++mask) {
                    std::string next = mask + 1 < all.count()
                        ? "enumerate:" + std::to_string(n) + ":" + std::to_string(mask + 1)
                        : "enumerate:" + std::to_string(n + 1) + ":0";
                    fn(CorpusItem{"enum:n=" + std::to_string(n) + ":mask=" + std::to_string(mask), all.at(mask)}, next);
                }
            }
            break;
        }
        case CorpusSpec::Kind::Random: {
            if (spec.ps.empty())
                throw InvalidInput("random corpus needs at least one edge probability");
            long long start = 0;
            if (! parts.empty()) {
                if (parts.size() != 2 || parts[0] != "random")
                    throw InvalidInput("resume token does not match a random corpus: " + resume);
                start = static_cast<long long>(detail::token_number(parts[1]));
            }
            for (long long i = start; i < spec.count; ++i)
                fn(detail::random_item(spec, i), "random:" + std::to_string(i + 1));
            break;
        }
        case CorpusSpec::Kind::List: {
            std::size_t start = 0;
            if (! parts.empty()) {
                if (parts.size() != 2 || parts[0] != "list")
                    throw InvalidInput("resume token does not match a graph list: " + resume);
                start = detail::token_number(parts[1]);
            }
            for (std::size_t i = start; i < spec.graphs.size(); ++i)
                fn(CorpusItem{spec.graphs[i].first, spec.graphs[i].second}, "list:" + std::to_string(i + 1));
            break;
        }
        }
    }

    /// Thread count: SMALLLARGE_THREADS if set, else hardware concurrency.
    inline auto worker_count() -> unsigned
    {
        if (const char * env = std::getenv("SMALLLARGE_THREADS")) {
            int value = std::atoi(env);
            if (value >= 1)
                return static_cast<unsigned>(value);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }

    /**
     * Append-only JSON-lines sink. A checkpoint line carrying the resume token
     * is written at the first graph boundary after every 10^4 records.
     */
    class ResultWriter
    {
    public:
        static constexpr long long checkpoint_interval = 10000;

        explicit ResultWriter(std::ostream & out) : _out(out) {}

        auto write_graph(const std::vector<CheckResult> & results, const std::string & next_token) -> void
        {
            for (const auto & r : results) {
                _out << result_json(r).dump() << '\n';
                ++_records;
                ++_since_checkpoint;
                ++_counts[status_name(r.status)];
            }
            ++_graphs;
            _next = next_token;
            if (_since_checkpoint >= checkpoint_interval) {
                _out << Json{{"checkpoint", {{"records", _records}, {"resume", next_token}}}}.dump() << '\n';
                _since_checkpoint = 0;
            }
        }

        auto finish(Json extra = Json::object()) -> void
        {
            extra["graphs"] = _graphs;
            extra["records"] = _records;
            extra["pass"] = _counts["pass"];
            extra["fail"] = _counts["fail"];
            extra["inapplicable"] = _counts["inapplicable"];
            extra["complete"] = true;
            _out << Json{{"summary", extra}}.dump() << '\n';
            _out.flush();
        }

        auto failures() -> long long { return _counts["fail"]; }
        auto records() const -> long long { return _records; }

    private:
        std::ostream & _out;
        long long _records = 0, _since_checkpoint = 0, _graphs = 0;
        std::map<std::string, long long> _counts;
        std::string _next;
    };

    /**
     * Evaluates eval(item) for every corpus graph, in parallel batches, and
     * hands results to sink(results, token) strictly in corpus order.
     */
    template <typename Eval, typename Sink>
    auto run_corpus(const CorpusSpec & spec, const std::string & resume, const OracleLimits & limits, Eval && eval,
        Sink && sink) -> void
    {
        const unsigned workers = worker_count();
        const std::size_t batch_size = workers == 1 ? 1 : 64 * workers;
        std::vector<std::pair<CorpusItem, std::string>> batch;
        std::vector<std::vector<CheckResult>> outputs;

        auto flush = [&] {
            outputs.assign(batch.size(), {});
            if (workers == 1 || batch.size() == 1) {
                for (std::size_t i = 0; i < batch.size(); ++i)
                    outputs[i] = eval(batch[i].first);
            }
            else {
                std::vector<std::thread> threads;
                std::exception_ptr failure;
                std::mutex failure_lock;
                for (unsigned w = 0; w < workers; ++w)
                    threads.emplace_back([&, w] {
                        try {
                            for (std::size_t i = w; i < batch.size(); i += workers)
                                outputs[i] = eval(batch[i].first);
                        }
                        catch (...) {
                            std::lock_guard lock(failure_lock);
                            if (! failure)
                                failure = std::current_exception();
                        }
                    });
                for (auto & t : threads)
                    t.join();
                if (failure)
                    std::rethrow_exception(failure);
            }
            for (std::size_t i = 0; i < batch.size(); ++i)
                sink(outputs[i], batch[i].second);
            batch.clear();
        };

        for_each_graph(spec, resume, limits, [&](CorpusItem item, const std::string & next) {
            batch.emplace_back(std::move(item), next);
            if (batch.size() >= batch_size)
                flush();
        });
        if (! batch.empty())
            flush();
    }

    // ---- counterexample hunt -------------------------------------------------

    enum class HuntTarget
    {
        ConjectureAlphaK,
        PhiBetaVsCw
    };

    inline auto hunt_target_name(HuntTarget t) -> std::string
    {
        return t == HuntTarget::ConjectureAlphaK ? "conjecture_alpha_k" : "phibeta_vs_cw";
    }

    inline auto parse_hunt_target(const std::string & name) -> HuntTarget
    {
        if (name == "conjecture_alpha_k")
            return HuntTarget::ConjectureAlphaK;
        if (name == "phibeta_vs_cw")
            return HuntTarget::PhiBetaVsCw;
        throw InvalidInput("unknown hunt target: " + name);
    }

    struct HuntConfig
    {
        std::vector<HuntTarget> targets{HuntTarget::ConjectureAlphaK};
        int n_min = 1, n_max = 6;
        int k_min = 0, k_max = 3;
        bool random = false;
        long long count = 0;
        std::vector<double> ps{0.5};
        std::uint64_t seed = 0;
        std::string resume;
        OracleLimits limits;

        auto validate() const -> void
        {
            if (targets.empty())
                throw InvalidInput("hunt needs at least one target");
            if (n_min < 1 || n_max < n_min)
                throw InvalidInput("invalid vertex-count range");
            if (k_min < 0 || k_max < k_min)
                throw InvalidInput("invalid k range");
            if (random && count < 0)
                throw InvalidInput("random count must be non-negative");
            for (double p : ps)
                if (p < 0.0 || p > 1.0)
                    throw InvalidInput("edge probability must lie in [0, 1]");
            for (auto t : targets) {
                if (t == HuntTarget::ConjectureAlphaK && n_max > limits.max_n_subset)
                    throw OracleLimitError("conjecture_alpha_k hunt", n_max, limits.max_n_subset);
                if (t == HuntTarget::PhiBetaVsCw && n_max > limits.max_n_partition)
                    throw OracleLimitError("phibeta_vs_cw hunt", n_max, limits.max_n_partition);
            }
        }

        auto corpus() const -> CorpusSpec
        {
            CorpusSpec spec;
            spec.kind = random ? CorpusSpec::Kind::Random : CorpusSpec::Kind::Enumerate;
            spec.n_min = n_min;
            spec.n_max = n_max;
            spec.count = count;
            spec.ps = ps;
            spec.seed = seed;
            return spec;
        }
    };

    namespace detail
    {
        /// Maximum k-independent set by scanning all subsets through classify_set.
        inline auto alpha_k_by_classification(const Graph & g, int k) -> int
        {
            int best = 0;
            const std::uint64_t states = std::uint64_t{1} << g.size();
            for (std::uint64_t mask = 1; mask < states; ++mask) {
                int size = std::popcount(mask);
                if (size > best && classify_set(g, vertices_of(mask), SetClass::independent(k)))
                    best = size;
            }
            return best;
        }

        /// Minimum partition into sets of the class by restricted growth strings.
        inline auto min_partition_by_set_partitions(const Graph & g, SetClass cls) -> int
        {
            const int n = g.size();
            if (n == 0)
                return 0;
            std::vector<int> label(n, 0);
            int best = n + 1;
            std::function<void(int, int)> extend = [&](int v, int blocks) {
                if (blocks >= best)
                    return;
                if (v == n) {
                    std::vector<VertexSet> parts(blocks);
                    for (int u = 0; u < n; ++u)
                        parts[label[u]].push_back(u);
                    for (const auto & part : parts)
                        if (! classify_set(g, part, cls))
                            return;
                    best = blocks;
                    return;
                }
                for (int b = 0; b <= blocks; ++b) {
                    label[v] = b;
                    extend(v + 1, std::max(blocks, b + 1));
                }
            };
            extend(0, 0);
            return best;
        }

        inline auto lcm_of(const std::vector<Integer> & values) -> Integer
        {
            Integer result = 1;
            for (const auto & v : values)
                result = boost::multiprecision::lcm(result, v);
            return result;
        }

        /// sum of num / den_v as an integer numerator over the common denominator.
        struct ScaledSum
        {
            Integer numerator;
            Integer denominator;
        };

        inline auto scaled_sum(const std::vector<Integer> & dens, const Integer & num) -> ScaledSum
        {
            Integer unit = lcm_of(dens);
            Integer total = 0;
            for (const auto & d : dens)
                total += num * (unit / d);
            return {total, unit};
        }
    }

    inline auto hunt_anchor(HuntTarget t) -> std::string
    {
        return t == HuntTarget::ConjectureAlphaK ? "alpha_k(G) >= sum (k + 1)/(deg v + k + 1)"
                                                 : "phi^beta(G) <= CW(co-G)";
    }

    /// Hunt records for one graph: every k for the conjecture, one record for phi^beta.
    inline auto hunt_graph(const Graph & g, const std::string & graph_id, const HuntConfig & config)
        -> std::vector<CheckResult>
    {
        std::vector<CheckResult> results;
        const int n = g.size();
        for (auto target : config.targets) {
            if (target == HuntTarget::ConjectureAlphaK) {
                for (int k = config.k_min; k <= config.k_max; ++k) {
                    CheckResult r{graph_id, hunt_target_name(target), hunt_anchor(target), k, Status::Pass, "", nullptr};
                    int alpha_k = exact_max_set(g, SetClass::independent(k), config.limits).size;
                    Rational value = favaron_and_conjecture(g, k).conjecture_value;
                    if (alpha_k < value) {
                        // independent route: classify_set subset scan and integer-scaled sum
                        int alpha_k2 = detail::alpha_k_by_classification(g, k);
                        std::vector<Integer> dens;
                        for (int v = 0; v < n; ++v)
                            dens.push_back(g.degree(v) + k + 1);
                        auto sum = detail::scaled_sum(dens, k + 1);
                        bool confirmed = Integer(alpha_k2) * sum.denominator < sum.numerator;
                        r.status = Status::Fail;
                        r.reason = confirmed ? "counterexample confirmed by both routes"
                                             : "primary and secondary routes disagree";
                        r.witness = {{"graph6", to_graph6(g)}, {"n", n},
                            {"values", {{"alpha_k", alpha_k}, {"conjecture_value", rational_json(value)},
                                           {"secondary", {{"alpha_k", alpha_k2},
                                                             {"numerator", integer_json(sum.numerator)},
                                                             {"denominator", integer_json(sum.denominator)}}},
                                           {"verified", confirmed}}}};
                    }
                    results.push_back(std::move(r));
                }
            }
            else {
                CheckResult r{graph_id, hunt_target_name(target), hunt_anchor(target), 0, Status::Pass, "", nullptr};
                if (n == 0) {
                    r.status = Status::Inapplicable;
                    r.reason = "graph has no vertices";
                    results.push_back(std::move(r));
                    continue;
                }
                int phi_beta = exact_min_partition(g, SetClass::beta_small(), config.limits).count;
                Rational cw = harmonic_bounds(g, 0).cw_complement;
                if (phi_beta > cw) {
                    Json secondary = nullptr;
                    bool confirmed = false;
                    constexpr int secondary_limit = 10;
                    if (n <= secondary_limit) {
                        int phi_beta2 = detail::min_partition_by_set_partitions(g, SetClass::beta_small());
                        std::vector<Integer> dens;
                        for (int v = 0; v < n; ++v)
                            dens.push_back(n - g.degree(v));
                        auto sum = detail::scaled_sum(dens, 1);
                        confirmed = Integer(phi_beta2) * sum.denominator > sum.numerator;
                        secondary = {{"phi_beta", phi_beta2}, {"numerator", integer_json(sum.numerator)},
                            {"denominator", integer_json(sum.denominator)}};
                        r.reason = confirmed ? "counterexample confirmed by both routes"
                                             : "primary and secondary routes disagree";
                    }
                    else
                        r.reason = "counterexample from the primary route only (secondary limited to 10 vertices)";
                    r.status = Status::Fail;
                    r.witness = {{"graph6", to_graph6(g)}, {"n", n},
                        {"values", {{"phi_beta", phi_beta}, {"cw_complement", rational_json(cw)},
                                       {"secondary", secondary}, {"verified", confirmed}}}};
                }
                results.push_back(std::move(r));
            }
        }
        return results;
    }

    /// Streams hunt records to out; returns the number of confirmed counterexamples.
    inline auto hunt(const HuntConfig & config, std::ostream & out) -> long long
    {
        config.validate();
        ResultWriter writer(out);
        long long confirmed = 0;
        run_corpus(
            config.corpus(), config.resume, config.limits,
            [&](const CorpusItem & item) { return hunt_graph(item.graph, item.id, config); },
            [&](const std::vector<CheckResult> & results, const std::string & next) {
                for (const auto & r : results)
                    if (r.status == Status::Fail && r.witness["values"].value("verified", false))
                        ++confirmed;
                writer.write_graph(results, next);
            });
        Json targets = Json::array();
        for (auto t : config.targets)
            targets.push_back(hunt_target_name(t));
        writer.finish({{"mode", "hunt"}, {"targets", targets}, {"counterexamples", confirmed},
            {"resumed_from", config.resume.empty() ? Json(nullptr) : Json(config.resume)}});
        return confirmed;
    }
}
