#pragma once

// JSON encodings. nlohmann::json keeps object keys sorted, so every document
// produced here is stable-ordered.

#include <smalllarge/exact.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/sets.hpp>

#include <nlohmann/json.hpp>

#include <limits>
#include <optional>
#include <string>

namespace smalllarge
{
    using Json = nlohmann::json;

    /// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
    inline auto integer_json(const Integer & x) -> Json
    {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            return static_cast<long long>(x);
        return x.str();
    }

    inline auto rational_json(const Rational & r) -> Json
    {
        return {{"num", integer_json(numerator_of(r))}, {"den", integer_json(denominator_of(r))},
            {"display", display(r)}};
    }

    inline auto root_bound_json(const HalfRootBound & b) -> Json
    {
        return {{"offset", integer_json(b.offset)}, {"radicand", integer_json(b.radicand)},
            {"floor", integer_json(b.floor())}, {"display", display(b.approx())}};
    }

    inline auto vertex_set_json(const VertexSet & s) -> Json { return Json(s); }

    inline auto partition_json(const VertexPartition & p) -> Json
    {
        Json blocks = Json::array();
        for (const auto & b : p.blocks)
            blocks.push_back({{"vertices", b.vertices}, {"class", b.tag.name()}});
        return {{"count", p.count()}, {"source", p.source}, {"blocks", blocks}};
    }

    inline auto optional_json(const std::optional<int> & x) -> Json
    {
        return x ? Json(*x) : Json(nullptr);
    }
}
