#pragma once

// Edge-list and graph6 readers/writers.
//
// edgelist: first line "n m", then m lines "u v" with 0-based ids. Blank
// lines and lines starting with '#' are ignored.
// graph6: the standard one-line printable encoding; an optional ">>graph6<<"
// header is accepted.

#include <smalllarge/errors.hpp>
#include <smalllarge/graph.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace smalllarge
{
    enum class GraphFormat
    {
        Auto,
        Edgelist,
        Graph6
    };

    inline auto parse_format(std::string_view name) -> GraphFormat
    {
        if (name == "auto")
            return GraphFormat::Auto;
        if (name == "edgelist")
            return GraphFormat::Edgelist;
        if (name == "graph6")
            return GraphFormat::Graph6;
        throw InvalidInput("unknown graph format: " + std::string(name));
    }

    inline auto to_graph6(const Graph & g) -> std::string
    {
        const long long n = g.size();
        std::string out;
        if (n <= 62)
            out.push_back(static_cast<char>(n + 63));
        else if (n <= 258047) {
            out.push_back(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
        else {
            out.push_back(126);
            out.push_back(126);
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }

        int bits = 0, acc = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
                if (++bits == 6) {
                    out.push_back(static_cast<char>(acc + 63));
                    bits = acc = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
        return out;
    }

    inline auto from_graph6(std::string_view text) -> Graph
    {
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        for (char c : text)
            if (c < 63 || c > 126)
                throw ParseError("graph6: character outside the printable range 63..126");
        if (text.empty())
            throw ParseError("graph6: empty input");

        std::size_t pos = 0;
        auto take = [&](int count) {
            long long value = 0;
            for (int i = 0; i < count; ++i) {
                if (pos >= text.size())
                    throw ParseError("graph6: truncated vertex count");
                value = (value << 6) | (text[pos++] - 63);
            }
            return value;
        };
        long long n = 0;
        if (text[0] != 126)
            n = take(1);
        else if (text.size() > 1 && text[1] != 126) {
            ++pos;
            n = take(3);
        }
        else {
            pos += 2;
            n = take(6);
        }
        if (n > 100000)
            throw ParseError("graph6: vertex count too large");

        const long long pairs = n * (n - 1) / 2;
        const long long expected = (pairs + 5) / 6;
        if (static_cast<long long>(text.size() - pos) != expected)
            throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got "
                + std::to_string(text.size() - pos));

        std::vector<Edge> edges;
        long long index = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++index) {
                int byte = text[pos + index / 6] - 63;
                if ((byte >> (5 - index % 6)) & 1)
                    edges.emplace_back(u, v);
            }
        // padding bits must be zero
        if (pairs % 6 != 0) {
            int byte = text.back() - 63;
            if (byte & ((1 << (6 - pairs % 6)) - 1))
                throw ParseError("graph6: non-zero padding bits");
        }
        return build_graph(static_cast<int>(n), edges);
    }

    inline auto to_edgelist(const Graph & g) -> std::string
    {
        auto edges = g.edges();
        std::string out = std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
        for (auto [u, v] : edges)
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    namespace detail
    {
        inline auto content_lines(std::string_view text) -> std::vector<std::pair<int, std::string>>
        {
            std::vector<std::pair<int, std::string>> lines;
            std::istringstream in{std::string(text)};
            std::string line;
            int number = 0;
            while (std::getline(in, line)) {
                ++number;
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                auto first = line.find_first_not_of(" \t");
                if (first == std::string::npos || line[first] == '#')
                    continue;
                lines.emplace_back(number, line.substr(first));
            }
            return lines;
        }

        inline auto parse_ints(const std::string & line, int number, std::size_t expected) -> std::vector<long long>
        {
            std::istringstream in(line);
            std::vector<long long> values;
            std::string token;
            while (in >> token) {
                std::size_t used = 0;
                long long value = 0;
                try {
                    value = std::stoll(token, &used);
                }
                catch (const std::exception &) {
                    used = 0;
                }
                if (used != token.size())
                    throw ParseError("line " + std::to_string(number) + ": not an integer: " + token);
                values.push_back(value);
            }
            if (values.size() != expected)
                throw ParseError("line " + std::to_string(number) + ": expected " + std::to_string(expected)
                    + " integers");
            return values;
        }

        inline auto looks_like_graph6(const std::string & line) -> bool
        {
            if (line.starts_with(">>graph6<<"))
                return true;
            for (char c : line)
                if (c < 63 || c > 126)
                    return false;
            return ! line.empty();
        }

        /// Reads one edgelist graph starting at lines[pos]; advances pos.
        inline auto read_edgelist(const std::vector<std::pair<int, std::string>> & lines, std::size_t & pos) -> Graph
        {
            auto [number, header] = lines[pos++];
            auto nm = parse_ints(header, number, 2);
            if (nm[0] < 0 || nm[1] < 0)
                throw ParseError("line " + std::to_string(number) + ": negative count");
            if (nm[0] > 100000)
                throw ParseError("line " + std::to_string(number) + ": vertex count too large");
            std::vector<Edge> edges;
            for (long long i = 0; i < nm[1]; ++i) {
                if (pos >= lines.size())
                    throw ParseError("edgelist: expected " + std::to_string(nm[1]) + " edges, got "
                        + std::to_string(i));
                auto [line_number, line] = lines[pos++];
                auto uv = parse_ints(line, line_number, 2);
                if (uv[0] < 0 || uv[0] >= nm[0] || uv[1] < 0 || uv[1] >= nm[0])
                    throw ParseError("line " + std::to_string(line_number) + ": vertex outside [0, "
                        + std::to_string(nm[0]) + ")");
                if (uv[0] == uv[1])
                    throw ParseError("line " + std::to_string(line_number) + ": loop edge");
                edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
            }
            return build_graph(static_cast<int>(nm[0]), edges);
        }
    }

    inline auto from_edgelist(std::string_view text) -> Graph
    {
        auto lines = detail::content_lines(text);
        if (lines.empty())
            throw ParseError("edgelist: empty input");
        std::size_t pos = 0;
        auto g = detail::read_edgelist(lines, pos);
        if (pos != lines.size())
            throw ParseError("line " + std::to_string(lines[pos].first) + ": trailing content after edge list");
        return g;
    }

    inline auto detect_format(std::string_view text) -> GraphFormat
    {
        auto lines = detail::content_lines(text);
        if (lines.empty())
            throw ParseError("empty graph input");
        return detail::looks_like_graph6(lines.front().second) ? GraphFormat::Graph6 : GraphFormat::Edgelist;
    }

    inline auto parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) -> Graph
    {
        if (format == GraphFormat::Auto)
            format = detect_format(text);
        if (format == GraphFormat::Edgelist)
            return from_edgelist(text);
        auto lines = detail::content_lines(text);
        if (lines.size() != 1)
            throw ParseError("graph6: expected exactly one graph");
        return from_graph6(lines.front().second);
    }

    /// Several graphs: one graph6 string per line, or consecutive edgelist blocks.
    inline auto parse_graphs(std::string_view text, GraphFormat format = GraphFormat::Auto) -> std::vector<Graph>
    {
        auto lines = detail::content_lines(text);
        std::vector<Graph> graphs;
        if (lines.empty())
            return graphs;
        if (format == GraphFormat::Auto)
            format = detail::looks_like_graph6(lines.front().second) ? GraphFormat::Graph6 : GraphFormat::Edgelist;
        if (format == GraphFormat::Graph6) {
            for (const auto & [number, line] : lines) {
                if (line.starts_with(">>graph6<<") && line.size() == 10)
                    continue;
                try {
                    graphs.push_back(from_graph6(line));
                }
                catch (const ParseError & e) {
                    throw ParseError("line " + std::to_string(number) + ": " + e.what());
                }
            }
            return graphs;
        }
        std::size_t pos = 0;
        while (pos < lines.size())
            graphs.push_back(detail::read_edgelist(lines, pos));
        return graphs;
    }

    inline auto serialize_graph(const Graph & g, GraphFormat format) -> std::string
    {
        if (format == GraphFormat::Graph6)
            return to_graph6(g) + "\n";
        return to_edgelist(g);
    }
}
