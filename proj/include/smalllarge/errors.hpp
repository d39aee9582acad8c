#pragma once

#include <stdexcept>
#include <string>

namespace smalllarge
{
    /// Input that violates an operation's precondition (bad vertex id, loop edge,
    /// unsorted sequence, bad generator parameters, ...).
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed edgelist or graph6 payload.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An exact oracle was asked to work beyond its configured vertex limit.
    class OracleLimitError : public std::runtime_error
    {
    public:
        OracleLimitError(const std::string & what, int n, int limit) :
            std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
            _n(n),
            _limit(limit)
        {
        }

        auto n() const -> int { return _n; }
        auto limit() const -> int { return _limit; }

    private:
        int _n;
        int _limit;
    };
}
