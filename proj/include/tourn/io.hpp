#pragma once

// Text formats for oriented graphs and tournaments.
//
//   line 1: n
//   line 2: "matrix" followed by n rows of n characters 0/1 ((i,j)=1 means i->j)
//        or "edges"  followed by lines "u v" meaning u->v (1-based)
//
// Blank lines and lines starting with '#' are skipped everywhere.

#include "tourn/digraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tourn {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { matrix, edges };

GraphFormat parse_graph_format(std::string_view name);

OrientedGraph read_oriented_graph(std::istream& in);
Tournament read_tournament(std::istream& in);
OrientedGraph read_oriented_graph_file(const std::string& path);
Tournament read_tournament_file(const std::string& path);

void write_oriented_graph(std::ostream& out, const OrientedGraph& g, GraphFormat format);
void write_tournament(std::ostream& out, const Tournament& t, GraphFormat format = GraphFormat::matrix);

// Line reader shared by the module-specific formats.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next significant line (trimmed), or false at end of input.
    bool next(std::string& line);
    int line_number() const { return line_; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

    // Parses whitespace-separated integers on a line; fails on anything else.
    std::vector<long long> integers(std::string_view line) const;

private:
    std::istream& in_;
    int line_ = 0;
};

} // namespace tourn
