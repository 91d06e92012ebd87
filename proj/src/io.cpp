#include "tourn/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace tourn {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

} // namespace

bool LineReader::next(std::string& line)
{
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        const std::string_view t = trim(raw);
        if (t.empty() || t.front() == '#')
            continue;
        line.assign(t);
        return true;
    }
    return false;
}

std::vector<long long> LineReader::integers(std::string_view line) const
{
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
            ++pos;
        if (pos == line.size())
            break;
        long long value = 0;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || (ptr != end && *ptr != ' ' && *ptr != '\t'))
            fail("expected integers, got '" + std::string(line) + "'");
        pos = static_cast<std::size_t>(ptr - line.data());
        values.push_back(value);
    }
    return values;
}

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "matrix")
        return GraphFormat::matrix;
    if (name == "edges")
        return GraphFormat::edges;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected matrix or edges)");
}

namespace {

OrientedGraph read_oriented_graph_impl(std::istream& in, int& last_line)
{
    LineReader reader(in);
    struct Track {
        LineReader& r;
        int& out;
        ~Track() { out = r.line_number(); }
    } track{reader, last_line};
    std::string line;
    if (!reader.next(line))
        throw ParseError(reader.line_number(), "empty input, expected vertex count");
    const auto header = reader.integers(line);
    if (header.size() != 1 || header[0] < 0 || header[0] > 100000)
        reader.fail("expected a single vertex count");
    const int n = static_cast<int>(header[0]);
    OrientedGraph g(n);

    if (!reader.next(line)) {
        if (n == 0)
            return g;
        throw ParseError(reader.line_number(), "missing 'matrix' or 'edges' keyword");
    }
    if (line == "matrix") {
        for (int i = 0; i < n; ++i) {
            if (!reader.next(line))
                throw ParseError(reader.line_number(), "expected " + std::to_string(n) + " matrix rows");
            if (static_cast<int>(line.size()) != n)
                reader.fail("row " + std::to_string(i + 1) + " has " + std::to_string(line.size()) +
                            " entries, expected " + std::to_string(n));
            for (int j = 0; j < n; ++j) {
                const char c = line[static_cast<std::size_t>(j)];
                if (c != '0' && c != '1')
                    reader.fail("matrix entries must be 0 or 1");
                if (c == '1') {
                    try {
                        g.add_edge(i, j);
                    }
                    catch (const std::invalid_argument& e) {
                        reader.fail(e.what());
                    }
                }
            }
        }
        if (reader.next(line))
            reader.fail("unexpected content after matrix");
    }
    else if (line == "edges") {
        while (reader.next(line)) {
            const auto uv = reader.integers(line);
            if (uv.size() != 2)
                reader.fail("edge lines must be 'u v'");
            if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
                reader.fail("vertex out of range 1.." + std::to_string(n));
            try {
                g.add_edge(static_cast<int>(uv[0] - 1), static_cast<int>(uv[1] - 1));
            }
            catch (const std::invalid_argument& e) {
                reader.fail(e.what());
            }
        }
    }
    else {
        reader.fail("expected 'matrix' or 'edges', got '" + line + "'");
    }
    return g;
}

} // namespace

OrientedGraph read_oriented_graph(std::istream& in)
{
    int last_line = 0;
    return read_oriented_graph_impl(in, last_line);
}

Tournament read_tournament(std::istream& in)
{
    int last_line = 0;
    OrientedGraph g = read_oriented_graph_impl(in, last_line);
    try {
        return Tournament(std::move(g));
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(last_line, e.what());
    }
}

OrientedGraph read_oriented_graph_file(const std::string& path)
{
    auto in = open_input(path);
    return read_oriented_graph(in);
}

Tournament read_tournament_file(const std::string& path)
{
    auto in = open_input(path);
    return read_tournament(in);
}

void write_oriented_graph(std::ostream& out, const OrientedGraph& g, GraphFormat format)
{
    const int n = g.order();
    out << n << '\n';
    if (format == GraphFormat::matrix) {
        out << "matrix\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                out << (g.has_edge(i, j) ? '1' : '0');
            out << '\n';
        }
    }
    else {
        out << "edges\n";
        for (const Edge& e : g.edges())
            out << e.from + 1 << ' ' << e.to + 1 << '\n';
    }
}

void write_tournament(std::ostream& out, const Tournament& t, GraphFormat format)
{
    write_oriented_graph(out, t.graph(), format);
}

} // namespace tourn
