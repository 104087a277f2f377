#include "lambdacol/io.hpp"

#include "lambdacol/error.hpp"
#include "lambdacol/solver.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lambdacol {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Non-blank, non-comment lines.
std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto raw = text.substr(pos, end - pos);
        auto tokens = split_ws(raw);
        if (!tokens.empty() && tokens.front().front() != '#')
            out.push_back({number, std::move(tokens)});
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

int to_int(std::string_view tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(ParseErrorKind::Malformed, line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty() || lines.front().tokens.front() != "p")
        throw ParseError(ParseErrorKind::MissingHeader, lines.empty() ? 0 : lines.front().number,
                         "expected 'p <n> [<m>]'");

    const auto& header = lines.front();
    if (header.tokens.size() < 2 || header.tokens.size() > 3)
        throw ParseError(ParseErrorKind::Malformed, header.number, "header takes 'p <n> [<m>]'");
    const int n = to_int(header.tokens[1], header.number);
    if (n < 1)
        throw ParseError(ParseErrorKind::Malformed, header.number, "vertex count must be positive");
    std::optional<int> m;
    if (header.tokens.size() == 3) {
        m = to_int(header.tokens[2], header.number);
        if (*m < 0)
            throw ParseError(ParseErrorKind::Malformed, header.number, "edge count must be non-negative");
    }

    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.front() != "e" || line.tokens.size() != 3)
            throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'e <u> <v>'");
        int u = to_int(line.tokens[1], line.number);
        int v = to_int(line.tokens[2], line.number);
        if (u == v)
            throw ParseError(ParseErrorKind::SelfLoop, line.number, "vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseErrorKind::EndpointOutOfRange, line.number,
                             "edge {" + std::to_string(u) + "," + std::to_string(v) + "} with n=" + std::to_string(n));
        if (u > v)
            throw ParseError(ParseErrorKind::Malformed, line.number, "endpoints must be listed as u < v");
        if (g.adjacent(u, v))
            throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                             "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        g.add_edge(u, v);
    }
    if (m && static_cast<std::size_t>(*m) != g.size())
        throw ParseError(ParseErrorKind::EdgeCountMismatch, header.number,
                         "header declares " + std::to_string(*m) + " edges, found " + std::to_string(g.size()));
    return g;
}

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

Colouring parse_colouring(std::string_view text, int n)
{
    std::vector<int> labels(n, -1);
    for (const auto& line : content_lines(text)) {
        if (line.tokens.front() != "c" || line.tokens.size() != 3)
            throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'c <vertex> <label>'");
        int v = to_int(line.tokens[1], line.number);
        int label = to_int(line.tokens[2], line.number);
        if (v < 0 || v >= n)
            throw ParseError(ParseErrorKind::EndpointOutOfRange, line.number,
                             "vertex " + std::to_string(v) + " with n=" + std::to_string(n));
        if (label < 0)
            throw ParseError(ParseErrorKind::Malformed, line.number, "negative label");
        if (labels[v] >= 0)
            throw ParseError(ParseErrorKind::DuplicateVertex, line.number, "vertex " + std::to_string(v));
        labels[v] = label;
    }
    for (int v = 0; v < n; ++v)
        if (labels[v] < 0)
            throw ParseError(ParseErrorKind::MissingVertex, 0, "no label for vertex " + std::to_string(v));
    try {
        return Colouring(std::move(labels));
    } catch (const InvalidArgument& e) {
        throw ParseError(ParseErrorKind::Malformed, 0, e.what());
    }
}

std::string format_colouring(const Colouring& c)
{
    std::ostringstream out;
    for (int v = 0; v < c.size(); ++v)
        out << "c " << v << ' ' << c.label(v) << '\n';
    return out.str();
}

std::string format_class_assignment(const std::vector<int>& class_of)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < class_of.size(); ++v)
        out << "v " << v << ' ' << class_of[v] << '\n';
    return out.str();
}

std::string format_injection(const std::vector<Vertex>& injection)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < injection.size(); ++v)
        out << "map " << v << ' ' << injection[v] << '\n';
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace lambdacol
