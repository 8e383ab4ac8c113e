#include "edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "errors.hpp"

namespace ordeg {

std::string emit_edge_list(const Graph& g) {
    std::string out;
    std::vector<Edge> edges = g.edges();
    Vertex inferred = 0;
    for (const Edge& e : edges) inferred = std::max(inferred, e.second + 1);
    if (inferred != g.order()) out += "# order " + std::to_string(g.order()) + "\n";
    for (const Edge& e : edges) {
        out += std::to_string(e.first);
        out += ' ';
        out += std::to_string(e.second);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error(line_no, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::optional<std::uint64_t> explicit_order) {
    struct PendingEdge {
        std::uint64_t u, v;
        std::size_t line;
    };
    std::vector<PendingEdge> edges;
    std::optional<std::uint64_t> header_order;
    std::uint64_t max_id = 0;
    bool any_id = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        std::vector<std::string_view> toks = split_tokens(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') {
            // Only "# order N" is meaningful; other comments are skipped.
            if (toks.size() == 3 && toks[0] == "#" && toks[1] == "order") {
                std::uint64_t n = parse_id(toks[2], line_no, "order");
                if (n < 1) throw parse_error(line_no, "order must be at least 1");
                if (header_order) throw parse_error(line_no, "duplicate order directive");
                header_order = n;
            }
            continue;
        }
        if (toks.size() != 2)
            throw parse_error(line_no, "expected two vertex ids, got " + std::to_string(toks.size()) + " tokens");
        std::uint64_t u = parse_id(toks[0], line_no, "vertex id");
        std::uint64_t v = parse_id(toks[1], line_no, "vertex id");
        if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({u, v, line_no});
        max_id = std::max(max_id, std::max(u, v));
        any_id = true;
    }

    std::uint64_t order;
    if (explicit_order)
        order = *explicit_order;
    else if (header_order)
        order = *header_order;
    else if (any_id)
        order = max_id + 1;
    else
        throw parse_error(line_no == 0 ? 1 : line_no, "no edges and no order directive");
    if (order < 1) throw parse_error(1, "order must be at least 1");
    if (order > kMaxOrder) throw parse_error(1, "order exceeds supported maximum " + std::to_string(kMaxOrder));

    GraphBuilder b(order);
    for (const PendingEdge& e : edges) {
        if (e.u >= order || e.v >= order)
            throw parse_error(e.line, "vertex id " + std::to_string(std::max(e.u, e.v)) + " outside order " +
                                          std::to_string(order));
        b.add_edge(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
    }
    return b.build();
}

}  // namespace ordeg
