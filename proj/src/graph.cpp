#include "monocycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace monocycle {

std::string_view colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

namespace {

void check_edge(int n, const Edge& e) {
    if (e.u < 0 || e.u >= n) throw InvalidVertex(e.u, n);
    if (e.v < 0 || e.v >= n) throw InvalidVertex(e.v, n);
    if (e.u == e.v) throw InvalidVertex(e.u, n);
}

} // namespace

UncolouredView::UncolouredView(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) throw BadParams("graph order must lie in [0, 256]");
}

UncolouredView UncolouredView::from_edges(int n, const EdgeList& edges) {
    UncolouredView g(n);
    for (const auto& e : edges) {
        check_edge(n, e);
        g.add_edge(e.u, e.v);
    }
    return g;
}

int UncolouredView::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

EdgeList UncolouredView::edges() const {
    EdgeList out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.push_back({u, v});
        });
    return out;
}

UncolouredView UncolouredView::with_edge(int u, int v) const {
    check_edge(n_, {u, v});
    UncolouredView g = *this;
    g.add_edge(u, v);
    return g;
}

UncolouredView UncolouredView::complement() const {
    UncolouredView g(n_);
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
        g.adj_[v] = all - adj_[v];
        g.adj_[v].erase(v);
    }
    return g;
}

int min_degree(const UncolouredView& g) {
    int best = g.order() == 0 ? 0 : g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

ColouredGraph ColouredGraph::build(int n, const EdgeList& red, const EdgeList& blue) {
    ColouredGraph g;
    g.red_ = UncolouredView::from_edges(n, red);
    g.blue_ = UncolouredView::from_edges(n, blue);
    for (int u = 0; u < n; ++u) {
        const VertexSet both = g.red_.neighbours(u) & g.blue_.neighbours(u);
        if (!both.empty()) {
            const int v = both.first();
            throw SameEdgeBothColours(std::min(u, v), std::max(u, v));
        }
    }
    return g;
}

UncolouredView ColouredGraph::union_view() const {
    UncolouredView g(order());
    for (int v = 0; v < order(); ++v) g.adj_[v] = red_.adj_[v] | blue_.adj_[v];
    return g;
}

std::optional<Colour> ColouredGraph::colour_of(int u, int v) const {
    if (red_.adjacent(u, v)) return Colour::Red;
    if (blue_.adjacent(u, v)) return Colour::Blue;
    return std::nullopt;
}

ColouredGraph ColouredGraph::swapped() const {
    ColouredGraph g;
    g.red_ = blue_;
    g.blue_ = red_;
    return g;
}

bool ColouredGraph::invariants_hold() const {
    const int n = order();
    if (blue_.order() != n) return false;
    for (int u = 0; u < n; ++u) {
        if (red_.adjacent(u, u) || blue_.adjacent(u, u)) return false;
        if (!(red_.neighbours(u) & blue_.neighbours(u)).empty()) return false;
        if (!(red_.neighbours(u) - VertexSet::range(0, n)).empty()) return false;
        if (!(blue_.neighbours(u) - VertexSet::range(0, n)).empty()) return false;
        bool symmetric = true;
        red_.neighbours(u).for_each([&](int v) { symmetric &= red_.adjacent(v, u); });
        blue_.neighbours(u).for_each([&](int v) { symmetric &= blue_.adjacent(v, u); });
        if (!symmetric) return false;
    }
    return true;
}

int min_degree(const ColouredGraph& g) { return min_degree(g.union_view()); }

int colour_degree(const ColouredGraph& g, int v, Colour c) {
    if (v < 0 || v >= g.order()) throw InvalidVertex(v, g.order());
    return g.view(c).degree(v);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

ColouredGraph parse_graph(std::string_view text) {
    int line_no = 0;
    std::optional<int> n;
    EdgeList red, blue;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!n) {
            if (toks.size() != 3 || toks[0] != "cg" || toks[1] != "1")
                throw ParseError(line_no, "expected header 'cg 1 <n>'");
            n = parse_int(toks[2], line_no);
            if (*n < 0 || *n > kMaxVertices)
                throw ParseError(line_no, "vertex count out of range");
        } else {
            if (toks.size() != 3) throw ParseError(line_no, "expected '<u> <v> <R|B>'");
            const int u = parse_int(toks[0], line_no);
            const int v = parse_int(toks[1], line_no);
            if (u < 0 || v >= *n || u >= v)
                throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
            if (toks[2] == "R")
                red.push_back({u, v});
            else if (toks[2] == "B")
                blue.push_back({u, v});
            else
                throw ParseError(line_no, "unknown colour '" + std::string(toks[2]) + "'");
        }
        if (end == text.size()) break;
    }
    if (!n) throw ParseError(line_no, "missing header 'cg 1 <n>'");
    return ColouredGraph::build(*n, red, blue);
}

std::string serialize(const ColouredGraph& g) {
    std::ostringstream out;
    out << "cg 1 " << g.order() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (auto c = g.colour_of(u, v)) out << u << ' ' << v << ' ' << colour_letter(*c) << '\n';
    return out.str();
}

ColouredGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const ColouredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write graph file '" + path + "'");
    out << serialize(g);
}

} // namespace monocycle
