#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monocycle/errors.hpp"

namespace monocycle {

// Hard cap on graph order. Rows are four 64-bit words; graphs with n <= 64
// only ever populate word 0, and hot loops work on compact single words.
inline constexpr int kMaxVertices = 256;

using VertexId = int;

// Fixed-capacity set of vertices in [0, kMaxVertices).
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    static VertexSet range(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v < hi; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }

    [[nodiscard]] int size() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    [[nodiscard]] bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    // Smallest member, or -1 when empty.
    [[nodiscard]] int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }
    [[nodiscard]] std::uint64_t word(int i) const { return w_[i]; }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::array<std::uint64_t, kWords> w_{};
};

enum class Colour : std::uint8_t { Red, Blue };

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
constexpr char colour_letter(Colour c) { return c == Colour::Red ? 'R' : 'B'; }
inline constexpr std::array<Colour, 2> kColours{Colour::Red, Colour::Blue};
std::string_view colour_name(Colour c);

struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};
using EdgeList = std::vector<Edge>;

// A simple loopless graph with bit-row adjacency. Single-graph algorithms
// operate on this; a ColouredGraph yields Red, Blue and Union views.
class UncolouredView {
public:
    UncolouredView() = default;
    explicit UncolouredView(int n);

    // Duplicate edges are idempotent.
    static UncolouredView from_edges(int n, const EdgeList& edges);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] const VertexSet& neighbours(int v) const { return adj_[v]; }
    [[nodiscard]] bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    [[nodiscard]] int degree(int v) const { return adj_[v].size(); }
    [[nodiscard]] int edge_count() const;
    // Edges (u, v) with u < v in lexicographic order.
    [[nodiscard]] EdgeList edges() const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(0, n_); }

    [[nodiscard]] UncolouredView with_edge(int u, int v) const;
    [[nodiscard]] UncolouredView complement() const;

    friend bool operator==(const UncolouredView&, const UncolouredView&) = default;

private:
    friend class ColouredGraph;
    friend class KColouredGraph;
    void add_edge(int u, int v) {
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

int min_degree(const UncolouredView& g);

// Simple graph whose edge set is partitioned into Red and Blue. Immutable
// once built; every instance satisfies the partition invariants.
class ColouredGraph {
public:
    ColouredGraph() = default;

    // Throws InvalidVertex for out-of-range endpoints or loops, and
    // SameEdgeBothColours when an edge is listed in both colours.
    static ColouredGraph build(int n, const EdgeList& red, const EdgeList& blue);

    [[nodiscard]] int order() const { return red_.order(); }
    [[nodiscard]] const UncolouredView& view(Colour c) const {
        return c == Colour::Red ? red_ : blue_;
    }
    [[nodiscard]] UncolouredView union_view() const;
    [[nodiscard]] std::optional<Colour> colour_of(int u, int v) const;
    [[nodiscard]] EdgeList edges(Colour c) const { return view(c).edges(); }
    [[nodiscard]] ColouredGraph swapped() const;

    // Checks symmetry, zero diagonal and disjointness of colour rows.
    [[nodiscard]] bool invariants_hold() const;

    friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

private:
    UncolouredView red_;
    UncolouredView blue_;
};

int min_degree(const ColouredGraph& g);
int colour_degree(const ColouredGraph& g, int v, Colour c);

// "cg 1 <n>" text format, one "<u> <v> <R|B>" line per edge.
ColouredGraph parse_graph(std::string_view text);
std::string serialize(const ColouredGraph& g);

ColouredGraph load_graph_file(const std::string& path);
void save_graph_file(const ColouredGraph& g, const std::string& path);

} // namespace monocycle
