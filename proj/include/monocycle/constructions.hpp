#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocycle/graph.hpp"

namespace monocycle {

// xorshift64* (Vigna 2016): x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
// output x * 0x2545F4914F6CDD1D. A zero seed is replaced by
// 0x9E3779B97F4A7C15 since zero is a fixed point.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed);
    std::uint64_t next();
    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Graph with k pairwise disjoint colour classes; colour i is view(i).
class KColouredGraph {
public:
    KColouredGraph(int n, int k);

    void set_colour(int u, int v, int colour);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int colours() const { return static_cast<int>(classes_.size()); }
    [[nodiscard]] const UncolouredView& view(int colour) const { return classes_[colour]; }
    [[nodiscard]] UncolouredView union_view() const;
    [[nodiscard]] std::optional<int> colour_of(int u, int v) const;

    // Two colour classes map onto Red (0) and Blue (1).
    [[nodiscard]] ColouredGraph to_coloured() const;

private:
    int n_;
    std::vector<UncolouredView> classes_;
};

enum class ConstructionKind { TwoBipartiteK4p, BlowupC5, BipartiteComplement, Fst, GPrime, GRT, KBipartite };

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::Fst;
    std::map<std::string, std::int64_t> params;
    std::optional<std::vector<bool>> free_mask;  // TwoBipartiteK4p only
    std::optional<std::uint64_t> seed;
};

// Canonical strings: "f_st:s=6,t=3", "k4p:p=2,mask=0x00", "k4p:p=2,seed=7",
// "g_rt:r=3,t=2", "blowc5:b=2", "gprime:t=2", "bipcomp:n=6",
// "kbip:k=3,p=1,seed=42".
ConstructionSpec parse_construction(std::string_view text);
std::string to_string(const ConstructionSpec& spec);

// Builds any non-k-coloured kind.
ColouredGraph generate(const ConstructionSpec& spec);

// Free edges of K_{p,p,p,p} in lexicographic order: U11-U22 then U12-U21.
EdgeList two_bipartite_free_edges(int p);

// Bits of `value`, least significant first; BadMaskLength if value needs
// more than `bits` bits.
std::vector<bool> mask_from_integer(std::uint64_t value, std::size_t bits);
std::vector<bool> mask_from_seed(std::uint64_t seed, std::size_t bits);

// Classes U11 = [0,p), U12 = [p,2p), U21 = [2p,3p), U22 = [3p,4p).
// U11-U12 and U21-U22 blue, U11-U21 and U12-U22 red; free edge i is red
// iff mask bit i is set.
ColouredGraph gen_two_bipartite_k4p(int p, const std::vector<bool>& free_mask);

// Vertex i*b + j lies in class i; red between classes i, i+1 (mod 5),
// blue between classes i, i+2 (mod 5).
ColouredGraph gen_blowup_c5(int b);

// K_n with red = K_{floor(n/2), ceil(n/2)} on [0, floor(n/2)) | rest and
// blue = the two cliques.
ColouredGraph gen_bipartite_complement(int n);

// K_{s+t}; A = [0, s). Blue = A to the rest, red = everything else.
ColouredGraph gen_f_st(int s, int t);

// S1 = [0,2t), S2 = [2t,4t), T = [4t,5t). Red = K(S1) + K(S2),
// blue = K(T) + all T-S edges.
ColouredGraph gen_g_prime(int t);

// Cells A_{i,j} = [(i*r + j) t, (i*r + j + 1) t). Blue joins cells of one
// row in different columns; red joins any two vertices of one column,
// including pairs inside one cell.
ColouredGraph gen_g_r_t(int r, int t);

// Complete 2^k-partite graph with parts of order p; vertex v lies in class
// a = v / p, whose coordinate i is bit i of a. Classes differing only in
// coordinate i are joined in colour i; otherwise the colour is drawn
// uniformly from the differing coordinates, one draw per such edge in
// lexicographic edge order.
KColouredGraph gen_k_bipartite(int k, int p, std::uint64_t seed);

KColouredGraph generate_k(const ConstructionSpec& spec);

// "kcg 1 <n> <k>" text format, one "<u> <v> <colour>" line per edge.
std::string serialize(const KColouredGraph& g);
KColouredGraph parse_k_graph(std::string_view text);

} // namespace monocycle
