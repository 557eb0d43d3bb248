#pragma once

#include <optional>
#include <vector>

#include "monocycle/graph.hpp"

namespace monocycle {

struct MatchingCertificate {
    EdgeList edges;         // pairwise disjoint, each (u, v) with u < v, sorted
    int covered = 0;        // 2 * edges.size()
    int deficiency = 0;     // n - covered
    VertexSet berge_witness;  // S with q(G - S) = |S| + deficiency
};

// Number of odd-order components of g - removed.
int odd_components(const UncolouredView& g, const VertexSet& removed);

// Maximum matching by Edmonds' blossom search, seeded with a greedy
// lexicographic matching. The Berge witness is the set A(G) of the
// Gallai-Edmonds decomposition: neighbours of the vertices some maximum
// matching misses.
MatchingCertificate max_matching(const UncolouredView& g);

// Branch-and-bound maximum matching; independent of the blossom code.
// Throws TooLargeForExact above 16 vertices.
EdgeList max_matching_exhaustive(const UncolouredView& g);

// max over all S of q(G - S) - |S|, with the first maximizing S in subset
// order. Throws TooLargeForExact above 20 vertices.
std::pair<int, VertexSet> berge_deficiency_exhaustive(const UncolouredView& g);

// Returns S in `left` with |N(S) & right| < |S| - defect, or nullopt when a
// matching of the left-right edges misses at most `defect` left vertices.
std::optional<VertexSet> hall_violator(const UncolouredView& g, const VertexSet& left,
                                       const VertexSet& right, int defect);

// Size of a maximum matching using only left-right edges.
int bipartite_matching_size(const UncolouredView& g, const VertexSet& left, const VertexSet& right);

// Graph induced on `keep`, same vertex numbering, other vertices isolated.
UncolouredView induced(const UncolouredView& g, const VertexSet& keep);

} // namespace monocycle
