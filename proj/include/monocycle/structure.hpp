#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "monocycle/graph.hpp"
#include "monocycle/rational.hpp"
#include "monocycle/spectrum.hpp"

namespace monocycle {

// Connected components, largest first; ties go to the component holding
// the smaller vertex. Isolated vertices appear as singletons.
std::vector<VertexSet> components(const UncolouredView& g);

struct ComponentDecomposition {
    Colour colour = Colour::Red;
    std::vector<VertexSet> components;
};

ComponentDecomposition colour_components(const ColouredGraph& g, Colour c);

// Largest component of colour c that carries at least one edge, or the
// empty set when colour c has no edges.
VertexSet largest_component(const ColouredGraph& g, Colour c);

struct WPartition {
    VertexSet red_largest;   // R'
    VertexSet blue_largest;  // B'
    VertexSet w1;  // V(B') & V(R')
    VertexSet w2;  // V(R') - V(B')
    VertexSet w3;  // V(B') - V(R')
    VertexSet w4;  // everything else
};

WPartition w_partition(const ColouredGraph& g);

// Proper 2-colouring; in every component the class holding the smallest
// vertex goes left. nullopt if g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UncolouredView& g);

// Parts of g when g is complete multipartite (complement is a disjoint union
// of cliques), ordered by smallest vertex; nullopt otherwise.
std::optional<std::vector<VertexSet>> multipartite_parts(const UncolouredView& g);

// p when g is K_{p,p,p,p}.
std::optional<int> recognize_k4p(const UncolouredView& g);

struct TwoBipartiteLabelling {
    VertexSet u11, u12, u21, u22;
};

// Non-null iff the underlying graph is K_{p,p,p,p} and both colours are
// bipartite. U_{i,j} = V_i & W_j for the red bipartition V and the blue
// bipartition W.
std::optional<TwoBipartiteLabelling> recognize_two_bipartite(const ColouredGraph& g);

// Degree-sequence test d_k <= k < n/2 => d_{n-k} >= n-k. Sufficient for a
// Hamilton cycle only. Throws TooFewVertices for n < 3.
bool chvatal_sufficient(const UncolouredView& g);

// min degree >= n/2. Throws TooFewVertices for n < 3.
bool dirac_sufficient(const UncolouredView& g);

enum class BondyClass { Pancyclic, BalancedCompleteBipartite, NotApplicable };

// For hamiltonian g with e >= n^2/4, which side of the dichotomy holds.
BondyClass bondy_classify(const UncolouredView& g, const SpectrumOptions& opts = {});

struct TrichotomyOptions {
    int sparse_set_limit = 24;      // case (ii) refuses above this order
    int grouping_component_limit = 20;  // case (iii) enumerates 2^(c-1) groupings
};

// (i) a monochromatic component whose maximum matching covers at least
// (2/3 + delta) n vertices.
struct LargeMatchingCase {
    Colour colour = Colour::Red;
    int component_index = 0;  // into colour_components(g, colour)
    int matched_vertices = 0;
};

// (ii) a set of at least (2/3 - delta/2) n vertices inside which one colour
// has maximum degree at most 10 delta n.
struct SparseSetCase {
    Colour colour = Colour::Red;
    VertexSet set;
    int max_degree = 0;
};

// (iii) a partition U1..U4, each part of order at least (1/4 - 3 delta) n,
// with no red edges between U1+U2 and U3+U4 and no blue edges between
// U1+U3 and U2+U4. Relabelling U2 <-> U3 gives the colour-swapped form.
struct FourPartCase {
    std::array<VertexSet, 4> parts;
};

struct TrichotomyVerdict {
    Rational delta;
    bool delta_in_range = true;  // 0 < delta < 1/36
    std::optional<LargeMatchingCase> case_i;
    std::optional<SparseSetCase> case_ii;
    bool case_ii_refused = false;
    std::optional<FourPartCase> case_iii;
    bool case_iii_refused = false;
};

TrichotomyVerdict trichotomy(const ColouredGraph& g, const Rational& delta,
                             const TrichotomyOptions& opts = {});

// Re-check each reported case against its defining inequality.
bool certifies(const ColouredGraph& g, const Rational& delta, const LargeMatchingCase& c);
bool certifies(const ColouredGraph& g, const Rational& delta, const SparseSetCase& c);
bool certifies(const ColouredGraph& g, const Rational& delta, const FourPartCase& c);

} // namespace monocycle
