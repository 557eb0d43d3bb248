#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monocycle/graph.hpp"

namespace monocycle {

struct SpectrumOptions {
    // Largest reduced component the subset DP will accept. Memory is
    // 2^(limit-1) 32-bit words, so the hard ceiling is 28.
    int exact_limit = 24;
};

inline constexpr int kHardExactLimit = 28;

struct CycleSpectrum {
    int n = 0;
    std::vector<int> lengths;  // sorted, each in [3, n]
    int circumference = 0;     // 0 when acyclic

    [[nodiscard]] bool contains(int length) const;
    // True iff every length in [lo, hi] is present (vacuously true if lo > hi).
    [[nodiscard]] bool covers(int lo, int hi) const;
    [[nodiscard]] bool has_odd_length() const;
    friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
};

struct MonoSpectrum {
    CycleSpectrum red;
    CycleSpectrum blue;
    int mono_circumference = 0;

    [[nodiscard]] const CycleSpectrum& of(Colour c) const { return c == Colour::Red ? red : blue; }
};

// Exact set of cycle lengths. Vertices off the 2-core are dropped and
// classes of non-adjacent twins larger than their common neighbourhood are
// trimmed to its size (both keep the length set intact); each remaining
// component is solved by a subset DP over paths anchored at the smallest
// vertex. Throws TooLargeForExact when a reduced component exceeds the limit.
CycleSpectrum cycle_spectrum(const UncolouredView& g, const SpectrumOptions& opts = {});

MonoSpectrum mono_spectrum(const ColouredGraph& g, const SpectrumOptions& opts = {});

bool is_hamiltonian(const UncolouredView& g, const SpectrumOptions& opts = {});

// Throws TooFewVertices for n < 3.
bool is_pancyclic(const UncolouredView& g, const SpectrumOptions& opts = {});

// Shortest odd cycle via BFS layer parity; nullopt for bipartite graphs.
std::optional<int> odd_girth(const UncolouredView& g);

// ceil(2e / (n - 1)) for n >= 2, else 0. A lower bound on circumference
// whenever g has a cycle.
int erdos_gallai_floor(const UncolouredView& g);

// Bit l of the result is set iff the graph on `rows` (compact adjacency,
// at most 32 vertices) has a cycle of length l. No reductions applied.
std::uint64_t subset_dp_lengths(std::span<const std::uint32_t> rows);

// Direct search for one cycle length on a graph of at most 64 vertices given
// as compact adjacency rows. Used by the colouring-search predicates.
bool contains_cycle_length(std::span<const std::uint64_t> rows, int length);

} // namespace monocycle
