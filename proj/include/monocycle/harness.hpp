#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monocycle/constructions.hpp"
#include "monocycle/graph.hpp"
#include "monocycle/rational.hpp"
#include "monocycle/spectrum.hpp"

namespace monocycle {

// Theorems that hold for sufficiently large n may fail on small instances;
// such failures are RefutedAtThisN, never a refutation of the statement.
enum class Verdict { Confirmed, ExtremalCase, RefutedAtThisN, Inconclusive };

std::string_view verdict_name(Verdict v);

enum class SearchMode { Exhaustive, Random, LocalSearch };

std::string_view mode_name(SearchMode m);
SearchMode parse_mode(std::string_view text);

struct SearchBudget {
    SearchMode mode = SearchMode::Exhaustive;
    // Exhaustive: 0 means no cap. Random/LocalSearch: samples or objective
    // evaluations.
    std::uint64_t max_items = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    // Fix the first edge red when the predicate is colour-symmetric.
    bool colour_swap_reduction = true;
};

struct SearchStats {
    std::uint64_t searched = 0;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> seed;
    int workers = 1;
};

struct VerificationReport {
    std::string target;
    std::string instance;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    nlohmann::json witness = nlohmann::json::object();
    SearchStats stats;
    // Present for RefutedAtThisN on 2-coloured instances, and for the best
    // colouring found by minimisation.
    std::optional<ColouredGraph> counterexample;
};

// Body: every l in [4, ceil(n/2)] is a cycle length of some colour.
// Requires min degree >= ceil(3n/4), otherwise Inconclusive.
VerificationReport verify_main(const ColouredGraph& g, const std::string& instance = {},
                               const SpectrumOptions& opts = {});

// Either mono circumference >= (2/3 + delta/2) n, or one colour contains
// every length in [3, (2/3 - delta) n].
VerificationReport verify_circumference(const ColouredGraph& g, const Rational& delta,
                                        const std::string& instance = {},
                                        const SpectrumOptions& opts = {});

enum class PredicateKind { MonoC3, MonoC4, MonoC3OrC5, SpectrumCoversRange, NoMonoOddCycle, MainTheoremBody };

struct Predicate {
    PredicateKind kind = PredicateKind::MonoC3;
    int lo = 0;  // SpectrumCoversRange only
    int hi = 0;

    [[nodiscard]] bool colour_symmetric() const { return true; }
};

// Names: mono-c3, mono-c4, mono-c3-or-c5, no-mono-odd-cycle,
// main-theorem-body, spectrum-covers-range(a,b) (also accepted as
// spectrum-covers-range:a:b).
Predicate parse_predicate(std::string_view text);
std::string to_string(const Predicate& p);

// Reference evaluation on a coloured graph, independent of the bit-level
// search path.
bool evaluate(const Predicate& p, const ColouredGraph& g, const SpectrumOptions& opts = {});

// Colours base edge i (lexicographic order) red iff bit i of `red_bits`.
ColouredGraph apply_colouring(const UncolouredView& base, const std::vector<bool>& red_bits);

// Every colouring of `base` must satisfy the predicate. Exhaustive mode
// needs at most 28 edges; colouring index i (with reduction) sets edge 0
// red and edge j+1 from bit j of i. The lowest failing index wins
// regardless of the worker count.
VerificationReport search_colourings(const UncolouredView& base, const Predicate& pred,
                                     const SearchBudget& budget, const std::string& instance = {});

// Smallest monochromatic circumference found over colourings of base.
// LocalSearch: steepest descent over single-edge recolourings with seeded
// restarts. Witness carries best value and the colouring.
VerificationReport minimize_mono_circumference(const UncolouredView& base, const SearchBudget& budget,
                                               const std::string& instance = {},
                                               const SpectrumOptions& opts = {});

// Masks of gen_two_bipartite_k4p whose output is recognised as 2-bipartite;
// iterates all 2^(2p^2) masks, so p <= 3.
std::uint64_t count_two_bipartite_labelled(int p);

// Colourings of the fixed K_{p,p,p,p} with both colours bipartite, by brute
// force over all 2^e colourings; p = 1 only.
std::uint64_t count_two_bipartite_distinct(int p);

// Range is [max(3, min(2^k, 3)), ceil(n / 2^(k-1))]; the extremal case is
// the balanced complete 2^k-partite graph with every colour bipartite.
VerificationReport verify_k_colour_conjecture(const KColouredGraph& g, const std::string& instance = {},
                                              const SpectrumOptions& opts = {});

struct PhiCertificate {
    std::string family;  // "F_{2t,t}", "G'_t" or "G^(r)_t"
    ConstructionSpec spec;
    Rational claimed_bound;  // upper bound on Phi_c this family certifies
    int order = 0;
    int min_degree = 0;
    int mono_circumference = 0;
    bool min_degree_exceeds_cn = false;
    bool ratio_within_bound = false;

    [[nodiscard]] Rational ratio() const { return {mono_circumference, order}; }
    [[nodiscard]] bool verified() const { return min_degree_exceeds_cn && ratio_within_bound; }
};

// Upper-bound certificates for Phi_c at the least t strictly above each
// family's threshold: F_{2t,t} (t > 1/(3(1-c))), G'_t for c in [5/9, 3/5)
// (t > 1/(3-5c)), G^(r)_t for every r >= 2 with c < (2r-1)/r^2
// (t > 1/(2r-1-r^2 c)). Instances beyond 256 vertices are skipped.
std::vector<PhiCertificate> phi_certificates(const Rational& c, const SpectrumOptions& opts = {});

nlohmann::json to_json(const VerificationReport& r, bool include_timing);

} // namespace monocycle
