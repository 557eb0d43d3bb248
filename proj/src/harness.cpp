#include "monocycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <limits>
#include <thread>
#include <tuple>

#include "monocycle/structure.hpp"

namespace monocycle {

using nlohmann::json;

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::ExtremalCase: return "ExtremalCase";
    case Verdict::RefutedAtThisN: return "Refuted-at-this-n";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string_view mode_name(SearchMode m) {
    switch (m) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::Random: return "random";
    case SearchMode::LocalSearch: return "local";
    }
    return "exhaustive";
}

SearchMode parse_mode(std::string_view text) {
    if (text == "exhaustive") return SearchMode::Exhaustive;
    if (text == "random") return SearchMode::Random;
    if (text == "local") return SearchMode::LocalSearch;
    throw BadParams("unknown search mode '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json vertex_list(const VertexSet& s) { return s.to_vector(); }

json spectrum_json(const CycleSpectrum& s) {
    return {{"lengths", s.lengths}, {"circumference", s.circumference}};
}

// ceil(3n/4)
int three_quarters(int n) { return (3 * n + 3) / 4; }

bool hypothesis_unmet(const ColouredGraph& g, VerificationReport& r) {
    const int need = three_quarters(g.order());
    const int have = min_degree(g);
    if (have >= need) return false;
    r.verdict = Verdict::Inconclusive;
    r.reason = "hypothesis unmet: min degree " + std::to_string(have) + " < ceil(3n/4) = " + std::to_string(need);
    r.witness = {{"min_degree", have}, {"required_min_degree", need}};
    return true;
}

} // namespace

VerificationReport verify_main(const ColouredGraph& g, const std::string& instance, const SpectrumOptions& opts) {
    const auto start = Clock::now();
    VerificationReport r;
    r.target = "main";
    r.instance = instance;
    const int n = g.order();
    if (!hypothesis_unmet(g, r)) {
        if (auto lab = recognize_two_bipartite(g)) {
            r.verdict = Verdict::ExtremalCase;
            r.reason = "K_{p,p,p,p} with both colours bipartite";
            r.witness = {{"U11", vertex_list(lab->u11)}, {"U12", vertex_list(lab->u12)},
                         {"U21", vertex_list(lab->u21)}, {"U22", vertex_list(lab->u22)}};
        } else {
            const MonoSpectrum ms = mono_spectrum(g, opts);
            const int hi = (n + 1) / 2;
            std::vector<int> missing;
            json found = json::object();
            for (int l = 4; l <= hi; ++l) {
                if (ms.red.contains(l))
                    found[std::to_string(l)] = "red";
                else if (ms.blue.contains(l))
                    found[std::to_string(l)] = "blue";
                else
                    missing.push_back(l);
            }
            r.witness = {{"range", {4, hi}}, {"red", spectrum_json(ms.red)}, {"blue", spectrum_json(ms.blue)}};
            if (missing.empty()) {
                r.verdict = Verdict::Confirmed;
                r.witness["colour_per_length"] = found;
            } else {
                r.verdict = Verdict::RefutedAtThisN;
                r.reason = "some lengths in [4, ceil(n/2)] appear in neither colour";
                r.witness["missing_lengths"] = missing;
                r.counterexample = g;
            }
        }
    }
    r.stats.searched = 1;
    r.stats.elapsed_ms = ms_since(start);
    return r;
}

VerificationReport verify_circumference(const ColouredGraph& g, const Rational& delta, const std::string& instance,
                                        const SpectrumOptions& opts) {
    const auto start = Clock::now();
    VerificationReport r;
    r.target = "circumference";
    r.instance = instance;
    const Rational n(g.order());
    if (!hypothesis_unmet(g, r)) {
        const bool in_range = delta > 0 && delta <= Rational(1, 180);
        const MonoSpectrum ms = mono_spectrum(g, opts);
        const Rational long_need = (Rational(2, 3) + delta / 2) * n;
        const auto hi = monocycle::floor((Rational(2, 3) - delta) * n);
        r.witness = {{"delta", to_string(delta)},
                     {"delta_in_range", in_range},
                     {"mono_circumference", ms.mono_circumference},
                     {"long_cycle_threshold", to_string(long_need)},
                     {"range", {3, hi}},
                     {"red", spectrum_json(ms.red)},
                     {"blue", spectrum_json(ms.blue)}};
        if (!in_range) r.reason = "warning: delta outside (0, 1/180]; ";
        if (Rational(ms.mono_circumference) >= long_need) {
            r.verdict = Verdict::Confirmed;
            r.witness["disjunct"] = "long-monochromatic-cycle";
        } else {
            for (Colour c : kColours)
                if (ms.of(c).covers(3, static_cast<int>(hi))) {
                    r.verdict = Verdict::Confirmed;
                    r.witness["disjunct"] = "same-colour-range";
                    r.witness["colour"] = colour_name(c);
                    break;
                }
            if (r.verdict != Verdict::Confirmed) {
                r.verdict = Verdict::RefutedAtThisN;
                r.reason += "neither disjunct holds";
                r.counterexample = g;
            }
        }
    }
    r.stats.searched = 1;
    r.stats.elapsed_ms = ms_since(start);
    return r;
}

Predicate parse_predicate(std::string_view text) {
    if (text == "mono-c3") return {PredicateKind::MonoC3};
    if (text == "mono-c4") return {PredicateKind::MonoC4};
    if (text == "mono-c3-or-c5") return {PredicateKind::MonoC3OrC5};
    if (text == "no-mono-odd-cycle") return {PredicateKind::NoMonoOddCycle};
    if (text == "main-theorem-body") return {PredicateKind::MainTheoremBody};
    constexpr std::string_view prefix = "spectrum-covers-range";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view rest = text.substr(prefix.size());
        std::vector<int> nums;
        std::size_t i = 0;
        while (i < rest.size()) {
            if (rest[i] < '0' || rest[i] > '9') {
                ++i;
                continue;
            }
            int v = 0;
            auto [ptr, ec] = std::from_chars(rest.data() + i, rest.data() + rest.size(), v);
            (void)ec;
            nums.push_back(v);
            i = static_cast<std::size_t>(ptr - rest.data());
        }
        if (nums.size() == 2 && nums[0] >= 3 && nums[0] <= nums[1])
            return {PredicateKind::SpectrumCoversRange, nums[0], nums[1]};
        throw BadParams("spectrum-covers-range needs two bounds 3 <= a <= b");
    }
    throw BadParams("unknown predicate '" + std::string(text) + "'");
}

std::string to_string(const Predicate& p) {
    switch (p.kind) {
    case PredicateKind::MonoC3: return "mono-c3";
    case PredicateKind::MonoC4: return "mono-c4";
    case PredicateKind::MonoC3OrC5: return "mono-c3-or-c5";
    case PredicateKind::NoMonoOddCycle: return "no-mono-odd-cycle";
    case PredicateKind::MainTheoremBody: return "main-theorem-body";
    case PredicateKind::SpectrumCoversRange:
        return "spectrum-covers-range(" + std::to_string(p.lo) + "," + std::to_string(p.hi) + ")";
    }
    return "?";
}

bool evaluate(const Predicate& p, const ColouredGraph& g, const SpectrumOptions& opts) {
    if (p.kind == PredicateKind::NoMonoOddCycle)
        return bipartition(g.view(Colour::Red)).has_value() && bipartition(g.view(Colour::Blue)).has_value();
    const MonoSpectrum ms = mono_spectrum(g, opts);
    auto either = [&](int l) { return ms.red.contains(l) || ms.blue.contains(l); };
    auto covers = [&](int lo, int hi) {
        for (int l = lo; l <= hi; ++l)
            if (!either(l)) return false;
        return true;
    };
    switch (p.kind) {
    case PredicateKind::MonoC3: return either(3);
    case PredicateKind::MonoC4: return either(4);
    case PredicateKind::MonoC3OrC5: return either(3) || either(5);
    case PredicateKind::SpectrumCoversRange: return covers(p.lo, p.hi);
    case PredicateKind::MainTheoremBody:
        return covers(4, (g.order() + 1) / 2) || recognize_two_bipartite(g).has_value();
    case PredicateKind::NoMonoOddCycle: break;
    }
    return false;
}

ColouredGraph apply_colouring(const UncolouredView& base, const std::vector<bool>& red_bits) {
    const EdgeList edges = base.edges();
    if (red_bits.size() != edges.size()) throw BadMaskLength(red_bits.size(), edges.size());
    EdgeList red, blue;
    for (std::size_t i = 0; i < edges.size(); ++i) (red_bits[i] ? red : blue).push_back(edges[i]);
    return ColouredGraph::build(base.order(), red, blue);
}

namespace {

std::vector<bool> bits_of(std::uint64_t value, std::size_t m) {
    std::vector<bool> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = (value >> i) & 1U;
    return out;
}

std::vector<bool> random_bits(XorShift64Star& rng, std::size_t m) {
    std::vector<bool> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = rng.next() >> 63;
    return out;
}

std::uint64_t worker_seed(std::uint64_t seed, int worker) {
    return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(worker);
}

bool rows_bipartite(std::span<const std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    std::array<int, 64> side{};
    side.fill(-1);
    std::array<int, 64> queue{};
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            const int v = queue[head++];
            for (std::uint64_t x = rows[v]; x; x &= x - 1) {
                const int w = std::countr_zero(x);
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue[tail++] = w;
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Bit-level colouring evaluator for bases of at most 64 vertices.
class FastChecker {
public:
    FastChecker(const UncolouredView& base, Predicate pred) : base_(base), pred_(pred), n_(base.order()) {
        for (const Edge& e : base.edges()) edges_.push_back(e);
    }

    template <class BitAt>
    bool holds(BitAt&& red_at) {
        std::array<std::uint64_t, 64> red{}, blue{};
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto& rows = red_at(i) ? red : blue;
            rows[edges_[i].u] |= std::uint64_t{1} << edges_[i].v;
            rows[edges_[i].v] |= std::uint64_t{1} << edges_[i].u;
        }
        const std::span<const std::uint64_t> r(red.data(), static_cast<std::size_t>(n_));
        const std::span<const std::uint64_t> b(blue.data(), static_cast<std::size_t>(n_));
        auto either = [&](int l) { return contains_cycle_length(r, l) || contains_cycle_length(b, l); };
        auto covers = [&](int lo, int hi) {
            for (int l = lo; l <= hi; ++l)
                if (!either(l)) return false;
            return true;
        };
        switch (pred_.kind) {
        case PredicateKind::MonoC3: return either(3);
        case PredicateKind::MonoC4: return either(4);
        case PredicateKind::MonoC3OrC5: return either(3) || either(5);
        case PredicateKind::SpectrumCoversRange: return covers(pred_.lo, pred_.hi);
        case PredicateKind::NoMonoOddCycle: return rows_bipartite(r) && rows_bipartite(b);
        case PredicateKind::MainTheoremBody: {
            if (covers(4, (n_ + 1) / 2)) return true;
            std::vector<bool> bits(edges_.size());
            for (std::size_t i = 0; i < edges_.size(); ++i) bits[i] = red_at(i);
            return recognize_two_bipartite(apply_colouring(base_, bits)).has_value();
        }
        }
        return false;
    }

private:
    const UncolouredView& base_;
    Predicate pred_;
    int n_;
    EdgeList edges_;
};

bool check_colouring(const UncolouredView& base, const Predicate& pred, const std::vector<bool>& bits) {
    if (base.order() <= 64) {
        FastChecker fc(base, pred);
        return fc.holds([&](std::size_t i) { return static_cast<bool>(bits[i]); });
    }
    return evaluate(pred, apply_colouring(base, bits));
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
    std::uint64_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

} // namespace

VerificationReport search_colourings(const UncolouredView& base, const Predicate& pred, const SearchBudget& budget,
                                     const std::string& instance) {
    const auto start = Clock::now();
    VerificationReport r;
    r.target = "search:" + to_string(pred);
    r.instance = instance;
    r.stats.workers = std::max(1, budget.workers);
    const int workers = r.stats.workers;
    const std::size_t m = static_cast<std::size_t>(base.edge_count());
    r.witness = {{"predicate", to_string(pred)}, {"mode", mode_name(budget.mode)}, {"edges", m}};

    if (budget.mode == SearchMode::Exhaustive) {
        if (m > 28) throw BadParams("exhaustive search needs at most 28 base edges, got " + std::to_string(m));
        const bool reduce = budget.colour_swap_reduction && pred.colour_symmetric() && m > 0;
        const std::uint64_t total = std::uint64_t{1} << (reduce ? m - 1 : m);
        const bool capped = budget.max_items > 0 && budget.max_items < total;
        const std::uint64_t limit = capped ? budget.max_items : total;
        r.witness["colour_swap_reduction"] = reduce;
        r.witness["total_colourings"] = total;

        auto colouring_bits = [&](std::uint64_t index) { return reduce ? (index << 1) | 1U : index; };
        constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
        std::atomic<std::uint64_t> first_fail{kNone};
        auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
            if (base.order() <= 64) {
                FastChecker fc(base, pred);
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (i > first_fail.load(std::memory_order_relaxed)) return;
                    const std::uint64_t bits = colouring_bits(i);
                    if (!fc.holds([bits](std::size_t e) { return ((bits >> e) & 1U) != 0; })) {
                        atomic_min(first_fail, i);
                        return;
                    }
                }
            } else {
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (i > first_fail.load(std::memory_order_relaxed)) return;
                    if (!evaluate(pred, apply_colouring(base, bits_of(colouring_bits(i), m)))) {
                        atomic_min(first_fail, i);
                        return;
                    }
                }
            }
        };
        if (workers == 1) {
            scan(0, limit);
        } else {
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (limit + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
            for (int w = 0; w < workers; ++w) {
                const std::uint64_t lo = std::min(limit, chunk * static_cast<std::uint64_t>(w));
                const std::uint64_t hi = std::min(limit, lo + chunk);
                pool.emplace_back(scan, lo, hi);
            }
            for (auto& t : pool) t.join();
        }
        const std::uint64_t fail = first_fail.load();
        if (fail != kNone) {
            r.verdict = Verdict::RefutedAtThisN;
            r.stats.searched = fail + 1;
            r.counterexample = apply_colouring(base, bits_of(colouring_bits(fail), m));
            r.witness["counterexample_index"] = fail;
            r.witness["counterexample_cg"] = serialize(*r.counterexample);
            r.reason = "a colouring violates the predicate";
        } else if (capped) {
            r.verdict = Verdict::Inconclusive;
            r.stats.searched = limit;
            r.reason = "BudgetExceeded: searched " + std::to_string(limit) + " of " + std::to_string(total);
        } else {
            r.verdict = Verdict::Confirmed;
            r.stats.searched = total;
        }
    } else if (budget.mode == SearchMode::Random) {
        const std::uint64_t items = budget.max_items ? budget.max_items : 10000;
        r.stats.seed = budget.seed;
        struct Result {
            std::uint64_t processed = 0;
            std::optional<std::vector<bool>> failing;
        };
        std::vector<Result> results(static_cast<std::size_t>(workers));
        auto run = [&](int w) {
            XorShift64Star rng(worker_seed(budget.seed, w));
            const std::uint64_t share = items / workers + (static_cast<std::uint64_t>(w) < items % workers ? 1 : 0);
            for (std::uint64_t i = 0; i < share; ++i) {
                auto bits = random_bits(rng, m);
                ++results[w].processed;
                if (!check_colouring(base, pred, bits)) {
                    results[w].failing = std::move(bits);
                    return;
                }
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& res : results) r.stats.searched += res.processed;
        auto it = std::find_if(results.begin(), results.end(), [](const Result& x) { return x.failing.has_value(); });
        if (it != results.end()) {
            r.verdict = Verdict::RefutedAtThisN;
            r.counterexample = apply_colouring(base, *it->failing);
            r.witness["counterexample_cg"] = serialize(*r.counterexample);
            r.reason = "a sampled colouring violates the predicate";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.reason = "no violation among sampled colourings; sampling cannot confirm";
        }
    } else {
        throw BadParams("local search needs an objective; use minimize_mono_circumference");
    }
    r.stats.elapsed_ms = ms_since(start);
    return r;
}

namespace {

// Lexicographic objective: monochromatic circumference first, then the
// sum of both circumferences, then the total spectrum size.
using Objective = std::tuple<int, int, int>;

Objective objective(const UncolouredView& base, const std::vector<bool>& bits, const SpectrumOptions& opts) {
    const MonoSpectrum ms = mono_spectrum(apply_colouring(base, bits), opts);
    return {ms.mono_circumference, ms.red.circumference + ms.blue.circumference,
            static_cast<int>(ms.red.lengths.size() + ms.blue.lengths.size())};
}

struct MinResult {
    Objective best{std::numeric_limits<int>::max(), 0, 0};
    std::vector<bool> colouring;
    std::uint64_t evaluations = 0;
    std::uint64_t restarts = 0;
};

MinResult minimise_random(const UncolouredView& base, std::uint64_t items, std::uint64_t seed,
                          const SpectrumOptions& opts) {
    MinResult out;
    XorShift64Star rng(seed);
    const auto m = static_cast<std::size_t>(base.edge_count());
    for (std::uint64_t i = 0; i < items; ++i) {
        auto bits = random_bits(rng, m);
        const Objective o = objective(base, bits, opts);
        ++out.evaluations;
        if (o < out.best) {
            out.best = o;
            out.colouring = std::move(bits);
        }
    }
    return out;
}

MinResult minimise_local(const UncolouredView& base, std::uint64_t items, std::uint64_t seed,
                         const SpectrumOptions& opts) {
    MinResult out;
    XorShift64Star rng(seed);
    const auto m = static_cast<std::size_t>(base.edge_count());
    std::vector<std::size_t> order(m);
    while (out.evaluations < items) {
        ++out.restarts;
        auto bits = random_bits(rng, m);
        Objective current = objective(base, bits, opts);
        ++out.evaluations;
        for (;;) {
            for (std::size_t i = 0; i < m; ++i) order[i] = i;
            for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
            std::optional<std::size_t> best_move;
            Objective best_value = current;
            for (std::size_t e : order) {
                if (out.evaluations >= items) break;
                bits[e] = !bits[e];
                const Objective o = objective(base, bits, opts);
                ++out.evaluations;
                bits[e] = !bits[e];
                if (o < best_value) {
                    best_value = o;
                    best_move = e;
                }
            }
            if (!best_move) break;
            bits[*best_move] = !bits[*best_move];
            current = best_value;
            if (out.evaluations >= items) break;
        }
        if (current < out.best) {
            out.best = current;
            out.colouring = bits;
        }
    }
    return out;
}

} // namespace

VerificationReport minimize_mono_circumference(const UncolouredView& base, const SearchBudget& budget,
                                               const std::string& instance, const SpectrumOptions& opts) {
    const auto start = Clock::now();
    if (budget.mode == SearchMode::Exhaustive)
        throw BadParams("minimisation runs in random or local mode");
    VerificationReport r;
    r.target = "min-mono-circumference";
    r.instance = instance;
    r.stats.seed = budget.seed;
    r.stats.workers = std::max(1, budget.workers);
    const int workers = r.stats.workers;
    const std::uint64_t items = budget.max_items ? budget.max_items : 10000;

    std::vector<MinResult> results(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        const std::uint64_t share = items / workers + (static_cast<std::uint64_t>(w) < items % workers ? 1 : 0);
        const std::uint64_t seed = worker_seed(budget.seed, w);
        results[w] = budget.mode == SearchMode::Random ? minimise_random(base, share, seed, opts)
                                                       : minimise_local(base, share, seed, opts);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    const MinResult* best = nullptr;
    std::uint64_t restarts = 0;
    for (const auto& res : results) {
        r.stats.searched += res.evaluations;
        restarts += res.restarts;
        if (!res.colouring.empty() || base.edge_count() == 0)
            if (!best || res.best < best->best) best = &res;
    }
    r.verdict = Verdict::Inconclusive;
    r.reason = "heuristic minimum; an upper bound on the true minimum only";
    r.witness = {{"mode", mode_name(budget.mode)}, {"restarts", restarts}};
    if (best && best->evaluations > 0) {
        r.counterexample = apply_colouring(base, best->colouring);
        r.witness["best_mono_circumference"] = std::get<0>(best->best);
        r.witness["best_colouring_cg"] = serialize(*r.counterexample);
    }
    r.stats.elapsed_ms = ms_since(start);
    return r;
}

std::uint64_t count_two_bipartite_labelled(int p) {
    if (p < 1) throw BadParams("p must be positive");
    if (p > 3) throw TooLargeForExact(p, 3, "labelled 2-bipartite count by mask iteration");
    const std::size_t bits = static_cast<std::size_t>(2 * p * p);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
        if (recognize_two_bipartite(gen_two_bipartite_k4p(p, mask_from_integer(mask, bits)))) ++count;
    return count;
}

std::uint64_t count_two_bipartite_distinct(int p) {
    if (p != 1) throw TooLargeForExact(p, 1, "distinct 2-bipartite count by brute force");
    const ColouredGraph k = gen_two_bipartite_k4p(p, std::vector<bool>(static_cast<std::size_t>(2 * p * p), false));
    const UncolouredView base = k.union_view();
    const auto m = static_cast<std::size_t>(base.edge_count());
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
        const ColouredGraph g = apply_colouring(base, bits_of(c, m));
        if (bipartition(g.view(Colour::Red)) && bipartition(g.view(Colour::Blue))) ++count;
    }
    return count;
}

VerificationReport verify_k_colour_conjecture(const KColouredGraph& g, const std::string& instance,
                                              const SpectrumOptions& opts) {
    const auto start = Clock::now();
    VerificationReport r;
    r.target = "k-colour";
    r.instance = instance;
    const int n = g.order();
    const int k = g.colours();
    if (k > 8) throw BadParams("k-colour verification supports k <= 8");
    const std::int64_t parts = std::int64_t{1} << k;
    const UncolouredView all = g.union_view();
    const int md = min_degree(all);
    // delta >= (1 - 2^-k) n  <=>  2^k delta >= (2^k - 1) n
    if (parts * md < (parts - 1) * n) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "hypothesis unmet: min degree below (1 - 2^-k) n";
        r.witness = {{"min_degree", md}, {"k", k}};
    } else {
        bool extremal = false;
        if (auto ps = multipartite_parts(all); ps && static_cast<std::int64_t>(ps->size()) == parts) {
            extremal = std::all_of(ps->begin(), ps->end(), [&](const VertexSet& s) { return s.size() == ps->front().size(); });
            for (int c = 0; c < k && extremal; ++c) extremal = bipartition(g.view(c)).has_value();
        }
        const int lo = std::max<int>(3, static_cast<int>(std::min<std::int64_t>(parts, 3)));
        const std::int64_t den = parts / 2;
        const int hi = static_cast<int>((n + den - 1) / den);
        r.witness = {{"k", k}, {"range", {lo, hi}}};
        if (extremal) {
            r.verdict = Verdict::ExtremalCase;
            r.reason = "balanced complete 2^k-partite graph with every colour bipartite";
        } else {
            std::vector<CycleSpectrum> spectra;
            for (int c = 0; c < k; ++c) spectra.push_back(cycle_spectrum(g.view(c), opts));
            std::vector<int> missing;
            for (int l = lo; l <= hi; ++l)
                if (std::none_of(spectra.begin(), spectra.end(), [l](const CycleSpectrum& s) { return s.contains(l); }))
                    missing.push_back(l);
            json lens = json::array();
            for (const auto& s : spectra) lens.push_back(s.lengths);
            r.witness["lengths_per_colour"] = lens;
            if (missing.empty()) {
                r.verdict = Verdict::Confirmed;
            } else {
                r.verdict = Verdict::RefutedAtThisN;
                r.reason = "some lengths in range appear in no colour";
                r.witness["missing_lengths"] = missing;
                r.witness["counterexample_kcg"] = serialize(g);
                if (k <= 2) r.counterexample = g.to_coloured();
            }
        }
    }
    r.stats.searched = 1;
    r.stats.elapsed_ms = ms_since(start);
    return r;
}

namespace {

// Least integer strictly greater than 1/x, for x > 0.
int least_t_above_reciprocal(const Rational& x) {
    const Rational inv = Rational(1) / x;
    return static_cast<int>(monocycle::floor(inv)) + 1;
}

PhiCertificate certify(std::string family, ConstructionSpec spec, Rational bound, const Rational& c,
                       const SpectrumOptions& opts) {
    PhiCertificate cert;
    cert.family = std::move(family);
    cert.spec = std::move(spec);
    cert.claimed_bound = bound;
    const ColouredGraph g = generate(cert.spec);
    cert.order = g.order();
    cert.min_degree = min_degree(g);
    cert.mono_circumference = mono_spectrum(g, opts).mono_circumference;
    cert.min_degree_exceeds_cn = Rational(cert.min_degree) > c * Rational(cert.order);
    cert.ratio_within_bound = cert.ratio() <= bound;
    return cert;
}

} // namespace

std::vector<PhiCertificate> phi_certificates(const Rational& c, const SpectrumOptions& opts) {
    if (c <= 0 || c >= 1) throw BadParams("c must lie in (0, 1)");
    std::vector<PhiCertificate> out;

    {
        const int t = least_t_above_reciprocal(3 * (1 - c));
        if (3 * t <= kMaxVertices) {
            ConstructionSpec spec{ConstructionKind::Fst, {{"s", 2 * t}, {"t", t}}, std::nullopt, std::nullopt};
            out.push_back(certify("F_{2t,t}", spec, Rational(2, 3), c, opts));
        }
    }
    if (c >= Rational(5, 9) && c < Rational(3, 5)) {
        const int t = least_t_above_reciprocal(3 - 5 * c);
        if (5 * t <= kMaxVertices) {
            ConstructionSpec spec{ConstructionKind::GPrime, {{"t", t}}, std::nullopt, std::nullopt};
            out.push_back(certify("G'_t", spec, Rational(2, 5), c, opts));
        }
    }
    for (int r = 2; c < Rational(2 * r - 1, r * r); ++r) {
        const int t = least_t_above_reciprocal(Rational(2 * r - 1) - Rational(r * r) * c);
        if (r * r * t > kMaxVertices) break;
        ConstructionSpec spec{ConstructionKind::GRT, {{"r", r}, {"t", t}}, std::nullopt, std::nullopt};
        out.push_back(certify("G^(r)_t", spec, Rational(1, r), c, opts));
    }
    return out;
}

json to_json(const VerificationReport& r, bool include_timing) {
    json stats = {{"searched", r.stats.searched}, {"workers", r.stats.workers}};
    stats["seed"] = r.stats.seed ? json(*r.stats.seed) : json(nullptr);
    if (include_timing) stats["elapsed_ms"] = r.stats.elapsed_ms;
    return {{"target", r.target},     {"instance", r.instance}, {"verdict", verdict_name(r.verdict)},
            {"reason", r.reason},     {"witness", r.witness},   {"stats", stats}};
}

} // namespace monocycle
