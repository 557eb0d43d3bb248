#include "monocycle/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace monocycle {

bool CycleSpectrum::contains(int length) const {
    return std::binary_search(lengths.begin(), lengths.end(), length);
}

bool CycleSpectrum::covers(int lo, int hi) const {
    for (int l = lo; l <= hi; ++l)
        if (!contains(l)) return false;
    return true;
}

bool CycleSpectrum::has_odd_length() const {
    return std::any_of(lengths.begin(), lengths.end(), [](int l) { return l % 2 == 1; });
}

std::uint64_t subset_dp_lengths(std::span<const std::uint32_t> rows) {
    const int c = static_cast<int>(rows.size());
    if (c < 3) return 0;
    std::uint64_t full = 0;
    for (int l = 3; l <= c; ++l) full |= std::uint64_t{1} << l;

    std::uint64_t found = 0;
    std::vector<std::uint32_t> dp;
    std::vector<std::uint32_t> rel(static_cast<std::size_t>(c));
    for (int a = 0; a + 2 < c && found != full; ++a) {
        // Paths start at anchor a and use only vertices above it; vertex
        // a+1+i becomes bit i.
        const int m = c - a - 1;
        const std::uint32_t anchor_nbrs = rows[a] >> (a + 1);
        if (std::popcount(anchor_nbrs) < 2) continue;
        for (int i = 0; i < m; ++i) rel[i] = rows[a + 1 + i] >> (a + 1);

        dp.assign(std::size_t{1} << m, 0);
        for (std::uint32_t x = anchor_nbrs; x; x &= x - 1) {
            const std::uint32_t bit = x & (~x + 1);
            dp[bit] = bit;
        }
        const std::uint32_t limit = m == 32 ? 0xffffffffU : (std::uint32_t{1} << m) - 1;
        for (std::uint32_t mask = 1; mask <= limit && mask != 0; ++mask) {
            const std::uint32_t ends = dp[mask];
            if (!ends) continue;
            const int k = std::popcount(mask);
            if (k >= 2 && (ends & anchor_nbrs)) found |= std::uint64_t{1} << (k + 1);
            for (std::uint32_t x = ends; x; x &= x - 1) {
                const int v = std::countr_zero(x);
                for (std::uint32_t ext = rel[v] & ~mask; ext; ext &= ext - 1) {
                    const std::uint32_t bit = ext & (~ext + 1);
                    dp[mask | bit] |= bit;
                }
            }
        }
    }
    return found;
}

namespace {

// Repeatedly strips vertices of degree <= 1 and trims oversized false-twin
// classes inside `alive`.
VertexSet reduce_for_cycles(const UncolouredView& g, VertexSet alive) {
    bool changed = true;
    while (changed) {
        changed = false;
        bool stripped = true;
        while (stripped) {
            stripped = false;
            alive.for_each([&](int v) {
                if ((g.neighbours(v) & alive).size() <= 1) {
                    alive.erase(v);
                    stripped = true;
                }
            });
        }
        // Twins have identical open neighbourhoods and are never adjacent.
        // A cycle meets at most |N| members of a class with neighbourhood N,
        // and members are interchangeable, so keeping |N| of them is exact.
        std::map<std::vector<int>, std::vector<int>> classes;
        alive.for_each([&](int v) { classes[(g.neighbours(v) & alive).to_vector()].push_back(v); });
        for (const auto& [nbrs, members] : classes) {
            const std::size_t keep = nbrs.size();
            if (members.size() > keep) {
                for (std::size_t i = keep; i < members.size(); ++i) alive.erase(members[i]);
                changed = true;
            }
        }
    }
    return alive;
}

std::vector<VertexSet> components_within(const UncolouredView& g, VertexSet alive) {
    std::vector<VertexSet> out;
    while (!alive.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(alive.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbours(v); });
            frontier = (next & alive) - comp;
        }
        alive -= comp;
        out.push_back(comp);
    }
    return out;
}

} // namespace

CycleSpectrum cycle_spectrum(const UncolouredView& g, const SpectrumOptions& opts) {
    if (opts.exact_limit < 3 || opts.exact_limit > kHardExactLimit)
        throw BadParams("exact limit must lie in [3, 28]");
    CycleSpectrum out;
    out.n = g.order();
    const VertexSet core = reduce_for_cycles(g, g.vertices());

    std::vector<bool> present(static_cast<std::size_t>(g.order()) + 1, false);
    for (const VertexSet& comp : components_within(g, core)) {
        const std::vector<int> verts = comp.to_vector();
        const int c = static_cast<int>(verts.size());
        if (c < 3) continue;

        bool complete = true;
        for (int v : verts) complete &= (g.neighbours(v) & comp).size() == c - 1;
        if (complete) {
            for (int l = 3; l <= c; ++l) present[l] = true;
            continue;
        }
        if (c > opts.exact_limit) throw TooLargeForExact(c, opts.exact_limit, "cycle spectrum component");

        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (int i = 0; i < c; ++i) local[verts[i]] = i;
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(c), 0);
        for (int i = 0; i < c; ++i)
            (g.neighbours(verts[i]) & comp).for_each([&](int w) { rows[i] |= std::uint32_t{1} << local[w]; });
        const std::uint64_t found = subset_dp_lengths(rows);
        for (int l = 3; l <= c; ++l)
            if ((found >> l) & 1U) present[l] = true;
    }
    for (int l = 3; l <= g.order(); ++l)
        if (present[l]) out.lengths.push_back(l);
    out.circumference = out.lengths.empty() ? 0 : out.lengths.back();
    return out;
}

MonoSpectrum mono_spectrum(const ColouredGraph& g, const SpectrumOptions& opts) {
    MonoSpectrum out;
    out.red = cycle_spectrum(g.view(Colour::Red), opts);
    out.blue = cycle_spectrum(g.view(Colour::Blue), opts);
    out.mono_circumference = std::max(out.red.circumference, out.blue.circumference);
    return out;
}

bool is_hamiltonian(const UncolouredView& g, const SpectrumOptions& opts) {
    if (g.order() < 3) return false;
    return cycle_spectrum(g, opts).contains(g.order());
}

bool is_pancyclic(const UncolouredView& g, const SpectrumOptions& opts) {
    if (g.order() < 3) throw TooFewVertices(g.order());
    return cycle_spectrum(g, opts).covers(3, g.order());
}

std::optional<int> odd_girth(const UncolouredView& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            g.neighbours(v).for_each([&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                } else if (dist[w] == dist[v]) {
                    // Two equal-depth endpoints close an odd walk through root.
                    const int len = 2 * dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    }
    if (best == 0) return std::nullopt;
    return best;
}

int erdos_gallai_floor(const UncolouredView& g) {
    const int n = g.order();
    if (n < 2) return 0;
    const int e = g.edge_count();
    return (2 * e + (n - 2)) / (n - 1);
}

namespace {

bool extend_path(std::span<const std::uint64_t> rows, int anchor, int end, std::uint64_t used,
                 int remaining) {
    if (remaining == 0) return (rows[end] >> anchor) & 1U;
    const std::uint64_t above = anchor == 63 ? 0 : ~((std::uint64_t{2} << anchor) - 1);
    for (std::uint64_t ext = rows[end] & above & ~used; ext; ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        if (extend_path(rows, anchor, w, used | (std::uint64_t{1} << w), remaining - 1)) return true;
    }
    return false;
}

} // namespace

bool contains_cycle_length(std::span<const std::uint64_t> rows, int length) {
    const int n = static_cast<int>(rows.size());
    if (length < 3 || length > n) return false;
    if (length == 3) {
        for (int u = 0; u < n; ++u)
            for (std::uint64_t x = rows[u] & ~((std::uint64_t{2} << u) - 1); x; x &= x - 1)
                if (rows[u] & rows[std::countr_zero(x)]) return true;
        return false;
    }
    if (length == 4) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::popcount(rows[u] & rows[v]) >= 2) return true;
        return false;
    }
    for (int a = 0; a + length <= n; ++a)
        if (extend_path(rows, a, a, std::uint64_t{1} << a, length - 1)) return true;
    return false;
}

} // namespace monocycle
