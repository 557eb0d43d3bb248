#include "monocycle/structure.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

#include "monocycle/matching.hpp"

namespace monocycle {

std::vector<VertexSet> components(const UncolouredView& g) {
    std::vector<VertexSet> out;
    VertexSet alive = g.vertices();
    while (!alive.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(alive.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbours(v); });
            frontier = next - comp;
        }
        alive -= comp;
        out.push_back(comp);
    }
    // Discovery order is by smallest vertex already, so a stable sort keeps
    // the tie-break.
    std::stable_sort(out.begin(), out.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    return out;
}

ComponentDecomposition colour_components(const ColouredGraph& g, Colour c) {
    return {c, components(g.view(c))};
}

VertexSet largest_component(const ColouredGraph& g, Colour c) {
    const auto comps = components(g.view(c));
    if (comps.empty() || comps.front().size() < 2) return {};
    return comps.front();
}

WPartition w_partition(const ColouredGraph& g) {
    WPartition w;
    w.red_largest = largest_component(g, Colour::Red);
    w.blue_largest = largest_component(g, Colour::Blue);
    w.w1 = w.blue_largest & w.red_largest;
    w.w2 = w.red_largest - w.blue_largest;
    w.w3 = w.blue_largest - w.red_largest;
    w.w4 = g.union_view().vertices() - (w.red_largest | w.blue_largest);
    return w;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UncolouredView& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    VertexSet left, right;
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            bool odd = false;
            g.neighbours(v).for_each([&](int w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    for (int v = 0; v < n; ++v) (side[v] == 0 ? left : right).insert(v);
    return std::make_pair(left, right);
}

std::optional<std::vector<VertexSet>> multipartite_parts(const UncolouredView& g) {
    const UncolouredView comp = g.complement();
    std::vector<VertexSet> parts;
    VertexSet seen;
    for (int v = 0; v < g.order(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet part = comp.neighbours(v);
        part.insert(v);
        // Each complement component must be a clique: every member has the
        // same closed non-neighbourhood.
        bool clique = true;
        part.for_each([&](int w) {
            VertexSet closed = comp.neighbours(w);
            closed.insert(w);
            clique &= closed == part;
        });
        if (!clique) return std::nullopt;
        seen |= part;
        parts.push_back(part);
    }
    return parts;
}

std::optional<int> recognize_k4p(const UncolouredView& g) {
    auto parts = multipartite_parts(g);
    if (!parts || parts->size() != 4) return std::nullopt;
    const int p = parts->front().size();
    for (const auto& part : *parts)
        if (part.size() != p) return std::nullopt;
    return p;
}

std::optional<TwoBipartiteLabelling> recognize_two_bipartite(const ColouredGraph& g) {
    if (!recognize_k4p(g.union_view())) return std::nullopt;
    auto red = bipartition(g.view(Colour::Red));
    auto blue = bipartition(g.view(Colour::Blue));
    if (!red || !blue) return std::nullopt;
    // Every edge is red (crossing V) or blue (crossing W), so each
    // intersection is independent in K_{p,p,p,p} and hence equals a part.
    return TwoBipartiteLabelling{red->first & blue->first, red->first & blue->second,
                                 red->second & blue->first, red->second & blue->second};
}

bool chvatal_sufficient(const UncolouredView& g) {
    const int n = g.order();
    if (n < 3) throw TooFewVertices(n);
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    // 1-based: d_k = d[k-1]; the premise needs k < n/2, i.e. 2k < n.
    for (int k = 1; 2 * k < n; ++k)
        if (d[k - 1] <= k && d[n - k - 1] < n - k) return false;
    return true;
}

bool dirac_sufficient(const UncolouredView& g) {
    if (g.order() < 3) throw TooFewVertices(g.order());
    return 2 * min_degree(g) >= g.order();
}

BondyClass bondy_classify(const UncolouredView& g, const SpectrumOptions& opts) {
    const int n = g.order();
    if (n < 3) throw TooFewVertices(n);
    if (4 * g.edge_count() < n * n) return BondyClass::NotApplicable;
    const CycleSpectrum spec = cycle_spectrum(g, opts);
    if (!spec.contains(n)) return BondyClass::NotApplicable;
    if (spec.covers(3, n)) return BondyClass::Pancyclic;
    auto parts = multipartite_parts(g);
    if (n % 2 == 0 && parts && parts->size() == 2 && parts->front().size() == n / 2)
        return BondyClass::BalancedCompleteBipartite;
    throw std::logic_error("hamiltonian graph with e >= n^2/4 is neither pancyclic nor K_{n/2,n/2}");
}

namespace {

Rational third(std::int64_t a) { return Rational(a, 3); }

// Largest S with Delta(colour[S]) <= bound and |S| >= min_size, searched
// from |S| = n downwards.
class SparseSetSearch {
public:
    SparseSetSearch(const UncolouredView& g, int bound) : g_(g), n_(g.order()), bound_(bound) {}

    std::optional<VertexSet> largest(int min_size) {
        for (int target = n_; target >= std::max(min_size, 0); --target) {
            target_ = target;
            chosen_ = {};
            deg_.assign(static_cast<std::size_t>(n_), 0);
            if (dfs(0, 0)) return chosen_;
        }
        return std::nullopt;
    }

private:
    bool dfs(int v, int count) {
        if (count == target_) return true;
        if (count + (n_ - v) < target_) return false;
        const VertexSet nbrs = g_.neighbours(v) & chosen_;
        bool can_take = deg_[v] <= bound_;
        nbrs.for_each([&](int u) { can_take &= deg_[u] + 1 <= bound_; });
        if (can_take) {
            chosen_.insert(v);
            g_.neighbours(v).for_each([&](int u) { ++deg_[u]; });
            if (dfs(v + 1, count + 1)) return true;
            g_.neighbours(v).for_each([&](int u) { --deg_[u]; });
            chosen_.erase(v);
        }
        return dfs(v + 1, count);
    }

    const UncolouredView& g_;
    int n_;
    int bound_;
    int target_ = 0;
    VertexSet chosen_;
    std::vector<int> deg_;  // number of chosen neighbours
};

using SizeRow = std::bitset<kMaxVertices + 1>;

// Groups the components of one colour (enumerated) and of the other
// (subset-sum DP over intersection sizes) into the four-part shape.
std::optional<FourPartCase> find_four_parts(const ColouredGraph& g, std::int64_t min_part,
                                            int component_limit, bool& refused) {
    const int n = g.order();
    auto red = components(g.view(Colour::Red));
    auto blue = components(g.view(Colour::Blue));
    const bool swap_roles = red.size() > blue.size();
    const auto& outer = swap_roles ? blue : red;
    const auto& inner = swap_roles ? red : blue;
    if (static_cast<int>(outer.size()) > component_limit) {
        refused = true;
        return std::nullopt;
    }
    const std::int64_t lo = std::max<std::int64_t>(min_part, 0);
    const std::size_t groupings = outer.empty() ? 0 : std::size_t{1} << (outer.size() - 1);

    for (std::size_t mask = 0; mask < groupings; ++mask) {
        VertexSet a, b;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            // Component 0 always goes to group A.
            if (i > 0 && ((mask >> (i - 1)) & 1U))
                b |= outer[i];
            else
                a |= outer[i];
        }
        const int sa = a.size();
        const int sb = b.size();
        if (sa < 2 * lo || sb < 2 * lo) continue;

        std::vector<std::pair<int, int>> weights;
        for (const auto& comp : inner) weights.emplace_back((comp & a).size(), (comp & b).size());

        // layers[j][x] holds the reachable y after deciding components < j.
        std::vector<std::vector<SizeRow>> layers(1, std::vector<SizeRow>(static_cast<std::size_t>(sa) + 1));
        layers[0][0].set(0);
        for (const auto& [dx, dy] : weights) {
            const auto& prev = layers.back();
            std::vector<SizeRow> next = prev;
            for (int x = 0; x + dx <= sa; ++x)
                if (prev[x].any()) next[x + dx] |= prev[x] << dy;
            layers.push_back(std::move(next));
        }
        const auto& last = layers.back();
        for (std::int64_t x = lo; x <= sa - lo; ++x) {
            for (std::int64_t y = lo; y <= sb - lo; ++y) {
                if (!last[x].test(static_cast<std::size_t>(y))) continue;
                // Walk back to recover which inner components form group C.
                VertexSet c;
                int cx = static_cast<int>(x), cy = static_cast<int>(y);
                for (std::size_t j = inner.size(); j-- > 0;) {
                    if (layers[j][cx].test(cy)) continue;
                    c |= inner[j];
                    cx -= weights[j].first;
                    cy -= weights[j].second;
                }
                const VertexSet all = VertexSet::range(0, n);
                const VertexSet d = all - c;
                const VertexSet& red_first = swap_roles ? c : a;
                const VertexSet red_second = swap_roles ? d : b;
                const VertexSet& blue_first = swap_roles ? a : c;
                const VertexSet blue_second = swap_roles ? b : d;
                return FourPartCase{{red_first & blue_first, red_first & blue_second,
                                     red_second & blue_first, red_second & blue_second}};
            }
        }
    }
    return std::nullopt;
}

int max_degree_within(const UncolouredView& g, const VertexSet& s) {
    int best = 0;
    s.for_each([&](int v) { best = std::max(best, (g.neighbours(v) & s).size()); });
    return best;
}

bool no_edges_between(const UncolouredView& g, const VertexSet& x, const VertexSet& y) {
    bool ok = true;
    x.for_each([&](int v) { ok &= (g.neighbours(v) & y).empty(); });
    return ok;
}

} // namespace

bool certifies(const ColouredGraph& g, const Rational& delta, const LargeMatchingCase& c) {
    const auto comps = colour_components(g, c.colour).components;
    if (c.component_index < 0 || c.component_index >= static_cast<int>(comps.size())) return false;
    const auto cert = max_matching(induced(g.view(c.colour), comps[c.component_index]));
    return cert.covered == c.matched_vertices &&
           Rational(cert.covered) >= (Rational(2, 3) + delta) * Rational(g.order());
}

bool certifies(const ColouredGraph& g, const Rational& delta, const SparseSetCase& c) {
    const Rational n(g.order());
    return Rational(c.set.size()) >= (Rational(2, 3) - delta / 2) * n &&
           max_degree_within(g.view(c.colour), c.set) == c.max_degree &&
           Rational(c.max_degree) <= 10 * delta * n;
}

bool certifies(const ColouredGraph& g, const Rational& delta, const FourPartCase& c) {
    const Rational bound = (Rational(1, 4) - 3 * delta) * Rational(g.order());
    VertexSet all;
    int total = 0;
    for (const auto& part : c.parts) {
        if (Rational(part.size()) < bound) return false;
        all |= part;
        total += part.size();
    }
    if (all != VertexSet::range(0, g.order()) || total != g.order()) return false;
    return no_edges_between(g.view(Colour::Red), c.parts[0] | c.parts[1], c.parts[2] | c.parts[3]) &&
           no_edges_between(g.view(Colour::Blue), c.parts[0] | c.parts[2], c.parts[1] | c.parts[3]);
}

TrichotomyVerdict trichotomy(const ColouredGraph& g, const Rational& delta, const TrichotomyOptions& opts) {
    TrichotomyVerdict out;
    out.delta = delta;
    out.delta_in_range = delta > 0 && delta < Rational(1, 36);
    const int n = g.order();
    const Rational nr(n);

    const Rational matching_need = (third(2) + delta) * nr;
    for (Colour c : kColours) {
        const auto comps = colour_components(g, c).components;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].size() < 2) continue;
            const int covered = max_matching(induced(g.view(c), comps[i])).covered;
            if (Rational(covered) >= matching_need &&
                (!out.case_i || covered > out.case_i->matched_vertices))
                out.case_i = LargeMatchingCase{c, static_cast<int>(i), covered};
        }
    }

    if (n > opts.sparse_set_limit) {
        out.case_ii_refused = true;
    } else {
        const std::int64_t min_size = monocycle::ceil((third(2) - delta / 2) * nr);
        const std::int64_t bound = monocycle::floor(10 * delta * nr);
        if (bound >= 0) {
            for (Colour c : kColours) {
                SparseSetSearch search(g.view(c), static_cast<int>(bound));
                if (auto s = search.largest(static_cast<int>(min_size))) {
                    out.case_ii = SparseSetCase{c, *s, max_degree_within(g.view(c), *s)};
                    break;
                }
            }
        }
    }

    const std::int64_t min_part = monocycle::ceil((Rational(1, 4) - 3 * delta) * nr);
    out.case_iii = find_four_parts(g, min_part, opts.grouping_component_limit, out.case_iii_refused);
    return out;
}

} // namespace monocycle
