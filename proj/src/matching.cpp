#include "monocycle/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocycle {

UncolouredView induced(const UncolouredView& g, const VertexSet& keep) {
    EdgeList edges;
    for (const Edge& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v)) edges.push_back(e);
    return UncolouredView::from_edges(g.order(), edges);
}

int odd_components(const UncolouredView& g, const VertexSet& removed) {
    VertexSet alive = g.vertices() - removed;
    int odd = 0;
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
        odd += comp.size() % 2;
    }
    return odd;
}

namespace {

// Edmonds' blossom algorithm in the classic base/parent formulation.
class Blossom {
public:
    explicit Blossom(const UncolouredView& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {
        adj_.resize(n_);
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v).to_vector();
    }

    void solve() {
        for (int u = 0; u < n_; ++u) {
            if (match_[u] != -1) continue;
            for (int v : adj_[u])
                if (match_[v] == -1) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
        }
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != -1) continue;
            reset_forest();
            plant(root);
            const int end = grow();
            if (end != -1) augment(end);
        }
    }

    // Grows one alternating forest from every exposed vertex of a maximum
    // matching; its outer vertices are exactly those missed by some
    // maximum matching.
    VertexSet outer_vertices() {
        reset_forest();
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) plant(v);
        if (grow() != -1) throw std::logic_error("matching not maximum: augmenting path remains");
        VertexSet d;
        for (int v = 0; v < n_; ++v)
            if (used_[v]) d.insert(v);
        return d;
    }

    [[nodiscard]] const std::vector<int>& mates() const { return match_; }

private:
    void reset_forest() {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(used_.begin(), used_.end(), 0);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        queue_.clear();
        head_ = 0;
    }

    void plant(int root) {
        used_[root] = 1;
        queue_.push_back(root);
    }

    [[nodiscard]] bool is_outer(int v) const {
        return match_[v] == -1 ? used_[v] != 0 : parent_[match_[v]] != -1;
    }

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            if (match_[b] == -1) throw std::logic_error("outer vertices in different trees are adjacent");
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    // Returns an exposed vertex reached by an augmenting path, or -1.
    int grow() {
        while (head_ < queue_.size()) {
            const int v = queue_[head_++];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (is_outer(to)) {
                    const int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    queue_.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent_[v];
            const int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    const UncolouredView& g_;
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
    std::vector<int> queue_;
    std::size_t head_ = 0;
};

bool witness_holds(const UncolouredView& g, const VertexSet& s, int deficiency) {
    return odd_components(g, s) == s.size() + deficiency;
}

} // namespace

MatchingCertificate max_matching(const UncolouredView& g) {
    Blossom solver(g);
    solver.solve();
    MatchingCertificate cert;
    const auto& mate = solver.mates();
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) cert.edges.push_back({v, mate[v]});
    cert.covered = 2 * static_cast<int>(cert.edges.size());
    cert.deficiency = g.order() - cert.covered;

    const VertexSet d = solver.outer_vertices();
    VertexSet a;
    d.for_each([&](int v) { a |= g.neighbours(v); });
    a -= d;
    cert.berge_witness = a;
    if (!witness_holds(g, a, cert.deficiency)) {
        if (g.order() > 20) throw std::logic_error("Gallai-Edmonds witness failed the Berge equality");
        auto [def, s] = berge_deficiency_exhaustive(g);
        if (def != cert.deficiency) throw std::logic_error("blossom deficiency disagrees with Berge formula");
        cert.berge_witness = s;
    }
    return cert;
}

namespace {

void bnb(const UncolouredView& g, int v, std::vector<int>& mate, int size, int& best,
         std::vector<int>& best_mate) {
    const int n = g.order();
    while (v < n && mate[v] != -1) ++v;
    int unmatched = 0;
    for (int w = v; w < n; ++w) unmatched += mate[w] == -1;
    if (size + unmatched / 2 <= best) return;
    if (v >= n) {
        best = size;
        best_mate = mate;
        return;
    }
    for (int w : g.neighbours(v).to_vector()) {
        if (w <= v || mate[w] != -1) continue;
        mate[v] = w;
        mate[w] = v;
        bnb(g, v + 1, mate, size + 1, best, best_mate);
        mate[v] = mate[w] = -1;
    }
    mate[v] = v;  // leave v exposed
    bnb(g, v + 1, mate, size, best, best_mate);
    mate[v] = -1;
}

} // namespace

EdgeList max_matching_exhaustive(const UncolouredView& g) {
    if (g.order() > 16) throw TooLargeForExact(g.order(), 16, "exhaustive matching");
    std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> best_mate = mate;
    int best = -1;
    bnb(g, 0, mate, 0, best, best_mate);
    EdgeList out;
    for (int v = 0; v < g.order(); ++v)
        if (best_mate[v] > v) out.push_back({v, best_mate[v]});
    return out;
}

std::pair<int, VertexSet> berge_deficiency_exhaustive(const UncolouredView& g) {
    const int n = g.order();
    if (n > 20) throw TooLargeForExact(n, 20, "exhaustive Berge witness");
    int best = odd_components(g, {});
    VertexSet best_set;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U) s.insert(v);
        const int value = odd_components(g, s) - s.size();
        if (value > best) {
            best = value;
            best_set = s;
        }
    }
    return {best, best_set};
}

namespace {

bool try_kuhn(const UncolouredView& g, int u, const VertexSet& right, std::vector<int>& match_right,
              std::vector<char>& seen) {
    bool ok = false;
    (g.neighbours(u) & right).for_each([&](int w) {
        if (ok || seen[w]) return;
        seen[w] = 1;
        if (match_right[w] == -1 || try_kuhn(g, match_right[w], right, match_right, seen)) {
            match_right[w] = u;
            ok = true;
        }
    });
    return ok;
}

std::vector<int> kuhn(const UncolouredView& g, const VertexSet& left, const VertexSet& right) {
    std::vector<int> match_right(static_cast<std::size_t>(g.order()), -1);
    left.for_each([&](int u) {
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        try_kuhn(g, u, right, match_right, seen);
    });
    return match_right;
}

void check_sides(const UncolouredView& g, const VertexSet& left, const VertexSet& right) {
    if (!(left & right).empty()) throw BadParams("left and right vertex sets must be disjoint");
    if (!((left | right) - g.vertices()).empty()) throw InvalidVertex((left | right).first(), g.order());
}

} // namespace

int bipartite_matching_size(const UncolouredView& g, const VertexSet& left, const VertexSet& right) {
    check_sides(g, left, right);
    const auto match_right = kuhn(g, left, right);
    return static_cast<int>(std::count_if(match_right.begin(), match_right.end(), [](int x) { return x != -1; }));
}

std::optional<VertexSet> hall_violator(const UncolouredView& g, const VertexSet& left,
                                       const VertexSet& right, int defect) {
    check_sides(g, left, right);
    const auto match_right = kuhn(g, left, right);
    VertexSet matched_left;
    for (int w = 0; w < g.order(); ++w)
        if (match_right[w] != -1) matched_left.insert(match_right[w]);
    const VertexSet exposed = left - matched_left;
    if (exposed.size() <= defect) return std::nullopt;

    // Koenig: left vertices reachable from exposed ones by alternating paths
    // have neighbourhood of size |S| - |exposed|.
    VertexSet s = exposed;
    VertexSet reached_right;
    VertexSet frontier = exposed;
    while (!frontier.empty()) {
        VertexSet next_right;
        frontier.for_each([&](int u) { next_right |= g.neighbours(u) & right; });
        next_right -= reached_right;
        reached_right |= next_right;
        VertexSet next_left;
        next_right.for_each([&](int w) { next_left.insert(match_right[w]); });
        frontier = next_left - s;
        s |= frontier;
    }
    return s;
}

} // namespace monocycle
