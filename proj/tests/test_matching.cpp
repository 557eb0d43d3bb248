#include <doctest.h>

#include <random>

#include "monocycle/matching.hpp"
#include "support/corpus.hpp"

using namespace monocycle;

namespace {

void check_certificate(const UncolouredView& g, const MatchingCertificate& m) {
    VertexSet used;
    for (const Edge& e : m.edges) {
        REQUIRE(e.u < e.v);
        REQUIRE(g.adjacent(e.u, e.v));
        REQUIRE_FALSE(used.contains(e.u));
        REQUIRE_FALSE(used.contains(e.v));
        used.insert(e.u);
        used.insert(e.v);
    }
    CHECK(m.covered == 2 * static_cast<int>(m.edges.size()));
    CHECK(m.deficiency == g.order() - m.covered);
    CHECK(odd_components(g, m.berge_witness) == m.berge_witness.size() + m.deficiency);
}

} // namespace

TEST_CASE("max_matching examples") {
    const auto k4 = max_matching(corpus::complete(4));
    CHECK(k4.covered == 4);
    CHECK(k4.deficiency == 0);
    CHECK(k4.berge_witness.empty());

    const auto star = UncolouredView::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto ms = max_matching(star);
    CHECK(ms.covered == 2);
    CHECK(ms.deficiency == 2);
    CHECK(ms.berge_witness == VertexSet::of({0}));
    CHECK(odd_components(star, ms.berge_witness) == 3);

    const auto c7 = max_matching(corpus::cycle(7));
    CHECK(c7.covered == 6);
    CHECK(c7.deficiency == 1);
    CHECK(c7.berge_witness.empty());
}

TEST_CASE("max_matching on the empty graph") {
    const auto m = max_matching(UncolouredView(5));
    CHECK(m.edges.empty());
    CHECK(m.deficiency == 5);
    CHECK(m.berge_witness.empty());
    CHECK(max_matching(UncolouredView(0)).deficiency == 0);
}

TEST_CASE("odd_components") {
    CHECK(odd_components(corpus::complete(4), {}) == 0);
    const auto star = UncolouredView::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(odd_components(star, VertexSet::of({0})) == 3);
    CHECK(odd_components(corpus::cycle(6), VertexSet::of({0, 3})) == 0);
    CHECK(odd_components(corpus::cycle(6), VertexSet::of({0, 2})) == 2);
}

TEST_CASE("hall_violator") {
    const auto k33 = corpus::complete_bipartite(3, 3);
    CHECK_FALSE(hall_violator(k33, VertexSet::range(0, 3), VertexSet::range(3, 6), 0).has_value());
    const auto g = UncolouredView::from_edges(3, {{0, 2}, {1, 2}});
    const auto s = hall_violator(g, VertexSet::of({0, 1}), VertexSet::of({2}), 0);
    REQUIRE(s.has_value());
    CHECK(*s == VertexSet::of({0, 1}));
    CHECK_FALSE(hall_violator(g, VertexSet::of({0, 1}), VertexSet::of({2}), 1).has_value());
    CHECK_THROWS_AS(hall_violator(g, VertexSet::of({0, 1}), VertexSet::of({1, 2}), 0), BadParams);
}

TEST_CASE("hall_violator agrees with bipartite matching size") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const auto g = corpus::random_graph(n, 0.3, rng);
        VertexSet left, right;
        for (int v = 0; v < n; ++v) {
            const auto r = rng() % 3;
            if (r == 0) left.insert(v);
            if (r == 1) right.insert(v);
        }
        const int defect = static_cast<int>(rng() % 3);
        const auto viol = hall_violator(g, left, right, defect);
        const int size = bipartite_matching_size(g, left, right);
        CHECK(viol.has_value() == (size < left.size() - defect));
        if (viol) {
            REQUIRE(((*viol) - left).empty());
            VertexSet nb;
            viol->for_each([&](int v) { nb |= g.neighbours(v) & right; });
            CHECK(nb.size() < viol->size() - defect);
        }
        // cross-check against general matching on the bipartite subgraph
        EdgeList es;
        left.for_each([&](int u) {
            (g.neighbours(u) & right).for_each([&](int v) { es.push_back({std::min(u, v), std::max(u, v)}); });
        });
        CHECK(max_matching(UncolouredView::from_edges(n, es)).edges.size() == static_cast<std::size_t>(size));
    }
}

TEST_CASE("blossom vs exhaustive oracles on every graph up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& s : corpus::unlabelled(n)) {
            const auto g = s.view();
            const auto m = max_matching(g);
            check_certificate(g, m);
            CHECK(static_cast<int>(m.edges.size()) == corpus::matching_oracle(s, (1U << n) - 1));
            CHECK(m.deficiency == corpus::berge_oracle(s));
        }
}

TEST_CASE("Berge formula on labelled graphs with 8 vertices (sampled)") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto code = rng() & ((std::uint64_t{1} << 28) - 1);
        const auto s = corpus::from_code(8, code);
        const auto m = max_matching(s.view());
        check_certificate(s.view(), m);
        CHECK(m.deficiency == corpus::berge_oracle(s));
    }
}

TEST_CASE("library exhaustive oracles agree with test oracles") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto g = corpus::random_graph(n, 0.35, rng);
        const auto s = corpus::from_view(g);
        CHECK(static_cast<int>(max_matching_exhaustive(g).size()) == corpus::matching_oracle(s, (1U << n) - 1));
        const auto [def, witness] = berge_deficiency_exhaustive(g);
        CHECK(def == corpus::berge_oracle(s));
        CHECK(odd_components(g, witness) - witness.size() == def);
    }
    CHECK_THROWS_AS(max_matching_exhaustive(UncolouredView(17)), TooLargeForExact);
    CHECK_THROWS_AS(berge_deficiency_exhaustive(UncolouredView(21)), TooLargeForExact);
}

TEST_CASE("certificates on larger random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 10 + static_cast<int>(rng() % 120);
        const double p = 1.5 / n + static_cast<double>(rng() % 100) / 1000.0;
        const auto g = corpus::random_graph(n, p, rng);
        check_certificate(g, max_matching(g));
    }
}

TEST_CASE("matching is deterministic") {
    std::mt19937_64 rng(1);
    const auto g = corpus::random_graph(30, 0.2, rng);
    CHECK(max_matching(g).edges == max_matching(g).edges);
}

TEST_CASE("induced subgraph") {
    const auto h = induced(corpus::complete(5), VertexSet::of({0, 2, 4}));
    CHECK(h.order() == 5);
    CHECK(h.edge_count() == 3);
    CHECK_FALSE(h.adjacent(0, 1));
}
