#include <doctest.h>

#include <random>

#include "monocycle/constructions.hpp"
#include "monocycle/matching.hpp"
#include "monocycle/spectrum.hpp"
#include "monocycle/structure.hpp"
#include "support/corpus.hpp"

using namespace monocycle;
using corpus::complete;
using corpus::complete_bipartite;

namespace {

ColouredGraph all_red(int n) { return ColouredGraph::build(n, complete(n).edges(), {}); }

UncolouredView complete_multipartite(std::vector<int> sizes) {
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), sizes[i], static_cast<int>(i));
    const int n = static_cast<int>(part.size());
    EdgeList es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) es.push_back({u, v});
    return UncolouredView::from_edges(n, es);
}

// Independent check of the 2-bipartite structure: red only between
// (u11|u12) and (u21|u22), blue only between (u11|u21) and (u12|u22).
void check_labelling(const ColouredGraph& g, const TwoBipartiteLabelling& l) {
    const VertexSet top = l.u11 | l.u12;
    const VertexSet west = l.u11 | l.u21;
    for (const Edge& e : g.edges(Colour::Red)) CHECK(top.contains(e.u) != top.contains(e.v));
    for (const Edge& e : g.edges(Colour::Blue)) CHECK(west.contains(e.u) != west.contains(e.v));
    auto all = [&](const VertexSet& a, const VertexSet& b, Colour c) {
        a.for_each([&](int u) { b.for_each([&](int v) { CHECK(g.colour_of(u, v) == c); }); });
    };
    all(l.u11, l.u12, Colour::Blue);
    all(l.u21, l.u22, Colour::Blue);
    all(l.u11, l.u21, Colour::Red);
    all(l.u12, l.u22, Colour::Red);
}

} // namespace

TEST_CASE("colour_components") {
    const ColouredGraph f = gen_f_st(6, 3);
    const auto red = colour_components(f, Colour::Red);
    // red is K_6 on A plus K_3 on the rest
    REQUIRE(red.components.size() == 2);
    CHECK(red.components[0] == VertexSet::range(0, 6));
    CHECK(red.components[1] == VertexSet::range(6, 9));
    const auto blue = colour_components(f, Colour::Blue);
    REQUIRE(blue.components.size() == 1);
    CHECK(blue.components[0].size() == 9);
    CHECK(colour_components(all_red(4), Colour::Blue).components.size() == 4);
}

TEST_CASE("colour_components on F_{6,1}: red K_6 and a singleton") {
    const auto red = colour_components(gen_f_st(6, 1), Colour::Red);
    REQUIRE(red.components.size() == 2);
    CHECK(red.components[0].size() == 6);
    CHECK(red.components[1] == VertexSet::of({6}));
}

TEST_CASE("components partition V and no edge crosses") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = corpus::random_graph(1 + static_cast<int>(rng() % 30), 0.08, rng);
        const auto comps = components(g);
        VertexSet cover;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            CHECK((cover & comps[i]).empty());
            cover |= comps[i];
            if (i) CHECK(comps[i - 1].size() >= comps[i].size());
        }
        CHECK(cover == g.vertices());
        for (const Edge& e : g.edges())
            for (const auto& c : comps) CHECK(c.contains(e.u) == c.contains(e.v));
    }
}

TEST_CASE("w_partition") {
    const auto w = w_partition(gen_g_r_t(2, 2));
    CHECK(w.w1.size() == 2);
    CHECK(w.w2.size() == 2);
    CHECK(w.w3.size() == 2);
    CHECK(w.w4.size() == 2);

    const auto k4 = w_partition(all_red(4));
    CHECK(k4.w1.empty());
    CHECK(k4.w2 == VertexSet::range(0, 4));
    CHECK(k4.w3.empty());
    CHECK(k4.w4.empty());

    const auto f = w_partition(gen_f_st(6, 3));
    CHECK(f.w1 == VertexSet::range(0, 6));
    CHECK(f.w2.empty());
    CHECK(f.w3 == VertexSet::range(6, 9));
    CHECK(f.w4.empty());
}

TEST_CASE("w_partition parts are disjoint and cover V") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        EdgeList red, blue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const auto c = rng() % 5;
                if (c == 0) red.push_back({u, v});
                if (c == 1) blue.push_back({u, v});
            }
        const auto w = w_partition(ColouredGraph::build(n, red, blue));
        CHECK((w.w1 | w.w2 | w.w3 | w.w4) == VertexSet::range(0, n));
        CHECK(w.w1.size() + w.w2.size() + w.w3.size() + w.w4.size() == n);
    }
}

TEST_CASE("bipartition") {
    const auto c6 = bipartition(corpus::cycle(6));
    REQUIRE(c6.has_value());
    CHECK(c6->first == VertexSet::of({0, 2, 4}));
    CHECK(c6->second == VertexSet::of({1, 3, 5}));
    CHECK_FALSE(bipartition(corpus::cycle(5)).has_value());
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const auto g = gen_two_bipartite_k4p(2, mask_from_integer(mask, 8));
        CHECK(bipartition(g.view(Colour::Blue)).has_value());
        CHECK(bipartition(g.view(Colour::Red)).has_value());
    }
    // two components: each component's minimum vertex goes left
    const auto two = bipartition(UncolouredView::from_edges(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.has_value());
    CHECK(two->first == VertexSet::of({0, 2}));
}

TEST_CASE("recognize_k4p and multipartite_parts") {
    CHECK(recognize_k4p(complete_multipartite({2, 2, 2, 2})) == 2);
    CHECK(recognize_k4p(complete(4)) == 1);
    CHECK_FALSE(recognize_k4p(complete_multipartite({3, 3, 3})).has_value());
    CHECK_FALSE(recognize_k4p(complete_multipartite({1, 2, 2, 2})).has_value());
    CHECK_FALSE(recognize_k4p(corpus::cycle(8)).has_value());
    const auto parts = multipartite_parts(complete_multipartite({1, 3, 2}));
    REQUIRE(parts.has_value());
    CHECK(parts->size() == 3);
    CHECK(multipartite_parts(corpus::path(3))->size() == 2);
    CHECK_FALSE(multipartite_parts(corpus::cycle(5)).has_value());
}

TEST_CASE("recognize_two_bipartite") {
    for (int p = 1; p <= 2; ++p)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * p * p)); ++mask) {
            const auto g = gen_two_bipartite_k4p(p, mask_from_integer(mask, static_cast<std::size_t>(2 * p * p)));
            const auto l = recognize_two_bipartite(g);
            REQUIRE(l.has_value());
            CHECK(l->u11.size() == p);
            CHECK(l->u12.size() == p);
            CHECK(l->u21.size() == p);
            CHECK(l->u22.size() == p);
            check_labelling(g, *l);
            const auto ms = mono_spectrum(g);
            CHECK_FALSE(ms.red.has_odd_length());
            CHECK_FALSE(ms.blue.has_odd_length());
        }
    const auto k2222 = complete_multipartite({2, 2, 2, 2});
    CHECK_FALSE(recognize_two_bipartite(ColouredGraph::build(8, k2222.edges(), {})).has_value());

    // red triangle 0 (U11), 4 (U21), 2 (U12); everything else blue
    EdgeList red{{0, 2}, {0, 4}, {2, 4}}, blue;
    for (const Edge& e : k2222.edges())
        if (std::find(red.begin(), red.end(), e) == red.end()) blue.push_back(e);
    CHECK_FALSE(recognize_two_bipartite(ColouredGraph::build(8, red, blue)).has_value());
}

TEST_CASE("recognize_two_bipartite on randomly relabelled instances") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 4);
        const auto g = gen_two_bipartite_k4p(p, mask_from_seed(rng(), static_cast<std::size_t>(2 * p * p)));
        std::vector<int> perm(4 * p);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeList red, blue;
        for (const Edge& e : g.edges(Colour::Red)) red.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
        for (const Edge& e : g.edges(Colour::Blue)) blue.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
        const auto h = ColouredGraph::build(4 * p, red, blue);
        const auto l = recognize_two_bipartite(h);
        REQUIRE(l.has_value());
        check_labelling(h, *l);
    }
}

TEST_CASE("chvatal_sufficient") {
    CHECK(chvatal_sufficient(complete_bipartite(3, 3)));
    CHECK_FALSE(chvatal_sufficient(corpus::cycle(5)));
    CHECK(chvatal_sufficient(UncolouredView::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    CHECK_THROWS_AS(chvatal_sufficient(complete(2)), TooFewVertices);
}

TEST_CASE("dirac and bondy") {
    CHECK(dirac_sufficient(complete_bipartite(3, 3)));
    CHECK(bondy_classify(complete_bipartite(3, 3)) == BondyClass::BalancedCompleteBipartite);
    CHECK(bondy_classify(complete(5)) == BondyClass::Pancyclic);
    CHECK(bondy_classify(complete(6)) == BondyClass::Pancyclic);
    CHECK(bondy_classify(corpus::cycle(6)) == BondyClass::NotApplicable);
    CHECK_FALSE(dirac_sufficient(corpus::cycle(6)));
    CHECK_THROWS_AS(dirac_sufficient(complete(2)), TooFewVertices);
}

TEST_CASE("predicate soundness over every graph with 3 to 7 vertices") {
    int chvatal = 0;
    for (int n = 3; n <= 7; ++n)
        for (const auto& s : corpus::unlabelled(n)) {
            const auto g = s.view();
            const bool hamiltonian = !corpus::spectrum_by_permutation(s).empty() &&
                                     corpus::spectrum_by_permutation(s).back() == n;
            CHECK(is_hamiltonian(g) == hamiltonian);
            if (chvatal_sufficient(g)) {
                ++chvatal;
                CHECK(hamiltonian);
            }
            if (dirac_sufficient(g)) CHECK(chvatal_sufficient(g));
            const auto b = bondy_classify(g);
            if (b == BondyClass::BalancedCompleteBipartite) CHECK(n % 2 == 0);
        }
    CHECK(chvatal > 0);
}

TEST_CASE("trichotomy examples") {
    const Rational d(1, 40);
    const auto g = gen_g_r_t(2, 2);
    const auto v = trichotomy(g, d);
    REQUIRE(v.case_iii.has_value());
    CHECK(certifies(g, d, *v.case_iii));
    for (const auto& part : v.case_iii->parts) CHECK(part.size() == 2);

    const auto k7 = all_red(7);
    const auto v7 = trichotomy(k7, d);
    REQUIRE(v7.case_i.has_value());
    CHECK(v7.case_i->colour == Colour::Red);
    CHECK(v7.case_i->matched_vertices == 6);
    CHECK(certifies(k7, d, *v7.case_i));

    const auto k = gen_two_bipartite_k4p(2, std::vector<bool>(8, false));
    const auto vk = trichotomy(k, d);
    REQUIRE(vk.case_i.has_value());
    CHECK(vk.case_i->colour == Colour::Blue);
    CHECK(vk.case_i->matched_vertices == 8);
    CHECK(certifies(k, d, *vk.case_i));
}

TEST_CASE("trichotomy delta range is a warning only") {
    const auto v = trichotomy(all_red(5), Rational(1, 10));
    CHECK_FALSE(v.delta_in_range);
    CHECK(v.case_i.has_value());
    CHECK(trichotomy(all_red(5), Rational(1, 40)).delta_in_range);
}

TEST_CASE("trichotomy case (ii) refused above the limit") {
    const auto v = trichotomy(gen_g_r_t(3, 3), Rational(1, 40));
    CHECK(v.case_ii_refused);
    CHECK_FALSE(v.case_ii.has_value());
}

TEST_CASE("trichotomy reports are self-certifying") {
    std::mt19937_64 rng(21);
    int any = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 12);
        EdgeList red, blue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const auto c = rng() % 4;
                if (c == 0 || c == 3) red.push_back({u, v});
                if (c == 1) blue.push_back({u, v});
            }
        const auto g = ColouredGraph::build(n, red, blue);
        const Rational d(1, 40);
        const auto v = trichotomy(g, d);
        if (v.case_i) CHECK(certifies(g, d, *v.case_i));
        if (v.case_ii) CHECK(certifies(g, d, *v.case_ii));
        if (v.case_iii) CHECK(certifies(g, d, *v.case_iii));
        any += v.case_i || v.case_ii || v.case_iii;
    }
    CHECK(any > 0);
}

TEST_CASE("case (ii) on a sparse colour") {
    // red is two disjoint K_4; blue is K_2 joined to all of it
    const auto g = gen_g_prime(2);
    const Rational d(1, 40);
    const auto v = trichotomy(g, d);
    if (v.case_ii) CHECK(certifies(g, d, *v.case_ii));
    CHECK_FALSE(v.case_ii_refused);
}
