#include <doctest.h>

#include <set>

#include "monocycle/constructions.hpp"
#include "monocycle/spectrum.hpp"
#include "monocycle/structure.hpp"
#include "support/corpus.hpp"

using namespace monocycle;

TEST_CASE("xorshift64* reference values") {
    // x = 1: x ^= x >> 12 -> 1; x ^= x << 25 -> 0x2000001; x ^= x >> 27 -> 0x2000001
    XorShift64Star rng(1);
    CHECK(rng.next() == 0x2000001ULL * 0x2545F4914F6CDD1DULL);
    XorShift64Star zero(0), golden(0x9E3779B97F4A7C15ULL);
    CHECK(zero.next() == golden.next());
    XorShift64Star a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.below(7) == b.below(7));
    for (int i = 0; i < 1000; ++i) CHECK(a.below(3) < 3);
}

TEST_CASE("two-bipartite generator") {
    const auto k4 = gen_two_bipartite_k4p(1, {false, false});
    CHECK(k4.union_view().edge_count() == 6);
    CHECK(recognize_two_bipartite(k4).has_value());

    const auto g = gen_two_bipartite_k4p(2, std::vector<bool>(8, false));
    const auto red = colour_components(g, Colour::Red).components;
    REQUIRE(red.size() == 2);
    CHECK(red[0] == VertexSet::of({0, 1, 4, 5}));
    CHECK(red[1] == VertexSet::of({2, 3, 6, 7}));
    CHECK(g.view(Colour::Red).edge_count() == 8);

    CHECK_THROWS_AS(gen_two_bipartite_k4p(2, std::vector<bool>(7, false)), BadMaskLength);
}

TEST_CASE("free edges are listed lexicographically, U11-U22 then U12-U21") {
    const auto fe = two_bipartite_free_edges(1);
    REQUIRE(fe.size() == 2);
    CHECK(fe[0] == Edge{0, 3});
    CHECK(fe[1] == Edge{1, 2});
    const auto g = gen_two_bipartite_k4p(1, {true, false});
    CHECK(g.colour_of(0, 3) == Colour::Red);
    CHECK(g.colour_of(1, 2) == Colour::Blue);
    CHECK(two_bipartite_free_edges(3).size() == 18);
}

TEST_CASE("all masks give distinct recognised colourings") {
    for (int p = 1; p <= 2; ++p) {
        const std::size_t bits = static_cast<std::size_t>(2 * p * p);
        std::set<std::string> seen;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
            const auto g = gen_two_bipartite_k4p(p, mask_from_integer(m, bits));
            CHECK(g.invariants_hold());
            CHECK(recognize_two_bipartite(g).has_value());
            seen.insert(serialize(g));
        }
        CHECK(seen.size() == (std::size_t{1} << bits));
    }
}

TEST_CASE("mask helpers") {
    CHECK(mask_from_integer(5, 4) == std::vector<bool>{true, false, true, false});
    CHECK_THROWS_AS(mask_from_integer(16, 4), BadMaskLength);
    CHECK(mask_from_seed(7, 18) == mask_from_seed(7, 18));
    CHECK(mask_from_seed(7, 18).size() == 18);
}

TEST_CASE("blown-up C5") {
    const auto b1 = gen_blowup_c5(1);
    CHECK(cycle_spectrum(b1.view(Colour::Red)).lengths == std::vector<int>{5});
    CHECK(cycle_spectrum(b1.view(Colour::Blue)).lengths == std::vector<int>{5});
    const auto b2 = gen_blowup_c5(2);
    CHECK(b2.order() == 10);
    CHECK(min_degree(b2) == 8);
    CHECK(odd_girth(b2.view(Colour::Red)) == 5);
    for (int b = 1; b <= 4; ++b) {
        const auto ms = mono_spectrum(gen_blowup_c5(b));
        CHECK_FALSE(ms.red.contains(3));
        CHECK_FALSE(ms.blue.contains(3));
        CHECK(5 * min_degree(gen_blowup_c5(b)) == 4 * 5 * b);
    }
}

TEST_CASE("bipartite complement") {
    const auto g6 = gen_bipartite_complement(6);
    const auto ms = mono_spectrum(g6);
    CHECK(ms.red.lengths == std::vector<int>{4, 6});
    CHECK(ms.blue.lengths == std::vector<int>{3});
    const auto g5 = gen_bipartite_complement(5);
    CHECK(g5.view(Colour::Red).edge_count() == 6);
    CHECK(g5.view(Colour::Blue).edge_count() == 4);
    for (int n = 2; n <= 12; ++n) {
        const auto s = mono_spectrum(gen_bipartite_complement(n));
        for (int l : s.red.lengths) CHECK((l % 2 == 0 || l <= (n + 1) / 2));
        for (int l : s.blue.lengths) CHECK((l % 2 == 0 || l <= (n + 1) / 2));
    }
}

TEST_CASE("F_{s,t}") {
    CHECK(mono_spectrum(gen_f_st(6, 3)).mono_circumference == 6);
    const auto f41 = mono_spectrum(gen_f_st(4, 1));
    CHECK(f41.blue.circumference == 0);
    CHECK(f41.mono_circumference == 4);
    CHECK(mono_spectrum(gen_f_st(3, 3)).mono_circumference == 6);
    CHECK_THROWS_AS(gen_f_st(2, 3), BadParams);
    for (int s = 3; s <= 6; ++s)
        for (int t = 2; t <= s; ++t) {
            const auto ms = mono_spectrum(gen_f_st(s, t));
            CHECK(ms.red.circumference == s);
            CHECK(ms.blue.circumference == 2 * t);
            CHECK(ms.mono_circumference == std::max(s, 2 * t));
            CHECK(min_degree(gen_f_st(s, t)) == s + t - 1);
        }
}

TEST_CASE("G'_t") {
    const auto g2 = gen_g_prime(2);
    CHECK(g2.order() == 10);
    CHECK(min_degree(g2) == 5);
    const auto ms = mono_spectrum(g2);
    CHECK(ms.red.circumference == 4);
    CHECK(ms.blue.circumference == 4);
    CHECK(ms.blue.lengths == std::vector<int>{3, 4});
    CHECK(mono_spectrum(gen_g_prime(1)).mono_circumference == 0);
    for (int t = 1; t <= 6; ++t) {
        const auto g = gen_g_prime(t);
        CHECK(min_degree(g) == 3 * t - 1);
        CHECK(mono_spectrum(g).blue.circumference <= 2 * t);
    }
}

TEST_CASE("G^(r)_t") {
    const auto g22 = gen_g_r_t(2, 2);
    CHECK(g22.order() == 8);
    CHECK(min_degree(g22) == 5);
    for (int r = 2; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t) {
            const auto g = gen_g_r_t(r, t);
            CHECK(g.order() == r * r * t);
            CHECK(min_degree(g) == (2 * r - 1) * t - 1);
            for (Colour c : kColours)
                for (const auto& comp : colour_components(g, c).components) CHECK(comp.size() == r * t);
            if (r * t >= 3) CHECK(mono_spectrum(g).mono_circumference == r * t);
        }
    CHECK(mono_spectrum(gen_g_r_t(3, 2)).mono_circumference == 6);
    CHECK(mono_spectrum(gen_g_r_t(2, 1)).mono_circumference == 0);
    CHECK_THROWS_AS(gen_g_r_t(1, 2), BadParams);
}

TEST_CASE("k-bipartite") {
    const auto k1 = gen_k_bipartite(1, 2, 0);
    CHECK(k1.view(0).edge_count() == 4);
    CHECK(bipartition(k1.view(0)).has_value());
    const auto k2 = gen_k_bipartite(2, 1, 5);
    CHECK(recognize_two_bipartite(k2.to_coloured()).has_value());
    const auto k3 = gen_k_bipartite(3, 1, 42);
    CHECK(k3.order() == 8);
    for (int i = 0; i < 3; ++i) {
        const auto bp = bipartition(k3.view(i));
        REQUIRE(bp.has_value());
        for (const Edge& e : k3.view(i).edges()) CHECK(((e.u >> i) & 1) != ((e.v >> i) & 1));
    }
    for (int k = 1; k <= 4; ++k)
        for (int p = 1; p <= 3; ++p) {
            const auto g = gen_k_bipartite(k, p, 99);
            const int n = g.order();
            CHECK(n == (p << k));
            CHECK((min_degree(g.union_view()) << k) == ((1 << k) - 1) * n);
            for (int i = 0; i < k; ++i) CHECK(bipartition(g.view(i)).has_value());
        }
}

TEST_CASE("KColouredGraph validation and format") {
    KColouredGraph g(4, 3);
    g.set_colour(0, 1, 2);
    CHECK_THROWS_AS(g.set_colour(0, 1, 1), SameEdgeBothColours);
    CHECK_THROWS_AS(g.set_colour(0, 9, 0), InvalidVertex);
    CHECK_THROWS_AS(g.set_colour(0, 2, 3), BadParams);
    CHECK(g.colour_of(1, 0) == 2);
    const auto k = gen_k_bipartite(3, 2, 7);
    const auto back = parse_k_graph(serialize(k));
    CHECK(back.order() == k.order());
    for (int i = 0; i < 3; ++i) CHECK(back.view(i) == k.view(i));
    CHECK_THROWS_AS(parse_k_graph("kcg 1 3 2\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS((void)KColouredGraph(3, 3).to_coloured(), BadParams);
}

TEST_CASE("construction spec strings") {
    for (const char* text : {"f_st:s=6,t=3", "k4p:p=2,mask=0x00", "k4p:p=2,seed=7", "g_rt:r=3,t=2", "blowc5:b=2",
                             "gprime:t=2", "bipcomp:n=6", "kbip:k=3,p=1,seed=42"}) {
        CAPTURE(text);
        CHECK(to_string(parse_construction(text)) == text);
    }
    const auto spec = parse_construction("k4p:p=1,mask=2");
    REQUIRE(spec.free_mask.has_value());
    CHECK(*spec.free_mask == std::vector<bool>{false, true});
    CHECK(generate(parse_construction("f_st:s=6,t=3")) == gen_f_st(6, 3));
    CHECK(generate(parse_construction("k4p:p=2,seed=7")) == gen_two_bipartite_k4p(2, mask_from_seed(7, 8)));
    CHECK_THROWS_AS(parse_construction("nope:x=1"), BadParams);
    CHECK_THROWS_AS(parse_construction("f_st:s"), BadParams);
    CHECK_THROWS_AS(generate(parse_construction("f_st:s=3")), BadParams);
    CHECK_THROWS_AS(parse_construction("k4p:p=1,mask=0x10"), BadMaskLength);
    CHECK_THROWS_AS(parse_construction("f_st:s=4,t=2,mask=1"), BadParams);
}

TEST_CASE("generators are deterministic") {
    CHECK(generate(parse_construction("kbip:k=2,p=2,seed=3")) == generate(parse_construction("kbip:k=2,p=2,seed=3")));
    const auto a = gen_k_bipartite(4, 2, 11), b = gen_k_bipartite(4, 2, 11);
    for (int i = 0; i < 4; ++i) CHECK(a.view(i) == b.view(i));
}
