#include "monocycle/constructions.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace monocycle {

XorShift64Star::XorShift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

std::uint64_t XorShift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t XorShift64Star::below(std::uint64_t bound) {
    const std::uint64_t reject_below = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= reject_below) return x % bound;
    }
}

KColouredGraph::KColouredGraph(int n, int k) : n_(n) {
    if (k < 1) throw BadParams("colour count must be at least 1");
    classes_.assign(static_cast<std::size_t>(k), UncolouredView(n));
}

void KColouredGraph::set_colour(int u, int v, int colour) {
    if (colour < 0 || colour >= colours()) throw BadParams("colour index out of range");
    if (u < 0 || u >= n_ || u == v) throw InvalidVertex(u, n_);
    if (v < 0 || v >= n_) throw InvalidVertex(v, n_);
    for (int c = 0; c < colours(); ++c)
        if (c != colour && classes_[c].adjacent(u, v)) throw SameEdgeBothColours(std::min(u, v), std::max(u, v));
    classes_[colour].add_edge(u, v);
}

UncolouredView KColouredGraph::union_view() const {
    EdgeList all;
    for (const auto& g : classes_)
        for (const Edge& e : g.edges()) all.push_back(e);
    return UncolouredView::from_edges(n_, all);
}

std::optional<int> KColouredGraph::colour_of(int u, int v) const {
    for (int c = 0; c < colours(); ++c)
        if (classes_[c].adjacent(u, v)) return c;
    return std::nullopt;
}

ColouredGraph KColouredGraph::to_coloured() const {
    if (colours() > 2) throw BadParams("only 1- or 2-coloured graphs convert to red/blue");
    return ColouredGraph::build(n_, classes_[0].edges(), colours() == 2 ? classes_[1].edges() : EdgeList{});
}

EdgeList two_bipartite_free_edges(int p) {
    EdgeList out;
    for (int u = 0; u < p; ++u)
        for (int v = 3 * p; v < 4 * p; ++v) out.push_back({u, v});
    for (int u = p; u < 2 * p; ++u)
        for (int v = 2 * p; v < 3 * p; ++v) out.push_back({u, v});
    return out;
}

std::vector<bool> mask_from_integer(std::uint64_t value, std::size_t bits) {
    if (bits < 64 && (value >> bits) != 0)
        throw BadMaskLength(static_cast<std::size_t>(std::bit_width(value)), bits);
    std::vector<bool> mask(bits, false);
    for (std::size_t i = 0; i < bits && i < 64; ++i) mask[i] = (value >> i) & 1U;
    return mask;
}

std::vector<bool> mask_from_seed(std::uint64_t seed, std::size_t bits) {
    XorShift64Star rng(seed);
    std::vector<bool> mask(bits, false);
    for (std::size_t i = 0; i < bits; ++i) mask[i] = rng.next() >> 63;
    return mask;
}

ColouredGraph gen_two_bipartite_k4p(int p, const std::vector<bool>& free_mask) {
    if (p < 1 || 4 * p > kMaxVertices) throw BadParams("k4p needs 1 <= p <= 64");
    const EdgeList free_edges = two_bipartite_free_edges(p);
    if (free_mask.size() != free_edges.size()) throw BadMaskLength(free_mask.size(), free_edges.size());
    EdgeList red, blue;
    auto join = [](EdgeList& into, int a0, int b0, int p_) {
        for (int u = a0; u < a0 + p_; ++u)
            for (int v = b0; v < b0 + p_; ++v) into.push_back({u, v});
    };
    join(blue, 0, p, p);          // U11-U12
    join(blue, 2 * p, 3 * p, p);  // U21-U22
    join(red, 0, 2 * p, p);       // U11-U21
    join(red, p, 3 * p, p);       // U12-U22
    for (std::size_t i = 0; i < free_edges.size(); ++i) (free_mask[i] ? red : blue).push_back(free_edges[i]);
    return ColouredGraph::build(4 * p, red, blue);
}

ColouredGraph gen_blowup_c5(int b) {
    if (b < 1 || 5 * b > kMaxVertices) throw BadParams("blowc5 needs 1 <= b <= 51");
    EdgeList red, blue;
    const int n = 5 * b;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int d = (v / b - u / b + 5) % 5;
            if (d == 1 || d == 4) red.push_back({u, v});
            if (d == 2 || d == 3) blue.push_back({u, v});
        }
    return ColouredGraph::build(n, red, blue);
}

ColouredGraph gen_bipartite_complement(int n) {
    if (n < 2 || n > kMaxVertices) throw BadParams("bipcomp needs 2 <= n <= 256");
    const int half = n / 2;
    EdgeList red, blue;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ((u < half) != (v < half) ? red : blue).push_back({u, v});
    return ColouredGraph::build(n, red, blue);
}

ColouredGraph gen_f_st(int s, int t) {
    if (t < 1 || t > s) throw BadParams("f_st needs 1 <= t <= s");
    if (s + t > kMaxVertices) throw BadParams("f_st needs s + t <= 256");
    const int n = s + t;
    EdgeList red, blue;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ((u < s) != (v < s) ? blue : red).push_back({u, v});
    return ColouredGraph::build(n, red, blue);
}

ColouredGraph gen_g_prime(int t) {
    if (t < 1 || 5 * t > kMaxVertices) throw BadParams("gprime needs 1 <= t <= 51");
    const int n = 5 * t;
    auto group = [t](int v) { return v < 2 * t ? 0 : (v < 4 * t ? 1 : 2); };
    EdgeList red, blue;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int gu = group(u), gv = group(v);
            if (gu == gv && gu < 2)
                red.push_back({u, v});
            else if (gu == 2 || gv == 2)
                blue.push_back({u, v});
        }
    return ColouredGraph::build(n, red, blue);
}

ColouredGraph gen_g_r_t(int r, int t) {
    if (r < 2 || t < 1 || r * r * t > kMaxVertices) throw BadParams("g_rt needs r >= 2, t >= 1, r^2 t <= 256");
    const int n = r * r * t;
    EdgeList red, blue;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int cu = u / t, cv = v / t;
            const int ru = cu / r, rv = cv / r;
            const int ju = cu % r, jv = cv % r;
            if (ju == jv)
                red.push_back({u, v});
            else if (ru == rv)
                blue.push_back({u, v});
        }
    return ColouredGraph::build(n, red, blue);
}

KColouredGraph gen_k_bipartite(int k, int p, std::uint64_t seed) {
    if (k < 1 || p < 1 || k > 8 || (p << k) > kMaxVertices) throw BadParams("kbip needs k, p >= 1 and 2^k p <= 256");
    const int n = p << k;
    KColouredGraph g(n, k);
    XorShift64Star rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const unsigned diff = static_cast<unsigned>(u / p) ^ static_cast<unsigned>(v / p);
            if (diff == 0) continue;
            const int count = std::popcount(diff);
            int pick = count == 1 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
            unsigned bits = diff;
            while (pick-- > 0) bits &= bits - 1;
            g.set_colour(u, v, std::countr_zero(bits));
        }
    return g;
}

namespace {

struct KindName {
    ConstructionKind kind;
    std::string_view name;
};
constexpr KindName kKinds[] = {
    {ConstructionKind::TwoBipartiteK4p, "k4p"}, {ConstructionKind::BlowupC5, "blowc5"},
    {ConstructionKind::BipartiteComplement, "bipcomp"}, {ConstructionKind::Fst, "f_st"},
    {ConstructionKind::GPrime, "gprime"}, {ConstructionKind::GRT, "g_rt"},
    {ConstructionKind::KBipartite, "kbip"},
};

std::uint64_t parse_u64(std::string_view s) {
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        base = 16;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw BadParams("bad number '" + std::string(s) + "'");
    return v;
}

std::int64_t param(const ConstructionSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) throw BadParams("construction needs parameter '" + key + "'");
    return it->second;
}

int small(std::int64_t v) {
    if (v < -1000000 || v > 1000000) throw BadParams("parameter out of range");
    return static_cast<int>(v);
}

} // namespace

ConstructionSpec parse_construction(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    ConstructionSpec spec;
    bool known = false;
    for (const auto& k : kKinds)
        if (k.name == name) {
            spec.kind = k.kind;
            known = true;
        }
    if (!known) throw BadParams("unknown construction '" + std::string(name) + "'");
    std::optional<std::uint64_t> mask_value;
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw BadParams("expected key=value, got '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        const std::string_view value = item.substr(eq + 1);
        if (key == "mask") {
            mask_value = parse_u64(value);
        } else if (key == "seed") {
            spec.seed = parse_u64(value);
        } else {
            spec.params[key] = static_cast<std::int64_t>(parse_u64(value));
        }
    }
    if (mask_value) {
        if (spec.kind != ConstructionKind::TwoBipartiteK4p) throw BadParams("mask only applies to k4p");
        const int p = small(param(spec, "p"));
        if (p < 1 || p > 5) throw BadParams("k4p masks given as integers need 1 <= p <= 5; use seed=");
        spec.free_mask = mask_from_integer(*mask_value, static_cast<std::size_t>(2 * p * p));
    }
    return spec;
}

std::string to_string(const ConstructionSpec& spec) {
    std::ostringstream out;
    for (const auto& k : kKinds)
        if (k.kind == spec.kind) out << k.name;
    char sep = ':';
    auto emit = [&](const std::string& key) {
        if (auto it = spec.params.find(key); it != spec.params.end()) {
            out << sep << key << '=' << it->second;
            sep = ',';
        }
    };
    for (const char* key : {"k", "p", "b", "n", "s", "r", "t"}) emit(key);
    if (spec.free_mask) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < spec.free_mask->size() && i < 64; ++i)
            if ((*spec.free_mask)[i]) value |= std::uint64_t{1} << i;
        const std::size_t digits = std::max<std::size_t>(2, (spec.free_mask->size() + 3) / 4);
        std::ostringstream hex;
        hex << std::hex << value;
        std::string h = hex.str();
        if (h.size() < digits) h.insert(0, digits - h.size(), '0');
        out << sep << "mask=0x" << h;
        sep = ',';
    }
    if (spec.seed) out << sep << "seed=" << *spec.seed;
    return out.str();
}

ColouredGraph generate(const ConstructionSpec& spec) {
    switch (spec.kind) {
    case ConstructionKind::TwoBipartiteK4p: {
        const int p = small(param(spec, "p"));
        if (p < 1) throw BadParams("k4p needs p >= 1");
        const auto bits = static_cast<std::size_t>(2 * p * p);
        if (spec.free_mask) return gen_two_bipartite_k4p(p, *spec.free_mask);
        if (spec.seed) return gen_two_bipartite_k4p(p, mask_from_seed(*spec.seed, bits));
        return gen_two_bipartite_k4p(p, std::vector<bool>(bits, false));
    }
    case ConstructionKind::BlowupC5: return gen_blowup_c5(small(param(spec, "b")));
    case ConstructionKind::BipartiteComplement: return gen_bipartite_complement(small(param(spec, "n")));
    case ConstructionKind::Fst: return gen_f_st(small(param(spec, "s")), small(param(spec, "t")));
    case ConstructionKind::GPrime: return gen_g_prime(small(param(spec, "t")));
    case ConstructionKind::GRT: return gen_g_r_t(small(param(spec, "r")), small(param(spec, "t")));
    case ConstructionKind::KBipartite: return generate_k(spec).to_coloured();
    }
    throw BadParams("unhandled construction kind");
}

KColouredGraph generate_k(const ConstructionSpec& spec) {
    if (spec.kind != ConstructionKind::KBipartite) {
        const ColouredGraph g = generate(spec);
        KColouredGraph out(g.order(), 2);
        for (Colour c : kColours)
            for (const Edge& e : g.edges(c)) out.set_colour(e.u, e.v, c == Colour::Red ? 0 : 1);
        return out;
    }
    return gen_k_bipartite(small(param(spec, "k")), small(param(spec, "p")), spec.seed.value_or(0));
}

std::string serialize(const KColouredGraph& g) {
    std::ostringstream out;
    out << "kcg 1 " << g.order() << ' ' << g.colours() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (auto c = g.colour_of(u, v)) out << u << ' ' << v << ' ' << *c << '\n';
    return out.str();
}

KColouredGraph parse_k_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<KColouredGraph> g;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first.front() == '#') continue;
        if (!g) {
            std::string version;
            int n = 0, k = 0;
            if (first != "kcg" || !(fields >> version >> n >> k) || version != "1")
                throw ParseError(line_no, "expected header 'kcg 1 <n> <k>'");
            if (n < 0 || n > kMaxVertices || k < 1) throw ParseError(line_no, "bad order or colour count");
            g.emplace(n, k);
            continue;
        }
        int u = 0, v = 0, c = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected '<u> <v> <colour>'");
        }
        if (!(fields >> v >> c)) throw ParseError(line_no, "expected '<u> <v> <colour>'");
        if (u < 0 || u >= v || v >= g->order()) throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
        if (c < 0 || c >= g->colours()) throw ParseError(line_no, "colour out of range");
        g->set_colour(u, v, c);
    }
    if (!g) throw ParseError(line_no, "missing header 'kcg 1 <n> <k>'");
    return *g;
}

} // namespace monocycle
