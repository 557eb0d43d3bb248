#include "monocycle/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "monocycle/constructions.hpp"
#include "monocycle/harness.hpp"
#include "monocycle/matching.hpp"
#include "monocycle/structure.hpp"

namespace monocycle {

using nlohmann::json;

namespace {

struct Common {
    std::string json_path;
    std::string csv_path;
    bool no_timestamp = false;
    int exact_limit = 24;
};

struct Instance {
    ColouredGraph graph;
    std::string name;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path);
    if (!o) throw Error("cannot write '" + path + "'");
    o << text;
}

Instance load_instance(const std::string& file, const std::string& spec) {
    if (!file.empty() && !spec.empty()) throw BadParams("give either a graph file or --spec, not both");
    if (!spec.empty()) {
        const ConstructionSpec cs = parse_construction(spec);
        return {generate(cs), to_string(cs)};
    }
    if (file.empty()) throw BadParams("a graph file or --spec is required");
    return {parse_graph(read_file(file)), "file:" + file};
}

UncolouredView complete_graph(int n) {
    EdgeList es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return UncolouredView::from_edges(n, es);
}

UncolouredView complete_multipartite(int parts, int size) {
    EdgeList es;
    const int n = parts * size;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / size != v / size) es.push_back({u, v});
    return UncolouredView::from_edges(n, es);
}

// Built-in names, then construction specs (union graph), then files.
UncolouredView resolve_base(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex("K([1-9])"))) return complete_graph(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex("C([3-9])"))) {
        const int n = std::stoi(m[1]);
        EdgeList es;
        for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
        es.push_back({0, n - 1});
        return UncolouredView::from_edges(n, es);
    }
    if (name == "K33") return complete_multipartite(2, 3);
    if (name == "K2222") return complete_multipartite(4, 2);
    if (name.find(':') != std::string::npos && !std::filesystem::exists(name))
        return generate(parse_construction(name)).union_view();
    return parse_graph(read_file(name)).union_view();
}

std::string timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream o;
    o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return o.str();
}

json envelope(const std::string& command, const Common& c) {
    json j = {{"tool", "monocycle"}, {"format", 1}, {"command", command}};
    if (!c.no_timestamp) j["timestamp"] = timestamp();
    return j;
}

void emit(const json& j, const Common& c, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!c.json_path.empty()) write_file(c.json_path, text);
}

void append_csv(const Common& c, const std::vector<std::vector<std::string>>& rows) {
    if (c.csv_path.empty()) return;
    const bool fresh = !std::filesystem::exists(c.csv_path);
    std::ofstream o(c.csv_path, std::ios::app);
    if (!o) throw Error("cannot write '" + c.csv_path + "'");
    if (fresh) o << "command,instance,target,verdict,searched,seed,workers\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) o << ',';
            const bool quote = row[i].find_first_of(",\"") != std::string::npos;
            if (quote) {
                o << '"';
                for (char ch : row[i]) o << (ch == '"' ? "\"\"" : std::string(1, ch));
                o << '"';
            } else {
                o << row[i];
            }
        }
        o << '\n';
    }
}

json vs(const VertexSet& s) { return s.to_vector(); }

json spectrum_json(const CycleSpectrum& s) {
    return {{"lengths", s.lengths}, {"circumference", s.circumference}};
}

json report_json(const std::string& command, const VerificationReport& r, const Common& c) {
    json j = envelope(command, c);
    j.update(to_json(r, !c.no_timestamp));
    return j;
}

int report_exit(const VerificationReport& r) { return r.verdict == Verdict::RefutedAtThisN ? 2 : 0; }

// Counterexamples go to --out when given and are always embedded.
void attach_counterexample(VerificationReport& r, const std::string& out_path) {
    if (r.verdict != Verdict::RefutedAtThisN) return;
    if (r.counterexample) {
        const std::string text = serialize(*r.counterexample);
        r.witness["counterexample_cg"] = text;
        if (!out_path.empty()) {
            write_file(out_path, text);
            r.witness["counterexample_file"] = out_path;
        }
    } else if (r.witness.contains("counterexample_kcg") && !out_path.empty()) {
        write_file(out_path, r.witness["counterexample_kcg"].get<std::string>());
        r.witness["counterexample_file"] = out_path;
    }
}

json structure_json(const ColouredGraph& g, const Rational& delta, const SpectrumOptions& so) {
    json j;
    const int n = g.order();
    j["n"] = n;
    j["edges"] = {{"red", g.view(Colour::Red).edge_count()}, {"blue", g.view(Colour::Blue).edge_count()}};
    j["min_degree"] = n ? min_degree(g) : 0;
    json comps, bip;
    for (Colour c : kColours) {
        json list = json::array();
        for (const auto& s : colour_components(g, c).components) list.push_back(vs(s));
        comps[std::string(colour_name(c))] = list;
        const auto b = bipartition(g.view(c));
        bip[std::string(colour_name(c))] = b ? json{{"left", vs(b->first)}, {"right", vs(b->second)}} : json(nullptr);
    }
    j["components"] = comps;
    j["bipartitions"] = bip;
    const auto w = w_partition(g);
    j["w_partition"] = {{"red_largest", vs(w.red_largest)},
                        {"blue_largest", vs(w.blue_largest)},
                        {"w1", vs(w.w1)},
                        {"w2", vs(w.w2)},
                        {"w3", vs(w.w3)},
                        {"w4", vs(w.w4)},
                        {"tie_break", "largest component with at least one edge; ties to the smallest vertex"}};
    const auto k4p = recognize_k4p(g.union_view());
    j["k4p"] = k4p ? json(*k4p) : json(nullptr);
    const auto lab = recognize_two_bipartite(g);
    j["two_bipartite"] = lab ? json{{"U11", vs(lab->u11)}, {"U12", vs(lab->u12)}, {"U21", vs(lab->u21)}, {"U22", vs(lab->u22)}}
                             : json(nullptr);
    if (n >= 3) {
        const UncolouredView u = g.union_view();
        json pred = {{"chvatal_sufficient", chvatal_sufficient(u)}, {"dirac_sufficient", dirac_sufficient(u)}};
        try {
            const BondyClass b = bondy_classify(u, so);
            pred["bondy"] = b == BondyClass::Pancyclic                   ? "Pancyclic"
                            : b == BondyClass::BalancedCompleteBipartite ? "BalancedCompleteBipartite"
                                                                         : "NotApplicable";
        } catch (const TooLargeForExact& e) {
            pred["bondy"] = nullptr;
            pred["bondy_error"] = e.what();
        }
        j["union_predicates"] = pred;
    }
    const auto t = trichotomy(g, delta);
    json tj = {{"delta", to_string(t.delta)},
               {"delta_in_range", t.delta_in_range},
               {"case_ii_refused", t.case_ii_refused},
               {"case_iii_refused", t.case_iii_refused}};
    tj["case_i"] = t.case_i ? json{{"colour", colour_name(t.case_i->colour)},
                                   {"component_index", t.case_i->component_index},
                                   {"matched_vertices", t.case_i->matched_vertices}}
                            : json(nullptr);
    tj["case_ii"] = t.case_ii ? json{{"colour", colour_name(t.case_ii->colour)},
                                     {"set", vs(t.case_ii->set)},
                                     {"max_degree", t.case_ii->max_degree}}
                              : json(nullptr);
    if (t.case_iii) {
        json parts = json::array();
        for (const auto& p : t.case_iii->parts) parts.push_back(vs(p));
        tj["case_iii"] = {{"parts", parts},
                          {"orientation", "no red edges U1|U2 to U3|U4, no blue edges U1|U3 to U2|U4; "
                                          "exchanging U2 and U3 gives the colour-swapped form"}};
    } else {
        tj["case_iii"] = nullptr;
    }
    j["trichotomy"] = tj;
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monochromatic cycle toolkit for 2-edge-coloured graphs"};
    app.name("monocycle");
    app.require_subcommand(1, 1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", common.json_path, "Also write the JSON output to this file");
        sub->add_flag("--no-timestamp", common.no_timestamp, "Omit timestamp and elapsed time from JSON");
        sub->add_option("--exact-limit", common.exact_limit, "Exact spectrum limit per reduced component")
            ->check(CLI::Range(3, kHardExactLimit));
    };

    std::string file, spec, out_path, base, predicate = "mono-c3-or-c5", mode = "exhaustive", target = "main";
    std::string delta_text, c_text;
    std::uint64_t seed = 1, budget = 0;
    int workers = 1, p = 1;
    bool minimize = false, distinct = false, no_reduction = false;
    std::string view_name = "union";

    auto* gen = app.add_subcommand("generate", "Build a construction and write it in cg format");
    gen->add_option("--spec", spec, "Construction spec, e.g. f_st:s=6,t=3")->required();
    gen->add_option("--out", out_path, "Output file (stdout when omitted)");
    add_common(gen);

    auto* spc = app.add_subcommand("spectrum", "Per-colour cycle spectra");
    spc->add_option("graph", file, "Graph file in cg format");
    spc->add_option("--spec", spec, "Construction spec instead of a file");
    add_common(spc);

    auto* ana = app.add_subcommand("analyze", "Structural report");
    ana->add_option("graph", file, "Graph file in cg format");
    ana->add_option("--spec", spec, "Construction spec instead of a file");
    ana->add_option("--delta", delta_text, "Trichotomy parameter (default 1/40)");
    add_common(ana);

    auto* mat = app.add_subcommand("matching", "Maximum matching with Berge witness");
    mat->add_option("graph", file, "Graph file in cg format");
    mat->add_option("--spec", spec, "Construction spec instead of a file");
    mat->add_option("--view", view_name, "red, blue or union")->check(CLI::IsMember({"red", "blue", "union"}));
    add_common(mat);

    auto* ver = app.add_subcommand("verify", "Check a theorem or conjecture on one instance");
    ver->add_option("graph", file, "Graph file (cg, or kcg for --target kcolour)");
    ver->add_option("--spec", spec, "Construction spec instead of a file");
    ver->add_option("--target", target, "main, circumference or kcolour")
        ->check(CLI::IsMember({"main", "circumference", "kcolour"}));
    ver->add_option("--delta", delta_text, "Circumference parameter (default 1/180)");
    ver->add_option("--out", out_path, "Write a counterexample here when refuted");
    ver->add_option("--csv", common.csv_path, "Append a CSV summary row");
    add_common(ver);

    auto* sea = app.add_subcommand("search", "Search the colourings of a base graph");
    sea->add_option("--base", base, "K1..K9, C3..C9, K33, K2222, a construction spec or a cg file")->required();
    sea->add_option("--predicate", predicate, "mono-c3, mono-c4, mono-c3-or-c5, no-mono-odd-cycle, "
                                              "main-theorem-body, spectrum-covers-range(a,b)");
    sea->add_option("--mode", mode, "exhaustive, random or local")
        ->check(CLI::IsMember({"exhaustive", "random", "local"}));
    sea->add_option("--seed", seed, "Seed for random and local modes");
    sea->add_option("--budget", budget, "Item cap (0 = none for exhaustive, 10000 otherwise)");
    sea->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
    sea->add_flag("--minimize", minimize, "Minimise monochromatic circumference instead");
    sea->add_flag("--no-colour-swap", no_reduction, "Disable the colour-swap reduction");
    sea->add_option("--out", out_path, "Write a counterexample or best colouring here");
    sea->add_option("--csv", common.csv_path, "Append a CSV summary row");
    add_common(sea);

    auto* phi = app.add_subcommand("phi", "Upper-bound certificates for the circumference fraction");
    phi->add_option("--c", c_text, "Degree fraction c in (0,1), e.g. 0.7 or 7/10")->required();
    phi->add_option("--csv", common.csv_path, "Append CSV rows");
    add_common(phi);

    auto* cnt = app.add_subcommand("count", "Count 2-bipartite colourings of K_{p,p,p,p}");
    cnt->add_option("--p", p, "Class size")->required()->check(CLI::Range(1, 64));
    cnt->add_flag("--distinct", distinct, "Also brute-force the colourings of the fixed graph (p = 1)");
    add_common(cnt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'monocycle --help' for usage\n";
        return 1;
    }

    try {
        SpectrumOptions so{common.exact_limit};
        if (gen->parsed()) {
            const ConstructionSpec cs = parse_construction(spec);
            std::string text;
            json j = envelope("generate", common);
            j["spec"] = to_string(cs);
            if (cs.kind == ConstructionKind::KBipartite && cs.params.at("k") != 2) {
                const KColouredGraph kg = generate_k(cs);
                text = serialize(kg);
                j["n"] = kg.order();
                j["colours"] = kg.colours();
                j["graph_format"] = "kcg";
            } else {
                const ColouredGraph g = generate(cs);
                text = serialize(g);
                j["n"] = g.order();
                j["edges"] = {{"red", g.view(Colour::Red).edge_count()}, {"blue", g.view(Colour::Blue).edge_count()}};
            }
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
                j["out"] = out_path;
                emit(j, common, out);
            }
            return 0;
        }
        if (spc->parsed()) {
            const Instance in = load_instance(file, spec);
            const MonoSpectrum ms = mono_spectrum(in.graph, so);
            json j = envelope("spectrum", common);
            j["instance"] = in.name;
            j["n"] = in.graph.order();
            j["red"] = spectrum_json(ms.red);
            j["blue"] = spectrum_json(ms.blue);
            j["mono_circumference"] = ms.mono_circumference;
            emit(j, common, out);
            return 0;
        }
        if (ana->parsed()) {
            const Instance in = load_instance(file, spec);
            const Rational delta = delta_text.empty() ? Rational(1, 40) : parse_rational(delta_text);
            json j = envelope("analyze", common);
            j["instance"] = in.name;
            j.update(structure_json(in.graph, delta, so));
            emit(j, common, out);
            return 0;
        }
        if (mat->parsed()) {
            const Instance in = load_instance(file, spec);
            const UncolouredView v = view_name == "red"    ? in.graph.view(Colour::Red)
                                     : view_name == "blue" ? in.graph.view(Colour::Blue)
                                                           : in.graph.union_view();
            const MatchingCertificate m = max_matching(v);
            json edges = json::array();
            for (const Edge& e : m.edges) edges.push_back({e.u, e.v});
            json j = envelope("matching", common);
            j["instance"] = in.name;
            j["view"] = view_name;
            j["n"] = v.order();
            j["matching"] = edges;
            j["covered"] = m.covered;
            j["deficiency"] = m.deficiency;
            j["berge_witness"] = vs(m.berge_witness);
            j["odd_components_after_removal"] = odd_components(v, m.berge_witness);
            emit(j, common, out);
            return 0;
        }
        if (ver->parsed()) {
            VerificationReport r;
            if (target == "kcolour") {
                if (!file.empty() && !spec.empty()) throw BadParams("give either a graph file or --spec, not both");
                KColouredGraph kg(0, 1);
                std::string name;
                if (!spec.empty()) {
                    const ConstructionSpec cs = parse_construction(spec);
                    if (cs.kind == ConstructionKind::KBipartite) {
                        kg = generate_k(cs);
                    } else {
                        const ColouredGraph g = generate(cs);
                        kg = KColouredGraph(g.order(), 2);
                        for (Colour c : kColours)
                            for (const Edge& e : g.edges(c)) kg.set_colour(e.u, e.v, c == Colour::Red ? 0 : 1);
                    }
                    name = to_string(cs);
                } else {
                    if (file.empty()) throw BadParams("a graph file or --spec is required");
                    const std::string text = read_file(file);
                    if (text.rfind("kcg", 0) == 0) {
                        kg = parse_k_graph(text);
                    } else {
                        const ColouredGraph g = parse_graph(text);
                        kg = KColouredGraph(g.order(), 2);
                        for (Colour c : kColours)
                            for (const Edge& e : g.edges(c)) kg.set_colour(e.u, e.v, c == Colour::Red ? 0 : 1);
                    }
                    name = "file:" + file;
                }
                r = verify_k_colour_conjecture(kg, name, so);
            } else {
                const Instance in = load_instance(file, spec);
                if (target == "main") {
                    r = verify_main(in.graph, in.name, so);
                } else {
                    const Rational delta = delta_text.empty() ? Rational(1, 180) : parse_rational(delta_text);
                    r = verify_circumference(in.graph, delta, in.name, so);
                }
            }
            attach_counterexample(r, out_path);
            emit(report_json("verify", r, common), common, out);
            append_csv(common, {{"verify", r.instance, r.target, std::string(verdict_name(r.verdict)),
                                 std::to_string(r.stats.searched), "", std::to_string(r.stats.workers)}});
            return report_exit(r);
        }
        if (sea->parsed()) {
            const UncolouredView b = resolve_base(base);
            SearchBudget sb;
            sb.mode = parse_mode(mode);
            sb.max_items = budget;
            sb.seed = seed;
            sb.workers = workers;
            sb.colour_swap_reduction = !no_reduction;
            VerificationReport r;
            if (minimize) {
                r = minimize_mono_circumference(b, sb, base, so);
                if (r.counterexample && !out_path.empty()) {
                    write_file(out_path, serialize(*r.counterexample));
                    r.witness["best_colouring_file"] = out_path;
                }
            } else {
                r = search_colourings(b, parse_predicate(predicate), sb, base);
                attach_counterexample(r, out_path);
            }
            emit(report_json("search", r, common), common, out);
            append_csv(common, {{"search", r.instance, r.target, std::string(verdict_name(r.verdict)),
                                 std::to_string(r.stats.searched), r.stats.seed ? std::to_string(*r.stats.seed) : "",
                                 std::to_string(r.stats.workers)}});
            return minimize ? 0 : report_exit(r);
        }
        if (phi->parsed()) {
            const Rational c = parse_rational(c_text);
            const auto certs = phi_certificates(c, so);
            json list = json::array();
            std::vector<std::vector<std::string>> rows;
            bool all = true;
            for (const auto& cert : certs) {
                all = all && cert.verified();
                list.push_back({{"family", cert.family},
                                {"spec", to_string(cert.spec)},
                                {"claimed_bound", to_string(cert.claimed_bound)},
                                {"order", cert.order},
                                {"min_degree", cert.min_degree},
                                {"mono_circumference", cert.mono_circumference},
                                {"ratio", to_string(cert.ratio())},
                                {"min_degree_exceeds_cn", cert.min_degree_exceeds_cn},
                                {"ratio_within_bound", cert.ratio_within_bound},
                                {"verified", cert.verified()}});
                rows.push_back({"phi", to_string(cert.spec), "phi<=" + to_string(cert.claimed_bound),
                                cert.verified() ? "Confirmed" : "Refuted-at-this-n", "1", "", "1"});
            }
            json j = envelope("phi", common);
            j["c"] = to_string(c);
            j["certificates"] = list;
            emit(j, common, out);
            append_csv(common, rows);
            return all ? 0 : 2;
        }
        if (cnt->parsed()) {
            json j = envelope("count", common);
            j["p"] = p;
            j["free_edges"] = 2 * p * p;
            j["labelled"] = count_two_bipartite_labelled(p);
            if (distinct) j["distinct"] = count_two_bipartite_distinct(p);
            emit(j, common, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace monocycle
