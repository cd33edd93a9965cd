// mcg: analysis and census tool for matching covered bipartite graphs.
//
// Exit codes: 0 success / all checks pass, 1 check violation found,
// 2 usage or parse error, 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcg/bgf.hpp"
#include "mcg/brace.hpp"
#include "mcg/cuts.hpp"
#include "mcg/generate.hpp"
#include "mcg/report_io.hpp"
#include "mcg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mcg::input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string file_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

mcg::BipartiteGraph load_graph(const std::string& path) {
    return mcg::parse_graph_text(read_file(path), file_stem(path));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

int run_analyze(const std::string& file, bool as_json, bool no_timing, bool as_dot) {
    Timer timer;
    mcg::BipartiteGraph g = load_graph(file);
    mcg::AnalysisReport rep = mcg::analyze(g);

    bool violation = false;
    for (const mcg::CheckFlag* f : {&rep.t1, &rep.t2, &rep.chain, &rep.t4, &rep.cor,
                                    &rep.helu2, &rep.helu3})
        violation = violation || f->result == mcg::CheckResult::fail;
    if (rep.euler_ok && !*rep.euler_ok) violation = true;

    if (as_dot) {
        mcg::DotOptions opt;
        opt.graph_id = g.name().empty() ? "g" : g.name();
        std::vector<mcg::EdgeThinness> thin;
        if (rep.is_brace && rep.n >= 6) {
            for (int id = 0; id < g.size(); ++id)
                thin.push_back(mcg::detail::classify_edge(g, id));
            opt.thinness = &thin;
        }
        std::cout << mcg::to_dot(g, opt);
    } else if (as_json) {
        mcg::json j = mcg::to_json(rep);
        if (!no_timing) j["timing_ms"] = timer.ms();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << mcg::render_text(rep);
        if (!no_timing) std::cout << "elapsed: " << timer.ms() << "ms\n";
    }
    return violation ? kExitViolation : kExitOk;
}

int run_gen(const std::string& name, const std::string& out_path) {
    mcg::BipartiteGraph g = mcg::named_graph(name);
    if (out_path.empty()) {
        mcg::serialize_bgf(g, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw mcg::input_error("cannot write file: " + out_path);
        mcg::serialize_bgf(g, out);
    }
    return kExitOk;
}

int run_cuts(const std::string& file, const std::string& kind, bool nontrivial_only,
             bool as_json, bool no_timing, bool as_dot) {
    Timer timer;
    mcg::BipartiteGraph g = load_graph(file);
    mcg::CutContext<mcg::BipartiteGraph> ctx(g);
    if (!ctx.coverage().covered)
        throw mcg::domain_error("tight/separating cuts are defined for matching covered "
                                "graphs only");

    std::vector<mcg::CutVerdict> selected;
    for (const mcg::Shore& x : mcg::enumerate_odd_shores(g)) {
        if (nontrivial_only && x.is_trivial()) continue;
        mcg::CutVerdict v = ctx.verdict(x);
        if (kind == "tight" ? v.tight : v.separating) selected.push_back(v);
    }

    if (as_dot) {
        int i = 0;
        for (const mcg::CutVerdict& v : selected) {
            mcg::DotOptions opt;
            opt.graph_id = "cut" + std::to_string(i++);
            opt.shore = v.shore;
            std::cout << mcg::to_dot(g, opt);
        }
    } else if (as_json) {
        mcg::json j;
        j["graph"] = g.name();
        j["kind"] = kind;
        mcg::json arr = mcg::json::array();
        for (const mcg::CutVerdict& v : selected)
            arr.push_back(mcg::json{{"shore", mcg::vertex_set_names(g, v.shore.members())},
                                    {"size", v.shore.count()},
                                    {"tight", v.tight},
                                    {"separating", v.separating},
                                    {"trivial", v.trivial},
                                    {"method_agreement", v.method_agreement}});
        j["cuts"] = arr;
        if (!no_timing) j["timing_ms"] = timer.ms();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kind << " cuts of " << (g.name().empty() ? "graph" : g.name()) << ": "
                  << selected.size() << "\n";
        for (const mcg::CutVerdict& v : selected)
            std::cout << "  " << mcg::vertex_set_names(g, v.shore.members()) << " |X|="
                      << v.shore.count() << (v.trivial ? " trivial" : " nontrivial")
                      << " tight=" << (v.tight ? "yes" : "no")
                      << " separating=" << (v.separating ? "yes" : "no") << "\n";
        if (!no_timing) std::cout << "elapsed: " << timer.ms() << "ms\n";
    }
    return kExitOk;
}

int run_thin(const std::string& file, const std::vector<int>& edge, bool as_json,
             bool no_timing) {
    Timer timer;
    mcg::BipartiteGraph g = load_graph(file);

    if (!edge.empty()) {
        std::vector<mcg::SCut> cuts = mcg::find_s_cuts(g, edge[0], edge[1]);
        int id = g.edge_id(edge[0], g.global_b(edge[1]));
        auto [u, v] = g.endpoints(id);
        if (as_json) {
            mcg::json j;
            j["edge"] = mcg::json::array({g.label(u), g.label(v)});
            j["thin"] = cuts.empty();
            mcg::json arr = mcg::json::array();
            for (const mcg::SCut& c : cuts)
                arr.push_back(mcg::json{
                    {"shore", mcg::vertex_set_names(g, c.cut.members())},
                    {"oriented_shore", mcg::vertex_set_names(g, c.oriented.members())},
                    {"size", c.cut.count()}});
            j["s_cuts"] = arr;
            if (!no_timing) j["timing_ms"] = timer.ms();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "edge " << g.label(u) << "-" << g.label(v) << ": "
                      << (cuts.empty() ? "thin" : "nonthin") << "\n";
            for (const mcg::SCut& c : cuts)
                std::cout << "  s-cut " << mcg::vertex_set_names(g, c.cut.members())
                          << " (oriented " << mcg::vertex_set_names(g, c.oriented.members())
                          << ")\n";
            if (!no_timing) std::cout << "elapsed: " << timer.ms() << "ms\n";
        }
        return kExitOk;
    }

    std::vector<mcg::EdgeThinness> all = mcg::classify_edges_thin(g);
    if (as_json) {
        mcg::json arr = mcg::json::array();
        for (const mcg::EdgeThinness& t : all) {
            mcg::json cuts = mcg::json::array();
            for (const mcg::Shore& s : t.s_cuts)
                cuts.push_back(mcg::vertex_set_names(g, s.members()));
            arr.push_back(mcg::json{{"edge", mcg::json::array({g.label(t.endpoints.first),
                                                               g.label(t.endpoints.second)})},
                                    {"thin", t.thin},
                                    {"s_cuts", cuts},
                                    {"g_minus_e_matching_covered",
                                     t.g_minus_e_matching_covered}});
        }
        mcg::json j;
        j["graph"] = g.name();
        j["edges"] = arr;
        if (!no_timing) j["timing_ms"] = timer.ms();
        std::cout << j.dump(2) << "\n";
    } else {
        int thin_count = 0;
        for (const mcg::EdgeThinness& t : all) thin_count += t.thin ? 1 : 0;
        std::cout << "thin edges of " << (g.name().empty() ? "graph" : g.name()) << ": "
                  << thin_count << " of " << all.size() << "\n";
        for (const mcg::EdgeThinness& t : all) {
            std::cout << "  " << g.label(t.endpoints.first) << "-"
                      << g.label(t.endpoints.second) << " "
                      << (t.thin ? "thin" : "NONTHIN");
            if (!t.g_minus_e_matching_covered) std::cout << " [g-e not matching covered]";
            for (const mcg::Shore& s : t.s_cuts)
                std::cout << " " << mcg::vertex_set_names(g, s.members());
            std::cout << "\n";
        }
        if (!no_timing) std::cout << "elapsed: " << timer.ms() << "ms\n";
    }
    return kExitOk;
}

mcg::CensusChecks parse_checks(const std::string& spec) {
    if (spec == "all") return mcg::CensusChecks{};
    mcg::CensusChecks c;
    c.t1 = c.t2 = c.chain = c.cor = c.helu2 = c.helu3 = false;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "t1") c.t1 = true;
        else if (tok == "t2") c.t2 = true;
        else if (tok == "cor") c.cor = true;
        else if (tok == "helu2") c.helu2 = true;
        else if (tok == "helu3") c.helu3 = true;
        else throw mcg::input_error("unknown check '" + tok +
                                    "' (use all|t1,t2,cor,helu2,helu3)");
    }
    return c;
}

int run_sweep(int max_part, bool planar_only, const std::string& checks, int jobs,
              const std::string& out_path, bool as_json, bool no_timing) {
    mcg::CensusOptions opt;
    opt.planar_only = planar_only;
    opt.checks = parse_checks(checks);
    opt.jobs = jobs;
    mcg::CensusReport rep = mcg::run_census(max_part, max_part, opt);

    std::string text = as_json ? mcg::to_json(rep, !no_timing).dump(2) + "\n"
                               : mcg::render_text(rep, !no_timing);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw mcg::input_error("cannot write file: " + out_path);
        out << text;
    }

    if (!rep.violations.empty()) return kExitViolation;
    for (const mcg::CensusCell& c : rep.cells)
        if (!c.note.empty()) return kExitResource;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching covered bipartite graphs: braces, cuts, thin edges, censuses"};
    app.require_subcommand(1);

    std::string file, out_path, checks = "all", kind;
    std::string gen_name;
    bool as_json = false, no_timing = false, nontrivial_only = false, planar_only = false;
    bool as_dot = false;
    int max_part = 0, jobs = 1;
    std::vector<int> edge;

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis of one graph");
    analyze->add_option("file", file, "BGF or JSON graph file")->required();
    analyze->add_flag("--json", as_json, "JSON report");
    analyze->add_flag("--no-timing", no_timing, "omit the timing field");
    analyze->add_flag("--dot", as_dot, "emit DOT instead of a report");

    CLI::App* gen = app.add_subcommand("gen", "write a named graph as BGF");
    gen->add_option("name", gen_name, "c4, path4, q3, heawood, k<a>,<b>")->required();
    gen->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* cuts = app.add_subcommand("cuts", "list tight or separating cuts");
    cuts->add_option("file", file, "BGF or JSON graph file")->required();
    cuts->add_option("--kind", kind, "tight|separating")
        ->required()
        ->check(CLI::IsMember({"tight", "separating"}));
    cuts->add_flag("--nontrivial-only", nontrivial_only, "skip trivial cuts");
    cuts->add_flag("--json", as_json, "JSON output");
    cuts->add_flag("--no-timing", no_timing, "omit the timing field");
    cuts->add_flag("--dot", as_dot, "emit DOT per cut");

    CLI::App* thin = app.add_subcommand("thin", "thin/nonthin edge classification");
    thin->add_option("file", file, "BGF or JSON graph file")->required();
    thin->add_option("--edge", edge, "A-index and B-index of one edge")->expected(2);
    thin->add_flag("--json", as_json, "JSON output");
    thin->add_flag("--no-timing", no_timing, "omit the timing field");

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive census verification");
    sweep->add_option("--max-part", max_part, "largest part size")->required();
    sweep->add_flag("--planar-only", planar_only, "restrict to planar braces");
    sweep->add_option("--checks", checks, "all|t1,t2,cor,helu2,helu3");
    sweep->add_option("--jobs", jobs, "concurrent census cells");
    sweep->add_option("--out", out_path, "write the report to a file");
    sweep->add_flag("--json", as_json, "JSON report");
    sweep->add_flag("--no-timing", no_timing, "omit the timing field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(file, as_json, no_timing, as_dot);
        if (app.got_subcommand(gen)) return run_gen(gen_name, out_path);
        if (app.got_subcommand(cuts))
            return run_cuts(file, kind, nontrivial_only, as_json, no_timing, as_dot);
        if (app.got_subcommand(thin)) return run_thin(file, edge, as_json, no_timing);
        if (app.got_subcommand(sweep))
            return run_sweep(max_part, planar_only, checks, jobs, out_path, as_json,
                             no_timing);
    } catch (const mcg::resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const mcg::property_violation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const mcg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mcg::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mcg::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
