#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mcg/bgf.hpp"
#include "mcg/cuts.hpp"
#include "mcg/verify.hpp"

namespace mcg {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON graph format (the label-preserving equivalent of BGF)
// ---------------------------------------------------------------------------

inline json graph_to_json(const BipartiteGraph& g) {
    json j;
    j["name"] = g.name();
    json pa = json::array(), pb = json::array(), edges = json::array();
    for (int i = 0; i < g.part_a_size(); ++i) pa.push_back(g.label(i));
    for (int i = 0; i < g.part_b_size(); ++i) pb.push_back(g.label(g.global_b(i)));
    for (int id = 0; id < g.size(); ++id) {
        auto [u, v] = g.endpoints(id);
        edges.push_back(json::array({g.label(u), g.label(v)}));
    }
    j["part_a"] = pa;
    j["part_b"] = pb;
    j["edges"] = edges;
    return j;
}

inline BipartiteGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("part_a") || !j.contains("part_b") ||
        !j.contains("edges"))
        throw parse_error(0, "graph document needs part_a, part_b and edges");
    std::vector<std::string> labels;
    for (const auto& x : j.at("part_a")) labels.push_back(x.get<std::string>());
    const int a = static_cast<int>(labels.size());
    for (const auto& x : j.at("part_b")) labels.push_back(x.get<std::string>());
    const int b = static_cast<int>(labels.size()) - a;

    auto index_of = [&](const std::string& lab) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == lab) return static_cast<int>(i);
        throw parse_error(0, "edge endpoint '" + lab + "' is not a listed vertex");
    };

    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error(0, "edges must be two-element arrays");
        int u = index_of(e[0].get<std::string>());
        int v = index_of(e[1].get<std::string>());
        if (u > v) std::swap(u, v);
        if (v < a || u >= a)
            throw parse_error(0, "non-bipartite edge: both endpoints in one part");
        edges.push_back({u, v - a});
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t k = i + 1; k < edges.size(); ++k)
            if (edges[i] == edges[k]) throw parse_error(0, "duplicate edge");
    return BipartiteGraph(a, b, std::move(edges), std::move(labels),
                          j.value("name", std::string{}));
}

/// Load from BGF or JSON text; JSON documents start with '{'.
inline BipartiteGraph parse_graph_text(const std::string& text, const std::string& name = {}) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') {
            json j;
            try {
                j = json::parse(text);
            } catch (const json::parse_error& e) {
                throw parse_error(0, std::string("bad JSON: ") + e.what());
            }
            BipartiteGraph g = graph_from_json(j);
            if (g.name().empty() && !name.empty()) g.set_name(name);
            return g;
        }
        break;
    }
    return parse_bgf(text, name);
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline json to_json(const Rational& r) {
    return json{{"num", r.numerator()},
                {"den", r.denominator()},
                {"str", std::to_string(r.numerator()) + "/" + std::to_string(r.denominator())}};
}

inline json to_json(const CheckFlag& f) {
    return json{{"result", to_string(f.result)}, {"note", f.note}};
}

inline json to_json(const AnalysisReport& r) {
    json j;
    j["name"] = r.name;
    j["canonical_form"] = r.canonical ? json(r.canonical->hex()) : json(nullptr);
    j["n"] = r.n;
    j["m"] = r.m;
    j["part_a"] = r.part_a;
    j["part_b"] = r.part_b;
    j["n3"] = r.n3;
    j["min_degree"] = r.min_degree;
    j["connected"] = r.connected;
    j["matching_covered"] = r.matching_covered;
    if (r.brace) {
        json methods;
        auto put = [&](const char* key, const std::optional<bool>& v) {
            methods[key] = v ? json(*v) : json(nullptr);
        };
        put("tight_cut_free", r.brace->tight_cut_free);
        put("two_extendable", r.brace->two_extendable);
        put("neighborhood", r.brace->neighborhood);
        j["brace"] = json{{"is_brace", r.brace->is_brace},
                          {"methods", methods},
                          {"disqualifier", r.brace->disqualifier
                                               ? json(r.brace->disqualifier->reason)
                                               : json(nullptr)}};
    } else {
        j["brace"] = nullptr;
    }
    j["planar"] = r.planar;
    j["face_count"] = r.face_count ? json(*r.face_count) : json(nullptr);
    j["euler_ok"] = r.euler_ok ? json(*r.euler_ok) : json(nullptr);
    if (r.edge_bound_holds)
        j["edge_bound"] = json{{"holds", *r.edge_bound_holds},
                               {"equality", r.edge_bound_equality.value_or(false)}};
    else
        j["edge_bound"] = nullptr;
    j["thin_count"] = r.thin_count ? json(*r.thin_count) : json(nullptr);
    j["nonthin_count"] = r.nonthin_count ? json(*r.nonthin_count) : json(nullptr);
    j["s1_nonthin_edge_count"] =
        r.s1_nonthin_edge_count ? json(*r.s1_nonthin_edge_count) : json(nullptr);
    j["s1_forest"] = r.s1_forest ? json(*r.s1_forest) : json(nullptr);
    j["helu_bound_value"] = r.helu_bound_value ? to_json(*r.helu_bound_value) : json(nullptr);
    j["lemma8_flag_count"] = r.lemma8_flag_count;
    j["checks"] = json{{"t1", to_json(r.t1)},   {"t2", to_json(r.t2)},
                       {"chain", to_json(r.chain)}, {"t4", to_json(r.t4)},
                       {"cor", to_json(r.cor)}, {"helu2", to_json(r.helu2)},
                       {"helu3", to_json(r.helu3)}};
    j["errors"] = r.errors;
    return j;
}

inline json to_json(const CensusReport& r, bool with_timing) {
    json j;
    j["a_max"] = r.a_max;
    j["b_max"] = r.b_max;
    j["planar_only"] = r.planar_only;
    json cells = json::array();
    for (const CensusCell& c : r.cells) {
        json jc{{"a", c.a},
                {"b", c.b},
                {"braces", c.braces},
                {"planar_braces", c.planar_braces}};
        jc["graphs"] = c.graphs >= 0 ? json(c.graphs) : json(nullptr);
        jc["matching_covered"] = c.matching_covered >= 0 ? json(c.matching_covered) : json(nullptr);
        jc["note"] = c.note;
        cells.push_back(jc);
    }
    j["cells"] = cells;
    json braces = json::array();
    for (const BraceRecord& b : r.braces) {
        json jb{{"a", b.a},       {"b", b.b},
                {"form", b.form.hex()}, {"n", b.n},
                {"m", b.m},       {"n3", b.n3},
                {"min_degree", b.min_degree}, {"planar", b.planar}};
        jb["thin_count"] = b.thin_count ? json(*b.thin_count) : json(nullptr);
        jb["s1_nonthin_edge_count"] =
            b.s1_nonthin_edge_count ? json(*b.s1_nonthin_edge_count) : json(nullptr);
        braces.push_back(jb);
    }
    j["braces"] = braces;
    json viols = json::array();
    for (const CensusViolation& v : r.violations)
        viols.push_back(json{{"a", v.a},
                             {"b", v.b},
                             {"form", v.form.hex()},
                             {"check", v.check},
                             {"detail", v.detail}});
    j["violations"] = viols;
    j["diagnostics"] = r.diagnostics;
    if (with_timing) j["seconds"] = r.seconds;
    return j;
}

// ---------------------------------------------------------------------------
// Plain-text renderings
// ---------------------------------------------------------------------------

inline std::string vertex_set_names(const BipartiteGraph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    });
    return out + "}";
}

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream o;
    o << "graph " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
    if (r.canonical) o << "  canonical form  " << r.canonical->hex() << "\n";
    o << "  n=" << r.n << " m=" << r.m << " parts " << r.part_a << "+" << r.part_b
      << "  n3=" << r.n3 << "  min degree " << r.min_degree << "\n";
    o << "  connected        " << (r.connected ? "yes" : "no") << "\n";
    o << "  matching covered " << (r.matching_covered ? "yes" : "no") << "\n";
    if (r.brace) {
        o << "  brace            " << (r.brace->is_brace ? "yes" : "no");
        auto m = [](const std::optional<bool>& v) {
            return !v ? "-" : (*v ? "yes" : "no");
        };
        o << "  (tight-cut-free " << m(r.brace->tight_cut_free) << ", 2-extendable "
          << m(r.brace->two_extendable) << ", neighborhood " << m(r.brace->neighborhood)
          << ")\n";
        if (r.brace->disqualifier)
            o << "    reason: " << r.brace->disqualifier->reason << "\n";
    }
    o << "  planar           " << (r.planar ? "yes" : "no");
    if (r.face_count) o << "  faces " << *r.face_count;
    if (r.euler_ok) o << "  euler " << (*r.euler_ok ? "pass" : "FAIL");
    o << "\n";
    if (r.edge_bound_holds)
        o << "  m <= 2n-4        " << (*r.edge_bound_holds ? "yes" : "no")
          << (r.edge_bound_equality.value_or(false) ? " (equality)" : "") << "\n";
    if (r.thin_count)
        o << "  thin edges       " << *r.thin_count << " of " << r.m << " (nonthin "
          << *r.nonthin_count << ")\n";
    if (r.s1_nonthin_edge_count)
        o << "  S1 nonthin       " << *r.s1_nonthin_edge_count << " edges, forest "
          << (r.s1_forest.value_or(false) ? "yes" : "NO") << "\n";
    if (r.helu_bound_value)
        o << "  thin-edge bound  " << r.helu_bound_value->numerator() << "/"
          << r.helu_bound_value->denominator() << "\n";
    auto flag = [&](const char* name, const CheckFlag& f) {
        o << "  check " << name;
        for (std::size_t i = std::string(name).size(); i < 10; ++i) o << ' ';
        o << to_string(f.result);
        if (!f.note.empty()) o << "  (" << f.note << ")";
        o << "\n";
    };
    flag("t1", r.t1);
    flag("t2", r.t2);
    flag("chain", r.chain);
    flag("t4", r.t4);
    flag("cor", r.cor);
    flag("helu2", r.helu2);
    flag("helu3", r.helu3);
    for (const std::string& e : r.errors) o << "  error: " << e << "\n";
    return o.str();
}

inline std::string render_text(const CensusReport& r, bool with_timing) {
    std::ostringstream o;
    o << "census a<=" << r.a_max << " b<=" << r.b_max
      << (r.planar_only ? " (planar braces only)" : "") << "\n";
    o << "  a b     graphs   mcovered     braces  planar-braces\n";
    for (const CensusCell& c : r.cells) {
        auto num = [](long long v) {
            return v < 0 ? std::string("-") : std::to_string(v);
        };
        o << "  " << c.a << " " << c.b << "  ";
        for (const char* s : {num(c.graphs).c_str(), num(c.matching_covered).c_str(),
                              num(c.braces).c_str(), num(c.planar_braces).c_str()}) {
            std::string t(s);
            for (std::size_t i = t.size(); i < 9; ++i) o << ' ';
            o << t << "  ";
        }
        if (!c.note.empty()) o << " " << c.note;
        o << "\n";
    }
    int planar6 = 0;
    for (const BraceRecord& b : r.braces)
        if (b.planar && b.n >= 6) ++planar6;
    o << "braces recorded: " << r.braces.size() << ", planar braces with n >= 6: " << planar6
      << "\n";
    for (const BraceRecord& b : r.braces)
        if (b.planar && b.n >= 6)
            o << "  planar brace " << b.form.hex() << "  n=" << b.n << " m=" << b.m
              << " n3=" << b.n3 << " min-degree=" << b.min_degree << "\n";
    if (r.violations.empty()) {
        o << "violations: none\n";
    } else {
        o << "violations: " << r.violations.size() << "\n";
        for (const CensusViolation& v : r.violations)
            o << "  " << v.check << " fails on " << v.form.hex() << " (cell " << v.a << ","
              << v.b << ") " << v.detail << "\n";
    }
    for (const std::string& d : r.diagnostics) o << "diagnostic: " << d << "\n";
    if (with_timing) o << "elapsed: " << r.seconds << "s\n";
    return o.str();
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

struct DotOptions {
    std::string graph_id = "g";
    std::optional<Shore> shore;  // mark shore membership
    const std::vector<EdgeThinness>* thinness = nullptr;  // style nonthin edges
};

inline std::string to_dot(const BipartiteGraph& g, const DotOptions& opt = {}) {
    DegreeProfile prof = degree_profile(g);
    std::ostringstream o;
    o << "graph " << opt.graph_id << " {\n";
    for (int v = 0; v < g.order(); ++v) {
        o << "  \"" << g.label(v) << "\" [part=" << (g.in_part_a(v) ? "a" : "b")
          << ", degree=" << prof.degree[static_cast<std::size_t>(v)];
        if (prof.degree[static_cast<std::size_t>(v)] == 3) o << ", cubic=true";
        if (opt.shore)
            o << ", shore=" << (opt.shore->members().test(v) ? "\"X\"" : "\"Xbar\"");
        o << ", shape=" << (g.in_part_a(v) ? "circle" : "box") << "];\n";
    }
    for (int id = 0; id < g.size(); ++id) {
        auto [u, v] = g.endpoints(id);
        o << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\"";
        std::string attrs;
        if (opt.shore && opt.shore->members().test(u) != opt.shore->members().test(v))
            attrs += "cut=true, style=bold";
        if (opt.thinness) {
            const EdgeThinness& t = (*opt.thinness)[static_cast<std::size_t>(id)];
            if (!attrs.empty()) attrs += ", ";
            attrs += t.thin ? "thin=true" : "thin=false, style=dashed";
        }
        if (!attrs.empty()) o << " [" << attrs << "]";
        o << ";\n";
    }
    o << "}\n";
    return o.str();
}

} // namespace mcg
