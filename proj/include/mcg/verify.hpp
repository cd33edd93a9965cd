#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <boost/rational.hpp>

#include "mcg/brace.hpp"
#include "mcg/generate.hpp"
#include "mcg/planarity.hpp"

namespace mcg {

using Rational = boost::rational<long long>;

/// The guaranteed thin-edge lower bound n - (5/2) n3 + 1, exactly.
inline Rational helu_bound(int n, int n3) {
    return Rational(2LL * n - 5LL * n3 + 2, 2);
}

enum class CheckResult { pass, fail, not_applicable };

inline const char* to_string(CheckResult r) {
    switch (r) {
    case CheckResult::pass: return "pass";
    case CheckResult::fail: return "fail";
    default: return "not-applicable";
    }
}

struct CheckFlag {
    CheckResult result = CheckResult::not_applicable;
    std::string note;

    static CheckFlag pass(std::string note = {}) { return {CheckResult::pass, std::move(note)}; }
    static CheckFlag fail(std::string note = {}) { return {CheckResult::fail, std::move(note)}; }
    static CheckFlag na(std::string note = {}) {
        return {CheckResult::not_applicable, std::move(note)};
    }
};

/// Everything the verification layer knows about one graph. Every flag is
/// recomputed from first principles through the other modules; none is
/// inferred from another.
struct AnalysisReport {
    std::string name;
    std::optional<CanonicalForm> canonical;
    int n = 0;
    int m = 0;
    int part_a = 0;
    int part_b = 0;
    int n3 = 0;
    int min_degree = 0;
    bool connected = false;
    bool matching_covered = false;

    std::optional<BraceVerdict> brace;
    bool is_brace = false;

    bool planar = false;
    std::optional<int> face_count;
    std::optional<bool> euler_ok;
    std::optional<bool> edge_bound_holds;     // m <= 2n - 4 (connected, n >= 3)
    std::optional<bool> edge_bound_equality;  // m == 2n - 4

    std::optional<int> thin_count;
    std::optional<int> nonthin_count;
    std::optional<int> s1_nonthin_edge_count;
    std::optional<bool> s1_forest;
    std::optional<Rational> helu_bound_value;
    int lemma8_flag_count = 0;

    // pass / fail / not-applicable, with hypothesis notes.
    CheckFlag t1;      // planar brace (n >= 6) has a cubic vertex
    CheckFlag t2;      // planar brace (n >= 6) has n3 >= 8
    CheckFlag chain;   // 4n - n3 <= 2m <= 4n - 8 for planar braces (n >= 6)
    CheckFlag t4;      // helu_bound(n, n3) <= n - 19 once n3 >= 8
    CheckFlag cor;     // s1 nonthin edges form a forest with <= n - 9 edges
    CheckFlag helu2;   // s1 nonthin edges form a forest
    CheckFlag helu3;   // thin_count >= helu_bound(n, n3) when 5 n3 < 2 n

    std::vector<std::string> errors;  // per-field resource problems
};

inline AnalysisReport analyze(const BipartiteGraph& g) {
    AnalysisReport r;
    r.name = g.name();
    r.n = g.order();
    r.m = g.size();
    r.part_a = g.part_a_size();
    r.part_b = g.part_b_size();

    DegreeProfile prof = degree_profile(g);
    r.n3 = prof.n3;
    r.min_degree = r.n == 0 ? 0 : *std::min_element(prof.degree.begin(), prof.degree.end());
    r.connected = is_connected(g);

    try {
        r.canonical = canonical_form(g);
    } catch (const resource_error& e) {
        r.errors.push_back(std::string("canonical_form: ") + e.what());
    }

    r.matching_covered = is_matching_covered(g).covered;

    try {
        r.brace = is_brace(g, BraceMethod::all);
        r.is_brace = r.brace->is_brace;
    } catch (const resource_error& e) {
        r.errors.push_back(std::string("is_brace: ") + e.what());
    }

    PlanarityVerdict pv = is_planar(g);
    r.planar = pv.planar;
    if (pv.planar && r.connected) {
        r.face_count = pv.face_count;
        r.euler_ok = euler_check(pv, g);
    }
    if (r.connected && r.n >= 3) {
        r.edge_bound_holds = g.size() <= 2 * g.order() - 4;
        r.edge_bound_equality = g.size() == 2 * g.order() - 4;
    }

    const bool brace6 = r.is_brace && r.n >= 6;
    if (brace6) {
        try {
            std::vector<EdgeThinness> thin;
            thin.reserve(static_cast<std::size_t>(g.size()));
            for (int id = 0; id < g.size(); ++id)
                thin.push_back(detail::classify_edge(g, id));
            int tc = 0;
            for (const EdgeThinness& t : thin) tc += t.thin ? 1 : 0;
            r.thin_count = tc;
            r.nonthin_count = g.size() - tc;
            if (*r.thin_count + *r.nonthin_count != r.m)
                throw property_violation("thin + nonthin != m");
            S1NonthinSubgraph s1 = s1_nonthin_subgraph(g, thin);
            r.s1_nonthin_edge_count = static_cast<int>(s1.edges.size());
            r.s1_forest = s1.is_forest;
            r.helu_bound_value = helu_bound(r.n, r.n3);
            r.lemma8_flag_count = static_cast<int>(helu_lemma8_scan(g, thin).size());
        } catch (const resource_error& e) {
            r.errors.push_back(std::string("thin classification: ") + e.what());
        }
    }

    // Theorem flags. All the planar-brace statements hypothesize at least six
    // vertices (C4 is the one smaller brace and is out of their range).
    const bool planar_brace6 = brace6 && r.planar;
    r.t1 = !planar_brace6 ? CheckFlag::na("needs a planar brace with n >= 6")
           : (r.n3 >= 1 ? CheckFlag::pass() : CheckFlag::fail("no cubic vertex"));
    r.t2 = !planar_brace6 ? CheckFlag::na("needs a planar brace with n >= 6")
           : (r.n3 >= 8 ? CheckFlag::pass()
                        : CheckFlag::fail("n3 = " + std::to_string(r.n3)));
    if (!planar_brace6) {
        r.chain = CheckFlag::na("needs a planar brace with n >= 6");
    } else {
        bool lower = 4 * r.n - r.n3 <= 2 * r.m;
        bool upper = 2 * r.m <= 4 * r.n - 8;
        r.chain = (lower && upper)
                      ? CheckFlag::pass()
                      : CheckFlag::fail(std::string(lower ? "" : "4n-n3 <= 2m fails ") +
                                        (upper ? "" : "2m <= 4n-8 fails"));
    }
    if (!brace6 || r.n3 < 8) {
        r.t4 = CheckFlag::na("needs a brace with n3 >= 8");
    } else {
        r.t4 = helu_bound(r.n, r.n3) <= Rational(r.n - 19)
                   ? CheckFlag::pass()
                   : CheckFlag::fail("bound value exceeds n - 19");
    }
    if (!planar_brace6 || !r.s1_nonthin_edge_count) {
        r.cor = CheckFlag::na("needs a planar brace with n >= 6");
    } else if (*r.s1_nonthin_edge_count == 0) {
        r.cor = CheckFlag::pass("no nonthin edges within S1 (vacuous)");
    } else {
        bool forest = r.s1_forest.value_or(false);
        bool count_ok = *r.s1_nonthin_edge_count <= r.n - 9;
        r.cor = (forest && count_ok)
                    ? CheckFlag::pass()
                    : CheckFlag::fail(forest ? "more than n - 9 nonthin S1 edges"
                                             : "nonthin S1 subgraph has a cycle");
    }
    r.helu2 = !brace6 || !r.s1_forest
                  ? CheckFlag::na("needs a brace with n >= 6")
                  : (*r.s1_forest ? CheckFlag::pass()
                                  : CheckFlag::fail("nonthin S1 subgraph has a cycle"));
    if (!brace6 || !r.thin_count) {
        r.helu3 = CheckFlag::na("needs a brace with n >= 6");
    } else if (5LL * r.n3 >= 2LL * r.n) {
        r.helu3 = CheckFlag::na("k = n3/n >= 0.4");
    } else {
        r.helu3 = Rational(*r.thin_count) >= helu_bound(r.n, r.n3)
                      ? CheckFlag::pass()
                      : CheckFlag::fail("thin count below the guaranteed bound");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

struct CensusChecks {
    bool t1 = true;
    bool t2 = true;
    bool chain = true;
    bool cor = true;
    bool helu2 = true;
    bool helu3 = true;
};

struct CensusOptions {
    bool planar_only = false;
    CensusChecks checks;
    int jobs = 1;
    /// Cells with a + b above this get no unfiltered class count (the brace
    /// sweep still runs there).
    int graph_count_part_sum_cap = 10;
};

struct CensusCell {
    int a = 0, b = 0;
    long long graphs = -1;  // -1: not counted (cap)
    long long matching_covered = -1;
    long long braces = 0;
    long long planar_braces = 0;
    std::string note;
};

struct BraceRecord {
    int a = 0, b = 0;
    CanonicalForm form;
    int n = 0, m = 0, n3 = 0, min_degree = 0;
    bool planar = false;
    std::optional<int> thin_count;
    std::optional<int> s1_nonthin_edge_count;
};

struct CensusViolation {
    int a = 0, b = 0;
    CanonicalForm form;
    std::string check;
    std::string detail;
};

struct CensusReport {
    int a_max = 0, b_max = 0;
    bool planar_only = false;
    std::vector<CensusCell> cells;
    std::vector<BraceRecord> braces;
    std::vector<CensusViolation> violations;
    std::vector<std::string> diagnostics;
    double seconds = 0.0;
};

namespace detail {

inline void census_cell(int a, int b, const CensusOptions& opt, CensusCell& cell,
                        std::vector<BraceRecord>& braces,
                        std::vector<CensusViolation>& violations,
                        std::vector<std::string>& diagnostics) {
    cell.a = a;
    cell.b = b;

    std::vector<BipartiteGraph> brace_list;
    if (a + b <= opt.graph_count_part_sum_cap) {
        // One unfiltered pass counts everything.
        std::vector<BipartiteGraph> all = enumerate_bipartite(a, b);
        cell.graphs = static_cast<long long>(all.size());
        cell.matching_covered = 0;
        for (BipartiteGraph& g : all) {
            if (!is_matching_covered(g).covered) continue;
            ++cell.matching_covered;
            bool brace = g.order() >= 6
                             ? is_brace(g, BraceMethod::neighborhood).is_brace
                             : is_brace(g, BraceMethod::tight_cut_free).is_brace;
            if (brace) brace_list.push_back(std::move(g));
        }
    } else {
        GenFilter f;
        f.min_degree = a + b >= 6 ? 3 : 1;
        f.require_matching_covered = true;
        f.require_brace = true;
        if (opt.planar_only) {
            f.max_edges_rule = GenFilter::MaxEdgesRule::bipartite_planar;
            f.require_planar = true;
        }
        try {
            brace_list = enumerate_bipartite(a, b, f);
        } catch (const resource_error& e) {
            cell.note = e.what();
            return;
        }
    }

    for (const BipartiteGraph& g : brace_list) {
        AnalysisReport rep = analyze(g);
        if (!rep.is_brace) continue;  // defensive; the filter already decided
        ++cell.braces;
        if (rep.planar) ++cell.planar_braces;
        if (opt.planar_only && !rep.planar) continue;

        BraceRecord rec;
        rec.a = a;
        rec.b = b;
        if (rep.canonical) rec.form = *rep.canonical;
        rec.n = rep.n;
        rec.m = rep.m;
        rec.n3 = rep.n3;
        rec.min_degree = rep.min_degree;
        rec.planar = rep.planar;
        rec.thin_count = rep.thin_count;
        rec.s1_nonthin_edge_count = rep.s1_nonthin_edge_count;
        braces.push_back(rec);

        auto record = [&](const char* check, const CheckFlag& flag) {
            if (flag.result == CheckResult::fail)
                violations.push_back(CensusViolation{a, b, rec.form, check, flag.note});
        };
        if (opt.checks.t1) record("t1", rep.t1);
        if (opt.checks.t2) record("t2", rep.t2);
        if (opt.checks.chain) record("chain", rep.chain);
        if (opt.checks.cor) record("cor", rep.cor);
        if (opt.checks.helu2) record("helu2", rep.helu2);
        if (opt.checks.helu3) record("helu3", rep.helu3);
        for (const std::string& e : rep.errors)
            diagnostics.push_back("cell " + std::to_string(a) + "," + std::to_string(b) +
                                  " " + rec.form.hex() + ": " + e);
        if (rep.lemma8_flag_count > 0)
            diagnostics.push_back("cell " + std::to_string(a) + "," + std::to_string(b) +
                                  " " + rec.form.hex() + ": lemma8 intersection flag x" +
                                  std::to_string(rep.lemma8_flag_count));
    }
}

} // namespace detail

/// Exhaustive verification sweep over all cells 1 <= a <= a_max, a <= b <= b_max.
/// Cells are independent; `jobs` controls how many run concurrently. Results
/// are merged in cell order, so the report is identical for every job count.
inline CensusReport run_census(int a_max, int b_max, const CensusOptions& opt = {}) {
    if (a_max < 1 || b_max < 1) throw input_error("census bounds must be at least 1");
    if (a_max + b_max > kEnumPartSumCap)
        throw resource_error("census.part_sum_cap=" + std::to_string(kEnumPartSumCap),
                             "a_max + b_max exceeds the census cap");
    auto t0 = std::chrono::steady_clock::now();

    CensusReport report;
    report.a_max = a_max;
    report.b_max = b_max;
    report.planar_only = opt.planar_only;

    std::vector<std::pair<int, int>> cells;
    for (int a = 1; a <= a_max; ++a)
        for (int b = a; b <= b_max; ++b) cells.push_back({a, b});

    std::vector<CensusCell> cell_out(cells.size());
    std::vector<std::vector<BraceRecord>> braces_out(cells.size());
    std::vector<std::vector<CensusViolation>> viol_out(cells.size());
    std::vector<std::vector<std::string>> diag_out(cells.size());

    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            detail::census_cell(cells[i].first, cells[i].second, opt, cell_out[i],
                                braces_out[i], viol_out[i], diag_out[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < cells.size(); ++i) {
        report.cells.push_back(cell_out[i]);
        report.braces.insert(report.braces.end(), braces_out[i].begin(), braces_out[i].end());
        report.violations.insert(report.violations.end(), viol_out[i].begin(),
                                 viol_out[i].end());
        report.diagnostics.insert(report.diagnostics.end(), diag_out[i].begin(),
                                  diag_out[i].end());
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace mcg
