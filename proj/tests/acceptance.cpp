// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion (SKIP only when an external input file
// is not present in this environment). Exit code 0 iff nothing failed.
//
// Work area: PURPLE_ACCEPT_DIR (catalog files generated there are cached
// between runs). Extended-run catalogs that cannot be derived locally are
// picked up from PURPLE_RAMSEY_CATALOG_DIR when provided.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "purple/catalog.hpp"
#include "purple/cli.hpp"
#include "purple/colouring.hpp"
#include "purple/constructions.hpp"
#include "purple/graph6.hpp"
#include "purple/ramsey_gen.hpp"
#include "purple/search.hpp"

using namespace purple;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

void report_skip(int id, const std::string& name, const std::string& why) {
    std::cout << "SKIP  criterion " << id << ": " << name << "  [" << why << "]" << std::endl;
}

fs::path work_dir() {
    fs::path dir = PURPLE_ACCEPT_DIR;
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph cycle(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.push_back(Edge(i, (i + 1) % n));
    return Graph::from_edges(n, e);
}

Graph random_graph(int n, double p, Rng& rng) {
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) edges.push_back(Edge(u, v));
    return Graph::from_edges(n, edges);
}

fs::path catalog_path(int n, int s, int t) {
    return work_dir() / ("L_" + std::to_string(n) + "_" + std::to_string(s) + "_" +
                         std::to_string(t) + ".g6");
}

void ensure_desk_catalogs() {
    Ramsey3Generator gen(2);
    auto ensure = [&](int n, int s, int t) {
        fs::path p = catalog_path(n, s, t);
        if (fs::exists(p)) return;
        auto t0 = Clock::now();
        std::vector<Graph> graphs =
            (s == 4) ? std::vector<Graph>{paley17()} : gen.catalog(t, n);
        save_graph6_file(p.string(), graphs);
        std::cout << "  [fixtures] derived L(" << n << ";" << s << "," << t << "): "
                  << graphs.size() << " graphs in " << seconds_since(t0) << "s" << std::endl;
    };
    ensure(13, 3, 5);
    ensure(17, 4, 4);
    ensure(17, 3, 6);
    ensure(22, 3, 7);
}

// External (non-derivable) catalog lookup for the extended rows.
std::optional<std::string> external_catalog(int n, int s, int t) {
    std::string name =
        "L_" + std::to_string(n) + "_" + std::to_string(s) + "_" + std::to_string(t) + ".g6";
    const char* dir = std::getenv("PURPLE_RAMSEY_CATALOG_DIR");
    if (dir != nullptr && fs::exists(fs::path(dir) / name))
        return (fs::path(dir) / name).string();
    if (fs::exists(work_dir() / name)) return (work_dir() / name).string();
    return std::nullopt;
}

void criterion1() {
    std::ostringstream detail;
    bool ok = true;

    auto t0 = Clock::now();
    Catalog c533 = enumerate_ramsey_graphs(5, 3, 3, true);
    SearchOutcome o533 = gm_over_catalog(c533);
    double t533 = seconds_since(t0);
    ok &= o533.value == 0;
    ok &= t533 < 1.0;
    detail << "g_M(5;3,3)=" << o533.value << " in " << t533 << "s";

    t0 = Clock::now();
    Catalog c834 = enumerate_ramsey_graphs(8, 3, 4, true);
    SearchOutcome o834 = gm_over_catalog(c834);
    double t834 = seconds_since(t0);
    ok &= o834.value == 2;
    ok &= t834 < 300.0;
    verify_outcome(o834, 3, 4);
    detail << "; g_M(8;3,4)=" << o834.value << " in " << t834 << "s";

    report(1, "matching values by full enumeration", ok, detail.str());
}

void criterion2() {
    struct Row {
        int n, s, t, expect;
    };
    const std::vector<Row> desk = {{13, 3, 5, 0}, {17, 4, 4, 0}, {17, 3, 6, 2}, {22, 3, 7, 6}};
    std::ostringstream detail;
    bool ok = true;
    for (const Row& row : desk) {
        auto t0 = Clock::now();
        Catalog cat = load_graph6_catalog(catalog_path(row.n, row.s, row.t).string(), row.n,
                                          row.s, row.t, /*validate=*/true,
                                          /*complete=*/true);
        SearchOutcome o = gm_over_catalog(cat, 2);
        double elapsed = seconds_since(t0);
        verify_outcome(o, row.s, row.t);
        bool row_ok = o.value == row.expect && elapsed < 1800.0;
        ok &= row_ok;
        detail << "g_M(" << row.n << ";" << row.s << "," << row.t << ")=" << o.value << " in "
               << static_cast<int>(elapsed * 1000) << "ms; ";
    }
    report(2, "matching values over ingested desk-scale catalogs", ok, detail.str());

    const std::vector<Row> extended = {{24, 4, 5, 12}, {27, 3, 8, 7}, {35, 3, 9, 0},
                                       {42, 5, 5, 6}};
    for (const Row& row : extended) {
        std::string name = "extended catalog row g_M(" + std::to_string(row.n) + ";" +
                           std::to_string(row.s) + "," + std::to_string(row.t) + ")" +
                           (row.n == 42 ? " (conditional on list completeness)" : "");
        auto path = external_catalog(row.n, row.s, row.t);
        if (!path) {
            report_skip(2, name,
                        "catalog file not available in this environment; supply "
                        "PURPLE_RAMSEY_CATALOG_DIR to run");
            continue;
        }
        Catalog cat = load_graph6_catalog(*path, row.n, row.s, row.t, true, row.n != 42);
        SearchOutcome o = gm_over_catalog(cat, 2);
        verify_outcome(o, row.s, row.t);
        report(2, name, o.value == row.expect, "value=" + std::to_string(o.value));
    }
}

void criterion3() {
    struct Row {
        int n, s, t, expect;
    };
    // desk-scale general values first: these rows are not exceptional, so
    // the general search must land exactly on the matching values
    {
        bool ok = true;
        std::ostringstream detail;
        for (const Row& row :
             {Row{13, 3, 5, 0}, Row{17, 4, 4, 0}, Row{17, 3, 6, 2}, Row{22, 3, 7, 6}}) {
            Catalog cat = load_graph6_catalog(catalog_path(row.n, row.s, row.t).string(),
                                              row.n, row.s, row.t, true, true);
            SearchOutcome o = g_over_catalog(cat, 2);
            verify_outcome(o, row.s, row.t);
            ok &= o.value == row.expect;
            detail << "g(" << row.n << ";" << row.s << "," << row.t << ")=" << o.value << "; ";
        }
        report(3, "general-g desk rows match the matching values (no exceptions)", ok,
               detail.str());
    }
    for (const Row& row : {Row{27, 3, 8, 9}, Row{24, 4, 5, 14}}) {
        std::string name = "general-g exception g(" + std::to_string(row.n) + ";" +
                           std::to_string(row.s) + "," + std::to_string(row.t) + ")";
        auto path = external_catalog(row.n, row.s, row.t);
        if (!path) {
            report_skip(3, name,
                        "catalog file not available in this environment; supply "
                        "PURPLE_RAMSEY_CATALOG_DIR to run");
            continue;
        }
        Catalog cat = load_graph6_catalog(*path, row.n, row.s, row.t, true, true);
        SearchOutcome o = g_over_catalog(cat, 2);
        verify_outcome(o, row.s, row.t);
        bool ok = o.value == row.expect;
        std::ostringstream detail;
        detail << "value=" << o.value;
        if (row.n == 27 && ok) {
            Graph p = Graph::from_edges(27, o.witness_purple);
            std::vector<int> comp_sizes;
            for (const Bitset& comp : purple::detail::components(p))
                if (comp.count() > 1)
                    comp_sizes.push_back(
                        static_cast<int>(p.induced(comp.to_vector()).edge_count()));
            std::sort(comp_sizes.rbegin(), comp_sizes.rend());
            detail << "; purple component edge counts:";
            for (int c : comp_sizes) detail << " " << c;
        }
        report(3, name, ok, detail.str());
    }
}

void criterion4() {
    bool ok = true;
    std::ostringstream detail;
    int combos = 0;
    for (int n = 1; n <= 7; ++n)
        for (int s = 2; s <= 4; ++s)
            for (int t = 2; t <= 4; ++t) {
                std::optional<int> om, og;
                try {
                    om = brute_force_g(n, s, t, PurpleKind::matching);
                    og = brute_force_g(n, s, t, PurpleKind::general);
                } catch (const Error&) {
                }
                Catalog cat = enumerate_ramsey_graphs(n, s, t, true);
                if (!om) {
                    if (!cat.graphs.empty()) {
                        ok = false;
                        detail << "(" << n << "," << s << "," << t
                               << "): oracle undefined but catalog nonempty; ";
                    }
                    continue;
                }
                ++combos;
                SearchOutcome m = gm_over_catalog(cat);
                SearchOutcome g = g_over_catalog(cat);
                if (m.value != *om || g.value != *og) {
                    ok = false;
                    detail << "(" << n << "," << s << "," << t << "): gm=" << m.value
                           << " oracle=" << *om << " g=" << g.value << " oracle=" << *og
                           << "; ";
                }
            }
    detail << combos << " defined combos, all exact";
    report(4, "oracle equivalence for n <= 7, s,t in {2,3,4}", ok, detail.str());
}

void criterion5() {
    Rng rng(20250810);
    bool ok = true;
    std::ostringstream detail;
    int done = 0;
    while (done < 100) {
        int k = 1 + static_cast<int>(rng.next_below(10));
        int n = k + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(121 - k)));
        Graph g = random_graph(k, 0.15 + 0.7 * rng.next_unit(), rng);
        PurpleColouring c = blow_up_colouring(g, n);
        const long long e = g.edge_count();
        bool item1 = clique_number(c.red.union_with(c.purple)) == clique_number(g);
        int alpha_r = independence_number(c.red);
        long long ceil_nk = (n + k - 1) / k;
        bool item2 = alpha_r <= ceil_nk * independence_number(g);
        if (n <= 60)
            item2 = item2 && clique_number(c.blue.union_with(c.purple)) == alpha_r;
        bool item3 = std::llabs(c.purple.edge_count() * k * k - e * n * n) <= 3 * e * n * k;
        bool item4 = c.red.edge_count() * k <= e * (n + k);
        if (!(item1 && item2 && item3 && item4)) {
            ok = false;
            detail << "failure at k=" << k << " n=" << n << " items " << item1 << item2
                   << item3 << item4 << "; ";
        }
        ++done;
    }
    report(5, "blow-up colouring structural suite (100 randomized)", ok,
           ok ? "all four items exact" : detail.str());
}

void criterion6() {
    bool ok = true;
    std::ostringstream detail;
    int cases = 0;
    for (int k = 2; k <= 5; ++k)
        for (int n = 3 * k - 1; n <= 60; ++n)
            for (int t = 0; t <= n; ++t) {
                CanonicalBlowupParams p;
                try {
                    p = canonical_blowup_params(n, k, t);
                } catch (const Error&) {
                    continue;
                }
                ++cases;
                Blowup b = canonical_blowup(n, k, t);
                bool edges_ok = b.graph.edge_count() == canonical_blowup_edge_formula(n, k, t);
                bool alpha_ok = independence_number(b.graph) == t;
                bool colouring_ok = true;
                if (p.light_size >= 1) {
                    PurpleColouring c = canonical_blowup_colouring(n, k, t);
                    colouring_ok = independence_number(c.red) <= t &&
                                   c.red.edge_count() <= 3LL * k * k * n &&
                                   c.red.union_with(c.purple) == b.graph;
                }
                if (!(edges_ok && alpha_ok && colouring_ok)) {
                    ok = false;
                    detail << "(" << n << "," << k << "," << t << ") edges=" << edges_ok
                           << " alpha=" << alpha_ok << " colouring=" << colouring_ok << "; ";
                }
            }
    std::ostringstream summary;
    summary << cases << " valid (n,k,t) cases";
    report(6, "canonical blow-up edge formula and alpha sweep (n <= 60, k <= 5)", ok,
           ok ? summary.str() : detail.str());
}

void criterion7() {
    bool ok = true;
    std::ostringstream detail;
    const double eps = 3.0, eps2 = 0.05;
    for (int n : {200, 500}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            TfpRun run = triangle_free_process(n, seed);
            if (!run.maximal) {
                ok = false;
                detail << "n=" << n << " seed=" << seed << " not maximal; ";
            }
            std::vector<Bitset> adj(n, Bitset(n));
            for (const Edge& e : run.order) {
                if ((adj[e.u] & adj[e.v]).any()) {
                    ok = false;
                    detail << "n=" << n << " seed=" << seed << " prefix triangle; ";
                    break;
                }
                adj[e.u].set(e.v);
                adj[e.v].set(e.u);
            }
            const Graph& fin = run.final_graph;
            for (int u = 0; u < n && ok; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!fin.has_edge(u, v) &&
                        !(fin.neighbours(u) & fin.neighbours(v)).any()) {
                        ok = false;
                        detail << "n=" << n << " seed=" << seed << " not maximal at (" << u
                               << "," << v << "); ";
                        break;
                    }

            TwoPhaseResult r = tfp_two_phase_colouring(n, eps, eps2, seed);
            if (r.colouring.purple.edge_count() != r.m2 - r.m1) {
                ok = false;
                detail << "n=" << n << " seed=" << seed << " |P| mismatch; ";
            }
            if (clique_number(r.colouring.red.union_with(r.colouring.purple), 3) != 2) {
                ok = false;
                detail << "n=" << n << " seed=" << seed << " omega(RuP) != 2; ";
            }
        }
        TwoPhaseResult r = tfp_two_phase_colouring(n, eps, eps2, 1);
        IndependenceBounds ab = independence_bounds(r.colouring.red);
        int lb = ab.lower, ub = ab.upper;
        double target = (std::sqrt(2.0) + eps) * std::sqrt(n * std::log2(n));
        detail << "n=" << n << ": alpha(R) in [" << lb << "," << ub << "], target "
               << static_cast<int>(target)
               << (ub < target ? " (bound satisfied)"
                               : (lb >= target ? " (bound violated)" : " (undetermined)"))
               << "; ";
    }
    report(7, "triangle-free process and two-phase colouring (n in {200,500}, 20 seeds)", ok,
           detail.str());
}

void criterion8() {
    bool ok = true;
    std::ostringstream detail;

    {
        Graph cert = andrasfai(6);
        const int n = 2000;
        PurpleColouring c = blow_up_colouring(cert, n);
        int t = static_cast<int>(((n + 16) / 17) * 6) + 1;
        StFreeVerdict v = is_st_free(c, 3, t);
        ok &= v.free;
        double trivial = n * (t - 1) / 2.0;
        detail << "blow-up(Andrasfai6, 2000): (3," << t << ")-free=" << v.free
               << " |P|/bound=" << static_cast<double>(c.purple.edge_count()) / trivial << "; ";
    }
    {
        TfpRun run = triangle_free_process(60, 7);
        Graph cert = run.final_graph;
        int alpha = independence_number(cert);
        const int n = 1980;
        PurpleColouring c = blow_up_colouring(cert, n);
        int t = static_cast<int>(((n + 59) / 60) * static_cast<long long>(alpha)) + 1;
        StFreeVerdict v = is_st_free(c, 3, t);
        ok &= v.free;
        double trivial = n * (t - 1) / 2.0;
        detail << "blow-up(tfp60, 1980): (3," << t << ")-free=" << v.free
               << " |P|/bound=" << static_cast<double>(c.purple.edge_count()) / trivial << "; ";
    }
    {
        const int n = 1998, k = 4, t = 740;
        PurpleColouring c = canonical_blowup_colouring(n, k, t);
        StFreeVerdict v = is_st_free(c, 3, t + 1);
        ok &= v.free;
        double trivial = n * static_cast<double>(t) / 2.0;
        detail << "canonical(1998,4,740): (3,741)-free=" << v.free
               << " |P|/bound=" << static_cast<double>(c.purple.edge_count()) / trivial << "; ";
    }
    {
        PurpleColouring base = blow_up_colouring(cycle(5), 400);
        PurpleColouring prod = strong_product_colouring(base, 5);
        int alpha_r = independence_number(prod.red);
        StFreeVerdict v = is_st_free(prod, 11, alpha_r + 1);
        ok &= v.free;
        double trivial = prod.n * static_cast<double>(alpha_r) / 2.0;
        detail << "strong-product(C5 blow-up x5, n=2000): (11," << alpha_r + 1
               << ")-free=" << v.free
               << " |P|/bound=" << static_cast<double>(prod.purple.edge_count()) / trivial;
    }
    report(8, "large constructions verified (s,t)-free at n <= 2000", ok,
           detail.str());
}

void criterion9() {
    Rng rng(909);
    bool ok = true;
    std::ostringstream detail;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(62));
        Graph g = random_graph(n, rng.next_unit(), rng);
        if (graph6_decode(graph6_encode(g)) != g) {
            ok = false;
            detail << "short-range roundtrip failure n=" << n << "; ";
            break;
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 63 + static_cast<int>(rng.next_below(38));
        Graph g = random_graph(n, 0.4, rng);
        if (graph6_decode(graph6_encode(g)) != g) {
            ok = false;
            detail << "long-range roundtrip failure n=" << n << "; ";
            break;
        }
    }
    ok &= graph6_encode(Graph::complete(1)) == "@";
    ok &= graph6_encode(Graph::complete(2)) == "A_";
    ok &= graph6_encode(Graph::empty(2)) == "A?";
    ok &= graph6_decode("A_") == Graph::complete(2);
    report(9, "graph6 codec round trips and byte-exact fixtures", ok,
           ok ? "2000 round trips + fixtures" : detail.str());
}

int run_cli_to_file(const std::string& args, const fs::path& out) {
    std::string cmd = std::string(PURPLE_CLI_BIN) + " " + args + " > " + out.string() + " 2>&1";
    return std::system(cmd.c_str());
}

void criterion10() {
    bool ok = true;
    std::ostringstream detail;
    fs::path dir = work_dir() / "determinism";
    fs::create_directories(dir);

    std::string base = "gm --n 8 --s 3 --t 4 --enumerate --json";
    std::vector<std::string> outs;
    int idx = 0;
    for (const std::string& threads : {"1", "1", "8"}) {
        fs::path out = dir / ("gm" + std::to_string(idx) + ".json");
        fs::path cert = dir / ("cert" + std::to_string(idx) + ".pc");
        ++idx;
        int rc = run_cli_to_file(base + " --threads " + threads + " --cert " + cert.string(),
                                 out);
        if (rc != 0) ok = false;
        outs.push_back(slurp(out) + "|" + slurp(cert));
    }
    if (outs[0] != outs[1] || outs[0] != outs[2]) {
        ok = false;
        detail << "gm outputs differ across runs/threads; ";
    }

    Catalog c834 = enumerate_ramsey_graphs(8, 3, 4, true);
    fs::path cat_path = dir / "c834.g6";
    save_graph6_file(cat_path.string(), c834.graphs);
    std::string gbase =
        "g --n 8 --s 3 --t 4 --catalog " + cat_path.string() + " --complete --json";
    fs::path g1 = dir / "g1.json", g8 = dir / "g8.json";
    run_cli_to_file(gbase + " --threads 1", g1);
    run_cli_to_file(gbase + " --threads 8", g8);
    if (slurp(g1) != slurp(g8)) {
        ok = false;
        detail << "g outputs differ between 1 and 8 threads; ";
    }

    fs::path p1 = dir / "tp1.pc", p2 = dir / "tp2.pc";
    std::string targs = "colour tfp-two-phase --n 200 --eps 3.0 --eps2 0.05 --seed 42 -o ";
    run_cli_to_file(targs + p1.string(), dir / "tp1.json");
    run_cli_to_file(targs + p2.string(), dir / "tp2.json");
    if (slurp(p1) != slurp(p2) || slurp(p1).empty()) {
        ok = false;
        detail << "two-phase colouring files differ; ";
    }
    if (slurp(dir / "tp1.json") != slurp(dir / "tp2.json")) {
        ok = false;
        detail << "two-phase reports differ; ";
    }
    fs::path s1 = dir / "sub1.pc", s2 = dir / "sub2.pc";
    std::string sargs = "colour subsample --base turan:40,8 --p 0.018 --seed 7 -o ";
    run_cli_to_file(sargs + s1.string(), dir / "sub1.json");
    run_cli_to_file(sargs + s2.string(), dir / "sub2.json");
    if (slurp(s1) != slurp(s2) || slurp(s1).empty()) {
        ok = false;
        detail << "subsample colouring files differ; ";
    }

    report(10, "byte-identical outputs for identical flags and seed (threads 1 and 8)", ok,
           detail.str());
}

}  // namespace

int main() {
    std::cout << "purple-ramsey acceptance suite" << std::endl;
    auto t0 = Clock::now();
    try {
        ensure_desk_catalogs();
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << seconds_since(t0) << "s)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
