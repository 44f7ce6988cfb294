#pragma once

// Command-line front end: argument parsing into a validated CommandPlan and
// the execution dispatcher. Kept header-side so the plan/execute pair is
// unit-testable without spawning processes.
//
// Exit codes: 0 success, 2 usage or validation failure, 3 deadline expired
// (the reported value is a lower bound).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "purple/catalog.hpp"
#include "purple/colouring.hpp"
#include "purple/constructions.hpp"
#include "purple/graph6.hpp"
#include "purple/search.hpp"

namespace purple {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

struct CommandPlan {
    std::string subcommand;
    std::optional<int> n, s, t, k, ell, report_t;
    std::optional<double> gamma, eps, eps2, p;
    std::optional<std::uint64_t> seed;
    std::optional<long long> max_steps;
    std::optional<long long> deadline_ms;
    std::string base_spec;     // graph input: family spec or file path
    std::string input_path;    // colouring file input
    std::string core4_path, core3_path;
    std::string catalog_path;
    bool enumerate = false;
    bool complete = false;
    bool dedup = true;
    bool validate = true;
    bool timing = false;
    bool json_out = false;
    std::string stats_mode = "auto";  // exact | bounds | auto
    int threads = 1;
    PurpleKind kind = PurpleKind::matching;
    std::string out_path;      // primary artifact (graph / colouring / g6 list)
    std::string cert_path;     // witness colouring
    std::string format;        // graph6 | edges | auto
    std::set<int> residues;    // circulant connection set
};

// ---- graph input specs ----
// Families: cycle:N, path:N, complete:N, empty:N, andrasfai:K, turan:N,R,
// circulant:M:r1,r2,... Anything else is read as a file (edge-list text if
// it starts with "graph ", one graph6 record otherwise).
inline Graph load_graph_spec(const std::string& spec) {
    auto parse_int = [](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw UsageError("bad integer '" + s + "' in graph spec");
        return v;
    };
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string family = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (family == "cycle") {
            int n = parse_int(rest);
            if (n < 3) throw UsageError("cycle needs n >= 3");
            EdgeList e;
            for (int i = 0; i < n; ++i) e.push_back(Edge(i, (i + 1) % n));
            return Graph::from_edges(n, e);
        }
        if (family == "path") {
            int n = parse_int(rest);
            EdgeList e;
            for (int i = 0; i + 1 < n; ++i) e.push_back(Edge(i, i + 1));
            return Graph::from_edges(n, e);
        }
        if (family == "complete") return Graph::complete(parse_int(rest));
        if (family == "empty") return Graph::empty(parse_int(rest));
        if (family == "andrasfai") return andrasfai(parse_int(rest));
        if (family == "turan") {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw UsageError("turan spec is turan:N,R");
            return turan_graph(parse_int(rest.substr(0, comma)),
                               parse_int(rest.substr(comma + 1)));
        }
        if (family == "circulant") {
            auto second = rest.find(':');
            if (second == std::string::npos)
                throw UsageError("circulant spec is circulant:M:r1,r2,...");
            int m = parse_int(rest.substr(0, second));
            std::set<int> conn;
            std::istringstream rs(rest.substr(second + 1));
            std::string tok;
            while (std::getline(rs, tok, ',')) conn.insert(parse_int(tok));
            return circulant_graph(m, conn);
        }
        throw UsageError("unknown graph family '" + family + "'");
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw UsageError("cannot open graph file: " + spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.rfind("graph ", 0) == 0) return parse_edge_list(text);
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.empty()) throw UsageError("empty graph file: " + spec);
    return graph6_decode(line);
}

inline void write_graph_output(const Graph& g, const std::string& path,
                               const std::string& format, std::ostream& fallback) {
    std::string fmt = format.empty() || format == "auto"
                          ? (g.vertex_count() <= 62 ? "graph6" : "edges")
                          : format;
    std::string payload;
    if (fmt == "graph6")
        payload = graph6_encode(g) + "\n";
    else if (fmt == "edges")
        payload = to_edge_list(g);
    else
        throw UsageError("unknown output format '" + fmt + "'");
    if (path.empty() || path == "-") {
        fallback << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << payload;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

// ---- parsing ----

inline CommandPlan parse_args(const std::vector<std::string>& args) {
    CommandPlan plan;
    CLI::App app{"purple-ramsey: exact red/blue/purple Ramsey computations"};
    app.require_subcommand(1);

    // holders; CLI11 writes through pointers
    int n = 0, s = 0, t = 0, k = 0, ell = 0, report_t = 0, threads = 1, modulus = 0;
    double gamma = 0, eps = 0, eps2 = 0, p = 0;
    std::uint64_t seed = 0;
    long long max_steps = 0, deadline_ms = 0;
    std::string residues_csv, kind_str = "matching";

    auto add_common_outputs = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", plan.out_path, "output file ('-' for stdout)");
        cmd->add_flag("--json", plan.json_out, "emit a JSON report on stdout");
        cmd->add_option("--format", plan.format, "graph output format: graph6|edges|auto");
        cmd->add_option("--stats", plan.stats_mode,
                        "report stats: exact | bounds | auto (exact alpha for structured "
                        "constructions, deterministic bounds for randomized ones)");
    };

    // gen
    CLI::App* gen = app.add_subcommand("gen", "construct a parameterized graph");
    gen->require_subcommand(1);
    CLI::App* gt = gen->add_subcommand("turan", "equitable complete multipartite graph");
    gt->add_option("--n", n, "vertices")->required();
    gt->add_option("--r", k, "parts")->required();
    add_common_outputs(gt);
    CLI::App* ga = gen->add_subcommand("andrasfai", "triangle-free circulant, alpha = k");
    ga->add_option("--k", k, "parameter k >= 2")->required();
    add_common_outputs(ga);
    CLI::App* gc = gen->add_subcommand("circulant", "circulant graph over Z/mZ");
    gc->add_option("--m", modulus, "modulus")->required();
    gc->add_option("--connection", residues_csv, "comma-separated residues")->required();
    add_common_outputs(gc);
    CLI::App* gk = gen->add_subcommand("canonical", "canonical Andrasfai blow-up");
    gk->add_option("--n", n, "vertices")->required();
    gk->add_option("--k", k, "Andrasfai parameter")->required();
    gk->add_option("--t", t, "independence target")->required();
    add_common_outputs(gk);

    // colour
    CLI::App* colour = app.add_subcommand("colour", "construct a red/blue/purple colouring");
    colour->require_subcommand(1);
    CLI::App* cb = colour->add_subcommand("blowup", "equitable blow-up colouring of a base graph");
    cb->add_option("--base", plan.base_spec, "base graph (family spec or file)")->required();
    cb->add_option("--n", n, "target vertex count")->required();
    cb->add_option("--report-t", report_t, "report the trivial bound for this t");
    add_common_outputs(cb);
    CLI::App* cc = colour->add_subcommand("canonical", "canonical Andrasfai blow-up colouring");
    cc->add_option("--n", n, "vertices")->required();
    cc->add_option("--k", k, "Andrasfai parameter")->required();
    cc->add_option("--t", t, "independence target")->required();
    add_common_outputs(cc);
    CLI::App* cs = colour->add_subcommand("strong-product", "disjoint copies joined red/purple");
    cs->add_option("--input", plan.input_path, "base colouring file")->required();
    cs->add_option("--ell", ell, "number of copies")->required();
    cs->add_option("--report-t", report_t, "report the trivial bound for this t");
    add_common_outputs(cs);
    CLI::App* cp = colour->add_subcommand("sprinkle", "core4 + copies of core3, random red cross edges");
    cp->add_option("--core4", plan.core4_path, "(4,.)-free core colouring file")->required();
    cp->add_option("--core3", plan.core3_path, "(3,.)-free core colouring file")->required();
    cp->add_option("--ell", ell, "2 + number of core3 copies")->required();
    cp->add_option("--p", p, "red probability (default n^-1/2)");
    cp->add_option("--seed", seed, "PRNG seed")->required();
    add_common_outputs(cp);
    CLI::App* cu = colour->add_subcommand("subsample", "purple = random subset of a host graph");
    cu->add_option("--base", plan.base_spec, "host graph (family spec or file)")->required();
    cu->add_option("--p", p, "keep probability (default 0.018)");
    cu->add_option("--seed", seed, "PRNG seed")->required();
    cu->add_option("--report-t", report_t, "report the trivial bound for this t");
    add_common_outputs(cu);
    CLI::App* ct = colour->add_subcommand("tfp", "triangle-free process run");
    ct->add_option("--n", n, "vertices")->required();
    ct->add_option("--seed", seed, "PRNG seed")->required();
    ct->add_option("--max-steps", max_steps, "stop after this many edges");
    add_common_outputs(ct);
    CLI::App* c2 = colour->add_subcommand("tfp-two-phase", "process prefix split red/purple");
    c2->add_option("--n", n, "vertices")->required();
    c2->add_option("--eps", eps, "epsilon (eps1 = eps^2/100)")->required();
    c2->add_option("--eps2", eps2, "second phase epsilon, 0 < eps2 < eps^2/100")->required();
    c2->add_option("--seed", seed, "PRNG seed")->required();
    add_common_outputs(c2);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "validate a colouring file and report stats");
    verify->add_option("file", plan.input_path, "colouring file")->required();
    verify->add_option("--s", s, "red/purple clique bound")->required();
    verify->add_option("--t", t, "blue/purple clique bound")->required();
    verify->add_flag("--json", plan.json_out, "emit a JSON report");

    // gm / g
    auto add_search_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "vertex count")->required();
        cmd->add_option("--s", s, "clique bound")->required();
        cmd->add_option("--t", t, "independence bound")->required();
        cmd->add_flag("--enumerate", plan.enumerate, "enumerate the catalog (n <= 10)");
        cmd->add_option("--catalog", plan.catalog_path, "graph6 catalog file");
        cmd->add_flag("--complete", plan.complete, "assert the ingested catalog is complete");
        cmd->add_option("--threads", threads, "worker threads (default 1)");
        cmd->add_option("--deadline-ms", deadline_ms, "per-run deadline in milliseconds");
        cmd->add_flag("--timing", plan.timing, "include runtime_ms in the JSON report");
        cmd->add_flag("--json", plan.json_out, "emit a JSON report");
        cmd->add_option("--cert", plan.cert_path, "write the witness colouring here");
        cmd->add_option("-o,--out", plan.out_path, "write the JSON report here");
    };
    CLI::App* gm = app.add_subcommand("gm", "largest purple matching over a catalog");
    add_search_options(gm);
    CLI::App* gg = app.add_subcommand("g", "largest purple edge set over a catalog");
    add_search_options(gg);

    // enum
    CLI::App* en = app.add_subcommand("enum", "enumerate a Ramsey catalog (n <= 10)");
    en->add_option("--n", n, "vertex count")->required();
    en->add_option("--s", s, "clique bound")->required();
    en->add_option("--t", t, "independence bound")->required();
    en->add_flag("--labelled", [&plan](std::int64_t) { plan.dedup = false; },
                 "keep all labelled graphs (no isomorph rejection)");
    en->add_flag("--json", plan.json_out, "emit the manifest as JSON");
    en->add_option("-o,--out", plan.out_path, "write graph6 records here");

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "ingest and describe graph6 catalogs");
    cat->require_subcommand(1);
    CLI::App* cv = cat->add_subcommand("validate", "decode and validate every record");
    CLI::App* cm = cat->add_subcommand("manifest", "decode records and emit the manifest");
    for (CLI::App* sub : {cv, cm}) {
        sub->add_option("file", plan.catalog_path, "graph6 file")->required();
        sub->add_option("--n", n, "vertex count")->required();
        sub->add_option("--s", s, "clique bound")->required();
        sub->add_option("--t", t, "independence bound")->required();
        sub->add_flag("--complete", plan.complete, "assert completeness");
        sub->add_option("-o,--out", plan.out_path, "write the manifest here");
    }

    // oracle
    CLI::App* orc = app.add_subcommand("oracle", "brute-force reference value (n <= 7)");
    orc->add_option("--n", n, "vertex count")->required();
    orc->add_option("--s", s, "clique bound")->required();
    orc->add_option("--t", t, "independence bound")->required();
    orc->add_option("--kind", kind_str, "matching|general")->required();
    orc->add_flag("--json", plan.json_out, "emit a JSON report");

    // table
    CLI::App* tab = app.add_subcommand(
        "table", "batch g_M and g over catalog rows, emitted as a CSV table");
    tab->add_option("--rows", plan.input_path,
                    "row file: 's t n enumerate|<catalog path> [complete]' per line")
        ->required();
    tab->add_option("--threads", threads, "worker threads");
    tab->add_option("-o,--out", plan.out_path, "CSV output ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) throw UsageError(std::string("help\n") + app.help());
        throw UsageError(e.what());
    }

    auto picked = [&](CLI::App* root) {
        CLI::App* cur = root;
        std::string name;
        while (!cur->get_subcommands().empty()) {
            cur = cur->get_subcommands().front();
            name += (name.empty() ? "" : " ") + cur->get_name();
        }
        return name;
    };
    plan.subcommand = picked(&app);
    plan.threads = threads;

    auto opt_if = [](CLI::App* cmd, const std::string& flag) {
        return cmd->count(flag) > 0;
    };
    CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();

    auto set_if = [&](const std::string& name, auto& holder, auto& target) {
        if (leaf->get_option_no_throw(name) && opt_if(leaf, name)) target = holder;
    };
    set_if("--n", n, plan.n);
    set_if("--s", s, plan.s);
    set_if("--t", t, plan.t);
    set_if("--r", k, plan.k);
    set_if("--k", k, plan.k);
    set_if("--m", modulus, plan.n);
    set_if("--ell", ell, plan.ell);
    set_if("--report-t", report_t, plan.report_t);
    set_if("--eps", eps, plan.eps);
    set_if("--eps2", eps2, plan.eps2);
    set_if("--p", p, plan.p);
    set_if("--seed", seed, plan.seed);
    set_if("--max-steps", max_steps, plan.max_steps);
    set_if("--deadline-ms", deadline_ms, plan.deadline_ms);
    if (!residues_csv.empty()) {
        std::istringstream rs(residues_csv);
        std::string tok;
        while (std::getline(rs, tok, ',')) plan.residues.insert(std::stoi(tok));
    }
    if (kind_str == "general")
        plan.kind = PurpleKind::general;
    else if (kind_str != "matching")
        throw UsageError("--kind must be matching or general");

    // pre-dispatch validation of operation preconditions
    if (plan.subcommand == "gen canonical" || plan.subcommand == "colour canonical")
        canonical_blowup_params(*plan.n, *plan.k, *plan.t);  // throws with the violated inequality
    if (plan.subcommand == "gm" || plan.subcommand == "g") {
        if (plan.enumerate && !plan.catalog_path.empty())
            throw UsageError("choose one of --enumerate and --catalog");
        if (!plan.enumerate && plan.catalog_path.empty()) {
            const char* dir = std::getenv("PURPLE_RAMSEY_CATALOG_DIR");
            if (dir != nullptr) {
                plan.catalog_path = std::string(dir) + "/L_" + std::to_string(*plan.n) + "_" +
                                    std::to_string(*plan.s) + "_" + std::to_string(*plan.t) +
                                    ".g6";
            } else {
                throw UsageError(
                    "need --enumerate or --catalog (or set PURPLE_RAMSEY_CATALOG_DIR)");
            }
        }
        if (plan.threads < 1) throw UsageError("--threads must be >= 1");
    }
    return plan;
}

// ---- execution ----

namespace cli_detail {

inline Json stats_json(const ColouringStats& st) {
    Json j;
    j["red"] = st.red_count;
    j["blue"] = st.blue_count;
    j["purple"] = st.purple_count;
    j["omega_rp"] = st.omega_rp;
    j["omega_bp"] = st.omega_bp;
    j["alpha_r"] = st.alpha_r;
    if (st.trivial_bound)
        j["trivial_bound"] = *st.trivial_bound;
    else
        j["trivial_bound"] = nullptr;
    return j;
}

inline Json manifest_json(const Catalog& cat) {
    Json j;
    j["n"] = cat.n;
    j["s"] = cat.s;
    j["t"] = cat.t;
    j["count"] = cat.graphs.size();
    j["checksum"] = cat.checksum;
    j["provenance"] =
        cat.provenance == Catalog::Provenance::enumerated ? "enumerated" : "ingested";
    j["validated"] = cat.validated;
    j["complete"] = cat.complete;
    return j;
}

inline void emit(const Json& j, const std::string& path, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-")
        out << text;
    else
        write_text_file(path, text);
}

inline PurpleColouring load_colouring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open colouring file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_colouring(buf.str());
}

// Full exact stats, or counts plus deterministic alpha bounds for the
// randomized constructions whose red graphs make exact independence
// infeasible at scale. omega_rp stays exact in both modes.
inline Json colouring_report(const std::string& construction, const PurpleColouring& c,
                             std::optional<int> report_t, Json parameters, bool exact_stats) {
    Json j;
    j["construction"] = construction;
    j["n"] = c.n;
    j["parameters"] = std::move(parameters);
    if (exact_stats) {
        ColouringStats st = stats(c, report_t);
        j["stats"] = stats_json(st);
        if (st.trivial_bound && *st.trivial_bound > 0)
            j["purple_over_trivial_bound"] =
                static_cast<double>(st.purple_count) / *st.trivial_bound;
    } else {
        validate_partition(c);
        Json st;
        st["red"] = c.red.edge_count();
        st["blue"] = c.blue.edge_count();
        st["purple"] = c.purple.edge_count();
        st["omega_rp"] = clique_number(c.red.union_with(c.purple));
        IndependenceBounds ab = independence_bounds(c.red);
        st["alpha_r_lower"] = ab.lower;   // alpha(R) = omega(B u P) lies in
        st["alpha_r_upper"] = ab.upper;   // this bracket, by the partition
        if (report_t)
            st["trivial_bound"] = static_cast<double>(c.n) * (*report_t - 1) / 2.0;
        else
            st["trivial_bound"] = nullptr;
        j["stats"] = st;
        if (report_t && *report_t > 1)
            j["purple_over_trivial_bound"] = static_cast<double>(c.purple.edge_count()) /
                                             (static_cast<double>(c.n) * (*report_t - 1) / 2.0);
    }
    return j;
}

inline PurpleColouring colouring_from_outcome(const SearchOutcome& o) {
    Graph red = o.witness_graph.minus_edges(o.witness_purple);
    Graph purple = Graph::from_edges(o.witness_graph.vertex_count(), o.witness_purple);
    return make_colouring(red, o.witness_graph.complement(), purple);
}

}  // namespace cli_detail

inline int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    using cli_detail::emit;
    const auto started = std::chrono::steady_clock::now();

    // gen
    if (plan.subcommand == "gen turan") {
        write_graph_output(turan_graph(*plan.n, *plan.k), plan.out_path, plan.format, out);
        return 0;
    }
    if (plan.subcommand == "gen andrasfai") {
        write_graph_output(andrasfai(*plan.k), plan.out_path, plan.format, out);
        return 0;
    }
    if (plan.subcommand == "gen circulant") {
        write_graph_output(circulant_graph(*plan.n, plan.residues), plan.out_path, plan.format,
                           out);
        return 0;
    }
    if (plan.subcommand == "gen canonical") {
        write_graph_output(canonical_blowup(*plan.n, *plan.k, *plan.t).graph, plan.out_path,
                           plan.format, out);
        return 0;
    }

    // colour
    auto exact_stats_for = [&](bool structured_default) {
        if (plan.stats_mode == "exact") return true;
        if (plan.stats_mode == "bounds") return false;
        if (plan.stats_mode != "auto") throw UsageError("--stats must be exact, bounds or auto");
        return structured_default;
    };
    auto deliver_colouring = [&](const std::string& name, const PurpleColouring& c,
                                 std::optional<int> rep_t, Json params, bool structured) {
        if (!plan.out_path.empty()) write_text_file(plan.out_path, encode_colouring(c));
        if (plan.json_out || plan.out_path.empty())
            emit(cli_detail::colouring_report(name, c, rep_t, std::move(params),
                                              exact_stats_for(structured)),
                 "", out);
        return 0;
    };
    if (plan.subcommand == "colour blowup") {
        Graph base = load_graph_spec(plan.base_spec);
        PurpleColouring c = blow_up_colouring(base, *plan.n);
        Json params{{"base", plan.base_spec}, {"n", *plan.n}};
        return deliver_colouring("blowup", c, plan.report_t, params, /*structured=*/true);
    }
    if (plan.subcommand == "colour canonical") {
        PurpleColouring c = canonical_blowup_colouring(*plan.n, *plan.k, *plan.t);
        Json params{{"n", *plan.n}, {"k", *plan.k}, {"t", *plan.t}};
        return deliver_colouring("canonical-blowup", c, plan.t.value() + 1, params,
                                 /*structured=*/true);
    }
    if (plan.subcommand == "colour strong-product") {
        PurpleColouring base = cli_detail::load_colouring_file(plan.input_path);
        PurpleColouring c = strong_product_colouring(base, *plan.ell);
        Json params{{"input", plan.input_path}, {"ell", *plan.ell}};
        return deliver_colouring("strong-product", c, plan.report_t, params,
                                 /*structured=*/true);
    }
    if (plan.subcommand == "colour sprinkle") {
        PurpleColouring core4 = cli_detail::load_colouring_file(plan.core4_path);
        PurpleColouring core3 = cli_detail::load_colouring_file(plan.core3_path);
        int n_total = core4.n + (*plan.ell - 2) * core3.n;
        double p = plan.p ? *plan.p : 1.0 / std::sqrt(static_cast<double>(std::max(1, n_total)));
        SprinkleReport rep = sprinkled_even_colouring(core4, core3, *plan.ell, p, *plan.seed);
        Json params{{"ell", *plan.ell}, {"p", p}, {"seed", *plan.seed}};
        Json cross = Json::array();
        for (int i = 0; i < rep.parts; ++i)
            for (int j = i + 1; j < rep.parts; ++j) {
                long long cnt = rep.cross_red_counts[static_cast<std::size_t>(i) * rep.parts + j];
                cross.push_back({{"parts", {i, j}},
                                 {"red", cnt},
                                 {"density", static_cast<double>(cnt) /
                                                 (static_cast<double>(rep.part_size[i]) *
                                                  rep.part_size[j])}});
            }
        if (!plan.out_path.empty())
            write_text_file(plan.out_path, encode_colouring(rep.colouring));
        Json j = cli_detail::colouring_report("sprinkle", rep.colouring, plan.report_t, params,
                                              exact_stats_for(false));
        j["cross_red"] = cross;
        if (plan.json_out || plan.out_path.empty()) emit(j, "", out);
        return 0;
    }
    if (plan.subcommand == "colour subsample") {
        Graph base = load_graph_spec(plan.base_spec);
        double p = plan.p ? *plan.p : kDefaultSubsampleP;
        PurpleColouring c = subsample_colouring(base, p, *plan.seed);
        Json params{{"base", plan.base_spec}, {"p", p}, {"seed", *plan.seed}};
        return deliver_colouring("subsample", c, plan.report_t, params, /*structured=*/false);
    }
    if (plan.subcommand == "colour tfp") {
        TfpRun run = triangle_free_process(*plan.n, *plan.seed,
                                           plan.max_steps ? std::optional<long long>(*plan.max_steps)
                                                          : std::nullopt);
        if (!plan.out_path.empty()) {
            std::ostringstream os;
            os << "graph " << *plan.n << "\n";
            for (const Edge& e : run.order) os << e.u << " " << e.v << "\n";
            write_text_file(plan.out_path, os.str());
        }
        Json j;
        j["construction"] = "tfp";
        j["n"] = *plan.n;
        j["seed"] = *plan.seed;
        j["steps"] = run.order.size();
        j["maximal"] = run.maximal;
        j["edges"] = run.final_graph.edge_count();
        if (plan.json_out || plan.out_path.empty()) emit(j, "", out);
        return 0;
    }
    if (plan.subcommand == "colour tfp-two-phase") {
        TwoPhaseResult r = tfp_two_phase_colouring(*plan.n, *plan.eps, *plan.eps2, *plan.seed);
        Json params{{"n", *plan.n},   {"eps", *plan.eps},  {"eps1", r.eps1},
                    {"eps2", r.eps2}, {"m1", r.m1},        {"m2", r.m2},
                    {"seed", *plan.seed}};
        if (!plan.out_path.empty())
            write_text_file(plan.out_path, encode_colouring(r.colouring));
        Json j = cli_detail::colouring_report("tfp-two-phase", r.colouring, std::nullopt,
                                              params, exact_stats_for(false));
        // the asymptotic alpha target is reported, never asserted
        j["alpha_target"] = (std::sqrt(2.0) + *plan.eps) *
                            std::sqrt(static_cast<double>(*plan.n) * std::log2(*plan.n));
        if (plan.json_out || plan.out_path.empty()) emit(j, "", out);
        return 0;
    }

    // verify
    if (plan.subcommand == "verify") {
        PurpleColouring c = cli_detail::load_colouring_file(plan.input_path);
        StFreeVerdict v = is_st_free(c, *plan.s, *plan.t);
        ColouringStats st = stats(c, plan.t);
        Json j;
        j["file"] = plan.input_path;
        j["n"] = c.n;
        j["s"] = *plan.s;
        j["t"] = *plan.t;
        j["free"] = v.free;
        if (!v.free) {
            j["violated_side"] = std::string(1, v.violated_side);
            j["witness"] = v.witness;
        }
        j["stats"] = cli_detail::stats_json(st);
        if (plan.json_out)
            emit(j, "", out);
        else
            out << (v.free ? "FREE" : "NOT FREE") << " |P|=" << st.purple_count
                << " omega_rp=" << st.omega_rp << " omega_bp=" << st.omega_bp << "\n";
        return v.free ? 0 : 2;
    }

    // gm / g
    if (plan.subcommand == "gm" || plan.subcommand == "g") {
        Catalog cat;
        if (plan.enumerate)
            cat = enumerate_ramsey_graphs(*plan.n, *plan.s, *plan.t, /*dedup=*/true);
        else
            cat = load_graph6_catalog(plan.catalog_path, *plan.n, *plan.s, *plan.t,
                                      plan.validate, plan.complete);
        Deadline deadline;
        if (plan.deadline_ms)
            deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*plan.deadline_ms);
        SearchOutcome o = plan.subcommand == "gm" ? gm_over_catalog(cat, plan.threads, deadline)
                                                  : g_over_catalog(cat, plan.threads, deadline);
        Json j;
        j["n"] = *plan.n;
        j["s"] = *plan.s;
        j["t"] = *plan.t;
        j["kind"] = plan.subcommand == "gm" ? "matching" : "general";
        j["value"] = o.value;
        j["witness_graph6"] = graph6_encode(o.witness_graph);
        Json purple_edges = Json::array();
        for (const Edge& e : o.witness_purple) purple_edges.push_back({e.u, e.v});
        j["witness_purple_edges"] = purple_edges;
        j["catalog_checksum"] = cat.checksum;
        j["catalog_count"] = cat.graphs.size();
        j["complete"] = cat.complete;
        if (!cat.complete)
            j["caveat"] = "lower bound unless catalog complete";
        j["exhausted"] = o.exhausted;
        if (plan.timing)
            j["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
        if (!plan.cert_path.empty())
            write_text_file(plan.cert_path,
                            encode_colouring(cli_detail::colouring_from_outcome(o)));
        if (plan.json_out || !plan.out_path.empty())
            emit(j, plan.out_path, out);
        else
            out << (plan.subcommand == "gm" ? "g_M(" : "g(") << *plan.n << ";" << *plan.s << ","
                << *plan.t << ") = " << o.value << (o.exhausted ? "" : " (lower bound)")
                << "  witness " << graph6_encode(o.witness_graph) << "\n";
        return o.exhausted ? 0 : 3;
    }

    // table
    if (plan.subcommand == "table") {
        std::ifstream rows(plan.input_path);
        if (!rows) throw Error("cannot open row file: " + plan.input_path);
        std::ostringstream csv;
        csv << "s,t,n,g_M,g,provenance\n";
        std::string line;
        while (std::getline(rows, line)) {
            std::istringstream ls(line);
            int s_ = 0, t_ = 0, n_ = 0;
            std::string source, completeness;
            if (!(ls >> s_ >> t_ >> n_ >> source)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw Error("table: bad row '" + line + "'");
            }
            ls >> completeness;
            Catalog cat;
            std::string provenance;
            if (source == "enumerate") {
                cat = enumerate_ramsey_graphs(n_, s_, t_, true);
                provenance = "enumerated";
            } else {
                bool complete = completeness == "complete";
                cat = load_graph6_catalog(source, n_, s_, t_, true, complete);
                provenance = complete ? "ingested-complete" : "ingested-partial";
            }
            SearchOutcome m = gm_over_catalog(cat, plan.threads);
            SearchOutcome gv = g_over_catalog(cat, plan.threads);
            csv << s_ << "," << t_ << "," << n_ << "," << m.value << "," << gv.value << ","
                << provenance << "\n";
        }
        if (plan.out_path.empty() || plan.out_path == "-")
            out << csv.str();
        else
            write_text_file(plan.out_path, csv.str());
        return 0;
    }

    // enum
    if (plan.subcommand == "enum") {
        Catalog cat = enumerate_ramsey_graphs(*plan.n, *plan.s, *plan.t, plan.dedup);
        if (!plan.out_path.empty() && plan.out_path != "-") {
            save_graph6_file(plan.out_path, cat.graphs);
        } else {
            for (const Graph& g : cat.graphs) out << graph6_encode(g) << "\n";
        }
        if (plan.json_out) emit(cli_detail::manifest_json(cat), "", out);
        return 0;
    }

    // catalog
    if (plan.subcommand == "catalog validate" || plan.subcommand == "catalog manifest") {
        const bool validate = plan.subcommand == "catalog validate";
        Catalog cat = load_graph6_catalog(plan.catalog_path, *plan.n, *plan.s, *plan.t, validate,
                                          plan.complete);
        emit(cli_detail::manifest_json(cat), plan.out_path, out);
        if (cat.graphs.empty()) err << "warning: empty catalog\n";
        return 0;
    }

    // oracle
    if (plan.subcommand == "oracle") {
        int value = brute_force_g(*plan.n, *plan.s, *plan.t, plan.kind);
        if (plan.json_out) {
            Json j{{"n", *plan.n},
                   {"s", *plan.s},
                   {"t", *plan.t},
                   {"kind", plan.kind == PurpleKind::matching ? "matching" : "general"},
                   {"value", value}};
            emit(j, "", out);
        } else {
            out << value << "\n";
        }
        return 0;
    }

    throw UsageError("unhandled subcommand: " + plan.subcommand);
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        CommandPlan plan = parse_args(args);
        return execute(plan, out, err);
    } catch (const UsageError& e) {
        std::string what = e.what();
        if (what.rfind("help\n", 0) == 0) {
            out << what.substr(5);
            return 0;
        }
        err << "usage error: " << what << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace purple
