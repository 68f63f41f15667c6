#include "strongk/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongk/constructors.hpp"
#include "strongk/digraph.hpp"
#include "strongk/exact_solver.hpp"
#include "strongk/explorer.hpp"
#include "strongk/gadgets.hpp"
#include "strongk/parallel.hpp"
#include "strongk/poly_deciders.hpp"
#include "strongk/text_format.hpp"

namespace strongk {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    int candidate_cap = 50000;
    int oracle_threshold = 14;
    uint64_t seed = 42;

    SolverConfig solver() const {
        return SolverConfig{candidate_cap, oracle_threshold};
    }
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output files/report here");
    cmd->add_option("--candidate-cap", opts.candidate_cap,
                    "Exact solver candidate cap")
        ->capture_default_str();
    cmd->add_option("--oracle-threshold", opts.oracle_threshold,
                    "Brute-force oracle arc threshold")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Random seed")
        ->capture_default_str();
}

void emit(const CommonOpts& opts, std::ostream& out, const std::string& text,
          const ordered_json& doc) {
    std::string payload = opts.json() ? doc.dump(2) + "\n" : text;
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw ParseError(opts.out_path + ": cannot open for writing");
        f << payload;
    } else {
        out << payload;
    }
}

ordered_json packing_json(int n, const Packing& p) {
    return ordered_json::parse(packing_to_json(n, p));
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_compute(const std::string& input, int k, const std::string& s_list,
                const CommonOpts& opts, std::ostream& out) {
    Digraph d = read_digraph_file(input);
    LambdaResult r;
    std::string label;
    if (!s_list.empty()) {
        VertexSet s(parse_vertex_list(s_list));
        r = lambda_S_exact(d, s, opts.solver());
        label = "lambda_S";
    } else {
        r = lambda_k_exact(d, k, opts.solver());
        label = "lambda_" + std::to_string(k);
    }
    std::ostringstream text;
    text << label << " = " << r.value << "\n";
    text << "witness_S = " << join_ints(r.witness_S.members) << "\n";
    text << "certificate = " << packing_to_json(d.order(), r.certificate)
         << "\n";
    ordered_json doc;
    doc["command"] = "compute";
    doc["input"] = input;
    if (s_list.empty()) doc["k"] = k;
    doc["lambda"] = r.value;
    doc["witness_S"] = r.witness_S.members;
    doc["certificate"] = packing_json(d.order(), r.certificate);
    emit(opts, out, text.str(), doc);
    return 0;
}

int cmd_decide(const std::string& input, int k, const std::string& s_list,
               int ell, const CommonOpts& opts, std::ostream& out) {
    Digraph d = read_digraph_file(input);
    bool yes = false;
    std::string route;
    std::optional<Packing> cert;
    std::optional<VertexSet> failing;
    if (!s_list.empty()) {
        route = "exact search";
        VertexSet s(parse_vertex_list(s_list));
        auto [ok, c] = decide_lambda_S(d, s, ell, opts.solver());
        yes = ok;
        cert = c;
        if (!ok) failing = s;
    } else if (ell == 2 && is_semicomplete(d)) {
        route = "semicomplete characterization";
        yes = decide2_semicomplete(d, k);
    } else if (ell == 2 && is_symmetric(d) && is_strong(d)) {
        route = "symmetric bridge characterization";
        auto [ok, c] = decide2_symmetric(d, k);
        yes = ok;
        cert = c;
    } else {
        route = "exact search";
        yes = true;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        // lambda_k >= ell iff every k-set packs ell parts; stop at the
        // first failure.
        for (;;) {
            VertexSet s(idx);
            auto [ok, c] = decide_lambda_S(d, s, ell, opts.solver());
            if (!ok) {
                yes = false;
                failing = s;
                break;
            }
            if (!cert) cert = c;
            int i = k - 1;
            while (i >= 0 && idx[i] == d.order() - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::ostringstream text;
    text << (yes ? "YES" : "NO") << "\n";
    text << "route = " << route << "\n";
    if (yes && cert)
        text << "certificate = " << packing_to_json(d.order(), *cert) << "\n";
    if (!yes && failing)
        text << "failing_S = " << join_ints(failing->members) << "\n";
    ordered_json doc;
    doc["command"] = "decide";
    doc["input"] = input;
    doc["ell"] = ell;
    if (s_list.empty()) doc["k"] = k;
    doc["answer"] = yes;
    doc["route"] = route;
    if (yes && cert) doc["certificate"] = packing_json(d.order(), *cert);
    if (!yes && failing) doc["failing_S"] = failing->members;
    emit(opts, out, text.str(), doc);
    return 0;
}

void write_files_or_stream(const CommonOpts& opts, std::ostream& out,
                           const Digraph& d, const Packing* packing,
                           const std::string& extra_name,
                           const std::string& extra_payload,
                           ordered_json& doc) {
    if (!opts.out_path.empty()) {
        write_digraph_file(d, opts.out_path + ".dg");
        if (packing) {
            std::ofstream f(opts.out_path + ".cert.json", std::ios::binary);
            f << packing_to_json(d.order(), *packing) << "\n";
        }
        if (!extra_name.empty()) {
            std::ofstream f(opts.out_path + extra_name, std::ios::binary);
            f << extra_payload;
        }
        out << "wrote " << opts.out_path << ".dg\n";
        if (opts.json()) out << doc.dump(2) << "\n";
        return;
    }
    if (opts.json()) {
        doc["digraph"] = write_digraph(d);
        out << doc.dump(2) << "\n";
    } else {
        out << write_digraph(d);
        if (packing)
            out << "certificate = " << packing_to_json(d.order(), *packing)
                << "\n";
        if (!extra_name.empty()) out << extra_payload;
    }
}

int cmd_construct_complete(int n, const std::string& s_list,
                           const CommonOpts& opts, std::ostream& out) {
    VertexSet s(parse_vertex_list(s_list));
    Packing p = complete_packing(n, s);
    Digraph host = standard_family(Family::complete_bidirected, n);
    ordered_json doc;
    doc["command"] = "construct complete";
    doc["n"] = n;
    doc["parts"] = p.parts.size();
    doc["certificate"] = packing_json(n, p);
    write_files_or_stream(opts, out, host, &p, "", "", doc);
    return 0;
}

int cmd_construct_minimal(int n, const std::string& cover_text,
                          const CommonOpts& opts, std::ostream& out) {
    CycleCover cover = parse_cycle_cover(cover_text);
    Digraph d = minimal_graph(n, cover);
    bool recognized = recognize_minimal_2_nminus2(d);
    if (!recognized)
        throw std::logic_error("constructed minimal graph failed its own "
                               "recognizer");
    ordered_json doc;
    doc["command"] = "construct minimal";
    doc["n"] = n;
    doc["cover"] = format_cycle_cover(cover);
    doc["recognized"] = recognized;
    std::string extra = "recognized = true\n";
    write_files_or_stream(opts, out, d, nullptr, ".recognized", extra, doc);
    if (opts.out_path.empty() && !opts.json()) out << extra;
    return 0;
}

int cmd_construct_product(const std::string& left, const std::string& right,
                          const std::string& s_list, const CommonOpts& opts,
                          std::ostream& out) {
    Digraph g = read_digraph_file(left);
    Digraph h = read_digraph_file(right);
    VertexSet s(parse_vertex_list(s_list));
    Packing p = product_packing(g, h, s, opts.solver());
    Digraph prod = cartesian_product(g, h);
    ordered_json doc;
    doc["command"] = "construct product";
    doc["parts"] = p.parts.size();
    doc["certificate"] = packing_json(prod.order(), p);
    write_files_or_stream(opts, out, prod, &p, "", "", doc);
    return 0;
}

int cmd_gadget(const std::string& input, const std::string& terminals, int k,
               int ell, const CommonOpts& opts, std::ostream& out) {
    Digraph d = read_digraph_file(input);
    std::vector<int> ts = parse_vertex_list(terminals);
    if (ts.size() != 4)
        throw ParamError("--terminals needs s1,t1,s2,t2");
    if (ell < 2) throw ParamError("--ell must be >= 2");
    if (k < 2) throw ParamError("--k must be >= 2");
    GadgetInstance inst = build_dprime(d, ts[0], ts[1], ts[2], ts[3]);
    inst = split_vertices(inst);
    inst = add_xy_cycles(inst, ell);
    inst = extend_terminals(inst, k, ell);
    std::ostringstream side;
    side << "x: " << inst.x << "\n";
    side << "y: " << inst.y << "\n";
    for (size_t i = 0; i < inst.satellites.size(); ++i)
        side << "x" << (i + 1) << ": " << inst.satellites[i] << "\n";
    side << "s1-: " << inst.s1 << "\n";
    side << "t1+: " << inst.t1 << "\n";
    side << "s2-: " << inst.s2 << "\n";
    side << "t2+: " << inst.t2 << "\n";
    ordered_json doc;
    doc["command"] = "gadget";
    doc["k"] = k;
    doc["ell"] = ell;
    doc["S"] = inst.S.members;
    doc["terminal_map"] = ordered_json{{"x", inst.x},
                                       {"y", inst.y},
                                       {"s1-", inst.s1},
                                       {"t1+", inst.t1},
                                       {"s2-", inst.s2},
                                       {"t2+", inst.t2}};
    write_files_or_stream(opts, out, inst.digraph, nullptr, ".terminals",
                          side.str(), doc);
    if (opts.out_path.empty() && !opts.json()) out << side.str();
    return 0;
}

int cmd_explore(int n, const std::string& k_list, const std::string& mode_name,
                int samples, bool exhaustive, const CommonOpts& opts,
                std::ostream& out) {
    std::vector<int> ks = parse_vertex_list(k_list);
    EnumMode mode = enum_mode_from_name(mode_name);
    std::vector<std::pair<Digraph, uint64_t>> stream;
    enumerate_digraphs(
        n, mode,
        [&](const Digraph& d, uint64_t id) { stream.push_back({d, id}); },
        samples, opts.seed, exhaustive);
    // Embarrassingly parallel; reports are merged in enumeration order, so
    // the output is identical for any STRONGK_THREADS setting.
    std::vector<std::string> lines(stream.size());
    std::vector<char> failed(stream.size(), 0);
    SolverConfig cfg = opts.solver();
    parallel_for(stream.size(), [&](size_t i) {
        SuiteReport r = verify_theorems(stream[i].first, ks, cfg);
        r.id = std::to_string(stream[i].second);
        lines[i] = format_suite_report(r);
        failed[i] = r.all_pass() ? 0 : 1;
    });
    std::string buffer;
    bool any_fail = false;
    for (size_t i = 0; i < stream.size(); ++i) {
        buffer += lines[i];
        any_fail = any_fail || failed[i];
    }
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        f << buffer;
    } else {
        out << buffer;
    }
    return any_fail ? 1 : 0;
}

int cmd_bounds(const std::string& input, int k, const CommonOpts& opts,
               std::ostream& out) {
    Digraph d = read_digraph_file(input);
    BoundsReport r = bounds(d, k);
    std::ostringstream text;
    text << "lower = " << r.lower << " (" << r.lower_rule << ")\n";
    text << "upper = " << r.upper << " (" << r.upper_rule << ")\n";
    ordered_json doc;
    doc["command"] = "bounds";
    doc["k"] = k;
    doc["lower"] = r.lower;
    doc["lower_rule"] = r.lower_rule;
    doc["upper"] = r.upper;
    doc["upper_rule"] = r.upper_rule;
    emit(opts, out, text.str(), doc);
    return 0;
}

int cmd_ng(const std::string& input, int k, const CommonOpts& opts,
           std::ostream& out) {
    Digraph d = read_digraph_file(input);
    NGReport r = nordhaus_gaddum(d, k, opts.solver());
    std::ostringstream text;
    text << "lambda_" << k << "(D) = " << r.lambda_D << "\n";
    text << "lambda_" << k << "(Dc) = " << r.lambda_Dc << "\n";
    text << "sum = " << r.sum << "\n";
    text << "product = " << r.product << "\n";
    ordered_json doc;
    doc["command"] = "ng";
    doc["k"] = k;
    doc["lambda_D"] = r.lambda_D;
    doc["lambda_Dc"] = r.lambda_Dc;
    doc["sum"] = r.sum;
    doc["product"] = r.product;
    emit(opts, out, text.str(), doc);
    return 0;
}

int cmd_dot(const std::string& input, const CommonOpts& opts,
            std::ostream& out) {
    Digraph d = read_digraph_file(input);
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        f << to_dot(d);
    } else {
        out << to_dot(d);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"strong subgraph k-arc-connectivity toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string input, s_list, terminals, cover_text, left, right;
    std::string k_list = "2";
    std::string mode_name = "all";
    int k = 2, ell = 2, n = 0, samples = 1000;

    auto* compute = app.add_subcommand("compute", "Exact lambda_k or lambda_S");
    compute->add_option("--input", input)->required();
    auto* ck = compute->add_option("--k", k, "Terminal set size");
    compute->add_option("--S", s_list, "Explicit terminal set")->excludes(ck);
    add_common(compute, opts);

    auto* decide = app.add_subcommand(
        "decide", "Decide lambda_k >= ell (polynomial route when available)");
    decide->add_option("--input", input)->required();
    decide->add_option("--ell", ell)->required();
    auto* dk = decide->add_option("--k", k);
    decide->add_option("--S", s_list)->excludes(dk);
    add_common(decide, opts);

    auto* construct = app.add_subcommand("construct", "Certified packings");
    construct->require_subcommand(1);
    auto* ccomplete = construct->add_subcommand(
        "complete", "Packing in a complete bidirected digraph");
    ccomplete->add_option("--n", n)->required();
    ccomplete->add_option("--S", s_list)->required();
    add_common(ccomplete, opts);
    auto* cminimal = construct->add_subcommand(
        "minimal", "Complete digraph minus a cycle cover");
    cminimal->add_option("--n", n)->required();
    cminimal->add_option("--cover", cover_text)->required();
    add_common(cminimal, opts);
    auto* cproduct = construct->add_subcommand(
        "product", "Packing in a cartesian product");
    cproduct->add_option("--left", left)->required();
    cproduct->add_option("--right", right)->required();
    cproduct->add_option("--S", s_list)->required();
    add_common(cproduct, opts);

    auto* gadget = app.add_subcommand("gadget", "Hardness reduction instance");
    gadget->add_option("--input", input)->required();
    gadget->add_option("--terminals", terminals)->required();
    gadget->add_option("--k", k);
    gadget->add_option("--ell", ell);
    add_common(gadget, opts);

    bool exhaustive = false;
    auto* explore = app.add_subcommand("explore", "Theorem suite over small "
                                                  "digraphs");
    explore->add_option("--n", n)->required();
    explore->add_option("--k", k_list, "Comma list of k values");
    explore->add_option("--mode", mode_name)
        ->check(CLI::IsMember({"all", "semicomplete", "symmetric", "random"}));
    explore->add_option("--samples", samples);
    explore->add_flag("--exhaustive", exhaustive,
                      "Allow the full 2^20 order-5 sweep in all mode");
    add_common(explore, opts);

    auto* boundsc = app.add_subcommand("bounds", "Lower/upper bounds");
    boundsc->add_option("--input", input)->required();
    boundsc->add_option("--k", k)->required();
    add_common(boundsc, opts);

    auto* ngc = app.add_subcommand("ng", "Complementary-pair report");
    ngc->add_option("--input", input)->required();
    ngc->add_option("--k", k)->required();
    add_common(ngc, opts);

    auto* dot = app.add_subcommand("dot", "DOT export");
    dot->add_option("--input", input)->required();
    add_common(dot, opts);

    std::vector<const char*> argv;
    argv.push_back("strongk");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            if (s_list.empty() && ck->count() == 0)
                throw ParseError("compute needs --k or --S");
            return cmd_compute(input, k, s_list, opts, out);
        }
        if (decide->parsed()) return cmd_decide(input, k, s_list, ell, opts, out);
        if (ccomplete->parsed())
            return cmd_construct_complete(n, s_list, opts, out);
        if (cminimal->parsed())
            return cmd_construct_minimal(n, cover_text, opts, out);
        if (cproduct->parsed())
            return cmd_construct_product(left, right, s_list, opts, out);
        if (gadget->parsed())
            return cmd_gadget(input, terminals, k, ell, opts, out);
        if (explore->parsed())
            return cmd_explore(n, k_list, mode_name, samples, exhaustive,
                               opts, out);
        if (boundsc->parsed()) return cmd_bounds(input, k, opts, out);
        if (ngc->parsed()) return cmd_ng(input, k, opts, out);
        if (dot->parsed()) return cmd_dot(input, opts, out);
        err << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParamError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace strongk
