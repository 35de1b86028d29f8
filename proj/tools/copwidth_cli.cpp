// Command-line front end: generators, exact solving, strategy verification,
// certificates, constructions, strategy transformers and NAF utilities.
// Exit codes: 0 success (verify: win), 1 verify: lose, 2 malformed input or
// invalid strategy, 3 resource cap exceeded, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "copwidth/copwidth.hpp"

using namespace copwidth;
using nlohmann::json;

namespace {

struct Common {
    bool json_out = false;
    uint64_t seed = 0;
    int threads = 1;
    uint64_t cap = uint64_t(1) << 27;
    bool prune = false;
};

SolveOptions solve_options(const Common& c) {
    SolveOptions o;
    o.max_states = c.cap;
    o.threads = c.threads;
    o.dominance_pruning = c.prune;
    return o;
}

void emit(const Common& c, const json& j, const std::string& plain) {
    if (c.json_out)
        std::cout << j.dump() << "\n";
    else
        std::cout << plain << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

GameKind parse_game(const std::string& s) { return game_kind_from_string(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blind cops-and-robber games: exact solving, verification, certificates and constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json_out, "machine-readable JSON output");
    app.add_option("--seed", common.seed, "seed for randomized generators");
    app.add_option("--threads", common.threads, "solver frontier parallelism (output is identical for all values)");
    app.add_option("--cap", common.cap, "solver state cap");
    app.add_flag("--prune", common.prune, "enable dominance pruning in the solver");

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    std::string gen_family, gen_out, gen_dot;
    std::vector<long long> gen_params;
    gen->add_option("family", gen_family,
                    "complete|complete_bipartite|path|cycle|grid|half_grid|cbt|path_power|"
                    "random_maximal_outerplanar|random_graph")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--out", gen_out, "output graph file (stdout when omitted)");
    gen->add_option("--dot", gen_dot, "also write a DOT rendering");

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "compute the exact game value (or decide a fixed budget)");
    std::string solve_game = "bcw", solve_radius = "1", solve_graph, solve_witness;
    int solve_k = -1;
    solve->add_option("--game", solve_game, "bcw|search|hunt|zerovis")->required();
    solve->add_option("--radius", solve_radius, "robber speed (int or 'inf'; bcw only)");
    solve->add_option("--k", solve_k, "decide this budget instead of computing the minimum");
    solve->add_option("--witness", solve_witness, "write the witness strategy here");
    solve->add_option("graph", solve_graph, "graph file")->required();

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "verify a strategy file against a graph");
    std::string ver_strategy, ver_graph;
    ver->add_option("--strategy", ver_strategy, "strategy file")->required();
    ver->add_option("graph", ver_graph, "graph file")->required();

    // --- certify ---
    auto* certify = app.add_subcommand("certify", "lower-bound certificates");
    certify->require_subcommand(1);
    auto* cert_exp = certify->add_subcommand("expansion", "every a-subset has at least k outside neighbors");
    int exp_a = 0, exp_k = 0;
    std::string exp_graph, exp_out;
    cert_exp->add_option("--a", exp_a)->required();
    cert_exp->add_option("--k", exp_k)->required();
    cert_exp->add_option("graph", exp_graph)->required();
    cert_exp->add_option("-o,--out", exp_out, "write the certificate record here");
    auto* cert_bc = certify->add_subcommand("balanced-clique", "bound from a balanced complete-minor model");
    std::string bc_model, bc_pattern, bc_graph, bc_out;
    cert_bc->add_option("--model", bc_model)->required();
    cert_bc->add_option("--pattern", bc_pattern)->required();
    cert_bc->add_option("graph", bc_graph)->required();
    cert_bc->add_option("-o,--out", bc_out);
    auto* cert_bt = certify->add_subcommand("balanced-bintree", "bound from a balanced binary-tree model");
    std::string bt_model, bt_pattern, bt_graph, bt_out;
    cert_bt->add_option("--model", bt_model)->required();
    cert_bt->add_option("--pattern", bt_pattern)->required();
    cert_bt->add_option("graph", bt_graph)->required();
    cert_bt->add_option("-o,--out", bt_out);

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "strategy syntheses");
    construct->require_subcommand(1);
    auto* con_ts = construct->add_subcommand("treesub", "subdivision + (width+3)-cop strategy from a decomposition");
    std::string ts_td, ts_graph, ts_dir;
    con_ts->add_option("--td", ts_td, "tree decomposition file")->required();
    con_ts->add_option("graph", ts_graph)->required();
    con_ts->add_option("-o,--out", ts_dir, "output directory")->required();
    auto* con_bt = construct->add_subcommand("bintree", "subdivided complete binary tree cleanable by 3 cops");
    int bt_height = 0;
    std::string bt_dir;
    con_bt->add_option("--height", bt_height)->required();
    con_bt->add_option("-o,--out", bt_dir)->required();
    auto* con_k2t = construct->add_subcommand("k2t", "subdivided K_{2t} with the (t+3)-cop schedule");
    int k2t_t = 2;
    std::string k2t_dir;
    con_k2t->add_option("--t", k2t_t)->required();
    con_k2t->add_option("-o,--out", k2t_dir)->required();

    // --- transform ---
    auto* transform = app.add_subcommand("transform", "strategy transformers (outputs are re-verified)");
    std::string tr_name, tr_strategy, tr_flip, tr_graph, tr_out;
    transform
        ->add_option("name", tr_name, "double-speed|hunter-to-cop|zerovis-to-cop|cop-to-zerovis|cop-to-flip|flip-to-cop")
        ->required();
    transform->add_option("--strategy", tr_strategy, "cop strategy file");
    transform->add_option("--flip-strategy", tr_flip, "flip strategy file (flip-to-cop)");
    transform->add_option("graph", tr_graph)->required();
    transform->add_option("-o,--out", tr_out, "output strategy file (stdout when omitted)");

    // --- minor ---
    auto* minor = app.add_subcommand("minor", "minor models: verification and constructions");
    minor->require_subcommand(1);
    auto* mi_ver = minor->add_subcommand("verify", "check a model file");
    std::string mv_model, mv_pattern, mv_host;
    mi_ver->add_option("--model", mv_model)->required();
    mi_ver->add_option("--pattern", mv_pattern)->required();
    mi_ver->add_option("host", mv_host)->required();
    auto* mi_bal = minor->add_subcommand("balance-clique", "balanced K_n model from a K_{2n-1} model");
    std::string mb_model, mb_pattern, mb_host, mb_out;
    mi_bal->add_option("--model", mb_model)->required();
    mi_bal->add_option("--pattern", mb_pattern)->required();
    mi_bal->add_option("host", mb_host)->required();
    mi_bal->add_option("-o,--out", mb_out);
    auto* mi_emb = minor->add_subcommand("embed-outerplanar", "model of an outerplanar graph in the n x n grid");
    std::string me_pattern, me_out, me_host_out;
    mi_emb->add_option("pattern", me_pattern)->required();
    mi_emb->add_option("-o,--out", me_out);
    mi_emb->add_option("--host-out", me_host_out, "write the grid host graph here");
    auto* mi_bop = minor->add_subcommand("balance-outerplanar", "balanced model in the (n^2 x 4n) grid");
    std::string mo_pattern, mo_host, mo_model, mo_out, mo_host_out;
    mi_bop->add_option("pattern", mo_pattern)->required();
    mi_bop->add_option("--host", mo_host, "host graph (defaults to the grid itself)");
    mi_bop->add_option("--model", mo_model, "grid model in the host (defaults to the identity)");
    mi_bop->add_option("-o,--out", mo_out);
    mi_bop->add_option("--host-out", mo_host_out);

    // --- naf ---
    auto* nafcmd = app.add_subcommand("naf", "non-adjacent form utilities");
    long long naf_value = 0;
    long long naf_g = -1, naf_lemma = -1;
    nafcmd->add_option("value", naf_value, "integer to recode");
    nafcmd->add_option("--g", naf_g, "print the threshold g(k)");
    nafcmd->add_option("--lemma-check", naf_lemma, "run the interval-avoidance check for k");

    // --- oracle ---
    auto* oracle = app.add_subcommand("oracle", "pathwidth / treewidth oracles");
    oracle->require_subcommand(1);
    auto* or_pw = oracle->add_subcommand("pathwidth", "exact pathwidth");
    std::string pw_graph;
    or_pw->add_option("graph", pw_graph)->required();
    auto* or_tw = oracle->add_subcommand("treewidth", "exact treewidth (optionally with a decomposition)");
    std::string tw_graph, tw_td_out;
    or_tw->add_option("graph", tw_graph)->required();
    or_tw->add_option("--td-out", tw_td_out, "write an optimal decomposition here");

    // --- dot ---
    auto* dot = app.add_subcommand("dot", "DOT export of a graph (optionally colored by a model)");
    std::string dot_graph, dot_model, dot_out;
    dot->add_option("graph", dot_graph)->required();
    dot->add_option("--model", dot_model, "color vertices by branch set");
    dot->add_option("-o,--out", dot_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = generate(gen_family, gen_params, common.seed);
            if (gen_out.empty())
                write_graph(std::cout, g);
            else
                save_graph(gen_out, g);
            if (!gen_dot.empty()) write_text_file(gen_dot, to_dot(g));
        } else if (*solve) {
            Graph g = load_graph(solve_graph);
            GameKind kind = parse_game(solve_game);
            int radius = radius_from_string(solve_radius);
            if (solve_k >= 0) {
                auto r = decide(g, kind, radius, solve_k, solve_options(common));
                if (r.winning && !solve_witness.empty()) save_strategy(solve_witness, r.witness);
                emit(common, {{"winning", r.winning}, {"k", solve_k}, {"states", r.states_explored}},
                     r.winning ? "winning" : "not winning");
            } else {
                auto r = compute(g, kind, radius, solve_options(common));
                json j{{"value", r.value}};
                std::string plain = std::to_string(r.value);
                if (!solve_witness.empty()) {
                    save_strategy(solve_witness, r.witness);
                    j["witness"] = solve_witness;
                    plain += "\nwitness: " + solve_witness;
                }
                emit(common, j, plain);
            }
        } else if (*ver) {
            Graph g = load_graph(ver_graph);
            CopStrategy s = load_strategy(ver_strategy);
            auto r = verify(g, s);
            std::string status = r.status == VerifyStatus::Win    ? "win"
                                 : r.status == VerifyStatus::Lose ? "lose"
                                                                  : "invalid";
            json j{{"status", status}};
            if (r.status == VerifyStatus::Lose) j["residual"] = r.residual.to_vector();
            if (!r.reason.empty()) j["reason"] = r.reason;
            emit(common, j, status + (r.reason.empty() ? "" : ": " + r.reason));
            return r.status == VerifyStatus::Win ? 0 : r.status == VerifyStatus::Lose ? 1 : 2;
        } else if (*cert_exp) {
            Graph g = load_graph(exp_graph);
            auto cert = expansion_certificate(g, exp_a, exp_k);
            std::string record = cert.certified
                                     ? certificate_record(exp_k, "expansion", exp_a)
                                     : "no certificate: violating set " +
                                           VertexSet::from(g.n(), cert.violating_set).to_string();
            if (!exp_out.empty() && cert.certified) write_text_file(exp_out, record + "\n");
            emit(common, {{"certified", cert.certified}, {"record", record}, {"violating", cert.violating_set}},
                 record);
            return cert.certified ? 0 : 1;
        } else if (*cert_bc) {
            Graph host = load_graph(bc_graph), pattern = load_graph(bc_pattern);
            MinorModel m = load_model(bc_model);
            int bound = lb_balanced_clique(pattern, host, m);
            std::string record = certificate_record(bound - 1, "balanced-clique");
            if (!bc_out.empty()) write_text_file(bc_out, record + "\n");
            emit(common, {{"bound", bound}, {"record", record}}, record);
        } else if (*cert_bt) {
            Graph host = load_graph(bt_graph), pattern = load_graph(bt_pattern);
            MinorModel m = load_model(bt_model);
            int bound = lb_balanced_bintree(pattern, host, m);
            std::string record = certificate_record(bound - 1, "balanced-bintree");
            if (!bt_out.empty()) write_text_file(bt_out, record + "\n");
            emit(common, {{"bound", bound}, {"record", record}}, record);
        } else if (*con_ts) {
            Graph g = load_graph(ts_graph);
            TreeDecomposition td = load_tree_decomposition(ts_td);
            auto nice = make_nice(g, td);
            long long size_cap = app.count("--cap") ? (long long)common.cap : kDefaultTreesubCap;
            auto res = treesub_strategy(g, nice, size_cap);
            std::filesystem::create_directories(ts_dir);
            save_graph(ts_dir + "/subdivision.graph", res.subdivision);
            save_strategy(ts_dir + "/strategy.strat", res.strategy);
            std::ofstream map_out(ts_dir + "/subdivision.map");
            for (int e = 0; e < g.m(); ++e) {
                map_out << g.edges()[e].first << " " << g.edges()[e].second << ":";
                for (int v : res.map.paths[e]) map_out << " " << v;
                map_out << "\n";
            }
            emit(common,
                 {{"vertices", res.subdivision.n()},
                  {"rounds", res.strategy.length()},
                  {"budget", res.strategy.max_round_size()},
                  {"dir", ts_dir}},
                 "subdivision with " + std::to_string(res.subdivision.n()) + " vertices; " +
                     std::to_string(res.strategy.max_round_size()) + " cops win in " +
                     std::to_string(res.strategy.length()) + " rounds; written to " + ts_dir);
        } else if (*con_bt) {
            long long bt_cap = app.count("--cap") ? (long long)common.cap : kDefaultTreesubCap;
            auto res = bintree_subdivision(bt_height, bt_cap);
            std::filesystem::create_directories(bt_dir);
            save_graph(bt_dir + "/subdivision.graph", res.subdivision);
            save_graph(bt_dir + "/original.graph", res.original);
            save_strategy(bt_dir + "/strategy.strat", res.strategy);
            emit(common,
                 {{"vertices", res.subdivision.n()}, {"rounds", res.strategy.length()}, {"dir", bt_dir}},
                 "T_" + std::to_string(bt_height) + " with " + std::to_string(res.subdivision.n()) +
                     " vertices; 3 cops win in " + std::to_string(res.strategy.length()) + " rounds; written to " +
                     bt_dir);
        } else if (*con_k2t) {
            long long k2t_cap = app.count("--cap") ? (long long)common.cap : kDefaultTreesubCap;
            auto res = k2t_example(k2t_t, k2t_cap);
            std::filesystem::create_directories(k2t_dir);
            save_graph(k2t_dir + "/graph.graph", res.graph);
            save_graph(k2t_dir + "/pattern.graph", res.pattern);
            save_strategy(k2t_dir + "/strategy.strat", res.strategy);
            save_model(k2t_dir + "/balanced_model.model", res.balanced_model);
            emit(common,
                 {{"vertices", res.graph.n()},
                  {"budget", res.strategy.max_round_size()},
                  {"lower_bound", lb_balanced_clique(res.pattern, res.graph, res.balanced_model)},
                  {"dir", k2t_dir}},
                 "K_{2t} example with " + std::to_string(res.graph.n()) + " vertices; " +
                     std::to_string(res.strategy.max_round_size()) + " cops win; written to " + k2t_dir);
        } else if (*transform) {
            Graph g = load_graph(tr_graph);
            auto need_strategy = [&]() {
                if (tr_strategy.empty()) throw ParseError("transform: --strategy is required");
                return load_strategy(tr_strategy);
            };
            auto emit_strategy = [&](const CopStrategy& s) {
                if (tr_out.empty())
                    write_strategy(std::cout, s);
                else
                    save_strategy(tr_out, s);
            };
            if (tr_name == "double-speed") {
                emit_strategy(double_speed(g, need_strategy()));
            } else if (tr_name == "hunter-to-cop") {
                emit_strategy(hunter_to_cop(g, need_strategy()));
            } else if (tr_name == "zerovis-to-cop") {
                emit_strategy(zerovis_to_cop(g, need_strategy()));
            } else if (tr_name == "cop-to-zerovis") {
                emit_strategy(cop_to_zerovis(g, need_strategy()));
            } else if (tr_name == "cop-to-flip") {
                FlipStrategy fs = cop_to_flip(g, need_strategy());
                if (tr_out.empty())
                    write_flip_strategy(std::cout, fs);
                else
                    save_flip_strategy(tr_out, fs);
            } else if (tr_name == "flip-to-cop") {
                if (tr_flip.empty()) throw ParseError("transform: --flip-strategy is required");
                emit_strategy(flip_to_cop(g, load_flip_strategy(tr_flip, g.n())));
            } else {
                throw ParseError("transform: unknown transformer '" + tr_name + "'");
            }
        } else if (*mi_ver) {
            Graph host = load_graph(mv_host), pattern = load_graph(mv_pattern);
            MinorModel m = load_model(mv_model);
            auto chk = verify_model(pattern, host, m);
            emit(common, {{"ok", chk.ok}, {"balanced", is_balanced(m)}, {"violation", chk.violation}},
                 chk.ok ? (is_balanced(m) ? "ok, balanced" : "ok") : "violation: " + chk.violation);
            return chk.ok ? 0 : 1;
        } else if (*mi_bal) {
            Graph host = load_graph(mb_host), pattern = load_graph(mb_pattern);
            auto out = balance_clique(pattern, host, load_model(mb_model));
            if (mb_out.empty())
                write_model(std::cout, out);
            else
                save_model(mb_out, out);
        } else if (*mi_emb) {
            Graph p = load_graph(me_pattern);
            auto emb = embed_outerplanar(p);
            if (me_out.empty())
                write_model(std::cout, emb.model);
            else
                save_model(me_out, emb.model);
            if (!me_host_out.empty()) save_graph(me_host_out, emb.host);
        } else if (*mi_bop) {
            Graph p = load_graph(mo_pattern);
            MinorModel out;
            Graph host;
            if (mo_host.empty()) {
                auto [h, m] = balanced_outerplanar_in_grid(p);
                host = std::move(h);
                out = std::move(m);
            } else {
                host = load_graph(mo_host);
                MinorModel gm = mo_model.empty() ? MinorModel::identity(host) : load_model(mo_model);
                out = balanced_outerplanar_in_grid(p, host, gm);
            }
            if (mo_out.empty())
                write_model(std::cout, out);
            else
                save_model(mo_out, out);
            if (!mo_host_out.empty()) save_graph(mo_host_out, host);
        } else if (*nafcmd) {
            if (naf_g >= 0) {
                emit(common, {{"g", g_of_k(naf_g).to_string()}}, g_of_k(naf_g).to_string());
            } else if (naf_lemma >= 0) {
                auto rep = naf_lemma_check(naf_lemma, naf_lemma <= 1);
                emit(common,
                     {{"ok", rep.ok},
                      {"sufficient_check", rep.sufficient_ok},
                      {"oracle_ran", rep.oracle_ran},
                      {"oracle_ok", rep.oracle_ok}},
                     rep.ok ? "ok" : "FAILED");
                return rep.ok ? 0 : 1;
            } else {
                NafForm f = naf(naf_value);
                std::string digits;
                for (auto it = f.digits.rbegin(); it != f.digits.rend(); ++it)
                    digits += (*it == 0 ? "0" : *it == 1 ? "+" : "-");
                if (digits.empty()) digits = "0";
                emit(common, {{"value", f.value}, {"digits", digits}, {"weight", f.weight}},
                     digits + " (weight " + std::to_string(f.weight) + ")");
            }
        } else if (*or_pw) {
            int pw = pathwidth_oracle(load_graph(pw_graph), common.cap);
            emit(common, {{"pathwidth", pw}}, std::to_string(pw));
        } else if (*or_tw) {
            Graph g = load_graph(tw_graph);
            auto r = treewidth_oracle(g);
            if (!tw_td_out.empty()) {
                std::ofstream out(tw_td_out);
                write_tree_decomposition(out, r.decomposition, g.n());
            }
            emit(common, {{"treewidth", r.width}}, std::to_string(r.width));
        } else if (*dot) {
            Graph g = load_graph(dot_graph);
            std::vector<int> colors;
            if (!dot_model.empty()) {
                MinorModel m = load_model(dot_model);
                colors.assign(g.n(), -1);
                for (size_t u = 0; u < m.branch_sets.size(); ++u)
                    for (int v : m.branch_sets[u]) colors[v] = int(u);
            }
            std::string text = to_dot(g, colors.empty() ? nullptr : &colors);
            if (dot_out.empty())
                std::cout << text;
            else
                write_text_file(dot_out, text);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
