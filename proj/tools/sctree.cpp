/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Command-line front end.  Exit codes: 0 = valid / positive verdict,
// 1 = negative verdict with a certificate on stdout, 2 = usage or input
// error with a one-line diagnostic on stderr.  Certificates are
// machine-readable "prefix: token" lines.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sctree/extraction.hpp"
#include "sctree/generators.hpp"
#include "sctree/orders.hpp"
#include "sctree/recognition.hpp"
#include "sctree/representation.hpp"
#include "sctree/selftest.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out;
}

void print_quadruple(const sct::VertexOrder& o, const std::array<int, 4>& q) {
    std::cout << "quadruple: " << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "\n";
    std::cout << "labels: " << o.at(q[0]) << "," << o.at(q[1]) << "," << o.at(q[2]) << ","
              << o.at(q[3]) << "\n";
}

int run_check_order(const std::string& graph_path, const std::string& order_csv, bool perfect) {
    sct::Graph g = sct::parse_graph(read_file(graph_path));
    sct::VertexOrder o = sct::VertexOrder::from_csv(order_csv);
    if (perfect) {
        auto res = sct::is_perfect_elimination_order(g, o);
        if (res.valid) return 0;
        std::cout << "position: " << *res.position << "\n";
        std::cout << "pair: " << res.non_adjacent->first << "," << res.non_adjacent->second << "\n";
        return 1;
    }
    auto res = sct::is_strong_elimination_order(g, o);
    if (res.valid) return 0;
    print_quadruple(o, *res.violation);
    return 1;
}

int run_build_rep(const std::string& graph_path, const std::string& order_csv, bool unit_weights,
                  const std::string& out_path) {
    sct::Graph g = sct::parse_graph(read_file(graph_path));
    sct::VertexOrder o = sct::VertexOrder::from_csv(order_csv);
    try {
        sct::TreeRepresentation r =
            unit_weights ? sct::peo_to_representation(g, o) : sct::seo_to_representation(g, o);
        write_file(out_path, sct::serialize_representation(r));
        return 0;
    } catch (const sct::invalid_order_error& e) {
        if (e.quadruple()) {
            print_quadruple(o, *e.quadruple());
        } else {
            std::cout << "position: " << *e.position() << "\n";
            std::cout << "pair: " << e.non_adjacent()->first << "," << e.non_adjacent()->second
                      << "\n";
        }
        return 1;
    }
}

int run_extract_order(const std::string& rep_path) {
    sct::TreeRepresentation r = sct::parse_representation(read_file(rep_path));
    auto res = sct::extract_strong_elimination_order(r);
    if (res.succeeded()) {
        std::cout << res.order->to_csv() << "\n";
        return 0;
    }
    std::cout << "cycle: " << join(res.cycle) << "\n";
    return 1;
}

int run_verify_rep(const std::string& rep_path, const std::string& graph_path) {
    sct::TreeRepresentation r = sct::parse_representation(read_file(rep_path));

    auto comp = sct::is_compatible_representation(r);
    if (!comp.compatible) {
        const auto& [u, v] = *comp.incompatible_pair;
        std::cout << "pair: " << u << "," << v << "\n";
        auto forward = sct::overshadows(r.host, r.subtree(u), r.subtree(v));
        auto backward = sct::overshadows(r.host, r.subtree(v), r.subtree(u));
        std::cout << "cutoff: " << *forward.cutoff << "\n";
        // A witness exists only for a failing direction; one may still hold.
        if (forward.witness) std::cout << "witness: " << *forward.witness << "\n";
        if (backward.witness) std::cout << "witness: " << *backward.witness << "\n";
        return 1;
    }

    if (!graph_path.empty()) {
        sct::Graph expected = sct::parse_graph(read_file(graph_path));
        sct::Graph actual = sct::intersection_graph(r);
        std::vector<std::string> ev = expected.vertices(), av = actual.vertices();
        std::sort(ev.begin(), ev.end());
        std::sort(av.begin(), av.end());
        if (ev != av) {
            std::vector<std::string> extra, missing;
            std::set_difference(av.begin(), av.end(), ev.begin(), ev.end(),
                                std::back_inserter(extra));
            std::set_difference(ev.begin(), ev.end(), av.begin(), av.end(),
                                std::back_inserter(missing));
            for (const auto& l : extra) std::cout << "extra-vertex: " << l << "\n";
            for (const auto& l : missing) std::cout << "missing-vertex: " << l << "\n";
            return 1;
        }
        auto ee = expected.edges(), ae = actual.edges();
        if (ee != ae) {
            std::vector<std::pair<std::string, std::string>> extra, missing;
            std::set_difference(ae.begin(), ae.end(), ee.begin(), ee.end(),
                                std::back_inserter(extra));
            std::set_difference(ee.begin(), ee.end(), ae.begin(), ae.end(),
                                std::back_inserter(missing));
            for (const auto& [a, b] : extra) std::cout << "extra-edge: " << a << "," << b << "\n";
            for (const auto& [a, b] : missing)
                std::cout << "missing-edge: " << a << "," << b << "\n";
            return 1;
        }
    }
    return 0;
}

int run_recognize(const std::string& graph_path, const std::string& method) {
    sct::Graph g = sct::parse_graph(read_file(graph_path));
    if (method == "greedy") {
        auto res = sct::greedy_simple_elimination(g);
        if (res.success) {
            std::cout << "sequence: " << join(res.order) << "\n";
            return 0;
        }
        std::cout << "stuck: " << join(res.stuck) << "\n";
        return 1;
    }
    if (method == "bruteforce") {
        auto res = sct::brute_force_seo(g);
        if (res.found) {
            std::cout << "order: " << res.order->to_csv() << "\n";
            return 0;
        }
        std::cout << "exhausted: " << res.permutations_tried << "\n";
        return 1;
    }
    auto res = sct::definitional_strongly_chordal(g);
    if (res.strongly_chordal) return 0;
    std::cout << "cycle: " << join(res.offending_cycle) << "\n";
    return 1;
}

void append_manifest(const std::string& manifest_path, const std::string& kind,
                     const std::string& params, const std::string& seed, const std::string& file,
                     const std::string& compatible, const std::string& strongly_chordal) {
    bool fresh = !std::filesystem::exists(manifest_path);
    std::ofstream out(manifest_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write '" + manifest_path + "'");
    if (fresh) out << "kind\tparams\tseed\tfile\tcompatible\tstrongly-chordal\n";
    out << kind << "\t" << params << "\t" << seed << "\t" << file << "\t" << compatible << "\t"
        << strongly_chordal << "\n";
    if (!out) throw std::runtime_error("cannot write '" + manifest_path + "'");
}

// Properties are verified, never assumed; "?" marks instances past the
// desk-scale verification bound.
constexpr int kManifestCheckBound = 100;

int run_generate(const std::string& kind, std::uint64_t seed, int nodes, int verts, int max_weight,
                 int k, const std::string& out_path, const std::string& manifest_path) {
    if (kind == "sun") {
        sct::Graph g = sct::generate_sun(k);
        write_file(out_path, sct::serialize_graph(g));
        if (!manifest_path.empty()) {
            std::string sc = g.vertex_count() <= kManifestCheckBound
                                 ? (sct::greedy_simple_elimination(g).success ? "yes" : "no")
                                 : "?";
            append_manifest(manifest_path, kind, "k=" + std::to_string(k), "-", out_path, "-", sc);
        }
        return 0;
    }

    sct::TreeRepresentation r =
        kind == "rdv" ? sct::generate_rdv_representation(nodes, verts, max_weight, seed)
                      : sct::generate_random_chordal_representation(nodes, verts, seed);
    write_file(out_path, sct::serialize_representation(r));
    if (!manifest_path.empty()) {
        std::string params = "nodes=" + std::to_string(nodes) + ",verts=" + std::to_string(verts);
        if (kind == "rdv") params += ",max-weight=" + std::to_string(max_weight);
        std::string compatible = "?", sc = "?";
        if (r.vertex_count() <= kManifestCheckBound) {
            compatible = sct::is_compatible_representation(r).compatible ? "yes" : "no";
            sc = sct::greedy_simple_elimination(sct::intersection_graph(r)).success ? "yes" : "no";
        }
        append_manifest(manifest_path, kind, params, std::to_string(seed), out_path, compatible,
                        sc);
    }
    return 0;
}

int run_subdivide(const std::string& rep_path, const std::string& policy,
                  const std::string& out_path) {
    sct::TreeRepresentation r = sct::parse_representation(read_file(rep_path));
    auto report = sct::subdivide_unit_weights(r, policy == "extend-all"
                                                     ? sct::SubdivisionPolicy::extend_all
                                                     : sct::SubdivisionPolicy::extend_none);
    write_file(out_path, sct::serialize_representation(report.result));
    std::cout << "intersection-preserved: " << (report.intersection_preserved ? "yes" : "no")
              << "\n";
    std::cout << "compatible: " << (report.compatible ? "yes" : "no") << "\n";
    for (const auto& [u, v] : report.incompatible) std::cout << "pair: " << u << "," << v << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly chordal graphs via compatible subtree representations"};
    app.require_subcommand(1);
    int rc = 0;

    std::string co_graph, co_order;
    bool co_strong = false, co_perfect = false;
    auto* co = app.add_subcommand("check-order", "test an order against a graph");
    co->add_option("--graph", co_graph, "graph file")->required();
    co->add_option("--order", co_order, "comma-separated vertex labels")->required();
    auto* co_s = co->add_flag("--strong", co_strong, "strong elimination test (default)");
    auto* co_p = co->add_flag("--perfect", co_perfect, "perfect elimination test");
    co_s->excludes(co_p);
    co_p->excludes(co_s);
    co->callback([&]() { rc = run_check_order(co_graph, co_order, co_perfect); });

    std::string br_graph, br_order, br_out;
    bool br_unit = false;
    auto* br = app.add_subcommand("build-rep", "build the representation an order determines");
    br->add_option("--graph", br_graph, "graph file")->required();
    br->add_option("--order", br_order, "comma-separated vertex labels")->required();
    br->add_flag("--unit-weights", br_unit, "unit-weight variant (needs only a perfect order)");
    br->add_option("--out", br_out, "output representation file")->required();
    br->callback([&]() { rc = run_build_rep(br_graph, br_order, br_unit, br_out); });

    std::string eo_rep;
    auto* eo = app.add_subcommand("extract-order", "extract a strong elimination order");
    eo->add_option("--rep", eo_rep, "representation file")->required();
    eo->callback([&]() { rc = run_extract_order(eo_rep); });

    std::string vr_rep, vr_graph;
    auto* vr = app.add_subcommand("verify-rep", "check compatibility and graph agreement");
    vr->add_option("--rep", vr_rep, "representation file")->required();
    vr->add_option("--graph", vr_graph, "graph the representation should reproduce");
    vr->callback([&]() { rc = run_verify_rep(vr_rep, vr_graph); });

    std::string rc_graph, rc_method = "greedy";
    auto* rz = app.add_subcommand("recognize", "decide strong chordality");
    rz->add_option("--graph", rc_graph, "graph file")->required();
    rz->add_option("--method", rc_method, "greedy|bruteforce|definition")
        ->check(CLI::IsMember({"greedy", "bruteforce", "definition"}));
    rz->callback([&]() { rc = run_recognize(rc_graph, rc_method); });

    std::string gn_kind, gn_out, gn_manifest;
    std::uint64_t gn_seed = 1;
    int gn_nodes = 10, gn_verts = 10, gn_maxw = 3, gn_k = 3;
    auto* gn = app.add_subcommand("generate", "emit a seeded test instance");
    gn->add_option("--kind", gn_kind, "rdv|chordal|sun")
        ->required()
        ->check(CLI::IsMember({"rdv", "chordal", "sun"}));
    gn->add_option("--seed", gn_seed, "PRNG seed (default 1)");
    gn->add_option("--nodes", gn_nodes, "host tree nodes (default 10)");
    gn->add_option("--verts", gn_verts, "vertices / subtrees (default 10)");
    gn->add_option("--max-weight", gn_maxw, "maximum arc weight (default 3)");
    gn->add_option("--k", gn_k, "sun size (default 3)");
    gn->add_option("--out", gn_out, "output file")->required();
    gn->add_option("--manifest", gn_manifest, "append a TSV corpus line here");
    gn->callback([&]() {
        rc = run_generate(gn_kind, gn_seed, gn_nodes, gn_verts, gn_maxw, gn_k, gn_out, gn_manifest);
    });

    std::string sd_rep, sd_policy, sd_out;
    auto* sd = app.add_subcommand("subdivide", "split weighted arcs into unit chains");
    sd->add_option("--rep", sd_rep, "representation file")->required();
    sd->add_option("--policy", sd_policy, "extend-none|extend-all")
        ->required()
        ->check(CLI::IsMember({"extend-none", "extend-all"}));
    sd->add_option("--out", sd_out, "output representation file")->required();
    sd->callback([&]() { rc = run_subdivide(sd_rep, sd_policy, sd_out); });

    auto* st = app.add_subcommand("selftest", "run the built-in worked examples");
    st->callback([&]() { rc = sct::run_selftest(std::cout) == 0 ? 0 : 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
