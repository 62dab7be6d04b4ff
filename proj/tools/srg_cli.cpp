#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srg/drg.hpp"
#include "srg/families.hpp"
#include "srg/graph.hpp"
#include "srg/hamilton.hpp"
#include "srg/params.hpp"
#include "srg/spectral.hpp"

using nlohmann::json;

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Round to 12 significant digits so every serializer agrees byte-for-byte.
double round12(double x) { return std::stod(fmt12(x)); }

const std::vector<std::string> kBoundColumns = {
    "seidel_f",       "seidel_g",       "primitive_ratio_bound", "lambda_mu_gap",
    "k_over_s_bound", "neumaier_claw",  "k_over_r_bound",        "pseudorandom_ratio"};

std::string bound_cell(const srg::BoundReport& rep, const std::string& name) {
    const auto* e = rep.find(name);
    if (!e || !e->applicable) return "na";
    return e->satisfied ? "pass" : "fail";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

int cmd_scan(long long vmax, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);

    std::vector<std::string> header = {"v", "k", "lambda", "mu",        "r",
                                       "s", "f", "g",      "class",     "primitive",
                                       "lambda2", "k_over_lambda2"};
    header.insert(header.end(), kBoundColumns.begin(), kBoundColumns.end());

    json rows = json::array();
    if (format == "csv") {
        for (size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << '\n';
    }
    srg::enumerate_feasible(vmax, [&](const srg::FeasibleEntry& e) {
        const double lam2 = e.spectrum.lambda2();
        std::vector<std::string> cells = {
            std::to_string(e.p.v),
            std::to_string(e.p.k),
            std::to_string(e.p.lambda),
            std::to_string(e.p.mu),
            fmt12(e.spectrum.r.value()),
            fmt12(e.spectrum.s.value()),
            std::to_string(e.spectrum.f),
            std::to_string(e.spectrum.g),
            srg::family_tag_name(e.cls.tag),
            e.cls.primitive ? "true" : "false",
            fmt12(lam2),
            fmt12(static_cast<double>(e.p.k) / lam2)};
        for (const auto& name : kBoundColumns) cells.push_back(bound_cell(e.bounds, name));

        if (format == "json") {
            json row;
            for (size_t i = 0; i < header.size(); ++i) row[header[i]] = cells[i];
            rows.push_back(row);
        } else if (format == "csv") {
            for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            out << '\n';
        } else {
            out << '(' << e.p.v << ',' << e.p.k << ',' << e.p.lambda << ',' << e.p.mu
                << ") class=" << srg::family_tag_name(e.cls.tag)
                << " primitive=" << (e.cls.primitive ? "yes" : "no")
                << " lambda2=" << fmt12(lam2)
                << " bounds=" << (e.bounds.all_ok ? "ok" : "VIOLATION") << '\n';
        }
    });
    if (format == "json") out << rows.dump(2) << '\n';
    return 0;
}

srg::Graph construct_family(const std::string& family, const std::vector<long long>& args) {
    auto need = [&args, &family](size_t n) {
        if (args.size() != n)
            throw CLI::ValidationError(family + " expects " + std::to_string(n) + " argument(s)");
    };
    if (family == "multipartite") {
        need(2);
        return srg::complete_multipartite(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (family == "latin") {
        need(2);
        return srg::latin_square_graph(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (family == "steiner-triple") {
        need(1);
        return srg::steiner_block_graph(srg::steiner_triple_system(static_cast<int>(args[0]))).graph;
    }
    if (family == "affine") {
        need(1);
        return srg::steiner_block_graph(srg::affine_plane_system(static_cast<int>(args[0]))).graph;
    }
    if (family == "paley") {
        need(1);
        return srg::paley(static_cast<int>(args[0]));
    }
    if (family == "triangular") {
        need(1);
        return srg::triangular(static_cast<int>(args[0]));
    }
    if (family == "petersen") {
        need(0);
        return srg::petersen();
    }
    if (family == "johnson") {
        need(2);
        return srg::johnson(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    if (family == "hamming") {
        need(2);
        return srg::hamming(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    throw CLI::ValidationError("unknown family " + family);
}

int cmd_construct(const std::string& family, const std::vector<long long>& args,
                  const std::string& out_path) {
    const srg::Graph g = construct_family(family, args);
    std::ostream& report = out_path.empty() ? std::cerr : std::cout;
    if (out_path.empty()) {
        srg::write_edge_list(g, std::cout);
    } else {
        srg::save_graph(g, out_path);
    }
    try {
        const auto p = srg::srg_params_of(g);
        if (p) {
            report << "srg (" << p->v << ',' << p->k << ',' << p->lambda << ',' << p->mu
                   << ")\n";
        } else {
            report << "not_srg";
            if (srg::is_distance_regular(g)) report << " distance_regular";
            report << '\n';
        }
    } catch (const std::exception& ex) {
        report << "not_srg (" << ex.what() << ")\n";
    }
    return 0;
}

json spectrum_section(const srg::Graph& g) {
    const auto sp = srg::spectrum(g);
    json sec;
    sec["applicable"] = true;
    json vals = json::array();
    for (double x : sp.values) vals.push_back(round12(x));
    sec["eigenvalues"] = vals;
    json clusters = json::array();
    for (const auto& c : srg::eigen_multiplicities(sp))
        clusters.push_back({{"value", round12(c.value)}, {"multiplicity", c.multiplicity}});
    sec["clusters"] = clusters;
    const auto gb = srg::multiplicity_gap_bound(g);
    sec["gap_bound"] = {{"t_min", gb.t_min},
                        {"bound", round12(gb.bound)},
                        {"lambda2", round12(gb.lambda2)},
                        {"holds", gb.holds}};
    return sec;
}

json bounds_section(const srg::Graph& g) {
    json sec;
    const auto p = srg::srg_params_of(g);
    if (!p) {
        sec["applicable"] = false;
        sec["reason"] = "graph is not strongly regular";
        return sec;
    }
    sec["applicable"] = true;
    sec["params"] = {{"v", p->v}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}};
    const auto cls = srg::classify_params(*p);
    sec["class"] = srg::family_tag_name(cls.tag);
    sec["primitive"] = cls.primitive;
    const auto sp = srg::spectrum_from_params(*p);
    sec["exact_spectrum"] = {{"r", round12(sp.r.value())}, {"s", round12(sp.s.value())},
                             {"f", sp.f},                  {"g", sp.g},
                             {"conference", sp.conference}};
    json entries = json::array();
    for (const auto& e : srg::bound_suite(*p).entries)
        entries.push_back({{"name", e.name},
                           {"lhs", round12(e.lhs)},
                           {"rhs", round12(e.rhs)},
                           {"applicable", e.applicable},
                           {"satisfied", e.satisfied}});
    sec["bounds"] = entries;
    return sec;
}

json hamilton_section(const srg::Graph& g, const srg::SearchBudget& b) {
    json sec;
    sec["applicable"] = true;
    const auto res = srg::find_hamiltonian(g, b);
    sec["verdict"] = srg::ham_verdict_name(res.verdict);
    sec["nodes"] = res.nodes;
    if (res.cycle) sec["cycle"] = res.cycle->order;
    return sec;
}

json toughness_section(const srg::Graph& g) {
    json sec;
    try {
        const auto t = srg::toughness_exact(g);
        sec["applicable"] = true;
        sec["exact"] = {{"num", t.num}, {"den", t.den}, {"value", round12(t.value())}};
        sec["lower_bound"] = round12(srg::toughness_lower_bound(g));
    } catch (const std::exception& ex) {
        sec["applicable"] = false;
        sec["reason"] = ex.what();
    }
    return sec;
}

json drg_section(const srg::Graph& g) {
    json sec;
    sec["applicable"] = true;
    const auto cert = srg::is_distance_regular(g);
    sec["distance_regular"] = cert.has_value();
    if (cert) sec["diameter"] = cert->diameter;
    try {
        const auto rep = srg::godsil_bound_check(g);
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back({{"theta", round12(e.theta)},
                               {"multiplicity", e.multiplicity},
                               {"diameter_ok", e.diameter_ok},
                               {"degree_ok", e.degree_ok},
                               {"size_ok", e.size_ok}});
        sec["godsil"] = {{"applicable", true}, {"all_ok", rep.all_ok}, {"entries", entries}};
    } catch (const std::exception& ex) {
        sec["godsil"] = {{"applicable", false}, {"reason", ex.what()}};
    }
    return sec;
}

json merged_section(const srg::Graph& g, const std::set<int>& R) {
    json sec;
    try {
        const auto m = srg::merged_graph(g, R);
        sec["applicable"] = true;
        sec["degree"] = m.degree;
        sec["commutes"] = srg::commutation_merge_check(g, m.graph);
        sec["coarsening"] = srg::multiplicity_coarsening(g, m.graph);
        try {
            const auto rep = srg::merged_gap_bound_check(g, R);
            sec["gap"] = {{"applicable", true},
                          {"lambda2", round12(rep.lambda2)},
                          {"bound", round12(rep.bound)},
                          {"holds", rep.holds},
                          {"t_min", rep.t_min},
                          {"mult_lower", round12(rep.mult_lower)},
                          {"mult_ok", rep.mult_ok}};
        } catch (const std::exception& ex) {
            sec["gap"] = {{"applicable", false}, {"reason", ex.what()}};
        }
    } catch (const std::exception& ex) {
        sec["applicable"] = false;
        sec["reason"] = ex.what();
    }
    return sec;
}

json ks_section(const srg::Graph& g) {
    json sec;
    sec["applicable"] = true;
    const auto rep = srg::ks_verdict(g);
    sec["defined"] = rep.defined;
    sec["ratio"] = round12(rep.ratio);
    if (rep.defined) {
        sec["threshold"] = round12(rep.threshold);
        sec["fires"] = rep.fires;
    }
    return sec;
}

int cmd_analyze(const std::string& path, const std::string& checks_arg,
                const srg::SearchBudget& budget, const std::string& out_path) {
    srg::Graph g = srg::load_graph(path);
    json report;
    report["file"] = path;
    report["v"] = g.order();
    report["e"] = g.edge_count();
    json checks = json::object();

    std::stringstream ss(checks_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "spectrum") {
            checks["spectrum"] = spectrum_section(g);
        } else if (item == "bounds") {
            checks["bounds"] = bounds_section(g);
        } else if (item == "hamilton") {
            checks["hamilton"] = hamilton_section(g, budget);
        } else if (item == "toughness") {
            checks["toughness"] = toughness_section(g);
        } else if (item == "drg") {
            checks["drg"] = drg_section(g);
        } else if (item == "ks") {
            checks["ks"] = ks_section(g);
        } else if (item.rfind("merged:", 0) == 0) {
            std::set<int> R;
            std::stringstream rs(item.substr(7));
            std::string tok;
            while (std::getline(rs, tok, '+')) R.insert(std::stoi(tok));
            checks["merged"] = merged_section(g, R);
        } else {
            throw CLI::ValidationError("unknown check " + item);
        }
    }
    report["checks"] = checks;

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << report.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly regular graph spectra toolkit"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("SRG_SPECTRA_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker thread count (default 1, deterministic)");

    auto* scan = app.add_subcommand("scan", "enumerate feasible parameter tuples");
    long long vmax = 0;
    std::string format = "table", out_path;
    scan->add_option("--vmax", vmax, "largest vertex count")->required();
    scan->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    scan->add_option("--out", out_path, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "build a named family graph");
    std::string family;
    std::vector<long long> fam_args;
    std::string construct_out;
    construct->add_option("family", family, "family name")->required();
    construct->add_option("args", fam_args, "family arguments");
    construct->add_option("--out", construct_out, "edge-list output file");

    auto* analyze = app.add_subcommand("analyze", "analyze an edge-list file");
    std::string graph_path, checks = "spectrum";
    std::string analyze_out;
    srg::SearchBudget budget;
    analyze->add_option("file", graph_path, "edge-list input")->required();
    analyze->add_option("--checks", checks, "comma list: spectrum,bounds,hamilton,toughness,drg,merged:R,ks");
    analyze->add_option("--seed", budget.seed, "search seed");
    analyze->add_option("--node-limit", budget.node_limit, "search node budget");
    analyze->add_option("--time-limit", budget.time_limit_s, "search time budget (s)");
    analyze->add_option("--out", analyze_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*scan) {
            if (vmax < 0 || vmax > 10'000) {
                std::cerr << "error: --vmax must be in 0..10000\n";
                return 2;
            }
            return cmd_scan(vmax, format, out_path);
        }
        if (*construct) return cmd_construct(family, fam_args, construct_out);
        if (*analyze) return cmd_analyze(graph_path, checks, budget, analyze_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const srg::GraphFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
