// coprime-theta: prime counting vs independence number vs Lovasz theta on
// the PR[n] coprimality graphs, plus hole search and graph embedding.
//
// Exit codes: 0 success, 1 domain or usage error, 2 resource cap exceeded,
// 3 solver non-convergence.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coprime/embed.hpp"
#include "coprime/errors.hpp"
#include "coprime/graph.hpp"
#include "coprime/independence.hpp"
#include "coprime/numbertheory.hpp"
#include "coprime/perfection.hpp"
#include "coprime/theta.hpp"

namespace {

using coprime::Graph;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitCap = 2;
constexpr int kExitNoConverge = 3;

struct Options {
    std::int64_t n = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    double tol = 1e-6;
    int max_iter = 50'000;
    double rho = 1.0;
    int bound = -1;
    bool berge = false;
    std::string json_path;
    std::string input_file;
    std::string format;
    std::string out_path;
};

coprime::theta::SolverOptions solver_options(const Options& o) {
    coprime::theta::SolverOptions s;
    s.tol = o.tol;
    s.max_iter = o.max_iter;
    s.rho = o.rho;
    return s;
}

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cli: cannot write " + path);
    out << j.dump(2) << '\n';
}

json defaults_json(const Options& o) {
    return json{{"tol", o.tol},
                {"max_iter", o.max_iter},
                {"rho", o.rho},
                {"sieve_cap", coprime::nt::kDefaultSieveCap},
                {"mis_vertex_cap", coprime::mis::kDefaultVertexCap},
                {"sdp_vertex_cap", coprime::theta::kDefaultSdpVertexCap},
                {"hole_vertex_cap", coprime::perfection::kDefaultHoleVertexCap}};
}

void print_defaults(const Options& o) {
    std::cout << "# tol=" << o.tol << " max_iter=" << o.max_iter << " rho=" << o.rho
              << " caps: sieve=" << coprime::nt::kDefaultSieveCap
              << " mis=" << coprime::mis::kDefaultVertexCap
              << " sdp=" << coprime::theta::kDefaultSdpVertexCap
              << " holes=" << coprime::perfection::kDefaultHoleVertexCap << '\n';
}

json certificate_json(const coprime::perfection::HoleCertificate& cert) {
    std::vector<std::int64_t> sorted(cert.cycle);
    std::sort(sorted.begin(), sorted.end());
    return json{{"kind", cert.kind == coprime::perfection::HoleKind::hole ? "hole" : "antihole"},
                {"cycle", cert.cycle},
                {"vertices", sorted},
                {"length", cert.cycle.size()}};
}

void print_certificate(const coprime::perfection::HoleCertificate& cert) {
    std::cout << (cert.kind == coprime::perfection::HoleKind::hole ? "odd hole" : "odd antihole")
              << " of length " << cert.cycle.size() << "\n  cycle:";
    for (auto v : cert.cycle) std::cout << ' ' << v;
    std::vector<std::int64_t> sorted(cert.cycle);
    std::sort(sorted.begin(), sorted.end());
    std::cout << "\n  vertices:";
    for (auto v : sorted) std::cout << ' ' << v;
    std::cout << '\n';
}

int cmd_pi(const Options& o) {
    auto pi = coprime::nt::prime_pi(o.n);
    std::cout << pi << '\n';
    write_json(o.json_path, json{{"n", o.n}, {"pi", pi}});
    return kExitOk;
}

int cmd_alpha(const Options& o) {
    auto g = coprime::build_pr(o.n);
    auto res = coprime::mis::max_independent_set(g);
    std::cout << "alpha(PR[" << o.n << "]) = " << res.alpha << '\n';
    std::cout << "witness:";
    for (auto v : res.witness) std::cout << ' ' << v;
    std::cout << '\n' << "search nodes: " << res.search_nodes << '\n';
    write_json(o.json_path, json{{"n", o.n},
                                 {"alpha", res.alpha},
                                 {"witness", res.witness},
                                 {"search_nodes", res.search_nodes}});
    return kExitOk;
}

int cmd_theta(const Options& o) {
    print_defaults(o);
    auto g = coprime::build_pr(o.n);
    auto start = std::chrono::steady_clock::now();
    auto res = coprime::theta::theta_sdp(g, solver_options(o));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("theta(PR[%lld]) = %.8f\n", static_cast<long long>(o.n), res.value);
    std::printf("converged=%s iterations=%d primal_residual=%.3e dual_residual=%.3e (%lld ms)\n",
                res.converged ? "true" : "false", res.iterations, res.primal_residual,
                res.dual_residual, static_cast<long long>(ms));
    write_json(o.json_path, json{{"defaults", defaults_json(o)},
                                 {"n", o.n},
                                 {"theta", res.value},
                                 {"converged", res.converged},
                                 {"iterations", res.iterations},
                                 {"primal_residual", res.primal_residual},
                                 {"dual_residual", res.dual_residual},
                                 {"solve_ms", ms}});
    return res.converged ? kExitOk : kExitNoConverge;
}

int cmd_rep(const Options& o) {
    auto g = coprime::build_pr(o.n);
    auto rep = coprime::theta::build_factor_representation(o.n);
    auto report = coprime::theta::verify_orthonormal(rep, g);
    auto value = coprime::theta::rep_value_exact(rep);

    std::cout << "orthonormal representation of PR[" << o.n << "], dimension k = " << rep.dim << '\n';
    auto table = coprime::nt::FactorTable::build(o.n);
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
        auto v = rep.labels[i];
        std::cout << "  x[" << v << "] = 1/sqrt(" << table.l_of(v) << ") on prime coords {";
        auto fs = table.factors_of(v);
        for (std::size_t j = 0; j < fs.size(); ++j) std::cout << (j ? "," : "") << fs[j];
        std::cout << "}\n";
    }
    std::cout << "handle: all components 1/sqrt(" << rep.dim << ")\n";
    std::cout << "value = " << value.num;
    if (value.den != 1) std::cout << '/' << value.den;
    std::cout << '\n';
    std::cout << "verification: " << (report.pass ? "pass" : "FAIL")
              << " (exact mode, norm deviation " << report.max_norm_dev
              << ", non-adjacent inner product " << report.max_cross_dev << ")\n";

    json jrep;
    jrep["n"] = o.n;
    jrep["dim"] = rep.dim;
    jrep["value_num"] = value.num;
    jrep["value_den"] = value.den;
    jrep["pass"] = report.pass;
    jrep["exact_mode"] = report.exact_mode;
    jrep["max_norm_dev"] = report.max_norm_dev;
    jrep["max_cross_dev"] = report.max_cross_dev;
    auto vecs = json::object();
    for (std::size_t i = 0; i < rep.labels.size(); ++i)
        vecs[std::to_string(rep.labels[i])] = rep.vectors[i];
    jrep["vectors"] = std::move(vecs);
    jrep["handle"] = rep.handle;
    write_json(o.json_path, jrep);
    return report.pass ? kExitOk : kExitDomain;
}

int cmd_holes(const Options& o) {
    auto g = coprime::build_pr(o.n);
    auto report = coprime::perfection::berge_check(g, o.bound);
    std::cout << "PR[" << o.n << "], odd-cycle bound " << report.bound << '\n';
    std::cout << "berge: " << (report.is_berge_up_to_bound ? "true" : "false") << '\n';
    if (report.certificate) print_certificate(*report.certificate);

    json j{{"n", o.n}, {"bound", report.bound}, {"berge", report.is_berge_up_to_bound}};
    if (report.certificate) j["certificate"] = certificate_json(*report.certificate);
    write_json(o.json_path, j);
    return kExitOk;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cli: cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return coprime::import_json(text);
    return coprime::import_dimacs(text);
}

int cmd_embed(const Options& o) {
    auto g = read_graph_file(o.input_file);
    auto emb = coprime::embed::embed_graph(g);
    bool ok = coprime::embed::verify_embedding(g, emb);

    json j;
    j["source_order"] = emb.source_order;
    j["ambient_n"] = emb.ambient_n;
    j["verified"] = ok;
    auto m = json::object();
    for (int v = 0; v < emb.source_order; ++v)
        m[std::to_string(g.label(v))] = emb.label_of[static_cast<std::size_t>(v)];
    j["label_of"] = std::move(m);
    std::cout << j.dump(2) << '\n';
    write_json(o.json_path, j);
    return ok ? kExitOk : kExitDomain;
}

int cmd_export(const Options& o) {
    auto g = coprime::build_pr(o.n);
    std::string text;
    if (o.format == "dimacs") {
        text = coprime::export_dimacs(g);
    } else if (o.format == "json") {
        text = coprime::export_json(g);
    } else {
        throw std::invalid_argument("cli: export format must be dimacs or json, got " + o.format);
    }
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw std::invalid_argument("cli: cannot write " + o.out_path);
        out << text;
    }
    return kExitOk;
}

struct SweepRow {
    std::int64_t n = 0;
    std::int64_t pi = 0;
    int alpha = 0;
    std::int64_t rep_value = 0;
    double theta_numeric = 0.0;
    double theta_gap = 0.0;
    bool theta_converged = false;
    int berge = -1;   // -1 skipped, 0 false, 1 true
    std::int64_t solve_ms = 0;
};

int cmd_table(const Options& o) {
    if (o.n_min < 2 || o.n_min > o.n_max)
        throw std::invalid_argument("cli: table range needs 2 <= n_min <= n_max");
    print_defaults(o);
    std::vector<SweepRow> rows;
    bool ok = true;

    for (std::int64_t n = o.n_min; n <= o.n_max; ++n) {
        SweepRow row;
        row.n = n;
        row.pi = coprime::nt::prime_pi(n);
        auto g = coprime::build_pr(n);
        row.alpha = coprime::mis::max_independent_set(g).alpha;
        auto rep = coprime::theta::build_factor_representation(n);
        auto exact = coprime::theta::rep_value_exact(rep);
        if (exact.den != 1) {
            ok = false;
            row.rep_value = -1;
        } else {
            row.rep_value = exact.num;
        }

        auto start = std::chrono::steady_clock::now();
        auto theta = coprime::theta::theta_sdp(g, solver_options(o));
        row.solve_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        row.theta_numeric = theta.value;
        row.theta_gap = std::abs(theta.value - static_cast<double>(row.pi));
        row.theta_converged = theta.converged;

        if (o.berge) {
            auto report = coprime::perfection::berge_check(g, o.bound);
            row.berge = report.is_berge_up_to_bound ? 1 : 0;
        }

        if (row.pi != row.alpha || row.rep_value != row.pi || !theta.converged) ok = false;
        rows.push_back(row);
    }

    std::printf("%6s %5s %6s %10s %14s %11s %8s %9s\n", "n", "pi", "alpha", "rep_value",
                "theta", "theta_gap", "berge", "solve_ms");
    for (const auto& r : rows) {
        std::printf("%6lld %5lld %6d %10lld %14.8f %11.2e %8s %9lld\n",
                    static_cast<long long>(r.n), static_cast<long long>(r.pi), r.alpha,
                    static_cast<long long>(r.rep_value), r.theta_numeric, r.theta_gap,
                    r.berge < 0 ? "skipped" : (r.berge ? "true" : "false"),
                    static_cast<long long>(r.solve_ms));
    }
    std::cout << (ok ? "ok: pi = alpha = rep_value on every row\n"
                     : "FAILED: some row violates pi = alpha = rep_value or did not converge\n");

    if (!o.json_path.empty()) {
        json jrows = json::array();
        for (const auto& r : rows) {
            json jr{{"n", r.n},
                    {"pi", r.pi},
                    {"alpha", r.alpha},
                    {"rep_value", r.rep_value},
                    {"theta_numeric", r.theta_numeric},
                    {"theta_gap", r.theta_gap},
                    {"converged", r.theta_converged},
                    {"solve_ms", r.solve_ms}};
            if (r.berge < 0)
                jr["berge"] = "skipped";
            else
                jr["berge"] = (r.berge == 1);
            jrows.push_back(std::move(jr));
        }
        write_json(o.json_path, json{{"defaults", defaults_json(o)}, {"rows", jrows}, {"ok", ok}});
    }
    return ok ? kExitOk : kExitNoConverge;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi(n) = alpha = theta certificates on coprimality graphs"};
    app.require_subcommand(1);
    Options o;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tol", o.tol, "solver residual tolerance");
        cmd->add_option("--max-iter", o.max_iter, "solver iteration limit");
        cmd->add_option("--rho", o.rho, "initial ADMM penalty");
    };
    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_option("--json", o.json_path, "write a JSON report to this path");
    };

    auto* table = app.add_subcommand("table", "sweep n and certify pi = alpha = rep value = theta");
    table->add_option("n_min", o.n_min, "first n")->required();
    table->add_option("n_max", o.n_max, "last n")->required();
    add_solver_flags(table);
    add_json_flag(table);
    table->add_flag("--berge", o.berge, "also run the odd hole / antihole search per n");
    table->add_option("--bound", o.bound, "odd-cycle length bound for --berge");

    auto* pi = app.add_subcommand("pi", "prime count");
    pi->add_option("n", o.n, "count primes <= n")->required();
    add_json_flag(pi);

    auto* alpha = app.add_subcommand("alpha", "exact independence number of PR[n]");
    alpha->add_option("n", o.n, "build PR[n]")->required();
    add_json_flag(alpha);

    auto* theta = app.add_subcommand("theta", "numerical Lovasz theta of PR[n]");
    theta->add_option("n", o.n, "build PR[n]")->required();
    add_solver_flags(theta);
    add_json_flag(theta);

    auto* rep = app.add_subcommand("rep", "explicit orthonormal representation of PR[n]");
    rep->add_option("n", o.n, "build PR[n]")->required();
    add_json_flag(rep);

    auto* holes = app.add_subcommand("holes", "odd hole / antihole search on PR[n]");
    holes->add_option("n", o.n, "build PR[n]")->required();
    holes->add_option("--bound", o.bound, "odd-cycle length bound (default |V| rounded to odd)");
    add_json_flag(holes);

    auto* embed = app.add_subcommand("embed", "realize a graph as an induced subgraph of PR[n]");
    embed->add_option("file", o.input_file, "graph file, DIMACS or JSON")->required();
    add_json_flag(embed);

    auto* exp = app.add_subcommand("export", "write PR[n] as DIMACS or JSON");
    exp->add_option("n", o.n, "build PR[n]")->required();
    exp->add_option("format", o.format, "dimacs or json")->required();
    exp->add_option("path", o.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitDomain;
    }

    try {
        if (table->parsed()) return cmd_table(o);
        if (pi->parsed()) return cmd_pi(o);
        if (alpha->parsed()) return cmd_alpha(o);
        if (theta->parsed()) return cmd_theta(o);
        if (rep->parsed()) return cmd_rep(o);
        if (holes->parsed()) return cmd_holes(o);
        if (embed->parsed()) return cmd_embed(o);
        if (exp->parsed()) return cmd_export(o);
    } catch (const coprime::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitDomain;
}
