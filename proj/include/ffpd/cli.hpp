#pragma once

// Command-line front end. run_cli is the whole program; tools/ffpd.cpp only
// forwards argv. Exit codes: 0 success, 1 domain error (or a failing
// verification), 2 usage error.

#include "json_io.hpp"
#include "paperbench.hpp"
#include "presslab_http.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ffpd {

namespace cli_detail {

inline void print_matrix(std::ostream& out, const Mat& m) { out << mat_to_json(m).dump() << "\n" << format_grid(m); }

inline std::string elem_list(const std::vector<Elem>& es) {
    ordered_json a = ordered_json::array();
    for (const auto& e : es) a.push_back(elem_to_json(e));
    return a.dump();
}

inline Mat load_matrix(const std::string& path) { return mat_from_json(load_json_file(path)); }
inline Pseudograph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

/// "1,2,3" -> {0,1,2}. Empty string is the empty order.
inline std::vector<std::size_t> parse_order(const std::string& text) {
    std::vector<std::size_t> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0) {
            throw Error(ErrorKind::ParseError, "bad vertex \"" + item + "\" in order (use 1-based labels like 1,2,3)");
        }
        out.push_back(v - 1);
    }
    return out;
}

inline PressLabServer* g_server = nullptr;

} // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Positive-definite matrices and graph pressing over finite fields", "ffpd"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string field_text, file, file_b, order_text, json_path, host = "127.0.0.1", snapshot_dir, allow_origin;
    bool relaxed = false, search = false, instructions = false, counterexamples_only = false;
    std::uint64_t bound = kDefaultIsotropicBound, q_max = 729, ttl = 24 * 60 * 60;
    std::size_t n_max = 3, max_vertices = 10;
    std::optional<std::uint64_t> seed;
    int port = 8080;

    auto field_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("field", field_text, "Field literal: GF(7), GF(3^2), GF(9), 7")->required();
        return c;
    };
    auto file_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", file, "Matrix JSON file")->required();
        return c;
    };
    auto pair_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("a", file, "First matrix JSON file")->required();
        c->add_option("b", file_b, "Second matrix JSON file")->required();
        return c;
    };

    auto* field_info = field_cmd("field-info", "Definiteness and positive elements of a field");
    auto* positives_cmd = field_cmd("positives", "List the positive elements (nonzero squares)");
    auto* chol = file_cmd("cholesky", "Cholesky factor L with L L^T = A");
    chol->add_flag("--relaxed", relaxed, "Allow an all-zero trailing block (singular inputs)");
    auto* ldu_cmd = file_cmd("ldu", "Swap-free LDU factorization");
    auto* pd = file_cmd("pd-check", "Leading-minor positive-definiteness test");
    auto* minors = file_cmd("minors", "Leading principal minors");
    auto* eigen = file_cmd("eigen", "Characteristic polynomial and eigenvalues in the field");
    auto* gram = file_cmd("gram", "B^T B for a nonsingular B");
    auto* kron = pair_cmd("kron", "Kronecker product");
    auto* had = pair_cmd("hadamard", "Entrywise product");
    auto* frob = pair_cmd("frobenius", "Frobenius inner product");
    auto* anti = file_cmd("anti-inverse", "Exchange-conjugated inverse");
    auto* iso = file_cmd("isotropic", "First nonzero v with v^T A v = 0");
    iso->add_option("--bound", bound, "Largest search space q^n");

    auto* press_cmd = app.add_subcommand("press", "Run, search or explain pressing sequences");
    press_cmd->add_option("file", file, "Graph JSON file")->required();
    auto* order_opt = press_cmd->add_option("--order", order_text, "Comma-separated 1-based vertex order");
    auto* search_flag = press_cmd->add_flag("--search", search, "Find the lexicographically first successful order");
    auto* ins_flag = press_cmd->add_flag("--instructions", instructions, "Print which vertices each press changes");
    press_cmd->add_option("--max-vertices", max_vertices, "Search bound on the vertex count");
    search_flag->excludes(order_opt);
    search_flag->excludes(ins_flag);
    ins_flag->needs(order_opt);

    auto* verify = app.add_subcommand("verify", "Run the verification battery");
    verify->add_option("--q-max", q_max, "Largest field order for the classification check");
    verify->add_option("--n-max", n_max, "Largest matrix size for the exhaustive suites");
    verify->add_option("--seed", seed, "Seed for the randomized suites (default: FFPD_SEED or built-in)");
    verify->add_option("--json", json_path, "Also write the report as JSON to this path");
    verify->add_flag("--counterexamples-only", counterexamples_only, "Skip the exhaustive suites");

    auto* serve = app.add_subcommand("serve", "Start the pressing session service");
    serve->add_option("--port", port, "TCP port (0 picks a free one)");
    serve->add_option("--host", host, "Listen address");
    serve->add_option("--snapshot-dir", snapshot_dir, "Directory for per-session JSON snapshots");
    serve->add_option("--ttl", ttl, "Idle session lifetime in seconds");
    serve->add_option("--allow-origin", allow_origin, "Value for Access-Control-Allow-Origin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field_info->parsed()) {
            const auto f = parse_field(field_text);
            const auto pos = positives(f);
            out << "field: " << f.literal() << "\n";
            out << "order: " << f.q() << "; characteristic: " << f.p() << "; degree: " << f.k() << "\n";
            out << "definite: " << (is_definite(f) ? "yes" : "no") << "; positives: ";
            for (std::size_t i = 0; i < pos.size() && i < 100; ++i) out << (i ? "," : "") << pos[i].to_string();
            if (pos.size() > 100) out << ",... (" << pos.size() << " total)";
            out << "\n";
        } else if (positives_cmd->parsed()) {
            out << elem_list(positives(parse_field(field_text))) << "\n";
        } else if (chol->parsed()) {
            const auto a = load_matrix(file);
            if (relaxed) {
                const auto c = cholesky_psd(a);
                print_matrix(out, c.L);
                out << "rank: " << c.rank << "\n";
            } else {
                print_matrix(out, cholesky(a).L);
            }
        } else if (ldu_cmd->parsed()) {
            const auto r = ldu(load_matrix(file));
            out << "L\n";
            print_matrix(out, r.L);
            out << "D\n";
            print_matrix(out, r.D);
            out << "U\n";
            print_matrix(out, r.U);
        } else if (pd->parsed()) {
            const auto a = load_matrix(file);
            if (is_positive_definite(a)) {
                out << "positive definite\n";
            } else {
                const auto k = *first_nonpositive_minor(a);
                out << "NOT positive definite (minor " << k + 1 << " = " << leading_minors(a)[k].to_string()
                    << " not positive)\n";
            }
        } else if (minors->parsed()) {
            out << elem_list(leading_minors(load_matrix(file))) << "\n";
        } else if (eigen->parsed()) {
            const auto a = load_matrix(file);
            out << "char_poly: " << elem_list(char_poly(a)) << "\n";
            out << "eigenvalues: " << elem_list(eigenvalues_in_field(a)) << "\n";
        } else if (gram->parsed()) {
            print_matrix(out, gram_from(load_matrix(file)));
        } else if (kron->parsed()) {
            print_matrix(out, kronecker(load_matrix(file), load_matrix(file_b)));
        } else if (had->parsed()) {
            print_matrix(out, hadamard(load_matrix(file), load_matrix(file_b)));
        } else if (frob->parsed()) {
            out << elem_to_json(frobenius_inner(load_matrix(file), load_matrix(file_b))).dump() << "\n";
        } else if (anti->parsed()) {
            print_matrix(out, anti_inverse(load_matrix(file)));
        } else if (iso->parsed()) {
            const auto v = isotropic_vector(load_matrix(file), bound);
            out << (v ? elem_list(*v) : "none") << "\n";
        } else if (press_cmd->parsed()) {
            const auto g = load_graph(file);
            if (search) {
                FindOrderOptions opts;
                opts.max_vertices = max_vertices;
                const auto found = find_order(g, opts);
                out << (found ? (found->empty() ? "(already cleared)" : format_vertices(*found)) : "none") << "\n";
            } else if (instructions) {
                const auto order = parse_order(order_text);
                const auto ins = instructions_from_cholesky(g, order);
                for (std::size_t i = 0; i < order.size(); ++i) out << order[i] + 1 << ": {" << format_vertices(ins[i]) << "}\n";
            } else if (order_opt->count() > 0) {
                const auto outcome = run_sequence(g, parse_order(order_text));
                if (outcome.status == PressStatus::Success) {
                    out << "SUCCESS\n";
                } else {
                    out << "STUCK";
                    if (outcome.stuck_vertex) out << " at " << *outcome.stuck_vertex + 1;
                    out << " after [" << format_vertices(outcome.steps_applied) << "]\n";
                    out << graph_to_json(outcome.final_state).dump() << "\n" << format_grid(outcome.final_state.weights());
                }
            } else {
                out << graph_to_json(g).dump() << "\n" << format_grid(g.weights());
                out << "pressable: " << format_vertices(g.pressable()) << "\n";
            }
        } else if (verify->parsed()) {
            const auto s = seed.value_or(default_seed());
            auto reports = verify_counterexamples();
            if (!counterexamples_only) {
                TheoremLimits limits;
                limits.q_max = q_max;
                limits.n_max = n_max;
                limits.seed = s;
                for (auto& r : verify_theorems(limits)) reports.push_back(std::move(r));
            }
            out << reports_to_text(reports);
            const bool ok = all_pass(reports);
            out << (ok ? "all checks passed" : "some checks FAILED") << " (seed " << s << ")\n";
            if (!json_path.empty()) {
                std::ofstream js(json_path);
                if (!js) throw Error(ErrorKind::ParseError, "cannot write " + json_path);
                js << reports_to_json(reports, s).dump(2) << "\n";
            }
            return ok ? 0 : 1;
        } else if (serve->parsed()) {
            SessionStore::Options opts;
            opts.ttl = std::chrono::seconds(ttl);
            if (!snapshot_dir.empty()) opts.snapshot_dir = snapshot_dir;
            SessionStore store(std::move(opts));
            PressLabServer server(store, allow_origin);
            const int bound_port = server.bind(host, port);
            if (bound_port < 0) throw Error(ErrorKind::LimitExceeded, "cannot bind " + host + ":" + std::to_string(port));
            g_server = &server;
            std::signal(SIGINT, [](int) {
                if (g_server) g_server->stop();
            });
            std::signal(SIGTERM, [](int) {
                if (g_server) g_server->stop();
            });
            out << "listening on http://" << host << ":" << bound_port << std::endl;
            server.listen();
            g_server = nullptr;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ffpd
