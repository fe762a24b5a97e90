#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmaj/bounds.hpp"
#include "kmaj/core.hpp"
#include "kmaj/io.hpp"
#include "kmaj/solver.hpp"
#include "kmaj/triangle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kmaj::InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kmaj::InputError("cannot write " + path);
    out << content;
}

kmaj::SolverOptions solver_options(int threads) {
    kmaj::SolverOptions opts;
    opts.threads = threads;
    if (const char* cap = std::getenv("KMAJ_MEMO_CAP"))
        opts.memo_cap = static_cast<std::size_t>(std::stoull(cap));
    return opts;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_upper(double upper) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(4) << upper;
    return ss.str();
}

int cmd_gen_triangle(int r, const std::string& out_base) {
    auto c = kmaj::make_triangle_construction(r);
    auto d = kmaj::build_majority_digraph(c.profile);
    write_file(out_base + ".profile.json", kmaj::profile_to_json(c.profile));
    write_file(out_base + ".digraph.json", kmaj::digraph_to_json(d));
    write_file(out_base + ".dot", kmaj::export_dot(d, c.points));
    std::cout << "r=" << r << " n=" << d.n() << " written to " << out_base
              << ".{profile.json,digraph.json,dot}\n";
    return kExitOk;
}

int cmd_gen_random(int n, int k, std::uint64_t seed, const std::string& out) {
    auto p = kmaj::random_profile(n, k, seed);
    std::string text = kmaj::profile_to_json(p);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return kExitOk;
}

int cmd_solve(const std::string& in, bool stats, bool oracle, int threads,
              const std::string& out) {
    auto profile = kmaj::profile_from_json(read_file(in));
    auto d = kmaj::build_majority_digraph(profile);

    const auto start = std::chrono::steady_clock::now();
    kmaj::SolveResult res;
    bool used_oracle = oracle || !kmaj::is_tournament(d);
    if (used_oracle)
        res = kmaj::brute_force_max_acyclic(d);
    else
        res = kmaj::max_acyclic_set(d, solver_options(threads));
    const double ms = elapsed_ms(start);

    std::cout << "size: " << res.size << "\n";
    std::cout << "witness:";
    for (int v : res.witness.members()) std::cout << " " << v;
    std::cout << "\n";
    if (stats)
        std::cout << "nodes_explored: " << res.nodes_explored
                  << "\nmemo_hits: " << res.memo_hits << "\ntime_ms: " << ms
                  << "\n";
    if (!out.empty()) {
        nlohmann::json j;
        j["size"] = res.size;
        j["witness"] = res.witness.members();
        j["oracle"] = used_oracle;
        if (stats) {
            j["stats"]["nodes_explored"] = res.nodes_explored;
            j["stats"]["memo_hits"] = res.memo_hits;
        }
        write_file(out, j.dump(2) + "\n");
    }
    return kExitOk;
}

int run_reports(int r_max, const std::string& out, bool with_time,
                bool console) {
    std::ostringstream csv;
    csv << "n,r,achieved,upper_bound,lower_bound" << (with_time ? ",time_ms" : "")
        << "\n";
    if (console)
        std::cout << std::setw(4) << "n" << std::setw(4) << "r" << std::setw(10)
                  << "achieved" << std::setw(12) << "upper" << std::setw(8)
                  << "lower" << std::setw(12) << "satisfied" << "\n";
    bool all_ok = true;
    for (int r = 1; r <= r_max; ++r) {
        const auto start = std::chrono::steady_clock::now();
        auto rep = kmaj::verify_construction(r, r_max);
        const double ms = elapsed_ms(start);
        all_ok = all_ok && rep.satisfied;
        csv << rep.n << "," << rep.r << "," << rep.achieved << ","
            << format_upper(rep.upper) << "," << rep.lower;
        if (with_time) csv << "," << format_upper(ms);
        csv << "\n";
        if (console)
            std::cout << std::setw(4) << rep.n << std::setw(4) << rep.r
                      << std::setw(10) << rep.achieved << std::setw(12)
                      << format_upper(rep.upper) << std::setw(8) << rep.lower
                      << std::setw(12) << (rep.satisfied ? "yes" : "NO") << "\n";
    }
    if (!out.empty())
        write_file(out, csv.str());
    else if (!console)
        std::cout << csv.str();
    return all_ok ? kExitOk : kExitVerification;
}

int cmd_es(const std::string& in, int r, int s) {
    auto profile = kmaj::profile_from_json(read_file(in));
    if (profile.k() != 2)
        throw kmaj::InputError("es needs a profile with exactly two orders");
    auto w = kmaj::erdos_szekeres_witness(profile.orders[0], profile.orders[1],
                                          r, s);
    std::cout << "kind: "
              << (w.kind == kmaj::WitnessKind::consistent ? "consistent"
                                                          : "neutral")
              << "\nsize: " << w.size() << "\nmembers:";
    for (int v : w.members) std::cout << " " << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_search(int n, int k, std::uint64_t seed, std::uint64_t iters,
               int threads, const std::string& out) {
    auto res =
        kmaj::search_min_acyclic(n, k, seed, iters, solver_options(threads));
    std::cout << "min_acyclic: " << res.best_size << " over " << res.iterations
              << " profiles\n";
    if (!out.empty())
        write_file(out, kmaj::profile_to_json(res.best_profile));
    if (res.anomaly) {
        std::cout << "ANOMALY: a(T) = " << res.best_size
                  << " below the cited lower bound ceil(sqrt(n)) = "
                  << kmaj::ceil_sqrt(n) << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_export(const std::string& in, const std::string& out) {
    const std::string text = read_file(in);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw kmaj::InputError(std::string("malformed JSON: ") + e.what());
    }
    kmaj::MajorityDigraph d = j.contains("orders")
        ? kmaj::build_majority_digraph(kmaj::profile_from_json(text))
        : kmaj::digraph_from_json(text);
    std::string dot = kmaj::export_dot(d);
    if (out.empty())
        std::cout << dot;
    else
        write_file(out, dot);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-majority tournaments: construction, exact solving, bounds"};
    app.require_subcommand(1);

    int r = 1, n = 1, k = 3, es_r = 1, es_s = 1, r_max = 8, threads = 1;
    std::uint64_t seed = 0, iters = 100;
    std::string in_path, out_path;
    bool stats = false, oracle = false;

    auto* gen_tri = app.add_subcommand("gen-triangle",
                                       "Write the triangle tournament G_r");
    gen_tri->add_option("--r", r, "side parameter")->required();
    gen_tri->add_option("--out", out_path, "output base path")->required();

    auto* gen_rand =
        app.add_subcommand("gen-random", "Write a seeded random profile");
    gen_rand->add_option("--n", n)->required();
    gen_rand->add_option("--k", k)->required();
    gen_rand->add_option("--seed", seed);
    gen_rand->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "Maximum acyclic set of a profile");
    solve->add_option("--in", in_path)->required();
    solve->add_option("--out", out_path, "result JSON path");
    solve->add_option("--threads", threads);
    solve->add_flag("--stats", stats);
    solve->add_flag("--oracle", oracle, "force the brute-force oracle");

    auto* verify =
        app.add_subcommand("verify", "Check a(G_r) against the bounds");
    verify->add_option("--r-max", r_max);
    verify->add_option("--out", out_path, "CSV path");

    auto* sweep = app.add_subcommand("sweep", "CSV of bound rows with timings");
    sweep->add_option("--r-max", r_max);
    sweep->add_option("--out", out_path, "CSV path");

    auto* es = app.add_subcommand("es", "Erdos-Szekeres witness for a 2-profile");
    es->add_option("--in", in_path)->required();
    es->add_option("--r", es_r)->required();
    es->add_option("--s", es_s)->required();

    auto* search = app.add_subcommand(
        "search", "Random-restart search for low-a(T) tournaments");
    search->add_option("--n", n)->required();
    search->add_option("--k", k)->required();
    search->add_option("--seed", seed);
    search->add_option("--iters", iters);
    search->add_option("--threads", threads);
    search->add_option("--out", out_path, "best profile JSON path");

    auto* exp = app.add_subcommand("export", "DOT export of a profile or digraph");
    exp->add_option("--in", in_path)->required();
    exp->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (gen_tri->parsed()) return cmd_gen_triangle(r, out_path);
        if (gen_rand->parsed()) return cmd_gen_random(n, k, seed, out_path);
        if (solve->parsed())
            return cmd_solve(in_path, stats, oracle, threads, out_path);
        if (verify->parsed()) return run_reports(r_max, out_path, false, true);
        if (sweep->parsed()) return run_reports(r_max, out_path, true, false);
        if (es->parsed()) return cmd_es(in_path, es_r, es_s);
        if (search->parsed())
            return cmd_search(n, k, seed, iters, threads, out_path);
        if (exp->parsed()) return cmd_export(in_path, out_path);
    } catch (const kmaj::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const kmaj::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
