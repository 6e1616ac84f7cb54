#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csamp/classical.hpp"
#include "csamp/errors.hpp"
#include "csamp/game.hpp"
#include "csamp/prp.hpp"
#include "csamp/swappers.hpp"
#include "csamp/version.hpp"

namespace {

// Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
// 3 scale/range error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::uint64_t fnv1a64_bytes(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
}

/// Sidecar manifest making every output auditable: command, parameters,
/// seed, version, and a digest of each produced file.
void write_manifest(const std::string& command, const nlohmann::json& parameters,
                    std::uint64_t master_seed, const std::string& out_path,
                    const std::string& contents) {
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(fnv1a64_bytes(contents)));
    nlohmann::json manifest{
        {"command", command},
        {"parameters", parameters},
        {"master_seed", master_seed},
        {"version", csamp::kVersion},
        {"outputs", {{{"path", out_path}, {"fnv1a64", digest}}}},
    };
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

std::uint16_t parse_hex16(const std::string& text, const char* what) {
    std::string digits = text;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0)
        digits = digits.substr(2);
    if (digits.size() != 4 || digits.find_first_not_of("0123456789abcdefABCDEF") !=
                                  std::string::npos)
        throw CLI::ValidationError(std::string(what) + " must be a 4-hex-digit string");
    return static_cast<std::uint16_t>(std::stoul(digits, nullptr, 16));
}

int cmd_sweep_beta(int n, int trials, std::uint64_t seed,
                   const std::vector<double>& beta_grid,
                   const std::vector<std::uint64_t>& k_values,
                   const std::string& format, const std::string& out_path) {
    if (!beta_grid.empty() && !k_values.empty())
        throw CLI::ValidationError("--beta and --k are mutually exclusive");
    std::vector<csamp::SuccessCurveRow> rows;
    if (!beta_grid.empty()) {
        rows = csamp::success_curves(n, beta_grid, trials, seed);
    } else if (!k_values.empty()) {
        std::vector<double> betas;
        const double domain = static_cast<double>(std::uint64_t{1} << n);
        for (std::uint64_t k : k_values) betas.push_back(static_cast<double>(k) / domain - 0.5);
        rows = csamp::success_curves(n, betas, trials, seed);
    } else {
        rows = csamp::success_curves(n, trials, seed);
    }

    std::ostringstream body;
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows)
            out.push_back({{"beta", row.beta},
                           {"K", row.k},
                           {"analytic_cs", row.analytic_cs},
                           {"analytic_ze", row.analytic_ze},
                           {"analytic_cc", row.analytic_cc},
                           {"analytic_cl", row.analytic_cl},
                           {"simulated_cs", row.simulated_cs},
                           {"simulated_ze", row.simulated_ze},
                           {"simulated_cc", row.simulated_cc},
                           {"simulated_cl", row.simulated_cl},
                           {"trials", row.trials},
                           {"seed", row.seed}});
        body << out.dump(2) << '\n';
    } else {
        body << "beta,K,analytic_cs,analytic_ze,analytic_cc,analytic_cl,"
                "simulated_cs,simulated_ze,simulated_cc,simulated_cl,trials,seed\n";
        for (const auto& row : rows) {
            body << format_double(row.beta) << ',' << row.k << ','
                 << format_double(row.analytic_cs) << ',' << format_double(row.analytic_ze)
                 << ',' << format_double(row.analytic_cc) << ','
                 << format_double(row.analytic_cl) << ',' << format_double(row.simulated_cs)
                 << ',' << format_double(row.simulated_ze) << ','
                 << format_double(row.simulated_cc) << ',' << format_double(row.simulated_cl)
                 << ',' << row.trials << ',' << row.seed << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        write_file(out_path, body.str());
        write_manifest("sweep-beta",
                       {{"n", n}, {"trials", trials}, {"seed", seed}, {"out", out_path}},
                       seed, out_path, body.str());
        std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    }
    return kExitOk;
}

int cmd_bounds(int n, double delta, int d_max, std::uint64_t k_for_samples,
               const std::string& format, const std::string& out_path) {
    const std::uint64_t domain = std::uint64_t{1} << n;
    if (k_for_samples == 0) k_for_samples = domain / 2;

    // Three fixed-schema tables: the query lower bound over K, the
    // draw-then-guess success over d, and the occupancy distribution at
    // the final d. Exact values ride along as reduced fractions.
    struct Row {
        const char* table;
        std::uint64_t k;
        double delta = 0.0;
        int d = 0;
        int q = 0;
        std::string exact;
        double value = 0.0;
        bool has_delta = false, has_d = false, has_q = false;
    };
    std::vector<Row> rows;
    for (std::uint64_t k = 1; k < domain; ++k) {
        Row row{"query_lower_bound", k};
        row.delta = delta;
        row.has_delta = true;
        row.value = csamp::lower_bound_queries(domain, k, delta);
        rows.push_back(std::move(row));
    }
    for (int d = 1; d <= d_max; ++d) {
        Row row{"sample_success", k_for_samples};
        row.d = d;
        row.has_d = true;
        row.exact = csamp::sample_complexity_success_exact(domain, k_for_samples, d);
        row.value = csamp::sample_complexity_success(domain, k_for_samples, d);
        rows.push_back(std::move(row));
    }
    const auto dist = csamp::unique_draw_distribution(k_for_samples, d_max);
    for (std::size_t q = 1; q < dist.probabilities.size(); ++q) {
        Row row{"unique_draws", k_for_samples};
        row.d = d_max;
        row.q = static_cast<int>(q);
        row.has_d = row.has_q = true;
        row.exact = dist.exact[q];
        row.value = dist.probabilities[q];
        rows.push_back(std::move(row));
    }

    std::ostringstream body;
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j{{"table", row.table}, {"n", n}, {"K", row.k},
                             {"value", row.value}};
            if (row.has_delta) j["delta"] = row.delta;
            if (row.has_d) j["d"] = row.d;
            if (row.has_q) j["q"] = row.q;
            if (!row.exact.empty()) j["exact"] = row.exact;
            out.push_back(std::move(j));
        }
        body << out.dump(2) << '\n';
    } else {
        body << "table,n,K,delta,d,q,exact,value\n";
        for (const auto& row : rows) {
            body << row.table << ',' << n << ',' << row.k << ',';
            if (row.has_delta) body << format_double(row.delta);
            body << ',';
            if (row.has_d) body << row.d;
            body << ',';
            if (row.has_q) body << row.q;
            body << ',' << row.exact << ',' << format_double(row.value) << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        write_file(out_path, body.str());
        write_manifest("bounds",
                       {{"n", n},
                        {"delta", delta},
                        {"d", d_max},
                        {"k", k_for_samples},
                        {"out", out_path}},
                       0, out_path, body.str());
        std::cout << "wrote " << out_path << '\n';
    }
    return kExitOk;
}

int cmd_game(const csamp::GameConfig& config, const std::string& out_path) {
    const csamp::GameTranscript transcript = csamp::run_game(config);
    std::ostringstream body;
    csamp::write_transcript(transcript, body);
    if (!out_path.empty()) {
        write_file(out_path, body.str());
        write_manifest("game",
                       {{"n", config.n},
                        {"rounds", config.rounds},
                        {"samples", config.samples_per_round},
                        {"player", csamp::to_string(config.player_kind)},
                        {"backend", csamp::to_string(config.backend)},
                        {"seed", config.master_seed},
                        {"out", out_path}},
                       config.master_seed, out_path, body.str());
    }
    const double rate = transcript.win_rate();
    const int r = static_cast<int>(transcript.rounds.size());
    // Binomial std error; 0 when the rate is degenerate.
    const double stderr_rate = std::sqrt(std::max(rate * (1.0 - rate), 0.0) / r);
    std::cout << "player=" << csamp::to_string(config.player_kind)
              << " backend=" << csamp::to_string(config.backend) << " n=" << config.n
              << " rounds=" << r << " samples=" << config.samples_per_round
              << " seed=" << config.master_seed << '\n';
    std::cout << "wins=" << transcript.wins() << " win_rate=" << format_double(rate)
              << " ci95=" << format_double(1.96 * stderr_rate)
              << " advantage_threshold=" << format_double(transcript.advantage_threshold())
              << " beats_threshold=" << (rate >= transcript.advantage_threshold())
              << '\n';
    if (!out_path.empty()) std::cout << "transcript=" << out_path << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& in_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open transcript: " + in_path);
    const csamp::GameTranscript transcript = csamp::read_transcript(in);
    if (csamp::verify_transcript(transcript)) {
        std::cout << "verified: " << transcript.wins() << "/"
                  << transcript.rounds.size() << " rounds won\n";
        return kExitOk;
    }
    std::cout << "verification FAILED\n";
    return kExitVerifyFailed;
}

int cmd_saes(const std::string& key_hex, const std::string& block_hex,
             const std::string& direction) {
    const std::uint16_t key = parse_hex16(key_hex, "--key");
    const std::uint16_t block = parse_hex16(block_hex, "--block");
    const std::uint16_t result = direction == "dec" ? csamp::saes_decrypt(key, block)
                                                    : csamp::saes_encrypt(key, block);
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04x", result);
    std::cout << buf << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complement sampling toolkit: swapper circuits, classical "
                 "bounds, and the referee/player advantage game"};
    app.require_subcommand(1);
    app.set_version_flag("--version", csamp::kVersion);

    // sweep-beta
    auto* sweep = app.add_subcommand(
        "sweep-beta", "single-sample success curves over all subset sizes");
    int sweep_n = 4;
    int sweep_trials = 2000;
    std::uint64_t sweep_seed = 1;
    std::vector<double> sweep_betas;
    std::vector<std::uint64_t> sweep_ks;
    std::string sweep_format = "csv";
    std::string sweep_out;
    sweep->add_option("--n", sweep_n, "number of qubits (<= 12)")->required();
    sweep->add_option("--trials", sweep_trials, "Monte Carlo trials per subset size");
    sweep->add_option("--seed", sweep_seed, "master seed");
    sweep->add_option("--beta", sweep_betas,
                      "restrict to these beta values (else every K)");
    sweep->add_option("--k", sweep_ks, "restrict to these subset sizes");
    sweep->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_out, "output path (stdout if omitted)");

    // bounds
    auto* bounds = app.add_subcommand(
        "bounds", "query lower bounds and draw-then-guess success rates");
    int bounds_n = 8;
    double bounds_delta = 1.0 / 6.0;
    int bounds_d = 16;
    std::uint64_t bounds_k = 0;
    std::string bounds_format = "csv";
    std::string bounds_out;
    bounds->add_option("--n", bounds_n, "number of bits")->required();
    bounds->add_option("--delta", bounds_delta, "required advantage over 1/2");
    bounds->add_option("--d", bounds_d, "max draw count for the sample table");
    bounds->add_option("--k", bounds_k, "subset size for the sample table (default N/2)");
    bounds->add_option("--format", bounds_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bounds_out, "output path (stdout if omitted)");

    // game
    auto* game = app.add_subcommand("game", "run the referee/player game");
    csamp::GameConfig config;
    std::string game_player = "quantum_complement";
    std::string game_backend = "saes";
    std::string game_out;
    game->add_option("--n", config.n, "number of bits (16 for saes)");
    game->add_option("--rounds", config.rounds, "number of rounds");
    game->add_option("--samples", config.samples_per_round, "samples per round (j)");
    game->add_option("--player", game_player,
                     "quantum_complement | quantum_zero_error | "
                     "classical_random_guess | coupon_collector")
        ->check(CLI::IsMember({"quantum_complement", "quantum_zero_error",
                               "classical_random_guess", "coupon_collector"}));
    game->add_option("--backend", game_backend, "saes | random_table")
        ->check(CLI::IsMember({"saes", "random_table"}));
    game->add_option("--seed", config.master_seed, "master seed");
    game->add_option("--out", game_out, "transcript path (JSON lines)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a game transcript");
    std::string verify_in;
    verify->add_option("--in", verify_in, "transcript path")->required();

    // saes
    auto* saes = app.add_subcommand("saes", "evaluate the S-AES permutation");
    std::string saes_key, saes_block, saes_dir = "enc";
    saes->add_option("--key", saes_key, "16-bit key, 4 hex digits")->required();
    saes->add_option("--block", saes_block, "16-bit block, 4 hex digits")->required();
    saes->add_option("--direction", saes_dir, "enc | dec")
        ->check(CLI::IsMember({"enc", "dec"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed())
            return cmd_sweep_beta(sweep_n, sweep_trials, sweep_seed, sweep_betas,
                                  sweep_ks, sweep_format, sweep_out);
        if (bounds->parsed())
            return cmd_bounds(bounds_n, bounds_delta, bounds_d, bounds_k,
                              bounds_format, bounds_out);
        if (game->parsed()) {
            config.player_kind = csamp::player_kind_from_string(game_player);
            config.backend = csamp::backend_from_string(game_backend);
            return cmd_game(config, game_out);
        }
        if (verify->parsed()) return cmd_verify(verify_in);
        if (saes->parsed()) return cmd_saes(saes_key, saes_block, saes_dir);
    } catch (const csamp::ScaleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
