#include "csamp/game.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "csamp/errors.hpp"
#include "csamp/swappers.hpp"

namespace csamp {

namespace {

// Per-round seed streams derived from the master seed.
std::uint64_t round_key_seed(std::uint64_t master, int round) {
    return RandomSource::derive_seed(master, 3ULL * round);
}
std::uint64_t referee_rng_seed(std::uint64_t master, int round) {
    return RandomSource::derive_seed(master, 3ULL * round + 1);
}
std::uint64_t player_rng_seed(std::uint64_t master, int round) {
    return RandomSource::derive_seed(master, 3ULL * round + 2);
}

std::uint64_t fnv1a64_update(std::uint64_t h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xFF;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string record_digest(int round, std::uint64_t key_or_seed,
                          const std::vector<std::uint64_t>& samples,
                          std::uint64_t candidate) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    h = fnv1a64_update(h, static_cast<std::uint64_t>(round));
    h = fnv1a64_update(h, key_or_seed);
    h = fnv1a64_update(h, samples.size());
    for (std::uint64_t s : samples) h = fnv1a64_update(h, s);
    h = fnv1a64_update(h, candidate);
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string to_hex(std::uint64_t value) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(value));
    return buf;
}

std::uint64_t from_hex(const std::string& text) {
    return std::stoull(text, nullptr, 16);
}

std::unique_ptr<PermutationOracle> make_round_oracle(const GameConfig& config,
                                                     std::uint64_t key_or_seed) {
    if (config.backend == Backend::kSaes)
        return make_prp_oracle(SaesKey{static_cast<std::uint16_t>(key_or_seed)});
    return make_random_oracle(config.n, key_or_seed);
}

std::vector<std::uint64_t> draw_classical_samples(const PermutationOracle& oracle,
                                                  int count, RandomSource& rng) {
    // Uniform draws from S with replacement, without materializing S:
    // a uniform preimage index through P.
    const std::uint64_t half = std::uint64_t{1} << (oracle.bits() - 1);
    std::vector<std::uint64_t> samples;
    samples.reserve(count);
    for (int i = 0; i < count; ++i)
        samples.push_back(oracle.forward(rng.uniform_below(half)));
    return samples;
}

}  // namespace

const char* to_string(PlayerKind kind) {
    switch (kind) {
        case PlayerKind::kQuantumComplement: return "quantum_complement";
        case PlayerKind::kQuantumZeroError: return "quantum_zero_error";
        case PlayerKind::kClassicalRandomGuess: return "classical_random_guess";
        case PlayerKind::kCouponCollector: return "coupon_collector";
    }
    throw std::invalid_argument("unknown player kind");
}

const char* to_string(Backend backend) {
    switch (backend) {
        case Backend::kSaes: return "saes";
        case Backend::kRandomTable: return "random_table";
    }
    throw std::invalid_argument("unknown backend");
}

PlayerKind player_kind_from_string(const std::string& name) {
    if (name == "quantum_complement") return PlayerKind::kQuantumComplement;
    if (name == "quantum_zero_error") return PlayerKind::kQuantumZeroError;
    if (name == "classical_random_guess") return PlayerKind::kClassicalRandomGuess;
    if (name == "coupon_collector") return PlayerKind::kCouponCollector;
    throw std::invalid_argument("unknown player kind: " + name);
}

Backend backend_from_string(const std::string& name) {
    if (name == "saes") return Backend::kSaes;
    if (name == "random_table") return Backend::kRandomTable;
    throw std::invalid_argument("unknown backend: " + name);
}

bool is_quantum(PlayerKind kind) {
    return kind == PlayerKind::kQuantumComplement ||
           kind == PlayerKind::kQuantumZeroError ||
           kind == PlayerKind::kCouponCollector;
}

void GameConfig::validate() const {
    if (rounds < 1) throw std::invalid_argument("game: rounds must be >= 1");
    if (samples_per_round < 1)
        throw std::invalid_argument("game: samples per round must be >= 1");
    if (backend == Backend::kSaes && n != 16)
        throw std::invalid_argument("game: the saes backend requires n = 16");
    if (n < 1) throw std::invalid_argument("game: n must be >= 1");
    if (n > 20) throw ScaleError("game: n > 20 is out of range");
}

int GameTranscript::wins() const {
    int count = 0;
    for (const auto& r : rounds) count += r.verdict;
    return count;
}

bool GameTranscript::all_won() const {
    return wins() == static_cast<int>(rounds.size());
}

double GameTranscript::win_rate() const {
    if (rounds.empty()) return 0.0;
    return static_cast<double>(wins()) / static_cast<double>(rounds.size());
}

RefereeRound referee_round(const GameConfig& config, int round_index) {
    config.validate();
    if (round_index < 0 || round_index >= config.rounds)
        throw std::out_of_range("referee_round: round index out of range");

    RefereeRound round;
    const std::uint64_t seed = round_key_seed(config.master_seed, round_index);
    round.key_or_seed =
        config.backend == Backend::kSaes ? (seed & 0xFFFF) : seed;
    round.oracle = make_round_oracle(config, round.key_or_seed);

    round.payload.n = config.n;
    round.payload.k = std::uint64_t{1} << (config.n - 1);
    round.payload.quantum = is_quantum(config.player_kind);
    RandomSource referee_rng(referee_rng_seed(config.master_seed, round_index));
    if (round.payload.quantum) {
        const SubsetSpec spec = subset_from_permutation(*round.oracle);
        const StateVector sample = make_subset_state(spec);
        round.payload.quantum_samples.assign(config.samples_per_round, sample);
    } else {
        round.payload.classical_samples =
            draw_classical_samples(*round.oracle, config.samples_per_round, referee_rng);
    }
    return round;
}

std::uint64_t play_round(const RoundPayload& payload, PlayerKind kind,
                         RandomSource& rng) {
    const std::uint64_t domain = std::uint64_t{1} << payload.n;
    switch (kind) {
        case PlayerKind::kQuantumComplement: {
            if (payload.quantum_samples.empty())
                throw std::invalid_argument("play_round: quantum player needs quantum samples");
            const StateVector swapped =
                apply_diffusion(payload.quantum_samples.front());
            return measure_all(swapped, rng);
        }
        case PlayerKind::kQuantumZeroError: {
            if (payload.quantum_samples.empty())
                throw std::invalid_argument("play_round: quantum player needs quantum samples");
            const SwapAttempt attempt = repeated_zero_error_swap(
                payload.quantum_samples, payload.k, rng);
            if (attempt.flag == 0) return *attempt.sample;
            return rng.uniform_below(domain);  // all flags failed; stay total
        }
        case PlayerKind::kCouponCollector: {
            if (payload.quantum_samples.empty())
                throw std::invalid_argument("play_round: quantum player needs quantum samples");
            return coupon_collector_sample(payload.quantum_samples.front(), rng);
        }
        case PlayerKind::kClassicalRandomGuess: {
            if (payload.quantum)
                throw std::invalid_argument("play_round: classical player needs classical samples");
            std::vector<std::uint64_t> seen = payload.classical_samples;
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            std::uint64_t guess = rng.uniform_below(domain - seen.size());
            for (std::uint64_t s : seen) {
                if (s > guess) break;
                ++guess;
            }
            return guess;
        }
    }
    throw std::invalid_argument("play_round: unknown player kind");
}

GameTranscript run_game(const GameConfig& config) {
    config.validate();
    GameTranscript transcript;
    transcript.config = config;
    transcript.rounds.reserve(config.rounds);
    for (int t = 0; t < config.rounds; ++t) {
        RefereeRound round = referee_round(config, t);
        RandomSource player_rng(player_rng_seed(config.master_seed, t));
        const std::uint64_t candidate =
            play_round(round.payload, config.player_kind, player_rng);

        RoundRecord record;
        record.round = t;
        record.key_or_seed = round.key_or_seed;
        record.samples = round.payload.quantum ? std::vector<std::uint64_t>{}
                                               : round.payload.classical_samples;
        record.candidate = candidate;
        record.verdict = verify_complement(*round.oracle, candidate);
        record.digest =
            record_digest(t, record.key_or_seed, record.samples, candidate);
        transcript.rounds.push_back(std::move(record));
    }
    return transcript;
}

bool verify_transcript(const GameTranscript& transcript) {
    const GameConfig& config = transcript.config;
    config.validate();
    if (static_cast<int>(transcript.rounds.size()) != config.rounds) return false;

    for (int t = 0; t < config.rounds; ++t) {
        const RoundRecord& record = transcript.rounds[t];
        if (record.round != t) return false;

        const std::uint64_t seed = round_key_seed(config.master_seed, t);
        const std::uint64_t expected_key =
            config.backend == Backend::kSaes ? (seed & 0xFFFF) : seed;
        if (record.key_or_seed != expected_key) return false;

        if (record.digest !=
            record_digest(t, record.key_or_seed, record.samples, record.candidate))
            return false;

        const auto oracle = make_round_oracle(config, expected_key);
        if (!is_quantum(config.player_kind)) {
            RandomSource referee_rng(referee_rng_seed(config.master_seed, t));
            if (record.samples !=
                draw_classical_samples(*oracle, config.samples_per_round, referee_rng))
                return false;
        }
        if (record.verdict != verify_complement(*oracle, record.candidate))
            return false;
    }
    return true;
}

bool verify_transcript(const GameTranscript& transcript, const GameConfig& expected) {
    const GameConfig& c = transcript.config;
    if (c.n != expected.n || c.rounds != expected.rounds ||
        c.samples_per_round != expected.samples_per_round ||
        c.player_kind != expected.player_kind || c.backend != expected.backend ||
        c.master_seed != expected.master_seed)
        return false;
    return verify_transcript(transcript);
}

void write_transcript(const GameTranscript& transcript, std::ostream& out) {
    const GameConfig& config = transcript.config;
    nlohmann::json header{{"type", "header"},
                          {"n", config.n},
                          {"rounds", config.rounds},
                          {"samples_per_round", config.samples_per_round},
                          {"player", to_string(config.player_kind)},
                          {"backend", to_string(config.backend)},
                          {"master_seed", to_hex(config.master_seed)}};
    out << header.dump() << '\n';

    const char* key_field =
        config.backend == Backend::kSaes ? "key" : "perm_seed";
    for (const auto& record : transcript.rounds) {
        nlohmann::json j{{"type", "round"},
                         {"round", record.round},
                         {key_field, to_hex(record.key_or_seed)},
                         {"candidate", to_hex(record.candidate)},
                         {"verdict", record.verdict},
                         {"digest", record.digest}};
        if (!record.samples.empty()) {
            auto& samples = j["samples"] = nlohmann::json::array();
            for (std::uint64_t s : record.samples) samples.push_back(to_hex(s));
        }
        out << j.dump() << '\n';
    }

    nlohmann::json summary{
        {"type", "summary"},
        {"wins", transcript.wins()},
        {"rounds", static_cast<int>(transcript.rounds.size())},
        {"win_rate", transcript.win_rate()},
        {"advantage_threshold", transcript.advantage_threshold()},
        {"beats_threshold", transcript.win_rate() >= transcript.advantage_threshold()}};
    out << summary.dump() << '\n';
}

GameTranscript read_transcript(std::istream& in) {
    GameTranscript transcript;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        const std::string type = j.at("type").get<std::string>();
        if (type == "header") {
            if (have_header)
                throw std::invalid_argument("transcript: duplicate header record");
            transcript.config.n = j.at("n").get<int>();
            transcript.config.rounds = j.at("rounds").get<int>();
            transcript.config.samples_per_round = j.at("samples_per_round").get<int>();
            transcript.config.player_kind =
                player_kind_from_string(j.at("player").get<std::string>());
            transcript.config.backend =
                backend_from_string(j.at("backend").get<std::string>());
            transcript.config.master_seed = from_hex(j.at("master_seed").get<std::string>());
            have_header = true;
        } else if (type == "round") {
            if (!have_header)
                throw std::invalid_argument("transcript: round before header");
            RoundRecord record;
            record.round = j.at("round").get<int>();
            const char* key_field =
                transcript.config.backend == Backend::kSaes ? "key" : "perm_seed";
            record.key_or_seed = from_hex(j.at(key_field).get<std::string>());
            if (j.contains("samples"))
                for (const auto& s : j.at("samples"))
                    record.samples.push_back(from_hex(s.get<std::string>()));
            record.candidate = from_hex(j.at("candidate").get<std::string>());
            record.verdict = j.at("verdict").get<int>();
            record.digest = j.at("digest").get<std::string>();
            transcript.rounds.push_back(std::move(record));
        } else if (type == "summary") {
            // Recomputed on demand; nothing to restore.
        } else {
            throw std::invalid_argument("transcript: unknown record type " + type);
        }
    }
    if (!have_header) throw std::invalid_argument("transcript: missing header record");
    return transcript;
}

}  // namespace csamp
