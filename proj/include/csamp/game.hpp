#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "csamp/prp.hpp"
#include "csamp/rng.hpp"
#include "csamp/statevector.hpp"
#include "csamp/subset.hpp"

namespace csamp {

enum class PlayerKind {
    kQuantumComplement,
    kQuantumZeroError,
    kClassicalRandomGuess,
    kCouponCollector,
};

enum class Backend {
    kSaes,         // n = 16 only
    kRandomTable,  // n <= 20
};

const char* to_string(PlayerKind kind);
const char* to_string(Backend backend);
PlayerKind player_kind_from_string(const std::string& name);
Backend backend_from_string(const std::string& name);
bool is_quantum(PlayerKind kind);

struct GameConfig {
    int n = 16;
    int rounds = 1;
    int samples_per_round = 1;  // j
    PlayerKind player_kind = PlayerKind::kQuantumComplement;
    Backend backend = Backend::kSaes;
    std::uint64_t master_seed = 0;

    void validate() const;  // throws invalid_argument / ScaleError
};

/// What the referee hands the player in one round. n and K are public game
/// parameters; the subset itself stays with the referee.
struct RoundPayload {
    int n = 0;
    std::uint64_t k = 0;
    bool quantum = false;
    std::vector<std::uint64_t> classical_samples;  // j draws, with replacement
    std::vector<StateVector> quantum_samples;      // j copies of |S>
};

struct RefereeRound {
    std::uint64_t key_or_seed = 0;  // S-AES key (low 16 bits) or table seed
    std::unique_ptr<PermutationOracle> oracle;  // the hidden verifier
    RoundPayload payload;
};

struct RoundRecord {
    int round = 0;
    std::uint64_t key_or_seed = 0;
    std::vector<std::uint64_t> samples;  // classical payload only
    std::uint64_t candidate = 0;
    int verdict = 0;
    /// fnv1a64 over (round, key_or_seed, samples, candidate); makes any
    /// record tamper detectable even when the forged candidate happens to
    /// verify.
    std::string digest;
};

struct GameTranscript {
    GameConfig config;
    std::vector<RoundRecord> rounds;

    int wins() const;
    bool all_won() const;
    double win_rate() const;
    /// Reported advantage bar: 1/2 + 1/n.
    double advantage_threshold() const { return 0.5 + 1.0 / config.n; }
};

/// Derives the round instance from (master_seed, round_index) and prepares
/// the payload for the configured player kind. Deterministic: identical
/// inputs give identical payloads.
RefereeRound referee_round(const GameConfig& config, int round_index);

/// The player's move for one round; rng is the player's own randomness.
std::uint64_t play_round(const RoundPayload& payload, PlayerKind kind,
                         RandomSource& rng);

/// Plays all rounds with per-round derived keys and seeds.
GameTranscript run_game(const GameConfig& config);

/// Re-derives every round's permutation from the embedded config, checks
/// record digests, and recomputes each verdict from the stored candidate.
/// Cost is O(rounds) permutation evaluations.
bool verify_transcript(const GameTranscript& transcript);
/// Same, but first requires the transcript's config to match `expected`.
bool verify_transcript(const GameTranscript& transcript, const GameConfig& expected);

/// JSON-lines serialization: a header record carrying the config, one
/// record per round, and a closing summary record.
void write_transcript(const GameTranscript& transcript, std::ostream& out);
GameTranscript read_transcript(std::istream& in);

}  // namespace csamp
