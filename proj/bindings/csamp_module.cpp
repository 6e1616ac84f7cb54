#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "csamp/classical.hpp"
#include "csamp/errors.hpp"
#include "csamp/game.hpp"
#include "csamp/prp.hpp"
#include "csamp/rng.hpp"
#include "csamp/statevector.hpp"
#include "csamp/subset.hpp"
#include "csamp/swappers.hpp"
#include "csamp/version.hpp"

namespace py = pybind11;
using namespace csamp;

PYBIND11_MODULE(_csamp, m) {
    m.doc() = "complement sampling toolkit: statevector swapper circuits, "
              "classical bounds, S-AES subset families, and the "
              "referee/player game";
    m.attr("__version__") = kVersion;

    py::register_exception<ScaleError>(m, "ScaleError");

    py::class_<RandomSource>(m, "RandomSource")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next_u64", &RandomSource::next_u64)
        .def("uniform_below", &RandomSource::uniform_below, py::arg("bound"))
        .def("uniform_real", &RandomSource::uniform_real)
        .def_static("derive_seed", &RandomSource::derive_seed, py::arg("master"),
                    py::arg("stream"));

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int, std::vector<cdouble>>(), py::arg("n_qubits"),
             py::arg("amplitudes"))
        .def_readonly("n_qubits", &StateVector::n_qubits)
        .def_readonly("amplitudes", &StateVector::amps)
        .def_property_readonly("dim", &StateVector::dim);

    py::class_<MeasurementOutcome>(m, "MeasurementOutcome")
        .def_readonly("bits", &MeasurementOutcome::bits)
        .def_readonly("probability", &MeasurementOutcome::probability)
        .def_readonly("post_state", &MeasurementOutcome::post_state);

    m.def("make_zero_state", &make_zero_state, py::arg("n_qubits"));
    m.def("make_basis_state", &make_basis_state, py::arg("n_qubits"), py::arg("index"));
    m.def("make_plus_state", &make_plus_state, py::arg("n_qubits"));
    m.def("make_random_state", &make_random_state, py::arg("n_qubits"), py::arg("rng"));
    m.def("state_norm", &state_norm);
    m.def("inner_product", &inner_product);
    m.def("fidelity", &fidelity);
    m.def("apply_hadamard", &apply_hadamard, py::arg("state"), py::arg("qubit"));
    m.def("apply_hadamard_all", &apply_hadamard_all);
    m.def("apply_diffusion", &apply_diffusion);
    m.def("apply_w_gate", &apply_w_gate, py::arg("state"), py::arg("qubit"),
          py::arg("q_w"), py::arg("adjoint") = false);
    m.def("apply_controlled_diffusion", &apply_controlled_diffusion, py::arg("state"),
          py::arg("control"), py::arg("control_value"));
    m.def("apply_multi_controlled_not", &apply_multi_controlled_not, py::arg("state"),
          py::arg("target"), py::arg("controls"));
    m.def("apply_z", &apply_z, py::arg("state"), py::arg("qubit"));
    m.def("apply_global_phase", &apply_global_phase, py::arg("state"), py::arg("phase"));
    m.def("measure_qubit", &measure_qubit, py::arg("state"), py::arg("qubit"),
          py::arg("rng"));
    m.def("measure_all", &measure_all, py::arg("state"), py::arg("rng"));
    m.def("exact_distribution", &exact_distribution);

    py::class_<SubsetSpec>(m, "SubsetSpec")
        .def(py::init([](int n, std::vector<std::uint64_t> elements) {
                 SubsetSpec spec{n, std::move(elements)};
                 spec.validate();
                 return spec;
             }),
             py::arg("n"), py::arg("elements"))
        .def_readonly("n", &SubsetSpec::n)
        .def_readonly("elements", &SubsetSpec::elements)
        .def_property_readonly("domain_size", &SubsetSpec::domain_size)
        .def_property_readonly("size", &SubsetSpec::size)
        .def_property_readonly("beta", &SubsetSpec::beta)
        .def("contains", &SubsetSpec::contains, py::arg("x"))
        .def("complement", &SubsetSpec::complement)
        .def("to_json", [](const SubsetSpec& spec) { return subset_to_json(spec); })
        .def_static("from_json",
                    [](const std::string& text) { return subset_from_json(text); });

    py::class_<BalancedFunctionSpec>(m, "BalancedFunctionSpec")
        .def(py::init([](SubsetSpec support) {
                 BalancedFunctionSpec f{std::move(support)};
                 f.validate();
                 return f;
             }),
             py::arg("support"))
        .def_readonly("support", &BalancedFunctionSpec::support)
        .def("eval", &BalancedFunctionSpec::eval, py::arg("x"));

    m.def("random_subset", &random_subset, py::arg("n"), py::arg("k"), py::arg("rng"));
    m.def("make_subset_state", &make_subset_state);
    m.def("make_complement_state", &make_complement_state);
    m.def("make_phase_state", &make_phase_state);
    m.def("make_constant_phase_state", &make_constant_phase_state);
    m.def("phase_state_overlap", &phase_state_overlap);
    m.def("conjugate_pair_overlap", &conjugate_pair_overlap, py::arg("k"),
          py::arg("n_domain"), py::arg("x_intersection"));
    m.def("max_conjugate_overlap", &max_conjugate_overlap, py::arg("k"),
          py::arg("n_domain"));

    py::class_<ZeroErrorConfig>(m, "ZeroErrorConfig")
        .def_readonly("b", &ZeroErrorConfig::b)
        .def_readonly("q_w", &ZeroErrorConfig::q_w)
        .def_static("for_subset", &ZeroErrorConfig::for_subset, py::arg("k"),
                    py::arg("n_domain"));

    py::class_<SwapAttempt>(m, "SwapAttempt")
        .def_readonly("flag", &SwapAttempt::flag)
        .def_readonly("sample", &SwapAttempt::sample)
        .def_readonly("post_state", &SwapAttempt::post_state)
        .def_readonly("success_probability", &SwapAttempt::success_probability);

    m.def(
        "complement_swap",
        [](const StateVector& state, const SubsetSpec& spec) {
            const auto result = complement_swap(state, spec);
            return py::make_tuple(result.state, result.predicted_complement_mass);
        },
        py::arg("state"), py::arg("spec"),
        "returns (swapped_state, predicted_complement_mass)");
    m.def("zero_error_swap",
          py::overload_cast<const StateVector&, const SubsetSpec&, RandomSource&>(
              &zero_error_swap),
          py::arg("state"), py::arg("spec"), py::arg("rng"));
    m.def("repeated_zero_error_swap",
          py::overload_cast<const std::vector<StateVector>&, const SubsetSpec&,
                            RandomSource&>(&repeated_zero_error_swap),
          py::arg("copies"), py::arg("spec"), py::arg("rng"));
    m.def("dj_distinguish", &dj_distinguish);
    m.def("dj_constant_probability", &dj_constant_probability);
    m.def("aas_swapper_from_distinguisher", &aas_swapper_from_distinguisher);
    m.def("coupon_collector_sample", &coupon_collector_sample, py::arg("state"),
          py::arg("rng"));
    m.def("coupon_collector_hit_probability", &coupon_collector_hit_probability,
          py::arg("k"), py::arg("n_domain"));
    m.def("curve_complement_swapper", &curve_complement_swapper);
    m.def("curve_zero_error_swapper", &curve_zero_error_swapper);
    m.def("curve_coupon_collector", &curve_coupon_collector);
    m.def("curve_classical_single_sample", &curve_classical_single_sample);

    py::class_<SuccessCurveRow>(m, "SuccessCurveRow")
        .def_readonly("beta", &SuccessCurveRow::beta)
        .def_readonly("k", &SuccessCurveRow::k)
        .def_readonly("analytic_cs", &SuccessCurveRow::analytic_cs)
        .def_readonly("analytic_ze", &SuccessCurveRow::analytic_ze)
        .def_readonly("analytic_cc", &SuccessCurveRow::analytic_cc)
        .def_readonly("analytic_cl", &SuccessCurveRow::analytic_cl)
        .def_readonly("simulated_cs", &SuccessCurveRow::simulated_cs)
        .def_readonly("simulated_ze", &SuccessCurveRow::simulated_ze)
        .def_readonly("simulated_cc", &SuccessCurveRow::simulated_cc)
        .def_readonly("simulated_cl", &SuccessCurveRow::simulated_cl)
        .def_readonly("trials", &SuccessCurveRow::trials)
        .def_readonly("seed", &SuccessCurveRow::seed);
    m.def("success_curves",
          py::overload_cast<int, int, std::uint64_t>(&success_curves), py::arg("n"),
          py::arg("trials"), py::arg("seed"));
    m.def("success_curves_at",
          py::overload_cast<int, const std::vector<double>&, int, std::uint64_t>(
              &success_curves),
          py::arg("n"), py::arg("beta_grid"), py::arg("trials"), py::arg("seed"));

    py::class_<IndexOracle>(m, "IndexOracle")
        .def_property_readonly("domain_size", &IndexOracle::domain_size)
        .def_property_readonly("subset_size", &IndexOracle::subset_size)
        .def("query", &IndexOracle::query, py::arg("i"))
        .def_property_readonly("query_count", &IndexOracle::query_count);
    py::class_<SubsetIndexOracle, IndexOracle>(m, "SubsetIndexOracle")
        .def(py::init<std::uint64_t, std::vector<std::uint64_t>>(),
             py::arg("domain_size"), py::arg("elements"))
        .def(py::init<const SubsetSpec&>(), py::arg("spec"));

    py::enum_<GuessPolicy>(m, "GuessPolicy")
        .value("EXCLUDE_SEEN", GuessPolicy::kExcludeSeen)
        .value("ANY_STRING", GuessPolicy::kAnyString);

    m.def("lower_bound_queries", &lower_bound_queries, py::arg("n_domain"),
          py::arg("k"), py::arg("delta"));
    m.def("random_guess_player", &random_guess_player, py::arg("oracle"),
          py::arg("q_budget"), py::arg("rng"),
          py::arg("policy") = GuessPolicy::kExcludeSeen);

    py::class_<UniqueDrawDistribution>(m, "UniqueDrawDistribution")
        .def_readonly("k", &UniqueDrawDistribution::k)
        .def_readonly("d", &UniqueDrawDistribution::d)
        .def_readonly("probabilities", &UniqueDrawDistribution::probabilities)
        .def_readonly("exact", &UniqueDrawDistribution::exact);
    m.def("unique_draw_distribution", &unique_draw_distribution, py::arg("k"),
          py::arg("d"));
    m.def("sample_complexity_success", &sample_complexity_success, py::arg("n_domain"),
          py::arg("k"), py::arg("d"));

    py::class_<UniformityReport>(m, "UniformityReport")
        .def_readonly("num_complements", &UniformityReport::num_complements)
        .def_readonly("probability_each", &UniformityReport::probability_each)
        .def_readonly("uniform", &UniformityReport::uniform)
        .def_readonly("excludes_queried", &UniformityReport::excludes_queried);
    m.def("bayes_uniformity_check", &bayes_uniformity_check, py::arg("n_domain"),
          py::arg("k"), py::arg("observed"));

    m.def("saes_encrypt", &saes_encrypt, py::arg("key"), py::arg("block"));
    m.def("saes_decrypt", &saes_decrypt, py::arg("key"), py::arg("block"));

    py::class_<PermutationOracle>(m, "PermutationOracle")
        .def_property_readonly("bits", &PermutationOracle::bits)
        .def("forward", &PermutationOracle::forward, py::arg("x"))
        .def("inverse", &PermutationOracle::inverse, py::arg("y"));
    m.def(
        "make_prp_oracle",
        [](std::uint16_t key) { return make_prp_oracle(SaesKey{key}); },
        py::arg("key"));
    m.def("make_random_oracle", &make_random_oracle, py::arg("n_bits"),
          py::arg("seed"));
    m.def("subset_from_permutation", &subset_from_permutation, py::arg("oracle"));
    m.def("verify_complement", &verify_complement, py::arg("oracle"),
          py::arg("candidate"));

    py::enum_<PlayerKind>(m, "PlayerKind")
        .value("QUANTUM_COMPLEMENT", PlayerKind::kQuantumComplement)
        .value("QUANTUM_ZERO_ERROR", PlayerKind::kQuantumZeroError)
        .value("CLASSICAL_RANDOM_GUESS", PlayerKind::kClassicalRandomGuess)
        .value("COUPON_COLLECTOR", PlayerKind::kCouponCollector);
    py::enum_<Backend>(m, "Backend")
        .value("SAES", Backend::kSaes)
        .value("RANDOM_TABLE", Backend::kRandomTable);

    py::class_<GameConfig>(m, "GameConfig")
        .def(py::init([](int n, int rounds, int samples_per_round, PlayerKind player,
                         Backend backend, std::uint64_t master_seed) {
                 GameConfig config{n, rounds, samples_per_round, player, backend,
                                   master_seed};
                 config.validate();
                 return config;
             }),
             py::arg("n") = 16, py::arg("rounds") = 1,
             py::arg("samples_per_round") = 1,
             py::arg("player") = PlayerKind::kQuantumComplement,
             py::arg("backend") = Backend::kSaes, py::arg("master_seed") = 0)
        .def_readonly("n", &GameConfig::n)
        .def_readonly("rounds", &GameConfig::rounds)
        .def_readonly("samples_per_round", &GameConfig::samples_per_round)
        .def_readonly("player", &GameConfig::player_kind)
        .def_readonly("backend", &GameConfig::backend)
        .def_readonly("master_seed", &GameConfig::master_seed);

    py::class_<RoundRecord>(m, "RoundRecord")
        .def_readonly("round", &RoundRecord::round)
        .def_readonly("key_or_seed", &RoundRecord::key_or_seed)
        .def_readonly("samples", &RoundRecord::samples)
        .def_readonly("candidate", &RoundRecord::candidate)
        .def_readonly("verdict", &RoundRecord::verdict)
        .def_readonly("digest", &RoundRecord::digest);

    py::class_<GameTranscript>(m, "GameTranscript")
        .def_readonly("config", &GameTranscript::config)
        .def_readonly("rounds", &GameTranscript::rounds)
        .def_property_readonly("wins", &GameTranscript::wins)
        .def_property_readonly("win_rate", &GameTranscript::win_rate)
        .def("all_won", &GameTranscript::all_won)
        .def("to_json_lines",
             [](const GameTranscript& transcript) {
                 std::ostringstream out;
                 write_transcript(transcript, out);
                 return out.str();
             })
        .def_static("from_json_lines", [](const std::string& text) {
            std::istringstream in(text);
            return read_transcript(in);
        });

    m.def("run_game", &run_game, py::arg("config"));
    m.def("verify_transcript",
          py::overload_cast<const GameTranscript&>(&verify_transcript),
          py::arg("transcript"));
}
