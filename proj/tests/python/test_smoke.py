"""Smoke tests for the python bindings: one probe per subsystem."""

import math

import pytest

import csamp


def test_saes_reference_vector():
    assert csamp.saes_encrypt(0xA73B, 0x6F6B) == 0x0738
    assert csamp.saes_decrypt(0xA73B, 0x0738) == 0x6F6B


def test_perfect_swap_at_half():
    rng = csamp.RandomSource(7)
    spec = csamp.random_subset(4, 8, rng)
    state = csamp.make_subset_state(spec)
    swapped, mass = csamp.complement_swap(state, spec)
    assert mass == pytest.approx(1.0, abs=1e-12)
    complement = csamp.make_complement_state(spec)
    assert csamp.fidelity(swapped, complement) == pytest.approx(1.0, abs=1e-12)


def test_zero_error_flag_probability():
    rng = csamp.RandomSource(11)
    spec = csamp.SubsetSpec(4, list(range(4)))  # K = N/4
    attempt = csamp.zero_error_swap(csamp.make_subset_state(spec), spec, rng)
    assert attempt.success_probability == pytest.approx(1.0 / 3.0, abs=1e-12)
    if attempt.flag == 0:
        assert not spec.contains(attempt.sample)


def test_lower_bound_headline_number():
    assert csamp.lower_bound_queries(2**16, 2**15, 1 / 6) == 16384.0


def test_unique_draw_distribution_exact():
    dist = csamp.unique_draw_distribution(3, 2)
    assert dist.exact[1] == "1/3"
    assert dist.exact[2] == "2/3"
    assert math.isclose(sum(dist.probabilities), 1.0, abs_tol=1e-12)


def test_conjugate_overlap():
    assert csamp.conjugate_pair_overlap(4, 16, 0) == pytest.approx(1 / 9, abs=1e-12)
    assert csamp.max_conjugate_overlap(8, 16) == 0.0


def test_game_round_trip():
    config = csamp.GameConfig(
        n=16,
        rounds=5,
        samples_per_round=1,
        player=csamp.PlayerKind.QUANTUM_COMPLEMENT,
        backend=csamp.Backend.SAES,
        master_seed=99,
    )
    transcript = csamp.run_game(config)
    assert transcript.wins == 5
    assert csamp.verify_transcript(transcript)

    text = transcript.to_json_lines()
    loaded = csamp.GameTranscript.from_json_lines(text)
    assert csamp.verify_transcript(loaded)


def test_success_curves_beta_zero():
    rows = csamp.success_curves_at(4, [0.0], 200, 5)
    assert rows[0].analytic_cs == pytest.approx(1.0)
    assert rows[0].analytic_cc == pytest.approx(0.5)
    assert rows[0].simulated_cs == pytest.approx(1.0)


def test_scale_error_is_typed():
    with pytest.raises(csamp.ScaleError):
        csamp.unique_draw_distribution(3, 100)
