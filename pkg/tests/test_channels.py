import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hybridspin import channels
from hybridspin.errors import (
    GammaOutOfRangeError,
    IncompleteKrausSetError,
    NegativeRateError,
    NegativeTimeError,
    SparsityViolationError,
)
from hybridspin.thermal import gibbs_closed_form
from hybridspin.verify import random_axial_state


class TestDecay:
    def test_zero_time(self):
        assert channels.decay(channels.DecayLaw(1.0, 2.0, 0.0)) == (0.0, 0.0)

    def test_half_life(self):
        ga, gb = channels.decay(channels.DecayLaw(1.0, 1.0, math.log(2.0)))
        assert_allclose([ga, gb], [0.5, 0.5])

    def test_scalar_values(self):
        ga, gb = channels.decay(channels.DecayLaw(2.0, 0.5, 1.0))
        assert_allclose(ga, 1.0 - math.exp(-2.0))
        assert_allclose(gb, 1.0 - math.exp(-0.5))

    def test_range_and_monotonicity(self):
        times = np.linspace(0, 50, 200)
        values = [channels.decay(channels.DecayLaw(0.7, 0.0, t))[0] for t in times]
        assert all(0.0 <= v < 1.0 for v in values)
        assert np.all(np.diff(values) >= 0)

    def test_zero_rate_means_no_noise(self):
        assert channels.decay(channels.DecayLaw(0.0, 0.0, 12.0)) == (0.0, 0.0)

    def test_rejects_negative_inputs(self):
        with pytest.raises(NegativeTimeError):
            channels.DecayLaw(1.0, 1.0, -0.1)
        with pytest.raises(NegativeRateError):
            channels.DecayLaw(-1.0, 1.0, 0.1)


class TestChannelConfig:
    def test_rejects_gamma_out_of_range(self):
        with pytest.raises(GammaOutOfRangeError, match="gamma_a"):
            channels.ChannelConfig(channels.DEPHASING, 1.5, 0.0)
        with pytest.raises(GammaOutOfRangeError, match="gamma_b"):
            channels.ChannelConfig(channels.DEPHASING, 0.5, -0.1)

    def test_rejects_unknown_kind(self):
        with pytest.raises(GammaOutOfRangeError):
            channels.ChannelConfig("amplitude_damping", 0.5, 0.5)

    def test_from_decay(self):
        cfg = channels.ChannelConfig.from_decay(
            channels.PHASE_FLIP, channels.DecayLaw(1.0, 1.0, math.log(2.0)))
        assert cfg.kind == channels.PHASE_FLIP
        assert_allclose([cfg.gamma_a, cfg.gamma_b], [0.5, 0.5])


class TestKrausSets:
    @pytest.mark.parametrize("kind", channels.CHANNEL_KINDS)
    def test_no_noise_is_identity_channel(self, kind):
        ops = channels.kraus_set(channels.ChannelConfig(kind, 0.0, 0.0))
        assert len(ops) == 6
        nontrivial = [op for op in ops if np.abs(op).max() > 1e-15]
        assert len(nontrivial) == 1
        assert_allclose(nontrivial[0], np.eye(6), atol=1e-15)

    @pytest.mark.parametrize("kind", channels.CHANNEL_KINDS)
    def test_completeness(self, kind, rng):
        for _ in range(50):
            cfg = channels.ChannelConfig(kind, rng.uniform(), rng.uniform())
            assert channels.completeness_defect(channels.kraus_set(cfg)) < 1e-14

    def test_full_qubit_dephasing_kills_coherences(self, rng):
        ops = channels.dephasing_kraus(channels.ChannelConfig(channels.DEPHASING, 1.0, 0.0))
        for _ in range(10):
            out = channels.apply_channel(random_axial_state(rng), ops)
            assert abs(out[1, 3]) < 1e-15 and abs(out[2, 4]) < 1e-15

    def test_full_qubit_phase_flip_kills_coherences(self, rng):
        ops = channels.phase_flip_kraus(channels.ChannelConfig(channels.PHASE_FLIP, 1.0, 0.0))
        for _ in range(10):
            out = channels.apply_channel(random_axial_state(rng), ops)
            assert abs(out[1, 3]) < 1e-15 and abs(out[2, 4]) < 1e-15

    def test_kind_mismatch_raises(self):
        cfg = channels.ChannelConfig(channels.DEPHASING, 0.1, 0.1)
        with pytest.raises(ValueError):
            channels.phase_flip_kraus(cfg)


class TestApplyChannel:
    def test_identity_set(self, rng):
        rho = random_axial_state(rng)
        assert_allclose(channels.apply_channel(rho, [np.eye(6, dtype=complex)]), rho)

    def test_complete_dephasing_leaves_diagonal(self, rng):
        cfg = channels.ChannelConfig(channels.DEPHASING, 1.0, 1.0)
        rho = random_axial_state(rng)
        out = channels.apply_channel(rho, channels.dephasing_kraus(cfg))
        assert_allclose(out, np.diag(np.diag(rho)), atol=1e-15)

    def test_rejects_incomplete_set(self, rng):
        rho = random_axial_state(rng)
        with pytest.raises(IncompleteKrausSetError):
            channels.apply_channel(rho, [0.5 * np.eye(6, dtype=complex)])

    @pytest.mark.parametrize("kind", channels.CHANNEL_KINDS)
    def test_cptp(self, kind, rng):
        for _ in range(100):
            rho = random_axial_state(rng)
            cfg = channels.ChannelConfig(kind, rng.uniform(), rng.uniform())
            out = channels.apply_channel(rho, channels.kraus_set(cfg))
            assert abs(np.trace(out).real - 1.0) < 1e-12
            assert np.abs(out - out.conj().T).max() < 1e-12
            assert np.linalg.eigvalsh(out)[0] > -1e-10


class TestEvolvedClosedForm:
    def test_no_noise_is_identity(self, rng):
        rho = random_axial_state(rng)
        for kind in channels.CHANNEL_KINDS:
            cfg = channels.ChannelConfig(kind, 0.0, 0.0)
            assert_allclose(channels.evolved_closed_form(rho, cfg), rho)

    def test_dephasing_factors(self):
        cfg = channels.ChannelConfig(channels.DEPHASING, 0.5, 0.2)
        k24, k35 = channels.coherence_factors(cfg)
        assert_allclose(k24, math.sqrt(0.4))
        assert_allclose(k35, 0.8 * math.sqrt(0.5))

    def test_phase_flip_factor(self):
        cfg = channels.ChannelConfig(channels.PHASE_FLIP, 0.5, 0.2)
        assert_allclose(channels.coherence_factors(cfg), (0.4, 0.4))

    @pytest.mark.parametrize("kind", channels.CHANNEL_KINDS)
    def test_matches_kraus_sum(self, kind, rng):
        worst = 0.0
        for _ in range(500):
            rho = random_axial_state(rng)
            cfg = channels.ChannelConfig(kind, rng.uniform(), rng.uniform())
            kraus = channels.apply_channel(rho, channels.kraus_set(cfg))
            closed = channels.evolved_closed_form(rho, cfg)
            worst = max(worst, float(np.abs(kraus - closed).max()))
        assert worst <= 1e-12

    def test_matches_kraus_on_thermal_state(self, fig_params):
        rho = gibbs_closed_form(fig_params, 1.0)
        cfg = channels.ChannelConfig(channels.DEPHASING, 0.5, 0.2)
        gap = np.abs(channels.evolved_closed_form(rho, cfg)
                     - channels.apply_channel(rho, channels.dephasing_kraus(cfg))).max()
        assert gap <= 1e-12

    def test_rejects_nonsparse_input(self):
        rho = np.eye(6, dtype=complex) / 6
        rho[0, 5] = rho[5, 0] = 0.05
        with pytest.raises(SparsityViolationError):
            channels.evolved_closed_form(rho, channels.ChannelConfig(channels.DEPHASING, 0.1, 0.1))

    def test_coherence_decay_monotone_in_each_gamma(self, rng):
        rho = random_axial_state(rng)
        for kind in channels.CHANNEL_KINDS:
            for fixed_b in (0.0, 0.3):
                mags = []
                for ga in np.linspace(0, 1, 11):
                    out = channels.evolved_closed_form(
                        rho, channels.ChannelConfig(kind, ga, fixed_b))
                    mags.append((abs(out[1, 3]), abs(out[2, 4])))
                mags = np.array(mags)
                assert np.all(np.diff(mags[:, 0]) <= 1e-15)
                assert np.all(np.diff(mags[:, 1]) <= 1e-15)

    def test_dephasing_composition_semigroup(self, rng):
        # two dephasings compose into one with 1-(1-g)(1-g') per subsystem
        rho = random_axial_state(rng)
        first = channels.ChannelConfig(channels.DEPHASING, 0.3, 0.5)
        second = channels.ChannelConfig(channels.DEPHASING, 0.4, 0.1)
        combined = channels.ChannelConfig(
            channels.DEPHASING,
            1.0 - (1.0 - first.gamma_a) * (1.0 - second.gamma_a),
            1.0 - (1.0 - first.gamma_b) * (1.0 - second.gamma_b))
        stepwise = channels.evolved_closed_form(
            channels.evolved_closed_form(rho, first), second)
        assert np.abs(stepwise - channels.evolved_closed_form(rho, combined)).max() <= 1e-12

    @pytest.mark.parametrize("kind", channels.CHANNEL_KINDS)
    def test_qubit_and_qutrit_factors_commute(self, kind, rng):
        # applying the qubit factor before or after the qutrit factor gives
        # the same map, so the ordering in the product set is immaterial
        rho = random_axial_state(rng)
        cfg = channels.ChannelConfig(kind, 0.3, 0.6)
        ops = channels.kraus_set(cfg)
        cfg_a = channels.ChannelConfig(kind, 0.3, 0.0)
        cfg_b = channels.ChannelConfig(kind, 0.0, 0.6)
        a_then_b = channels.apply_channel(
            channels.apply_channel(rho, channels.kraus_set(cfg_a)), channels.kraus_set(cfg_b))
        b_then_a = channels.apply_channel(
            channels.apply_channel(rho, channels.kraus_set(cfg_b)), channels.kraus_set(cfg_a))
        assert_allclose(a_then_b, b_then_a, atol=1e-14)
        assert_allclose(channels.apply_channel(rho, ops), a_then_b, atol=1e-14)
