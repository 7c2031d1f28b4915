import numpy as np
import pytest

from spinheat.lindblad import (
    DissipatorStyle,
    assemble_liouvillian,
    standard_baths,
    unvectorize,
    vectorize,
)
from spinheat.spinops import ChainModel, SpinChainSpec, build_hamiltonian
from spinheat.steady import steady_state_nullspace, steady_state_rate_equations
from spinheat.thermo import (
    current_from_cycle,
    heat_currents,
    rectification,
    steady_net_current,
)

ISING = SpinChainSpec(2, 1.0, 0.5, ChainModel.ISING_ZZ)
XY2 = SpinChainSpec(2, 1.0, 0.5, ChainModel.XY_TRANSVERSE)


def steady_currents(spec, t_left, t_right, style, kappa=1.0):
    H = build_hamiltonian(spec)
    L = assemble_liouvillian(H, standard_baths(spec, kappa, t_left, t_right, style))
    state = steady_state_nullspace(L)
    return heat_currents(L, state.rho, H)


class TestHeatCurrents:
    def test_equilibrium_current_vanishes(self):
        currents = steady_currents(ISING, 1.0, 1.0, DissipatorStyle.GLOBAL)
        assert abs(currents.j_net) < 1e-10

    def test_saturation_current_value(self):
        currents = steady_currents(ISING, 1e4, 0.0, DissipatorStyle.GLOBAL)
        assert currents.j_net == pytest.approx(0.125, abs=1e-4)

    def test_cold_left_bath_insulates(self):
        currents = steady_currents(ISING, 0.0, 10.0, DissipatorStyle.GLOBAL)
        assert abs(currents.j_net) < 1e-10

    @pytest.mark.parametrize(
        "spec,style",
        [
            (ISING, DissipatorStyle.GLOBAL),
            (ISING, DissipatorStyle.LOCAL),
            (XY2, DissipatorStyle.GLOBAL),
            (XY2, DissipatorStyle.LOCAL),
            (SpinChainSpec(3, 1.0, 1.0, ChainModel.XY_TRANSVERSE), DissipatorStyle.GLOBAL),
        ],
    )
    def test_steady_state_balance(self, spec, style):
        currents = steady_currents(spec, 2.0, 0.7, style)
        assert currents.balance_residual < 1e-9

    def test_out_of_equilibrium_balance_is_energy_growth(self):
        # away from the steady state the two input rates add up to the rate
        # of change of the mean energy instead of cancelling
        rng = np.random.default_rng(13)
        H = build_hamiltonian(ISING)
        L = assemble_liouvillian(
            H, standard_baths(ISING, 1.0, 2.0, 0.5, DissipatorStyle.GLOBAL)
        )
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = x @ x.conj().T
        rho /= np.trace(rho)
        currents = heat_currents(L, rho, H)
        drho = unvectorize(L.matrix @ vectorize(rho), 4)
        energy_rate = np.real(np.trace(drho @ H.matrix))
        assert currents.j_in_left + currents.j_in_right == pytest.approx(
            energy_rate, abs=1e-10
        )

    def test_dimension_mismatch_rejected(self):
        H = build_hamiltonian(ISING)
        L = assemble_liouvillian(
            H, standard_baths(ISING, 1.0, 1.0, 0.5, DissipatorStyle.GLOBAL)
        )
        with pytest.raises(ValueError):
            heat_currents(L, np.eye(3, dtype=complex) / 3, H)

    def test_clausius_sign(self):
        temperatures = (0.0, 0.5, 1.0, 2.0, 5.0)
        for t_left in temperatures:
            for t_right in temperatures:
                if t_left <= t_right:
                    continue
                j = steady_net_current(ISING, 1.0, t_left, t_right, DissipatorStyle.GLOBAL)
                assert j >= -1e-12

    def test_saturation_bound(self):
        bound = 0.5 * 0.5**2  # kappa * delta^2 / 2
        for t_left in (0.5, 1.0, 5.0, 50.0, 1e4):
            j = steady_net_current(ISING, 1.0, t_left, 0.0, DissipatorStyle.GLOBAL)
            assert j <= bound + 1e-9


class TestCurrentFromCycle:
    def test_asymptotic_pair(self):
        assert current_from_cycle(0.5, -0.125) == pytest.approx(0.125)

    def test_zero_cycle(self):
        assert current_from_cycle(0.7, 0.0) == 0.0

    def test_matches_liouvillian_route(self):
        j_direct = steady_net_current(ISING, 1.0, 2.0, 1.0, DissipatorStyle.GLOBAL)
        _, rates = steady_state_rate_equations(1.0, 0.5, 1.0, 2.0, 1.0)
        assert abs(j_direct - current_from_cycle(0.5, rates.cycle_gamma)) < 1e-9

    def test_route_equivalence_on_grid(self):
        for t_left in (0.0, 1.0, 3.0):
            for t_right in (0.0, 0.5, 2.0):
                j_direct = steady_net_current(
                    ISING, 1.0, t_left, t_right, DissipatorStyle.GLOBAL
                )
                _, rates = steady_state_rate_equations(1.0, 0.5, 1.0, t_left, t_right)
                assert abs(j_direct - current_from_cycle(0.5, rates.cycle_gamma)) < 1e-9


class TestPhenomenologicalNullCurrent:
    def test_current_vanishes_on_grid(self):
        for t_left in (0.0, 1.0, 5.0):
            for t_right in (0.0, 0.5, 2.0):
                for delta in (0.1, 0.9):
                    spec = SpinChainSpec(2, 1.0, delta, ChainModel.ISING_ZZ)
                    j = steady_net_current(spec, 1.0, t_left, t_right, DissipatorStyle.LOCAL)
                    assert abs(j) < 1e-10


class TestRectification:
    def test_optimal_for_zero_cold_bath(self):
        report = rectification(ISING, 1.0, 10.0, 0.0, DissipatorStyle.GLOBAL)
        assert abs(report.j_reverse) < 1e-12
        assert report.j_forward > 1e-3
        assert report.contrast == pytest.approx(1.0, abs=1e-9)

    def test_local_treatment_shows_no_transport(self):
        report = rectification(ISING, 1.0, 10.0, 0.0, DissipatorStyle.LOCAL)
        assert report.j_forward == pytest.approx(0.0, abs=1e-10)
        assert report.j_reverse == pytest.approx(0.0, abs=1e-10)
        assert report.contrast == 0.0

    def test_symmetric_chain_without_gradient(self):
        report = rectification(XY2, 1.0, 1.0, 1.0, DissipatorStyle.GLOBAL)
        assert report.j_forward == pytest.approx(0.0, abs=1e-10)
        assert report.j_reverse == pytest.approx(0.0, abs=1e-10)
        assert report.contrast == 0.0

    def test_contrast_bounds(self):
        report = rectification(ISING, 1.0, 2.0, 0.5, DissipatorStyle.GLOBAL)
        assert -1.0 <= report.contrast <= 1.0

    def test_rejects_inverted_gradient(self):
        with pytest.raises(ValueError):
            rectification(ISING, 1.0, 0.5, 2.0, DissipatorStyle.GLOBAL)
