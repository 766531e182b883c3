import math

import pytest

import erkn


def test_phi_values():
    assert erkn.phi(0, 0.0) == 1.0
    assert erkn.phi(2, 1.0) == pytest.approx(0.4596976941318602826, rel=1e-14)
    assert erkn.sinc(0.7) == pytest.approx(0.92031098176813007668, rel=1e-14)
    with pytest.raises(erkn.UnsupportedOrderError):
        erkn.phi(4, 1.0)


def test_builtin_schemes_and_lookup():
    assert erkn.SCHEMES == ("ERKN1", "ERKN2", "ERKN3", "ERKN4")
    s = erkn.builtin_scheme("ERKN2")
    assert s.bbar1(1.0) == pytest.approx(0.3692301313020643578, rel=1e-14)
    with pytest.raises(erkn.LookupError):
        erkn.builtin_scheme("ERKN9")


def test_check_table():
    expected = {"ERKN1": (False, False), "ERKN2": (True, False),
                "ERKN3": (True, True), "ERKN4": (True, False)}
    for name, (sym, sympl) in expected.items():
        summary = erkn.run_checks(name)
        assert summary.matches_expected
        by_name = {r.name: r for r in summary.reports}
        assert by_name["symmetric"].passed == sym
        assert by_name["symplectic"].passed == sympl


def test_custom_scheme_matches_builtin():
    custom = erkn.Scheme("mine", 0.5, lambda x: math.cos(x / 2),
                         lambda x: 0.5 * erkn.sinc(x / 2))
    system, s0 = erkn.test_problem()
    a = erkn.step(custom, system, 0.01, s0)
    b = erkn.step(erkn.builtin_scheme("ERKN3"), system, 0.01, s0)
    assert max(abs(x - y) for x, y in zip(a.q + a.p, b.q + b.p)) < 1e-15


def test_initial_energies():
    system, s0 = erkn.test_problem()
    assert erkn.total_energy(system, s0) == pytest.approx(3.986250014641, rel=1e-12)
    assert [erkn.oscillatory_energy(system, s0, j) for j in (1, 2, 3)] == pytest.approx(
        [0.79, 1.615, 1.3], rel=1e-12)
    with pytest.raises(erkn.IndexError):
        erkn.oscillatory_energy(system, s0, 0)


def test_resonance():
    scan = erkn.resonance_scan([1.0, math.sqrt(2.0), 2.0], 3)
    assert [-2, 0, 1] in scan.module_vectors
    assert [2, 0, -1] in scan.module_vectors
    margin = erkn.nonresonance_margin(0.01, 1 / 70, [1.0, math.sqrt(2.0), 2.0], 2,
                                      erkn.resonance_scan([1.0, math.sqrt(2.0), 2.0], 2))
    assert margin == pytest.approx(1.444674415041761737, rel=1e-12)


def test_python_system_free_oscillation():
    # U = 0: the step is exact for the linear flow.
    system = erkn.OscillatorySystem(0.1, [(0.0, 0), (1.0, 1)], lambda q: 0.0,
                                    lambda q: [0.0] * len(q))
    s0 = erkn.State([0.2], [0.0])
    h, n = 0.07, 50
    s = erkn.propagate(erkn.builtin_scheme("ERKN1"), system, h, s0, n)
    assert s.q[0] == pytest.approx(0.2 * math.cos(10 * h * n), abs=1e-12)


def test_integrate_and_modified_energies():
    system, s0 = erkn.test_problem()
    scheme = erkn.builtin_scheme("ERKN3")
    out = erkn.integrate(scheme, system, 0.01, s0, 200, sample_every=50, mu=[1.0, 0.0, 2.0])
    assert out["t"] == pytest.approx([0.0, 0.5, 1.0, 1.5, 2.0])
    assert max(abs(v - out["H"][0]) for v in out["H"]) < 1e-3
    h_star, i_star = erkn.modified_energies(scheme, system, s0, 0.01, [1.0, 0.0, 2.0])
    assert h_star == pytest.approx(erkn.total_energy(system, s0), rel=1e-14)
    assert erkn.jacobian_symplecticity(scheme, system, 0.01, s0) < 1e-6


def test_convergence_slope():
    rep = erkn.run_convergence("ERKN3", [0.02, 0.01, 0.005], 1.0)
    assert 1.8 <= rep.slope <= 2.2


CONFIG = """
scheme_name = ERKN3
epsilon_inv = 70
h = 0.01
t_end = 5
sample_every = 100
output_path = unused.csv
lambda = 1, 1.4142135623730951, 2
"""


def test_longrun_from_config_text(tmp_path):
    csv = tmp_path / "run.csv"
    cols, diverged, _ = erkn.run_longrun(CONFIG, output_path=str(csv))
    assert not diverged
    assert cols["t"] == pytest.approx([0, 1, 2, 3, 4, 5])
    assert cols["err_H"][0] == 0.0
    assert "err_Imu_I1+I3" in cols and "err_Istar_I2" in cols
    assert csv.read_text().splitlines()[0].startswith("t,err_H,err_I,")
    with pytest.raises(ValueError):
        erkn.run_longrun("scheme_name = ERKN3\n")
