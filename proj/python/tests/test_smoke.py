import math

import numpy as np
import pytest

import sympent


def test_coupled_oscillators():
    gamma = sympent.two_oscillator_covariance(m=1.0, omega=1.0, lam=2.0)
    assert gamma.shape == (4, 4)
    reduced = sympent.reduce(gamma, [0])
    np.testing.assert_allclose(reduced, np.diag([1 / 3, 1.0]), atol=1e-14)
    (sigma,) = sympent.symplectic_spectrum(reduced)
    assert abs(sigma - 1 / math.sqrt(3)) < 1e-12
    report = sympent.entanglement_entropy(gamma, "1|2", with_complement=True)
    assert abs(report["total_bits"] - 0.40141354608572873) < 1e-12
    assert abs(report["total_bits"] - report["total_b_bits"]) < 1e-10


def test_vacuum_and_validate():
    vac = sympent.vacuum(2)
    np.testing.assert_array_equal(vac, 0.5 * np.eye(4))
    assert sympent.validate(vac)["valid"]
    bad = sympent.validate(0.4 * np.eye(2))
    assert not bad["valid"]
    assert abs(bad["min_sigma"] - 0.4) < 1e-15
    assert sympent.purity_check(vac)


def test_williamson_round_trip():
    s = sympent.random_symplectic(3, 7)
    omega = sympent.symplectic_form(3)
    np.testing.assert_allclose(s @ omega @ s.T, omega, atol=1e-10)
    gamma = s @ np.diag([2.0, 1.0, 0.7] * 2) @ s.T
    sigmas, sw, normal = sympent.williamson(gamma)
    np.testing.assert_allclose(sigmas, [2.0, 1.0, 0.7], atol=1e-9)
    np.testing.assert_allclose(sw @ gamma @ sw.T, normal, atol=1e-8)


def test_mode_entropy_and_oracle():
    assert sympent.mode_entropy(0.5) == 0.0
    assert abs(sympent.mode_entropy(1.5) - 2.0) < 1e-15
    beta = sympent.thermal_parameter(1.5)
    assert abs(beta - math.log(2)) < 1e-15
    n_max = sympent.required_n_max(beta)
    assert abs(sympent.thermal_entropy_bruteforce(beta, n_max) - 2.0) < 1e-10
    assert abs(sympent.thermal_entropy_bruteforce(beta, 100) - 2.0) < 1e-12
    assert abs(sympent.two_mode_squeezed_entropy(beta, n_max, base="nats") - 2 * math.log(2)) < 1e-10


def test_wigner_vacuum():
    vac = sympent.vacuum(1)
    assert abs(sympent.wigner_function(vac, np.zeros(2)) - 1 / math.pi) < 1e-15
    assert sympent.characteristic_function(vac, np.zeros(2)) == 1.0


def test_chain_models():
    gamma = sympent.chain_covariance(6, lam=0.8, boundary="periodic")
    assert sympent.purity_check(gamma)
    a = sympent.entanglement_entropy(gamma, "1,2|3,4,5,6")["total_bits"]
    b = sympent.entanglement_entropy(gamma, "3,4,5,6|1,2")["total_bits"]
    assert abs(a - b) < 1e-8
    freqs = sympent.normal_frequencies(2, lam=2.0)
    np.testing.assert_allclose(freqs, [1.0, 3.0], atol=1e-14)


def test_json_round_trip():
    gamma = sympent.two_oscillator_covariance(lam=0.3)
    np.testing.assert_array_equal(sympent.covariance_from_json(sympent.covariance_to_json(gamma)), gamma)


def test_errors_map_to_exceptions():
    with pytest.raises(sympent.UnphysicalEigenvalue):
        sympent.mode_entropy(0.3)
    with pytest.raises(sympent.InvalidPartition):
        sympent.entanglement_entropy(sympent.vacuum(2), "1,2")
    with pytest.raises(sympent.MalformedInput):
        sympent.covariance_from_json('{"n": 1, "ordering": "qpqp", "matrix": [1, 0, 0, 1]}')
    with pytest.raises(sympent.ParameterError):
        sympent.chain_covariance(2, boundary="periodic")
    with pytest.raises(ValueError):
        sympent.validate(np.eye(3))
