import mpmath
import pytest

from arcticcurve.errors import ParameterDomainError, PoleError
from arcticcurve.precision import PrecisionContext
from arcticcurve.specfun import (
    elliptic_K,
    elliptic_modulus,
    jacobi_sn,
    log_deriv_theta1,
    log_deriv_theta1_jet,
    log_deriv_theta4,
    nome_af,
    theta,
    theta_jet,
)

CTX = PrecisionContext(256)
MP = CTX.mp
TOL = MP.mpf(2) ** -220


def close(a, b, tol=TOL):
    return abs(a - b) <= tol * (1 + abs(b))


def jtheta_oracle(kind, v, q, d=0):
    with mpmath.workprec(300):
        return MP.mpf(mpmath.jtheta(kind, mpmath.mpf(v), mpmath.mpf(q), d))


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
@pytest.mark.parametrize("q", ["1e-6", "0.1", "0.45", "0.7", "0.95"])
@pytest.mark.parametrize("v", ["0.37", "-2.9", "5.1"])
def test_theta_matches_mpmath(kind, q, v):
    for d in (0, 1, 3):
        assert close(theta(kind, v, q, d, CTX), jtheta_oracle(kind, v, q, d), MP.mpf(2) ** -200)


@pytest.mark.parametrize("kind", [1, 2, 3, 4])
def test_direct_and_modular_agree(kind):
    for q in ("0.3", "0.6", "0.9"):
        a = theta_jet(kind, "0.8", q, 4, CTX, method="direct")
        b = theta_jet(kind, "0.8", q, 4, CTX, method="modular")
        for x, y in zip(a.coeffs, b.coeffs):
            assert close(x, y, MP.mpf(2) ** -200)


def test_theta_trivial_values():
    assert theta(1, 0, "0.3", 0, CTX) == 0
    assert close(theta(4, 0, "1e-30", 0, CTX), 1, MP.mpf(10) ** -25)


def test_theta1_small_nome_limit():
    q = MP.mpf("1e-8")
    v = MP.mpf("0.9")
    # two-term truncation of the series is exact to O(q^(25/4))
    two_term = 2 * q ** MP.mpf(0.25) * MP.sin(v) - 2 * q ** MP.mpf(2.25) * MP.sin(3 * v)
    assert close(theta(1, v, q, 0, CTX), two_term, MP.mpf(10) ** -45)
    assert abs(theta(1, v, q, 0, CTX) / (2 * q ** MP.mpf(0.25) * MP.sin(v)) - 1) < 1e-15


def test_log_deriv_theta1():
    q = MP.mpf("0.2")
    assert abs(log_deriv_theta1(MP.pi / 2, q, CTX)) < TOL
    for v in ("1e-5", "1e-9"):
        v = MP.mpf(v)
        assert abs(v * log_deriv_theta1(v, q, CTX) - 1) < 10 * v
    v = MP.mpf("0.71")
    assert close(log_deriv_theta1(v, q, CTX), theta(1, v, q, 1, CTX) / theta(1, v, q, 0, CTX))
    with pytest.raises(PoleError):
        log_deriv_theta1(0, q, CTX)
    with pytest.raises(PoleError):
        log_deriv_theta1(MP.pi, q, CTX)


def test_log_deriv_jets():
    q, v, s = MP.mpf("0.35"), MP.mpf("0.6"), MP.mpf("1.5")
    jet = log_deriv_theta1_jet(v, q, 2, CTX, scale=s)
    t0, t1, t2, t3 = (jtheta_oracle(1, v, q, d) for d in range(4))
    L = t1 / t0
    ref = [L, s * (t2 / t0 - L**2), s**2 * (t3 / t0 - 3 * t2 * t1 / t0**2 + 2 * L**3) / 2]
    for a, b in zip(jet.coeffs, ref):
        assert close(a, b, MP.mpf(2) ** -200)
    assert close(log_deriv_theta4(v, q, CTX), jtheta_oracle(4, v, q, 1) / jtheta_oracle(4, v, q))


def test_elliptic_K():
    assert close(elliptic_K("1e-40", CTX), MP.pi / 2, MP.mpf(10) ** -35)
    # AGM oracle with the modulus taken from mpmath's own theta constants
    q = mpmath.mpf("0.1")
    with mpmath.workprec(300):
        k = (mpmath.jtheta(2, 0, q) / mpmath.jtheta(3, 0, q)) ** 2
        kp = mpmath.sqrt(1 - k * k)
        agm_K = mpmath.pi / (2 * mpmath.agm(1, kp))
    assert close(elliptic_K(q, CTX), MP.mpf(agm_K), MP.mpf(2) ** -200)
    for q in ("0.03", "0.4", "0.8"):
        t3 = jtheta_oracle(3, 0, q)
        assert close(elliptic_K(q, CTX), MP.pi / 2 * t3**2, MP.mpf(2) ** -200)
    # ellipk(m) is ill-conditioned as m -> 1, so only moderate nomes here
    for q in ("0.03", "0.2", "0.4"):
        m = elliptic_modulus(q, CTX) ** 2
        assert close(elliptic_K(q, CTX), MP.ellipk(m), MP.mpf(2) ** -200)


def test_jacobi_sn():
    q = MP.mpf("0.15")
    K = elliptic_K(q, CTX)
    assert jacobi_sn(0, q, CTX) == 0
    assert close(jacobi_sn(K, q, CTX), 1, MP.mpf(2) ** -200)
    u = MP.mpf("0.77")
    assert abs(jacobi_sn(u, "1e-8", CTX) - MP.sin(u)) < 1e-6
    m = elliptic_modulus(q, CTX) ** 2
    with mpmath.workprec(300):
        ref = mpmath.ellipfun("sn", u, m=m)
    assert close(jacobi_sn(u, q, CTX), MP.mpf(ref), MP.mpf(2) ** -200)


def test_nome_and_errors():
    assert close(nome_af(1, CTX), MP.exp(-MP.pi**2 / 2))
    with pytest.raises(ParameterDomainError):
        theta(1, 0.3, 1.0, 0, CTX)
    with pytest.raises(ValueError):
        theta(5, 0.3, 0.1, 0, CTX)
    with pytest.raises(ValueError):
        theta_jet(1, 0.3, 0.1, 1, CTX, method="other")
