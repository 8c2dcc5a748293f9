import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcticcurve.errors import (
    BoundaryRegimeError,
    DegenerateWeightError,
    FerroelectricUnsupportedError,
    ParameterDomainError,
)
from arcticcurve.params import (
    AF,
    DIS,
    PhasePoint,
    Regime,
    SpectralParams,
    crossing_reflect,
    params_from_phase,
    phase_from_spectral,
    spectral_from_phase,
    weights_from_spectral,
    xi_max,
)
from arcticcurve.precision import PrecisionContext

CTX = PrecisionContext(256)
MP = CTX.mp
TIGHT = MP.mpf(2) ** -240


def close(a, b, tol=TIGHT):
    return abs(MP.mpf(a) - MP.mpf(b)) <= tol * (1 + abs(MP.mpf(b)))


def test_af_symmetric_point_weights():
    w = weights_from_spectral(SpectralParams(0, MP.mpf("0.5"), AF), CTX)
    assert w.a == w.b
    # independent oracle: series of mpmath at a different precision
    with mpmath.workdps(90):
        assert close(w.a, mpmath.sinh(mpmath.mpf("0.5")))
        assert close(w.c, mpmath.sinh(1))


def test_af_boundary_weight_vanishes():
    w = weights_from_spectral(SpectralParams(MP.mpf("0.5"), MP.mpf("0.5"), AF), CTX)
    assert w.a == 0


def test_free_fermion_point():
    p = SpectralParams(MP.pi / 2, MP.pi / 4, DIS)
    w = weights_from_spectral(p, CTX)
    assert close(w.a, w.b) and close(w.a, MP.sin(3 * MP.pi / 4)) and close(w.c, 1)
    ph = phase_from_spectral(p, CTX)
    assert abs(ph.delta) < TIGHT and close(ph.t, 1)


def test_af_delta_closed_form():
    ph = phase_from_spectral(SpectralParams(0, MP.mpf("0.5"), AF), CTX)
    assert close(ph.delta, -MP.cosh(1)) and close(ph.t, 1)


@pytest.mark.parametrize("eta", ["0.1", "0.7", "2.5"])
def test_af_lambda_zero_gives_t_one(eta):
    assert close(phase_from_spectral(SpectralParams(0, MP.mpf(eta), AF), CTX).t, 1)


def test_phase_to_spectral_known_points():
    p = params_from_phase(-MP.cosh(1), 1, CTX)
    assert p.regime is AF and close(p.eta, "0.5") and abs(p.lam) < TIGHT
    p = params_from_phase(0, 1, CTX)
    assert p.regime is DIS and close(p.eta, MP.pi / 4) and close(p.lam, MP.pi / 2)
    p = params_from_phase(-2, 1, CTX)
    assert close(p.eta, MP.acosh(2) / 2) and abs(p.lam) < TIGHT


def test_regime_classification():
    assert Regime.from_delta(-1.5) is AF
    assert Regime.from_delta(-0.99) is DIS
    assert Regime.from_delta(0.99) is DIS
    with pytest.raises(FerroelectricUnsupportedError):
        Regime.from_delta(1)
    with pytest.raises(FerroelectricUnsupportedError):
        params_from_phase(3, 1, CTX)
    with pytest.raises(BoundaryRegimeError):
        params_from_phase(-1, 1, CTX)


def test_domain_errors():
    with pytest.raises(ParameterDomainError):
        PhasePoint(-2, 0)
    with pytest.raises(ParameterDomainError):
        SpectralParams(1, MP.mpf("0.5"), AF)
    with pytest.raises(ParameterDomainError):
        SpectralParams(0.1, 0.3, DIS)
    with pytest.raises(ParameterDomainError):
        SpectralParams(1, -0.3, AF)


def test_degenerate_weight_has_no_phase():
    with pytest.raises(DegenerateWeightError):
        phase_from_spectral(SpectralParams(MP.mpf("0.5"), MP.mpf("0.5"), AF), CTX)


def test_crossing_examples():
    p = SpectralParams(MP.mpf("0.2"), MP.mpf("0.5"), AF)
    q = crossing_reflect(p, CTX)
    assert q.lam == -p.lam and q.eta == p.eta
    w, wq = weights_from_spectral(p, CTX), weights_from_spectral(q, CTX)
    assert close(w.a, wq.b) and close(w.b, wq.a) and close(w.c, wq.c)
    z = SpectralParams(0, MP.mpf("0.5"), AF)
    assert crossing_reflect(z, CTX).lam == 0
    d = SpectralParams(MP.pi / 3, MP.pi / 6, DIS)
    dq = crossing_reflect(d, CTX)
    assert close(dq.lam, 2 * MP.pi / 3)
    w, wq = weights_from_spectral(d, CTX), weights_from_spectral(dq, CTX)
    assert close(w.a, wq.b) and close(w.b, wq.a)


def test_xi_max(af, dis, mp):
    assert close(xi_max(af, CTX), mp.mpf(af.eta) - af.lam)
    assert close(xi_max(dis, CTX), mp.pi - dis.lam - dis.eta)


deltas = st.one_of(
    st.floats(min_value=-1e3, max_value=-1.001),
    st.floats(min_value=-0.999, max_value=0.999),
)
ts = st.floats(min_value=1e-3, max_value=1e3)


@settings(max_examples=60, deadline=None)
@given(deltas, ts)
def test_phase_roundtrip(delta, t):
    p = params_from_phase(delta, t, CTX)
    ph = phase_from_spectral(p, CTX)
    assert close(ph.delta, delta, MP.mpf(2) ** -200)
    assert close(ph.t, t, MP.mpf(2) ** -200)


@settings(max_examples=60, deadline=None)
@given(deltas, ts)
def test_crossing_is_involution_and_inverts_t(delta, t):
    p = params_from_phase(delta, t, CTX)
    q = crossing_reflect(p, CTX)
    assert close(crossing_reflect(q, CTX).lam, p.lam)
    assert close(phase_from_spectral(q, CTX).t, 1 / MP.mpf(t), MP.mpf(2) ** -200)
