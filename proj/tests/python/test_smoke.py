import cmath
import math

import pytest

import ratineq as rq


def test_blaschke_unimodular():
    poles = rq.PoleSet([2.0, 3.0 + 1.0j])
    for t in range(32):
        z = cmath.exp(2j * math.pi * t / 32)
        assert abs(abs(rq.blaschke_eval(poles, z)) - 1.0) < 1e-12


def test_polynomial_norm():
    p = rq.Polynomial.from_roots([-2.0, -2.0, -2.0], 1.0)
    est = rq.sup_norm_circle(p)
    assert est.value == pytest.approx(27.0, rel=1e-9)
    assert est.argmax_theta == pytest.approx(0.0, abs=1e-6)


def test_callable_norm():
    est = rq.sup_norm_circle(lambda z: z * z + 1.0)
    assert est.value == pytest.approx(2.0, rel=1e-9)


def test_rational_eval_and_derivative():
    r = rq.RationalFn(rq.Polynomial([2.0, 1.0], roots=[-2.0]), rq.PoleSet([3.0]))
    assert r.eval(1.0) == pytest.approx(-1.5)
    assert r.derivative_eval(1.0) == pytest.approx(-1.25)
    with pytest.raises(rq.NearPoleError):
        r.eval(3.0)


def test_extremal_equality():
    r = rq.extremal_instance(1, 2.0, 3.0)
    nrm = rq.sup_norm_circle(r)
    z1 = rq.CirclePoint(0.0)
    lhs = rq.lhs_theorem21(r, 2.0, 0.0, z1)
    rhs = rq.rhs_theorem21(r, 2.0, 0.0, z1, nrm)
    assert lhs == pytest.approx(5.0 / 6.0, abs=1e-10)
    assert rhs == pytest.approx(5.0 / 6.0, abs=1e-10)
    rep = rq.check_rational("thm21", r, 2.0, 0.0, z1, nrm)
    assert rep.passed and rep.equality and not rep.quarantined


def test_nonzero_beta_is_quarantined():
    r = rq.extremal_instance(2, 1.0, 2.0)
    nrm = rq.sup_norm_circle(r)
    rep = rq.check_rational("thm21", r, 1.0, 0.5j, rq.CirclePoint(1.0), nrm)
    assert rep.quarantined
    assert rq.quarantined_evaluation("thm21", 0.5j)
    assert not rq.quarantined_evaluation("thm21", 0.0)


def test_hypothesis_errors():
    with pytest.raises(rq.HypothesisError):
        rq.PoleSet([0.5])
    with pytest.raises(ValueError):
        rq.PoleSet([0.5])  # HypothesisError subclasses ValueError
    with pytest.raises(rq.HypothesisError):
        rq.lemma4_scalar([0.5, 2.0])


def test_lemma4():
    rep = rq.lemma4_scalar([2.0, 3.0])
    assert rep.passed
    assert rep.lhs == pytest.approx(-5.0 / 6.0)
    assert rep.rhs == pytest.approx(-5.0 / 7.0)


def test_generator_determinism():
    spec = rq.InstanceSpec()
    spec.n = 4
    spec.seed = 99
    a = rq.gen_instance(spec)
    b = rq.gen_instance(spec)
    assert a.numerator.coeffs == b.numerator.coeffs
    assert a.poles.poles == b.poles.poles
    assert all(abs(z) >= spec.k - 1e-12 for z in a.numerator.roots)


def test_run_verify_smoke():
    cfg = rq.VerifyConfig()
    cfg.suite = "identities"
    cfg.instances = 5
    cfg.grid = 16
    rep = rq.run_verify(cfg)
    assert rep.counts.failed == 0
    assert rep.counts.passed == 5 * 16 * 3


def test_sweep_smoke():
    cfg = rq.SweepConfig()
    cfg.extremal = True
    cfg.grid = 16
    cfg.beta_moduli = 2
    cfg.beta_phases = 4
    rows = rq.sweep_beta(cfg)
    assert rows
    zero_rows = [r for r in rows if r.check_id == "thm21" and r.beta_mod == 0.0]
    assert all(abs(r.min_slack) <= 1e-8 for r in zero_rows)
