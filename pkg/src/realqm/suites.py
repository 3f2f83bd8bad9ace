"""Seeded invariant suites behind ``realqm check``.

Each suite takes a :class:`RunConfig` and returns one ExperimentReport.
"""

from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .algebra import (
    RealifiedChannel,
    real_add,
    real_apply_channel,
    real_evolve,
    real_expectation,
    real_mul,
)
from .composite import (
    ancilla_witness,
    counterexample_report,
    modified_tensor_operator,
    modified_tensor_state,
    naive_tensor,
    pair_ket,
    parity_contract,
)
from .exceptions import ValidationError
from .realify import complexify, realify_ket, realify_operator, realify_state
from .report import ExperimentReport
from .scenarios import entanglement_swapping_demo, nonlocal_operation_demo, two_source_born_check

# Structural identities vs oracle agreement.
STRUCTURAL_TOL = 1e-12
AGREEMENT_TOL = 1e-9


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    dims: tuple = (2, 3, 4)
    trials: int = 100
    tolerance: float = None
    suite: str = None
    output_path: str = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.dims or any(int(d) < 1 for d in self.dims):
            raise ValidationError("dims must be a non-empty list of positive integers")
        if int(self.trials) < 1:
            raise ValidationError("trials must be >= 1")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValidationError("tolerance must be > 0")
        if self.suite is not None and self.suite not in SUITES:
            raise ValidationError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")

    def tol(self, default):
        return default if self.tolerance is None else self.tolerance


def _split(seed, n, salt=0):
    rng = np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, salt])
    return [int(s) for s in rng.integers(0, 2**63, size=n)]


def _seeds(cfg, salt):
    return _split(cfg.seed, cfg.trials, salt)


def _dim(cfg, t):
    return int(cfg.dims[t % len(cfg.dims)])


def _maxabs(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def _report(name, cfg, tol, metrics, extra_verdicts=None):
    verdicts = {"max_abs_error_within_tol": metrics["max_abs_error"] <= tol}
    verdicts.update(extra_verdicts or {})
    return ExperimentReport(
        name=name, seed=int(cfg.seed),
        params={"dims": list(cfg.dims), "trials": int(cfg.trials), "tol": tol},
        metrics=metrics, verdicts=verdicts,
    )


def suite_roundtrip(cfg):
    tol = cfg.tol(STRUCTURAL_TOL)
    err, dagger_err = 0.0, 0.0
    for t, s in enumerate(_seeds(cfg, 1)):
        A = oracle.sample("generic", _dim(cfg, t), s)
        M = realify_operator(A)
        err = max(err, _maxabs(complexify(M), A))
        dagger_err = max(dagger_err, _maxabs(realify_operator(A.conj().T).data, M.data.T))
    return _report("roundtrip", cfg, tol, {"max_abs_error": err, "dagger_transpose_error": dagger_err},
                   {"dagger_transpose": dagger_err <= tol})


def suite_homomorphism(cfg):
    tol = cfg.tol(STRUCTURAL_TOL)
    add_err, mul_err = 0.0, 0.0
    for t, s in enumerate(_seeds(cfg, 2)):
        d = _dim(cfg, t)
        s1, s2 = _split(s, 2)
        V1, V2 = oracle.sample("generic", d, s1), oracle.sample("generic", d, s2)
        R1, R2 = realify_operator(V1), realify_operator(V2)
        add_err = max(add_err, _maxabs(real_add(R1, R2).data, realify_operator(V1 + V2).data))
        mul_err = max(mul_err, _maxabs(real_mul(R2, R1).data, realify_operator(V2 @ V1).data))
    return _report("homomorphism", cfg, tol,
                   {"max_abs_error": max(add_err, mul_err), "add_error": add_err, "mul_error": mul_err})


def suite_trace(cfg):
    tol = cfg.tol(STRUCTURAL_TOL)
    err = 0.0
    for t, s in enumerate(_seeds(cfg, 3)):
        d = _dim(cfg, t)
        s_psi, s_rho, s_u, s_ch = _split(s, 4)
        psi = oracle.sample("pure", d, s_psi)
        err = max(err, abs(realify_ket(psi).norm() - np.linalg.norm(psi)))
        rho = realify_state(oracle.sample("density", d, s_rho))
        err = max(err, abs(np.trace(rho.data) - 1.0))
        evolved = real_evolve(rho, realify_operator(oracle.sample("unitary", d, s_u)))
        err = max(err, abs(np.trace(evolved.data) - 1.0))
        out = real_apply_channel(RealifiedChannel.from_complex(oracle.sample_channel(d, 3, s_ch)), rho)
        err = max(err, abs(np.trace(out.data) - 1.0))
    return _report("trace", cfg, tol, {"max_abs_error": err})


def suite_born(cfg):
    tol = cfg.tol(1e-11)
    err = 0.0
    for t, s in enumerate(_seeds(cfg, 4)):
        d = _dim(cfg, t)
        rho = oracle.sample("density", d, s)
        O = oracle.sample_observable(d, s ^ 1)
        err = max(err, abs(real_expectation(realify_state(rho), realify_operator(O))
                           - oracle.expectation(rho, O)))
    return _report("born", cfg, tol, {"max_abs_error": err})


def suite_two_source(cfg):
    d = max(2, int(cfg.dims[0]))
    return two_source_born_check(d, d, cfg.trials, cfg.seed, tol=cfg.tol(AGREEMENT_TOL))


def suite_counterexample(cfg):
    incompatible = True
    repair = 0.0
    for d1 in cfg.dims:
        for d2 in cfg.dims:
            r = counterexample_report(d1, d2, cfg.seed)
            incompatible &= r.verdicts["incompatible"]
            repair = max(repair, r.metrics["parity_repair_max_abs_error"],
                         r.metrics["modified_tensor_max_abs_error"])
    tol = cfg.tol(STRUCTURAL_TOL)
    return _report("counterexample", cfg, tol, {"max_abs_error": repair},
                   {"incompatible": bool(incompatible)})


def suite_parity(cfg):
    tol = cfg.tol(STRUCTURAL_TOL)
    err = 0.0
    for t, s in enumerate(_seeds(cfg, 5)):
        d1, d2 = _dim(cfg, t), _dim(cfg, t + 1)
        psi, phi = oracle.sample("pure", d1, s), oracle.sample("pure", d2, s ^ 1)
        if t % 4 == 0:
            psi, phi = 1j * psi.real, 1j * phi.real
        got = parity_contract(pair_ket(realify_ket(psi), realify_ket(phi)))
        err = max(err, _maxabs(got.data, realify_ket(oracle.tensor(psi, phi)).data))
    return _report("parity", cfg, tol, {"max_abs_error": err})


def suite_modified_tensor(cfg):
    tol = cfg.tol(STRUCTURAL_TOL)
    op_err, state_err, assoc_err = 0.0, 0.0, 0.0
    for t, s in enumerate(_seeds(cfg, 6)):
        d1, d2, d3 = _dim(cfg, t), _dim(cfg, t + 1), _dim(cfg, t + 2)
        V1, V2, V3 = (oracle.sample("generic", d, s ^ k) for k, d in enumerate((d1, d2, d3)))
        M1, M2, M3 = realify_operator(V1), realify_operator(V2), realify_operator(V3)
        op_err = max(op_err, _maxabs(modified_tensor_operator(M1, M2).data,
                                     realify_operator(oracle.tensor(V1, V2)).data))
        assoc = modified_tensor_operator(modified_tensor_operator(M1, M2), M3)
        assoc_err = max(assoc_err, _maxabs(assoc.data, realify_operator(oracle.tensor_all(V1, V2, V3)).data))
        r1, r2 = oracle.sample("density", d1, s ^ 7), oracle.sample("density", d2, s ^ 8)
        state_err = max(state_err, _maxabs(modified_tensor_state(realify_state(r1), realify_state(r2)).data,
                                           realify_state(oracle.tensor(r1, r2)).data))
    return _report("modified_tensor", cfg, tol,
                   {"max_abs_error": max(op_err, state_err, assoc_err), "operator_error": op_err,
                    "state_error": state_err, "associativity_error": assoc_err})


def suite_witness(cfg):
    misclassified = 0
    for t, s in enumerate(_seeds(cfg, 7)):
        d = _dim(cfg, t)
        A = oracle.sample("generic", d, s)
        for M in (A, A.real.astype(complex)):
            expected = bool(np.max(np.abs(M.imag)) > 1e-10)
            misclassified += ancilla_witness(realify_operator(M)).uses_shared_ancilla != expected
    return ExperimentReport(
        name="witness", seed=int(cfg.seed),
        params={"dims": list(cfg.dims), "trials": int(cfg.trials)},
        metrics={"misclassified": float(misclassified)},
        verdicts={"zero_misclassified": misclassified == 0},
    )


def suite_swap(cfg):
    return entanglement_swapping_demo(cfg.seed, tol=cfg.tol(AGREEMENT_TOL))


def suite_nonlocal(cfg):
    return nonlocal_operation_demo(cfg.seed, tol=cfg.tol(AGREEMENT_TOL))


def suite_naive_dimension(cfg):
    clash = all(naive_tensor(np.eye(2 * d1), np.eye(2 * d2)).shape[0] != 2 * d1 * d2
                for d1 in cfg.dims for d2 in cfg.dims)
    return ExperimentReport(name="naive_dimension", seed=int(cfg.seed),
                            params={"dims": list(cfg.dims)}, verdicts={"dimension_clash": clash})


SUITES = {
    "roundtrip": suite_roundtrip,
    "homomorphism": suite_homomorphism,
    "trace": suite_trace,
    "born": suite_born,
    "two_source": suite_two_source,
    "counterexample": suite_counterexample,
    "naive_dimension": suite_naive_dimension,
    "parity": suite_parity,
    "modified_tensor": suite_modified_tensor,
    "witness": suite_witness,
    "swap": suite_swap,
    "nonlocal": suite_nonlocal,
}


def run(cfg):
    names = [cfg.suite] if cfg.suite else list(SUITES)
    return [SUITES[name](cfg) for name in names]
