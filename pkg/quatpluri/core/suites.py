"""Named verification suites.

Each suite runs a set of checks over seeded random cases and folds the
per-case residuals into a SuiteReport. Case k of suite s draws from its own
stream (see sampling.case_rng), so any case replays in isolation.
"""

import logging
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from quatpluri.core import sampling
from quatpluri.core.baston import (
    FormField,
    baston_matrix,
    baston_point,
    baston_poly,
    d_op,
    fundamental_check,
    fundamental_integral,
    fundamental_limit,
    fundamental_rhs,
    ma_mixed,
    quaternionic_hessian,
    quaternionic_hessian_direct,
    wedge_fields,
)
from quatpluri.core.errors import StructureError, UnknownSuiteError
from quatpluri.core.exterior import (
    act_matrix_on_form,
    beta_n,
    delta_n,
    elementary_strongly_positive,
    hh_to_2form,
    is_real_form,
    is_strongly_positive_2form,
    matrix_to_2form,
    normalization_residual,
    normalize_real_2form,
    omega_2n,
    rho_j,
    top_coefficient,
    wedge,
    wedge_all,
)
from quatpluri.core.fields import jet2_eval, nabla, norm_sq, z_coords
from quatpluri.core.moore import diagonalize_hyperhermitian, mixed_discriminant, moore_det
from quatpluri.core.polynomial import Polynomial
from quatpluri.core.quaternion_core import (
    DEFAULT_TOL,
    StructureKind,
    j_array,
    quaternionic_defect,
    real_rep,
    real_vec,
    structural_predicate,
    tau,
    tau_array,
    tau_inverse_array,
)
from quatpluri.core.transforms import (
    InvarianceKind,
    basis_change,
    chain_rule_check,
    invariance_check,
    pullback_field,
    pullback_polynomial,
    transformed_form,
    x_order_map,
)
from quatpluri.models.form import Form
from quatpluri.models.quaternion import CMatrix, QMatrix
from quatpluri.models.report import CheckResult, SuiteReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters shared by all suites."""

    seed: int = 0
    cases: int = 50
    tol: float = DEFAULT_TOL
    n: int | None = None
    eps: float | None = None

    def dims(self, default: Iterable[int]) -> list[int]:
        return [self.n] if self.n is not None else list(default)


def _relative(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def _mismatch(actual: bool, expected: bool) -> float:
    return 0.0 if actual == expected else 1.0


class _Runner:
    """Collects checks for one suite."""

    def __init__(self, name: str, config: SuiteConfig):
        self.name = name
        self.config = config
        self.checks: list[CheckResult] = []

    def check(self, name: str, threshold: float) -> CheckResult:
        result = CheckResult(name=name, threshold=threshold)
        self.checks.append(result)
        return result

    def cases(self, stream: str) -> Iterable[tuple[int, np.random.Generator]]:
        """(case, rng) pairs for a named stream within this suite."""
        for case in range(self.config.cases):
            yield case, sampling.case_rng(self.config.seed, f"{self.name}/{stream}", case)

    def report(self) -> SuiteReport:
        for c in self.checks:
            logger.debug(f"{self.name}:{c.name} residual={c.max_residual:.3e} <= {c.threshold:g}")
        return SuiteReport(
            suite=self.name, seed=self.config.seed, cases=self.config.cases, checks=self.checks
        )


# ===== tau =====


def suite_tau(config: SuiteConfig) -> SuiteReport:
    run = _Runner("tau", config)

    homomorphism = run.check("tau_homomorphism", 1e-12)
    adjoint = run.check("tau_adjoint", 1e-12)
    hermitian = run.check("hyperhermitian_to_hermitian", 1e-12)
    for _, rng in run.cases("products"):
        p, m, l = (int(v) for v in rng.integers(1, 5, size=3))
        M = sampling.random_qmatrix(rng, p, m)
        N = sampling.random_qmatrix(rng, m, l)
        homomorphism.record(float(np.max(np.abs(tau_array(M @ N) - tau_array(M) @ tau_array(N)))))
        adjoint.record(float(np.max(np.abs(tau_array(M.adjoint()) - tau_array(M).conj().T))))
        H = tau_array(sampling.random_hyperhermitian(rng, p))
        hermitian.record(float(np.max(np.abs(H - H.conj().T))))

    range_check = run.check("range_characterization", 1e-12)
    for case, rng in run.cases("range"):
        n = int(rng.integers(1, 5))
        if case % 2:
            X = tau_array(sampling.random_qmatrix(rng, n, n))
        else:
            X = rng.standard_normal((2 * n, 2 * n)) + 1j * rng.standard_normal((2 * n, 2 * n))
        in_range = quaternionic_defect(X) <= config.tol
        try:
            roundtrip = float(np.max(np.abs(tau_array(tau_inverse_array(X, config.tol)) - X)))
            succeeded = True
        except StructureError:
            roundtrip, succeeded = 0.0, False
        range_check.record(_mismatch(succeeded, in_range) + roundtrip)

    representation = run.check("real_rep_homomorphism", 1e-12)
    vector = run.check("real_rep_vector", 1e-12)
    for _, rng in run.cases("real_rep"):
        n = int(rng.integers(1, 5))
        U = sampling.random_qmatrix(rng, n, n)
        V = sampling.random_qmatrix(rng, n, n)
        q = sampling.random_qmatrix(rng, n, 1)
        representation.record(
            float(np.max(np.abs(real_rep(U @ V).array - real_rep(U).array @ real_rep(V).array)))
        )
        vector.record(
            float(np.max(np.abs(real_vec(U @ q).array - real_rep(U).array @ real_vec(q).array)))
        )

    symplectic = run.check("unitary_is_symplectic", 0.0)
    for _, rng in run.cases("unitary"):
        E = sampling.random_unitary(rng, int(rng.integers(1, 5)))
        ok = structural_predicate(E, StructureKind.QUATERNIONIC_UNITARY, 1e-10)
        ok = ok and structural_predicate(
            tau(E), StructureKind.COMPLEX_SYMPLECTIC_UNITARY, 1e-10
        )
        symplectic.record(_mismatch(ok, True))

    return run.report()


# ===== Moore determinant =====


def suite_moore(config: SuiteConfig) -> SuiteReport:
    run = _Runner("moore", config)
    tol = config.tol

    pairing = run.check("eigenvalue_pairing", 1e-8)
    square = run.check("det_tau_is_square", 1e-8)
    diagonal = run.check("diagonalization_residual", 10 * tol)
    for _, rng in run.cases("hyperhermitian"):
        n = int(rng.integers(1, 6))
        M = sampling.random_hyperhermitian(rng, n)
        values = np.linalg.eigvalsh(tau_array(M))
        scale = max(1.0, float(np.max(np.abs(values))))
        pairing.record(float(np.max(np.abs(values[0::2] - values[1::2]))) / scale)
        spectral = diagonalize_hyperhermitian(M, tol)
        det = spectral.product()
        square.record(_relative(float(np.linalg.det(tau_array(M)).real), det * det))
        E = spectral.E
        diagonal.record(
            max(
                (E.adjoint() @ M @ E).max_abs_diff(spectral.diagonal()),
                (E.adjoint() @ E).max_abs_diff(QMatrix.identity(n)),
            )
        )

    complex_case = run.check("complex_hermitian_agreement", 1e-9)
    product = run.check("congruence_product_rule", 1e-7)
    for _, rng in run.cases("axioms"):
        n = int(rng.integers(1, 6))
        H = sampling.random_complex_hermitian(rng, n)
        a, _ = H.complex_parts
        complex_case.record(_relative(moore_det(H, tol), float(np.linalg.det(a).real)))
        M = sampling.random_hyperhermitian(rng, n)
        C = sampling.random_qmatrix(rng, n, n)
        CtC = C.adjoint() @ C
        lhs = moore_det(C.adjoint() @ M @ C, tol)
        product.record(_relative(lhs, moore_det(M, tol) * moore_det((CtC + CtC.adjoint()).scale(0.5), tol)))

    symmetry = run.check("mixed_symmetry", 1e-10)
    linearity = run.check("mixed_linearity", 1e-8)
    diagonal_case = run.check("mixed_equal_arguments", 1e-8)
    for _, rng in run.cases("mixed"):
        n = int(rng.integers(1, 4))
        Ms = [sampling.random_hyperhermitian(rng, n) for _ in range(n)]
        base = mixed_discriminant(Ms, tol)
        for perm in permutations(Ms):
            symmetry.record(_relative(mixed_discriminant(list(perm), tol), base))
        A = sampling.random_hyperhermitian(rng, n)
        t = float(rng.uniform())
        combined = A.scale(t) + Ms[0].scale(1.0 - t)
        expected = t * mixed_discriminant([A, *Ms[1:]], tol) + (1.0 - t) * base
        linearity.record(_relative(mixed_discriminant([combined, *Ms[1:]], tol), expected))
        diagonal_case.record(_relative(mixed_discriminant([Ms[0]] * n, tol), moore_det(Ms[0], tol)))

    return run.report()


# ===== Δₙ of τ(M)J versus the mixed discriminant =====


def _tau_j(M: QMatrix) -> CMatrix:
    return CMatrix.from_array(tau_array(M) @ j_array(M.rows))


def suite_thm12(config: SuiteConfig) -> SuiteReport:
    run = _Runner("thm12", config)
    tol = config.tol
    for n in config.dims(range(1, 5)):
        mixed = run.check(f"delta_vs_mixed_n{n}", 1e-7)
        single = run.check(f"delta_vs_moore_n{n}", 1e-7)
        for _, rng in run.cases(f"n{n}"):
            Ms = [sampling.random_hyperhermitian(rng, n) for _ in range(n)]
            factor = 2**n * math.factorial(n)
            value = delta_n([_tau_j(M) for M in Ms], 10 * tol)
            expected = factor * mixed_discriminant(Ms, tol)
            mixed.record(abs(value - expected) / max(1.0, abs(value)))
            repeated = delta_n([_tau_j(Ms[0])] * n, 10 * tol)
            single.record(_relative(repeated.real, factor * moore_det(Ms[0], tol)))
    return run.report()


# ===== Forms =====


def _random_sparse_form(rng: np.random.Generator, n: int, grade: int) -> Form:
    terms = {}
    for _ in range(3):
        key = tuple(sorted(int(i) for i in rng.choice(2 * n, size=grade, replace=False)))
        terms[key] = complex(int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
    return Form(n, grade, terms)


def suite_forms(config: SuiteConfig) -> SuiteReport:
    run = _Runner("forms", config)
    tol = config.tol

    criterion = run.check("reality_criterion", 0.0)
    for case, rng in run.cases("reality"):
        n = int(rng.integers(1, 5))
        M = sampling.random_skew(rng, n, real=bool(case % 2))
        commutes = quaternionic_defect(M.array) <= tol
        criterion.record(_mismatch(is_real_form(matrix_to_2form(M), tol), commutes))

    normalization = run.check("normalization_residual", 1e-8)
    consistency = run.check("normalization_matches_diagonalization", 1e-8)
    for _, rng in run.cases("normalize"):
        n = int(rng.integers(1, 6))
        H = sampling.random_hyperhermitian(rng, n)
        F = hh_to_2form(H, tol)
        spectral = normalize_real_2form(F, tol)
        M = CMatrix.from_array(tau_array(H) @ j_array(n))
        normalization.record(normalization_residual(M, spectral))
        reference = diagonalize_hyperhermitian(H, tol).nu
        consistency.record(float(np.max(np.abs(np.subtract(spectral.nu, reference)))))

    algebra = run.check("wedge_associative_graded_commutative", 1e-12)
    involution = run.check("rho_j_antilinear_involution", 1e-12)
    for _, rng in run.cases("algebra"):
        n = int(rng.integers(2, 4))
        p, q, r = (int(v) for v in rng.integers(1, 3, size=3))
        F, G, K = (_random_sparse_form(rng, n, k) for k in (p, q, r))
        algebra.record(wedge(wedge(F, G), K).max_abs_diff(wedge(F, wedge(G, K))))
        algebra.record(wedge(F, G).max_abs_diff(wedge(G, F).scale((-1) ** (p * q))))
        even = _random_sparse_form(rng, n, 2)
        c = complex(float(rng.standard_normal()), float(rng.standard_normal()))
        involution.record(rho_j(rho_j(even)).max_abs_diff(even))
        involution.record(rho_j(even.scale(c)).max_abs_diff(rho_j(even).scale(c.conjugate())))

    invariant = run.check("unitary_invariance_beta_omega", 1e-10)
    for _, rng in run.cases("invariance"):
        E = sampling.random_unitary(rng, 3)
        T = tau(E)
        invariant.record(act_matrix_on_form(T, beta_n(3)).max_abs_diff(beta_n(3)))
        invariant.record(act_matrix_on_form(T, omega_2n(3)).max_abs_diff(omega_2n(3)))

    positivity = run.check("strong_positivity", 0.0)
    for _, rng in run.cases("positivity"):
        n = int(rng.integers(1, 4))
        X = sampling.random_qmatrix(rng, n, n)
        gram = X.adjoint() @ X
        positive = (gram + gram.adjoint()).scale(0.5) + QMatrix.identity(n).scale(0.1)
        positivity.record(_mismatch(is_strongly_positive_2form(hh_to_2form(positive, tol), tol), True))
        positivity.record(
            _mismatch(is_strongly_positive_2form(hh_to_2form(-positive, tol), tol), False)
        )

    elementary = run.check("elementary_forms", 1e-12)
    for n in range(1, 4):
        projections = [QMatrix.from_rows([[1.0 if j == l else 0.0 for j in range(n)]]) for l in range(n)]
        elementary.record(elementary_strongly_positive(projections, n).max_abs_diff(omega_2n(n)))
        scaled = elementary_strongly_positive([projections[0].scale(3.0)], n)
        elementary.record(scaled.max_abs_diff(elementary_strongly_positive(projections[:1], n).scale(9.0)))
    elementary.record(
        wedge_all([beta_n(2), beta_n(2)]).max_abs_diff(omega_2n(2).scale(2.0))
    )

    return run.report()


# ===== d-operators and ∇ =====


def _random_form_field(rng: np.random.Generator, n: int, grade: int, degree: int) -> FormField:
    terms = {}
    for _ in range(2):
        key = tuple(sorted(int(i) for i in rng.choice(2 * n, size=grade, replace=False)))
        terms[key] = sampling.random_polynomial(rng, 4 * n, degree, terms=4)
    return FormField(n, grade, terms)


def suite_dops(config: SuiteConfig) -> SuiteReport:
    run = _Runner("dops", config)

    kronecker = run.check("nabla_z_kronecker", 0.0)
    norm_gradient = run.check("nabla_norm_sq", 0.0)
    for n in config.dims(range(1, 5)):
        size = 4 * n
        z = z_coords(n)
        for A in range(2 * n):
            for alpha in (0, 1):
                for B in range(2 * n):
                    for beta in (0, 1):
                        expected = 2.0 if (A, alpha) == (B, beta) else 0.0
                        value = nabla(A, alpha, z[B][beta])
                        kronecker.record(value.max_abs_diff(Polynomial.constant(size, expected)))
                norm_gradient.record(
                    nabla(A, alpha, norm_sq(n)).max_abs_diff(z[A][alpha].conj().scale(2.0))
                )

    conjugation = run.check("nabla_conjugation", 1e-10)
    commute = run.check("nabla_commute", 1e-10)
    for _, rng in run.cases("nabla"):
        n = int(rng.integers(1, 3))
        P = sampling.random_polynomial(rng, 4 * n, 4)
        for l in range(n):
            conjugation.record(nabla(l, 0, P).conj().max_abs_diff(nabla(n + l, 1, P.conj())))
            conjugation.record(nabla(n + l, 0, P).conj().max_abs_diff(-nabla(l, 1, P.conj())))
        A, B = (int(v) for v in rng.integers(0, 2 * n, size=2))
        a, b = (int(v) for v in rng.integers(0, 2, size=2))
        commute.record(nabla(A, a, nabla(B, b, P)).max_abs_diff(nabla(B, b, nabla(A, a, P))))

    anticommute = run.check("d0d1_anticommute", 0.0)
    nilpotent = run.check("d_squared_zero", 0.0)
    leibniz = run.check("leibniz_rule", 0.0)
    for _, rng in run.cases("d"):
        n = int(rng.integers(1, 3))
        degree = 4 if n == 1 else 3
        F = _random_form_field(rng, n, int(rng.integers(0, 2)), degree)
        G = _random_form_field(rng, n, 1, degree - 1)
        anticommute.record((d_op(0, d_op(1, F)) + d_op(1, d_op(0, F))).max_abs())
        nilpotent.record(max(d_op(0, d_op(0, F)).max_abs(), d_op(1, d_op(1, F)).max_abs()))
        for alpha in (0, 1):
            lhs = d_op(alpha, wedge_fields(F, G))
            rhs = wedge_fields(d_op(alpha, F), G) + wedge_fields(F, d_op(alpha, G)).scale(
                (-1) ** F.grade
            )
            leibniz.record(lhs.max_abs_diff(rhs))

    baston_norm = run.check("baston_norm_sq", 0.0)
    for n in config.dims(range(1, 4)):
        eight_beta = FormField(
            n, 2, {k: Polynomial.constant(4 * n, 8.0 * c.real) for k, c in beta_n(n).terms.items()}
        )
        baston_norm.record(baston_poly(norm_sq(n)).max_abs_diff(eight_beta))

    jets = run.check("jet_vs_symbolic_hessian", 1e-10)
    routes = run.check("baston_routes_agree", 1e-10)
    for _, rng in run.cases("jets"):
        n = int(rng.integers(1, 3))
        P = sampling.random_polynomial(rng, 4 * n, 4)
        q = sampling.random_point(rng, 4 * n)
        symbolic = P.hessian(q).real
        jet = jet2_eval(P.to_expr(), q).hess
        jets.record(float(np.max(np.abs(jet - symbolic))) / max(1.0, float(np.max(np.abs(symbolic)))))
        routes.record(baston_poly(P).evaluate(q).max_abs_diff(baston_point(P.to_expr(), q)))

    return run.report()


# ===== Wedge of Baston forms versus the Monge-Ampère operator =====


def _random_fields(rng: np.random.Generator, n: int, degree: int) -> list[Polynomial]:
    return [
        sampling.random_polynomial(rng, 4 * n, degree, terms=6, min_degree=2) for _ in range(n)
    ]


def suite_thm13(config: SuiteConfig) -> SuiteReport:
    run = _Runner("thm13", config)
    tol = config.tol
    points = 5

    for n in config.dims(range(1, 4)):
        theorem = run.check(f"wedge_vs_monge_ampere_n{n}", 1e-7)
        for _, rng in run.cases(f"n{n}"):
            us = _random_fields(rng, n, int(rng.integers(2, 4)))
            for _ in range(points):
                q = sampling.random_point(rng, 4 * n)
                lhs = top_coefficient(wedge_all([baston_point(u, q) for u in us])).real
                rhs = math.factorial(n) * ma_mixed(us, q, tol)
                theorem.record(abs(lhs - rhs) / max(1.0, abs(lhs)))

    hessian = run.check("hessian_vs_baston", 1e-9)
    direct = run.check("hessian_vs_direct", 1e-9)
    for _, rng in run.cases("hessian"):
        n = int(rng.integers(1, 4))
        u = sampling.random_polynomial(rng, 4 * n, 3)
        q = sampling.random_point(rng, 4 * n)
        H = quaternionic_hessian(u, q)
        D = baston_matrix(u, q).array
        scale = max(1.0, float(np.max(np.abs(D))))
        hessian.record(float(np.max(np.abs(tau_array(H) @ j_array(n) - 2.0 * D))) / scale)
        direct.record(H.max_abs_diff(quaternionic_hessian_direct(u, q)) / scale)

    psh = run.check("norm_sq_strongly_positive", 0.0)
    for _, rng in run.cases("psh"):
        n = int(rng.integers(1, 4))
        F = baston_point(norm_sq(n), sampling.random_point(rng, 4 * n))
        psh.record(_mismatch(is_strongly_positive_2form(F, tol), True))

    return run.report()


# ===== Fundamental solution =====


EPS_GRID = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
LIMIT_CASES = 10


def suite_fundsol(config: SuiteConfig) -> SuiteReport:
    run = _Runner("fundsol", config)

    for n in config.dims((1, 2)):
        pointwise = run.check(f"pointwise_n{n}", 1e-8)
        for _, rng in run.cases(f"pointwise_n{n}"):
            eps = config.eps if config.eps is not None else float(10.0 ** rng.uniform(-1.0, 1.0))
            lhs, rhs = fundamental_check(n, eps, sampling.random_point(rng, 4 * n, scale=0.5))
            pointwise.record(_relative(lhs, rhs))

        integral = run.check(f"integral_n{n}", 1e-2)
        result = fundamental_integral(n, config.eps if config.eps is not None else 1.0)
        integral.record(result.relative_error)
        integral.details = {
            "value": result.value,
            "expected": result.expected,
            "tail_bound": result.tail_bound,
        }

        limit = run.check(f"limit_n{n}", 1e-4)
        monotone = run.check(f"monotone_in_eps_n{n}", 0.0)
        constant = 8.0**n * math.factorial(n)
        for case, rng in run.cases(f"limit_n{n}"):
            if case >= LIMIT_CASES:
                break
            q = sampling.random_point(rng, 4 * n)
            # ‖q‖ in [0.5, 2]
            q = q / np.linalg.norm(q) * rng.uniform(0.5, 2.0)
            errors = [abs(fundamental_limit(n, q, eps) / constant - 1.0) for eps in EPS_GRID]
            limit.record(errors[-1])
            monotone.record(_mismatch(all(a > b for a, b in zip(errors, errors[1:])), True))

            s = float(q @ q)
            values = [fundamental_check(n, s * 2.0**k, q)[0] for k in range(6)]
            monotone.record(_mismatch(all(a > b for a, b in zip(values, values[1:])), True))
            expected = [fundamental_rhs(n, s * 2.0**k, s) for k in range(6)]
            pointwise.record(max(_relative(a, b) for a, b in zip(values, expected)))

    return run.report()


# ===== Invariance under quaternionic linear changes of variables =====


def suite_invariance(config: SuiteConfig) -> SuiteReport:
    run = _Runner("invariance", config)
    n = config.n if config.n is not None else 2

    representation = run.check("real_rep_of_product", 1e-12)
    for _, rng in run.cases("real_rep"):
        U = sampling.random_qmatrix(rng, n, n)
        q = sampling.random_qmatrix(rng, n, 1)
        representation.record(
            float(np.max(np.abs(real_vec(U @ q).array - real_rep(U).array @ real_vec(q).array)))
        )

    chain = run.check("chain_rule", 1e-9)
    operators = {kind: run.check(f"{kind.value}_invariance", 1e-8) for kind in InvarianceKind}
    symbolic = run.check("symbolic_d_invariance", 1e-8)
    for _, rng in run.cases("gl"):
        U = sampling.random_gl(rng, n)
        e = sampling.random_polynomial(rng, 4 * n, 4)
        q = sampling.random_point(rng, 4 * n)
        chain.record(chain_rule_check(U, e, q))
        for kind, result in operators.items():
            result.record(invariance_check(U, e, q, kind))
        pulled = pullback_polynomial(U, e)
        image = x_order_map(U) @ q
        for alpha in (0, 1):
            here = d_op(alpha, pulled).evaluate(q)
            there = transformed_form(U, d_op(alpha, e).evaluate(image))
            symbolic.record(here.max_abs_diff(there))

    forms = run.check("unitary_beta_omega", 1e-10)
    for _, rng in run.cases("unitary_forms"):
        E = sampling.random_unitary(rng, 3)
        forms.record(transformed_form(E, beta_n(3)).max_abs_diff(beta_n(3)))
        forms.record(transformed_form(E, omega_2n(3)).max_abs_diff(omega_2n(3)))

    composition = run.check("unitary_delta_composition", 1e-7)
    for _, rng in run.cases("unitary_fields"):
        E = sampling.random_unitary(rng, n)
        us = _random_fields(rng, n, 2)
        q = sampling.random_point(rng, 4 * n)
        image = x_order_map(E) @ q
        lhs = top_coefficient(wedge_all([baston_point(pullback_field(E, u), q) for u in us]))
        rhs = top_coefficient(wedge_all([baston_point(u, image) for u in us]))
        composition.record(abs(lhs - rhs) / max(1.0, abs(rhs)))

    basis = run.check("basis_change_composition", 1e-10)
    for _, rng in run.cases("composition"):
        U = sampling.random_gl(rng, n)
        V = sampling.random_gl(rng, n)
        F = _random_sparse_form(rng, n, int(rng.integers(1, 2 * n + 1)))
        combined = act_matrix_on_form(basis_change(U @ V), F)
        sequential = act_matrix_on_form(basis_change(V), act_matrix_on_form(basis_change(U), F))
        basis.record(combined.max_abs_diff(sequential) / max(1.0, combined.max_abs()))
        product = basis_change(U) @ basis_change(V)
        basis.record(basis_change(U @ V).max_abs_diff(product))

    return run.report()


# ===== Registry =====


SuiteFn = Callable[[SuiteConfig], SuiteReport]

SUITES: dict[str, SuiteFn] = {
    "tau": suite_tau,
    "moore": suite_moore,
    "thm12": suite_thm12,
    "forms": suite_forms,
    "dops": suite_dops,
    "thm13": suite_thm13,
    "fundsol": suite_fundsol,
    "invariance": suite_invariance,
}

ALL = "all"


def suite_names() -> list[str]:
    return [*SUITES, ALL]


def run_suite(name: str, config: SuiteConfig | None = None) -> SuiteReport:
    """Run a named suite, or every suite for "all".

    Raises:
        UnknownSuiteError: If the name is not registered
    """
    config = config or SuiteConfig()
    if name == ALL:
        checks: list[CheckResult] = []
        for suite in SUITES:
            report = run_suite(suite, config)
            for c in report.checks:
                c.name = f"{suite}.{c.name}"
                checks.append(c)
        return SuiteReport(suite=ALL, seed=config.seed, cases=config.cases, checks=checks)

    try:
        suite_fn = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(name, suite_names()) from None

    logger.info(f"Running suite {name} ({config.cases} cases, seed {config.seed})")
    report = suite_fn(config)
    status = "passed" if report.passed else f"FAILED ({len(report.failures)} checks)"
    logger.info(f"Suite {name} {status}, max residual {report.max_residual:.3e}")
    return report
