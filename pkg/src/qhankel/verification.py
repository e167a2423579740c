"""Named identity checks behind the ``verify`` command.

Every check is a function of a single size parameter ``max_n`` and returns a
CheckResult.  The bounds inside each check are scaled so that ``max_n = 5``
reproduces the battery this library was built to pass; smaller values give a
quick smoke run, larger ones a deeper sweep.  All comparisons are structural
equalities of canonical RatFuncQ values, never numeric tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .carlitz import (
    limit_q1,
    q_bernoulli_explicit,
    q_bernoulli_recursive,
    q_bernoulli_seq,
    q_euler_explicit,
    q_euler_recursive,
    q_euler_seq,
)
from .functionals import (
    FunctionalId,
    apply_functional,
    from_diagonal_basis,
    phi,
    phi_closed_m_n,
    phi_closed_n1_n,
    phi_via_basis,
    qbinom_basis,
    theta_moment,
    theta_moment_seq,
    to_diagonal_basis,
    verify_orthogonality,
    verify_phi_relation,
    xi_moment_seq,
)
from .hankel import (
    closed_form_chapoton_zeng,
    closed_form_theorem1,
    closed_form_theta_det,
    closed_form_xi_det,
    det_exact,
    det_heilermann,
    det_shifted_via_favard,
    hankel_matrix,
    jfraction_expand,
    jfraction_for_eps,
    jfraction_for_theta,
    jfraction_for_xi,
    jfraction_from_moments,
    verify_exponent_integrality,
)
from .orthopoly import (
    FamilyId,
    ZPoly,
    build_j_via_phi2,
    build_jtilde_via_phi2,
    build_p_via_phi2,
    coeffs_ab,
    coeffs_monic,
    coeffs_p,
    affine_transform,
    family_polys,
    favard_data_p,
    p1_at_zero_closed,
    three_term_build,
)
from .qkit import (
    PochSpec,
    parity_sign,
    q_binom,
    q_int,
    q_pochhammer,
    verify_q_chu_vandermonde,
)
from .ratcore import (
    Q,
    Q_ONE,
    Q_ZERO,
    QPoly,
    RatFuncQ,
    const,
    deserialize,
    qpow,
    serialize,
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check: pass/fail, case count, failure detail."""

    name: str
    passed: bool
    cases: int
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "detail": self.detail,
        }


CHECKS: Dict[str, Callable[[int], CheckResult]] = {}


def _register(name: str) -> Callable:
    def wrap(fn: Callable[[int], CheckResult]) -> Callable[[int], CheckResult]:
        CHECKS[name] = fn
        return fn

    return wrap


def _done(name: str, cases: int, failures: List[str]) -> CheckResult:
    detail = "; ".join(failures[:3])
    if len(failures) > 3:
        detail += f"; +{len(failures) - 3} more"
    return CheckResult(name, not failures, cases, detail)


def _random_ratfunc(rng: random.Random, max_deg: int) -> RatFuncQ:
    num = QPoly([rng.randint(-6, 6) for _ in range(rng.randint(1, max_deg + 1))])
    den = QPoly([rng.randint(-6, 6) for _ in range(rng.randint(1, max_deg + 1))])
    while den.is_zero:
        den = QPoly([rng.randint(-6, 6) for _ in range(max_deg + 1)])
    return RatFuncQ(num, den)


@_register("ratcore-field-laws")
def _check_field_laws(max_n: int) -> CheckResult:
    rng = random.Random(0x51C)
    failures: List[str] = []
    trials = 10 + 5 * max_n
    for t in range(trials):
        a = _random_ratfunc(rng, 4)
        b = _random_ratfunc(rng, 4)
        c = _random_ratfunc(rng, 4)
        if (a + b) + c != a + (b + c):
            failures.append(f"trial {t}: addition not associative")
        if (a * b) * c != a * (b * c):
            failures.append(f"trial {t}: multiplication not associative")
        if a * (b + c) != a * b + a * c:
            failures.append(f"trial {t}: not distributive")
        if a - a != Q_ZERO:
            failures.append(f"trial {t}: a - a != 0")
        if not a.is_zero and a / a != Q_ONE:
            failures.append(f"trial {t}: a / a != 1")
        renorm = RatFuncQ(a.num, a.den)
        if renorm.num.coeffs != a.num.coeffs or renorm.den.coeffs != a.den.coeffs:
            failures.append(f"trial {t}: canonical form not a fixed point")
    return _done("ratcore-field-laws", trials, failures)


@_register("serialize-roundtrip")
def _check_serialize(max_n: int) -> CheckResult:
    rng = random.Random(0xD15C)
    failures: List[str] = []
    sample = [Q_ZERO, Q_ONE, Q, -Q, qpow(-3)]
    sample += [_random_ratfunc(rng, 5) for _ in range(10 + 5 * max_n)]
    for i, v in enumerate(sample):
        blob = serialize(v)
        back = deserialize(blob)
        if back != v:
            failures.append(f"case {i}: value round trip broke ({blob})")
        elif serialize(back) != blob:
            failures.append(f"case {i}: byte round trip broke ({blob})")
    return _done("serialize-roundtrip", len(sample), failures)


@_register("q-pascal")
def _check_q_pascal(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    top = 2 * max_n + 2
    for m in range(1, top + 1):
        for n in range(m + 1):
            cases += 1
            lhs = q_binom(m, n)
            r1 = q_binom(m - 1, n - 1) + qpow(n) * q_binom(m - 1, n)
            r2 = qpow(m - n) * q_binom(m - 1, n - 1) + q_binom(m - 1, n)
            if lhs != r1 or lhs != r2:
                failures.append(f"q-Pascal broke at (m,n)=({m},{n})")
    for m in range(-2 * max_n, 2 * max_n + 1):
        cases += 1
        if q_int(m).eval_at(Fraction(1)) != m:
            failures.append(f"[{m}]_q at q=1 != {m}")
    a = -qpow(2)
    for length in range(max_n + 1):
        cases += 1
        step = q_pochhammer(PochSpec(a, 1, length + 1))
        if step != q_pochhammer(PochSpec(a, 1, length)) * (Q_ONE - a * qpow(length)):
            failures.append(f"Pochhammer one-step broke at length {length}")
    return _done("q-pascal", cases, failures)


@_register("chu-vandermonde")
def _check_chu_vandermonde(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    a_choices = [Q, -Q, qpow(2), Q_ZERO]
    c_choices = [-qpow(2), -qpow(3), qpow(3)]
    for a in a_choices:
        for c in c_choices:
            for n in range(max_n + 1):
                cases += 1
                if not verify_q_chu_vandermonde(a, c, n):
                    failures.append(f"sum broke at a={a}, c={c}, n={n}")
    return _done("chu-vandermonde", cases, failures)


@_register("q-binomial-theorem")
def _check_q_binomial_theorem(max_n: int) -> CheckResult:
    failures: List[str] = []
    top = max_n + 3
    for n in range(top + 1):
        lhs = ZPoly.one()
        for k in range(n):
            lhs = lhs * ZPoly([Q_ONE, -qpow(k)])
        rhs = ZPoly(
            [
                const(parity_sign(k)) * qpow(k * (k - 1) // 2) * q_binom(n, k)
                for k in range(n + 1)
            ]
        )
        if lhs != rhs:
            failures.append(f"expansion of (z;q)_{n} broke")
    return _done("q-binomial-theorem", top + 1, failures)


@_register("carlitz-consistency")
def _check_carlitz(max_n: int) -> CheckResult:
    failures: List[str] = []
    top = 4 * max_n
    for n in range(top + 1):
        if q_euler_explicit(n) != q_euler_recursive(n):
            failures.append(f"eps routes disagree at n={n}")
        if q_bernoulli_explicit(n) != q_bernoulli_recursive(n):
            failures.append(f"beta routes disagree at n={n}")
    return _done("carlitz-consistency", 2 * (top + 1), failures)


# Classical values of the q -> 1 limit of eps_0..eps_9, frozen.
_EPS_AT_ONE = [
    Fraction(1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 4),
    Fraction(0),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(17, 8),
    Fraction(0),
    Fraction(-31, 2),
]


@_register("qeuler-q1-limit")
def _check_qeuler_q1(max_n: int) -> CheckResult:
    failures: List[str] = []
    top = min(9, 2 * max_n)
    for n in range(top + 1):
        got = limit_q1("qeuler", n)
        if got != _EPS_AT_ONE[n]:
            failures.append(f"limit at n={n}: got {got}, want {_EPS_AT_ONE[n]}")
    return _done("qeuler-q1-limit", top + 1, failures)


@_register("cross-route-families")
def _check_cross_route(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    u = RatFuncQ(QPoly((0, -1, 1)))
    v = qpow(1)
    for ell in range(4):
        series = [build_p_via_phi2(ell, n) for n in range(max_n + 1)]
        recur = three_term_build(favard_data_p(ell), max_n)
        jtilde = [build_jtilde_via_phi2(ell, n) for n in range(max_n + 1)]
        affine = affine_transform(jtilde, u, v)
        for n in range(max_n + 1):
            cases += 1
            if not (series[n] == recur[n] == affine[n]):
                failures.append(f"P routes disagree at ell={ell}, n={n}")
            if not series[n].is_monic or not jtilde[n].is_monic:
                failures.append(f"monicity broke at ell={ell}, n={n}")
        js = [build_j_via_phi2(ell, n) for n in range(max_n + 2)]
        for n in range(1, max_n + 1):
            cases += 1
            A, B = coeffs_ab(ell, n)
            lhs = js[n + 1].scale(A)
            rhs = js[n] * ZPoly([A + B - Q_ONE, Q_ONE]) - js[n - 1].scale(B)
            if lhs != rhs:
                failures.append(f"three-point contiguity broke at ell={ell}, n={n}")
    for n in range(max_n + 4):
        cases += 1
        if build_p_via_phi2(1, n)(Q_ZERO) != p1_at_zero_closed(n):
            failures.append(f"value at zero broke at n={n}")
    return _done("cross-route-families", cases, failures)


@_register("basis-roundtrip")
def _check_basis_roundtrip(max_n: int) -> CheckResult:
    rng = random.Random(0xBA515)
    failures: List[str] = []
    trials = 8 + 2 * max_n
    for t in range(trials):
        p = ZPoly(
            [const(rng.randint(-7, 7)) for _ in range(rng.randint(1, max_n + 4))]
        )
        if from_diagonal_basis(to_diagonal_basis(p)) != p:
            failures.append(f"trial {t}: basis round trip broke")
    return _done("basis-roundtrip", trials, failures)


@_register("phi-moments")
def _check_phi_moments(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for n in range(3 * max_n + 1):
        cases += 1
        if phi(ZPoly.monomial(n)) != q_euler_recursive(n):
            failures.append(f"Phi(z^{n}) != eps_{n}")
    rng = random.Random(0xE1)
    for t in range(8):
        cases += 1
        p = ZPoly([const(rng.randint(-9, 9)) for _ in range(max_n + 4)])
        if phi(p) != phi_via_basis(p):
            failures.append(f"trial {t}: moment and basis routes disagree")
    return _done("phi-moments", cases, failures)


@_register("phi-closed-forms")
def _check_phi_closed_forms(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    top = max_n + 1
    for n in range(top + 1):
        for m in range(n + 1):
            cases += 1
            if phi_via_basis(qbinom_basis(m, n)) != phi_closed_m_n(m, n):
                failures.append(f"closed form broke at (m,n)=({m},{n})")
        cases += 1
        if phi_via_basis(qbinom_basis(n + 1, n)) != phi_closed_n1_n(n):
            failures.append(f"closed form broke at (n+1,n)=({n + 1},{n})")
    return _done("phi-closed-forms", cases, failures)


@_register("phi-relation")
def _check_phi_relation(max_n: int) -> CheckResult:
    rng = random.Random(0x4E1)
    failures: List[str] = []
    trials = max(10, 20 * max_n)
    for t in range(trials):
        p = ZPoly([const(rng.randint(-20, 20)) for _ in range(rng.randint(1, 9))])
        if not verify_phi_relation(p):
            failures.append(f"trial {t}: functional equation broke")
    return _done("phi-relation", trials, failures)


@_register("phi-orthogonality")
def _check_phi_orthogonality(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in (0, 1):
        functional = FunctionalId("phi") if ell == 0 else FunctionalId("phi_ell", 1)
        report = verify_orthogonality(functional, FamilyId("p_family", ell), max_n + 1)
        cases += (max_n + 1) * (max_n + 2) // 2 + 1
        for m, n, value in report.failures:
            failures.append(f"ell={ell}: pairing ({m},{n}) gave {value}")
        polys = family_polys(FamilyId("p_family", ell), max_n + 3)
        for n in range(1, max_n + 4):
            cases += 1
            value = apply_functional(functional, polys[n])
            if not value.is_zero:
                failures.append(f"ell={ell}: single n={n} gave {value}")
    return _done("phi-orthogonality", cases, failures)


@_register("theta-orthogonality")
def _check_theta_orthogonality(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in range(4):
        report = verify_orthogonality(
            FunctionalId("theta_ell", ell), FamilyId("p_family", ell), max_n + 1
        )
        cases += (max_n + 1) * (max_n + 2) // 2 + 1
        for m, n, value in report.failures:
            failures.append(f"ell={ell}: pairing ({m},{n}) gave {value}")
    return _done("theta-orthogonality", cases, failures)


@_register("xi-orthogonality")
def _check_xi_orthogonality(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in range(4):
        report = verify_orthogonality(
            FunctionalId("xi_ell", ell),
            FamilyId("monic_big_q_jacobi", ell),
            max_n + 1,
        )
        cases += (max_n + 1) * (max_n + 2) // 2 + 1
        for m, n, value in report.failures:
            failures.append(f"ell={ell}: pairing ({m},{n}) gave {value}")
    return _done("xi-orthogonality", cases, failures)


@_register("intertwining")
def _check_intertwining(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in (0, 1):
        eps_ell = q_euler_recursive(ell)
        for n in range(2 * max_n + 1):
            cases += 1
            if q_euler_recursive(n + ell) != eps_ell * theta_moment(ell, n):
                failures.append(f"moment mismatch at ell={ell}, n={n}")
    return _done("intertwining", cases, failures)


@_register("theorem1-shift0")
def _check_theorem1_shift0(max_n: int) -> CheckResult:
    failures: List[str] = []
    eps = q_euler_seq()
    jf = jfraction_for_eps(0)
    for n in range(max_n + 1):
        brute = det_exact(hankel_matrix(eps, 0, n))
        closed = closed_form_theorem1(0, n)
        heil = det_heilermann(jf, n)
        if not (brute == closed == heil):
            failures.append(f"three-way disagreement at n={n}: brute={brute}")
    return _done("theorem1-shift0", max_n + 1, failures)


@_register("theorem1-shift1")
def _check_theorem1_shift1(max_n: int) -> CheckResult:
    failures: List[str] = []
    eps = q_euler_seq()
    jf = jfraction_for_eps(0)
    for n in range(max_n + 1):
        brute = det_exact(hankel_matrix(eps, 1, n))
        closed = closed_form_theorem1(1, n)
        favard = det_shifted_via_favard(jf, n)
        if not (brute == closed == favard):
            failures.append(f"three-way disagreement at n={n}: brute={brute}")
    return _done("theorem1-shift1", max_n + 1, failures)


@_register("theorem1-shift2")
def _check_theorem1_shift2(max_n: int) -> CheckResult:
    failures: List[str] = []
    eps = q_euler_seq()
    jf = jfraction_for_eps(1)
    for n in range(max_n + 1):
        brute = det_exact(hankel_matrix(eps, 2, n))
        closed = closed_form_theorem1(2, n)
        favard = det_shifted_via_favard(jf, n)
        if not (brute == closed == favard):
            failures.append(f"three-way disagreement at n={n}: brute={brute}")
    return _done("theorem1-shift2", max_n + 1, failures)


@_register("theorem1-q1-limit")
def _check_theorem1_q1(max_n: int) -> CheckResult:
    failures: List[str] = []
    for n in range(max_n + 1):
        got = closed_form_theorem1(0, n).eval_at(Fraction(1))
        want = Fraction(-1, 4) ** ((n + 1) * n // 2)
        for k in range(1, n + 1):
            want *= Fraction(math.factorial(k)) ** 2
        if got != want:
            failures.append(f"limit at n={n}: got {got}, want {want}")
    return _done("theorem1-q1-limit", max_n + 1, failures)


@_register("chapoton-zeng")
def _check_chapoton_zeng(max_n: int) -> CheckResult:
    failures: List[str] = []
    beta = q_bernoulli_seq()
    for n in range(max_n + 1):
        brute = det_exact(hankel_matrix(beta, 0, n))
        closed = closed_form_chapoton_zeng(n)
        if brute != closed:
            failures.append(f"disagreement at n={n}: brute={brute}")
    return _done("chapoton-zeng", max_n + 1, failures)


@_register("theta-det")
def _check_theta_det(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in range(4):
        seq = theta_moment_seq(ell)
        jf = jfraction_for_theta(ell)
        for n in range(max_n + 1):
            cases += 1
            brute = det_exact(hankel_matrix(seq, 0, n))
            closed = closed_form_theta_det(ell, n)
            heil = det_heilermann(jf, n)
            if not (brute == closed == heil):
                failures.append(f"disagreement at ell={ell}, n={n}")
    return _done("theta-det", cases, failures)


@_register("xi-det")
def _check_xi_det(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    for ell in range(4):
        seq = xi_moment_seq(ell)
        jf = jfraction_for_xi(ell)
        for n in range(max_n + 1):
            cases += 1
            brute = det_exact(hankel_matrix(seq, 0, n))
            closed = closed_form_xi_det(ell, n)
            heil = det_heilermann(jf, n)
            if not (brute == closed == heil):
                failures.append(f"disagreement at ell={ell}, n={n}")
    return _done("xi-det", cases, failures)


@_register("jfraction-eps")
def _check_jfraction_eps(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    order = 2 * max_n + 2
    for ell in (0, 1):
        expansion = jfraction_expand(jfraction_for_eps(ell), order)
        for k in range(order + 1):
            cases += 1
            if expansion[k] != q_euler_recursive(k + ell):
                failures.append(f"coefficient {k} broke at ell={ell}")
    return _done("jfraction-eps", cases, failures)


@_register("jfraction-roundtrip")
def _check_jfraction_roundtrip(max_n: int) -> CheckResult:
    failures: List[str] = []
    cases = 0
    eps = q_euler_seq()
    moments = eps.prefix(2 * max_n + 2)
    back = jfraction_from_moments(moments)
    for i, a in enumerate(back.a_list):
        cases += 1
        if a != coeffs_p(0, i)[0]:
            failures.append(f"eps a[{i}] came back wrong")
    for i, b in enumerate(back.b_list):
        cases += 1
        if b != coeffs_p(0, i + 1)[1]:
            failures.append(f"eps b[{i + 1}] came back wrong")
    for ell in range(4):
        xi_moments = jfraction_expand(jfraction_for_xi(ell), 2 * max_n + 2)
        back = jfraction_from_moments(xi_moments)
        for i, a in enumerate(back.a_list):
            cases += 1
            if a != coeffs_monic(ell, i)[0]:
                failures.append(f"xi(ell={ell}) a[{i}] came back wrong")
        for i, b in enumerate(back.b_list):
            cases += 1
            if b != coeffs_monic(ell, i + 1)[1]:
                failures.append(f"xi(ell={ell}) b[{i + 1}] came back wrong")
    return _done("jfraction-roundtrip", cases, failures)


@_register("exponent-integrality")
def _check_exponent_integrality(max_n: int) -> CheckResult:
    top = max(50, 10 * max_n)
    ok = verify_exponent_integrality(top)
    return CheckResult(
        "exponent-integrality",
        ok,
        top + 1,
        "" if ok else "a quarter of a binomial failed to be an integer",
    )


def available_checks() -> List[str]:
    return sorted(CHECKS)


def run_checks(max_n: int, only: Optional[str] = None) -> List[CheckResult]:
    """Run all registered checks (or those whose name starts with ``only``).

    Results come back sorted by name so reports do not depend on registration
    or execution order.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    names = [n for n in CHECKS if only is None or n.startswith(only)]
    results = [CHECKS[name](max_n) for name in names]
    return sorted(results, key=lambda r: r.name)
