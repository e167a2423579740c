"""Moment functionals on polynomials in z.

Every functional is applied through its monomial moments: expand the input,
pair coefficient k with the k-th moment.  The q-binomial diagonal basis is
used to *define* the phi and theta moments, and the basis route is kept
available as an independent cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Tuple

from .carlitz import MomentSeq, q_euler_recursive
from .qkit import parity_sign, poch, q_factorial, q_int
from .ratcore import Q_ONE, Q_ZERO, RatFuncQ, const, qpow, serialize
from .orthopoly import FamilyId, ZPoly, family_polys


class PairingError(ValueError):
    """Functional and family do not belong together."""


@dataclass(frozen=True)
class FunctionalId:
    """Which functional: plain phi, shifted phi, theta, or xi."""

    kind: str  # "phi" | "phi_ell" | "theta_ell" | "xi_ell"
    ell: int = 0

    _KINDS = ("phi", "phi_ell", "theta_ell", "xi_ell")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if self.ell < 0:
            raise ValueError("ell must be >= 0")
        if self.kind == "phi_ell" and self.ell not in (0, 1):
            raise ValueError("phi_ell is only defined for ell in {0, 1}")

    def __str__(self) -> str:
        if self.kind == "phi":
            return "phi"
        return f"{self.kind}({self.ell})"


@lru_cache(maxsize=None)
def qbinom_basis(m: int, n: int) -> ZPoly:
    """[m, z choose n]_q = prod_{k=m-n+1}^{m} ([k]_q + q^k z) / [n]_q!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = ZPoly.one()
    for k in range(m - n + 1, m + 1):
        out = out * ZPoly([q_int(k), qpow(k)])
    return out.scale(Q_ONE / q_factorial(n))


@lru_cache(maxsize=None)
def _diag_leading(n: int) -> RatFuncQ:
    # leading z-coefficient of [n, z choose n]_q
    return qpow(n * (n + 1) // 2) / q_factorial(n)


def to_diagonal_basis(p: ZPoly) -> List[RatFuncQ]:
    """Coefficients c with p = sum_n c[n] * [n, z choose n]_q."""
    if p.is_zero:
        return []
    deg = p.degree
    coeffs = [Q_ZERO] * (deg + 1)
    residual = p
    for n in range(deg, -1, -1):
        c = residual.coeff(n) / _diag_leading(n)
        coeffs[n] = c
        if not c.is_zero:
            residual = residual - qbinom_basis(n, n).scale(c)
    return coeffs


def from_diagonal_basis(coeffs: List[RatFuncQ]) -> ZPoly:
    out = ZPoly.zero()
    for n, c in enumerate(coeffs):
        if not c.is_zero:
            out = out + qbinom_basis(n, n).scale(c)
    return out


@lru_cache(maxsize=None)
def phi_on_basis(n: int) -> RatFuncQ:
    """phi of the diagonal basis element: 1 / (-q^2; q)_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Q_ONE / poch(-qpow(2), n)


def phi_closed_m_n(m: int, n: int) -> RatFuncQ:
    """phi([m, z choose n]_q) = (-1)^{n-m} q^{n-m} / (-q^2; q)_n for 0 <= m <= n."""
    if not 0 <= m <= n:
        raise ValueError("closed form needs 0 <= m <= n")
    return const(parity_sign(n - m)) * qpow(n - m) / poch(-qpow(2), n)


def phi_closed_n1_n(n: int) -> RatFuncQ:
    """phi([n+1, z choose n]_q) = (1+q)/q - 1/(q (-q^2; q)_n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (Q_ONE + qpow(1)) / qpow(1) - Q_ONE / (qpow(1) * poch(-qpow(2), n))


def phi(p: ZPoly) -> RatFuncQ:
    """phi through monomial moments phi(z^k) = epsilon_k."""
    out = Q_ZERO
    for k, c in enumerate(p.coeffs):
        if not c.is_zero:
            out = out + c * q_euler_recursive(k)
    return out


def phi_via_basis(p: ZPoly) -> RatFuncQ:
    """Independent route: expand in the diagonal basis, apply phi there."""
    out = Q_ZERO
    for n, c in enumerate(to_diagonal_basis(p)):
        if not c.is_zero:
            out = out + c * phi_on_basis(n)
    return out


def verify_phi_relation(p: ZPoly) -> bool:
    """Check q*phi(P(1 + q z)) + phi(P(z)) == (1 + q) P(0)."""
    inner = ZPoly([Q_ONE, qpow(1)])
    lhs = qpow(1) * phi(p.compose(inner)) + phi(p)
    rhs = (Q_ONE + qpow(1)) * p(Q_ZERO)
    return lhs == rhs


@lru_cache(maxsize=None)
def theta_on_basis(ell: int, n: int) -> RatFuncQ:
    """theta_ell of the diagonal basis element."""
    if ell < 0 or n < 0:
        raise ValueError("ell and n must be >= 0")
    return poch(qpow(ell + 1), n) / (poch(qpow(1), n) * poch(-qpow(ell + 2), n))


@lru_cache(maxsize=None)
def _monomial_diag_coeffs(n: int) -> Tuple[RatFuncQ, ...]:
    return tuple(to_diagonal_basis(ZPoly.monomial(n)))


@lru_cache(maxsize=None)
def theta_moment(ell: int, n: int) -> RatFuncQ:
    """theta_ell(z^n), computed through the diagonal basis expansion."""
    out = Q_ZERO
    for j, c in enumerate(_monomial_diag_coeffs(n)):
        if not c.is_zero:
            out = out + c * theta_on_basis(ell, j)
    return out


@lru_cache(maxsize=None)
def xi_moment(ell: int, n: int) -> RatFuncQ:
    """xi_{ell,n} = q^{(ell+1) n} (-q; q)_n / (-q^{ell+2}; q)_n."""
    if ell < 0 or n < 0:
        raise ValueError("ell and n must be >= 0")
    return qpow((ell + 1) * n) * poch(-qpow(1), n) / poch(-qpow(ell + 2), n)


def theta_moment_seq(ell: int) -> MomentSeq:
    return MomentSeq(f"theta_ell({ell})", lambda n: theta_moment(ell, n))


def xi_moment_seq(ell: int) -> MomentSeq:
    return MomentSeq(f"xi_ell({ell})", lambda n: xi_moment(ell, n))


def moments_for(functional: FunctionalId) -> Callable[[int], RatFuncQ]:
    """The monomial moment map n -> L(z^n) of the functional."""
    if functional.kind == "phi":
        return q_euler_recursive
    if functional.kind == "phi_ell":
        shift = functional.ell
        return lambda n: q_euler_recursive(n + shift)
    if functional.kind == "theta_ell":
        return lambda n: theta_moment(functional.ell, n)
    return lambda n: xi_moment(functional.ell, n)


def apply_functional(functional: FunctionalId, p: ZPoly) -> RatFuncQ:
    """L(p) = sum_k coeff_k * L(z^k)."""
    moments = moments_for(functional)
    out = Q_ZERO
    for k, c in enumerate(p.coeffs):
        if not c.is_zero:
            out = out + c * moments(k)
    return out


@dataclass
class OrthogonalityReport:
    functional: FunctionalId
    family: FamilyId
    upto: int
    failures: List[Tuple[int, int, RatFuncQ]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "functional": str(self.functional),
            "family": str(self.family),
            "upto": self.upto,
            "failures": [
                {"m": m, "n": n, "value": json.loads(serialize(v))}
                for m, n, v in self.failures
            ],
        }


_VALID_PAIRINGS = {
    "phi": "p_family",
    "phi_ell": "p_family",
    "theta_ell": "p_family",
    "xi_ell": "monic_big_q_jacobi",
}


def verify_orthogonality(
    functional: FunctionalId, family: FamilyId, upto: int
) -> OrthogonalityReport:
    """Exhaustive orthogonality check L(p_m p_n) = 0 for m != n, L(p_0) != 0.

    Fails loudly on a functional/family pair the theory does not match up.
    """
    expected_kind = _VALID_PAIRINGS[functional.kind]
    func_ell = 0 if functional.kind == "phi" else functional.ell
    if family.kind != expected_kind or family.ell != func_ell:
        raise PairingError(
            f"{functional} does not pair with {family}; expected "
            f"{expected_kind}({func_ell})"
        )
    if upto < 0:
        raise ValueError("upto must be >= 0")
    polys = family_polys(family, upto)
    failures: List[Tuple[int, int, RatFuncQ]] = []
    head = apply_functional(functional, polys[0])
    if head.is_zero:
        failures.append((0, 0, head))
    for n in range(1, upto + 1):
        for m in range(n):
            val = apply_functional(functional, polys[m] * polys[n])
            if not val.is_zero:
                failures.append((m, n, val))
    return OrthogonalityReport(functional, family, upto, failures)
