"""Exact arithmetic in Z[q] and its fraction field Q(q).

``QPoly`` is a dense integer-coefficient polynomial in the formal variable q,
``RatFuncQ`` a fully reduced quotient of two of them.  RatFuncQ is the scalar
type used by every other module; equality of reduced representatives is
semantic equality, so values can be compared and hashed structurally.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class DivisionByZeroError(ZeroDivisionError):
    """Division by the zero polynomial or zero rational function."""


class PoleError(ZeroDivisionError):
    """Evaluation at a point where the reduced denominator vanishes."""


class DeserializeError(ValueError):
    """Rejected serialized input; ``position`` names the offending piece."""

    def __init__(self, message: str, position: str = "") -> None:
        self.position = position
        super().__init__(f"{message} (at {position})" if position else message)


# Kronecker substitution pays off once operands stop being tiny.
_KRONECKER_CUTOFF = 24


def _mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _mul_kronecker(a: Sequence[int], b: Sequence[int]) -> list:
    # Pack each polynomial into one big integer with signed blocks; CPython
    # multiplies huge ints subquadratically, which beats pure-Python
    # convolution by a wide margin at these sizes.
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bound = ma * mb * min(len(a), len(b))
    bbits = bound.bit_length() + 2
    xa = 0
    for c in reversed(a):
        xa = (xa << bbits) + c
    xb = 0
    for c in reversed(b):
        xb = (xb << bbits) + c
    prod = xa * xb
    mask = (1 << bbits) - 1
    half = 1 << (bbits - 1)
    full = 1 << bbits
    out = []
    carry = 0
    for _ in range(len(a) + len(b) - 1):
        limb = (prod & mask) + carry
        prod >>= bbits
        if limb >= half:
            limb -= full
            carry = 1
        else:
            carry = 0
        out.append(limb)
    return out


class QPoly:
    """Dense univariate integer polynomial; ``coeffs[i]`` multiplies q**i.

    Canonical form strips trailing zeros; the zero polynomial is the empty
    tuple everywhere.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c: int) -> "QPoly":
        return QPoly((c,))

    @staticmethod
    def q_power(m: int) -> "QPoly":
        if m < 0:
            raise ValueError("q_power wants m >= 0; negative powers live in RatFuncQ")
        return QPoly((0,) * m + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        if min(len(a), len(b)) < _KRONECKER_CUTOFF:
            return QPoly(_mul_schoolbook(a, b))
        return QPoly(_mul_kronecker(a, b))

    def scale(self, k: int) -> "QPoly":
        if k == 0:
            return _P_ZERO
        return QPoly(c * k for c in self.coeffs)

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = _P_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Quotient self/other when other divides self exactly over Z[q]."""
        if other.is_zero:
            raise DivisionByZeroError("polynomial division by zero")
        if self.is_zero:
            return _P_ZERO
        dq = self.degree - other.degree
        if dq < 0:
            raise ArithmeticError("inexact polynomial division")
        rem = list(self.coeffs)
        ocs = other.coeffs
        on = len(ocs)
        olc = ocs[-1]
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + on - 1]
            if c == 0:
                continue
            qc, r = divmod(c, olc)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k] = qc
            for j in range(on):
                rem[k + j] -= qc * ocs[j]
        if any(rem[: on - 1]):
            raise ArithmeticError("inexact polynomial division")
        return QPoly(quot)

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return Fraction(acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_text(self)


_P_ZERO = QPoly()
_P_ONE = QPoly((1,))


def poly_text(p: QPoly, var: str = "q") -> str:
    """Human-readable ascending-degree rendering, e.g. ``1 - q + 2q^3``."""
    if p.is_zero:
        return "0"
    chunks = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if abs(c) == 1 else f"{abs(c)}{v}"
        chunks.append((c < 0, body))
    neg, body = chunks[0]
    out = ("-" if neg else "") + body
    for neg, body in chunks[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _pseudo_rem(A: Sequence[int], B: Sequence[int]) -> list:
    """Remainder of lc(B)^(deg A - deg B + 1) * A modulo B, over Z."""
    rem = list(A)
    db = len(B) - 1
    lb = B[-1]
    steps = len(A) - len(B) + 1
    while rem and len(rem) - 1 >= db:
        la = rem[-1]
        shift = len(rem) - 1 - db
        new = [lb * c for c in rem]
        for j, bc in enumerate(B):
            new[shift + j] -= la * bc
        new.pop()
        while new and new[-1] == 0:
            new.pop()
        rem = new
        steps -= 1
    if steps > 0 and rem:
        f = lb ** steps
        rem = [c * f for c in rem]
    return rem


def _exact_int_div(a: int, b: int) -> int:
    qt, r = divmod(a, b)
    if r:
        raise ArithmeticError("internal: inexact integer division in gcd chain")
    return qt


def _primitive_positive(coeffs: Sequence[int]) -> QPoly:
    p = QPoly(coeffs)
    cont = p.content()
    cs = [c // cont for c in p.coeffs]
    if cs[-1] < 0:
        cs = [-c for c in cs]
    return QPoly(cs)


def _subresultant_gcd(f: QPoly, g: QPoly) -> QPoly:
    """Gcd of two nonzero primitive polynomials via a subresultant PRS.

    The subresultant scaling keeps intermediate integer coefficients from
    exploding the way naive pseudo-remainder chains do.
    """
    A = list(f.coeffs)
    B = list(g.coeffs)
    gg = 1
    h = 1
    while True:
        d = (len(A) - 1) - (len(B) - 1)
        R = _pseudo_rem(A, B)
        if not R:
            break
        if len(R) == 1:
            return _P_ONE
        divisor = gg * h ** d
        A, B = B, [_exact_int_div(c, divisor) for c in R]
        gg = A[-1]
        if d == 1:
            h = gg
        elif d > 1:
            h = _exact_int_div(gg ** d, h ** (d - 1))
    return _primitive_positive(B)


class _HeuristicFailed(Exception):
    pass


def _int_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _balanced_digits(value: int, base: int) -> list:
    """Digits of value in base `base`, each shifted into (-base/2, base/2]."""
    digits = []
    v = value
    while v:
        r = v % base
        if 2 * r >= base:
            r -= base
        digits.append(r)
        v = (v - r) // base
    return digits

def _div_exact_or_none(A: Sequence[int], B: Sequence[int]) -> Optional[list]:
    """Quotient of A by B over Z if the division is exact, else None."""
    if len(A) < len(B):
        return None
    rem = list(A)
    lb = B[-1]
    width = len(B)
    out = [0] * (len(A) - width + 1)
    for k in range(len(out) - 1, -1, -1):
        top = rem[k + width - 1]
        if top == 0:
            continue
        qt, r = divmod(top, lb)
        if r:
            return None
        out[k] = qt
        for j, bc in enumerate(B):
            rem[k + j] -= qt * bc
    if any(rem[: width - 1]):
        return None
    return out


def _heu_gcd(f_coeffs: Sequence[int], g_coeffs: Sequence[int]) -> tuple:
    """Heuristic gcd of primitive polynomials with positive leading term.

    Evaluates both at a large integer, takes the integer gcd, and reads a
    candidate divisor back off the balanced digit expansion.  A candidate is
    accepted only after exact trial division by both inputs, and the
    cofactors are then reduced recursively, so whatever comes back really is
    the gcd; only the search itself is heuristic.  Raises _HeuristicFailed
    when a few evaluation points in a row produce nothing usable.
    """
    nf = max(abs(c) for c in f_coeffs)
    ng = max(abs(c) for c in g_coeffs)
    x = 2 * min(nf, ng) + 29
    for _ in range(6):
        fv = _int_eval(f_coeffs, x)
        gv = _int_eval(g_coeffs, x)
        if fv and gv:
            h = math.gcd(fv, gv)
            if h == 1:
                return _ONE_TUPLE
            cand = _balanced_digits(h, x)
            cont = 0
            for c in cand:
                cont = math.gcd(cont, c)
            if cont > 1:
                cand = [c // cont for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            if len(cand) == 1:
                return _ONE_TUPLE
            qf = _div_exact_or_none(f_coeffs, cand)
            if qf is not None:
                qg = _div_exact_or_none(g_coeffs, cand)
                if qg is not None:
                    if len(qf) == 1 or len(qg) == 1:
                        return tuple(cand)
                    deeper = _heu_gcd(tuple(qf), tuple(qg))
                    if len(deeper) == 1:
                        return tuple(cand)
                    return (QPoly(cand) * QPoly(deeper)).coeffs
        x = 2 * x + 29
    raise _HeuristicFailed


def _primitive_gcd(f: QPoly, g: QPoly) -> QPoly:
    """Gcd of two nonzero primitive polynomials, heuristic first."""
    if f.degree < g.degree:
        f, g = g, f
    if g.degree == 0:
        return _P_ONE
    try:
        return QPoly(_heu_gcd(f.coeffs, g.coeffs))
    except _HeuristicFailed:
        return _subresultant_gcd(f, g)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Gcd in Z[q], normalized primitive with positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return _P_ZERO
    if a.is_zero:
        return _primitive_positive(b.coeffs)
    if b.is_zero:
        return _primitive_positive(a.coeffs)
    return _primitive_gcd(_primitive_positive(a.coeffs), _primitive_positive(b.coeffs))


def _gcd_full(a: QPoly, b: QPoly) -> QPoly:
    """Gcd in Z[q] including integer content, positive leading coefficient."""
    if a.is_zero and b.is_zero:
        return _P_ZERO
    if a.is_zero:
        return b if b.leading > 0 else -b
    if b.is_zero:
        return a if a.leading > 0 else -a
    c = math.gcd(a.content(), b.content())
    pg = _primitive_gcd(_primitive_positive(a.coeffs), _primitive_positive(b.coeffs))
    return pg.scale(c)


_ONE_TUPLE = (1,)


class RatFuncQ:
    """Element of Q(q) as a reduced fraction of integer polynomials.

    Invariants: den is nonzero with positive leading coefficient, and the
    full gcd of num and den (content included) is 1.  Under those rules each
    value has exactly one representative, so ``==`` and ``hash`` are textual
    and semantic at the same time.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[QPoly, int], den: Union[QPoly, int, None] = None) -> None:
        if isinstance(num, int):
            num = QPoly.const(num)
        if den is None:
            den = _P_ONE
        elif isinstance(den, int):
            den = QPoly.const(den)
        if den.is_zero:
            raise DivisionByZeroError("zero denominator")
        if num.is_zero:
            self.num, self.den = _P_ZERO, _P_ONE
        else:
            g = _gcd_full(num, den)
            if g.coeffs != _ONE_TUPLE:
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.leading < 0:
                num, den = -num, -den
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "RatFuncQ":
        # Internal: caller certifies the pair is already canonical.
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RatFuncQ":
        return cls(QPoly.const(f.numerator), QPoly.const(f.denominator))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.coeffs == _ONE_TUPLE and self.den.coeffs == _ONE_TUPLE

    @staticmethod
    def _coerce(x: object) -> "RatFuncQ":
        if isinstance(x, RatFuncQ):
            return x
        if isinstance(x, int):
            return const(x)
        if isinstance(x, Fraction):
            return RatFuncQ.from_fraction(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        na, da, nb, db = self.num, self.den, o.num, o.den
        # Fraction-style reduced addition: only gcds of structured pieces.
        g = _gcd_full(da, db)
        if g.coeffs == _ONE_TUPLE:
            num = na * db + nb * da
            if num.is_zero:
                return Q_ZERO
            return RatFuncQ._raw(num, da * db)
        sa = da.exact_div(g)
        sb = db.exact_div(g)
        t = na * sb + nb * sa
        if t.is_zero:
            return Q_ZERO
        g2 = _gcd_full(t, g)
        if g2.coeffs == _ONE_TUPLE:
            return RatFuncQ._raw(t, sa * db)
        return RatFuncQ._raw(t.exact_div(g2), sa * db.exact_div(g2))

    __radd__ = __add__

    def __neg__(self) -> "RatFuncQ":
        if self.is_zero:
            return self
        return RatFuncQ._raw(-self.num, self.den)

    def __sub__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Q_ZERO
        na, da, nb, db = self.num, self.den, o.num, o.den
        g1 = _gcd_full(na, db)
        if g1.coeffs != _ONE_TUPLE:
            na = na.exact_div(g1)
            db = db.exact_div(g1)
        g2 = _gcd_full(nb, da)
        if g2.coeffs != _ONE_TUPLE:
            nb = nb.exact_div(g2)
            da = da.exact_div(g2)
        return RatFuncQ._raw(na * nb, da * db)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZeroError("division by zero rational function")
        if self.is_zero:
            return Q_ZERO
        recip = RatFuncQ._raw(o.den, o.num) if o.num.leading > 0 else RatFuncQ._raw(-o.den, -o.num)
        return self * recip

    def __rtruediv__(self, other: object) -> "RatFuncQ":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> "RatFuncQ":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Q_ONE
        if k < 0:
            if self.is_zero:
                raise DivisionByZeroError("zero to a negative power")
            base = Q_ONE / self
            k = -k
        else:
            base = self
        # num and den stay coprime under powers, so no re-reduction needed.
        return RatFuncQ._raw(base.num ** k, base.den ** k)

    def eval_at(self, point: Union[int, Fraction]) -> Fraction:
        dv = self.den.evaluate(point)
        if dv == 0:
            raise PoleError(f"pole at q = {point}")
        return self.num.evaluate(point) / dv

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.num.coeffs, self.den.coeffs))
            self._hash = h
        return h

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"RatFuncQ({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self) -> str:
        if self.den.coeffs == _ONE_TUPLE:
            return poly_text(self.num)
        return f"({poly_text(self.num)})/({poly_text(self.den)})"


Q_ZERO = RatFuncQ._raw(_P_ZERO, _P_ONE)
Q_ONE = RatFuncQ._raw(_P_ONE, _P_ONE)
Q = RatFuncQ._raw(QPoly((0, 1)), _P_ONE)


def const(k: int) -> RatFuncQ:
    if k == 0:
        return Q_ZERO
    if k == 1:
        return Q_ONE
    return RatFuncQ._raw(QPoly.const(k), _P_ONE)


def qpow(m: int) -> RatFuncQ:
    """q**m for any integer m, negative exponents included."""
    if m >= 0:
        return RatFuncQ._raw(QPoly.q_power(m), _P_ONE)
    return RatFuncQ._raw(_P_ONE, QPoly.q_power(-m))


_ARITH_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def ratfunc_arith(lhs: RatFuncQ, rhs: RatFuncQ, op: str) -> RatFuncQ:
    """Named-op arithmetic surface; ``op`` is one of add/sub/mul/div."""
    try:
        fn = _ARITH_OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(lhs, rhs)


def eval_at(f: RatFuncQ, point: Union[int, Fraction]) -> Fraction:
    return f.eval_at(point)


def serialize(f: RatFuncQ) -> str:
    """Canonical JSON text for a RatFuncQ; byte-stable for equal values."""
    payload = {
        "num": [str(c) for c in f.num.coeffs] or ["0"],
        "den": [str(c) for c in f.den.coeffs],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


_INT_CHARS = set("0123456789")


def _parse_coeff_list(obj: object, key: str) -> QPoly:
    if not isinstance(obj, list):
        raise DeserializeError("expected an array of decimal strings", key)
    coeffs = []
    for i, item in enumerate(obj):
        if not isinstance(item, str) or not item:
            raise DeserializeError("coefficient must be a decimal string", f"{key}[{i}]")
        body = item[1:] if item[0] in "+-" else item
        if not body or set(body) - _INT_CHARS:
            raise DeserializeError(f"bad integer literal {item!r}", f"{key}[{i}]")
        coeffs.append(int(item))
    return QPoly(coeffs)


def deserialize(text: str) -> RatFuncQ:
    """Parse the output of :func:`serialize`; errors carry a position."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DeserializeError(f"invalid JSON: {e.msg}", f"offset {e.pos}") from None
    if not isinstance(data, dict):
        raise DeserializeError("expected a JSON object", "top level")
    extra = set(data) - {"num", "den"}
    if extra:
        raise DeserializeError(f"unexpected key {sorted(extra)[0]!r}", "top level")
    for key in ("num", "den"):
        if key not in data:
            raise DeserializeError(f"missing key {key!r}", "top level")
    num = _parse_coeff_list(data["num"], "num")
    den = _parse_coeff_list(data["den"], "den")
    if den.is_zero:
        raise DeserializeError("zero denominator", "den")
    return RatFuncQ(num, den)
