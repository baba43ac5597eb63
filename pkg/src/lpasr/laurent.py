"""Exact Laurent polynomials over Q and unimodular rows of length two.

A row (f, g) over Q[z, 1/z] is reducible when f + v*g is a unit for some
v; the units are exactly the nonzero monomials ``c*z^k``.  Since ``(g)``
equals ``(ĝ)`` for the polynomial normalization ĝ of g, reducibility asks
whether some ``c*z^k`` is congruent to f modulo ĝ.  When z has finite order
N modulo ĝ there are only N residues to compare, which decides the
question outright.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]
Poly = list  # dense coefficient list over Fraction, index = degree, no trailing zeros


class LaurentError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        self._c: dict[int, Fraction] = {
            int(k): Fraction(v) for k, v in (coeffs or {}).items() if v != 0
        }

    @classmethod
    def monomial(cls, c: Number, k: int = 0) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __eq__(self, other) -> bool:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        out: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not is_unit(self):
                raise LaurentError("only monomials have inverses")
            ((k, c),) = self._c.items()
            return LaurentPoly({k * n: c**n})
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def normalize(self) -> tuple[int, Poly]:
        """Split into ``z^shift * p`` with p a polynomial whose constant term is nonzero."""
        if not self._c:
            return 0, []
        lo = self.min_exp()
        return lo, [self._c.get(lo + i, Fraction(0)) for i in range(self.max_exp() - lo + 1)]

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            c = self._c[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                z = "z" if k == 1 else f"z^{k}"
                body = z if mag == 1 else f"{mag}*{z}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


Z = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})


def from_poly(p: Poly, shift: int = 0) -> LaurentPoly:
    return LaurentPoly({i + shift: c for i, c in enumerate(p)})


# ---------------------------------------------------------------------------
# literal syntax: 1+z, 1+z^2, 3*z^-2, -1/2*z^(3)

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*(?P<star>\*)?\s*"
    r"(?P<z>z(?:\s*\^\s*(?:\((?P<pexp>[+-]?\d+)\)|(?P<exp>[+-]?\d+)))?)?\s*"
)


def parse_laurent(text: str) -> LaurentPoly:
    pos, first, out = 0, True, LaurentPoly()
    text = text.strip()
    if not text:
        raise LaurentError("empty polynomial literal")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("z")):
            raise LaurentError(f"cannot parse polynomial at position {pos + 1}: {text!r}")
        if not first and not m.group("sign"):
            raise LaurentError(f"expected '+' or '-' at position {pos + 1}: {text!r}")
        if m.group("star") and not (m.group("coef") and m.group("z")):
            raise LaurentError(f"misplaced '*' at position {pos + 1}: {text!r}")
        c = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            c = -c
        k = 0
        if m.group("z"):
            k = int(m.group("pexp") or m.group("exp") or 1)
        out = out + LaurentPoly({k: c})
        pos, first = m.end(), False
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over Q


def _trim(p: Iterable[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pscale(a: Poly, c: Fraction) -> Poly:
    return _trim(x * c for x in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = _trim(r)
    return _trim(q), r


def _ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s*a + t*b = d, d = gcd(a, b) before normalization."""
    old_r, r = a, b
    old_s, s = [Fraction(1)], []
    old_t, t = [], [Fraction(1)]
    while r:
        q, rem = _pdivmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _padd(old_s, _pscale(_pmul(q, s), Fraction(-1)))
        old_t, t = t, _padd(old_t, _pscale(_pmul(q, t), Fraction(-1)))
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# ring-level operations


def is_unit(a: LaurentPoly) -> bool:
    return len(a.coeffs) == 1


def bezout(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly] | None:
    """Return (a, b) with a*f + b*g = 1, or None when f and g are not comaximal."""
    if f.is_zero() and g.is_zero():
        raise LaurentError("bezout needs at least one nonzero argument")
    sf, pf = f.normalize()
    sg, pg = g.normalize()
    d, s, t = _ext_gcd(pf, pg)
    if len(d) != 1:
        return None
    inv = 1 / d[0]
    return from_poly(_pscale(s, inv), -sf), from_poly(_pscale(t, inv), -sg)


def _mod_ring(modulus: Poly):
    """Helpers for Q[z]/(modulus) with modulus(0) != 0, where z is invertible."""

    def reduce(p: Poly) -> Poly:
        return _pdivmod(p, modulus)[1]

    # z * z_inv = 1 mod modulus, from modulus = m0 + z*rest
    z_inv = reduce(_pscale(modulus[1:], -1 / modulus[0]))

    def z_power(k: int) -> Poly:
        base = [Fraction(0), Fraction(1)] if k >= 0 else z_inv
        out = reduce([Fraction(1)])
        for _ in range(abs(k)):
            out = reduce(_pmul(out, base))
        return out

    def of(a: LaurentPoly) -> Poly:
        shift, p = a.normalize()
        return reduce(_pmul(reduce(p), z_power(shift)))

    return reduce, z_power, of


def _ratio(target: Poly, residue: Poly) -> Fraction | None:
    """The scalar c with target = c * residue, if there is one (c != 0)."""
    if not target or len(target) != len(residue):
        return None
    i = next(i for i, x in enumerate(residue) if x)
    c = target[i] / residue[i]
    return c if _pscale(residue, c) == target else None


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    sa, pa = a.normalize()
    sb, pb = b.normalize()
    if not pb:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    q, r = _pdivmod(pa, pb)
    if r:
        raise LaurentError(f"{a} is not divisible by {b}")
    return from_poly(q, sa - sb)


@dataclass(frozen=True)
class Reducible:
    v: LaurentPoly
    unit: LaurentPoly

    def to_json(self) -> dict:
        return {"verdict": "reducible", "v": str(self.v), "unit": str(self.unit)}


@dataclass(frozen=True)
class IrreducibleProof:
    modulus: tuple[Fraction, ...]
    period: int | None
    residues: tuple[tuple[Fraction, ...], ...]
    target: tuple[Fraction, ...]

    def to_json(self) -> dict:
        fmt = lambda p: str(from_poly(list(p)))  # noqa: E731
        return {
            "modulus": fmt(self.modulus),
            "period": self.period,
            "residues": [fmt(r) for r in self.residues],
            "target": fmt(self.target),
        }


@dataclass(frozen=True)
class Irreducible:
    proof: IrreducibleProof

    def to_json(self) -> dict:
        return {"verdict": "irreducible", "proof": self.proof.to_json()}


@dataclass(frozen=True)
class Inconclusive:
    reason: str

    def to_json(self) -> dict:
        return {"verdict": "inconclusive", "reason": self.reason}


def _reducible(f: LaurentPoly, g: LaurentPoly, unit: LaurentPoly) -> Reducible:
    v = divide_exact(unit - f, g)
    assert is_unit(f + v * g)
    return Reducible(v, unit)


def reduction_witness(
    f: LaurentPoly, g: LaurentPoly, window: int = 8, period_bound: int = 256
) -> Reducible | Irreducible | Inconclusive:
    """Decide whether f + v*g can be made a unit.

    With z of finite order modulo ĝ the answer is exact either way.
    Otherwise exponents in ``[-window, window]`` are tried and a failure is
    reported as inconclusive.
    """
    if g.is_zero():
        raise LaurentError("g has zero normalization")
    if is_unit(f):
        return Reducible(LaurentPoly(), f)
    _, modulus = g.normalize()
    if len(modulus) == 1:
        return _reducible(f, g, ONE)
    _, z_power, of = _mod_ring(modulus)
    target = of(f)

    if not target:
        # f lies in (g), and no unit does in a nonzero quotient ring
        return Irreducible(IrreducibleProof(tuple(modulus), None, (), ()))

    period = None
    p = z_power(0)
    for k in range(1, period_bound + 1):
        p = _pdivmod(_pmul(p, [Fraction(0), Fraction(1)]), modulus)[1]
        if p == [1]:
            period = k
            break

    if period:
        exponents = list(range(period))
    else:
        exponents = [0] + [k for j in range(1, window + 1) for k in (j, -j)]
    residues = []
    for k in exponents:
        r = z_power(k)
        residues.append(tuple(r))
        c = _ratio(target, r)
        if c is not None:
            return _reducible(f, g, LaurentPoly({k: c}))
    if period is None:
        return Inconclusive(
            f"z has no finite order up to {period_bound} modulo {from_poly(modulus)}; "
            f"no unit c*z^k with |k| <= {window} matches"
        )
    return Irreducible(IrreducibleProof(tuple(modulus), period, tuple(residues), tuple(target)))


def verify_irreducible(f: LaurentPoly, g: LaurentPoly, proof: IrreducibleProof) -> bool:
    """Re-check a proof from scratch: powers of z, periodicity and every residue class."""
    _, modulus = g.normalize()
    if list(proof.modulus) != modulus or len(modulus) < 2:
        return False
    m = from_poly(modulus)

    def congruent(a: LaurentPoly, b: LaurentPoly) -> bool:
        try:
            divide_exact(a - b, m)
        except LaurentError:
            return False
        return True

    if proof.period is None:
        # target-zero certificate: f is a multiple of g
        return congruent(f, LaurentPoly())
    if not congruent(Z**proof.period, ONE):
        return False
    if len(proof.residues) != proof.period:
        return False
    tgt = from_poly(list(proof.target))
    if not congruent(f, tgt) or len(proof.target) >= len(modulus):
        return False
    for k, r in enumerate(proof.residues):
        res = from_poly(list(r))
        if len(r) >= len(modulus) or not congruent(Z**k, res):
            return False
        # residues and target are reduced, so congruence to a scalar multiple is equality
        if _ratio(list(proof.target), list(r)) is not None:
            return False
    return True
