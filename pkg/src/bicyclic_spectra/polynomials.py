"""Univariate polynomials with exact rational coefficients.

Provides the pieces the verification campaigns lean on: characteristic
polynomials via Faddeev-LeVerrier, Descartes sign-variation bounds, Sturm
root counting with bisection refinement, and exact sign evaluation at
quadratic-surd points r*sqrt(s) (every sign condition in the source material
evaluates at such a point, so signs are certified without floating point).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Coeff = Union[int, Fraction, float]


class PolynomialError(ValueError):
    pass


def _norm(coeffs: Iterable[Coeff]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Polynomial stored as ascending coefficients; exact when all rational."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        self.coeffs = _norm(coeffs)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial([])
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def shift_up(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([Fraction(c) / lead for c in self.coeffs])

    def __repr__(self):
        return f"Polynomial({self.to_descending_str()})"

    def to_descending_str(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = f"{mag}" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if k > 0 and mag != 1:
                body = f"{mag}*{body}"
            terms.append(("- " if c < 0 else "+ ") + body)
        head = terms[0].replace("+ ", "").replace("- ", "-")
        return " ".join([head] + terms[1:])

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients_ascending": [
                str(c) if isinstance(c, Fraction) else c for c in self.coeffs
            ],
            "exact": self.is_exact(),
        }

    # -- exact division / gcd ----------------------------------------------

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise PolynomialError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        den = [Fraction(c) for c in other.coeffs]
        dq = len(rem) - len(den)
        if dq < 0:
            return Polynomial([]), Polynomial(rem)
        quot = [Fraction(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            factor = rem[k + len(den) - 1] / den[-1]
            quot[k] = factor
            if factor:
                for i, d in enumerate(den):
                    rem[k + i] -= factor * d
        return Polynomial(quot), Polynomial(rem)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
            if not b.is_zero():
                b = b.monic()
        return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# Characteristic polynomial (Faddeev-LeVerrier, exact on rational matrices)
# ---------------------------------------------------------------------------


def char_poly(matrix) -> Polynomial:
    """det(xI - M) with exact rational coefficients when entries are rational.

    Inexact matrices fall back to eigenvalue-based float coefficients.
    """
    rows = [list(r) for r in (matrix.tolist() if isinstance(matrix, np.ndarray) else matrix)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise PolynomialError("char_poly requires a square matrix")
    if n == 0:
        return Polynomial([1])
    exact = all(isinstance(x, (int, Fraction)) for r in rows for x in r)
    if not exact:
        vals = np.linalg.eigvals(np.asarray(rows, dtype=float))
        coeffs = np.poly(vals)  # descending, leading 1
        if np.max(np.abs(coeffs.imag)) > 1e-8 * max(1.0, np.max(np.abs(coeffs.real))):
            raise PolynomialError("characteristic polynomial has non-real coefficients")
        return Polynomial(list(coeffs.real[::-1]))
    a = [[Fraction(x) for x in r] for r in rows]
    m = [[Fraction(0)] * n for _ in range(n)]
    c = [Fraction(1)]  # c[0] multiplies x^n
    for k in range(1, n + 1):
        # M_k = A (M_{k-1} + c_{k-1} I)
        for i in range(n):
            m[i][i] += c[-1]
        m = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c.append(-sum(m[i][i] for i in range(n)) / k)
    return Polynomial(list(reversed(c)))


# ---------------------------------------------------------------------------
# Descartes' rule of signs
# ---------------------------------------------------------------------------


def _sign_variations(coeffs: Sequence[Coeff]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_bounds(p: Polynomial) -> tuple[int, int]:
    """(bound on positive roots, bound on negative roots) by sign variations."""
    if p.is_zero():
        raise PolynomialError("Descartes bounds undefined for the zero polynomial")
    pos = _sign_variations(p.coeffs)
    neg = _sign_variations([c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs)])
    return pos, neg


# ---------------------------------------------------------------------------
# Exact evaluation at r*sqrt(s)
# ---------------------------------------------------------------------------


def eval_at_sqrt(p: Polynomial, r: Fraction, s: Fraction) -> tuple[Fraction, Fraction]:
    """Exact (U, V) with p(r*sqrt(s)) = U + V*sqrt(s); requires exact coeffs."""
    if not p.is_exact():
        raise PolynomialError("eval_at_sqrt requires exact coefficients")
    r, s = Fraction(r), Fraction(s)
    if s < 0:
        raise PolynomialError("sqrt argument must be nonnegative")
    u = Fraction(0)
    v = Fraction(0)
    rk = Fraction(1)
    for k, c in enumerate(p.coeffs):
        if c:
            half = s ** (k // 2)
            if k % 2 == 0:
                u += c * rk * half
            else:
                v += c * rk * half
        rk *= r
    return u, v


def sign_at_sqrt(p: Polynomial, r, s) -> int:
    """Exact sign of p(r*sqrt(s)) in {-1, 0, +1}."""
    u, v = eval_at_sqrt(p, Fraction(r), Fraction(s))
    s = Fraction(s)
    if v == 0 or s == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return 1 if v > 0 else -1
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    # mixed signs: compare |U|^2 against |V|^2 * s
    lhs, rhs = u * u, v * v * s
    if lhs == rhs:
        return 0
    big_is_u = lhs > rhs
    return (1 if u > 0 else -1) if big_is_u else (1 if v > 0 else -1)


# ---------------------------------------------------------------------------
# Real root isolation: Sturm sequence + bisection
# ---------------------------------------------------------------------------


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        rem = seq[-2].divmod(seq[-1])[1]
        if rem.is_zero():
            break
        seq.append(-1 * rem)
    return [q for q in seq if not q.is_zero()]


def _variations_at(seq: list[Polynomial], x: Fraction) -> int:
    vals = [q(x) for q in seq]
    return _sign_variations(vals)


def count_real_roots(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots of an exact polynomial in (lo, hi]."""
    if not p.is_exact():
        raise PolynomialError("count_real_roots requires exact coefficients")
    p = _squarefree_part(p)
    seq = sturm_sequence(p)
    return _variations_at(seq, Fraction(lo)) - _variations_at(seq, Fraction(hi))


def _squarefree_part(p: Polynomial) -> Polynomial:
    g = p.gcd(p.derivative())
    if g.degree <= 0:
        return p
    return p.divmod(g)[0]


def _multiplicity_chain(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """[(q_k, k)]: q_k square-free carrying exactly the multiplicity-k roots."""
    chain = [p]
    while chain[-1].degree > 0:
        g = chain[-1].gcd(chain[-1].derivative())
        if g.degree <= 0:
            break
        chain.append(g)
    # u_k = chain[k-1] / chain[k] has roots of multiplicity >= k, each once
    us = []
    for k in range(len(chain)):
        nxt = chain[k + 1] if k + 1 < len(chain) else Polynomial([1])
        us.append(chain[k].divmod(nxt)[0])
    out = []
    for k in range(len(us)):
        nxt = us[k + 1] if k + 1 < len(us) else Polynomial([1])
        qk = us[k].divmod(nxt)[0]
        if qk.degree > 0:
            out.append((qk, k + 1))
    return out


def _nudge_off_root(q: Polynomial, x: Fraction, step: Fraction, direction: int) -> Fraction:
    while q(x) == 0:
        x += direction * step
        step /= 2
    return x


def _isolate_square_free(q: Polynomial, lo: Fraction, hi: Fraction) -> list[Fraction]:
    """Disjoint isolation: exact rational roots plus midpoints of tight brackets."""
    roots: list[Fraction] = []
    seq = sturm_sequence(q)
    # roots sitting exactly on the endpoints are recorded and stepped over
    width = hi - lo
    if q(lo) == 0:
        roots.append(lo)
        lo = _nudge_off_root(q, lo, width / 4096, +1)
    if q(hi) == 0:
        roots.append(hi)
        hi = _nudge_off_root(q, hi, width / 4096, -1)
    if lo >= hi:
        return sorted(roots)

    def count(a: Fraction, b: Fraction) -> int:
        return _variations_at(seq, a) - _variations_at(seq, b)

    stack = [(lo, hi, count(lo, hi))]
    tol = Fraction(1, 10 ** 14)
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            # a simple isolated root: the endpoint signs must differ
            roots.append(_refine_bracket(q, a, b, tol))
            continue
        mid = (a + b) / 2
        if q(mid) == 0:
            roots.append(mid)
            delta = (b - a) / 2 ** 16
            while True:
                left, right = mid - delta, mid + delta
                if q(left) != 0 and q(right) != 0 and count(left, right) == 1:
                    stack.append((a, left, count(a, left)))
                    stack.append((right, b, count(right, b)))
                    break
                delta /= 2
            continue
        stack.append((a, mid, count(a, mid)))
        stack.append((mid, b, count(mid, b)))
    return sorted(roots)


def _refine_bracket(q: Polynomial, a: Fraction, b: Fraction, tol: Fraction) -> Fraction:
    going_up = q(a) < 0
    while b - a >= tol:
        mid = (a + b) / 2
        v = q(mid)
        if v == 0:
            return mid
        if (v < 0) == going_up:
            a = mid
        else:
            b = mid
    return (a + b) / 2


def real_roots(p: Polynomial, lo, hi, tol: float = 1e-10) -> list[float]:
    """All real roots of p in [lo, hi], sorted, repeated per multiplicity.

    Exact polynomials use Sturm-counted bisection (roots are isolated
    exactly, never split or merged arbitrarily); float polynomials fall back
    to numpy eigen-roots with clustering of near-coincident values.
    """
    if p.is_zero():
        raise PolynomialError("real_roots undefined for the zero polynomial")
    if not lo < hi:
        raise PolynomialError("real_roots requires lo < hi")
    if p.degree == 0:
        return []
    if p.is_exact():
        out: list[float] = []
        for q, mult in _multiplicity_chain(p):
            for root in _isolate_square_free(q, Fraction(lo), Fraction(hi)):
                out.extend([float(root)] * mult)
        return sorted(out)
    # numeric fallback
    coeffs = np.array([float(c) for c in reversed(p.coeffs)])
    raw = np.roots(coeffs)
    scale = max(1.0, float(np.max(np.abs(raw)))) if raw.size else 1.0
    reals = sorted(float(z.real) for z in raw if abs(z.imag) <= 1e-7 * scale)
    picked = [x for x in reals if lo - 1e-9 <= x <= hi + 1e-9]
    out = []
    i = 0
    while i < len(picked):
        j = i
        while j + 1 < len(picked) and picked[j + 1] - picked[j] < 1e-9:
            j += 1
        cluster = picked[i : j + 1]
        out.extend([sum(cluster) / len(cluster)] * len(cluster))
        i = j + 1
    return out


def max_real_root(p: Polynomial, lo=None, hi=None) -> float:
    """Largest real root; default bracket is the Cauchy root bound."""
    if p.is_zero() or p.degree == 0:
        raise PolynomialError("polynomial has no roots")
    lead = abs(p.coeffs[-1])
    bound = 1 + max(abs(Fraction(c) if p.is_exact() else float(c)) for c in p.coeffs) / lead
    lo = -bound if lo is None else lo
    hi = bound if hi is None else hi
    roots = real_roots(p, lo, hi)
    if not roots:
        raise PolynomialError("no real roots in bracket")
    return roots[-1]
