"""The residue field A_p[w] = Z[w]/<pi> for a prime p = 1 (mod 6).

Construction follows the labeling procedure:

1. split ``p = pi * conj(pi)`` with ``pi = a + b*w``;
2. find the ratio ``r`` with ``a + b*r = 0 (mod p)``, so that ``w`` maps to ``r``;
3. give ``x + y*w`` the label ``(x + r*y) mod p`` and keep, for each label,
   the element of minimal norm as the class representative.

Labels are the GF(p) integers, and the labeling is a ring isomorphism, so
label arithmetic coincides with integer arithmetic mod p.  The field
operations below nevertheless work on representatives and map back through
:meth:`ResidueField.label_of`, which is what the tests cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field, replace
from typing import NamedTuple

from .eisenstein import ONE, UNITS, W, EisensteinInt
from .errors import DivisionByZero, DlogOfZero, LabelOutOfRange, LimitExceeded, NotSplittingPrime

P_MAX = 49999


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_prime(p: int) -> None:
    if p > P_MAX:
        raise LimitExceeded(f"p={p} exceeds the supported maximum {P_MAX}")
    if p < 7 or p % 6 != 1 or not is_prime(p):
        raise NotSplittingPrime(f"p={p} is not a prime congruent to 1 mod 6 with p >= 7")


def split_prime(p: int) -> EisensteinInt:
    """Return ``pi = a + b*w`` with ``a^2 + ab + b^2 = p`` and ``0 < a <= b``."""
    check_prime(p)
    for a in range(1, math.isqrt(p) + 1):
        # b^2 + a*b + a^2 - p = 0
        disc = 4 * p - 3 * a * a
        if disc < 0:
            break
        s = math.isqrt(disc)
        if s * s != disc or (s - a) % 2:
            continue
        b = (s - a) // 2
        if b >= a:
            return EisensteinInt(a, b)
    raise AssertionError(f"no norm-{p} element found; p should split")  # pragma: no cover


def label_ratio(p: int, pi: EisensteinInt) -> int:
    """The unique ``r`` in ``[0, p)`` with ``a + b*r = 0 (mod p)``."""
    if pi.norm() != p:
        raise ValueError(f"norm of {pi} is {pi.norm()}, not {p}")
    return (-pi.x * pow(pi.y, -1, p)) % p


class Representative(NamedTuple):
    """A class representative together with its preferred presentation.

    ``form`` is ``"w"`` when ``coords`` are the ``(x, y)`` of ``x + y*w`` and
    ``"wbar"`` when they are the ``(x', y')`` of ``x' + y'*wbar``.
    """

    value: EisensteinInt
    form: str
    coords: tuple[int, int]

    def __str__(self) -> str:
        if self.form == "w":
            return str(self.value)
        xp, yp = self.coords
        text = str(EisensteinInt(xp, yp))
        return text.replace("w", "wbar")


@dataclass(frozen=True, eq=False)
class ResidueField:
    p: int
    n: int
    pi: EisensteinInt
    r: int
    rep_table: tuple[EisensteinInt, ...] = dc_field(repr=False)
    tie_count: int = 0
    beta_label: int | None = None
    log_table: tuple[int, ...] = dc_field(default=(), repr=False)

    def _check(self, l: int) -> None:
        if not 0 <= l < self.p:
            raise LabelOutOfRange(f"label {l} outside [0, {self.p})")

    def label_of(self, a: EisensteinInt) -> int:
        return (a.x + self.r * a.y) % self.p

    def rep(self, l: int) -> EisensteinInt:
        if not 0 <= l < self.p:
            raise LabelOutOfRange(f"label {l} outside [0, {self.p})")
        return self.rep_table[l]

    def mu(self, l: int) -> Representative:
        """Representative of class ``l`` in whichever form has the smaller coordinate sum.

        Ties go to the w-form.
        """
        a = self.rep(l)
        xp, yp = a.wbar_coords()
        if abs(a.x) + abs(a.y) <= abs(xp) + abs(yp):
            return Representative(a, "w", (a.x, a.y))
        return Representative(a, "wbar", (xp, yp))

    @property
    def unit_labels(self) -> tuple[int, ...]:
        return tuple(self.label_of(u) for u in UNITS)

    # The products below are the ring product of the two representatives,
    # (a + bw)(c + dw) = (ac - bd) + (ad + bc + bd)w, folded straight into
    # its label.  Representatives have norm <= p/3, so nothing can overflow.
    def add(self, l1: int, l2: int) -> int:
        a, b = self.rep(l1), self.rep(l2)
        return (a.x + b.x + self.r * (a.y + b.y)) % self.p

    def sub(self, l1: int, l2: int) -> int:
        a, b = self.rep(l1), self.rep(l2)
        return (a.x - b.x + self.r * (a.y - b.y)) % self.p

    def neg(self, l: int) -> int:
        a = self.rep(l)
        return (-a.x - self.r * a.y) % self.p

    def mul(self, l1: int, l2: int) -> int:
        a, b = self.rep(l1), self.rep(l2)
        bd = a.y * b.y
        return (a.x * b.x - bd + self.r * (a.x * b.y + a.y * b.x + bd)) % self.p

    def pow(self, l: int, e: int) -> int:
        self._check(l)
        if e < 0:
            return self.pow(self.inv(l), -e)
        result, base = self.label_of(ONE), l
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, l: int) -> int:
        self._check(l)
        if l == 0:
            raise DivisionByZero("zero has no inverse")
        if self.log_table:
            return self.pow(self.beta_label, (-self.log_table[l]) % (self.p - 1))
        return self.pow(l, self.p - 2)

    def order(self, l: int) -> int:
        """Multiplicative order of a nonzero class."""
        if l == 0:
            raise DivisionByZero("zero has no multiplicative order")
        m = self.p - 1
        order = m
        for q in _prime_factors(m):
            while order % q == 0 and self.pow(l, order // q) == self.label_of(ONE):
                order //= q
        return order

    def dlog(self, l: int) -> int:
        """Exponent ``m`` in ``[0, p-2]`` with ``beta^m`` equal to class ``l``."""
        self._check(l)
        if l == 0:
            raise DlogOfZero("zero has no discrete logarithm")
        return self.log_table[l]

    def summary(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "pi": [self.pi.x, self.pi.y],
            "r": self.r,
            "beta_label": self.beta_label,
            "tie_count": self.tie_count,
        }

    def table_rows(self):
        """Rows ``(label, x, y, x_bar, y_bar, norm)`` for every label."""
        for l, a in enumerate(self.rep_table):
            xp, yp = a.wbar_coords()
            yield l, a.x, a.y, xp, yp, a.norm()


def _prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _scan_representatives(p: int, r: int) -> tuple[tuple[EisensteinInt, ...], int]:
    # Minimal representatives have norm <= p/3, hence |x|, |y| <= 2*sqrt(p/9);
    # the box below is comfortably larger.
    bound = math.ceil(2 * math.sqrt(p / 3)) + 1
    best: list[tuple[int, int, int] | None] = [None] * p
    ties = [False] * p
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            key = (x * x + x * y + y * y, x, y)
            l = (x + r * y) % p
            cur = best[l]
            if cur is None or key < cur:
                ties[l] = cur is not None and cur[0] == key[0]
                best[l] = key
            elif cur[0] == key[0]:
                ties[l] = True
    assert all(b is not None for b in best), "scan box missed a residue class"
    reps = tuple(EisensteinInt(b[1], b[2]) for b in best)
    return reps, sum(ties)


def find_beta(field: ResidueField) -> int:
    """Smallest label of multiplicative order ``p-1`` whose ``n``-th power is ``w``."""
    w_label = field.label_of(W)
    for l in range(2, field.p):
        if field.pow(l, field.n) == w_label and field.order(l) == field.p - 1:
            return l
    raise AssertionError(f"no primitive beta with beta^n = w for p={field.p}")


def build_field(p: int) -> ResidueField:
    check_prime(p)
    pi = split_prime(p)
    r = label_ratio(p, pi)
    reps, ties = _scan_representatives(p, r)
    field = ResidueField(p=p, n=(p - 1) // 6, pi=pi, r=r, rep_table=reps, tie_count=ties)
    beta = find_beta(field)

    logs = [0] * p
    cur = field.label_of(ONE)
    for m in range(p - 1):
        logs[cur] = m
        cur = field.mul(cur, beta)
    assert cur == field.label_of(ONE)
    field = replace(field, beta_label=beta, log_table=tuple(logs))

    assert reps[0] == EisensteinInt(0, 0)
    assert len(set(field.unit_labels)) == 6, "unit classes collide"
    assert all(3 * a.norm() <= p for a in reps)
    return field
