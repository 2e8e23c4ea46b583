"""w-cyclic codes over A_p[w] and their single-unit-error decoder.

A code of length ``n = (p - 1) / 6`` with parameter ``t`` is the null space
of the ``(t+1) x n`` matrix whose row ``j`` holds the consecutive powers of
``beta^(6j+1)``.  Equivalently it is the ideal generated by

    g(x) = (x - beta)(x - beta^7) ... (x - beta^(6t+1))

in ``A_p[w][x] / (x^n - w)``.  For ``t = 0`` every nonzero syndrome is
``eps * beta^i`` for exactly one unit ``eps`` and position ``i``, which makes
the code perfect for single unit errors.

Words are tuples of labels; polynomial coefficients are listed from the
constant term up.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import numpy as np

from .eisenstein import ONE, W
from .errors import InvalidT, LengthMismatch, LimitExceeded
from .residue_field import ResidueField

EXHAUSTIVE_CAP = 10**7

Word = tuple[int, ...]


# -- polynomials over the field ---------------------------------------------

def poly_trim(f: ResidueField, a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(f: ResidueField, a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return poly_trim(f, out)


def poly_divmod(f: ResidueField, num, den) -> tuple[list[int], list[int]]:
    den = poly_trim(f, den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(f, num)
    lead_inv = f.inv(den[-1])
    quot = [0] * max(len(rem) - len(den) + 1, 0)
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        coef = f.mul(rem[-1], lead_inv)
        quot[shift] = coef
        for i, d in enumerate(den):
            rem[shift + i] = f.sub(rem[shift + i], f.mul(coef, d))
        rem = poly_trim(f, rem)
    return quot, rem


def poly_eval(f: ResidueField, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = f.add(f.mul(acc, x), c)
    return acc


def x_n_minus_w(f: ResidueField, n: int) -> list[int]:
    return [f.neg(f.label_of(W))] + [0] * (n - 1) + [f.label_of(ONE)]


# -- the code -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Code:
    field: ResidueField
    n: int
    t: int
    H: tuple[tuple[int, ...], ...]
    g_coeffs: tuple[int, ...]
    k: int


def build_code(field: ResidueField, t: int = 0) -> Code:
    n = field.n
    if not 0 <= t < n:
        raise InvalidT(f"t must satisfy 0 <= t < n={n}; got {t}")
    one = field.label_of(ONE)
    H, g = [], [one]
    for j in range(t + 1):
        root = field.pow(field.beta_label, 6 * j + 1)
        H.append(tuple(field.pow(root, i) for i in range(n)))
        g = poly_mul(field, g, [field.neg(root), one])
    return Code(field, n, t, tuple(H), tuple(g), n - (t + 1))


def _check_len(w, n: int, what: str = "word") -> None:
    if len(w) != n:
        raise LengthMismatch(f"{what} has length {len(w)}, expected {n}")


def reduce_mod(code: Code, poly) -> Word:
    """Reduce a polynomial modulo ``x^n - w`` to a length-``n`` word."""
    f, n = code.field, code.n
    out = [0] * n
    w_label = f.label_of(W)
    for i, c in enumerate(poly):
        # x^i = w^(i // n) * x^(i % n)
        if i >= n:
            c = f.mul(c, f.pow(w_label, i // n))
        out[i % n] = f.add(out[i % n], c)
    return tuple(out)


def encode(code: Code, message) -> Word:
    _check_len(message, code.k, "message")
    return reduce_mod(code, poly_mul(code.field, list(message), list(code.g_coeffs)))


def message_of(code: Code, word) -> Word:
    """Recover the message of a codeword by dividing by ``g(x)``."""
    _check_len(word, code.n)
    quot, rem = poly_divmod(code.field, list(word), list(code.g_coeffs))
    if rem:
        raise ValueError("word is not a codeword")
    return tuple(quot) + (0,) * (code.k - len(quot))


def wshift(code: Code, c) -> Word:
    """Multiply by ``x`` modulo ``x^n - w``: ``(w*c[n-1], c[0], ..., c[n-2])``."""
    _check_len(c, code.n)
    f = code.field
    return (f.mul(f.label_of(W), c[-1]),) + tuple(c[:-1])


def syndrome(code: Code, y) -> tuple[int, ...]:
    _check_len(y, code.n)
    f = code.field
    out = []
    for row in code.H:
        s = 0
        for h, yi in zip(row, y):
            s = f.add(s, f.mul(h, yi))
        out.append(s)
    return tuple(out)


def is_codeword(code: Code, y) -> bool:
    return not any(syndrome(code, y))


@dataclass(frozen=True)
class DecodeResult:
    codeword: Word
    error_position: int | None = None
    error_value: int | None = None
    status: str = "clean"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["codeword"] = list(self.codeword)
        return d


def decode_single(code: Code, y) -> DecodeResult:
    """Correct one unit error ``eps * x^i``.

    A nonzero syndrome ``s`` has discrete log ``m = j*n + i`` with ``i < n``;
    the error value is ``beta^(j*n) = w^j``, which runs over the six units.
    """
    if code.t != 0:
        raise InvalidT("single-error decoding is defined for t = 0 only")
    y = tuple(y)
    (s,) = syndrome(code, y)
    if s == 0:
        return DecodeResult(y)
    f = code.field
    m = f.dlog(s)
    i, j = m % code.n, m // code.n
    eps = f.pow(f.beta_label, j * code.n)
    fixed = list(y)
    fixed[i] = f.sub(fixed[i], eps)
    return DecodeResult(tuple(fixed), i, eps, "corrected")


# -- perfectness ----------------------------------------------------------------

@dataclass
class PerfectnessReport:
    p: int
    n: int
    codeword_count: int
    ball_size: int
    space_size: int
    packing_identity_holds: bool
    exhaustive_partition_verified: bool

    def to_dict(self) -> dict:
        return asdict(self)


def verify_perfect(code: Code, exhaustive: bool = True) -> PerfectnessReport:
    """Check the sphere-packing count and, optionally, the ball partition itself.

    The exhaustive pass enumerates all ``p^n`` words, finds the codewords as
    the zero-syndrome words, and counts how many radius-1 balls cover each
    word.  Label arithmetic is done as integer arithmetic mod p here, which
    the labeling guarantees.
    """
    if code.t != 0:
        raise InvalidT("perfectness is checked for t = 0 only")
    f, n, p = code.field, code.n, code.field.p
    report = PerfectnessReport(
        p=p, n=n,
        codeword_count=p ** (n - 1),
        ball_size=6 * n + 1,
        space_size=p**n,
        packing_identity_holds=p ** (n - 1) * (6 * n + 1) == p**n,
        exhaustive_partition_verified=False,
    )
    if not exhaustive:
        return report
    if p**n > EXHAUSTIVE_CAP:
        raise LimitExceeded(f"exhaustive check needs p^n = {p**n} > {EXHAUSTIVE_CAP} words", report)

    index = np.arange(p**n, dtype=np.int64)
    place = p ** np.arange(n, dtype=np.int64)
    digits = (index[:, None] // place[None, :]) % p
    h = np.array(code.H[0], dtype=np.int64)
    codewords = index[(digits @ h) % p == 0]
    report.codeword_count = int(codewords.size)

    cover = np.bincount(codewords, minlength=p**n)
    cw_digits = digits[codewords]
    for i in range(n):
        for eps in f.unit_labels:
            shifted = (cw_digits[:, i] + eps) % p
            neighbours = codewords + (shifted - cw_digits[:, i]) * place[i]
            cover += np.bincount(neighbours, minlength=p**n)
    report.exhaustive_partition_verified = bool(np.all(cover == 1))
    return report


# -- channel --------------------------------------------------------------------

@dataclass
class ChannelStats:
    p: int
    n: int
    trials: int
    seed: int
    epsilon: float
    word_errors: int
    word_error_rate: float
    symbol_errors: int
    symbol_error_rate: float
    injected_weight_histogram: dict[str, int]
    single_error_trials: int
    single_error_corrected: int
    single_error_correction_rate: float | None
    decoder_outputs_valid: bool

    def to_dict(self) -> dict:
        return asdict(self)


def simulate(code: Code, trials: int, seed: int = 0, epsilon: float = 0.0) -> ChannelStats:
    """Encode random messages, add random unit errors, decode, and tally.

    Each coordinate is hit independently with probability ``epsilon`` by a
    uniformly chosen unit.  Trial ``i`` draws from the generator seeded with
    ``(seed, i)``.  Error rates compare the decoded codeword with the one
    sent, symbol by symbol.
    """
    if code.t != 0:
        raise InvalidT("the channel harness decodes t = 0 codes only")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1]; got {epsilon}")
    f, n = code.field, code.n
    units = f.unit_labels
    hist: dict[int, int] = {}
    word_errors = symbol_errors = single = single_ok = 0
    valid = True
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        msg = tuple(int(v) for v in rng.integers(0, f.p, size=code.k))
        sent = encode(code, msg)
        hits = rng.random(n) < epsilon
        picks = rng.integers(0, 6, size=n)
        received = tuple(f.add(c, units[picks[i]]) if hits[i] else c for i, c in enumerate(sent))
        weight = int(hits.sum())
        hist[weight] = hist.get(weight, 0) + 1

        result = decode_single(code, received)
        got = result.codeword
        if not is_codeword(code, got) or sum(a != b for a, b in zip(got, received)) > 1:
            valid = False
        bad = sum(a != b for a, b in zip(got, sent))
        symbol_errors += bad
        word_errors += bad > 0
        if weight == 1:
            single += 1
            single_ok += bad == 0

    return ChannelStats(
        p=f.p, n=n, trials=trials, seed=seed, epsilon=epsilon,
        word_errors=word_errors,
        word_error_rate=word_errors / trials if trials else 0.0,
        symbol_errors=symbol_errors,
        symbol_error_rate=symbol_errors / (trials * n) if trials else 0.0,
        injected_weight_histogram={str(k): hist[k] for k in sorted(hist)},
        single_error_trials=single,
        single_error_corrected=single_ok,
        single_error_correction_rate=single_ok / single if single else None,
        decoder_outputs_valid=valid,
    )


def all_codewords(code: Code):
    """Every codeword, by encoding all ``p^k`` messages."""
    for msg in itertools.product(range(code.field.p), repeat=code.k):
        yield encode(code, msg)
