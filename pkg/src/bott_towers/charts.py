"""Affine-chart monomial data: dual generators and transition matrices.

Each binary code w picks one maximal cone of the stage-k fan.  The dual cone
is spanned by k integer vectors (the dual generators), which pair to the
identity against the fan generators a_{1,w_1}, ..., a_{k,w_k}.  The chart's
coordinate ring is the polynomial ring on the k Laurent monomials with those
exponents, and two charts glue through the integer matrix carrying one
exponent basis to the other.

Everything is exponent data: a monomial is its integer exponent vector, a
monomial map between charts is an integer matrix, and all gluing identities
are exact matrix identities.
"""

from __future__ import annotations

from . import linalg
from .errors import ValidationError
from .sequences import IntegralSequence, _check_code, _check_int, bott_number


def _check_position(k: int, value: int, name: str) -> int:
    _check_int(value, name)
    if not 1 <= value <= k:
        raise ValidationError(f"{name}={value} outside 1..{k}")
    return value


def index_sets(w, i: int, j: int):
    """Split the open interval (i, j) into its ones and zeros under w.

    Returns two sorted tuples: positions l with i < l < j and w_l = 1, and
    those with w_l = 0.
    """
    w = _check_code(w)
    k = len(w)
    _check_position(k, i, "i")
    _check_position(k, j, "j")
    if not i < j:
        raise ValidationError(f"need i < j, got i={i}, j={j}")
    ones = tuple(l for l in range(i + 1, j) if w[l - 1] == 1)
    zeros = tuple(l for l in range(i + 1, j) if w[l - 1] == 0)
    return ones, zeros


def prefix_set(w, j: int):
    """Positions l < j with w_l = 1, as a sorted tuple."""
    w = _check_code(w)
    _check_position(len(w), j, "j")
    return tuple(l for l in range(1, j) if w[l - 1] == 1)


def _check_chart_args(c, k, w):
    if not isinstance(c, IntegralSequence):
        raise ValidationError("expected an IntegralSequence")
    _check_int(k, "k")
    if not 1 <= k <= c.n:
        raise ValidationError(f"k={k} outside 1..{c.n}")
    w = _check_code(w)
    if len(w) != k:
        raise ValidationError(f"code length {len(w)} != k={k}")
    return w


def dual_generators(c: IntegralSequence, k: int, w):
    """The k vectors dual to the fan generators selected by the code w.

    The j-th vector is (-1)^{w_j} (e_j + sum over l in the ones-prefix of j
    of b({l} union zeros(l,j) union {j}) e_l), where zeros(l,j) are the
    zero positions of w strictly between l and j.  Pairing the j-th vector
    with a_{m,w_m} gives the Kronecker delta.
    """
    w = _check_chart_args(c, k, w)
    vectors = []
    for j in range(1, k + 1):
        sign = -1 if w[j - 1] == 1 else 1
        vec = [0] * k
        vec[j - 1] = sign
        for l in prefix_set(w, j):
            _, zeros = index_sets(w, l, j)
            vec[l - 1] = sign * bott_number(c, (l,) + zeros + (j,))
        vectors.append(tuple(vec))
    return vectors


class LaurentMonomial:
    """A monomial in k chart variables, stored as its exponent vector."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        vec = tuple(_check_int(x, "exponent") for x in exps)
        if not vec:
            raise ValidationError("monomial needs at least one exponent")
        self.exps = vec

    def __eq__(self, other):
        if not isinstance(other, LaurentMonomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"LaurentMonomial({self.exps!r})"


class DualChart:
    """One affine chart: code, dual generators, and chart monomials."""

    __slots__ = ("code", "upsilon", "phi")

    def __init__(self, code, upsilon):
        self.code = tuple(code)
        self.upsilon = tuple(tuple(v) for v in upsilon)
        self.phi = tuple(LaurentMonomial(v) for v in self.upsilon)

    def __repr__(self):
        return f"DualChart(code={self.code!r})"


def dual_chart(c: IntegralSequence, k: int, w) -> DualChart:
    """Bundle the dual generators and chart monomials of one code."""
    w = _check_chart_args(c, k, w)
    return DualChart(w, dual_generators(c, k, w))


def chart_ring(c: IntegralSequence, k: int, w):
    """The chart's coordinate monomials, one per dual generator."""
    return list(dual_chart(c, k, w).phi)


def transition(c: IntegralSequence, k: int, w, w2):
    """The integer matrix rewriting one chart's monomials in another's.

    Row i gives the exponents of the target chart's i-th monomial as a
    product of the source chart's monomials; as matrices it is the target
    exponent basis times the inverse of the source one, and is always an
    exact integer matrix because both are unimodular.
    """
    u1 = [list(v) for v in dual_generators(c, k, w)]
    u2 = [list(v) for v in dual_generators(c, k, w2)]
    return linalg.matmul(u2, linalg.invert_unimodular(u1))
