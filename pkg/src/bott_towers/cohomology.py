"""Integral cohomology of a tower stage, with exact normal-form arithmetic.

The ring is Z[x_1, ..., x_k] modulo the ideal generated by x_j * l_j, where
l_j = x_j + c(1,j) x_1 + ... + c(j-1,j) x_{j-1}.  Every relation has leading
term x_j^2, so squarefree monomials form a Z-basis and reduction is a
triangular rewriting: replace the square of the largest repeated variable by
minus its lower-index cross terms until the polynomial is squarefree.

Classes are stored as maps from index subsets to integer coefficients (the
subset S stands for the monomial prod_{j in S} x_j, in cohomological degree
2|S|).  Divisor and line-bundle data enter through `ray_class` and
`character_class`; the total Chern class is the product of the per-stage
factors 1 + 2 x_j + sum_{i<j} c(i,j) x_i, whose top integral counts the
maximal cones of the fan.
"""

from __future__ import annotations

import math

from .errors import ValidationError
from .sequences import IntegralSequence, _check_int


def _check_ring_args(c, k):
    if not isinstance(c, IntegralSequence):
        raise ValidationError("expected an IntegralSequence")
    _check_int(k, "k")
    if not 1 <= k <= c.n:
        raise ValidationError(f"k={k} outside 1..{c.n}")
    return k


class RingPresentation:
    """The k linear forms whose products with their generators cut the ring.

    `relations[j-1]` lists the coefficients (c(1,j), ..., c(j-1,j), 1) of the
    form paired with x_j; each involves only the first j variables and is
    monic in x_j.
    """

    __slots__ = ("k", "relations")

    def __init__(self, c: IntegralSequence, k: int):
        self.k = _check_ring_args(c, k)
        self.relations = tuple(
            tuple(c.value(i, j) for i in range(1, j)) + (1,)
            for j in range(1, k + 1))

    def __eq__(self, other):
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self.k == other.k and self.relations == other.relations

    def __hash__(self):
        return hash((self.k, self.relations))

    def __repr__(self):
        return f"RingPresentation(k={self.k})"


class CohomologyRing:
    """Carrier for the ring of one tower stage: builds and reduces classes."""

    __slots__ = ("sequence", "k")

    def __init__(self, sequence: IntegralSequence, k: int):
        if not isinstance(sequence, IntegralSequence):
            raise ValidationError("expected an IntegralSequence")
        self.k = _check_ring_args(sequence, k)
        self.sequence = sequence

    # -- construction -------------------------------------------------

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, {})

    def one(self) -> "CohomologyClass":
        return CohomologyClass(self, {frozenset(): 1})

    def gen(self, j: int) -> "CohomologyClass":
        """The degree-2 generator x_j."""
        self._check_index(j)
        return CohomologyClass(self, {frozenset((j,)): 1})

    def ray_class(self, j: int, gamma: int) -> "CohomologyClass":
        """The divisor class of the fan generator a_{j,gamma}.

        Ray (j,0) maps to x_j; ray (j,1) maps to x_j + sum of the stage-j
        twist entries times the lower generators.
        """
        self._check_index(j)
        if gamma not in (0, 1) or isinstance(gamma, bool):
            raise ValidationError(f"gamma must be 0 or 1, got {gamma!r}")
        coeffs = {frozenset((j,)): 1}
        if gamma == 1:
            for i in range(1, j):
                value = self.sequence.value(i, j)
                if value:
                    coeffs[frozenset((i,))] = value
        return CohomologyClass(self, coeffs)

    def character_class(self, exps) -> "CohomologyClass":
        """The first Chern class of the character with the given exponents."""
        vec = tuple(_check_int(x, "character exponent") for x in exps)
        if len(vec) != self.k:
            raise ValidationError(
                f"character length {len(vec)} != k={self.k}")
        coeffs = {}
        for j, value in enumerate(vec, start=1):
            if value:
                coeffs[frozenset((j,))] = value
        return CohomologyClass(self, coeffs)

    def from_polynomial(self, poly) -> "CohomologyClass":
        """Reduce a {exponent tuple: coefficient} polynomial to normal form."""
        work = {}
        for exps, coeff in poly.items():
            vec = tuple(_check_int(x, "exponent") for x in exps)
            if len(vec) != self.k:
                raise ValidationError(
                    f"exponent tuple {vec} has length {len(vec)}, expected {self.k}")
            if any(x < 0 for x in vec):
                raise ValidationError(f"negative exponent in {vec}")
            _check_int(coeff, "coefficient")
            work[vec] = work.get(vec, 0) + coeff
        return CohomologyClass(self, self._reduce(work))

    # -- internals ----------------------------------------------------

    def _check_index(self, j: int) -> None:
        _check_int(j, "generator index")
        if not 1 <= j <= self.k:
            raise ValidationError(f"generator index {j} outside 1..{self.k}")

    def _reduce(self, work: dict) -> dict:
        """Rewrite squares of the largest repeated variable until squarefree."""
        out = {}
        while work:
            exps, coeff = work.popitem()
            if coeff == 0:
                continue
            square = max((j for j in range(1, self.k + 1) if exps[j - 1] >= 2),
                         default=None)
            if square is None:
                key = frozenset(j for j in range(1, self.k + 1)
                                if exps[j - 1] == 1)
                total = out.get(key, 0) + coeff
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
                continue
            lowered = list(exps)
            lowered[square - 1] -= 1
            for i in range(1, square):
                value = self.sequence.value(i, square)
                if value == 0:
                    continue
                bumped = list(lowered)
                bumped[i - 1] += 1
                key = tuple(bumped)
                total = work.get(key, 0) - value * coeff
                if total:
                    work[key] = total
                else:
                    work.pop(key, None)
        return out

    def __eq__(self, other):
        if not isinstance(other, CohomologyRing):
            return NotImplemented
        return self.k == other.k and self.sequence == other.sequence

    def __hash__(self):
        return hash((self.sequence, self.k))

    def __repr__(self):
        return f"CohomologyRing({self.sequence!r}, k={self.k})"


class CohomologyClass:
    """An element of the ring, in squarefree normal form."""

    __slots__ = ("ring", "_coeffs")

    def __init__(self, ring: CohomologyRing, coeffs):
        self.ring = ring
        self._coeffs = {frozenset(key): value for key, value in coeffs.items()
                        if value}

    def coefficient(self, indices) -> int:
        """The integer in front of the squarefree monomial on these indices."""
        return self._coeffs.get(frozenset(indices), 0)

    def terms(self):
        """All (sorted index tuple, coefficient) pairs, graded then lex."""
        keys = sorted(self._coeffs, key=lambda s: (len(s), tuple(sorted(s))))
        return tuple((tuple(sorted(key)), self._coeffs[key]) for key in keys)

    def graded_part(self, size: int) -> "CohomologyClass":
        """The terms on monomials of exactly `size` variables (degree 2*size)."""
        return CohomologyClass(self.ring, {
            key: value for key, value in self._coeffs.items()
            if len(key) == size})

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic ---------------------------------------------------

    def _match(self, other: "CohomologyClass") -> "CohomologyClass":
        if not isinstance(other, CohomologyClass):
            raise ValidationError("expected a CohomologyClass")
        if other.ring != self.ring:
            raise ValidationError("classes live in different rings")
        return other

    def __add__(self, other):
        other = self._match(other)
        merged = dict(self._coeffs)
        for key, value in other._coeffs.items():
            merged[key] = merged.get(key, 0) + value
        return CohomologyClass(self.ring, merged)

    def __neg__(self):
        return CohomologyClass(self.ring,
                               {key: -value for key, value in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-self._match(other))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CohomologyClass(self.ring, {
                key: other * value for key, value in self._coeffs.items()})
        other = self._match(other)
        k = self.ring.k
        product = {}
        for left, cl in self._coeffs.items():
            for right, cr in other._coeffs.items():
                exps = tuple((1 if j in left else 0) + (1 if j in right else 0)
                             for j in range(1, k + 1))
                product[exps] = product.get(exps, 0) + cl * cr
        return CohomologyClass(self.ring, self.ring._reduce(product))

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.ring, self.terms()))

    def __repr__(self):
        return f"CohomologyClass({self.terms()!r})"


# ===================================================================
# Module-level operations
# ===================================================================

def cohomology_ring(c: IntegralSequence, k: int) -> CohomologyRing:
    """The stage-k ring carrier for the tower c."""
    return CohomologyRing(c, k)


def presentation(c: IntegralSequence, k: int) -> RingPresentation:
    """The linear forms defining the relation ideal."""
    return RingPresentation(c, k)


def normal_form(c: IntegralSequence, k: int, poly) -> CohomologyClass:
    """Reduce an integer polynomial to its squarefree representative."""
    return CohomologyRing(c, k).from_polynomial(poly)


def multiply(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Exact product of two classes over the same ring."""
    if not isinstance(a, CohomologyClass):
        raise ValidationError("expected a CohomologyClass")
    return a * b


def betti(c: IntegralSequence, k: int):
    """Ranks of the even-degree groups: binomial(k, i) for i = 0..k."""
    _check_ring_args(c, k)
    return [math.comb(k, i) for i in range(k + 1)]


def integrate(a: CohomologyClass) -> int:
    """The coefficient of the full top monomial x_1 ... x_k."""
    if not isinstance(a, CohomologyClass):
        raise ValidationError("expected a CohomologyClass")
    return a.coefficient(range(1, a.ring.k + 1))


def ray_class(c: IntegralSequence, k: int, j: int, gamma: int) -> CohomologyClass:
    """The divisor class of the fan generator a_{j,gamma}."""
    return CohomologyRing(c, k).ray_class(j, gamma)


def character_class(c: IntegralSequence, k: int, exps) -> CohomologyClass:
    """The first Chern class of a character line bundle."""
    return CohomologyRing(c, k).character_class(exps)


def total_chern_class(c: IntegralSequence, k: int) -> CohomologyClass:
    """The product over stages of (1 + ray class (j,0) + ray class (j,1))."""
    ring = CohomologyRing(c, k)
    total = ring.one()
    for j in range(1, k + 1):
        total = total * (ring.one() + ring.ray_class(j, 0) + ring.ray_class(j, 1))
    return total


def top_chern_class(c: IntegralSequence, k: int) -> CohomologyClass:
    """The top graded part of the total Chern class."""
    return total_chern_class(c, k).graded_part(k)


def euler_characteristic(c: IntegralSequence, k: int) -> int:
    """The integral of the top Chern class; always 2^k for a tower."""
    return integrate(top_chern_class(c, k))
