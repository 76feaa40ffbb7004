"""Quotient presentations, character line bundles, and support-function data.

A height-k tower is a quotient of (C^2 \\ 0)^k by a k-torus.  The torus sits
inside the coordinate torus through k kernel generators (one per stage), and
dually each coordinate x_r, y_r carries a character weight.  Line bundles on
the tower are recorded by their character exponents: a length-k integer tuple
giving the twist against each stage of the acting torus.

Support-function data attaches one integer to every fan generator; on each
maximal cone those 2k numbers pin down a unique integer linear functional
r(w).  Such data lifts the height-k fan to a height-(k+1) fan, and the
canonical choice (0 on a_{i,0}, the matrix entry b(i,k+1) on a_{i,1})
reproduces the next tower fan exactly.
"""

from __future__ import annotations

from .errors import RejectionError, ValidationError
from .fans import BottFan, GeneralFan, binary_codes, build_fan
from .sequences import IntegralSequence, _check_int, bott_matrix


def _check_sequence(c) -> IntegralSequence:
    if not isinstance(c, IntegralSequence):
        raise ValidationError("expected an IntegralSequence")
    return c


def _check_stage(c: IntegralSequence, k: int) -> int:
    _check_int(k, "k")
    if not 1 <= k <= c.n:
        raise ValidationError(f"k={k} outside 1..{c.n}")
    return k


# ===================================================================
# Quotient presentation
# ===================================================================

class QuotientPresentation:
    """The k-torus inside (C*)^{2k} whose quotient is the tower.

    Coordinates are ordered x_1, y_1, ..., x_k, y_k.  `kernel_generators`
    lists one exponent vector per stage; `action_weights` gives the character
    weight of each coordinate, which is the transpose of the generator
    matrix.
    """

    __slots__ = ("sequence", "k", "kernel_generators", "action_weights")

    def __init__(self, sequence: IntegralSequence, k: int):
        self.sequence = _check_sequence(sequence)
        self.k = _check_stage(sequence, k)
        generators = []
        for r in range(1, k + 1):
            vec = [0] * (2 * k)
            vec[2 * r - 2] = 1
            for s in range(r, k + 1):
                vec[2 * s - 1] = sequence.value(r, s)
            generators.append(tuple(vec))
        self.kernel_generators = tuple(generators)
        self.action_weights = tuple(
            tuple(generators[r][m] for r in range(k))
            for m in range(2 * k))

    def __repr__(self):
        return f"QuotientPresentation({self.sequence!r}, k={self.k})"


def quotient_presentation(c: IntegralSequence, k: int) -> QuotientPresentation:
    """Kernel generators and coordinate weights of the stage-k quotient."""
    return QuotientPresentation(c, k)


# ===================================================================
# Character line bundles
# ===================================================================

class CharacterBundle:
    """A line bundle recorded by its character exponent tuple."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        vec = tuple(_check_int(x, "character exponent") for x in exps)
        if not vec:
            raise ValidationError("character needs at least one exponent")
        self.exps = vec

    @property
    def rank(self) -> int:
        return len(self.exps)

    def _match(self, other: "CharacterBundle") -> "CharacterBundle":
        if not isinstance(other, CharacterBundle):
            raise ValidationError("expected a CharacterBundle")
        if other.rank != self.rank:
            raise ValidationError(
                f"character lengths differ: {self.rank} vs {other.rank}")
        return other

    def __mul__(self, other):
        other = self._match(other)
        return CharacterBundle(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, power):
        _check_int(power, "power")
        return CharacterBundle(tuple(power * a for a in self.exps))

    def conjugate(self) -> "CharacterBundle":
        """The dual bundle: every exponent negated."""
        return CharacterBundle(tuple(-a for a in self.exps))

    def __eq__(self, other):
        if not isinstance(other, CharacterBundle):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"CharacterBundle({self.exps!r})"


def xi_bundle(c: IntegralSequence, k: int) -> CharacterBundle:
    """The stage-k twist bundle: exponents (c(1,k+1), ..., c(k,k+1)).

    Its projectivization (with a trivial summand) produces stage k+1, so it
    only exists when the tower has a stage k+1 to grow into.
    """
    _check_sequence(c)
    _check_int(k, "k")
    if not 1 <= k < c.n:
        raise ValidationError(f"k={k} needs a following stage, tower height {c.n}")
    return CharacterBundle(tuple(c.value(i, k + 1) for i in range(1, k + 1)))


def canonical_lambda(k: int) -> CharacterBundle:
    """The tautological bundle of the stage-k fiber: exponents (0,...,0,-1)."""
    _check_int(k, "k")
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    return CharacterBundle((0,) * (k - 1) + (-1,))


def lambda_bundle(j: int, k: int) -> CharacterBundle:
    """The stage-j tautological bundle pulled back to stage k: -e_j."""
    _check_int(j, "j")
    _check_int(k, "k")
    if not 1 <= j <= k:
        raise ValidationError(f"stage {j} outside 1..{k}")
    return CharacterBundle(tuple(-1 if i == j else 0 for i in range(1, k + 1)))


def lambda_perp(c: IntegralSequence, k: int) -> CharacterBundle:
    """The complementary summand of the stage-k tautological bundle.

    Exponents (c(1,k), ..., c(k-1,k), 1): together with canonical_lambda(k)
    it sums to the pullback of the previous stage's twist bundle.
    """
    _check_sequence(c)
    _check_stage(c, k)
    return CharacterBundle(
        tuple(c.value(i, k) for i in range(1, k)) + (1,))


def tangent_splitting(c: IntegralSequence, k: int):
    """One line bundle per fan generator, in ray order.

    Position (j,0) carries the dual of the stage-j tautological bundle
    (exponents e_j); position (j,1) carries (c(1,j), ..., c(j-1,j), 1, 0...).
    The tensor-square sum of the 2k bundles splits the tangent bundle.
    """
    _check_sequence(c)
    _check_stage(c, k)
    bundles = []
    for j in range(1, k + 1):
        bundles.append(CharacterBundle(
            tuple(1 if i == j else 0 for i in range(1, k + 1))))
        bundles.append(CharacterBundle(
            tuple(c.value(i, j) if i < j else (1 if i == j else 0)
                  for i in range(1, k + 1))))
    return bundles


# ===================================================================
# Support-function data
# ===================================================================

class SupportFunctionData:
    """Integer values on the 2k fan generators, linear on every maximal cone.

    `value(i, gamma)` returns the number attached to generator a_{i,gamma};
    `r(w)` returns the unique integer vector with <r(w), a_{i,w_i}> equal to
    the attached value for every stage i.  The cone systems are triangular
    with diagonal +-1, so the solutions are exact integers.
    """

    __slots__ = ("sequence", "k", "_fan", "_values", "_r_cache")

    def __init__(self, sequence: IntegralSequence, k: int, values):
        self.sequence = _check_sequence(sequence)
        self.k = _check_stage(sequence, k)
        table = {}
        for i in range(1, k + 1):
            for gamma in (0, 1):
                if (i, gamma) not in values:
                    raise ValidationError(
                        f"missing support value for generator ({i},{gamma})")
                table[(i, gamma)] = _check_int(
                    values[(i, gamma)], f"support value ({i},{gamma})")
        if len(values) != 2 * k:
            raise ValidationError(
                f"expected {2 * k} support values, got {len(values)}")
        self._fan = build_fan(sequence, k)
        self._values = table
        self._r_cache = {}

    def value(self, i: int, gamma: int) -> int:
        key = (i, gamma)
        if key not in self._values:
            raise ValidationError(f"no generator ({i},{gamma})")
        return self._values[key]

    def r(self, w):
        """The linear functional on the maximal cone of the code w."""
        w = tuple(w)
        if len(w) != self.k or any(g not in (0, 1) or isinstance(g, bool)
                                   for g in w):
            raise ValidationError(f"code {w!r} is not a length-{self.k} 0/1 tuple")
        if w in self._r_cache:
            return self._r_cache[w]
        k = self.k
        rows = [self._fan.generator(i, w[i - 1]) for i in range(1, k + 1)]
        rhs = [self._values[(i, w[i - 1])] for i in range(1, k + 1)]
        # back substitution: row i is supported on coordinates >= i-1 with a
        # +-1 pivot at i-1
        r = [0] * k
        for i in range(k, 0, -1):
            tail = sum(rows[i - 1][j] * r[j] for j in range(i, k))
            r[i - 1] = (rhs[i - 1] - tail) * rows[i - 1][i - 1]
        for i in range(k):
            if sum(a * b for a, b in zip(r, rows[i])) != rhs[i]:
                raise RejectionError("values not linear on cone",
                                     {"code": list(w)})
        result = tuple(r)
        self._r_cache[w] = result
        return result

    def values_table(self):
        """All (i, gamma, value) triples in generator order."""
        return tuple((i, gamma, self._values[(i, gamma)])
                     for i in range(1, self.k + 1) for gamma in (0, 1))

    def __eq__(self, other):
        if not isinstance(other, SupportFunctionData):
            return NotImplemented
        return (self.sequence == other.sequence and self.k == other.k
                and self._values == other._values)

    def __hash__(self):
        return hash((self.sequence, self.k, self.values_table()))

    def __repr__(self):
        return f"SupportFunctionData({self.sequence!r}, k={self.k})"


def support_function(c: IntegralSequence, k: int, values) -> SupportFunctionData:
    """Wrap generator values as per-cone-linear support data."""
    return SupportFunctionData(c, k, values)


def hk_support(c: IntegralSequence, k: int) -> SupportFunctionData:
    """The canonical support data whose lift grows the tower by one stage.

    Assigns 0 to every a_{i,0} and the matrix entry b(i,k+1) to a_{i,1};
    needs the tower to possess a stage k+1 supplying those entries.
    """
    _check_sequence(c)
    _check_int(k, "k")
    if not 1 <= k < c.n:
        raise ValidationError(f"k={k} needs a following stage, tower height {c.n}")
    rows = bott_matrix(c, range(1, k + 2))
    values = {}
    for i in range(1, k + 1):
        values[(i, 0)] = 0
        values[(i, 1)] = rows[i - 1][k]
    return SupportFunctionData(c, k, values)


def extend_sequence(c: IntegralSequence, k: int, h: SupportFunctionData):
    """Recover the next column of twists from support data on the stage-k fan.

    Returns (X_1 - r(1..1)_1, ..., X_k - r(1..1)_k) where X_i is the value on
    a_{i,0} and r(1..1) is the functional on the all-ones cone.  For the
    canonical data of a taller tower this is exactly the stored column
    (c(1,k+1), ..., c(k,k+1)).
    """
    _check_sequence(c)
    _check_stage(c, k)
    if not isinstance(h, SupportFunctionData):
        raise ValidationError("expected SupportFunctionData")
    if h.sequence != c or h.k != k:
        raise ValidationError("support data belongs to a different fan")
    top = h.r((1,) * k)
    return tuple(h.value(i, 0) - top[i - 1] for i in range(1, k + 1))
