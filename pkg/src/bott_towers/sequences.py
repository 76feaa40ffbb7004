"""Integral sequences, Bott matrices and Bott numbers.

A Bott tower of height n is encoded by integers c(i,j) for 1 <= i < j <= n,
with c(i,i) = 1 understood.  For an index set I = {i_1 < ... < i_m} the
coefficient matrix C(I) has (r,s) entry c(i_r, i_s) on and above the diagonal,
and the Bott matrix B(I) is defined by C(I)^(-1) = -B(I).  Its entries follow
the triangular recursion

    b(i,i) = -1,      b(i,j) = - sum_{i < k <= j} c(i,k) b(k,j),

which this module evaluates in exact integer arithmetic.  The top-right entry
b(I) of B(I) is the Bott number of I; it admits an independent expansion as an
alternating sum over chains through the interior of I, implemented in
:func:`bott_number_moebius`.

>>> c = IntegralSequence(3, {(1, 2): 2, (1, 3): 5, (2, 3): 3})
>>> bott_matrix(c, (1, 2, 3))
[[-1, 2, -1], [0, -1, 3], [0, 0, -1]]
>>> bott_number(c, (1, 2, 3))        # c(1,3) - c(1,2) c(2,3)
-1
>>> bott_number_moebius(c, (1, 2, 3))
-1

A poset whose identity labeling is a linear extension bridges into this
picture: taking c(i,j) = 1 exactly when i < j in the poset makes C(n) the zeta
matrix, so B(n) is the negated Moebius matrix.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ValidationError


def _check_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    return x


class IntegralSequence:
    """Upper-triangular integer data c(i,j), 1 <= i < j <= n, c(i,i) = 1."""

    __slots__ = ("n", "_entries", "_cache")

    def __init__(self, n: int, entries=None):
        _check_int(n, "n")
        if n < 1:
            raise ValidationError(f"n must be >= 1, got {n}")
        self.n = n
        stored = {}
        if entries:
            for key, val in dict(entries).items():
                try:
                    i, j = key
                except (TypeError, ValueError):
                    raise ValidationError(f"bad entry key {key!r}") from None
                _check_int(i, "index i")
                _check_int(j, "index j")
                _check_int(val, f"entry c({i},{j})")
                if not (1 <= i < j <= n):
                    raise ValidationError(
                        f"entry key ({i},{j}) outside 1 <= i < j <= {n}")
                if val != 0:
                    stored[(i, j)] = val
        self._entries = stored
        self._cache = {}

    @classmethod
    def zero(cls, n: int) -> "IntegralSequence":
        """The trivial tower of height n (a product of projective lines)."""
        return cls(n)

    @classmethod
    def bounded_flag(cls, n: int) -> "IntegralSequence":
        """The bounded-flag tower: c(j-1,j) = -1, all other entries 0."""
        return cls(n, {(j - 1, j): -1 for j in range(2, n + 1)})

    def value(self, i: int, j: int) -> int:
        """c(i,j) for 1 <= i <= j <= n (1 on the diagonal, 0 if unset)."""
        _check_int(i, "index i")
        _check_int(j, "index j")
        if not (1 <= i <= j <= self.n):
            raise ValidationError(
                f"indices ({i},{j}) outside 1 <= i <= j <= {self.n}")
        if i == j:
            return 1
        return self._entries.get((i, j), 0)

    def entries(self):
        """Sorted tuple of the nonzero (i, j, value) triples."""
        return tuple((i, j, v) for (i, j), v in sorted(self._entries.items()))

    def restrict(self, m: int) -> "IntegralSequence":
        """The sub-tower on stages 1..m."""
        _check_int(m, "m")
        if not 1 <= m <= self.n:
            raise ValidationError(f"restriction size {m} outside 1..{self.n}")
        return IntegralSequence(
            m, {k: v for k, v in self._entries.items() if k[1] <= m})

    def extend(self, column) -> "IntegralSequence":
        """Append stage n+1 with the given column (c(1,n+1), ..., c(n,n+1))."""
        col = [_check_int(x, "column entry") for x in column]
        if len(col) != self.n:
            raise ValidationError(
                f"extension column must have length {self.n}, got {len(col)}")
        entries = dict(self._entries)
        for i, v in enumerate(col, start=1):
            entries[(i, self.n + 1)] = v
        return IntegralSequence(self.n + 1, entries)

    def __eq__(self, other):
        if not isinstance(other, IntegralSequence):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._entries.items()))))

    def __repr__(self):
        return f"IntegralSequence({self.n}, {dict(sorted(self._entries.items()))})"


def _index_set(c: IntegralSequence, ids) -> tuple:
    out = tuple(sorted(_check_int(i, "index") for i in ids))
    if not out:
        raise ValidationError("index set must be nonempty")
    if len(set(out)) != len(out):
        raise ValidationError(f"index set {out} has repeated elements")
    if out[0] < 1 or out[-1] > c.n:
        raise ValidationError(f"index set {out} outside 1..{c.n}")
    return out


def c_matrix(c: IntegralSequence, ids):
    """The m x m coefficient matrix C(I): c(i_r, i_s) above the diagonal."""
    ids = _index_set(c, ids)
    m = len(ids)
    return [[c.value(ids[r], ids[s]) if r <= s else 0 for s in range(m)]
            for r in range(m)]


def bott_matrix(c: IntegralSequence, ids):
    """B(I) by the triangular recursion; satisfies C(I) @ (-B(I)) = Id."""
    ids = _index_set(c, ids)
    m = len(ids)
    b = [[0] * m for _ in range(m)]
    for s in range(m):
        b[s][s] = -1
        for r in range(s - 1, -1, -1):
            b[r][s] = -sum(c.value(ids[r], ids[t]) * b[t][s]
                           for t in range(r + 1, s + 1))
    return b


def bott_number(c: IntegralSequence, ids) -> int:
    """The Bott number b(I): top-right entry of B(I); -1 for singletons."""
    ids = _index_set(c, ids)
    cached = c._cache.get(ids)
    if cached is None:
        cached = bott_matrix(c, ids)[0][-1]
        c._cache[ids] = cached
    return cached


def bott_number_moebius(c: IntegralSequence, ids) -> int:
    """b(I) as an alternating sum over chains through the interior of I.

    For I with endpoints i = min(I), j = max(I), every subset
    L = {l_1 < ... < l_k} of I minus its endpoints contributes
    (-1)^k c(i,l_1) c(l_1,l_2) ... c(l_k,j); the empty subset contributes
    c(i,j).  This is the chain expansion of the top-right entry of -C(I)^(-1),
    so it must agree with :func:`bott_number` — computed here without any
    matrix algebra as an independent cross-check.
    """
    ids = _index_set(c, ids)
    if len(ids) < 2:
        raise ValidationError("interior-chain expansion needs |I| >= 2")
    lo, hi = ids[0], ids[-1]
    interior = ids[1:-1]
    total = 0
    for size in range(len(interior) + 1):
        for chain in combinations(interior, size):
            stops = (lo,) + chain + (hi,)
            prod = 1
            for a, b in zip(stops, stops[1:]):
                prod *= c.value(a, b)
                if prod == 0:
                    break
            total += -prod if size % 2 else prod
    return total


def _check_code(w) -> tuple:
    w = tuple(w)
    for bit in w:
        if isinstance(bit, bool) or bit not in (0, 1):
            raise ValidationError(f"binary code entries must be 0 or 1: {w!r}")
    return w


def lemma_identities(c: IntegralSequence, w, i: int, j: int):
    """Evaluate the two mixed-code sums; both are identically zero.

    For a binary code w, split the open integer interval (i, j) into the
    positions where w is 1 and where w is 0.  Writing b(S) for the Bott number
    over a position set S with the endpoints adjoined, the two returned values
    are

        sum_{l in ones + {i}} b({l} u zeros(l,j) u {j}) b(i,l)  +  b(i,j)
        sum_{l in ones + {j}} b({i} u zeros(i,l) u {l}) b(l,j)  +  b(i,j)

    where b(i,l) is the Bott number of the full integer interval [i..l].
    """
    w = _check_code(w)
    k = len(w)
    _check_int(i, "i")
    _check_int(j, "j")
    if not (1 <= i < j <= k <= c.n):
        raise ValidationError(
            f"need 1 <= i < j <= len(w) <= n, got i={i}, j={j}, "
            f"len(w)={k}, n={c.n}")

    def b_interval(a: int, b: int) -> int:
        return bott_number(c, range(a, b + 1))

    def b_zeros_adjoined(a: int, b: int) -> int:
        zeros = [l for l in range(a + 1, b) if w[l - 1] == 0]
        return bott_number(c, [a, *zeros, b])

    ones = [l for l in range(i + 1, j) if w[l - 1] == 1]
    first = sum(b_zeros_adjoined(l, j) * b_interval(i, l)
                for l in [*ones, i]) + b_interval(i, j)
    second = sum(b_zeros_adjoined(i, l) * b_interval(l, j)
                 for l in [*ones, j]) + b_interval(i, j)
    return first, second


class Poset:
    """Finite poset on 1..n whose identity labeling is a linear extension.

    Accepts either covering pairs or a full relation; the transitive closure
    is taken either way.  Any pair (i, j) with i > j is rejected, since it
    would break the linear-extension requirement (and with it antisymmetry).
    """

    __slots__ = ("n", "_strict")

    def __init__(self, n: int, relation=()):
        _check_int(n, "n")
        if n < 1:
            raise ValidationError(f"n must be >= 1, got {n}")
        self.n = n
        strict = set()
        for pair in relation:
            try:
                i, j = pair
            except (TypeError, ValueError):
                raise ValidationError(f"bad relation pair {pair!r}") from None
            _check_int(i, "relation index")
            _check_int(j, "relation index")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValidationError(f"relation pair ({i},{j}) outside 1..{n}")
            if i == j:
                continue
            if i > j:
                raise ValidationError(
                    f"pair ({i},{j}) has i > j: identity labeling would not "
                    "be a linear extension")
            strict.add((i, j))
        # transitive closure; all pairs point upward so one forward sweep
        # per midpoint suffices.
        changed = True
        while changed:
            changed = False
            for (a, b) in list(strict):
                for (x, y) in list(strict):
                    if b == x and (a, y) not in strict:
                        strict.add((a, y))
                        changed = True
        self._strict = frozenset(strict)

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self._strict

    def strict_pairs(self):
        return tuple(sorted(self._strict))

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self._strict == other._strict

    def __hash__(self):
        return hash((self.n, self._strict))

    def __repr__(self):
        return f"Poset({self.n}, {sorted(self._strict)})"


def zeta_matrix(p: Poset):
    """0/1 incidence matrix of the order relation: upper triangular."""
    return [[1 if p.leq(i, j) else 0 for j in range(1, p.n + 1)]
            for i in range(1, p.n + 1)]


def moebius_matrix(p: Poset):
    """Moebius function as a matrix, by the summation recursion.

    mu(i,i) = 1 and mu(i,j) = - sum over i <= z < j in the order of mu(i,z);
    computed without inverting the zeta matrix.
    """
    n = p.n
    m = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        m[i - 1][i - 1] = 1
        for j in range(i + 1, n + 1):
            if p.leq(i, j):
                m[i - 1][j - 1] = -sum(
                    m[i - 1][z - 1] for z in range(i, j)
                    if p.leq(i, z) and p.leq(z, j))
    return m


def poset_to_sequence(p: Poset) -> IntegralSequence:
    """The sequence with c(i,j) = 1 exactly when i < j in the poset."""
    return IntegralSequence(p.n, {pair: 1 for pair in p.strict_pairs()})
