"""Crosspolytope fans of Bott towers and checks on generic simplicial fans.

The fan of a height-k tower has 2k generators

    a_{i,0} = e_i,         a_{i,1} = (0, ..., 0, b(i,i), b(i,i+1), ..., b(i,k)),

with b(i,i) = -1 at coordinate i, and one maximal cone per binary code
w in {0,1}^k spanned by a_{1,w_1}, ..., a_{k,w_k}.  The 2^k maximal cones are
virtual on :class:`BottFan` (never stored) and expanded on demand.

Generic fans come in through :class:`GeneralFan`: explicit primitive rays plus
full-dimensional simplicial maximal cones given as ray index sets.  The checks
(smooth / complete / Fano / primitive collections) work on either kind.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations, product

from . import linalg
from .errors import RejectionError, ValidationError
from .sequences import IntegralSequence, bott_matrix, _check_int


def binary_codes(k: int):
    """All codes (w_1, ..., w_k) in binary order, w_1 most significant."""
    _check_int(k, "k")
    if k < 1:
        raise ValidationError(f"code length must be >= 1, got {k}")
    return product((0, 1), repeat=k)


class BottFan:
    """The crosspolytope fan of the first k stages of a tower."""

    __slots__ = ("sequence", "k", "_rows", "_general")

    def __init__(self, sequence: IntegralSequence, k: int):
        if not isinstance(sequence, IntegralSequence):
            raise ValidationError("sequence must be an IntegralSequence")
        _check_int(k, "k")
        if not 1 <= k <= sequence.n:
            raise ValidationError(f"k={k} outside 1..{sequence.n}")
        self.sequence = sequence
        self.k = k
        self._rows = bott_matrix(sequence, range(1, k + 1))
        self._general = None

    @property
    def dim(self) -> int:
        return self.k

    def generator(self, i: int, gamma: int):
        """The ray a_{i,gamma} as an integer tuple of length k."""
        _check_int(i, "i")
        if not 1 <= i <= self.k:
            raise ValidationError(f"stage {i} outside 1..{self.k}")
        if gamma not in (0, 1) or isinstance(gamma, bool):
            raise ValidationError(f"gamma must be 0 or 1, got {gamma!r}")
        if gamma == 0:
            return tuple(1 if j == i - 1 else 0 for j in range(self.k))
        return tuple(0 if j < i - 1 else self._rows[i - 1][j]
                     for j in range(self.k))

    def rays(self):
        """All 2k generators in the order (1,0), (1,1), ..., (k,0), (k,1)."""
        out = []
        for i in range(1, self.k + 1):
            out.append(self.generator(i, 0))
            out.append(self.generator(i, 1))
        return tuple(out)

    def cone(self, w):
        """Ray indices of the maximal cone for the binary code w."""
        w = tuple(w)
        if len(w) != self.k:
            raise ValidationError(f"code length {len(w)} != k={self.k}")
        return tuple(2 * i + w[i] for i in range(self.k))

    def as_general_fan(self) -> "GeneralFan":
        if self._general is None:
            self._general = GeneralFan(
                self.k, self.rays(),
                [self.cone(w) for w in binary_codes(self.k)])
        return self._general

    def __eq__(self, other):
        if not isinstance(other, BottFan):
            return NotImplemented
        return self.k == other.k and self.sequence == other.sequence

    def __hash__(self):
        return hash((self.sequence, self.k))

    def __repr__(self):
        return f"BottFan({self.sequence!r}, k={self.k})"


def build_fan(c: IntegralSequence, k: int) -> BottFan:
    """The crosspolytope fan of the tower c truncated at stage k."""
    return BottFan(c, k)


class GeneralFan:
    """A simplicial fan: primitive rays and full-dimensional maximal cones."""

    __slots__ = ("dim", "rays", "cones")

    def __init__(self, dim: int, rays, cones):
        _check_int(dim, "dim")
        if dim < 1:
            raise ValidationError(f"dim must be >= 1, got {dim}")
        ray_list = []
        for ray in rays:
            vec = tuple(_check_int(x, "ray coordinate") for x in ray)
            if len(vec) != dim:
                raise ValidationError(
                    f"ray {vec} has length {len(vec)}, expected {dim}")
            g = linalg.gcd_vector(vec)
            if g == 0:
                raise ValidationError("zero vector is not a valid ray")
            if g != 1:
                raise ValidationError(f"ray {vec} is not primitive (gcd {g})")
            ray_list.append(vec)
        if not ray_list:
            raise ValidationError("fan needs at least one ray")
        if len(set(ray_list)) != len(ray_list):
            raise ValidationError("duplicate rays")
        cone_list = []
        for cone in cones:
            idx = tuple(sorted(_check_int(x, "ray index") for x in cone))
            if len(idx) != dim:
                raise ValidationError(
                    f"maximal cone {idx} has {len(idx)} rays, expected {dim}")
            if len(set(idx)) != dim:
                raise ValidationError(f"maximal cone {idx} repeats a ray")
            if idx[0] < 0 or idx[-1] >= len(ray_list):
                raise ValidationError(f"maximal cone {idx} indexes a missing ray")
            cone_list.append(idx)
        if len(set(cone_list)) != len(cone_list):
            raise ValidationError("duplicate maximal cones")
        self.dim = dim
        self.rays = tuple(ray_list)
        self.cones = tuple(sorted(cone_list))

    def __eq__(self, other):
        if not isinstance(other, GeneralFan):
            return NotImplemented
        return (self.dim == other.dim and self.rays == other.rays
                and self.cones == other.cones)

    def __hash__(self):
        return hash((self.dim, self.rays, self.cones))

    def __repr__(self):
        return (f"GeneralFan(dim={self.dim}, rays={len(self.rays)}, "
                f"cones={len(self.cones)})")


def _as_general(fan) -> GeneralFan:
    if isinstance(fan, BottFan):
        return fan.as_general_fan()
    if isinstance(fan, GeneralFan):
        return fan
    raise ValidationError(f"expected a fan, got {type(fan).__name__}")


def _cone_matrix(gf: GeneralFan, cone):
    return [list(gf.rays[r]) for r in cone]


def _smoothness_report(gf: GeneralFan):
    """(all cones unimodular?, witness of the first failure)."""
    for cone in gf.cones:
        d = linalg.det(_cone_matrix(gf, cone))
        if d == 0:
            raise RejectionError("degenerate cone",
                                 {"cone": list(cone)})
        if abs(d) != 1:
            return False, {"cone": list(cone), "det": d}
    return True, None


def is_smooth(fan) -> bool:
    """True when every maximal cone has determinant +-1 (exact).

    Raises the "degenerate cone" rejection when some cone's rays are
    linearly dependent, which is reported distinctly from False.
    """
    return _smoothness_report(_as_general(fan))[0]


def _cone_inverses(gf: GeneralFan):
    """Exact inverse of each cone's ray-row matrix (ints when unimodular)."""
    inverses = []
    for cone in gf.cones:
        m = _cone_matrix(gf, cone)
        d = linalg.det(m)
        if d == 0:
            raise RejectionError("degenerate cone", {"cone": list(cone)})
        if abs(d) == 1:
            inverses.append(linalg.invert_unimodular(m))
        else:
            inverses.append(linalg.invert_fraction(m))
    return inverses


def _contains(inverse, x) -> bool:
    """Membership of x in the cone with ray-row inverse given: all
    barycentric coefficients of x must be >= 0."""
    k = len(x)
    for j in range(k):
        coeff = sum(x[t] * inverse[t][j] for t in range(k))
        if coeff < 0:
            return False
    return True


def is_complete(fan, probes: int = 100, seed: int = 0) -> bool:
    """Facet pairing + connectivity + randomized exact containment probe.

    Every (k-1)-face of a maximal cone must be shared by exactly two maximal
    cones, the facet-adjacency graph must be connected, and each of `probes`
    random integer vectors must lie in at least one maximal cone (membership
    decided exactly).  Deterministic for a fixed seed.
    """
    gf = _as_general(fan)
    if not gf.cones:
        return False
    facet_count = Counter()
    for cone in gf.cones:
        for drop in cone:
            facet_count[tuple(r for r in cone if r != drop)] += 1
    if any(count != 2 for count in facet_count.values()):
        return False
    by_facet = {}
    for idx, cone in enumerate(gf.cones):
        for drop in cone:
            by_facet.setdefault(tuple(r for r in cone if r != drop),
                                []).append(idx)
    seen = {0}
    queue = [0]
    while queue:
        current = queue.pop()
        for drop in gf.cones[current]:
            facet = tuple(r for r in gf.cones[current] if r != drop)
            for neighbor in by_facet[facet]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    queue.append(neighbor)
    if len(seen) != len(gf.cones):
        return False
    inverses = _cone_inverses(gf)
    rng = random.Random(seed)
    for _ in range(probes):
        x = tuple(rng.randint(-9, 9) for _ in range(gf.dim))
        if not any(_contains(inv, x) for inv in inverses):
            return False
    return True


def _match_rays(partners, count):
    """Lexicographically-first perfect matching on the non-cofaced graph.

    Repeatedly matches the lowest unmatched ray to its smallest still-free
    partner, backtracking when that leaves some later ray unmatchable.
    Returns the pair list (each pair ordered, pairs sorted by their smaller
    ray) or None when no perfect matching exists.
    """
    matched = [False] * count

    def extend():
        try:
            ray = matched.index(False)
        except ValueError:
            return []
        matched[ray] = True
        for other in partners[ray]:
            if matched[other]:
                continue
            matched[other] = True
            rest = extend()
            if rest is not None:
                return [(ray, other)] + rest
            matched[other] = False
        matched[ray] = False
        return None

    return extend()


def _crosspolytope_pairing(gf: GeneralFan):
    """Pair the rays so that the fan is combinatorially a crosspolytope.

    Returns (pairs, None) on success, with pairs sorted by smallest ray
    index, or (None, (code, witness)) naming the failed condition.  The
    pairing matches rays that never span a common cone, and picking one ray
    per pair must always span a maximal cone.
    """
    m = len(gf.rays)
    if m % 2 == 1:
        return None, ("ray count odd", {"ray_count": m})
    cofaced = set()
    for cone in gf.cones:
        for a in range(len(cone)):
            for b in range(a + 1, len(cone)):
                cofaced.add((cone[a], cone[b]))
    partners = {r: [] for r in range(m)}
    for a in range(m):
        for b in range(a + 1, m):
            if (a, b) not in cofaced:
                partners[a].append(b)
                partners[b].append(a)
    for ray, others in partners.items():
        if not others:
            return None, ("no valid pairing",
                          {"ray": ray, "non_cofaced_with": []})
    pairs = _match_rays(partners, m)
    if pairs is None:
        edges = [[a, b] for a in range(m) for b in partners[a] if a < b]
        return None, ("no valid pairing", {"non_cofaced_pairs": edges})
    if len(pairs) != gf.dim:
        return None, ("cone set not full binary cube",
                      {"pairs": len(pairs), "dim": gf.dim})
    cone_set = set(gf.cones)
    for choice in product(*pairs):
        transversal = tuple(sorted(choice))
        if transversal not in cone_set:
            return None, ("cone set not full binary cube",
                          {"missing_cone": list(transversal)})
    if len(gf.cones) != 2 ** gf.dim:
        return None, ("cone set not full binary cube",
                      {"cone_count": len(gf.cones)})
    return pairs, None


def primitive_collections(fan):
    """The minimal non-faces, as a list of ray index pairs.

    For a tower fan these are the k opposite pairs {a_{i,0}, a_{i,1}} by
    construction.  For a generic fan they are computed combinatorially and
    must form a perfect pairing of the rays whose one-per-pair selections are
    exactly the maximal cones; anything else is rejected.
    """
    if isinstance(fan, BottFan):
        return [(2 * i, 2 * i + 1) for i in range(fan.k)]
    gf = _as_general(fan)
    if gf.dim > 12:
        raise ValidationError(
            f"primitive collection search capped at dimension 12, got {gf.dim}")
    pairs, failure = _crosspolytope_pairing(gf)
    if failure is not None:
        raise RejectionError("not crosspolytope combinatorics",
                             {"condition": failure[0], **(failure[1] or {})})
    return [tuple(pair) for pair in pairs]


def is_fano(fan) -> bool:
    """Strict convexity of the anticanonical support data.

    For each maximal cone the unique vector m with <m, ray> = -1 on the
    cone's rays is computed exactly; the fan is Fano when every other ray
    satisfies <m, ray> > -1 strictly.  Requires a complete fan.
    """
    gf = _as_general(fan)
    if not is_complete(gf):
        raise RejectionError("not complete")
    k = gf.dim
    for cone in gf.cones:
        m = linalg.solve_fraction(_cone_matrix(gf, cone), [-1] * k)
        in_cone = set(cone)
        for idx, ray in enumerate(gf.rays):
            if idx in in_cone:
                continue
            value = sum(m[t] * ray[t] for t in range(k))
            if value <= -1:
                return False
    return True


def lift_with_support_function(fan: BottFan, h) -> GeneralFan:
    """Join of the graph-lift of a tower fan with the two vertical rays.

    Each generator y is lifted to (y, h(y)) and the rays +-e_{k+1} are
    adjoined; every lifted maximal cone is doubled, once with each vertical
    ray.  With the canonical support values h(a_{i,0}) = 0,
    h(a_{i,1}) = b(i,k+1) the result is exactly the height-(k+1) tower fan.
    """
    if not isinstance(fan, BottFan):
        raise ValidationError("lift expects a tower fan")
    seq = getattr(h, "sequence", None)
    if seq is not None and (seq != fan.sequence or getattr(h, "k", fan.k) != fan.k):
        raise ValidationError("support data belongs to a different fan")
    k = fan.k
    rays = []
    for i in range(1, k + 1):
        for gamma in (0, 1):
            rays.append(fan.generator(i, gamma) + (h.value(i, gamma),))
    rays.append(tuple(0 for _ in range(k)) + (1,))
    rays.append(tuple(0 for _ in range(k)) + (-1,))
    cones = []
    for w in binary_codes(k + 1):
        cones.append(tuple(2 * i + w[i] for i in range(k + 1)))
    return GeneralFan(k + 1, rays, cones)


def apply_unimodular(fan, matrix) -> GeneralFan:
    """Transform every ray by an integer matrix of determinant +-1."""
    gf = _as_general(fan)
    rows = [list(map(lambda x: _check_int(x, "matrix entry"), row))
            for row in matrix]
    if len(rows) != gf.dim or any(len(row) != gf.dim for row in rows):
        raise ValidationError(
            f"matrix must be {gf.dim}x{gf.dim} for this fan")
    if abs(linalg.det(rows)) != 1:
        raise ValidationError("matrix is not unimodular")
    return GeneralFan(gf.dim, [linalg.matvec(rows, ray) for ray in gf.rays],
                      gf.cones)


def fans_isomorphic(first, second, max_dim: int = 6):
    """Search for (ray permutation, unimodular matrix) identifying two fans.

    Anchors the first maximal cone of the first fan against every ordered
    maximal cone of the second, solves for the matrix exactly, and verifies
    it maps rays onto rays and cones onto cones.  Returns None when no
    isomorphism exists (the search is exhaustive); capped at `max_dim`.
    """
    g1 = _as_general(first)
    g2 = _as_general(second)
    if g1.dim != g2.dim:
        return None
    if g1.dim > max_dim:
        raise ValidationError(
            f"isomorphism search capped at dimension {max_dim}, got {g1.dim}")
    if len(g1.rays) != len(g2.rays) or len(g1.cones) != len(g2.cones):
        return None
    if not g1.cones or not g2.cones:
        raise ValidationError("isomorphism search needs maximal cones")
    k = g1.dim
    anchor = g1.cones[0]
    anchor_cols = [[g1.rays[r][t] for r in anchor] for t in range(k)]
    if linalg.det(anchor_cols) == 0:
        raise RejectionError("degenerate cone", {"cone": list(anchor)})
    anchor_inv = linalg.invert_fraction(anchor_cols)
    ray_index = {ray: idx for idx, ray in enumerate(g2.rays)}
    cone_set = set(g2.cones)
    for cone2 in g2.cones:
        for ordering in permutations(cone2):
            target_cols = [[g2.rays[r][t] for r in ordering] for t in range(k)]
            candidate = linalg.matmul(target_cols, anchor_inv)
            if any(x.denominator != 1 for row in candidate for x in row):
                continue
            matrix = [[int(x) for x in row] for row in candidate]
            if abs(linalg.det(matrix)) != 1:
                continue
            perm = []
            for ray in g1.rays:
                image = linalg.matvec(matrix, ray)
                found = ray_index.get(image)
                if found is None:
                    break
                perm.append(found)
            if len(perm) != len(g1.rays):
                continue
            if all(tuple(sorted(perm[r] for r in cone)) in cone_set
                   for cone in g1.cones):
                return tuple(perm), matrix
    return None
