"""Dimension bounds for posets free of a standard example on 2k elements.

The pipeline peels a bipartite poset a few minimal elements at a time.
Each peel removes a set Q of A-side elements that is monochromatic under
the upset-based coloring, and pays for it with a bundle of linear
extensions built from a random binary matrix with an isolating-row
property.  General posets are handled through their split, which is
bipartite, preserves freeness, and sandwiches the dimension.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    BipartitePoset,
    Embedding,
    Poset,
    bipartition,
    derive_seed,
    find_standard_example,
    iter_bits,
    kimble_split,
)
from .dimension import (
    LinearExtension,
    Realizer,
    check_extension,
    critical_pairs,
    exact_dimension,
    greedy_reversing_extensions,
    is_realizer,
    realizer_from_json_dict,
    realizer_to_json_dict,
)
from .errors import (
    AcquisitionFailed,
    BoundExceeded,
    BudgetExceeded,
    ContainsSk,
    NoMonochromaticSet,
    NoValidColor,
    VerificationFailed,
)

# -- binary matrices and the isolating-row event ------------------------------


@dataclass(frozen=True)
class BinaryMatrix:
    """An r x q matrix over {0, 1}, stored row-major."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(b) for b in row) for row in self.bits)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix")
        if any(b not in (0, 1) for row in rows for b in row):
            raise ValueError("entries must be 0 or 1")
        object.__setattr__(self, "bits", rows)

    @property
    def r(self) -> int:
        return len(self.bits)

    @property
    def q(self) -> int:
        return len(self.bits[0]) if self.bits else 0

    def row_masks(self) -> list[int]:
        """Each row as a bitmask, column j on bit j."""
        return [sum(b << j for j, b in enumerate(row)) for row in self.bits]

    def to_strings(self) -> list[str]:
        return ["".join(str(b) for b in row) for row in self.bits]

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> BinaryMatrix:
        return cls(tuple(tuple(int(ch) for ch in row) for row in rows))


def event_E_holds(mat: BinaryMatrix, t: int) -> bool:
    """Does every t-tuple of columns have all t isolating rows?

    For each sorted t-tuple of columns and each member column, some row
    must carry a 1 at that column and 0 at the other t-1.
    """
    q = mat.q
    if not (1 <= t <= q):
        raise ValueError(f"need 1 <= t <= q, got t={t}, q={q}")
    masks = mat.row_masks()
    for cols in combinations(range(q), t):
        tuple_mask = 0
        for c in cols:
            tuple_mask |= 1 << c
        for c in cols:
            target = 1 << c
            if not any(rm & tuple_mask == target for rm in masks):
                return False
    return True


def event_probability_bound(t: int, q: int, r: int) -> float:
    """Union-bound lower estimate for the isolating-row event on a fair
    random r x q matrix: 1 - t * C(q, t) * (1 - 2^-t)^r.  May be
    negative; it turns positive once r >= t * 2^t * ln(q)."""
    if not (1 <= t <= q) or r < 0:
        raise ValueError(f"bad parameters t={t}, q={q}, r={r}")
    return 1.0 - t * math.comb(q, t) * (1.0 - 2.0 ** (-t)) ** r


def acquire_event_matrix(
    t: int, q: int, r: int, seed: int, max_tries: int = 1000
) -> BinaryMatrix:
    """Produce an r x q matrix satisfying the isolating-row event.

    With r >= q the first q rows of the identity settle it outright;
    otherwise fair-coin matrices are sampled from the seed until one
    passes, raising AcquisitionFailed after max_tries rejections.
    """
    if not (1 <= t <= q):
        raise ValueError(f"need 1 <= t <= q, got t={t}, q={q}")
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if r >= q:
        rows = tuple(
            tuple(1 if i == j else 0 for j in range(q)) if i < q else (0,) * q
            for i in range(r)
        )
        return BinaryMatrix(rows)
    rng = random.Random(seed)
    for _ in range(max_tries):
        rows = tuple(
            tuple((w >> j) & 1 for j in range(q))
            for w in (rng.getrandbits(q) for _ in range(r))
        )
        mat = BinaryMatrix(rows)
        if event_E_holds(mat, t):
            return mat
    bound = event_probability_bound(t, q, r)
    raise AcquisitionFailed(
        f"no matrix with the isolating-row property in {max_tries} tries "
        f"(t={t}, q={q}, r={r}; analytic success bound {bound:.4f})",
        analytic_bound=bound,
    )


# -- mates and the upset-based coloring ---------------------------------------


def mates(bp: BipartitePoset, subset: Sequence[int], i: int) -> frozenset[int]:
    """B-side mates of position i (1-based) in a subset of A.

    A mate is incomparable to the i-th element and above every other
    element of the subset; subset must be listed in a_order.
    """
    k = len(subset)
    if not (1 <= i <= k):
        raise ValueError(f"position {i} out of range 1..{k}")
    positions = [bp.a_order.index(a) for a in subset]
    if sorted(positions) != positions or len(set(positions)) != k:
        raise ValueError("subset must be distinct and sorted by a_order")
    up = bp.poset._up
    mask = bp.b_mask
    for j, a in enumerate(subset, start=1):
        if j == i:
            mask &= ~up[a]
        else:
            mask &= up[a]
    return frozenset(iter_bits(mask))


def _mate_masks(bp: BipartitePoset, elems: Sequence[int]) -> list[int]:
    # mates of every position at once; elems sorted by a_order
    up = bp.poset._up
    k = len(elems)
    pre = [bp.b_mask]
    for a in elems:
        pre.append(pre[-1] & up[a])
    suf = [bp.b_mask] * (k + 1)
    for j in range(k - 1, -1, -1):
        suf[j] = suf[j + 1] & up[elems[j]]
    return [pre[i] & suf[i + 1] & ~up[elems[i]] for i in range(k)]


def valid_colors(bp: BipartitePoset, subset: Sequence[int]) -> frozenset[int]:
    """Positions (1-based) of the subset that have no mate.

    An empty result would exhibit a standard example (the subset plus
    one mate per position), so NoValidColor carries that witness.
    """
    elems = list(subset)
    positions = [bp.a_order.index(a) for a in elems]
    if sorted(positions) != positions or len(set(positions)) != len(elems):
        raise ValueError("subset must be distinct and sorted by a_order")
    masks = _mate_masks(bp, elems)
    good = frozenset(i + 1 for i, m in enumerate(masks) if not m)
    if not good:
        partners = tuple(next(iter_bits(m)) for m in masks)
        raise NoValidColor(
            f"every position of {tuple(elems)} has a mate",
            embedding=Embedding(tuple(elems), partners),
        )
    return good


def subset_color(bp: BipartitePoset, subset: Sequence[int]) -> int:
    """Smallest valid color of the subset."""
    return min(valid_colors(bp, subset))


@dataclass
class UBColoring:
    """Upset-based coloring of all k-subsets of the A side.

    colors maps each sorted tuple of positions into a_order to the
    smallest position (1-based) that has no mate in that subset.
    """

    k: int
    colors: dict[tuple[int, ...], int]

    def color_of(self, positions: tuple[int, ...]) -> int:
        return self.colors[positions]

    def check(self, bp: BipartitePoset) -> None:
        """Re-verify the no-mate invariant for every stored color."""
        for positions, color in self.colors.items():
            elems = tuple(bp.a_order[c] for c in positions)
            assert not mates(bp, elems, color), (positions, color)
            assert color == subset_color(bp, elems)


class _LazyColoring:
    """Same color rule as UBColoring, computed on demand and memoized."""

    __slots__ = ("k", "bp", "_cache")

    def __init__(self, bp: BipartitePoset, k: int):
        self.k = k
        self.bp = bp
        self._cache: dict[tuple[int, ...], int] = {}

    def color_of(self, positions: tuple[int, ...]) -> int:
        got = self._cache.get(positions)
        if got is None:
            elems = tuple(self.bp.a_order[c] for c in positions)
            got = subset_color(self.bp, elems)
            self._cache[positions] = got
        return got


def ub_coloring(bp: BipartitePoset, k: int) -> UBColoring:
    """Materialize the upset-based coloring of every k-subset of A.

    Raises NoValidColor (with an embedded standard example) exactly when
    the poset is not free of them.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    colors: dict[tuple[int, ...], int] = {}
    na = len(bp.a_order)
    for positions in combinations(range(na), k):
        elems = tuple(bp.a_order[c] for c in positions)
        colors[positions] = subset_color(bp, elems)
    return UBColoring(k, colors)


def find_monochromatic(
    bp: BipartitePoset, coloring, q: int
) -> tuple[tuple[int, ...], int] | None:
    """Search for q elements of A whose k-subsets all share one color.

    Tries colors in increasing order; within a color, greedy extension
    over A in a_order with backtracking, so the first set found wins.
    Returns (elements sorted by a_order, color), or None.
    """
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    na = len(bp.a_order)
    if q > na:
        return None
    k = coloring.k
    chosen: list[int] = []

    def extend(start: int, color: int) -> bool:
        if len(chosen) == q:
            return True
        for c in range(start, na):
            if all(
                coloring.color_of(tup + (c,)) == color
                for tup in combinations(chosen, k - 1)
            ):
                chosen.append(c)
                if extend(c + 1, color):
                    return True
                chosen.pop()
        return False

    for color in range(1, k + 1):
        chosen.clear()
        if extend(0, color):
            return tuple(bp.a_order[c] for c in chosen), color
    return None


# -- reversing extensions from matrix rows ------------------------------------


def sigma_permutations(row: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two traversal orders a matrix row induces on 0..q-1.

    First the columns carrying 1, then those carrying 0; left to right
    for the first permutation, right to left for the second.
    """
    ones = [j for j, b in enumerate(row) if b]
    zeros = [j for j, b in enumerate(row) if not b]
    sigma1 = tuple(ones + zeros)
    sigma2 = tuple(ones[::-1] + zeros[::-1])
    return sigma1, sigma2


def extension_from_sigma(
    bp: BipartitePoset, q_elems: Sequence[int], sigma: Sequence[int]
) -> LinearExtension:
    """Linear extension stacking residual upsets over a traversal of Q.

    Walking Q in sigma order, each element brings the part of its upset
    not claimed earlier; top to bottom the extension reads U_1 > q_1 >
    U_2 > q_2 > ... > R, with the leftovers R at the bottom (A-side
    first) and ascending indices inside every block.
    """
    p = bp.poset
    q_elems = list(q_elems)
    if sorted(sigma) != list(range(len(q_elems))):
        raise ValueError("sigma must permute 0..len(Q)-1")
    up = p._up
    claimed = 0
    blocks: list[tuple[int, int]] = []  # (q element, its residual upset mask)
    for idx in sigma:
        a = q_elems[idx]
        residual = up[a] & ~claimed
        claimed |= residual
        blocks.append((a, residual))
    q_mask = 0
    for a in q_elems:
        q_mask |= 1 << a
    rest = ((1 << p.n) - 1) & ~q_mask & ~claimed
    rest_a = rest & bp.a_mask
    rest_b = rest & bp.b_mask
    bottom_up: list[int] = list(iter_bits(rest_a)) + list(iter_bits(rest_b))
    for a, residual in reversed(blocks):
        bottom_up.append(a)
        bottom_up.extend(iter_bits(residual))
    ext = LinearExtension(tuple(bottom_up))
    check_extension(p, ext)
    return ext


def build_reversing_extensions(
    bp: BipartitePoset,
    k: int,
    q_elems: Sequence[int],
    color: int,
    seed: int,
) -> tuple[list[LinearExtension], BinaryMatrix]:
    """Extensions reversing every critical pair (a, b) with a in Q, b in B.

    Q must be monochromatic of the given color under the upset-based
    k-subset coloring.  A matrix with the isolating-row property at
    t = max(color-1, k-color) supplies 2r extensions, two per row, via
    the two row traversals.  The postcondition is checked pair by pair;
    a miss raises VerificationFailed with a mate-count diagnosis.
    """
    q = len(q_elems)
    if q < 2:
        raise ValueError("need |Q| >= 2")
    if not (1 <= color <= k):
        raise ValueError(f"color {color} out of range 1..{k}")
    t = max(color - 1, k - color)
    t_eff = min(t, q)
    r = math.ceil(k * (2 ** k) * math.log(q))
    mat = acquire_event_matrix(t_eff, q, r, seed)
    exts: list[LinearExtension] = []
    for row in mat.bits:
        s1, s2 = sigma_permutations(row)
        exts.append(extension_from_sigma(bp, q_elems, s1))
        exts.append(extension_from_sigma(bp, q_elems, s2))

    # every incomparable (a in Q, b in B) pair is critical here and must
    # now be reversed by some member
    p = bp.poset
    pos_rows = [ext.positions() for ext in exts]
    down = p._down
    for i, a in enumerate(q_elems, start=1):
        cand = bp.b_mask & ~p.upset_mask(a)
        for b in iter_bits(cand):
            if any(pr[b] < pr[a] for pr in pos_rows):
                continue
            left = sum(1 for j in range(i - 1) if (down[b] >> q_elems[j]) & 1)
            right = sum(1 for j in range(i, q) if (down[b] >> q_elems[j]) & 1)
            raise VerificationFailed(
                f"pair ({a}, {b}) not reversed; position {i} of Q sees "
                f"{left} earlier and {right} later Q-elements below {b} "
                f"(color {color}, t={t_eff})",
                pair=(a, b),
            )
    return exts, mat


# -- peeling ------------------------------------------------------------------


def step_extension_cap(k: int, q: int) -> int:
    """Most extensions one peel of a q-set may spend: floor(3k * 2^k * ln q)."""
    return math.floor(3 * k * (2 ** k) * math.log(q))


@dataclass
class PeelStep:
    """One peel: the removed monochromatic set and what paid for it."""

    removed: tuple[int, ...]
    q: int
    color: int
    matrix: BinaryMatrix
    extensions: tuple[LinearExtension, ...]
    cleanup_count: int

    @property
    def matrix_rows(self) -> int:
        return self.matrix.r

    @property
    def extensions_built(self) -> int:
        return len(self.extensions)


_EAGER_COLORING_CAP = 3000


def peel_step(bp: BipartitePoset, k: int, q: int, seed: int) -> PeelStep:
    """Remove one monochromatic q-set worth of dimension from bp.

    Finds Q, builds the matrix-driven reversing extensions, adds the
    minimal-elements extension (all minimal elements at the bottom,
    descending a_order), and finishes with greedy cleanup extensions for
    any critical pair touching Q that is still unreversed.  The step
    must fit in floor(3k * 2^k * ln q) extensions, else BoundExceeded.
    """
    na = len(bp.a_order)
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    if na < q:
        raise NoMonochromaticSet(f"|A| = {na} < q = {q}")
    if math.comb(na, k) <= _EAGER_COLORING_CAP:
        coloring = ub_coloring(bp, k)
    else:
        coloring = _LazyColoring(bp, k)
    found = find_monochromatic(bp, coloring, q)
    if found is None:
        raise NoMonochromaticSet(
            f"no monochromatic {q}-set among {na} A-side elements"
        )
    q_elems, color = found
    exts, mat = build_reversing_extensions(bp, k, q_elems, color, derive_seed(seed, 1))

    p = bp.poset
    minimal_mask = 0
    for x in range(p.n):
        if not p.downset_mask(x):
            minimal_mask |= 1 << x
    bottom = [x for x in reversed(bp.a_order)]
    bottom += [x for x in iter_bits(minimal_mask & bp.b_mask)]
    above = [x for x in iter_bits(bp.b_mask & ~minimal_mask)]
    min_ext = LinearExtension(tuple(bottom + above))
    check_extension(p, min_ext)
    exts = exts + [min_ext]

    # cleanup: critical pairs with either end in Q not reversed yet
    q_mask = 0
    for a in q_elems:
        q_mask |= 1 << a
    touching = [
        c for c in critical_pairs(p)
        if (q_mask >> c.x) & 1 or (q_mask >> c.y) & 1
    ]
    pos_rows = [ext.positions() for ext in exts]
    residue = [
        c for c in touching
        if not any(pr[c.y] < pr[c.x] for pr in pos_rows)
    ]
    cleanup = greedy_reversing_extensions(p, residue) if residue else []
    all_exts = tuple(exts + cleanup)
    cap = step_extension_cap(k, len(q_elems))
    if len(all_exts) > cap:
        raise BoundExceeded(
            f"peel spent {len(all_exts)} extensions, cap is {cap} "
            f"(k={k}, q={len(q_elems)})"
        )
    return PeelStep(
        removed=q_elems,
        q=len(q_elems),
        color=color,
        matrix=mat,
        extensions=all_exts,
        cleanup_count=len(cleanup),
    )


@dataclass(frozen=True)
class PeelStepRecord:
    """Certificate row for one peel, in original element ids."""

    removed: tuple[int, ...]
    q: int
    color: int
    matrix: BinaryMatrix
    extensions_built: int
    cleanup_count: int

    @property
    def matrix_rows(self) -> int:
        return self.matrix.r


@dataclass
class PeelCertificate:
    """Full accounting of a peeled realizer.

    total_size = base_dimension + sum of per-step extension counts, and
    the realizer (verified against the input poset) has exactly that
    many extensions.
    """

    steps: tuple[PeelStepRecord, ...]
    base_size: int
    base_dimension: int
    base_optimal: bool
    total_size: int
    realizer: Realizer

    def check(self) -> None:
        spent = sum(s.extensions_built for s in self.steps)
        assert self.total_size == self.base_dimension + spent
        assert self.total_size == len(self.realizer.extensions)


def peel_realizer(
    bp: BipartitePoset,
    k: int,
    q: int,
    base_threshold: int,
    seed: int,
    base_budget: int | None = 300_000,
) -> PeelCertificate:
    """Iterated peeling down to a small base, then an exact base realizer.

    Peels the side with more elements (the dual is peeled when |A| < |B|
    and every extension is flipped at the end).  Extensions from deeper
    levels are lifted by stacking each removed set at the very bottom,
    descending a_order.  Stops peeling when the ground set is at most
    base_threshold or no monochromatic set exists; the remainder goes to
    the exact solver (its budget overrun downgrades base_optimal rather
    than failing, since any base realizer keeps the certificate sound).
    The assembled realizer is verified against the input before return.
    """
    if base_threshold < 1:
        raise ValueError("base_threshold must be >= 1")
    dualized = len(bp.a_order) < len(bp.b_order)
    work = bp.dual() if dualized else bp

    cur = work
    cur_ids = tuple(range(work.poset.n))
    lift_prefix: list[int] = []  # grows bottom-up as peels stack
    collected: list[tuple[int, ...]] = []
    records: list[PeelStepRecord] = []

    while cur.poset.n > base_threshold and len(cur.a_order) >= q:
        try:
            step = peel_step(cur, k, q, derive_seed(seed, len(records)))
        except NoMonochromaticSet:
            break
        for ext in step.extensions:
            collected.append(
                tuple(lift_prefix) + tuple(cur_ids[v] for v in ext.order)
            )
        removed_orig = tuple(cur_ids[v] for v in step.removed)
        records.append(
            PeelStepRecord(
                removed=removed_orig,
                q=step.q,
                color=step.color,
                matrix=step.matrix,
                extensions_built=step.extensions_built,
                cleanup_count=step.cleanup_count,
            )
        )
        # removed sets stack under everything peeled later, each block
        # in descending a_order of its host
        lift_prefix.extend(reversed(removed_orig))
        cur, kept = cur.remove(step.removed)
        cur_ids = tuple(cur_ids[i] for i in kept)

    base_size = cur.poset.n
    try:
        base = exact_dimension(cur.poset, budget=base_budget)
        base_optimal = base.optimal
    except BudgetExceeded as exc:
        base = exc.best
        base_optimal = False
    for ext in base.witness.extensions:
        collected.append(
            tuple(lift_prefix) + tuple(cur_ids[v] for v in ext.order)
        )

    exts = [LinearExtension(order) for order in collected]
    if dualized:
        exts = [ext.reversed_copy() for ext in exts]
    realizer = Realizer(tuple(exts))
    ok, unreversed = is_realizer(bp.poset, realizer.extensions)
    if not ok:
        raise VerificationFailed(
            f"assembled realizer misses {len(unreversed)} critical pairs",
            pair=tuple(unreversed[0]),
        )
    cert = PeelCertificate(
        steps=tuple(records),
        base_size=base_size,
        base_dimension=base.d,
        base_optimal=base_optimal,
        total_size=base.d + sum(rec.extensions_built for rec in records),
        realizer=realizer,
    )
    cert.check()
    return cert


# -- the general bound through the split --------------------------------------


@dataclass
class GeneralBoundResult:
    """Upper bound for a general poset via peeling its split."""

    bound: int
    certificate: PeelCertificate
    realizer_for_p: Realizer
    cleanup_count: int


def _project_split_extension(p: Poset, ext: LinearExtension) -> LinearExtension:
    """Order p by ascending position of the maximal copies in a split
    extension, repaired to a valid extension by always emitting the
    available element whose maximal copy sits lowest."""
    n = p.n
    pos = ext.positions()
    priority = [pos[n + x] for x in range(n)]
    emitted = 0
    order: list[int] = []
    todo = list(range(n))
    while todo:
        best = -1
        for v in todo:
            if p.downset_mask(v) & ~emitted:
                continue
            if best < 0 or priority[v] < priority[best]:
                best = v
        order.append(best)
        todo.remove(best)
        emitted |= 1 << best
    return LinearExtension(tuple(order))


def general_upper_bound(
    p: Poset,
    k: int,
    q: int,
    base_threshold: int,
    seed: int,
    base_budget: int | None = 300_000,
) -> GeneralBoundResult:
    """Dimension upper bound for any poset free of the 2k standard example.

    The split doubles the poset into a bipartite one without creating
    standard examples and without lowering the dimension, so the size of
    its peeled realizer bounds the input's dimension.  A realizer for
    the input itself is recovered from the split extensions by the
    maximal-copy priority order, with greedy cleanup for whatever the
    projection misses.
    """
    emb = find_standard_example(p, k)
    if emb is not None:
        raise ContainsSk(
            f"poset contains a standard example on 2*{k} elements", embedding=emb
        )
    split = kimble_split(p)
    bp = bipartition(split)
    assert bp is not None, "splits always have height at most 2"
    cert = peel_realizer(bp, k, q, base_threshold, derive_seed(seed, 0), base_budget)

    family = [_project_split_extension(p, ext) for ext in cert.realizer.extensions]
    ok, unreversed = is_realizer(p, family)
    cleanup: list[LinearExtension] = []
    if not ok:
        cleanup = greedy_reversing_extensions(p, unreversed)
        family = family + cleanup
        ok, unreversed = is_realizer(p, family)
        if not ok:
            raise VerificationFailed(
                "projection cleanup failed to realize the input",
                pair=tuple(unreversed[0]),
            )
    return GeneralBoundResult(
        bound=cert.total_size,
        certificate=cert,
        realizer_for_p=Realizer(tuple(family)),
        cleanup_count=len(cleanup),
    )


# -- certificate JSON ----------------------------------------------------------


def certificate_to_json_dict(cert: PeelCertificate) -> dict:
    n = len(cert.realizer.extensions[0]) if cert.realizer.extensions else 0
    return {
        "steps": [
            {
                "removed": list(rec.removed),
                "q": rec.q,
                "color": rec.color,
                "matrix_rows": rec.matrix_rows,
                "matrix": rec.matrix.to_strings(),
                "extensions_built": rec.extensions_built,
                "cleanup_extensions": rec.cleanup_count,
            }
            for rec in cert.steps
        ],
        "base_size": cert.base_size,
        "base_dimension": cert.base_dimension,
        "base_optimal": cert.base_optimal,
        "total_size": cert.total_size,
        "realizer": realizer_to_json_dict(n, cert.realizer, False),
    }


def certificate_from_json_dict(data: dict) -> PeelCertificate:
    steps = tuple(
        PeelStepRecord(
            removed=tuple(rec["removed"]),
            q=int(rec["q"]),
            color=int(rec["color"]),
            matrix=BinaryMatrix.from_strings(rec["matrix"]),
            extensions_built=int(rec["extensions_built"]),
            cleanup_count=int(rec["cleanup_extensions"]),
        )
        for rec in data["steps"]
    )
    _, realizer, _ = realizer_from_json_dict(data["realizer"])
    return PeelCertificate(
        steps=steps,
        base_size=int(data["base_size"]),
        base_dimension=int(data["base_dimension"]),
        base_optimal=bool(data["base_optimal"]),
        total_size=int(data["total_size"]),
        realizer=realizer,
    )


def certificate_to_json(cert: PeelCertificate) -> str:
    return json.dumps(certificate_to_json_dict(cert), indent=2)


def certificate_from_json(text: str) -> PeelCertificate:
    return certificate_from_json_dict(json.loads(text))
