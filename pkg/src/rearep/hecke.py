"""Young combinatorics and Hecke-algebra operators built from an R-matrix.

Operators on ``V^{(x)k}`` are cached on the profile, keyed by what they are,
so repeated builds over one profile share symmetrizers, Jucys-Murphy
operators and projectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .scalar import LaurentRational, q_int, qpow
from .tensor import QMatrix, embed_at, kron, r_chain

__all__ = [
    "Partition",
    "StandardTableau",
    "partitions_of",
    "standard_tableaux",
    "contents",
    "antisymmetrizer_from_r",
    "symmetrizer_from_r",
    "q_symmetrizer",
    "q_antisymmetrizer",
    "jucys_murphy",
    "young_projector",
    "projector_family",
    "lr_coefficients",
    "hook_count",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()[]")
        return cls(tuple(int(x) for x in body.split(",") if x.strip()))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > c) for c in range(self.parts[0])))

    def is_row(self) -> bool:
        return self.height <= 1

    def is_column(self) -> bool:
        return all(x == 1 for x in self.parts)

    def addable(self) -> list[tuple[int, int]]:
        """0-based (row, column) cells that can be added keeping a partition."""
        cells = []
        for r in range(self.height + 1):
            c = self.parts[r] if r < self.height else 0
            if r == 0 or self.parts[r - 1] > c:
                cells.append((r, c))
        return cells

    def contains(self, other: "Partition") -> bool:
        return other.height <= self.height and all(a >= b for a, b in zip(self.parts, other.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if len(row))
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        k = shape.weight
        if sorted(x for r in rows for x in r) != list(range(1, k + 1)):
            raise ValueError("filling must use 1..k once each")
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must increase")
            if r and any(rows[r - 1][c] >= row[c] for c in range(len(row))):
                raise ValueError("columns must increase")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def k(self) -> int:
        return self.shape.weight

    @cached_property
    def positions(self) -> list[tuple[int, int]]:
        """0-based (row, column) of entries 1..k."""
        pos = [None] * self.k
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                pos[x - 1] = (r, c)
        return pos

    def restrict(self, m: int) -> Partition:
        """Shape occupied by the entries 1..m."""
        return Partition(tuple(x for x in (sum(1 for v in row if v <= m) for row in self.rows) if x))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    @classmethod
    def row_reading(cls, shape: Partition) -> "StandardTableau":
        it = itertools.count(1)
        return cls(tuple(tuple(next(it) for _ in range(part)) for part in shape))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k``, reverse-lexicographic: (k) first, (1^k) last."""
    if k < 1:
        raise ValueError("k must be positive")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(k, k)]


def standard_tableaux(shape: Partition) -> list[StandardTableau]:
    """Every standard filling of ``shape``, sorted by row-reading word."""
    out = []
    k = shape.weight

    def grow(rows: list[list[int]], m: int):
        if m > k:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(shape.height):
            if len(rows[r]) < shape.parts[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(m)
                grow(rows, m + 1)
                rows[r].pop()

    grow([[] for _ in shape.parts], 1)
    return sorted(out, key=StandardTableau.reading_word)


def hook_count(shape: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    from math import factorial

    conj = shape.conjugate().parts
    hooks = 1
    for r, part in enumerate(shape.parts):
        for c in range(part):
            hooks *= (part - c - 1) + (conj[c] - r - 1) + 1
    return factorial(shape.weight) // hooks


def _content_exponent(cell: tuple[int, int]) -> int:
    r, c = cell
    return 2 * (c - r)


def contents(t: StandardTableau) -> list[LaurentRational]:
    """``q^{2(c - r)}`` for the boxes holding 1, 2, ..., k."""
    return [qpow(_content_exponent(cell)) for cell in t.positions]


# -- symmetrizers ----------------------------------------------------------

def _hecke_recurrence(r: QMatrix, n: int, k: int, prev: QMatrix | None, sign: int) -> QMatrix:
    if k == 1:
        return QMatrix.identity((n,))
    if prev is None:
        prev = _hecke_recurrence(r, n, k - 1, None, sign)
    shifted = kron(QMatrix.identity((n,)), prev)
    r12 = embed_at(r, 1, k, n)
    ident = QMatrix.identity((n,) * k)
    if sign > 0:
        middle = ident.scale(qpow(1 - k)) + r12.scale(q_int(k - 1))
    else:
        middle = ident.scale(qpow(k - 1)) - r12.scale(q_int(k - 1))
    return (shifted @ middle @ shifted).scale(q_int(k).inverse())


def symmetrizer_from_r(r: QMatrix, n: int, k: int, prev: QMatrix | None = None) -> QMatrix:
    """``S^(k)``; ``prev`` may supply ``S^(k-1)`` to skip the recursion."""
    return _hecke_recurrence(r, n, k, prev, +1)


def antisymmetrizer_from_r(r: QMatrix, n: int, k: int, prev: QMatrix | None = None) -> QMatrix:
    return _hecke_recurrence(r, n, k, prev, -1)


def _cached(profile, key, build):
    cache = profile.cache
    if key not in cache:
        cache[key] = build()
    return cache[key]


def q_symmetrizer(profile, k: int) -> QMatrix:
    profile.require(need_rank=False)
    if k < 1:
        raise ValueError("k must be positive")
    prev = q_symmetrizer(profile, k - 1) if k > 1 else None
    return _cached(profile, ("S", k), lambda: symmetrizer_from_r(profile.R, profile.n, k, prev))


def q_antisymmetrizer(profile, k: int) -> QMatrix:
    profile.require(need_rank=False)
    if k < 1:
        raise ValueError("k must be positive")
    prev = q_antisymmetrizer(profile, k - 1) if k > 1 else None
    return _cached(profile, ("A", k), lambda: antisymmetrizer_from_r(profile.R, profile.n, k, prev))


def r_local(profile, i: int, k: int, inverse: bool = False) -> QMatrix:
    """``R_i`` (or its inverse) acting on factors ``i, i+1`` of ``V^{(x)k}``."""
    base = profile.R_inv if inverse else profile.R
    return _cached(profile, ("Rloc", i, k, inverse), lambda: embed_at(base, i, k, profile.n))


def jucys_murphy(profile, i: int, k: int) -> QMatrix:
    """``J_1 = I`` and ``J_i = R_(i-1 -> 1) R_(1 -> i-1)`` on ``V^{(x)k}``."""
    if not 1 <= i <= k:
        raise ValueError(f"index {i} out of range for {k} factors")

    def build():
        if i == 1:
            return QMatrix.identity((profile.n,) * k)
        # J_i = R_{i-1} J_{i-1} R_{i-1}
        ri = r_local(profile, i - 1, k)
        return ri @ jucys_murphy(profile, i - 1, k) @ ri

    return _cached(profile, ("J", i, k), build)


def jucys_murphy_by_chains(profile, i: int, k: int) -> QMatrix:
    """Direct chain-product definition, kept as an independent cross-check."""
    if i == 1:
        return QMatrix.identity((profile.n,) * k)
    return r_chain(profile.R, i - 1, 1, 1, k, profile.n) @ r_chain(profile.R, 1, i - 1, 1, k, profile.n)


def young_projector(profile, t: StandardTableau) -> QMatrix:
    """Idempotent selecting the joint eigenspace of J_1..J_k with the contents of ``t``.

    Competing eigenvalues of ``J_i`` are the contents of the other addable
    cells of the shape filled by ``1..i-1``.
    """
    profile.require(need_rank=False)
    k = t.k

    def build():
        y = None
        for i in range(2, k + 1):
            cell = t.positions[i - 1]
            target = _content_exponent(cell)
            others = {_content_exponent(c) for c in t.restrict(i - 1).addable()} - {target}
            if not others:
                continue
            ji = jucys_murphy(profile, i, k)
            ident = QMatrix.identity(ji.row_shape)
            for v in sorted(others):
                factor = (ji - ident.scale(qpow(v))).scale((qpow(target) - qpow(v)).inverse())
                y = factor if y is None else y @ factor
        return y if y is not None else QMatrix.identity((profile.n,) * k)

    return _cached(profile, ("Y", t), build)


def projector_family(profile, k: int) -> dict[StandardTableau, QMatrix]:
    return {t: young_projector(profile, t)
            for shape in partitions_of(k) for t in standard_tableaux(shape)}


# -- Littlewood-Richardson ---------------------------------------------------

def _skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    inner_parts = inner.parts + (0,) * (outer.height - inner.height)
    return [(r, c) for r in range(outer.height) for c in range(inner_parts[r], outer.parts[r])]


def _count_lr_fillings(outer: Partition, inner: Partition, content: Partition) -> int:
    """Semistandard fillings of ``outer/inner`` with the given content whose
    reverse row reading word is a lattice word."""
    cells = _skew_cells(outer, inner)
    # fill rows top to bottom, each row right to left: this is the reading order
    order = sorted(cells, key=lambda rc: (rc[0], -rc[1]))
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * content.height
    need = content.parts

    def place(idx: int) -> int:
        if idx == len(order):
            return 1
        r, c = order[idx]
        total = 0
        for v in range(content.height):
            if counts[v] >= need[v]:
                continue
            if v > 0 and counts[v] + 1 > counts[v - 1]:
                continue
            right = filling.get((r, c + 1))
            if right is not None and right < v:
                continue
            above = filling.get((r - 1, c))
            if above is not None and above >= v:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += place(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


def lr_coefficients(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``c_{mu nu}^sigma`` for every ``sigma`` of weight ``|mu| + |nu|`` (nonzero entries only)."""
    out = {}
    for sigma in partitions_of(mu.weight + nu.weight):
        if not sigma.contains(mu):
            continue
        c = _count_lr_fillings(sigma, mu, nu)
        if c:
            out[sigma] = c
    return out
