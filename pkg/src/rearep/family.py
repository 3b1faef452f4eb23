"""The representation container shared by both builders.

A generator block ``G`` acts on (module space) x (auxiliary space) with the
auxiliary factor last. It holds the transposed generator matrices:

    G[(r, i), (c, j)] = rho(l_i^j)[c, r]

Transposing the module factors only gives the block ``M`` whose products are
products in the algebra, ``M[(r, i), (c, j)] = rho(l_i^j)[r, c]``; every
relation check goes through :meth:`RepFamily.algebra_block`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from math import prod

from .scalar import ZERO, LaurentRational
from .tensor import QMatrix, kron, matrix_power, partial_trace, partial_transpose

__all__ = ["RepFamily", "FLAVORS"]

FLAVORS = ("REA", "mREA", "SL")


@dataclass
class RepFamily:
    n: int
    block: QMatrix
    flavor: str
    projector: QMatrix | None = None
    meta: dict = field(default_factory=dict)
    module_dim: int | None = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.block.row_shape[-1] != self.n:
            raise ValueError("the auxiliary factor must come last")
        if self.module_dim is None:
            if self.projector is None:
                self.module_dim = self.ambient_dim
            else:
                from .tensor import rank_exact

                self.module_dim = rank_exact(self.projector)

    @property
    def module_shape(self) -> tuple[int, ...]:
        return self.block.row_shape[:-1]

    @property
    def ambient_dim(self) -> int:
        return prod(self.module_shape)

    @property
    def k(self) -> int:
        return self.meta.get("k", len(self.module_shape))

    def module_projector(self) -> QMatrix:
        """Projector onto the module inside the ambient space (transposed convention)."""
        if self.projector is None:
            return QMatrix.identity(self.module_shape)
        return self.projector

    def delta_block(self) -> QMatrix:
        """``delta_i^j id`` in block form."""
        return kron(self.module_projector(), QMatrix.identity((self.n,)))

    def algebra_block(self) -> QMatrix:
        return partial_transpose(self.block, range(1, len(self.module_shape) + 1))

    def generator(self, i: int, j: int) -> QMatrix:
        """Matrix of ``l_i^j`` (0-based indices) on the ambient module space."""
        n, dim = self.n, self.ambient_dim
        rows = [[self.block.rows[c * n + i][r * n + j] for c in range(dim)] for r in range(dim)]
        return QMatrix(rows, self.module_shape, self.module_shape)

    def quantum_trace_power(self, c_matrix: QMatrix, m: int) -> QMatrix:
        """Transposed matrix of ``rho(Tr(C L^m))``, comparable with the projector."""
        mb = self.algebra_block()
        power = matrix_power(mb, m) if m > 1 else mb
        twisted = kron(QMatrix.identity(self.module_shape), c_matrix) @ power
        return partial_trace(twisted, len(self.module_shape) + 1).transpose()

    def with_block(self, block: QMatrix, **changes) -> "RepFamily":
        meta = dict(self.meta)
        meta.update(changes.pop("meta", {}))
        return replace(self, block=block, meta=meta, **changes)

    def to_json(self) -> dict:
        meta = {}
        for key, value in self.meta.items():
            if key.startswith("_"):
                continue
            if isinstance(value, (str, int, float, bool)) or value is None:
                meta[key] = value
            elif isinstance(value, LaurentRational):
                meta[key] = str(value)
            elif hasattr(value, "to_json"):
                meta[key] = value.to_json()
            else:
                meta[key] = str(value)
        return {
            "aux_dim": self.n,
            "module_dim": self.module_dim,
            "flavor": self.flavor,
            "block": self.block.to_json(),
            "projector": self.projector.to_json() if self.projector is not None else None,
            "meta": meta,
        }

    @classmethod
    def from_json(cls, obj) -> "RepFamily":
        if isinstance(obj, str):
            obj = json.loads(obj)
        proj = obj.get("projector")
        return cls(
            n=int(obj["aux_dim"]),
            block=QMatrix.from_json(obj["block"]),
            flavor=obj["flavor"],
            projector=QMatrix.from_json(proj) if proj else None,
            meta=dict(obj.get("meta", {})),
            module_dim=obj.get("module_dim"),
        )


def scalar_on_projector(op: QMatrix, projector: QMatrix) -> LaurentRational | None:
    """``c`` with ``op == c * projector``, or None when no such scalar exists."""
    pos = projector.first_nonzero()
    if pos is None:
        return None
    i, j = pos
    c = op.rows[i][j] / projector.rows[i][j]
    if c is ZERO:
        return c if op.is_zero() else None
    return c if op == projector.scale(c) else None
