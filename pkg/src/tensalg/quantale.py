"""Unital quantales on finite lattices.

A quantale here is a complete lattice with an associative multiplication
that distributes over arbitrary joins on both sides and has a two-sided
unit.  On a finite carrier, distributivity over arbitrary joins reduces to
binary joins plus annihilation of the bottom element, and that is what the
validator checks.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NotAssociative, NotJoinDistributive, UnitLawFails
from .lattice import FinLattice


class Quantale:
    """Validated unital quantale. Build through :func:`validate_quantale`."""

    __slots__ = ("lattice", "tensor", "unit", "commutative", "name")

    def __init__(self, lattice: FinLattice, tensor, unit: int,
                 commutative: bool, name: str = "V"):
        self.lattice = lattice
        self.tensor = tensor
        self.unit = unit
        self.commutative = commutative
        self.name = name

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def labels(self):
        return self.lattice.labels

    def mul(self, a: int, b: int) -> int:
        return self.tensor[a][b]

    def join(self, items) -> int:
        return self.lattice.join(items)

    def __repr__(self):
        return f"Quantale({self.name}, n={self.n}, unit={self.labels[self.unit]})"


def validate_quantale(lattice: FinLattice, tensor: Sequence[Sequence[int]],
                      unit: int, name: str = "V") -> Quantale:
    """Check associativity, two-sided join distributivity and the unit law.

    Raises NotAssociative, NotJoinDistributive or UnitLawFails with the
    offending triple or pair as witness.
    """
    n = lattice.n
    if len(tensor) != n or any(len(row) != n for row in tensor):
        raise NotJoinDistributive("tensor table is not n by n", witness=(n,))
    for row in tensor:
        for v in row:
            if not (0 <= v < n):
                raise NotJoinDistributive("tensor entry out of range", witness=(v,))
    if not (0 <= unit < n):
        raise UnitLawFails("unit index out of range", witness=(unit,))

    labels = lattice.labels
    for x in range(n):
        if tensor[x][unit] != x:
            raise UnitLawFails(
                f"{labels[x]} * unit = {labels[tensor[x][unit]]}, expected {labels[x]}",
                witness=(x, unit))
        if tensor[unit][x] != x:
            raise UnitLawFails(
                f"unit * {labels[x]} = {labels[tensor[unit][x]]}, expected {labels[x]}",
                witness=(unit, x))

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if tensor[x][tensor[y][z]] != tensor[tensor[x][y]][z]:
                    raise NotAssociative(
                        f"({labels[x]} * {labels[y]}) * {labels[z]} != "
                        f"{labels[x]} * ({labels[y]} * {labels[z]})",
                        witness=(x, y, z))

    bot = lattice.bottom
    for x in range(n):
        if tensor[x][bot] != bot:
            raise NotJoinDistributive(
                f"{labels[x]} * bottom != bottom", witness=(x, bot))
        if tensor[bot][x] != bot:
            raise NotJoinDistributive(
                f"bottom * {labels[x]} != bottom", witness=(bot, x))
    for x in range(n):
        for u in range(n):
            for v in range(u + 1, n):
                uv = lattice.join2(u, v)
                if tensor[x][uv] != lattice.join2(tensor[x][u], tensor[x][v]):
                    raise NotJoinDistributive(
                        f"{labels[x]} * ({labels[u]} v {labels[v]}) fails",
                        witness=(x, u, v))
                if tensor[uv][x] != lattice.join2(tensor[u][x], tensor[v][x]):
                    raise NotJoinDistributive(
                        f"({labels[u]} v {labels[v]}) * {labels[x]} fails",
                        witness=(u, v, x))

    tensor_t = tuple(tuple(row) for row in tensor)
    comm = all(tensor_t[x][y] == tensor_t[y][x]
               for x in range(n) for y in range(x + 1, n))
    return Quantale(lattice, tensor_t, unit, comm, name=name)


def is_commutative(q: Quantale) -> bool:
    """Full-table scan, independent of the flag stored at validation time."""
    return all(q.tensor[x][y] == q.tensor[y][x]
               for x in range(q.n) for y in range(x + 1, q.n))


def residuate(q: Quantale, u: int, w: int) -> int:
    """hom(u, w): the largest v with v * u <= w."""
    lat = q.lattice
    return lat.join(v for v in range(q.n) if lat.leq(q.tensor[v][u], w))
