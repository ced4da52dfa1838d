"""Left modules over a quantale: complete lattices with a scalar action.

The action of a scalar ``v`` on a module element ``a`` is written ``act(v, a)``.
Power modules act coordinatewise and never materialize their action tables;
everything else stores explicit rows.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (ActionNotAssociative, ActionNotJoinPreserving,
                     SourceTargetQuantaleMismatch, UnitActionFails)
from .lattice import FinLattice, enumerate_join_preserving_maps, _monotone_assignments
from .quantale import Quantale


class VModule:
    """Validated module over a quantale.

    ``action`` is a |V| by |A| table of indices, or None for power modules
    where the action is computed coordinatewise.
    """

    __slots__ = ("quantale", "carrier", "action", "name", "_power_of")

    def __init__(self, quantale: Quantale, carrier: FinLattice, action,
                 name: str = "A", power_of: "VModule | None" = None):
        self.quantale = quantale
        self.carrier = carrier
        self.action = action
        self.name = name
        self._power_of = power_of

    @property
    def n(self) -> int:
        return self.carrier.n

    @property
    def labels(self):
        return self.carrier.labels

    @property
    def is_power(self) -> bool:
        return self._power_of is not None

    @property
    def base(self) -> "VModule | None":
        return self._power_of

    def act(self, v: int, a: int) -> int:
        if self.action is not None:
            return self.action[v][a]
        base = self._power_of
        return self.carrier.encode(tuple(base.act(v, c)
                                         for c in self.carrier.decode(a)))

    def join(self, items) -> int:
        return self.carrier.join(items)

    def action_rows(self) -> tuple[tuple[int, ...], ...]:
        if self.action is not None:
            return self.action
        return tuple(tuple(self.act(v, a) for a in range(self.n))
                     for v in range(self.quantale.n))

    def __repr__(self):
        return f"VModule({self.name}, n={self.n}, over={self.quantale.name})"


class ModuleHom:
    """A map between modules over the same quantale, stored as a value vector."""

    __slots__ = ("source", "target", "values")

    def __init__(self, source: VModule, target: VModule, values: Sequence[int]):
        self.source = source
        self.target = target
        self.values = tuple(values)

    def __call__(self, a: int) -> int:
        return self.values[a]

    def __eq__(self, other):
        if not isinstance(other, ModuleHom):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.values))

    def __repr__(self):
        return f"ModuleHom({self.source.name}->{self.target.name}, {self.values})"


def validate_module(quantale: Quantale, carrier: FinLattice,
                    action: Sequence[Sequence[int]], name: str = "A") -> VModule:
    """Check the four module laws for an explicit action table."""
    nv, na = quantale.n, carrier.n
    if len(action) != nv or any(len(row) != na for row in action):
        raise ActionNotJoinPreserving("action table is not |V| by |A|",
                                      witness=(nv, na))
    for row in action:
        for x in row:
            if not (0 <= x < na):
                raise ActionNotJoinPreserving("action entry out of range", witness=(x,))

    vlat, alat = quantale.lattice, carrier
    vl, al = quantale.labels, carrier.labels

    for v in range(nv):
        if action[v][alat.bottom] != alat.bottom:
            raise ActionNotJoinPreserving(
                f"{vl[v]} * bottom != bottom", witness=(v, alat.bottom))
        for a in range(na):
            for b in range(a + 1, na):
                ab = alat.join2(a, b)
                if action[v][ab] != alat.join2(action[v][a], action[v][b]):
                    raise ActionNotJoinPreserving(
                        f"{vl[v]} * ({al[a]} v {al[b]}) fails", witness=(v, a, b))

    for a in range(na):
        if action[vlat.bottom][a] != alat.bottom:
            raise ActionNotJoinPreserving(
                f"bottom_V * {al[a]} != bottom", witness=(vlat.bottom, a))
        for u in range(nv):
            for v in range(u + 1, nv):
                uv = vlat.join2(u, v)
                if action[uv][a] != alat.join2(action[u][a], action[v][a]):
                    raise ActionNotJoinPreserving(
                        f"({vl[u]} v {vl[v]}) * {al[a]} fails", witness=(u, v, a))

    for u in range(nv):
        for v in range(nv):
            uv = quantale.mul(u, v)
            for a in range(na):
                if action[u][action[v][a]] != action[uv][a]:
                    raise ActionNotAssociative(
                        f"{vl[u]} * ({vl[v]} * {al[a]}) != ({vl[u]}*{vl[v]}) * {al[a]}",
                        witness=(u, v, a))

    e = quantale.unit
    for a in range(na):
        if action[e][a] != a:
            raise UnitActionFails(
                f"unit * {al[a]} = {al[action[e][a]]}, expected {al[a]}",
                witness=(e, a))

    return VModule(quantale, carrier, tuple(tuple(r) for r in action), name=name)


def power_module(module: VModule, arity: int, cap: int | None = None,
                 name: str | None = None) -> VModule:
    """The module of ``arity``-tuples with pointwise order, joins and action."""
    carrier = FinLattice.power(module.carrier, arity, cap=cap)
    if name is None:
        name = f"{module.name}^{arity}"
    return VModule(module.quantale, carrier, None, name=name, power_of=module)


def module_residuate(module: VModule, a: int, b: int) -> int:
    """The largest scalar v with v * a <= b."""
    lat = module.carrier
    return module.quantale.join(v for v in range(module.quantale.n)
                                if lat.leq(module.act(v, a), b))


def is_module_hom(f, source: VModule | None = None,
                  target: VModule | None = None) -> bool:
    """True when ``f`` preserves all joins and the scalar action.

    ``f`` may be a ModuleHom or a bare value vector with explicit source and
    target.  Modules over different quantale objects are not comparable.
    """
    if isinstance(f, ModuleHom):
        source = f.source if source is None else source
        target = f.target if target is None else target
        values = f.values
    else:
        values = tuple(f)
    if source.quantale is not target.quantale:
        raise SourceTargetQuantaleMismatch(
            f"{source.name} is over {source.quantale.name}, "
            f"{target.name} over {target.quantale.name}",
            witness=(source.name, target.name))
    return _hom_violation(values, source, target) is None


def _hom_violation(values, source: VModule, target: VModule):
    src, dst = source.carrier, target.carrier
    if len(values) != src.n:
        return ("shape", len(values))
    if values[src.bottom] != dst.bottom:
        return ("bottom", src.bottom)
    for a in range(src.n):
        for b in range(a + 1, src.n):
            if values[src.join2(a, b)] != dst.join2(values[a], values[b]):
                return ("join", a, b)
    for v in range(source.quantale.n):
        for a in range(src.n):
            if values[source.act(v, a)] != target.act(v, values[a]):
                return ("action", v, a)
    return None


def enumerate_module_homs(source: VModule, target: VModule,
                          budget: int | None = None) -> list[ModuleHom]:
    """All module homomorphisms, sorted by value vector.

    Sources backed by power carriers use coordinate sections for the join and
    action filters, which avoids touching every pair of the power.
    """
    if source.quantale is not target.quantale:
        raise SourceTargetQuantaleMismatch(
            f"{source.name} and {target.name} live over different quantales",
            witness=(source.name, target.name))
    src, dst = source.carrier, target.carrier
    if src.is_power:
        ji = src.join_irreducibles()
        vectors = []
        for g in _monotone_assignments(src, dst, budget):
            if _power_hom_sections_ok(source, target, g):
                vectors.append(tuple(dst.join(g[j] for j in ji if src.leq(j, x))
                                     for x in range(src.n)))
        vectors.sort()
    else:
        vectors = [f for f in enumerate_join_preserving_maps(src, dst, budget=budget)
                   if _action_ok(f, source, target)]
    return [ModuleHom(source, target, f) for f in vectors]


def _action_ok(values, source: VModule, target: VModule) -> bool:
    for v in range(source.quantale.n):
        for a in range(source.n):
            if values[source.act(v, a)] != target.act(v, values[a]):
                return False
    return True


def _power_hom_sections_ok(source: VModule, target: VModule, g: dict) -> bool:
    src, dst = source.carrier, target.carrier
    base = source.base
    blat = base.carrier
    bji = blat.join_irreducibles()
    nv = source.quantale.n
    for k in range(src.arity):
        h = [dst.join(g[_delta(src, j0, k)] for j0 in bji if blat.leq(j0, u))
             for u in range(blat.n)]
        for a in range(blat.n):
            for b in range(a + 1, blat.n):
                if h[blat.join2(a, b)] != dst.join2(h[a], h[b]):
                    return False
        for v in range(nv):
            for u in range(blat.n):
                if h[base.act(v, u)] != target.act(v, h[u]):
                    return False
    return True


def _delta(power: FinLattice, x: int, k: int) -> int:
    t = [power.base.bottom] * power.arity
    t[k] = x
    return power.encode(t)


def identity_module_hom(module: VModule) -> ModuleHom:
    return ModuleHom(module, module, tuple(range(module.n)))


def compose_module_homs(g: ModuleHom, f: ModuleHom) -> ModuleHom:
    """g after f."""
    if f.target is not g.source:
        raise SourceTargetQuantaleMismatch(
            "composition needs matching middle module",
            witness=(f.target.name, g.source.name))
    return ModuleHom(f.source, g.target, tuple(g.values[v] for v in f.values))
