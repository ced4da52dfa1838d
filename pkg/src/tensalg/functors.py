"""Constructions connecting frames, modules and operator modules.

Two object constructions live here: the tensor of a frame with an operator
module (a quotient of the power module by a generated nucleus) and the hom
frame (points are module homomorphisms, the relation measures how far each
point is from intertwining the operator).  Their four morphism actions and
the forward map along a frame map round out the picture.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonCommutativeBase, QuantaleMismatch
from .frames import FrameHom, VFrame, is_frame_hom, validate_frame
from .fsemilattice import FSemilattice
from .nucleus import EndoOperator, closure_of, prenucleus_from_pairs, quotient
from .vmodule import (ModuleHom, VModule, enumerate_module_homs,
                      is_module_hom, module_residuate, power_module)


# special elements ----------------------------------------------------------

def delta_tuple(arity: int, bottom: int, x: int, i: int) -> tuple[int, ...]:
    """x at position i, bottom elsewhere."""
    return tuple(x if j == i else bottom for j in range(arity))


def smear_tuple(module: VModule, frame: VFrame, x: int, i: int) -> tuple[int, ...]:
    """Position j carries r(i,j) acting on x."""
    return tuple(module.act(frame.r[i][j], x) for j in range(frame.n))


def delta_element(power: VModule, x: int, i: int) -> int:
    """Encoded form of delta_tuple in a materialized power module."""
    lat = power.carrier
    return lat.encode(delta_tuple(lat._arity, power.base.carrier.bottom, x, i))


def smear_element(power: VModule, frame: VFrame, x: int, i: int) -> int:
    return power.carrier.encode(smear_tuple(power.base, frame, x, i))


# tensor --------------------------------------------------------------------

def tensor_pairs_encoded(power: VModule, frame: VFrame, fsl: FSemilattice
                         ) -> list[tuple[int, int]]:
    """The generating pairs (smear(x,i) v delta(F x,i), delta(F x,i))."""
    lat = power.carrier
    base = fsl.module
    out = []
    for x in range(base.n):
        fx = fsl.F[x]
        for i in range(frame.n):
            smear = smear_tuple(base, frame, x, i)
            dlt = delta_tuple(frame.n, base.carrier.bottom, fx, i)
            c = tuple(base.carrier.join2(s, d) for s, d in zip(smear, dlt))
            out.append((lat.encode(c), lat.encode(dlt)))
    return out


@dataclass(frozen=True)
class TensorModule:
    """A materialized tensor of a frame with an operator module."""
    frame: VFrame
    fsl: FSemilattice
    power: VModule
    nucleus: EndoOperator
    quotient: VModule
    projection: ModuleHom
    fixed: tuple[int, ...]

    def project(self, encoded: int) -> int:
        return self.projection.values[encoded]


def tensor(frame: VFrame, fsl: FSemilattice, cap: int | None = None,
           name: str | None = None) -> TensorModule:
    """Quotient the power module over the frame's points by the nucleus
    generated from the smear/delta pairs.

    The base quantale must be commutative; the generated nucleus on the
    power is closed under the action by commutativity.
    """
    q = fsl.quantale
    if frame.quantale is not q:
        raise QuantaleMismatch("frame and operator module share no quantale",
                               witness=(frame.name, fsl.name))
    if not q.commutative:
        raise NonCommutativeBase("tensor requires a commutative quantale",
                                 witness=q.name)
    name = name or f"{frame.name}(x){fsl.name}"
    power = power_module(fsl.module, frame.n, cap=cap,
                         name=f"{fsl.module.name}^{frame.n}")
    pairs = tensor_pairs_encoded(power, frame, fsl)
    # the tensor quotient lives in modules: the power host carries the
    # identity operator, so pair saturation only ranges over the action
    host = FSemilattice(power, tuple(range(power.n)), name=f"{name}/host")
    op, sat = prenucleus_from_pairs(host, pairs)
    nuc = closure_of(op)
    for c, d in pairs:
        assert nuc.values[c] == nuc.values[d], \
            "nucleus fails to collapse a generating pair"
    result = quotient(host, nuc)
    qmod = VModule(q, result.fsl.module.carrier, result.fsl.module.action_rows(),
                   name=name)
    proj = ModuleHom(power, qmod, result.surjection.values)
    return TensorModule(frame, fsl, power, nuc, qmod, proj, result.fixed)


# forward map ---------------------------------------------------------------

def forward_map(f: FrameHom, module: VModule,
                source_power: VModule, target_power: VModule) -> ModuleHom:
    """Push a tuple along a frame map: position k collects the join over
    its preimage fiber."""
    slat = source_power.carrier
    tlat = target_power.carrier
    base = module.carrier
    fibers = [[i for i in range(f.source.n) if f.mapping[i] == k]
              for k in range(f.target.n)]
    values = []
    for enc in range(slat.n):
        tup = slat.decode(enc)
        out = tuple(base.join(tup[i] for i in fibers[k])
                    for k in range(f.target.n))
        values.append(tlat.encode(out))
    hom = ModuleHom(source_power, target_power, tuple(values))
    assert is_module_hom(hom, source_power, target_power)
    return hom


def forward_tuple(f: FrameHom, lat, tup: tuple) -> tuple:
    """Tuple-level forward map; ``lat`` supplies the join."""
    return tuple(lat.join(tup[i] for i in range(f.source.n)
                          if f.mapping[i] == k)
                 for k in range(f.target.n))


# morphism actions on tensors ----------------------------------------------

def tensor_frame_hom(t: FrameHom, fsl: FSemilattice,
                     source_t: TensorModule, target_t: TensorModule) -> ModuleHom:
    """The unique module map on quotients with n2 o forward = result o n1;
    the defining square is re-checked on every power element."""
    fwd = forward_map(t, fsl.module, source_t.power, target_t.power)
    n2 = target_t.nucleus.values
    proj2 = target_t.projection.values
    values = tuple(proj2[n2[fwd.values[p]]] for p in source_t.fixed)
    result = ModuleHom(source_t.quotient, target_t.quotient, values)
    proj1 = source_t.projection.values
    for x in range(source_t.power.n):
        if result.values[proj1[x]] != proj2[fwd.values[x]]:
            raise AssertionError(
                f"tensor action square breaks at power element {x}")
    assert is_module_hom(result, source_t.quotient, target_t.quotient)
    return result


def tensor_lax_hom(frame: VFrame, f: ModuleHom,
                   source_t: TensorModule, target_t: TensorModule) -> ModuleHom:
    """Same construction along a lax operator morphism, lifted pointwise."""
    slat = source_t.power.carrier
    tlat = target_t.power.carrier
    n2 = target_t.nucleus.values
    proj2 = target_t.projection.values

    def lift(enc: int) -> int:
        return tlat.encode(tuple(f.values[a] for a in slat.decode(enc)))

    values = tuple(proj2[n2[lift(p)]] for p in source_t.fixed)
    result = ModuleHom(source_t.quotient, target_t.quotient, values)
    proj1 = source_t.projection.values
    for x in range(source_t.power.n):
        if result.values[proj1[x]] != proj2[n2[lift(x)]]:
            raise AssertionError(
                f"tensor lax-action square breaks at power element {x}")
    assert is_module_hom(result, source_t.quotient, target_t.quotient)
    return result


# hom frame -----------------------------------------------------------------

@dataclass(frozen=True)
class HomFrame:
    """The frame of module homomorphisms from an operator module's carrier."""
    fsl: FSemilattice
    target: VModule
    homs: tuple[ModuleHom, ...]
    frame: VFrame

    @property
    def n(self) -> int:
        return len(self.homs)

    def index_of(self, values: tuple[int, ...]) -> int:
        for k, h in enumerate(self.homs):
            if h.values == values:
                return k
        raise KeyError(f"no point with value table {values}")


def hom_frame_relation(fsl: FSemilattice, target: VModule,
                       homs: tuple[ModuleHom, ...]) -> list[list[int]]:
    lat = fsl.quantale.lattice
    res = [[module_residuate(target, u, w) for w in range(target.n)]
           for u in range(target.n)]
    table = []
    for alpha in homs:
        row = []
        for beta in homs:
            row.append(lat.meet(res[beta.values[x]][alpha.values[fsl.F[x]]]
                                for x in range(fsl.n)))
        table.append(row)
    return table


def hom_frame(fsl: FSemilattice, target: VModule,
              budget: int | None = None, name: str | None = None) -> HomFrame:
    """Points are all module homs into the target, ordered by value table;
    the relation compares each point against its operator twist."""
    q = fsl.quantale
    if target.quantale is not q:
        raise QuantaleMismatch("operator module and target share no quantale",
                               witness=(fsl.name, target.name))
    if not q.commutative:
        raise NonCommutativeBase("hom frame requires a commutative quantale",
                                 witness=q.name)
    homs = tuple(enumerate_module_homs(fsl.module, target, budget=budget))
    r = hom_frame_relation(fsl, target, homs)
    name = name or f"[{fsl.name},{target.name}]"
    frame = validate_frame(q, [f"h{k}" for k in range(len(homs))], r, name=name)
    return HomFrame(fsl, target, homs, frame)


def hom_frame_covariant(source_hf: HomFrame, g: ModuleHom,
                        target_hf: HomFrame) -> FrameHom:
    """Post-compose every point with a module map; always lands on a point."""
    mapping = []
    for alpha in source_hf.homs:
        composite = tuple(g.values[alpha.values[x]] for x in range(source_hf.fsl.n))
        mapping.append(target_hf.index_of(composite))
    result = FrameHom(source_hf.frame, target_hf.frame, tuple(mapping))
    assert is_frame_hom(result, source_hf.frame, target_hf.frame)
    return result


def hom_frame_contravariant(f: ModuleHom, source_hf: HomFrame,
                            target_hf: HomFrame) -> FrameHom:
    """Pre-compose every point with a lax operator morphism.

    f runs between the operator modules of target_hf and source_hf, so the
    induced frame map runs from source_hf's frame to target_hf's.
    """
    mapping = []
    for alpha in source_hf.homs:
        composite = tuple(alpha.values[f.values[y]] for y in range(target_hf.fsl.n))
        mapping.append(target_hf.index_of(composite))
    result = FrameHom(source_hf.frame, target_hf.frame, tuple(mapping))
    assert is_frame_hom(result, source_hf.frame, target_hf.frame)
    return result
