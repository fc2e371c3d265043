"""Finite groups, homomorphisms, and actions as explicit lookup tables.

Elements are opaque text ids. Structural problems (missing entries, unknown
ids, oversized tables) raise SchemaError at construction time; violations of
the group/hom/action laws are reported by the validate_* functions and never
raised, so a caller can inspect witnesses.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .errors import SchemaError
from .report import Report

ORDER_CAP = 1024


class FiniteGroup:
    """A finite group given by a full multiplication table.

    mul maps (a, b) to the product ab; inv maps each element to its claimed
    inverse. The table must be total over elements x elements and closed, but
    it is not required to satisfy the group axioms: use validate_group to
    check those and obtain witnesses.
    """

    def __init__(
        self,
        name: str,
        elements: Iterable[str],
        mul: Mapping[tuple[str, str], str],
        identity: str,
        inv: Mapping[str, str],
        _perms: Optional[dict[str, tuple[int, ...]]] = None,
    ):
        self.name = name
        self.elements = tuple(elements)
        self.element_set = frozenset(self.elements)
        if not self.elements:
            raise SchemaError(f"group {name!r}: element list is empty")
        if len(self.element_set) != len(self.elements):
            raise SchemaError(f"group {name!r}: duplicate element ids")
        if len(self.elements) > ORDER_CAP:
            raise SchemaError(
                f"group {name!r}: order {len(self.elements)} exceeds cap {ORDER_CAP}"
            )
        if identity not in self.element_set:
            raise SchemaError(f"group {name!r}: identity {identity!r} is not an element")
        for x in self.elements:
            if "|" in x:
                raise SchemaError(f"group {name!r}: element id {x!r} contains '|'")
        self.identity = identity
        self.mul = dict(mul)
        self.inv = dict(inv)
        self.perms = _perms
        for a in self.elements:
            if a not in self.inv:
                raise SchemaError(f"group {name!r}: missing inverse entry for {a!r}")
            if self.inv[a] not in self.element_set:
                raise SchemaError(
                    f"group {name!r}: inverse of {a!r} is unknown id {self.inv[a]!r}"
                )
            for b in self.elements:
                if (a, b) not in self.mul:
                    raise SchemaError(f"group {name!r}: missing product entry ({a!r}, {b!r})")
                if self.mul[(a, b)] not in self.element_set:
                    raise SchemaError(
                        f"group {name!r}: product ({a!r}, {b!r}) "
                        f"is unknown id {self.mul[(a, b)]!r}"
                    )
        if len(self.mul) != len(self.elements) ** 2:
            extra = set(self.mul) - {(a, b) for a in self.elements for b in self.elements}
            raise SchemaError(f"group {name!r}: product table has extra keys {sorted(extra)[:3]}")

    def op(self, a: str, b: str) -> str:
        try:
            return self.mul[(a, b)]
        except KeyError:
            raise SchemaError(f"group {self.name!r}: no product for ({a!r}, {b!r})") from None

    def inverse(self, a: str) -> str:
        try:
            return self.inv[a]
        except KeyError:
            raise SchemaError(f"group {self.name!r}: no inverse for {a!r}") from None

    def conj(self, g: str, h: str) -> str:
        """g h g^{-1}"""
        return self.op(self.op(g, h), self.inverse(g))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: str) -> bool:
        return x in self.element_set

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


class GroupHom:
    """A map between finite groups given by a full value table."""

    def __init__(self, name: str, domain: FiniteGroup, codomain: FiniteGroup,
                 table: Mapping[str, str]):
        self.name = name
        self.domain = domain
        self.codomain = codomain
        self.table = dict(table)
        for x in domain.elements:
            if x not in self.table:
                raise SchemaError(f"hom {name!r}: missing value for {x!r}")
            if self.table[x] not in codomain.element_set:
                raise SchemaError(
                    f"hom {name!r}: value {self.table[x]!r} for {x!r} "
                    f"is not in {codomain.name!r}"
                )
        if len(self.table) != domain.order:
            extra = set(self.table) - domain.element_set
            raise SchemaError(f"hom {name!r}: extra keys {sorted(extra)[:3]}")

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise SchemaError(f"hom {self.name!r}: no value for {x!r}") from None

    def image(self) -> frozenset[str]:
        return frozenset(self.table.values())

    def __repr__(self) -> str:
        return f"GroupHom({self.name!r}: {self.domain.name} -> {self.codomain.name})"


class GroupAction:
    """A left action of `actor` on the group `space`, one table row per actor element."""

    def __init__(self, name: str, actor: FiniteGroup, space: FiniteGroup,
                 table: Mapping[tuple[str, str], str]):
        self.name = name
        self.actor = actor
        self.space = space
        self.table = dict(table)
        for g in actor.elements:
            for h in space.elements:
                if (g, h) not in self.table:
                    raise SchemaError(f"action {name!r}: missing value for ({g!r}, {h!r})")
                if self.table[(g, h)] not in space.element_set:
                    raise SchemaError(
                        f"action {name!r}: value for ({g!r}, {h!r}) "
                        f"is unknown id {self.table[(g, h)]!r}"
                    )
        if len(self.table) != actor.order * space.order:
            raise SchemaError(f"action {name!r}: table has extra keys")

    def __call__(self, g: str, h: str) -> str:
        try:
            return self.table[(g, h)]
        except KeyError:
            raise SchemaError(f"action {self.name!r}: no value for ({g!r}, {h!r})") from None

    def __repr__(self) -> str:
        return f"GroupAction({self.name!r}: {self.actor.name} on {self.space.name})"


def validate_group(g: FiniteGroup) -> Report:
    """Check associativity, two-sided identity, and two-sided inverses, exhaustively."""
    rep = Report("group")
    e = g.identity

    witness = None
    for a in g.elements:
        if g.op(e, a) != a or g.op(a, e) != a:
            witness = f"identity fails at {a!r}: e*{a}={g.op(e, a)!r}, {a}*e={g.op(a, e)!r}"
            break
    rep.record(f"group.{g.name}.identity", "e*a = a*e = a", witness is None, witness)

    witness = None
    for a in g.elements:
        b = g.inverse(a)
        if g.op(a, b) != e or g.op(b, a) != e:
            witness = f"no inverse for {a!r}: {a}*{b}={g.op(a, b)!r}"
            break
    rep.record(f"group.{g.name}.inverse", "a*inv(a) = inv(a)*a = e", witness is None, witness)

    witness = None
    for a in g.elements:
        for b in g.elements:
            ab = g.op(a, b)
            for c in g.elements:
                if g.op(ab, c) != g.op(a, g.op(b, c)):
                    witness = f"({a}*{b})*{c} = {g.op(ab, c)!r} != {a}*({b}*{c})"
                    break
            if witness:
                break
        if witness:
            break
    rep.record(f"group.{g.name}.assoc", "(a*b)*c = a*(b*c)", witness is None, witness)
    return rep


def validate_hom(f: GroupHom) -> Report:
    rep = Report("hom")
    witness = None
    for a in f.domain.elements:
        for b in f.domain.elements:
            lhs = f(f.domain.op(a, b))
            rhs = f.codomain.op(f(a), f(b))
            if lhs != rhs:
                witness = f"f({a}*{b})={lhs!r} != f({a})*f({b})={rhs!r}"
                break
        if witness:
            break
    rep.record(f"hom.{f.name}.compose", "f(a*b) = f(a)*f(b)", witness is None, witness)

    ok = f(f.domain.identity) == f.codomain.identity
    rep.record(
        f"hom.{f.name}.identity", "f(e) = e", ok,
        None if ok else f"f(e) = {f(f.domain.identity)!r}",
    )
    return rep


def validate_action(a: GroupAction) -> Report:
    rep = Report("action")
    actor, space = a.actor, a.space

    witness = None
    for h in space.elements:
        if a(actor.identity, h) != h:
            witness = f"e.{h} = {a(actor.identity, h)!r}"
            break
    rep.record(f"action.{a.name}.identity", "e.h = h", witness is None, witness)

    witness = None
    for g1 in actor.elements:
        for g2 in actor.elements:
            g12 = actor.op(g1, g2)
            for h in space.elements:
                if a(g12, h) != a(g1, a(g2, h)):
                    witness = f"(({g1}*{g2}).{h}) != ({g1}.({g2}.{h}))"
                    break
            if witness:
                break
        if witness:
            break
    rep.record(f"action.{a.name}.compose", "(g1*g2).h = g1.(g2.h)", witness is None, witness)

    witness = None
    for g in actor.elements:
        seen = set()
        for h1 in space.elements:
            seen.add(a(g, h1))
            for h2 in space.elements:
                lhs = a(g, space.op(h1, h2))
                rhs = space.op(a(g, h1), a(g, h2))
                if lhs != rhs:
                    witness = f"{g}.({h1}*{h2})={lhs!r} != ({g}.{h1})*({g}.{h2})={rhs!r}"
                    break
            if witness:
                break
        if witness:
            break
        if len(seen) != space.order:
            witness = f"{g}. is not a bijection of {space.name}"
            break
    rep.record(
        f"action.{a.name}.automorphism",
        "h -> g.h is an automorphism of the space", witness is None, witness,
    )
    return rep


def subgroup_as_group(g: FiniteGroup, subset: Iterable[str], name: str) -> FiniteGroup:
    """Extract a subset closed under product and inverse as its own FiniteGroup."""
    sub = sorted(set(subset))
    subset_set = set(sub)
    if g.identity not in subset_set:
        raise SchemaError(f"subgroup {name!r}: identity missing")
    mul = {}
    for a in sub:
        if a not in g.element_set:
            raise SchemaError(f"subgroup {name!r}: {a!r} is not in {g.name!r}")
        if g.inverse(a) not in subset_set:
            raise SchemaError(f"subgroup {name!r}: not closed under inverse at {a!r}")
        for b in sub:
            c = g.op(a, b)
            if c not in subset_set:
                raise SchemaError(f"subgroup {name!r}: not closed at ({a!r}, {b!r})")
            mul[(a, b)] = c
    inv = {a: g.inverse(a) for a in sub}
    perms = None
    if g.perms is not None:
        perms = {a: g.perms[a] for a in sub}
    return FiniteGroup(name, sub, mul, g.identity, inv, _perms=perms)
