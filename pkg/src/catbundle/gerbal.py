"""Local cocycle data over a covered base, its validation, and its generation.

The data consists of two dense tables over the cover: h maps (i, k, u) with u
in the pairwise overlap to the middle group H, and j maps (i, k, m, u) with u
in the triple overlap to the top group J. The governing law at every ordered
triple and every vertex of its overlap is

    h_im(u) = tau'(j_ikm(u)) h_ik(u) h_km(u)

with the diagonal normalized to h_ii(u) = e. Table gaps or unknown ids are
schema errors; law violations are reported with witnesses.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from .complexes import CoverComplex, overlap
from .crossed import ChainedCrossedModules
from .errors import DomainError, InternalInvariantError, SchemaError
from .prng import SplitMix64
from .report import Report


def required_pairs(cover: CoverComplex) -> list[tuple[str, str]]:
    """Ordered index pairs, diagonal included, with nonempty overlap."""
    out = []
    for i in cover.index_order:
        for k in cover.index_order:
            if overlap(cover, (i, k)):
                out.append((i, k))
    return out


def required_triples(cover: CoverComplex) -> list[tuple[str, str, str]]:
    out = []
    for i, k, m in product(cover.index_order, repeat=3):
        if overlap(cover, (i, k, m)):
            out.append((i, k, m))
    return out


def required_quadruples(cover: CoverComplex) -> list[tuple[str, str, str, str]]:
    out = []
    for q in product(cover.index_order, repeat=4):
        if overlap(cover, q):
            out.append(q)
    return out


class GerbalCocycle:
    """Dense (h, j) tables for a chain of crossed modules over a covered base."""

    def __init__(self, chain: ChainedCrossedModules, cover: CoverComplex,
                 h: dict[tuple[str, str, str], str],
                 j: dict[tuple[str, str, str, str], str]):
        self.chain = chain
        self.cover = cover
        self.h = dict(h)
        self.j = dict(j)

    def h_of(self, i: str, k: str, u: str) -> str:
        if u not in overlap(self.cover, (i, k)):
            raise DomainError(f"h_{i}{k} is not defined at vertex {u!r}")
        try:
            return self.h[(i, k, u)]
        except KeyError:
            raise SchemaError(f"missing h entry for ({i}, {k}, {u})") from None

    def j_of(self, i: str, k: str, m: str, u: str) -> str:
        if u not in overlap(self.cover, (i, k, m)):
            raise DomainError(f"j_{i}{k}{m} is not defined at vertex {u!r}")
        try:
            return self.j[(i, k, m, u)]
        except KeyError:
            raise SchemaError(f"missing j entry for ({i}, {k}, {m}, {u})") from None


def _check_domains(gc: GerbalCocycle) -> None:
    """Dense tables exactly: a missing or extra entry is a schema error."""
    H, J = gc.chain.H, gc.chain.J
    need_h = set()
    for i, k in required_pairs(gc.cover):
        for u in overlap(gc.cover, (i, k)):
            need_h.add((i, k, u))
    if set(gc.h) != need_h:
        missing = sorted(need_h - set(gc.h))
        extra = sorted(set(gc.h) - need_h)
        if missing:
            raise SchemaError(f"h table is missing entries, first: {missing[0]}")
        raise SchemaError(f"h table has entries outside overlaps, first: {extra[0]}")
    need_j = set()
    for i, k, m in required_triples(gc.cover):
        for u in overlap(gc.cover, (i, k, m)):
            need_j.add((i, k, m, u))
    if set(gc.j) != need_j:
        missing = sorted(need_j - set(gc.j))
        extra = sorted(set(gc.j) - need_j)
        if missing:
            raise SchemaError(f"j table is missing entries, first: {missing[0]}")
        raise SchemaError(f"j table has entries outside overlaps, first: {extra[0]}")
    for key, val in gc.h.items():
        if val not in H.element_set:
            raise SchemaError(f"h{key} = {val!r} is not in {H.name!r}")
    for key, val in gc.j.items():
        if val not in J.element_set:
            raise SchemaError(f"j{key} = {val!r} is not in {J.name!r}")


def validate_gerbal(gc: GerbalCocycle) -> Report:
    """Diagonal normalization and the defining relation at every ordered triple."""
    _check_domains(gc)
    chain = gc.chain
    H = chain.H
    rep = Report("gerbal")

    witness = None
    for i in gc.cover.index_order:
        for u in sorted(gc.cover.chart(i)):
            if gc.h[(i, i, u)] != H.identity:
                witness = f"h_{i}{i}({u}) = {gc.h[(i, i, u)]!r} != e"
                break
        if witness:
            break
    rep.record("gerbal.diagonal", "h_ii(u) = e", witness is None, witness)

    witness = None
    for i, k, m in required_triples(gc.cover):
        for u in sorted(overlap(gc.cover, (i, k, m))):
            lhs = gc.h[(i, m, u)]
            rhs = H.op(
                chain.tau_p(gc.j[(i, k, m, u)]),
                H.op(gc.h[(i, k, u)], gc.h[(k, m, u)]),
            )
            if lhs != rhs:
                witness = (
                    f"at (i,k,m,u)=({i},{k},{m},{u}): "
                    f"h_im = {lhs!r} but tau'(j) h_ik h_km = {rhs!r}"
                )
                break
        if witness:
            break
    rep.record(
        "gerbal.relation", "h_im(u) = tau'(j_ikm(u)) h_ik(u) h_km(u)",
        witness is None, witness,
    )
    return rep


class DerivedTower:
    """The pushed-down tables g_ik = tau(h_ik) and h_ikm = tau'(j_ikm)."""

    def __init__(self, g: dict[tuple[str, str, str], str],
                 h3: dict[tuple[str, str, str, str], str]):
        self.g = g
        self.h3 = h3

    def g_of(self, i: str, k: str, u: str) -> str:
        try:
            return self.g[(i, k, u)]
        except KeyError:
            raise DomainError(f"g_{i}{k} is not defined at vertex {u!r}") from None

    def h3_of(self, i: str, k: str, m: str, u: str) -> str:
        try:
            return self.h3[(i, k, m, u)]
        except KeyError:
            raise DomainError(f"h_{i}{k}{m} is not defined at vertex {u!r}") from None


def derive_tower(gc: GerbalCocycle, verify: bool = True) -> DerivedTower:
    """Push h and j down one level; with verify=True both induced relations
    are re-checked rather than assumed, raising on violation."""
    chain = gc.chain
    g = {(i, k, u): chain.tau(v) for (i, k, u), v in gc.h.items()}
    h3 = {key: chain.tau_p(v) for key, v in gc.j.items()}
    tower = DerivedTower(g, h3)
    if verify:
        H, G = chain.H, chain.G
        for (i, k, m), us in _triples_with_vertices(gc):
            for u in us:
                if gc.h[(i, m, u)] != H.op(h3[(i, k, m, u)],
                                           H.op(gc.h[(i, k, u)], gc.h[(k, m, u)])):
                    raise InternalInvariantError(
                        f"tower relation h_im = h_ikm h_ik h_km fails at ({i},{k},{m},{u})"
                    )
                if g[(i, m, u)] != G.op(chain.tau(h3[(i, k, m, u)]),
                                        G.op(g[(i, k, u)], g[(k, m, u)])):
                    raise InternalInvariantError(
                        f"tower relation g_im = tau(h_ikm) g_ik g_km fails at ({i},{k},{m},{u})"
                    )
    return tower


def _triples_with_vertices(gc: GerbalCocycle):
    for i, k, m in required_triples(gc.cover):
        yield (i, k, m), sorted(overlap(gc.cover, (i, k, m)))


def check_second_gerbe(gc: GerbalCocycle, tower: Optional[DerivedTower] = None) -> Report:
    """The compatibility of the derived triple table with itself:

        h_ijm(u) alpha_{g_ij(u)}(h_jkm(u)) = h_ikm(u) h_ijk(u)

    at every ordered quadruple with nonempty overlap.
    """
    chain = gc.chain
    H = chain.H
    if tower is None:
        tower = derive_tower(gc, verify=False)
    rep = Report("gerbal")
    witness = None
    for i, j, k, m in required_quadruples(gc.cover):
        for u in sorted(overlap(gc.cover, (i, j, k, m))):
            lhs = H.op(
                tower.h3[(i, j, m, u)],
                chain.alpha(tower.g[(i, j, u)], tower.h3[(j, k, m, u)]),
            )
            rhs = H.op(tower.h3[(i, k, m, u)], tower.h3[(i, j, k, u)])
            if lhs != rhs:
                witness = (
                    f"at (i,j,k,m,u)=({i},{j},{k},{m},{u}): "
                    f"h_ijm a_(g_ij)(h_jkm) = {lhs!r} != h_ikm h_ijk = {rhs!r}"
                )
                break
        if witness:
            break
    rep.record(
        "gerbal.second",
        "h_ijm(u) alpha_g_ij(u)(h_jkm(u)) = h_ikm(u) h_ijk(u)",
        witness is None, witness,
    )
    return rep


def generate_gerbal(chain: ChainedCrossedModules, cover: CoverComplex, seed: int,
                    noise: bool = True, trivial: bool = False) -> GerbalCocycle:
    """Draw a valid cocycle deterministically from a single seed.

    Construction: draw a local potential f_i per chart vertex, set
    h_ik = tau'(a_ik) f_i f_k^{-1} with a_ik fresh noise from J (identity when
    noise is off or i = k), then solve tau'(j_ikm) = h_im (h_ik h_km)^{-1}
    for the smallest preimage. The discrepancy always lands in tau'(J)
    because tau'(J) is normal in H; anything else aborts loudly.
    """
    H, J = chain.H, chain.J
    rng = SplitMix64(seed)
    preimage: dict[str, list[str]] = {}
    for j in sorted(J.elements):
        preimage.setdefault(chain.tau_p(j), []).append(j)

    if trivial:
        f = {(i, u): H.identity for i in cover.index_order for u in sorted(cover.chart(i))}
    else:
        f = {}
        for i in cover.index_order:
            for u in sorted(cover.chart(i)):
                f[(i, u)] = H.elements[rng.below(len(H.elements))]

    h: dict[tuple[str, str, str], str] = {}
    for i, k in required_pairs(cover):
        for u in sorted(overlap(cover, (i, k))):
            if i == k:
                h[(i, k, u)] = H.identity
                continue
            a = H.identity
            if noise and not trivial:
                a = chain.tau_p(J.elements[rng.below(len(J.elements))])
            h[(i, k, u)] = H.op(a, H.op(f[(i, u)], H.inverse(f[(k, u)])))

    j: dict[tuple[str, str, str, str], str] = {}
    for i, k, m in required_triples(cover):
        for u in sorted(overlap(cover, (i, k, m))):
            d = H.op(h[(i, m, u)], H.inverse(H.op(h[(i, k, u)], h[(k, m, u)])))
            cands = preimage.get(d)
            if not cands:
                raise InternalInvariantError(
                    f"discrepancy {d!r} at ({i},{k},{m},{u}) has no tau' preimage"
                )
            j[(i, k, m, u)] = cands[0]
    return GerbalCocycle(chain, cover, h, j)
