"""Walk-level transition data built from a validated cocycle.

For each ordered chart pair the object assignment is u -> g_ik(u) and the
arrow assignment is

    theta_ik(gamma) = (h_ik(gamma_1) h_ik(gamma_0)^{-1}, g_ik(gamma_0))

whose target is g_ik(gamma_1); it depends on a walk only through its
endpoints. For each ordered triple there is a comparison arrow at each vertex

    T_ikm(u) = (h_ikm(u), g_ik(u) g_km(u))        with target g_im(u)

and a walk-level defect

    Theta_ikm(gamma) = (h_ikm(gamma_1) h_ikm(gamma_0)^{-1}, g_ikm(gamma_0)).

The checks below verify functoriality, the naturality square relating T and
theta, and the product relation Theta theta_ik theta_km = theta_im.
"""

from __future__ import annotations

from .complexes import PathMor, enumerate_paths, overlap, walk_inside
from .crossed import Arrow, arrow_compose, arrow_endpoints, arrow_identity, arrow_product
from .errors import CompositionError, DomainError
from .gerbal import DerivedTower, GerbalCocycle, derive_tower, required_pairs, required_triples
from .report import Report


class FunctorialCocycle:
    """A cocycle together with its derived tower, exposing walk-level evaluation."""

    def __init__(self, gc: GerbalCocycle, tower: DerivedTower):
        self.gc = gc
        self.tower = tower
        self.chain = gc.chain
        self.cover = gc.cover

    @classmethod
    def from_cocycle(cls, gc: GerbalCocycle, verify: bool = True) -> "FunctorialCocycle":
        return cls(gc, derive_tower(gc, verify=verify))

    def h(self, i: str, k: str, u: str) -> str:
        return self.gc.h_of(i, k, u)

    def g(self, i: str, k: str, u: str) -> str:
        if u not in overlap(self.cover, (i, k)):
            raise DomainError(f"g_{i}{k} is not defined at vertex {u!r}")
        return self.tower.g[(i, k, u)]

    def h3(self, i: str, k: str, m: str, u: str) -> str:
        if u not in overlap(self.cover, (i, k, m)):
            raise DomainError(f"h_{i}{k}{m} is not defined at vertex {u!r}")
        return self.tower.h3[(i, k, m, u)]

    def g3(self, i: str, k: str, m: str, u: str) -> str:
        return self.chain.tau(self.h3(i, k, m, u))


def _require_inside(fc: FunctorialCocycle, indices: tuple[str, ...], walk: PathMor) -> None:
    region = overlap(fc.cover, indices)
    if not walk_inside(fc.cover, walk, region):
        raise DomainError(
            f"walk through {list(walk.visited)} leaves the overlap of {indices}"
        )


def eval_theta_obj(fc: FunctorialCocycle, i: str, k: str, u: str) -> str:
    return fc.g(i, k, u)


def eval_theta(fc: FunctorialCocycle, i: str, k: str, walk: PathMor) -> Arrow:
    _require_inside(fc, (i, k), walk)
    H = fc.chain.H
    u0, u1 = walk.start, walk.end
    return Arrow(H.op(fc.h(i, k, u1), H.inverse(fc.h(i, k, u0))), fc.g(i, k, u0))


def eval_T(fc: FunctorialCocycle, i: str, k: str, m: str, u: str) -> Arrow:
    if u not in overlap(fc.cover, (i, k, m)):
        raise DomainError(f"T_{i}{k}{m} is not defined at vertex {u!r}")
    return Arrow(fc.h3(i, k, m, u), fc.chain.G.op(fc.g(i, k, u), fc.g(k, m, u)))


def eval_Theta(fc: FunctorialCocycle, i: str, k: str, m: str, walk: PathMor) -> Arrow:
    _require_inside(fc, (i, k, m), walk)
    H = fc.chain.H
    u0, u1 = walk.start, walk.end
    return Arrow(
        H.op(fc.h3(i, k, m, u1), H.inverse(fc.h3(i, k, m, u0))),
        fc.g3(i, k, m, u0),
    )


def check_theta_functorial(fc: FunctorialCocycle, i: str, k: str, max_len: int = 3) -> Report:
    """Identity preservation, composition, target law, and endpoint dependence
    for theta_ik over all walks of bounded length inside the overlap."""
    rep = Report("functorial")
    cm = fc.chain.outer
    walks = enumerate_paths(fc.cover, (i, k), max_len)
    tag = f"{i}{k}"

    witness = None
    for u in sorted(overlap(fc.cover, (i, k))):
        got = eval_theta(fc, i, k, fc.cover.identity_walk(u))
        if got != arrow_identity(cm, fc.g(i, k, u)):
            witness = f"theta_{tag}(id_{u}) = {got}"
            break
    rep.record(f"theta.{tag}.identity", "theta(id_u) = id at g_ik(u)",
               witness is None, witness)

    witness = None
    for w in walks:
        a = eval_theta(fc, i, k, w)
        if arrow_endpoints(cm, a) != (fc.g(i, k, w.start), fc.g(i, k, w.end)):
            witness = f"theta_{tag} endpoints wrong on walk {w.start}:{list(w.steps)}"
            break
    rep.record(f"theta.{tag}.target", "tau(h_ik(gamma)) g_ik(gamma_0) = g_ik(gamma_1)",
               witness is None, witness)

    witness = None
    for w1 in walks:
        for w2 in walks:
            if w1.end != w2.start:
                continue
            comp = PathMor(w1.start, w1.steps + w2.steps, w1.visited + w2.visited[1:])
            lhs = eval_theta(fc, i, k, comp)
            try:
                rhs = arrow_compose(cm, eval_theta(fc, i, k, w2),
                                    eval_theta(fc, i, k, w1))
            except CompositionError as err:
                witness = (
                    f"theta_{tag} images do not compose at "
                    f"{w1.start}:{list(w1.steps)} then {list(w2.steps)}: {err}"
                )
                break
            if lhs != rhs:
                witness = (
                    f"theta_{tag}(gamma2 o gamma1) != theta(gamma2) o theta(gamma1) "
                    f"at {w1.start}:{list(w1.steps)} then {list(w2.steps)}"
                )
                break
        if witness:
            break
    rep.record(f"theta.{tag}.compose", "theta(gamma2 o gamma1) = theta(gamma2) o theta(gamma1)",
               witness is None, witness)

    witness = None
    by_ends: dict[tuple[str, str], Arrow] = {}
    for w in walks:
        a = eval_theta(fc, i, k, w)
        prev = by_ends.setdefault((w.start, w.end), a)
        if prev != a:
            witness = f"theta_{tag} differs on two walks {w.start} -> {w.end}"
            break
    rep.record(f"theta.{tag}.endpoints", "theta(gamma) depends only on (gamma_0, gamma_1)",
               witness is None, witness)
    return rep


def check_naturality(fc: FunctorialCocycle, i: str, k: str, m: str,
                     max_len: int = 3) -> Report:
    """The comparison arrows T_ikm are natural against theta:

        T_ikm(gamma_1) o (theta_ik(gamma) . theta_km(gamma))
            = theta_im(gamma) o T_ikm(gamma_0)
    """
    rep = Report("naturality")
    cm = fc.chain.outer
    tag = f"{i}{k}{m}"

    witness = None
    for u in sorted(overlap(fc.cover, (i, k, m))):
        _, tgt = arrow_endpoints(cm, eval_T(fc, i, k, m, u))
        if tgt != fc.g(i, m, u):
            witness = f"t(T_{tag}({u})) = {tgt!r} != g_im({u}) = {fc.g(i, m, u)!r}"
            break
    rep.record(f"naturality.{tag}.T_target", "t(T_ikm(u)) = g_im(u)",
               witness is None, witness)

    witness = None
    for w in enumerate_paths(fc.cover, (i, k, m), max_len):
        try:
            lhs = arrow_compose(
                cm, eval_T(fc, i, k, m, w.end),
                arrow_product(cm, eval_theta(fc, i, k, w), eval_theta(fc, k, m, w)),
            )
            rhs = arrow_compose(cm, eval_theta(fc, i, m, w), eval_T(fc, i, k, m, w.start))
        except CompositionError as err:
            witness = f"square at walk {w.start}:{list(w.steps)} does not compose: {err}"
            break
        if lhs != rhs:
            witness = f"square fails at walk {w.start}:{list(w.steps)}: {lhs} != {rhs}"
            break
    rep.record(
        f"naturality.{tag}.square",
        "T(gamma_1) o (theta_ik(gamma) . theta_km(gamma)) = theta_im(gamma) o T(gamma_0)",
        witness is None, witness,
    )
    return rep


def check_product_relation(fc: FunctorialCocycle, i: str, k: str, m: str,
                           max_len: int = 3) -> Report:
    """Theta_ikm(gamma) . theta_ik(gamma) . theta_km(gamma) = theta_im(gamma)."""
    rep = Report("product")
    cm = fc.chain.outer
    tag = f"{i}{k}{m}"
    witness = None
    for w in enumerate_paths(fc.cover, (i, k, m), max_len):
        lhs = arrow_product(
            cm, arrow_product(cm, eval_Theta(fc, i, k, m, w), eval_theta(fc, i, k, w)),
            eval_theta(fc, k, m, w),
        )
        rhs = eval_theta(fc, i, m, w)
        if lhs != rhs:
            witness = f"fails at walk {w.start}:{list(w.steps)}: {lhs} != {rhs}"
            break
    rep.record(
        f"product.{tag}.relation",
        "Theta_ikm(gamma) . theta_ik(gamma) . theta_km(gamma) = theta_im(gamma)",
        witness is None, witness,
    )
    return rep


def all_pairs(fc: FunctorialCocycle) -> list[tuple[str, str]]:
    return required_pairs(fc.cover)


def all_triples(fc: FunctorialCocycle) -> list[tuple[str, str, str]]:
    return required_triples(fc.cover)
