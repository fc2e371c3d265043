"""The quotient 2-group of a chained pair, and the classical cocycle it carries.

From a chain (G, H, alpha, tau) over (H, J, alpha', tau') form the normal
pair: tau tau'(J) inside the object group and

    J_H = { (tau'(j), tau tau'(j')) : j, j' in J }  =  tau'(J) x tau tau'(J)

inside the arrow group. Objects are left cosets g tau tau'(J), morphisms are
left cosets (h, g) J_H; source, target, composition, and (when the subgroups
are normal) the group laws all descend, and every descent is verified
exhaustively rather than assumed. The variant "full" quotients H x| G; the
variant "tau" quotients H x| tau(H), which is a categorical group even when
tau is not surjective.
"""

from __future__ import annotations

from .complexes import enumerate_paths, overlap
from .crossed import (
    Arrow,
    ChainedCrossedModules,
    SemidirectProduct,
    arrow_co_inverse,
    pair_id,
)
from .errors import CompositionError, InternalInvariantError, PreconditionError, SchemaError
from .functorial import FunctorialCocycle, eval_Theta, eval_theta
from .gerbal import required_pairs, required_triples
from .groups import FiniteGroup, subgroup_as_group
from .report import Report


class CosetSpace:
    """Left cosets of a subgroup, with the smallest member id as canonical rep."""

    def __init__(self, parent: FiniteGroup, subgroup: frozenset[str]):
        for s in subgroup:
            if s not in parent.element_set:
                raise SchemaError(f"coset space: {s!r} is not in {parent.name!r}")
        if parent.identity not in subgroup:
            raise SchemaError("coset space: subgroup misses the identity")
        for a in subgroup:
            if parent.inverse(a) not in subgroup:
                raise SchemaError(f"coset space: subgroup not closed under inverse at {a!r}")
            for b in subgroup:
                if parent.op(a, b) not in subgroup:
                    raise SchemaError(f"coset space: subgroup not closed at ({a!r}, {b!r})")
        self.parent = parent
        self.subgroup = frozenset(subgroup)
        self.coset_of: dict[str, str] = {}
        members: dict[str, tuple[str, ...]] = {}
        for x in sorted(parent.elements):
            if x in self.coset_of:
                continue
            coset = sorted(parent.op(x, s) for s in subgroup)
            rep = coset[0]
            for y in coset:
                self.coset_of[y] = rep
            members[rep] = tuple(coset)
        self.members_of = members
        self.reps = tuple(sorted(members))

    def rep(self, x: str) -> str:
        try:
            return self.coset_of[x]
        except KeyError:
            raise SchemaError(f"coset space: {x!r} is not in {self.parent.name!r}") from None

    @property
    def size(self) -> int:
        return len(self.reps)


def build_JH(chain: ChainedCrossedModules) -> frozenset[str]:
    """J_H = tau'(J) x tau tau'(J) as pair ids inside H x| G."""
    return frozenset(
        pair_id(a, b) for a in chain.tau_p_image for b in chain.tau_tau_p_image
    )


def check_JH_normal(chain: ChainedCrossedModules) -> Report:
    """(a) (j, h) -> (tau'(j), tau(h)) is a homomorphism J x| H -> H x| G,
    checked on every pair; (b) J_H is a subgroup normalized by every element
    of H x| tau(H). A third check conjugates by all of H x| G, which also
    holds whenever tau tau'(J) is normal in G."""
    rep = Report("jh")
    outer_sd = SemidirectProduct(chain.outer)
    inner_sd = SemidirectProduct(chain.inner)
    parent = outer_sd.group

    def taubar(x: str) -> str:
        j, h = inner_sd.id_to_pair[x]
        return pair_id(chain.tau_p(j), chain.tau(h))

    witness = None
    for x in inner_sd.group.elements:
        for y in inner_sd.group.elements:
            lhs = taubar(inner_sd.group.op(x, y))
            rhs = parent.op(taubar(x), taubar(y))
            if lhs != rhs:
                witness = f"taubar({x} * {y}) = {lhs!r} != {rhs!r}"
                break
        if witness:
            break
    rep.record("jh.taubar", "(j,h) -> (tau'(j), tau(h)) is a homomorphism",
               witness is None, witness)

    jh = build_JH(chain)
    witness = None
    if parent.identity not in jh:
        witness = "identity missing"
    else:
        for a in sorted(jh):
            if witness:
                break
            if parent.inverse(a) not in jh:
                witness = f"inverse of {a!r} leaves J_H"
                break
            for b in sorted(jh):
                if parent.op(a, b) not in jh:
                    witness = f"product {a!r} {b!r} leaves J_H"
                    break
    rep.record("jh.subgroup", "J_H is a subgroup of H x| G", witness is None, witness)

    tau_image = frozenset(chain.tau(h) for h in chain.H.elements)
    conjugators = [x for x in parent.elements if outer_sd.id_to_pair[x][1] in tau_image]
    witness = None
    for w in conjugators:
        for v in sorted(jh):
            c = parent.conj(w, v)
            if c not in jh:
                witness = f"{w} {v} {w}^-1 = {c!r} leaves J_H"
                break
        if witness:
            break
    rep.record("jh.normal", "J_H is normal in H x| tau(H)", witness is None, witness)

    witness = None
    for w in parent.elements:
        for v in sorted(jh):
            c = parent.conj(w, v)
            if c not in jh:
                witness = f"{w} {v} {w}^-1 = {c!r} leaves J_H"
                break
        if witness:
            break
    rep.record("jh.normal_full", "J_H is normal in all of H x| G", witness is None, witness)
    return rep


def tau_surjective(chain: ChainedCrossedModules) -> bool:
    return frozenset(chain.tau(h) for h in chain.H.elements) == chain.G.element_set


def variant_for(chain: ChainedCrossedModules) -> str:
    return "full" if tau_surjective(chain) else "tau"


class QuotientCatGroup:
    """Coset objects and coset morphisms with verified categorical structure."""

    def __init__(self, chain: ChainedCrossedModules, variant: str = "full"):
        if variant not in ("full", "tau"):
            raise SchemaError(f"unknown quotient variant {variant!r}")
        self.chain = chain
        self.variant = variant
        tau_image = frozenset(chain.tau(h) for h in chain.H.elements)
        if variant == "full":
            self.obj_parent = chain.G
            self.sd = SemidirectProduct(chain.outer)
        else:
            self.obj_parent = subgroup_as_group(
                chain.G, tau_image, f"tau({chain.H.name})"
            )
            self.sd = SemidirectProduct(chain.outer, g_subset=tau_image)
        self.mor_parent = self.sd.group
        self.objects = CosetSpace(self.obj_parent, frozenset(chain.tau_tau_p_image))
        self.morphisms = CosetSpace(self.mor_parent, build_JH(chain))

        self.obj_normal = self._subgroup_normal(self.obj_parent, self.objects.subgroup)
        self.mor_normal = self._subgroup_normal(self.mor_parent, self.morphisms.subgroup)

        # source and target per morphism coset, plus the composition table;
        # filled by _verify, which also confirms they are well defined
        self.source: dict[str, str] = {}
        self.target: dict[str, str] = {}
        self._compose: dict[tuple[str, str], str] = {}
        self._by_source: dict[str, list[str]] = {}
        self.verification = self._verify()
        if not self.verification.ok:
            raise InternalInvariantError(
                f"quotient structure does not descend: {self.verification.first_witness()}"
            )

    @staticmethod
    def _subgroup_normal(parent: FiniteGroup, sub: frozenset[str]) -> bool:
        return all(parent.conj(g, s) in sub for g in parent.elements for s in sub)

    def _member_source(self, x: str) -> str:
        return self.objects.rep(self.sd.source(x))

    def _member_target(self, x: str) -> str:
        return self.objects.rep(self.sd.target(x))

    def _verify(self) -> Report:
        rep = Report("quotient")
        par = self.mor_parent

        witness = None
        for mrep in self.morphisms.reps:
            ss = {self._member_source(x) for x in self.morphisms.members_of[mrep]}
            ts = {self._member_target(x) for x in self.morphisms.members_of[mrep]}
            if len(ss) != 1 or len(ts) != 1:
                witness = f"coset {mrep!r} has sources {sorted(ss)} targets {sorted(ts)}"
                break
            self.source[mrep] = next(iter(ss))
            self.target[mrep] = next(iter(ts))
        rep.record("quotient.descent.endpoints",
                   "source and target are constant on each coset",
                   witness is None, witness)
        if witness:
            return rep

        for mrep in self.morphisms.reps:
            self._by_source.setdefault(self.source[mrep], []).append(mrep)

        witness = None
        for x2 in par.elements:
            sx2 = self.sd.source(x2)
            for x1 in par.elements:
                if self.sd.target(x1) != sx2:
                    continue
                h2, _ = self.sd.id_to_pair[x2]
                h1, g1 = self.sd.id_to_pair[x1]
                comp = pair_id(self.chain.H.op(h2, h1), g1)
                key = (self.morphisms.rep(x2), self.morphisms.rep(x1))
                got = self.morphisms.rep(comp)
                if self._compose.setdefault(key, got) != got:
                    witness = (
                        f"composition is not constant on cosets at "
                        f"({key[0]!r}, {key[1]!r})"
                    )
                    break
            if witness:
                break
        rep.record("quotient.descent.compose",
                   "(f2 f2') o (f1 f1') = (f2 o f1)(f2' o f1') modulo J_H",
                   witness is None, witness)

        expected = sum(
            1 for m2 in self.morphisms.reps for m1 in self.morphisms.reps
            if self.source[m2] == self.target[m1]
        )
        rep.record("quotient.descent.compose_total",
                   "every composable coset pair is realized by members",
                   len(self._compose) == expected,
                   f"{len(self._compose)} composable pairs, expected {expected}")

        witness = None
        for mrep in self.morphisms.reps:
            outs = {
                self.morphisms.rep(self.sd.to_id(arrow_co_inverse(
                    self.chain.outer, self.sd.to_arrow(x))))
                for x in self.morphisms.members_of[mrep]
            }
            if len(outs) != 1:
                witness = f"composition inverse not constant on coset {mrep!r}"
                break
        rep.record("quotient.descent.co_inverse",
                   "(h,g) -> (h^-1, tau(h) g) descends to cosets",
                   witness is None, witness)

        witness = None
        for g in self.obj_parent.elements:
            x = pair_id(self.chain.H.identity, g)
            if self.morphisms.rep(x) != self.identity_mor_at(self.objects.rep(g)):
                witness = f"identity coset at {g!r} is not induced by (e, {g})"
                break
        rep.record("quotient.q.identity",
                   "the identity morphism of a coset is the class of (e, g)",
                   witness is None, witness)

        rep.record("quotient.obj_normal",
                   "tau tau'(J) is normal in the object group",
                   self.obj_normal, "conjugation leaves the subgroup")
        rep.record("quotient.mor_normal",
                   "J_H is normal in the morphism group",
                   self.mor_normal, "conjugation leaves the subgroup")

        if self.mor_normal and self.obj_normal:
            witness = None
            for a in self.morphisms.reps:
                for b in self.morphisms.reps:
                    ab = self.mor_product(a, b)
                    if self.source[ab] != self.obj_product(self.source[a], self.source[b]):
                        witness = f"s({a!r} {b!r}) != s({a!r}) s({b!r})"
                        break
                    if self.target[ab] != self.obj_product(self.target[a], self.target[b]):
                        witness = f"t({a!r} {b!r}) != t({a!r}) t({b!r})"
                        break
                if witness:
                    break
            rep.record("quotient.st_hom",
                       "source and target are group homomorphisms on cosets",
                       witness is None, witness)

            witness = None
            for a2 in self.morphisms.reps:
                for a1 in self.morphisms.reps:
                    if self.source[a2] != self.target[a1]:
                        continue
                    for b2 in self.morphisms.reps:
                        for b1 in self.morphisms.reps:
                            if self.source[b2] != self.target[b1]:
                                continue
                            lhs = self.mor_product(
                                self.compose_of(a2, a1), self.compose_of(b2, b1))
                            rhs = self.compose_of(
                                self.mor_product(a2, b2), self.mor_product(a1, b1))
                            if lhs != rhs:
                                witness = (
                                    f"interchange fails at ({a2!r},{a1!r},{b2!r},{b1!r})"
                                )
                                break
                        if witness:
                            break
                    if witness:
                        break
                if witness:
                    break
            rep.record("quotient.interchange",
                       "(a2 o a1)(b2 o b1) = (a2 b2) o (a1 b1) on cosets",
                       witness is None, witness)
        return rep

    # ----- coset-level operations ------------------------------------------

    def obj_product(self, a: str, b: str) -> str:
        if not self.obj_normal:
            raise PreconditionError("object cosets do not form a group here")
        return self.objects.rep(self.obj_parent.op(a, b))

    def obj_inverse(self, a: str) -> str:
        if not self.obj_normal:
            raise PreconditionError("object cosets do not form a group here")
        return self.objects.rep(self.obj_parent.inverse(a))

    def mor_product(self, a: str, b: str) -> str:
        if not self.mor_normal:
            raise PreconditionError("morphism cosets do not form a group here")
        return self.morphisms.rep(self.mor_parent.op(a, b))

    def mor_inverse(self, a: str) -> str:
        if not self.mor_normal:
            raise PreconditionError("morphism cosets do not form a group here")
        return self.morphisms.rep(self.mor_parent.inverse(a))

    def mor_co_inverse(self, a: str) -> str:
        return self.morphisms.rep(
            self.sd.to_id(arrow_co_inverse(self.chain.outer, self.sd.to_arrow(a)))
        )

    def compose_of(self, later: str, earlier: str) -> str:
        """later o earlier on coset reps."""
        try:
            return self._compose[(later, earlier)]
        except KeyError:
            raise CompositionError(
                f"cosets do not compose: target {self.target.get(earlier)!r} "
                f"!= source {self.source.get(later)!r}"
            ) from None

    def identity_mor_at(self, orep: str) -> str:
        return self.morphisms.rep(pair_id(self.chain.H.identity, orep))

    def identity_obj(self) -> str:
        return self.objects.rep(self.obj_parent.identity)

    def mors_with_source(self, orep: str) -> list[str]:
        return self._by_source.get(orep, [])

    def q_obj(self, g: str) -> str:
        return self.objects.rep(g)

    def q_mor(self, a: Arrow) -> str:
        return self.morphisms.rep(self.sd.to_id(a))

    def __repr__(self) -> str:
        return (
            f"QuotientCatGroup({self.variant}, objects={self.objects.size}, "
            f"morphisms={self.morphisms.size})"
        )


def build_quotient(chain: ChainedCrossedModules, variant: str = "full") -> QuotientCatGroup:
    return QuotientCatGroup(chain, variant)


def check_classical_cocycle(fc: FunctorialCocycle, q: QuotientCatGroup,
                            max_len: int = 3) -> Report:
    """The pushed-down data is a strict cocycle on coset classes:

        gbar_ik(u) gbar_km(u) = gbar_im(u)          on object cosets
        thetabar_ik(gamma) thetabar_km(gamma) = thetabar_im(gamma)
                                                    on morphism cosets

    plus the normalizations gbar_ii = identity coset, gbar_ik gbar_ki =
    identity coset, and the defect Theta landing inside J_H.
    """
    rep = Report("classical")
    cover = fc.cover
    obj = q.objects
    mor = q.morphisms
    G = q.obj_parent

    witness = None
    for i, k, m in required_triples(cover):
        for u in sorted(overlap(cover, (i, k, m))):
            lhs = obj.rep(G.op(fc.g(i, k, u), fc.g(k, m, u)))
            rhs = obj.rep(fc.g(i, m, u))
            if lhs != rhs:
                witness = f"gbar cocycle fails at ({i},{k},{m},{u})"
                break
        if witness:
            break
    rep.record("classical.object", "gbar_ik(u) gbar_km(u) = gbar_im(u)",
               witness is None, witness)

    witness = None
    for i, k in required_pairs(cover):
        for u in sorted(overlap(cover, (i, k))):
            if i == k and obj.rep(fc.g(i, i, u)) != q.identity_obj():
                witness = f"gbar_{i}{i}({u}) is not the identity coset"
                break
            both = obj.rep(G.op(fc.g(i, k, u), fc.g(k, i, u)))
            if both != q.identity_obj():
                witness = f"gbar_{i}{k}({u}) gbar_{k}{i}({u}) is not the identity coset"
                break
        if witness:
            break
    rep.record("classical.diagonal",
               "gbar_ii(u) = identity coset and gbar_ik(u) gbar_ki(u) = identity coset",
               witness is None, witness)

    witness = None
    for i, k, m in required_triples(cover):
        for w in enumerate_paths(cover, (i, k, m), max_len):
            lhs = mor.rep(q.mor_parent.op(
                q.sd.to_id(eval_theta(fc, i, k, w)),
                q.sd.to_id(eval_theta(fc, k, m, w)),
            ))
            rhs = mor.rep(q.sd.to_id(eval_theta(fc, i, m, w)))
            if lhs != rhs:
                witness = (
                    f"thetabar cocycle fails at ({i},{k},{m}) "
                    f"walk {w.start}:{list(w.steps)}"
                )
                break
        if witness:
            break
    rep.record("classical.morphism",
               "thetabar_ik(gamma) thetabar_km(gamma) = thetabar_im(gamma)",
               witness is None, witness)

    witness = None
    for i, k, m in required_triples(cover):
        for w in enumerate_paths(cover, (i, k, m), max_len):
            big_theta = eval_Theta(fc, i, k, m, w)
            if pair_id(big_theta.h, big_theta.g) not in mor.subgroup:
                witness = (
                    f"Theta_{i}{k}{m} at walk {w.start}:{list(w.steps)} "
                    f"= ({big_theta.h},{big_theta.g}) is outside J_H"
                )
                break
        if witness:
            break
    rep.record("classical.defect", "Theta_ikm(gamma) lies in J_H",
               witness is None, witness)
    return rep
