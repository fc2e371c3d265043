"""Independent permutation arithmetic used to freeze expected values.

Everything here is computed from scratch on 0-based tuples: apply(p, x) is
function application, products count inversions for parity, and names are
rebuilt by walking orbits. Nothing imports the package under test, so an
agreement failure points at the package, not at a shared helper.
"""

from itertools import permutations as _perms


def apply(p, x):
    return p[x]


def mul(p, q):
    # (p q)(x) = p(q(x)), acting on the right argument first
    return tuple(apply(p, apply(q, x)) for x in range(len(p)))


def inv(p):
    out = [None] * len(p)
    for x in range(len(p)):
        out[apply(p, x)] = x
    return tuple(out)


def sign(p):
    inversions = 0
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                inversions += 1
    return 1 if inversions % 2 == 0 else -1


def name_of(p):
    pending = set(range(len(p)))
    parts = []
    while pending:
        start = min(pending)
        orbit = [start]
        pending.discard(start)
        nxt = apply(p, start)
        while nxt != start:
            orbit.append(nxt)
            pending.discard(nxt)
            nxt = apply(p, nxt)
        if len(orbit) > 1:
            parts.append("(" + "".join(str(x + 1) for x in orbit) + ")")
    return "".join(parts) if parts else "e"


def identity(n):
    return tuple(range(n))


def sym(n):
    return sorted(_perms(range(n)))


def alt(n):
    return [p for p in sym(n) if sign(p) == 1]


def klein():
    n4 = identity(4)
    a = (1, 0, 3, 2)  # (12)(34)
    b = (2, 3, 0, 1)  # (13)(24)
    return sorted([n4, a, b, mul(a, b)])


def close_under_mul(gens, n):
    """Smallest subgroup of S_n containing gens, by orbit closure."""
    elems = {identity(n)}
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        if g in elems:
            continue
        elems.add(g)
        for h in list(elems):
            for prod in (mul(g, h), mul(h, g)):
                if prod not in elems:
                    frontier.append(prod)
    return sorted(elems)


def left_cosets(big, sub):
    """Left cosets g*sub inside big, each as a frozenset of tuples."""
    sub = list(sub)
    found = set()
    for g in big:
        found.add(frozenset(mul(g, s) for s in sub))
    return found


def name_table(group):
    return {name_of(p): p for p in group}
