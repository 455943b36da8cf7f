"""Independent brute-force oracles used to freeze expected test values.

Everything here works on raw 0-based image tuples and deliberately avoids the
stabilizer-chain engine: closures are plain breadth-first set saturation, the
subgroup lattice is a join closure of cyclic subgroups, and so on.  Slow but
obviously correct, usable up to a few thousand elements.
"""

from itertools import product


def mul(p, q):
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def closure(gens, degree):
    """All products of the generators, as a frozenset of image tuples."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def generates(gens, degree, target_order):
    return len(closure(gens, degree)) == target_order


def cyclic_subgroups(elements, degree):
    """Subgroups generated by single elements, as frozensets."""
    out = set()
    for e in elements:
        out.add(closure([e], degree))
    return out


def all_subgroups(elements, degree):
    """Every subgroup, via join closure of the cyclic subgroups."""
    cyclics = cyclic_subgroups(elements, degree)
    known = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                j = closure(list(h | c), degree)
                if j not in known:
                    known.add(j)
                    nxt.append(j)
        frontier = nxt
    return known


def maximal_subgroups(elements, degree):
    subs = all_subgroups(elements, degree)
    full = frozenset(elements)
    proper = [s for s in subs if s != full]
    out = []
    for s in proper:
        if not any(s < t for t in proper):
            out.append(s)
    return out


def commutator_closure(elements, degree):
    """Derived subgroup of the given element set (must be a group)."""
    comms = [mul(mul(inv(a), inv(b)), mul(a, b)) for a in elements for b in elements]
    return closure(comms, degree)


def non_generators(elements, degree):
    """Elements g such that no proper subgroup H has <H, g> = everything."""
    subs = all_subgroups(elements, degree)
    full = frozenset(elements)
    proper = [s for s in subs if s != full]
    return [g for g in sorted(elements)
            if all(closure(list(h) + [g], degree) != full for h in proper)]


def min_generating_size(elements, degree):
    """Exhaustive d(G) over tuples, no pruning.  Tiny groups only."""
    n = len(elements)
    elems = sorted(elements)
    if n == 1:
        return 0
    for k in range(1, 6):
        for tup in product(elems, repeat=k):
            if len(closure(list(tup), degree)) == n:
                return k
    raise AssertionError("no generating tuple of size <= 5")


def mgse_by_definition(elements, degree, d):
    """Direct quantifier check of the exchange property for tiny groups."""
    elems = sorted(elements)
    n = len(elements)
    gen_cache = {}

    def gen(tup):
        key = tuple(sorted(set(tup)))
        if key not in gen_cache:
            gen_cache[key] = len(closure(list(key), degree)) == n
        return gen_cache[key]

    gen_tuples = [t for t in product(elems, repeat=d) if gen(t)]
    for x in gen_tuples:
        for i in range(d):
            rest = x[:i] + x[i + 1:]
            for y in gen_tuples:
                if not any(gen(rest + (yj,)) for yj in y):
                    return False, (x, i, y)
    return True, None
