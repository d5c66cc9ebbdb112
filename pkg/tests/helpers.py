"""Independent oracles used to freeze expected values.

These deliberately avoid the library's closure and series code: closures are
done by repeated pairwise multiplication over whole member sets, orders by
repeated multiplication, so they stay independent of the paths they check.
"""

from coprimelab.groups import FiniteGroup, compose, generate_group, invert_perm


def brute_closure(perms):
    """Close a set of permutations under composition by pairwise products."""
    elems = set(perms)
    if perms:
        elems.add(tuple(range(len(perms[0]))))
    while True:
        new = set()
        for a in elems:
            for b in elems:
                c = compose(a, b)
                if c not in elems:
                    new.add(c)
        if not new:
            return elems
        elems |= new


def brute_subgroup_members(G: FiniteGroup, seeds) -> frozenset:
    """Member indices of <seeds> by pairwise-product closure."""
    members = {0} | set(seeds)
    members |= {G.inv(x) for x in members}
    while True:
        new = set()
        for a in members:
            for b in members:
                c = G.mul(a, b)
                if c not in members:
                    new.add(c)
        if not new:
            return frozenset(members)
        members |= new


def brute_commutator_members(G: FiniteGroup, H, K) -> frozenset:
    """All-pairs commutator generation, the oracle for the normal-closure path."""
    seeds = {G.commutator(h, k) for h in H.members for k in K.members}
    return brute_subgroup_members(G, seeds)


def naive_element_order(G: FiniteGroup, x: int) -> int:
    k = 1
    y = x
    while y != 0:
        y = G.mul(y, x)
        k += 1
    return k


def naive_exponent(G: FiniteGroup) -> int:
    import math
    e = 1
    for x in range(G.order):
        e = math.lcm(e, naive_element_order(G, x))
    return e


def brute_power_members(G: FiniteGroup, m: int) -> frozenset:
    return brute_subgroup_members(G, {G.power(x, m) for x in range(G.order)})


_QUAT_MUL = {
    ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group() -> FiniteGroup:
    """Q8 as left-multiplication permutations of its eight units."""
    units = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {u: t for t, u in enumerate(units)}

    def mul(u, v):
        su, au = u
        sv, av = v
        if au == "1":
            return (su * sv, av)
        if av == "1":
            return (su * sv, au)
        sg, ax = _QUAT_MUL[(au, av)]
        return (su * sv * sg, ax)

    def perm(g):
        return tuple(index[mul(g, x)] for x in units)

    G = generate_group(8, [perm((1, "i")), perm((1, "j"))])
    assert G.order == 8
    return G
