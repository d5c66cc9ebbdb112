"""Filtration series of p-groups and the associated graded Lie algebra over F_p.

The canonical series is built from lower-central terms and their p-power
subgroups; its layers are elementary abelian and carry a bracket induced by
group commutators. On top of that live the power-compatibility check of the
graded bracket, the powerful-quotient criterion, span subalgebras attached
to subgroups, fixed-point comparisons under a coprime automorphism, and the
eigenspace decomposition after extending scalars by a root of unity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (NotAPGroup, NotCoprime, NotCoprimeToP,
                     NotElementaryAbelianLayer, PreconditionViolated)
from .gf import FiniteField, cyclotomic_polynomial, poly_divmod
from .groups import FiniteGroup, Subgroup, subgroup_generated
from .linalg import (FieldOps, PrimeOps, in_span, intersect_spans, mat_from_columns,
                     mat_mul, mat_equal, identity_matrix, mat_sub, mat_vec, nullspace,
                     rref, span_basis, spans_equal, vec_is_zero)
from .structure import (commutator_subgroup_pair, is_powerful, lower_central_series,
                        power_subgroup)
from .numutil import factorization, multiplicative_order_mod


def _prime_power_base(n: int) -> Optional[int]:
    if n == 1:
        return None
    fac = factorization(n)
    if len(fac) != 1:
        return None
    return next(iter(fac))


@dataclass
class NpSeries:
    """Descending filtration with the commutator and p-power compatibilities.

    ``terms[0]`` is the whole group and the last term is trivial; repeated
    terms are kept because the position index carries meaning.
    """

    group: FiniteGroup
    p: int
    terms: tuple

    def term(self, i: int) -> Subgroup:
        """1-based term; indices past the end mean the trivial subgroup."""
        if i <= len(self.terms):
            return self.terms[i - 1]
        return self.group.trivial_subgroup()

    @property
    def num_layers(self) -> int:
        return len(self.terms) - 1

    def layer_dims(self) -> tuple:
        out = []
        for i in range(1, len(self.terms)):
            idx = self.terms[i - 1].order // self.terms[i].order
            d = 0
            while idx > 1:
                idx //= self.p
                d += 1
            out.append(d)
        return tuple(out)


def jlz_series(G: FiniteGroup, p: int) -> NpSeries:
    """Canonical filtration: term i is the product of the p^k-th power
    subgroups of the j-th lower-central terms over all j * p^k >= i."""
    base = _prime_power_base(G.order)
    if G.order > 1 and base != p:
        raise NotAPGroup(f"order {G.order} is not a power of {p}")
    if G.order == 1:
        return NpSeries(G, p, (G.trivial_subgroup(),))
    lcs = lower_central_series(G)
    gammas = list(lcs.terms)  # strict; gamma_j trivial beyond

    def gamma(j: int) -> Subgroup:
        return gammas[j - 1] if j <= len(gammas) else G.trivial_subgroup()

    max_j = len(gammas)
    power_cache: dict[tuple, Subgroup] = {}

    def gamma_power(j: int, k: int) -> Subgroup:
        key = (j, k)
        if key not in power_cache:
            g = gamma(j)
            if k == 0:
                out = g
            elif g.is_trivial or p ** k >= g.exponent():
                # exponents in a p-group are p-powers, so p^k >= exp divides out
                out = G.trivial_subgroup()
            else:
                out = power_subgroup(G, p ** k, within=g)
            power_cache[key] = out
        return power_cache[key]

    max_k = 0
    while p ** max_k < G.exponent():
        max_k += 1
    terms = [G.whole_subgroup()]
    i = 2
    while not terms[-1].is_trivial:
        pieces = []
        for j in range(1, max_j + 1):
            if gamma(j).is_trivial:
                continue
            for k in range(0, max_k + 1):
                if j * p ** k >= i:
                    piece = gamma_power(j, k)
                    if not piece.is_trivial:
                        pieces.append(piece)
                    break  # larger k gives smaller subgroups, already covered
        if pieces:
            seeds: set[int] = set()
            for piece in pieces:
                seeds.update(piece.gens)
            terms.append(subgroup_generated(G, seeds))
        else:
            terms.append(G.trivial_subgroup())
        i += 1
    return NpSeries(G, p, tuple(terms))


def verify_np_series(S: NpSeries) -> dict:
    """Check both filtration axioms for all index pairs; report witnesses."""
    G = S.group
    p = S.p
    t = len(S.terms)
    commutator_failures = []
    power_failures = []
    for i in range(1, t + 1):
        if S.term(i).is_trivial:
            continue
        for j in range(i, t + 1):
            if S.term(j).is_trivial:
                continue
            comm = commutator_subgroup_pair(G, S.term(i), S.term(j))
            if not comm.member_set <= S.term(i + j).member_set:
                commutator_failures.append({"i": i, "j": j, "commutator_order": comm.order,
                                            "target_order": S.term(i + j).order})
        powers = power_subgroup(G, p, within=S.term(i))
        if not powers.member_set <= S.term(p * i).member_set:
            power_failures.append({"i": i, "power_order": powers.order,
                                   "target_order": S.term(p * i).order})
    ok = not commutator_failures and not power_failures
    return {"verdict": "pass" if ok else "fail",
            "commutator_failures": commutator_failures,
            "power_failures": power_failures}


@dataclass
class Layer:
    """One elementary abelian quotient of the filtration, as an F_p space."""

    index: int
    dim: int
    basis: tuple           # group element indices representing the basis cosets
    rep: dict              # member -> canonical coset key (least coset element)
    vectors: dict          # coset key -> coordinate tuple

    def coords_of(self, x: int) -> tuple:
        return self.vectors[self.rep[x]]


def _build_layer(G: FiniteGroup, p: int, index: int, top: Subgroup, bottom: Subgroup) -> Layer:
    rep: dict[int, int] = {}
    for x in top.members:
        if x in rep:
            continue
        coset = [G.mul(x, m) for m in bottom.members]
        key = min(coset)
        for y in coset:
            rep[y] = key
    expected = top.order // bottom.order
    basis: list[int] = []
    span: dict[int, tuple] = {rep[0]: ()}   # coset key -> coordinate vector so far
    elems: dict[int, int] = {rep[0]: 0}     # coset key -> one group representative
    for x in top.members:
        if rep[x] in span:
            continue
        basis.append(x)
        new_span: dict[int, tuple] = {}
        new_elems: dict[int, int] = {}
        for power in range(p):
            xj = G.power(x, power)
            for key, vec in span.items():
                e2 = G.mul(xj, elems[key])
                k2 = rep.get(e2)
                if k2 is None or k2 in new_span:
                    raise NotElementaryAbelianLayer(
                        f"layer {index} quotient is not elementary abelian")
                new_span[k2] = vec + (power,)
                new_elems[k2] = e2
        span, elems = new_span, new_elems
    if len(span) != expected:
        raise NotElementaryAbelianLayer(
            f"layer {index} has index {expected} but spans {len(span)} cosets")
    return Layer(index=index, dim=len(basis), basis=tuple(basis), rep=rep, vectors=span)


class GradedLieAlgebra:
    """Direct sum of the filtration layers with the commutator-induced bracket.

    Structure constants are stored sparsely per basis pair; the subalgebra
    generated by the first layer is tracked as per-layer echelon bases.
    """

    def __init__(self, series: NpSeries, layers: list[Layer], brackets: dict):
        self.series = series
        self.group = series.group
        self.p = series.p
        self.layers = layers
        self.num_layers = len(layers)
        self.brackets = brackets
        self.ops = PrimeOps(self.p)
        self.lp_layers = self._generate_from_first_layer()
        self.lp_flags = [
            tuple(in_span(self._unit(i + 1, b), self.lp_layers[i], self.ops)
                  for b in range(layer.dim))
            for i, layer in enumerate(layers)
        ]

    @property
    def dims(self) -> tuple:
        return tuple(layer.dim for layer in self.layers)

    def layer(self, i: int) -> Optional[Layer]:
        if 1 <= i <= self.num_layers:
            return self.layers[i - 1]
        return None

    def depth(self, x: int) -> int:
        """Largest i with x in term i; the identity sinks past every layer."""
        d = 1
        while d <= self.num_layers and x in self.series.term(d + 1).member_set:
            d += 1
        if d > self.num_layers and x != 0:
            raise ValueError(f"element {x} is not in the filtration tail")
        return d if x != 0 else self.num_layers + 1

    def coords(self, i: int, x: int) -> tuple:
        return self.layers[i - 1].coords_of(x)

    def _unit(self, i: int, b: int) -> tuple:
        layer = self.layers[i - 1]
        return tuple(1 if t == b else 0 for t in range(layer.dim))

    def bracket(self, i: int, u: tuple, j: int, v: tuple) -> Optional[tuple]:
        """[u, v] for homogeneous u in layer i, v in layer j; None past the top."""
        if i + j > self.num_layers:
            return None
        target = self.layers[i + j - 1]
        out = [0] * target.dim
        p = self.p
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            for b, vb in enumerate(v):
                if vb == 0:
                    continue
                cvec = self.brackets.get((i, a, j, b))
                if cvec is None:
                    continue
                scale = (ua * vb) % p
                for t, ct in enumerate(cvec):
                    out[t] = (out[t] + scale * ct) % p
        return tuple(out)

    def _generate_from_first_layer(self) -> list[tuple]:
        spans = [() for _ in range(self.num_layers)]
        if self.num_layers >= 1 and self.layers[0].dim:
            spans[0] = rref([self._unit(1, b) for b in range(self.layers[0].dim)], self.ops)
        changed = True
        while changed:
            changed = False
            for i in range(1, self.num_layers + 1):
                for j in range(1, self.num_layers + 1 - i):
                    if not spans[i - 1] or not spans[j - 1]:
                        continue
                    for u in spans[i - 1]:
                        for v in spans[j - 1]:
                            w = self.bracket(i, u, j, v)
                            if w is None or vec_is_zero(w, self.ops):
                                continue
                            if not in_span(w, spans[i + j - 1], self.ops):
                                spans[i + j - 1] = rref(list(spans[i + j - 1]) + [w], self.ops)
                                changed = True
        return spans

    def lie_class_of_generated(self) -> int:
        """Nilpotency class of the subalgebra generated by the first layer."""
        spans = self.lp_layers
        if all(not s for s in spans):
            return 0
        current = spans
        klass = 1
        while True:
            nxt = [() for _ in range(self.num_layers)]
            nonzero = False
            for i in range(1, self.num_layers + 1):
                for j in range(1, self.num_layers + 1 - i):
                    if not current[i - 1] or not spans[j - 1]:
                        continue
                    vecs = list(nxt[i + j - 1])
                    for u in current[i - 1]:
                        for v in spans[j - 1]:
                            w = self.bracket(i, u, j, v)
                            if w is not None and not vec_is_zero(w, self.ops):
                                vecs.append(w)
                    nxt[i + j - 1] = rref(vecs, self.ops)
                    if nxt[i + j - 1]:
                        nonzero = True
            if not nonzero:
                return klass
            current = nxt
            klass += 1
            if klass > self.num_layers + 1:
                raise AssertionError("graded lower central series failed to terminate")


def build_graded_lie(series: NpSeries) -> GradedLieAlgebra:
    """Layers, bases, log maps and structure constants from a verified series."""
    G = series.group
    p = series.p
    layers = []
    for i in range(1, len(series.terms)):
        layers.append(_build_layer(G, p, i, series.terms[i - 1], series.term(i + 1)))
    brackets = {}
    num = len(layers)
    for i in range(1, num + 1):
        for j in range(1, num + 1 - i):
            target = layers[i + j - 1]
            for a, xa in enumerate(layers[i - 1].basis):
                for b, yb in enumerate(layers[j - 1].basis):
                    c = G.commutator(xa, yb)
                    if c not in target.rep:
                        raise NotElementaryAbelianLayer(
                            f"commutator of layers {i},{j} escapes layer {i + j}")
                    vec = target.coords_of(c)
                    if any(vec):
                        brackets[(i, a, j, b)] = vec
    return GradedLieAlgebra(series, layers, brackets)


def ad_nilpotency_index(A: GradedLieAlgebra, i: int, v: tuple) -> int:
    """Least n >= 1 with n-fold bracketing by v killing every basis vector."""
    if vec_is_zero(v, A.ops):
        raise ValueError("ad-nilpotency index is defined for nonzero elements")
    state = []
    for j in range(1, A.num_layers + 1):
        for b in range(A.layers[j - 1].dim):
            state.append((j, A._unit(j, b)))
    n = 0
    while state:
        n += 1
        nxt = []
        for layer_idx, vec in state:
            w = A.bracket(layer_idx, vec, i, v)
            if w is not None and not vec_is_zero(w, A.ops):
                nxt.append((layer_idx + i, w))
        state = nxt
        if n > A.num_layers + 1:
            raise AssertionError("ad-nilpotency iteration failed to terminate")
    return max(n, 1)


def check_lazard(A: GradedLieAlgebra, x: int) -> bool:
    """p-fold bracketing by the class of x equals bracketing by the class of x^p."""
    G = A.group
    p = A.p
    if x == 0:
        return True
    i = A.depth(x)
    v = A.coords(i, x)
    xp = G.power(x, p)
    ti = p * i
    if ti <= A.num_layers:
        if xp not in A.series.term(ti).member_set:
            return False
        w = A.coords(ti, xp)
    else:
        if xp != 0:
            return False
        w = None
    for j in range(1, A.num_layers + 1):
        for b in range(A.layers[j - 1].dim):
            vec = A._unit(j, b)
            layer_idx = j
            for _ in range(p):
                out = A.bracket(layer_idx, vec, i, v)
                layer_idx += i
                if out is None or vec_is_zero(out, A.ops):
                    vec = None
                    break
                vec = out
            lhs = vec  # None means zero
            rhs = None
            if w is not None:
                out = A.bracket(j, A._unit(j, b), ti, w)
                if out is not None and not vec_is_zero(out, A.ops):
                    rhs = out
            if lhs != rhs:
                return False
    return True


def check_lazard_all(A: GradedLieAlgebra) -> dict:
    failures = [x for x in range(A.group.order) if not check_lazard(A, x)]
    return {"verdict": "pass" if not failures else "fail",
            "checked": A.group.order, "failures": failures[:5]}


def verify_bracket_axioms(A: GradedLieAlgebra) -> dict:
    """Antisymmetry and the Jacobi identity on all homogeneous basis triples."""
    p = A.p
    homog = [(i, A._unit(i, b))
             for i in range(1, A.num_layers + 1)
             for b in range(A.layers[i - 1].dim)]

    def as_zero(vec):
        return None if vec is None or not any(vec) else vec

    anti_ok = True
    for (i, u) in homog:
        for (j, v) in homog:
            uv = as_zero(A.bracket(i, u, j, v))
            vu = as_zero(A.bracket(j, v, i, u))
            if uv is None and vu is None:
                continue
            if uv is None or vu is None or tuple((-c) % p for c in uv) != vu:
                anti_ok = False
    jacobi_ok = True
    for (i, u) in homog:
        for (j, v) in homog:
            for (k, w) in homog:
                acc = None
                for (a, x), (b, y), (c, z) in (((i, u), (j, v), (k, w)),
                                               ((j, v), (k, w), (i, u)),
                                               ((k, w), (i, u), (j, v))):
                    inner = A.bracket(a, x, b, y)
                    if inner is None:
                        continue
                    outer = A.bracket(a + b, inner, c, z)
                    if outer is None:
                        continue
                    acc = outer if acc is None else tuple(
                        (s + t) % p for s, t in zip(acc, outer))
                if acc is not None and any(acc):
                    jacobi_ok = False
    return {"verdict": "pass" if anti_ok and jacobi_ok else "fail",
            "antisymmetry": anti_ok, "jacobi": jacobi_ok}


def check_riley(G: FiniteGroup, p: int, algebra: Optional[GradedLieAlgebra] = None) -> dict:
    """With c the class of the layer-1-generated subalgebra, the (c+1)-st
    filtration term must be powerful."""
    if algebra is None:
        algebra = build_graded_lie(jlz_series(G, p))
    c = algebra.lie_class_of_generated()
    term = algebra.series.term(c + 1)
    powerful = is_powerful(G, p, subgroup=term)
    return {"lie_class": c, "term_order": term.order,
            "verdict": "pass" if powerful else "fail"}


def subalgebra_of_subgroup(A: GradedLieAlgebra, H: Subgroup) -> list[tuple]:
    """Per-layer spans of the homogeneous images of H intersected with each term."""
    spans = []
    for i in range(1, A.num_layers + 1):
        term_members = A.series.term(i).member_set
        vecs = [A.coords(i, h) for h in H.members if h in term_members]
        spans.append(span_basis([v for v in vecs if any(v)], A.ops))
    return spans


def subalgebra_LGH(A: GradedLieAlgebra, H: Subgroup) -> dict:
    """Span subalgebra attached to a subgroup, with the least u such that
    bracketing the whole algebra u times by it vanishes."""
    K = subalgebra_of_subgroup(A, H)
    closed = True
    for i in range(1, A.num_layers + 1):
        for j in range(1, A.num_layers + 1 - i):
            for u in K[i - 1]:
                for v in K[j - 1]:
                    w = A.bracket(i, u, j, v)
                    if w is not None and not vec_is_zero(w, A.ops):
                        if not in_span(w, K[i + j - 1], A.ops):
                            closed = False
    current = [tuple(A._unit(i + 1, b) for b in range(layer.dim))
               for i, layer in enumerate(A.layers)]
    u_count = 0
    while any(current[i] for i in range(A.num_layers)):
        nxt = [[] for _ in range(A.num_layers)]
        for i in range(1, A.num_layers + 1):
            for j in range(1, A.num_layers + 1 - i):
                if not current[i - 1] or not K[j - 1]:
                    continue
                for w_vec in current[i - 1]:
                    for k_vec in K[j - 1]:
                        out = A.bracket(i, w_vec, j, k_vec)
                        if out is not None and not vec_is_zero(out, A.ops):
                            nxt[i + j - 1].append(out)
        current = [rref(vs, A.ops) for vs in nxt]
        u_count += 1
        if u_count > A.num_layers + 1:
            raise AssertionError("span bracketing failed to terminate")
    return {"dims": tuple(len(b) for b in K), "closed": closed, "u": max(u_count, 1)}


def layer_matrices(A: GradedLieAlgebra, phi) -> list[tuple]:
    """Per-layer matrices of the induced action of phi (columns = basis images)."""
    if phi.group is not A.group:
        raise ValueError("automorphism acts on a different group")
    mats = []
    for i in range(1, A.num_layers + 1):
        layer = A.layers[i - 1]
        cols = []
        for x in layer.basis:
            image = phi.table[x]
            if image not in layer.rep:
                raise PreconditionViolated(
                    f"automorphism does not preserve filtration term {i}")
            cols.append(layer.coords_of(image))
        mats.append(mat_from_columns(cols, A.ops))
    return mats


def lie_fixed_points(A: GradedLieAlgebra, phi) -> dict:
    """Fixed subspace of the generated subalgebra versus the span coming from
    the fixed-point subgroup; they must agree layer by layer."""
    if not phi.coprime:
        raise NotCoprime("fixed-point comparison requires a coprime action")
    from .automorphisms import twisted_data

    ops = A.ops
    mats = layer_matrices(A, phi)
    C = twisted_data(phi).fixed
    spans = subalgebra_of_subgroup(A, C)
    per_layer = []
    all_ok = True
    for i in range(1, A.num_layers + 1):
        dim = A.layers[i - 1].dim
        if dim == 0:
            per_layer.append({"layer": i, "dim": 0, "verdict": "pass"})
            continue
        M = mats[i - 1]
        delta = mat_sub(M, identity_matrix(dim, ops), ops)
        kernel = nullspace(delta, dim, ops)
        lhs = intersect_spans(kernel, A.lp_layers[i - 1], ops)
        rhs = intersect_spans(spans[i - 1], A.lp_layers[i - 1], ops)
        ok = spans_equal(lhs, rhs, ops)
        all_ok = all_ok and ok
        per_layer.append({"layer": i, "fixed_dim": len(lhs),
                          "span_dim": len(rhs), "verdict": "pass" if ok else "fail"})
    return {"verdict": "pass" if all_ok else "fail", "layers": per_layer}


@dataclass
class ExtendedAlgebra:
    """Scalar extension of a graded algebra by a primitive root of unity,
    with per-layer eigenspace bases for the induced automorphism."""

    base: GradedLieAlgebra
    n: int
    field: FiniteField
    omega: object
    matrices: list
    eigenbases: list      # per layer: list over j of basis tuples
    dims: list            # per layer: list over j of dimensions

    def eigen_dims(self) -> list:
        return self.dims

    def bracket_ext(self, i: int, u: tuple, j: int, v: tuple) -> Optional[tuple]:
        if i + j > self.base.num_layers:
            return None
        target_dim = self.base.layers[i + j - 1].dim
        fops = FieldOps(self.field)
        out = [self.field.zero] * target_dim
        for a, ua in enumerate(u):
            if fops.is_zero(ua):
                continue
            for b, vb in enumerate(v):
                if fops.is_zero(vb):
                    continue
                cvec = self.base.brackets.get((i, a, j, b))
                if cvec is None:
                    continue
                scale = ua * vb
                for t, ct in enumerate(cvec):
                    if ct:
                        out[t] = out[t] + scale * self.field.from_int(ct)
        return tuple(out)


def _cyclotomic_modulus(n: int, p: int) -> tuple:
    """Lexicographically least monic irreducible factor of the n-th
    cyclotomic polynomial over F_p, found by trial division."""
    phi_n = cyclotomic_polynomial(n, p)
    d = 1 if n == 1 else multiplicative_order_mod(p, n)
    for code in range(p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        _, rem = poly_divmod(phi_n, f, p)
        if not rem:
            return f
    raise AssertionError("cyclotomic polynomial had no factor of the expected degree")


def extend_and_eigendecompose(A: GradedLieAlgebra, phi, n: Optional[int] = None) -> ExtendedAlgebra:
    """Extend scalars so a primitive n-th root of unity exists, then split
    every layer into eigenspaces of the induced action."""
    p = A.p
    if n is None:
        n = phi.order_n
    if math.gcd(n, p) != 1:
        raise NotCoprimeToP(f"root order {n} is divisible by the characteristic {p}")
    modulus = _cyclotomic_modulus(n, p)
    field = FiniteField(p, len(modulus) - 1, modulus)
    omega = field.generator_element()
    if n > 1:
        if omega ** n != field.one:
            raise AssertionError("modulus root is not an n-th root of unity")
        for q in factorization(n):
            if omega ** (n // q) == field.one:
                raise AssertionError("modulus root is not primitive")
    else:
        omega = field.one
    fops = FieldOps(field)
    base_mats = layer_matrices(A, phi)
    lifted = []
    for M in base_mats:
        lifted.append(tuple(tuple(field.from_int(c) for c in row) for row in M))
    omega_powers = [field.one]
    for _ in range(1, n):
        omega_powers.append(omega_powers[-1] * omega)
    eigenbases = []
    dims = []
    for idx, M in enumerate(lifted):
        dim = A.layers[idx].dim
        if dim == 0:
            eigenbases.append([() for _ in range(n)])
            dims.append([0] * n)
            continue
        Mn = identity_matrix(dim, fops)
        for _ in range(n):
            Mn = mat_mul(Mn, M, fops)
        if not mat_equal(Mn, identity_matrix(dim, fops), fops):
            raise PreconditionViolated(f"induced action on layer {idx + 1} has order not dividing {n}")
        per_j = []
        per_dim = []
        total = 0
        for j in range(n):
            shift = tuple(tuple(row[t] - (omega_powers[j] if t == r else field.zero)
                                for t, _ in enumerate(row))
                          for r, row in enumerate(M))
            basis = nullspace(shift, dim, fops)
            per_j.append(basis)
            per_dim.append(len(basis))
            total += len(basis)
        if total != dim:
            raise AssertionError(
                f"eigenspace dimensions {per_dim} do not fill layer {idx + 1} (dim {dim})")
        eigenbases.append(per_j)
        dims.append(per_dim)
    return ExtendedAlgebra(base=A, n=n, field=field, omega=omega,
                           matrices=lifted, eigenbases=eigenbases, dims=dims)


def verify_eigen_product_rule(ext: ExtendedAlgebra) -> dict:
    """Brackets of eigenvectors land in the eigenspace of the eigenvalue product."""
    A = ext.base
    fops = FieldOps(ext.field)
    checked = 0
    failures = 0
    for i in range(1, A.num_layers + 1):
        for j in range(1, A.num_layers + 1 - i):
            for ji, basis_i in enumerate(ext.eigenbases[i - 1]):
                for jj, basis_j in enumerate(ext.eigenbases[j - 1]):
                    for u in basis_i:
                        for v in basis_j:
                            w = ext.bracket_ext(i, u, j, v)
                            if w is None or all(fops.is_zero(c) for c in w):
                                continue
                            checked += 1
                            target = ext.matrices[i + j - 1]
                            image = mat_vec(target, w, fops)
                            lam = (ext.omega ** ((ji + jj) % ext.n)) if ext.n > 1 else ext.field.one
                            expected = tuple(lam * c for c in w)
                            if image != expected:
                                failures += 1
    return {"verdict": "pass" if failures == 0 else "fail",
            "nonzero_brackets_checked": checked}
