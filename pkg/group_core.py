"""Fully enumerated finite groups.

Elements are indices 0..|G|-1 into a numpy multiplication table, the identity
is always index 0, and every derived object (classes, subgroups, quotients)
refers to elements by index. Enumeration order is breadth-first from the
identity, so tables and reports are reproducible run to run.
"""

import logging
import re
from dataclasses import dataclass
from math import gcd

import numpy as np
from sympy import isprime, primefactors

from errors import CertificationFailed, InvalidPermutation, NotNormal, NotPrime, OrderCapExceeded
from settings import ORDER_CAP

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


# --- Permutations ---

@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection on 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if point in seen or not 0 <= point < degree:
                    raise InvalidPermutation(f"bad point {point} in cycle {tuple(cycle)}")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(tuple(images))

    def then(self, other):
        """Apply self first, then other."""
        return Permutation(tuple(other.images[i] for i in self.images))

    def cycles(self):
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle, point = [], start
            while point not in seen:
                seen.add(point)
                cycle.append(point)
                point = self.images[point]
            out.append(cycle)
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_generators(text):
    """Parse one generator per line in 0-based disjoint-cycle notation.

    Blank lines and lines starting with '#' are skipped. The common degree is
    one more than the largest point mentioned anywhere.
    """
    parsed, mentioned = [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if _CYCLE.sub("", line).strip():
            raise InvalidPermutation(f"cannot parse generator line: {line!r}")
        cycles = []
        for body in _CYCLE.findall(line):
            try:
                points = [int(tok) for tok in body.replace(",", " ").split()]
            except ValueError:
                raise InvalidPermutation(f"non-integer point in {line!r}") from None
            if any(pt < 0 for pt in points):
                raise InvalidPermutation(f"negative point in {line!r}")
            mentioned.extend(points)
            if len(points) > 1:
                cycles.append(points)
        parsed.append(cycles)
    if not parsed:
        raise InvalidPermutation("no generators given")
    degree = max(mentioned, default=0) + 1
    return [Permutation.from_cycles(cycles, degree) for cycles in parsed]


# --- Groups ---

def _index_dtype(n):
    return np.int16 if n < 2 ** 15 else np.int32


class FiniteGroup:
    """A group given by its full multiplication table.

    table[a, b] is the index of a*b. The optional projection maps the
    elements of a parent group onto this one when it was built as a quotient.
    """

    def __init__(self, elements, table, generators, label="", projection=None):
        self.elements = list(elements)
        self.table = np.asarray(table, dtype=_index_dtype(len(self.elements)))
        self.table.setflags(write=False)
        self.identity = 0
        self.generators = tuple(int(g) for g in generators) or (0,)
        self.label = label
        self.projection = projection
        self.inverse = np.argmax(self.table == 0, axis=1).astype(self.table.dtype)
        self.inverse.setflags(write=False)
        self._memo = {}

    @property
    def order(self):
        return len(self.elements)

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def conjugates(self, x):
        """g^-1 x g for every g, as an array indexed by g."""
        idx = np.arange(self.order)
        return self.table[self.table[self.inverse, x], idx]

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"


def enumerate_group(generators, cap=ORDER_CAP, label=""):
    """Close permutation generators under composition, breadth-first from 1."""
    if not generators:
        raise InvalidPermutation("empty generator list")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise InvalidPermutation("generators have different degrees")

    perms = [tuple(range(degree))]
    index = {perms[0]: 0}
    parent, via, right = [-1], [-1], []
    pos = 0
    while pos < len(perms):
        current = perms[pos]
        row = []
        for gi, g in enumerate(generators):
            image = tuple(g.images[i] for i in current)
            if image not in index:
                if len(perms) >= cap:
                    raise OrderCapExceeded(f"closure of {label or 'generators'} exceeds {cap} elements")
                index[image] = len(perms)
                perms.append(image)
                parent.append(pos)
                via.append(gi)
            row.append(index[image])
        right.append(row)
        pos += 1

    n = len(perms)
    right = np.array(right, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    # b = parent[b] * g, so a*b = (a*parent[b]) * g
    for b in range(1, n):
        table[:, b] = right[table[:, parent[b]], via[b]]

    gens = sorted({int(right[0, gi]) for gi in range(len(generators))} - {0})
    logger.debug("enumerated %s: order %d, degree %d", label or "group", n, degree)
    return FiniteGroup([Permutation(p) for p in perms], table, gens, label=label)


def element_orders(G):
    if "orders" not in G._memo:
        idx = np.arange(G.order)
        orders = np.zeros(G.order, dtype=np.int64)
        cur, k = idx.copy(), 1
        while True:
            orders[(cur == 0) & (orders == 0)] = k
            if orders.all():
                break
            cur = G.table[cur, idx]
            k += 1
        orders.setflags(write=False)
        G._memo["orders"] = orders
    return G._memo["orders"]


def element_order(G, x):
    return int(element_orders(G)[x])


def exponent(G):
    return int(np.lcm.reduce(element_orders(G)))


# --- Conjugacy classes ---

@dataclass(frozen=True)
class ConjugacyClassInfo:
    representative: int
    members: tuple
    size: int
    element_order: int
    power_map: dict


def conjugacy_classes(G):
    """Classes sorted by (element order, size, least member); identity first."""
    if "classes" in G._memo:
        return G._memo["classes"]
    orders = element_orders(G)
    seen = np.zeros(G.order, dtype=bool)
    orbits = []
    for x in range(G.order):
        if seen[x]:
            continue
        orbit = np.unique(G.conjugates(x))
        seen[orbit] = True
        orbits.append(orbit)
    orbits.sort(key=lambda o: (int(orders[o[0]]), len(o), int(o[0])))

    lookup = np.empty(G.order, dtype=np.int64)
    for ci, orbit in enumerate(orbits):
        lookup[orbit] = ci
    lookup.setflags(write=False)

    classes = []
    for orbit in orbits:
        rep = int(orbit[0])
        o = int(orders[rep])
        powers = _powers(G, rep, o)
        power_map = {k: int(lookup[powers[k]]) for k in range(1, o) if gcd(k, o) == 1}
        classes.append(ConjugacyClassInfo(rep, tuple(int(m) for m in orbit), len(orbit), o, power_map))

    logger.debug("%s: %d conjugacy classes", G.label or "group", len(classes))
    G._memo["classes"] = classes
    G._memo["class_lookup"] = lookup
    return classes


def class_lookup(G):
    """Array mapping each element index to its class index."""
    conjugacy_classes(G)
    return G._memo["class_lookup"]


def _powers(G, x, count):
    out = [0]
    for _ in range(1, count):
        out.append(int(G.table[out[-1], x]))
    return out


def power_classes(G, class_index):
    """Class index of rep^j for j = 0 .. order-1 (all exponents, not only coprime)."""
    cls = conjugacy_classes(G)[class_index]
    lookup = class_lookup(G)
    return [int(lookup[y]) for y in _powers(G, cls.representative, cls.element_order)]


def inverse_class_map(G):
    classes = conjugacy_classes(G)
    lookup = class_lookup(G)
    return [int(lookup[G.inverse[c.representative]]) for c in classes]


# --- Subgroups ---

@dataclass(frozen=True)
class SubgroupHandle:
    member_indices: tuple

    @property
    def order(self):
        return len(self.member_indices)

    def as_array(self):
        return np.asarray(self.member_indices, dtype=np.int64)

    def is_trivial(self):
        return self.order == 1


def _handle(members):
    return SubgroupHandle(tuple(int(m) for m in np.unique(members)))


def trivial_subgroup(G):
    return SubgroupHandle((0,))


def whole_group(G):
    return SubgroupHandle(tuple(range(G.order)))


def subgroup_generated(G, gens):
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    members = np.zeros(G.order, dtype=bool)
    members[0] = True
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        reached = np.unique(G.table[np.ix_(frontier, gens)]) if gens.size else np.array([], dtype=np.int64)
        fresh = reached[~members[reached]]
        members[fresh] = True
        frontier = fresh
    return _handle(np.nonzero(members)[0])


def normal_closure(G, seed):
    """Smallest normal subgroup containing seed."""
    lookup = class_lookup(G)
    classes = conjugacy_classes(G)
    closed = set()
    for x in seed:
        closed.update(classes[int(lookup[x])].members)
    return subgroup_generated(G, closed)


def is_normal(G, N):
    members = N.as_array()
    for g in G.generators:
        conj = G.table[G.table[G.inverse[g], members], g]
        if not np.isin(conj, members).all():
            return False
    return True


def subgroup_product(G, A, B):
    """A*B as a set; a subgroup whenever one factor is normal."""
    return _handle(G.table[np.ix_(A.as_array(), B.as_array())])


def _class_closures(G):
    if "class_closures" not in G._memo:
        G._memo["class_closures"] = [
            normal_closure(G, [c.representative]) for c in conjugacy_classes(G)[1:]
        ]
    return G._memo["class_closures"]


def prime_part(n, p):
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_p_power(n, p):
    return prime_part(n, p) == n


def _join_where(G, keep):
    join = trivial_subgroup(G)
    for closure in _class_closures(G):
        if keep(closure.order) and not set(closure.member_indices) <= set(join.member_indices):
            join = subgroup_product(G, join, closure)
    return join


def p_prime_core(G, p):
    """O_p'(G): join of the single-class normal closures of p'-order."""
    core = _join_where(G, lambda n: n % p != 0)
    if core.order % p == 0 or not is_normal(G, core):
        raise CertificationFailed(f"O_{p}'({G.label}) candidate of order {core.order} is not a normal {p}'-subgroup")
    for closure in _class_closures(G):
        joined = subgroup_product(G, core, closure).order
        if joined != core.order and joined % p != 0:
            raise CertificationFailed(f"O_{p}'({G.label}) misses a normal {p}'-subgroup of order {joined}")
    return core


def p_core(G, p):
    """O_p(G): join of the single-class normal closures that are p-groups."""
    core = _join_where(G, lambda n: is_p_power(n, p))
    if not is_p_power(core.order, p) or not is_normal(G, core):
        raise CertificationFailed(f"O_{p}({G.label}) candidate of order {core.order} is not a normal {p}-subgroup")
    return core


def fitting_subgroup(G):
    fit = trivial_subgroup(G)
    for q in primefactors(G.order):
        fit = subgroup_product(G, fit, p_core(G, q))
    return fit


def is_nilpotent(G):
    return fitting_subgroup(G).order == G.order


def is_abelian(G):
    return bool((G.table == G.table.T).all())


def is_simple(G):
    """Nontrivial with no proper nontrivial normal subgroup."""
    if G.order == 1:
        return False
    return all(c.order == G.order for c in _class_closures(G))


def check_prime(p):
    if not isprime(int(p)):
        raise NotPrime(f"{p} is not prime")
    return int(p)


# --- Quotients and products ---

def quotient(G, N):
    """G/N on cosets ordered by least member; projection maps G onto it."""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.label or 'G'}")
    members = N.as_array()
    coset_id = np.full(G.order, -1, dtype=np.int64)
    reps, cosets = [], []
    for a in range(G.order):
        if coset_id[a] >= 0:
            continue
        coset = np.sort(G.table[a, members])
        coset_id[coset] = len(reps)
        reps.append(a)
        cosets.append(tuple(int(c) for c in coset))
    reps = np.asarray(reps, dtype=np.int64)
    table = coset_id[G.table[np.ix_(reps, reps)]]
    gens = sorted({int(coset_id[g]) for g in G.generators} - {0})
    coset_id.setflags(write=False)
    label = f"{G.label or 'G'}/N{N.order}"
    return FiniteGroup(cosets, table, gens, label=label, projection=coset_id)


def preimage(Q, H):
    """Preimage in the parent group of a subgroup H of the quotient Q."""
    return _handle(np.nonzero(np.isin(Q.projection, H.as_array()))[0])


def direct_product(G, H, cap=ORDER_CAP):
    n = G.order * H.order
    if n > cap:
        raise OrderCapExceeded(f"{G.label} x {H.label} has order {n} > {cap}")
    m = H.order
    tg = G.table.astype(np.int64)
    th = H.table.astype(np.int64)
    table = (tg[:, None, :, None] * m + th[None, :, None, :]).reshape(n, n)
    elements = [(g, h) for g in range(G.order) for h in range(H.order)]
    gens = sorted(({g * m for g in G.generators} | set(H.generators)) - {0})
    return FiniteGroup(elements, table, gens, label=f"{G.label}x{H.label}")


# --- Structural predicates ---

def is_p_solvable(G, p):
    """Walk the upper p-series 1 <= O_p' <= O_p'p <= ... and test whether it reaches G."""
    N = trivial_subgroup(G)
    while True:
        Q = quotient(G, N)
        N1 = preimage(Q, p_prime_core(Q, p))
        Q = quotient(G, N1)
        N2 = preimage(Q, p_core(Q, p))
        if N2.order == N.order:
            break
        N = N2
    logger.debug("%s: upper %d-series stops at order %d", G.label, p, N.order)
    return N.order == G.order


def is_solvable(G):
    return all(is_p_solvable(G, q) for q in primefactors(G.order))


def is_frobenius_with_p_kernel(G, p):
    """Frobenius group whose kernel is a p-group.

    A p-group kernel lies in O_p(G), and a complement cannot meet O_p(G)
    (a p-group acting fixed-point-freely on a p-group is impossible), so the
    only candidate kernel is O_p(G) itself.
    """
    K = p_core(G, p)
    if K.is_trivial() or K.order == G.order:
        return False
    kernel = K.as_array()
    for k in kernel[1:]:
        centralizer = np.nonzero(G.table[:, k] == G.table[k, :])[0]
        if not np.isin(centralizer, kernel).all():
            return False
    return True
