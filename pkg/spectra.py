"""Spectra, blocks and theorem checks for Cay(G, Omega_p(G)).

Omega_p(G) is the set of p-singular elements. It is a union of conjugacy
classes, so the graph is a normal Cayley graph and every eigenvalue is a
character sum: eta_chi = (1/chi(1)) * sum over Omega_p of chi, with
multiplicity chi(1)^2.
"""

import logging
import math
from collections import Counter
from dataclasses import asdict, dataclass, field

import networkx as nx
from sympy import primefactors

from catalog import build_group
from char_table import character_table, restrict_to_quotient
from errors import (
    HypothesisNotMet,
    IntegralityViolation,
    NotPSolvable,
    NotSolvable,
    PrimeDoesNotDivideOrder,
    SpectrumMismatch,
)
from group_core import (
    SubgroupHandle,
    check_prime,
    conjugacy_classes,
    direct_product,
    fitting_subgroup,
    is_abelian,
    is_frobenius_with_p_kernel,
    is_nilpotent,
    is_p_power,
    is_p_solvable,
    is_simple,
    is_solvable,
    normal_closure,
    p_core,
    p_prime_core,
    prime_part,
    quotient,
)
from oracle import (
    build_adjacency,
    cayley_eccentricity,
    compare_spectra,
    components_and_diameter,
    expand,
    symmetric_eigenvalues,
    zero_count,
)
from settings import EIGEN_TOL, ORACLE_CAP, ORDER_CAP

logger = logging.getLogger(__name__)


# --- p-singular profile ---

@dataclass(frozen=True)
class PSingularProfile:
    p: int
    order: int
    class_indices: tuple
    members: tuple
    d_p: int
    H_p: SubgroupHandle
    c_p: int
    O_p_prime: SubgroupHandle
    r_p: int

    @property
    def order_p(self):
        return prime_part(self.order, self.p)

    @property
    def order_p_prime(self):
        return self.order // self.order_p


def p_singular_profile(G, p):
    p = check_prime(p)
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide |{G.label or 'G'}| = {G.order}")
    classes = conjugacy_classes(G)
    class_indices = tuple(i for i, c in enumerate(classes) if c.element_order % p == 0)
    members = tuple(sorted(m for i in class_indices for m in classes[i].members))
    H = normal_closure(G, members)
    O = p_prime_core(G, p)
    return PSingularProfile(
        p=p,
        order=G.order,
        class_indices=class_indices,
        members=members,
        d_p=len(members),
        H_p=H,
        c_p=G.order // H.order,
        O_p_prime=O,
        r_p=G.order // O.order,
    )


# --- Spectrum ---

@dataclass(frozen=True)
class SpectrumReport:
    group: str
    order: int
    prime: int
    eigs: tuple
    row_eigenvalues: tuple
    nullity: int
    energy: int
    bound_additive: int
    bound_sqrt: float
    diameter: int
    hyperenergetic: bool
    singular: bool


def character_sums(T, prof):
    """sum over Omega_p of chi, one rational integer per row."""
    sums = []
    for row in range(T.num_classes):
        total = T.class_sum(row, prof.class_indices)
        if not total.is_rational():
            raise IntegralityViolation(f"row {row}: sum over Omega_{prof.p} is {total}, not rational")
        sums.append(total.to_int())
    return sums


def spectrum(T, prof, G):
    sums = character_sums(T, prof)
    row_eigs = []
    counts = Counter()
    for row, (total, degree) in enumerate(zip(sums, T.degrees)):
        if total % degree:
            raise IntegralityViolation(f"row {row}: {total} is not divisible by chi(1) = {degree}")
        row_eigs.append(total // degree)
        counts[total // degree] += degree * degree
    eigs = tuple(sorted(counts.items(), reverse=True))

    if sum(m for _, m in eigs) != T.order or sum(v * m for v, m in eigs) != 0:
        raise SpectrumMismatch("multiplicities or trace of the character spectrum are wrong")
    if eigs[0] != (prof.d_p, prof.c_p):
        raise SpectrumMismatch(f"top eigenvalue {eigs[0]} should be (d_p, c_p) = {(prof.d_p, prof.c_p)}")

    size, diameter = cayley_eccentricity(G, prof.members)
    if size != prof.H_p.order:
        raise SpectrumMismatch(f"component of the identity has {size} vertices, |H_p| = {prof.H_p.order}")

    n = T.order
    energy = sum(abs(v) * m for v, m in eigs)
    nullity = counts.get(0, 0)
    return SpectrumReport(
        group=G.label,
        order=n,
        prime=prof.p,
        eigs=eigs,
        row_eigenvalues=tuple(row_eigs),
        nullity=nullity,
        energy=energy,
        bound_additive=prof.r_p + prof.c_p * (prof.d_p - 1),
        bound_sqrt=math.sqrt(n * prof.d_p + prof.r_p * (prof.r_p - 1)),
        diameter=diameter,
        hyperenergetic=energy > 2 * n - 2,
        singular=nullity > 0,
    )


# --- Blocks ---

@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple
    principal_index: int

    @property
    def principal(self):
        return self.blocks[self.principal_index]

    def __len__(self):
        return len(self.blocks)


def principal_block_membership(T, prof, row):
    """chi lies in the principal block iff its sum over Omega_p is nonzero."""
    total = T.class_sum(row, prof.class_indices)
    if not total.is_rational():
        raise IntegralityViolation(f"row {row}: sum over Omega_{prof.p} is not rational")
    return total.to_int() != 0


def block_partition(T, p, classes=None):
    """Components of chi <-> psi, i.e. nonzero inner sum over the p-regular classes."""
    orders = [c.element_order for c in classes] if classes is not None else T.class_orders
    regular = [k for k, o in enumerate(orders) if o % p]
    graph = nx.Graph()
    graph.add_nodes_from(range(T.num_classes))
    for a in range(T.num_classes):
        for b in range(a + 1, T.num_classes):
            if not T.inner(a, b, regular).is_zero():
                graph.add_edge(a, b)
    blocks = sorted((tuple(sorted(c)) for c in nx.connected_components(graph)), key=lambda c: c[0])
    return BlockPartition(tuple(blocks), principal_index=0)


def nullity_via_blocks(T, prof, blocks):
    return T.order - sum(T.degrees[row] ** 2 for row in blocks.principal)


def lambda_values(T, prof):
    """|sum over Omega_p of chi| / chi(1) per row (integers by integrality)."""
    return [abs(s) // d for s, d in zip(character_sums(T, prof), T.degrees)]


def energy_via_principal_block(T, prof, blocks):
    lambdas = lambda_values(T, prof)
    return sum(T.degrees[row] ** 2 * lambdas[row] for row in blocks.principal)


# --- One-stop analysis ---

@dataclass(frozen=True)
class Analysis:
    profile: PSingularProfile
    table: object
    report: SpectrumReport
    blocks: BlockPartition


def analyze(G, p):
    key = ("analysis", int(p))
    if key not in G._memo:
        prof = p_singular_profile(G, p)
        T = character_table(G)
        report = spectrum(T, prof, G)
        blocks = block_partition(T, prof.p)
        logger.info(
            "%s p=%d: energy %d, nullity %d, %d block(s)",
            G.label, prof.p, report.energy, report.nullity, len(blocks),
        )
        G._memo[key] = Analysis(prof, T, report, blocks)
    return G._memo[key]


# --- Verdicts ---

@dataclass
class Verdict:
    name: str
    group: str
    prime: int = None
    clauses: dict = field(default_factory=dict)
    quantities: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.clauses.values())

    def to_dict(self):
        out = asdict(self)
        out["passed"] = self.passed
        return out


def verify_spectrum_invariants(G, p):
    a = analyze(G, p)
    prof, report = a.profile, a.report
    classes = conjugacy_classes(G)
    omega = set(prof.class_indices)
    members = set(prof.members)
    clauses = {
        "identity_excluded": 0 not in omega,
        "inverse_closed": all(int(G.inverse[m]) in members for m in members),
        "galois_closed": all(set(classes[k].power_map.values()) <= omega for k in omega),
        "trace": sum(v * m for v, m in report.eigs) == 0,
        "energy_ge_twice_degree": report.energy >= 2 * prof.d_p,
    }
    return Verdict("spectrum_invariants", G.label, prof.p, clauses, {"d_p": prof.d_p, "energy": report.energy})


def verify_block_consistency(G, p):
    """Principal-block test agrees with the <-> components; blocks >= 2 iff singular."""
    a = analyze(G, p)
    T, prof, blocks, report = a.table, a.profile, a.blocks, a.report
    principal = set(blocks.principal)
    membership = [principal_block_membership(T, prof, row) for row in range(T.num_classes)]
    clauses = {
        "membership_matches_components": all(m == (row in principal) for row, m in enumerate(membership)),
        "singular_iff_several_blocks": report.singular == (len(blocks) >= 2),
        "nullity_matches_blocks": nullity_via_blocks(T, prof, blocks) == report.nullity,
    }
    if is_p_solvable(G, prof.p):
        clauses["principal_block_is_quotient"] = (
            sorted(principal) == restrict_to_quotient(T, prof.O_p_prime, G)
        )
    return Verdict("blocks", G.label, prof.p, clauses, {
        "blocks": [list(b) for b in blocks.blocks],
        "principal_degrees": [T.degrees[r] for r in blocks.principal],
    })


def verify_theorem_energy(G, p):
    a = analyze(G, p)
    prof, report, T, blocks = a.profile, a.report, a.table, a.blocks
    if not is_p_solvable(G, prof.p):
        raise NotPSolvable(f"{G.label} is not {prof.p}-solvable")
    n = G.order
    principal_size = len(blocks.principal)
    clauses = {
        "nullity": report.nullity == n - prof.r_p,
        "integral": all(isinstance(v, int) for v, _ in report.eigs) and all(
            s == v * d for s, v, d in zip(character_sums(T, prof), report.row_eigenvalues, T.degrees)
        ),
        "energy_additive_bound": report.energy >= report.bound_additive,
        "energy_sqrt_bound": report.energy ** 2 >= n * prof.d_p + prof.r_p * (prof.r_p - 1),
        "diameter": report.diameter <= prof.order_p,
        "principal_block_size": principal_size <= prof.order_p,
        "diameter_le_principal_block": report.diameter <= principal_size,
        "energy_identity": energy_via_principal_block(T, prof, blocks) == report.energy,
    }
    return Verdict("theorem_energy", G.label, prof.p, clauses, {
        "nullity": report.nullity,
        "r_p": prof.r_p,
        "energy": report.energy,
        "bound_additive": report.bound_additive,
        "bound_sqrt": report.bound_sqrt,
        "diameter": report.diameter,
        "order_p": prof.order_p,
        "principal_block_size": principal_size,
    })


def nil_hypothesis(G, p):
    """G p-solvable and G/O_p'(G) a p-group or Frobenius with p-group kernel."""
    if not is_p_solvable(G, p):
        return False
    Q = quotient(G, p_prime_core(G, p))
    return is_p_power(Q.order, p) or is_frobenius_with_p_kernel(Q, p)


def verify_theorem_nil(G, p):
    p = check_prime(p)
    if not nil_hypothesis(G, p):
        raise HypothesisNotMet(f"{G.label}/O_{p}'({G.label}) is neither a {p}-group nor Frobenius with {p}-kernel")
    a = analyze(G, p)
    prof, report = a.profile, a.report
    n = G.order
    expected = 2 * n - 2 * prof.order_p_prime
    clauses = {
        "energy": report.energy == expected,
        "non_hyperenergetic": not report.hyperenergetic,
        "structure": (
            prof.d_p == prof.H_p.order - prof.O_p_prime.order
            and prof.H_p.order == prof.order_p * prof.O_p_prime.order
        ),
    }
    return Verdict("theorem_nil", G.label, p, clauses, {
        "energy": report.energy,
        "expected": expected,
        "d_p": prof.d_p,
        "H_p": prof.H_p.order,
        "O_p_prime": prof.O_p_prime.order,
    })


def verify_singularity_predicates(G, p):
    """Each hypothesis that holds must force a singular graph."""
    a = analyze(G, p)
    p = a.profile.p
    hypotheses = {
        "nilpotent_not_p_group": lambda: is_nilpotent(G) and not is_p_power(G.order, p),
        "fitting_not_p_group": lambda: not is_p_power(fitting_subgroup(G).order, p),
        "odd_p_trivial_p_core": lambda: p % 2 == 1 and p_core(G, p).is_trivial(),
        "simple_odd_p": lambda: p % 2 == 1 and is_simple(G) and not is_abelian(G),
    }
    checks = []
    for name, holds in hypotheses.items():
        held = holds()
        checks.append((name, held, a.report.singular if held else None))
    clauses = {name: (not held) or verified for name, held, verified in checks}
    return Verdict("singularity_predicates", G.label, p, clauses, {"checks": checks})


def verify_corollary_solvable(G):
    if not is_solvable(G):
        raise NotSolvable(f"{G.label} is not solvable")
    nonsingular = [q for q in primefactors(G.order) if not analyze(G, q).report.singular]
    return Verdict("corollary_solvable", G.label, None,
                   {"at_most_one_nonsingular": len(nonsingular) <= 1},
                   {"nonsingular_primes": nonsingular})


def verify_corollary_large(G, cap=ORDER_CAP):
    P = direct_product(G, build_group("C6"), cap=cap)
    singular = {q: analyze(P, q).report.singular for q in primefactors(P.order)}
    return Verdict("corollary_large", G.label, None,
                   {f"singular_p{q}": s for q, s in singular.items()},
                   {"product_order": P.order})


def verify_diameter_conjecture(G, p):
    a = analyze(G, p)
    return Verdict("diameter_conjecture", G.label, a.profile.p,
                   {"diameter": a.report.diameter <= a.profile.order_p},
                   {"diameter": a.report.diameter, "order_p": a.profile.order_p})


def verify_oracle(G, p, tol=EIGEN_TOL, cap=ORACLE_CAP):
    """Compare the character spectrum with the dense adjacency matrix."""
    a = analyze(G, p)
    prof, report = a.profile, a.report
    A = build_adjacency(G, prof, cap=cap)
    numeric = symmetric_eigenvalues(A, tol)
    count, diameters = components_and_diameter(A)
    exact = expand(report.eigs)
    top = max(numeric)
    clauses = {
        "regular": bool((A.degrees() == prof.d_p).all()),
        "edge_count": 2 * A.edge_count == G.order * prof.d_p,
        "spectrum": compare_spectra(exact, numeric, tol),
        "top_eigenvalue": abs(top - prof.d_p) <= tol and sum(abs(x - top) <= tol for x in numeric) == prof.c_p,
        "nullity": zero_count(numeric, tol) == report.nullity,
        "components": count == prof.c_p,
        "diameters": all(d == report.diameter for d in diameters),
    }
    return Verdict("oracle", G.label, prof.p, clauses, {
        "components": count,
        "diameters": diameters,
        "max_abs_error": max(abs(x - y) for x, y in zip(exact, sorted(numeric))),
    })


# --- Serialization ---

def report_dict(G, p, verdicts=()):
    """Stable-order JSON-ready summary of one (G, p) analysis."""
    a = analyze(G, p)
    prof, report = a.profile, a.report
    return {
        "group": G.label,
        "order": G.order,
        "prime": prof.p,
        "d_p": prof.d_p,
        "c_p": prof.c_p,
        "r_p": prof.r_p,
        "order_p": prof.order_p,
        "eigs": [[v, m] for v, m in report.eigs],
        "nullity": report.nullity,
        "energy": report.energy,
        "bound_additive": report.bound_additive,
        "bound_sqrt": report.bound_sqrt,
        "diameter_per_component": report.diameter,
        "singular": report.singular,
        "hyperenergetic": report.hyperenergetic,
        "blocks": [list(b) for b in a.blocks.blocks],
        "principal_block": list(a.blocks.principal),
        "verdicts": {v.name: v.to_dict() for v in verdicts},
    }
