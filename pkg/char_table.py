"""Exact ordinary character tables (Burnside-Dixon method).

Class-sum matrices are simultaneously diagonalized over GF(l) for a prime
l = 1 mod exp(G), l > 2|G|. Each modular character is then lifted to exact
cyclotomic values by recovering eigenvalue multiplicities of rho(g) with a
discrete Fourier transform over the powers of g, and the finished table is
certified by exact orthogonality.
"""

import json
import logging
import time
from dataclasses import dataclass

import numpy as np
from sympy import GF, Poly, Symbol, isprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from cyclotomic import CyclotomicInt, cyclotomic_sum
from errors import CertificationFailed
from group_core import (
    class_lookup,
    conjugacy_classes,
    exponent,
    inverse_class_map,
    power_classes,
)

logger = logging.getLogger(__name__)


# --- Class algebra ---

@dataclass(frozen=True)
class ClassAlgebra:
    """constants[i, j, k] = #{(x, y) in K_i x K_j : xy = z} for a fixed z in K_k."""
    constants: np.ndarray

    @property
    def size(self):
        return self.constants.shape[0]


def class_constants(G, classes=None):
    classes = classes if classes is not None else conjugacy_classes(G)
    lookup = class_lookup(G)
    r = len(classes)
    constants = np.zeros((r, r, r), dtype=np.int64)
    xs = np.arange(G.order)
    for k, cls in enumerate(classes):
        # y = x^-1 z, so that x*y = z
        ys = G.table[G.inverse, cls.representative]
        np.add.at(constants, (lookup[xs], lookup[ys], k), 1)
    return ClassAlgebra(constants)


# --- Modular linear algebra ---

def splitting_prime(order, exp):
    """Smallest prime l > 2|G| with l = 1 (mod exp)."""
    ell = (2 * order // exp) * exp + 1
    while ell <= 2 * order or not isprime(ell):
        ell += exp
    return ell


def _left_eigenspaces(C, Fp):
    """Rows u with u*C = z*u, one basis matrix per eigenvalue z in GF(l)."""
    d = C.shape[0]
    charpoly = Poly(C.charpoly(), Symbol("x"), domain=Fp)
    roots = sorted((int(z) % Fp.mod for z in charpoly.ground_roots()))
    spaces = []
    for z in roots:
        shifted = C - DomainMatrix.diag([Fp(z)] * d, Fp)
        spaces.append(shifted.transpose().nullspace())
    return spaces


def _common_eigenvectors(algebra, Fp):
    """Row vectors v with v * M_i^T = w_i v for every class-sum matrix M_i."""
    r = algebra.size
    spaces = [DomainMatrix.eye(r, Fp)]
    for i in range(1, r):
        if len(spaces) == r:
            break
        B = DomainMatrix.from_list(algebra.constants[i].T.tolist(), Fp)
        refined = []
        for S in spaces:
            if S.shape[0] == 1:
                refined.append(S)
                continue
            S, pivots = S.rref()
            C = (S * B).extract(list(range(S.shape[0])), list(pivots))
            for U in _left_eigenspaces(C, Fp):
                refined.append((U * S).rref()[0])
        spaces = refined
    if len(spaces) != r or any(S.shape[0] != 1 for S in spaces):
        raise CertificationFailed(f"class sums did not split into {r} eigenlines mod {Fp.mod}")
    return [[int(v) % Fp.mod for v in S.to_list()[0]] for S in spaces]


# --- Character table ---

@dataclass(frozen=True)
class CharacterTable:
    values: tuple
    degrees: tuple
    class_sizes: tuple
    class_orders: tuple
    inverse_classes: tuple
    exponent: int

    @property
    def order(self):
        return sum(self.class_sizes)

    @property
    def num_classes(self):
        return len(self.class_sizes)

    def value(self, row, cls):
        return self.values[row][cls]

    def class_sum(self, row, class_indices):
        """Sum over the listed classes of |K| * chi(x_K), exactly."""
        e = self.exponent
        return cyclotomic_sum((self.values[row][k] * self.class_sizes[k] for k in class_indices), e)

    def inner(self, r, s, class_indices=None):
        """Sum over listed classes of |K| chi_r(x_K) chi_s(x_K^-1)."""
        if class_indices is None:
            class_indices = range(self.num_classes)
        e = self.exponent
        return cyclotomic_sum(
            (self.values[r][k] * self.values[s][self.inverse_classes[k]] * self.class_sizes[k]
             for k in class_indices),
            e,
        )

    def numeric(self):
        return np.array([[complex(v) for v in row] for row in self.values])

    def to_json(self):
        return json.dumps({
            "exponent": self.exponent,
            "class_orders": list(self.class_orders),
            "class_sizes": list(self.class_sizes),
            "inverse_classes": list(self.inverse_classes),
            "degrees": list(self.degrees),
            "values": [[list(v.coeffs) for v in row] for row in self.values],
        })

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        e = data["exponent"]
        values = tuple(tuple(CyclotomicInt(e, tuple(v)) for v in row) for row in data["values"])
        return cls(
            values=values,
            degrees=tuple(data["degrees"]),
            class_sizes=tuple(data["class_sizes"]),
            class_orders=tuple(data["class_orders"]),
            inverse_classes=tuple(data["inverse_classes"]),
            exponent=e,
        )


def _normalized_rows(vectors, class_sizes, inverse_classes, order, ell):
    """Scale eigenvectors w (w_0 = 1) to modular character values chi(x_K)."""
    rows = []
    for w in vectors:
        scale = pow(w[0], -1, ell)
        w = [x * scale % ell for x in w]
        ratios = [w[k] * pow(class_sizes[k], -1, ell) % ell for k in range(len(w))]
        norm = sum(class_sizes[k] * ratios[k] * ratios[inverse_classes[k]] for k in range(len(w))) % ell
        degree_sq = order * pow(norm, -1, ell) % ell
        root = sqrt_mod(degree_sq, ell)
        if root is None:
            raise CertificationFailed(f"chi(1)^2 = {degree_sq} has no square root mod {ell}")
        root = min(int(root), ell - int(root))
        rows.append([r * root % ell for r in ratios])
    return rows


def _lift_row(row, power_lists, e, ell, zeta):
    """Exact value of a modular character at each class via eigenvalue multiplicities."""
    lifted = []
    for powers in power_lists:
        o = len(powers)
        step = e // o
        root_o = pow(zeta, step, ell)
        inv_o = pow(o, -1, ell)
        coeffs = [0] * e
        for m in range(o):
            # multiplicity of the eigenvalue zeta_o^m of rho(x_K)
            twist = pow(root_o, (-m) % o, ell)
            total = sum(row[powers[j]] * pow(twist, j, ell) for j in range(o)) % ell
            coeffs[m * step] = total * inv_o % ell
        lifted.append(CyclotomicInt.from_vector(e, coeffs))
    return lifted


def certify(T):
    """Exact row/column orthogonality, sum of squared degrees, and zero row sums."""
    n = T.order
    r = T.num_classes
    if T.degrees[0] != 1 or any(not v.is_rational() or v.to_int() != 1 for v in T.values[0]):
        raise CertificationFailed("row 0 is not the principal character")
    if sum(d * d for d in T.degrees) != n:
        raise CertificationFailed("sum of squared degrees differs from |G|")
    for a in range(r):
        for b in range(r):
            ip = T.inner(a, b)
            if not ip.is_rational() or ip.to_int() != (n if a == b else 0):
                raise CertificationFailed(f"rows {a} and {b} are not orthonormal")
    for i in range(r):
        for j in range(r):
            col = cyclotomic_sum(
                (T.values[s][i] * T.values[s][T.inverse_classes[j]] for s in range(r)), T.exponent
            )
            expected = n // T.class_sizes[i] if i == j else 0
            if not col.is_rational() or col.to_int() != expected:
                raise CertificationFailed(f"columns {i} and {j} are not orthogonal")
    for s in range(1, r):
        if not T.class_sum(s, range(r)).is_zero():
            raise CertificationFailed(f"row {s} does not sum to zero over G")


def character_table(G):
    """Irr(G), rows sorted by (degree, values) with the principal character first."""
    if "char_table" in G._memo:
        return G._memo["char_table"]
    started = time.perf_counter()
    classes = conjugacy_classes(G)
    r = len(classes)
    e = exponent(G)
    sizes = [c.size for c in classes]
    inverse_classes = inverse_class_map(G)
    ell = splitting_prime(G.order, e)
    Fp = GF(ell)

    vectors = _common_eigenvectors(class_constants(G, classes), Fp)
    modular = _normalized_rows(vectors, sizes, inverse_classes, G.order, ell)
    zeta = pow(int(primitive_root(ell)), (ell - 1) // e, ell)
    power_lists = [power_classes(G, k) for k in range(r)]
    rows = [_lift_row(row, power_lists, e, ell, zeta) for row in modular]

    def degree_of(row):
        return row[0].to_int() if row[0].is_rational() else -1

    rows.sort(key=lambda row: (degree_of(row), [v.coeffs for v in row]))
    principal = next(i for i, row in enumerate(rows) if all(v.is_rational() and v.to_int() == 1 for v in row))
    rows.insert(0, rows.pop(principal))

    table = CharacterTable(
        values=tuple(tuple(row) for row in rows),
        degrees=tuple(degree_of(row) for row in rows),
        class_sizes=tuple(sizes),
        class_orders=tuple(c.element_order for c in classes),
        inverse_classes=tuple(inverse_classes),
        exponent=e,
    )
    certify(table)
    logger.info(
        "%s: character table with %d classes, exponent %d, l = %d (%.2fs)",
        G.label or "group", r, e, ell, time.perf_counter() - started,
    )
    G._memo["char_table"] = table
    return table


def kernel_contains(T, row, class_indices):
    return all(T.values[row][k] == T.values[row][0] for k in class_indices)


def restrict_to_quotient(T, N, G):
    """Rows whose kernel contains N: the characters of G/N inflated to G."""
    lookup = class_lookup(G)
    touched = sorted({int(lookup[n]) for n in N.member_indices})
    return [row for row in range(T.num_classes) if kernel_contains(T, row, touched)]
