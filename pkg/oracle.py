"""Brute-force ground truth for Cayley graph spectra.

Dense adjacency matrices, a LAPACK symmetric eigensolver, networkx components and
diameters. Nothing here uses characters, so it can check the exact side.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import networkx as nx
import numpy as np

from errors import CardinalityMismatch, ConvergenceFailure, DimensionCap
from settings import EIGEN_TOL, ORACLE_CAP

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdjacencyMatrix:
    n: int
    bits: np.ndarray

    @property
    def edge_count(self):
        return int(self.bits.sum()) // 2

    def degrees(self):
        return self.bits.sum(axis=1)


def build_adjacency(G, prof, cap=ORACLE_CAP):
    """A[u, v] = 1 iff v * u^-1 lies in the connection set prof.members."""
    if G.order > cap:
        raise DimensionCap(f"|G| = {G.order} exceeds the oracle cap {cap}")
    in_set = np.zeros(G.order, dtype=bool)
    in_set[list(prof.members)] = True
    # quotients[v, u] = v * u^-1
    quotients = G.table[:, G.inverse]
    bits = in_set[quotients].T.astype(np.uint8)
    bits.setflags(write=False)
    return AdjacencyMatrix(G.order, bits)


def symmetric_eigenvalues(A, tol=EIGEN_TOL):
    """All eigenvalues in ascending order, checked against trace identities."""
    dense = A.bits.astype(np.float64)
    if not np.array_equal(dense, dense.T):
        raise ValueError("adjacency matrix is not symmetric")
    try:
        eigs = np.linalg.eigvalsh(dense)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    n = A.n
    if abs(eigs.sum()) > n * tol:
        raise ConvergenceFailure(f"eigenvalue sum {eigs.sum():.3g} should vanish")
    if abs((eigs ** 2).sum() - 2 * A.edge_count) > max(1.0, n) * tol * max(1.0, np.abs(eigs).max()):
        raise ConvergenceFailure("sum of squared eigenvalues differs from twice the edge count")
    logger.debug("eigvalsh on %d vertices: range [%.6g, %.6g]", n, eigs[0], eigs[-1])
    return sorted(float(x) for x in eigs)


def components_and_diameter(A):
    """(component count, per-component diameters) ordered by least vertex."""
    graph = nx.from_numpy_array(A.bits)
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    diameters = [nx.diameter(graph.subgraph(c)) for c in components]
    return len(components), diameters


def cayley_eccentricity(G, members):
    """(component size, eccentricity) of the identity in Cay(G, members).

    The graph is vertex-transitive, so this is the diameter of every component.
    """
    connection = np.asarray(sorted(members), dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.int64)
    ecc = 0
    while connection.size:
        reached = np.unique(G.table[np.ix_(connection, frontier)])
        fresh = reached[~seen[reached]]
        if not fresh.size:
            break
        seen[fresh] = True
        frontier = fresh
        ecc += 1
    return int(seen.sum()), ecc


def expand(eigs):
    """[(value, multiplicity), ...] -> sorted flat list."""
    return sorted(v for v, m in eigs for _ in range(m))


def compare_spectra(exact, numeric, tol=EIGEN_TOL):
    if len(exact) != len(numeric):
        raise CardinalityMismatch(f"{len(exact)} exact vs {len(numeric)} numeric eigenvalues")
    return all(abs(a - b) <= tol for a, b in zip(sorted(exact), sorted(numeric)))


def zero_count(numeric, tol=EIGEN_TOL):
    return sum(1 for x in numeric if abs(x) <= tol)


# --- Regression fixtures: packed bitset files ---

def dump_adjacency(A, path):
    """uint32 little-endian n, then the n*n bits row-major, LSB-first."""
    packed = np.packbits(A.bits.ravel(), bitorder="little")
    with Path(path).open("wb") as fh:
        fh.write(np.uint32(A.n).astype("<u4").tobytes())
        fh.write(packed.tobytes())


def load_adjacency(path):
    raw = Path(path).read_bytes()
    n = int(np.frombuffer(raw[:4], dtype="<u4")[0])
    bits = np.unpackbits(np.frombuffer(raw[4:], dtype=np.uint8), bitorder="little")[: n * n]
    return AdjacencyMatrix(n, bits.reshape(n, n).astype(np.uint8))
