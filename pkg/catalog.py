"""Named groups with standard permutation generators."""

import re

from errors import UnknownGroupName
from group_core import Permutation, enumerate_group
from settings import ORDER_CAP

_FAMILY = re.compile(r"^([CDSA])(\d+)$")

# Fixed small groups, 0-based cycle notation.
_SPECIAL = {
    "V4": ([[0, 1], [2, 3]], [[0, 2], [1, 3]]),
    "Q8": ([[0, 1, 2, 3], [4, 5, 6, 7]], [[0, 4, 2, 6], [1, 7, 3, 5]]),
    # elementary matrices acting on the nonzero vectors of F_3^2
    "SL23": ([[0, 3, 6], [1, 7, 4]], [[2, 3, 4], [5, 7, 6]]),
    # x -> x+1 and x -> 2x on Z/7
    "F21": ([[0, 1, 2, 3, 4, 5, 6]], [[1, 2, 4], [3, 6, 5]]),
    # x -> x+1 and x -> 2x on Z/5
    "F20": ([[0, 1, 2, 3, 4]], [[1, 2, 4, 3]]),
    "A4xC2": ([[0, 1, 2]], [[0, 1], [2, 3]], [[4, 5]]),
}

_ALIASES = {"SL(2,3)": "SL23", "C7:C3": "F21", "C5:C4": "F20", "D4": "V4"}

_LIMITS = {"C": 30, "S": 6, "A": 6}


def _cycle_gens(*gens):
    degree = max((pt for g in gens for c in g for pt in c), default=0) + 1
    return [Permutation.from_cycles(g, degree) for g in gens]


def _cyclic(n):
    if n == 1:
        return [Permutation.identity(1)]
    return _cycle_gens([list(range(n))])


def _dihedral(n):
    reflection = [[i, n - i] for i in range(1, (n + 1) // 2) if i != n - i]
    return _cycle_gens([list(range(n))], reflection)


def _symmetric(n):
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return _cycle_gens([[0, 1]])
    return _cycle_gens([list(range(n))], [[0, 1]])


def _alternating(n):
    if n < 3:
        return [Permutation.identity(n)]
    return _cycle_gens(*[[[0, 1, k]] for k in range(2, n)])


def canonical_name(name):
    name = _ALIASES.get(name, name)
    if name in _SPECIAL:
        return name
    match = _FAMILY.match(name)
    if not match:
        raise UnknownGroupName(f"unknown group {name!r}")
    family, n = match.group(1), int(match.group(2))
    if family == "D":
        if n % 2 or not 6 <= n <= 30:
            raise UnknownGroupName(f"dihedral groups are D6..D30 (order 2n), got {name!r}")
    elif not 1 <= n <= _LIMITS[family]:
        raise UnknownGroupName(f"{family}n is available for n <= {_LIMITS[family]}, got {name!r}")
    return f"{family}{n}"


def catalog(name):
    """Generators for a catalog group, e.g. 'S4', 'C6', 'D8', 'F21'."""
    name = canonical_name(name)
    if name in _SPECIAL:
        return _cycle_gens(*_SPECIAL[name])
    family, n = name[0], int(name[1:])
    if family == "C":
        return _cyclic(n)
    if family == "D":
        return _dihedral(n // 2)
    if family == "S":
        return _symmetric(n)
    return _alternating(n)


def catalog_names():
    names = [f"C{n}" for n in range(1, 31)]
    names += [f"D{2 * n}" for n in range(3, 16)]
    names += [f"S{n}" for n in range(1, 7)]
    names += [f"A{n}" for n in range(1, 7)]
    names += list(_SPECIAL)
    return names


def build_group(name, cap=ORDER_CAP):
    name = canonical_name(name)
    return enumerate_group(catalog(name), cap=cap, label=name)
