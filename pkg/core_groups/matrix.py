"""
Groups of invertible matrices over Q with exact Fraction entries
Covers Z^d, Z/N, the Heisenberg group, BS(1,q) and user matrix files.
"""
import json
import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from core_groups.base import GroupRealization
from shared.errors import SpecValueError

logger = logging.getLogger("MatrixRealization")

Matrix = Tuple[Tuple[Fraction, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(entry) for entry in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(e.numerator, e.denominator) for e in row] for row in m])


def _from_sympy(m: sympy.Matrix) -> Matrix:
    return tuple(
        tuple(Fraction(int(e.p), int(e.q)) for e in m.row(i))
        for i in range(m.rows)
    )


class MatrixRealization(GroupRealization):
    kind = "matrix"

    def __init__(self, name: str, generators: Sequence[Matrix], names: Sequence[str]):
        if not generators:
            raise SpecValueError("matrix realization needs at least one generator")
        size = len(generators[0])
        for index, g in enumerate(generators):
            if len(g) != size or any(len(row) != size for row in g):
                raise SpecValueError(f"generator {index} is not a {size}x{size} matrix")
            if _to_sympy(g).det() == 0:
                raise SpecValueError(f"generator {index} is singular")
        self.size = size
        super().__init__(name, names, [as_matrix(g) for g in generators])

    def _identity_payload(self) -> Matrix:
        return identity_matrix(self.size)

    def _mul(self, p: Matrix, q: Matrix) -> Matrix:
        prod = np.dot(np.array(p, dtype=object), np.array(q, dtype=object))
        return tuple(tuple(Fraction(e) for e in row) for row in prod)

    def _inv(self, p: Matrix) -> Matrix:
        return _from_sympy(_to_sympy(p).inv())

    def _key(self, p: Matrix) -> bytes:
        return ("M|" + ";".join(",".join(str(e) for e in row) for row in p)).encode()


# ────────────────────────────────────────────────────────────────────────
# BUILT-IN MATRIX FAMILIES
# ────────────────────────────────────────────────────────────────────────
def lattice_generators(d: int) -> List[Matrix]:
    """Z^d as unipotent translations of size d+1"""
    gens = []
    for i in range(d):
        rows = [[int(r == c) for c in range(d + 1)] for r in range(d + 1)]
        rows[i][d] = 1
        gens.append(as_matrix(rows))
    return gens


def cyclic_generator(n: int) -> Matrix:
    """Z/n as the n-cycle permutation matrix (n = 1 gives the trivial group)"""
    return as_matrix([[int(c == (r + 1) % n) for c in range(n)] for r in range(n)])


def heisenberg_generators() -> List[Matrix]:
    x = as_matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    y = as_matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    return [x, y]


def baumslag_solitar_generators(p: int, q: int) -> List[Matrix]:
    """BS(1,q) as the affine maps x -> x+1 and x -> qx"""
    if p != 1:
        raise SpecValueError(f"only BS(1,q) has a faithful rational matrix realization, got BS({p},{q})")
    if abs(q) < 2:
        raise SpecValueError(f"BS(1,q) needs |q| >= 2, got q={q}")
    a = as_matrix([[1, 1], [0, 1]])
    t = as_matrix([[q, 0], [0, 1]])
    return [a, t]


def load_matrix_file(path: str) -> List[Matrix]:
    """JSON {"generators": [matrix, ...]}; a matrix is a list of rows or a flat
    row-major list, entries are rationals written as strings ("3/2", "-1")."""
    file_path = Path(path)
    try:
        with open(file_path) as f:
            data = json.load(f)
    except FileNotFoundError:
        raise SpecValueError(f"matrix file not found: {file_path}")
    except json.JSONDecodeError as e:
        raise SpecValueError(f"matrix file {file_path} is not valid JSON: {e}")

    raw_generators = data.get("generators") if isinstance(data, dict) else None
    if not raw_generators:
        raise SpecValueError(f"matrix file {file_path} has no 'generators' list")

    generators = []
    for index, raw in enumerate(raw_generators):
        if raw and all(isinstance(row, list) for row in raw):
            rows = raw
        else:
            n = math.isqrt(len(raw))
            if n * n != len(raw):
                raise SpecValueError(f"generator {index}: {len(raw)} entries is not a square matrix")
            rows = [raw[r * n:(r + 1) * n] for r in range(n)]
        try:
            generators.append(tuple(tuple(Fraction(str(e)) for e in row) for row in rows))
        except (ValueError, ZeroDivisionError) as e:
            raise SpecValueError(f"generator {index}: bad rational entry ({e})")
    logger.debug(f"Loaded {len(generators)} generators from {file_path}")
    return generators
