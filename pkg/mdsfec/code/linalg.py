"""Dense linear algebra over a FieldSpec.

Vectors and matrices cross module boundaries as lists of canonical
integers; the arithmetic runs on `galois` field arrays.
"""

from __future__ import annotations

import galois
import numpy as np

from mdsfec.errors import LengthMismatchError
from mdsfec.field.gf import FieldSpec

Vector = list[int]
Matrix = list[list[int]]


def to_list(a: galois.FieldArray) -> list:
    """Canonical integers of a field array, nested like its shape."""
    return a.view(np.ndarray).tolist()


def dot(f: FieldSpec, u: Vector, v: Vector) -> int:
    if len(u) != len(v):
        raise LengthMismatchError(f"cannot dot vectors of length {len(u)} and {len(v)}")
    if not u:
        return 0
    return int(np.add.reduce(f.array(u) * f.array(v)))


def vec_mat(f: FieldSpec, v: Vector, m: Matrix) -> Vector:
    """Row vector times matrix."""
    if len(v) != len(m):
        raise LengthMismatchError(f"vector of length {len(v)} against {len(m)} matrix rows")
    if not m or not m[0]:
        return []
    return to_list(f.array([v]) @ f.array(m))[0]


def mat_mul(f: FieldSpec, a: Matrix, b: Matrix) -> Matrix:
    if not a or not b or not b[0]:
        return [[] for _ in a]
    return to_list(f.array(a) @ f.array(b))


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def vec_sub(f: FieldSpec, u: Vector, v: Vector) -> Vector:
    return to_list(f.array(u) - f.array(v))


def vec_mul(f: FieldSpec, u: Vector, v: Vector) -> Vector:
    """Entrywise product."""
    return to_list(f.array(u) * f.array(v))


def vec_scale(f: FieldSpec, v: Vector, c: int) -> Vector:
    if not v:
        return []
    return to_list(f.array(v) * f.gf(c))


def rank(f: FieldSpec, m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return int(np.linalg.matrix_rank(f.array(m)))


def nullspace(f: FieldSpec, m: Matrix, cols: int) -> Matrix:
    """Basis (as rows, row-reduced) of {x : m x = 0}."""
    if not m:
        return identity(cols)
    return to_list(f.array(m).null_space())


def kernel_vector(f: FieldSpec, m: Matrix, cols: int) -> Vector | None:
    """The first row of the row-reduced kernel basis; None if the kernel is trivial."""
    basis = nullspace(f, m, cols)
    return basis[0] if basis else None


def solve(f: FieldSpec, a: Matrix, b: Vector) -> Vector | None:
    """Unique solution of the square system a y = b, or None if singular."""
    n = len(a)
    if rank(f, a) < n:
        return None
    y = np.linalg.inv(f.array(a)) @ f.array(b).reshape(n, 1)
    return to_list(y[:, 0])
