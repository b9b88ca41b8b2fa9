"""Brute-force oracles: minimum distance, MDS check, nearest-codeword decoding.

Codewords are enumerated in row-major canonical message order. The last
rows of G are expanded into one field array holding every combination of
them, and every prefix of the message adds its partial sum to that block.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator

import galois
import numpy as np

from mdsfec.code import linalg
from mdsfec.code.linalg import Matrix, Vector
from mdsfec.code.mdscode import CodeSpec
from mdsfec.errors import CodeRangeError, LengthMismatchError, OracleLimitError
from mdsfec.field.gf import FieldSpec

DISTANCE_LIMIT = 10**7
DECODE_LIMIT = 10**6

# upper bound on the size of one enumerated block
_BLOCK = 1 << 16


def weight(v: Vector) -> int:
    return sum(1 for x in v if x)


def distance(u: Vector, v: Vector) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def _messages(q: int, length: int) -> np.ndarray:
    combos = list(itertools.product(range(q), repeat=length))
    return np.array(combos, dtype=np.int64).reshape(-1, length)


def _iter_codewords(f: FieldSpec, g: Matrix) -> Iterator[tuple[bool, galois.FieldArray]]:
    """Yield (is_first_block, block) over all q^r codewords.

    The first block starts with the zero codeword.
    """
    q, r = f.order, len(g)
    n = len(g[0])
    h = 1
    while h < r and q ** (h + 1) <= _BLOCK:
        h += 1
    tail = f.array(_messages(q, h)) @ f.array(g[r - h :])
    head_rows = f.array(g[: r - h]) if r > h else None
    first = True
    for head in itertools.product(range(q), repeat=r - h):
        if head_rows is None:
            base = f.array([0] * n)
        else:
            base = (f.array([list(head)]) @ head_rows)[0]
        yield first, tail + base
        first = False


def min_distance(f: FieldSpec, g: Matrix, limit: int = DISTANCE_LIMIT) -> int:
    """Minimum Hamming weight of u . G over all non-zero messages u.

    Either enumerates the q^r codewords or searches for the smallest set of
    dependent columns in a parity-check matrix, whichever is less work. A
    rank-deficient G has a non-zero message mapping to 0 and yields 0.
    """
    if not g or not g[0]:
        raise CodeRangeError("generator matrix is empty")
    r, n = len(g), len(g[0])
    if linalg.rank(f, g) < r:
        return 0
    enum_work = f.order**r
    dual_work = sum(comb(n, w) for w in range(1, n - r + 2))
    if min(enum_work, dual_work) > limit:
        raise OracleLimitError(
            f"q^r = {enum_work} codewords and {dual_work} column sets both exceed {limit}"
        )
    if enum_work <= dual_work:
        return _min_distance_enum(f, g)
    return _min_distance_dual(f, g)


def _min_distance_enum(f: FieldSpec, g: Matrix) -> int:
    best = len(g[0])
    for first, block in _iter_codewords(f, g):
        weights = np.count_nonzero(block.view(np.ndarray), axis=1)
        if first:
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def _min_distance_dual(f: FieldSpec, g: Matrix) -> int:
    r, n = len(g), len(g[0])
    h = linalg.nullspace(f, g, n)
    for w in range(1, n - r + 1):
        for cols in itertools.combinations(range(n), w):
            sub = [[row[c] for c in cols] for row in h]
            if linalg.rank(f, sub) < w:
                return w
    return n - r + 1


def is_mds_generator(f: FieldSpec, g: Matrix, limit: int = DISTANCE_LIMIT) -> bool:
    n, r = len(g[0]), len(g)
    return min_distance(f, g, limit) == n - r + 1


def is_mds(c: CodeSpec, limit: int = DISTANCE_LIMIT) -> bool:
    return is_mds_generator(c.field, c.generator, limit)


def oracle_decode(c: CodeSpec, w: Vector, limit: int = DECODE_LIMIT) -> Vector | None:
    """The codeword within distance t of w, found by enumeration; None if none."""
    f = c.field
    if len(w) != c.n:
        raise LengthMismatchError(f"received word needs {c.n} symbols, got {len(w)}")
    if f.order**c.r > limit:
        raise OracleLimitError(f"q^r = {f.order ** c.r} codewords exceed {limit}")
    target = f.array(w).view(np.ndarray)
    for _, block in _iter_codewords(f, c.generator):
        dist = np.count_nonzero(block.view(np.ndarray) != target, axis=1)
        hits = np.flatnonzero(dist <= c.t)
        if hits.size:
            return linalg.to_list(block[hits[0]])
    return None
