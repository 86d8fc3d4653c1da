"""Shared test utilities: independent oracles and full-matrix algebra.

The rank oracle here deliberately avoids Gaussian elimination: it finds
the largest nonzero minor by permutation-expansion determinants, so it
shares no code path with the implementation it checks.  Only usable for
small orders.
"""

from itertools import combinations, permutations

from symrank.gf import Field, build_base_field
from symrank.counting import prime_power_decomposition
from symrank.matspace import SymMatrix
from symrank.codes import SymCode, codewords
from symrank.matspace import distance


def field_for(q: int) -> Field:
    p, e = prime_power_decomposition(q)
    return build_base_field(p, e)


def naive_det(fld: Field, rows: list[list[int]]) -> int:
    """Determinant by permutation expansion, as an element index."""
    n = len(rows)
    det = 0
    for perm in permutations(range(n)):
        term = 1
        for i in range(n):
            term = fld.mul_i(term, rows[i][perm[i]])
            if term == 0:
                break
        if term == 0:
            continue
        if _parity(perm) == 0:
            det = fld.add_i(det, term)
        else:
            det = fld.sub_i(det, term)
    return det


def _parity(perm) -> int:
    seen = [False] * len(perm)
    odd = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        odd ^= (length - 1) & 1
    return odd


def naive_rank(M: SymMatrix) -> int:
    """Largest r with a nonzero r x r minor."""
    fld = M.field
    m = M.m
    full = M.to_rows_idx()
    best = 0
    for r in range(1, m + 1):
        found = False
        for rs in combinations(range(m), r):
            for cs in combinations(range(m), r):
                sub = [[full[i][j] for j in cs] for i in rs]
                if naive_det(fld, sub):
                    found = True
                    break
            if found:
                break
        if not found:
            break
        best = r
    return best


def pairwise_min_distance(C: SymCode) -> int:
    """Minimum distance straight from the definition, all pairs."""
    words = list(codewords(C))
    best = C.m + 1
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            d = distance(a, b)
            if d < best:
                best = d
    return best


# --- full (not necessarily symmetric) matrix algebra over index rows -------


def matmul(fld: Field, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    n = len(A)
    k = len(B[0])
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        for j in range(k):
            acc = 0
            for s in range(len(B)):
                acc = fld.add_i(acc, fld.mul_i(A[i][s], B[s][j]))
            out[i][j] = acc
    return out


def transpose(A: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*A)]


def random_invertible(fld: Field, n: int, rng) -> list[list[int]]:
    from symrank.matspace import _rank_rows

    while True:
        A = [[rng.randrange(fld.cardinality) for _ in range(n)] for _ in range(n)]
        if _rank_rows(fld, [row[:] for row in A]) == n:
            return A


def congruent(fld: Field, M: SymMatrix, P: list[list[int]]) -> SymMatrix:
    """P^T M P as a symmetric matrix."""
    G = matmul(fld, matmul(fld, transpose(P), M.to_rows_idx()), P)
    return SymMatrix.from_entries(fld, G)
