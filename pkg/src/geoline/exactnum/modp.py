"""Certified multi-modular kernel pipeline.

Strategy for a large integer (or integer-scalable) system A x = 0:

1. Reduce A modulo a structure prime, record rank r, pivot columns and
   an independent row subset.  The kernel modulo that prime follows from
   the reduced rows.
2. Repeat modulo further primes, but only on the selected independent
   rows (the kernel of the subset contains the kernel of A).  Primes
   whose pivot structure disagrees are discarded as unlucky.
3. Combine residues by CRT and lift each entry to a rational with the
   half-extended Euclid bound.
4. Verify A @ v = 0 for every lifted vector by exact integer
   multiplication.

Soundness does not depend on the primes: rank mod p never exceeds the
rational rank, so cols - r is an upper bound for the kernel dimension,
and step 4 exhibits that many exactly-verified independent vectors.
When verification passes the basis is therefore complete; when it fails
the pipeline retries with more primes and ultimately raises.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import sparse

# Frozen probe primes, all below 2**30 so backend products stay in int64.
PRIMES = (
    1073741789, 1073741783, 1073741741, 1073741723, 1073741719, 1073741717,
    1073741689, 1073741671, 1073741663, 1073741651, 1073741621, 1073741567,
    1073741561, 1073741527, 1073741503, 1073741477,
)

# Smaller primes for tensor identity checks that sum ~50 products before
# reducing: products < 2**56, sums stay clear of 2**63.
SMALL_PRIMES = (
    268435399, 268435367, 268435361, 268435337,
    268435331, 268435313, 268435291, 268435273,
)

_INT64_SAFE = 2 ** 62


class ModularPipelineError(ArithmeticError):
    """Certification did not succeed within the prime budget."""


def _load_backend():
    if not os.environ.get("GEOLINE_FORCE_PY"):
        try:
            from . import _elim
            return "compiled", _elim.rref_mod
        except ImportError:
            pass
    from . import _elim_py
    return "pure", _elim_py.rref_mod


BACKEND_NAME, _rref_mod = _load_backend()


def rref_mod(a: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """Backend dispatch; see _elim_py.rref_mod for the contract."""
    return _rref_mod(a, p)


def _rat_rec(u: int, M: int) -> Fraction | None:
    """Lift u mod M to n/d with |n|, d <= sqrt(M/2), or None."""
    B = math.isqrt(M // 2)
    r0, r1 = M, u % M
    s0, s1 = 0, 1
    while r1 > B:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > B:
        return None
    n, d = r1, s1
    if d < 0:
        n, d = -n, -d
    if math.gcd(n, d) != 1:
        return None
    return Fraction(n, d)


def _mod_dense(mat: sparse.csr_matrix, p: int) -> np.ndarray:
    out = np.asarray(mat.todense(), dtype=np.int64) % p
    return np.ascontiguousarray(out)


def _kernel_residues(reduced: np.ndarray, piv_cols: list[int], ncols: int, p: int) -> np.ndarray:
    free = [c for c in range(ncols) if c not in set(piv_cols)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for j, pc in enumerate(piv_cols):
            out[i, pc] = (-int(reduced[j, f])) % p
    return out


def _verify_zero(csr: sparse.csr_matrix, vectors: list[tuple]) -> bool:
    """Exact check that every vector lies in the kernel of csr."""
    if not vectors:
        return True
    den = [math.lcm(*(v.denominator for v in vec)) for vec in vectors]
    cols = [[int(v * d) for v in vec] for vec, d in zip(vectors, den)]
    zmax = max((abs(x) for col in cols for x in col), default=0)
    amax = int(abs(csr.data).max()) if csr.nnz else 0
    nnz_row = int(np.diff(csr.indptr).max()) if csr.nnz else 0
    if amax * zmax * max(nnz_row, 1) < _INT64_SAFE:
        Z = np.array(cols, dtype=np.int64).T
        prod = csr @ Z
        return not prod.any()
    indptr = [int(x) for x in csr.indptr]
    indices = [int(x) for x in csr.indices]
    data = [int(x) for x in csr.data]
    for col in cols:
        for i in range(csr.shape[0]):
            s = 0
            for k in range(indptr[i], indptr[i + 1]):
                s += data[k] * col[indices[k]]
            if s != 0:
                return False
    return True


def _lift(residues: dict[int, np.ndarray], used: list[int], ncols: int) -> list[tuple] | None:
    k = residues[used[0]].shape[0]
    M = math.prod(used)
    pre = []
    for p in used:
        Mp = M // p
        pre.append((p, Mp, pow(Mp % p, p - 2, p)))
    out = []
    for i in range(k):
        vec = []
        for j in range(ncols):
            u = 0
            for p, Mp, ip in pre:
                u += int(residues[p][i, j]) * ip % p * Mp
            f = _rat_rec(u % M, M)
            if f is None:
                return None
            vec.append(f)
        out.append(tuple(vec))
    return out


def certified_kernel(a) -> list[tuple]:
    """Exact kernel basis of an integer matrix (dense array or sparse).

    Returns a list of Fraction tuples in reduced echelon shape (one
    leading 1 per free column); empty list for a trivial kernel.  Raises
    ModularPipelineError when the prime budget is exhausted without a
    verified answer.
    """
    csr = a.tocsr() if sparse.issparse(a) else sparse.csr_matrix(np.asarray(a, dtype=np.int64))
    ncols = csr.shape[1]
    if csr.nnz == 0:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    if int(abs(csr.data).max()) >= _INT64_SAFE:
        raise ModularPipelineError("entries exceed the int64 probe range")

    for start in (0, 1, 3):
        primes = PRIMES[start:]
        p0 = primes[0]
        a0 = _mod_dense(csr, p0)
        piv_cols, order = rref_mod(a0, p0)
        r = len(piv_cols)
        if r == ncols:
            # rank mod p is a lower bound for the rational rank, so full
            # column rank mod one prime already certifies a trivial kernel
            return []
        residues = {p0: _kernel_residues(a0, piv_cols, ncols, p0)}
        del a0
        used = [p0]
        subset = csr[order[:r]].tocsr() if r else csr[:0]
        for p in primes[1:]:
            ak = _mod_dense(subset, p) if r else np.zeros((0, ncols), dtype=np.int64)
            pk, _ = rref_mod(ak, p)
            if pk != piv_cols:
                continue
            residues[p] = _kernel_residues(ak, pk, ncols, p)
            used.append(p)
            if len(used) < 3:
                continue
            lifted = _lift(residues, used, ncols)
            if lifted is not None and _verify_zero(csr, lifted):
                return lifted
    raise ModularPipelineError("no verified kernel within the prime budget")


def scaled_int_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row (row scaling preserves the kernel)."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def certified_kernel_rows(rows: Sequence[Sequence[Fraction]]) -> list[tuple]:
    """certified_kernel for rational rows, after integer scaling."""
    if not rows:
        raise ValueError("at least one row required")
    ncols = len(rows[0])
    ints = [r for r in scaled_int_rows(rows) if any(r)]
    if not ints:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    hi = max(abs(x) for r in ints for x in r)
    if hi >= _INT64_SAFE:
        raise ModularPipelineError("scaled entries exceed the int64 probe range")
    arr = np.array(ints, dtype=np.int64)
    return certified_kernel(arr)
