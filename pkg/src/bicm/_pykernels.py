"""Pure-Python kernels: reduced homology of a face list and rank mod p."""

from __future__ import annotations

from typing import Sequence


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = r
                break
            r ^= b
    return len(basis)


def _rank_sparse(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a dense integer matrix over GF(p)."""
    if p == 2:
        return _rank_gf2([sum(1 << c for c, v in enumerate(r) if v & 1) for r in matrix])
    return _rank_sparse([{c: v for c, v in enumerate(r) if v % p} for r in matrix], p)


def reduced_homology(faces: Sequence[int], p: int) -> list[int]:
    """Ranks of reduced homology H~_{-1}, H~_0, ..., H~_top over GF(p).

    ``faces`` must be closed under taking subsets (the empty face included
    whenever the list is nonempty).  An empty list is the void complex and
    yields ``[0]``.
    """
    if not faces:
        return [0]
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(_popcount(f) - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = [0] * (top + 2)  # ranks[d + 1] = rank of the boundary C_d -> C_{d-1}
    for d in range(0, top + 1):
        lower = index.get(d - 1)
        if lower is None or d not in index:
            continue
        if p == 2:
            rows2 = []
            for f in index[d]:
                r = 0
                x = f
                while x:
                    low = x & -x
                    r |= 1 << lower[f ^ low]
                    x ^= low
                rows2.append(r)
            ranks[d + 1] = _rank_gf2(rows2)
        else:
            rowsp = []
            for f in index[d]:
                row = {}
                x = f
                sign = 1
                while x:
                    low = x & -x
                    row[lower[f ^ low]] = sign if sign == 1 else p - 1
                    sign = -sign
                    x ^= low
                rowsp.append(row)
            ranks[d + 1] = _rank_sparse(rowsp, p)
    out = []
    for d in range(-1, top + 1):
        size = len(index.get(d, ()))
        nxt = ranks[d + 2] if d + 2 < len(ranks) else 0
        out.append(size - ranks[d + 1] - nxt)
    return out
