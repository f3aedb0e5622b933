"""Brute-force reference computations, written without the package internals.

Everything here works on plain Python sets and tuples so that it shares no
code path with the bit-mask implementation under test.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations


def subsets(ground):
    ground = list(ground)
    for r in range(len(ground) + 1):
        for c in combinations(ground, r):
            yield frozenset(c)


def minimal_sets(family):
    family = set(map(frozenset, family))
    return {a for a in family if not any(b < a for b in family)}


# graphs ---------------------------------------------------------------------


def edge_set(n, edges):
    return {frozenset(e) for e in edges}


def brute_isomorphic(n, e1, e2):
    e1, e2 = edge_set(n, e1), edge_set(n, e2)
    if len(e1) != len(e2):
        return None
    for perm in permutations(range(n)):
        if {frozenset(perm[v] for v in e) for e in e1} == e2:
            return perm
    return None


def brute_canonical(n, edges):
    """Smallest sorted edge tuple over all relabelings."""
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        if best is None or img < best:
            best = img
    return best


def brute_iso_class_count(n, no_isolated=True):
    pairs = list(combinations(range(n), 2))
    seen = set()
    for r in range(len(pairs) + 1):
        for es in combinations(pairs, r):
            if no_isolated and len({v for e in es for v in e}) < n:
                continue
            seen.add(brute_canonical(n, es))
    return len(seen)


def brute_matchings(edges, k):
    out = []
    for combo in combinations(sorted(map(tuple, edges)), k):
        verts = [v for e in combo for v in e]
        if len(set(verts)) == 2 * k:
            out.append(combo)
    return out


# ideals ---------------------------------------------------------------------


def literal_squarefree_power(gens, k):
    """Minimal squarefree monomials among all k-fold products of generators.

    Monomials are exponent dicts; a product is kept only when every exponent
    is at most 1.
    """
    gens = [frozenset(g) for g in gens]
    found = set()
    for combo in combinations_with_replacement(gens, k):
        expo = {}
        for g in combo:
            for v in g:
                expo[v] = expo.get(v, 0) + 1
        if all(e == 1 for e in expo.values()):
            found.add(frozenset(expo))
    return minimal_sets(found)


def faces_of(n, gens):
    gens = [frozenset(g) for g in gens]
    return [f for f in subsets(range(n)) if not any(g <= f for g in gens)]


# linear algebra ---------------------------------------------------------------


def rank_mod(mat, p):
    m = [[x % p for x in row] for row in mat]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def homology(faces, p):
    """Reduced homology ranks {dim: rank} of a face family closed under subsets."""
    faces = [tuple(sorted(f)) for f in faces]
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        rows, cols = by_dim.get(d, []), by_dim.get(d - 1, [])
        if not rows or not cols:
            ranks[d] = 0
            continue
        col = {f: i for i, f in enumerate(cols)}
        mat = []
        for f in rows:
            row = [0] * len(cols)
            for r in range(len(f)):
                row[col[f[:r] + f[r + 1:]]] = (-1) ** r
            mat.append(row)
        ranks[d] = rank_mod(mat, p)
    return {d: len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(-1, top + 1)}


def hochster_betti(n, gens, p):
    """beta_{i,j}(I) by summing over every subset of the variables."""
    faces = faces_of(n, gens)
    out = {}
    for sigma in subsets(range(n)):
        if not sigma:
            continue
        sub = [f for f in faces if f <= sigma]
        for d, h in homology(sub, p).items():
            i = len(sigma) - d - 2
            if h and i >= 0:
                out[i, len(sigma)] = out.get((i, len(sigma)), 0) + h
    return out


def taylor_betti(gens, p):
    """beta_{i,j}(I) from the Taylor complex tensored with the field.

    In multidegree m the complex has a basis element for each generator set F
    with lcm(F) = m, and the differential only keeps the faces F minus one
    generator whose lcm is still m.
    """
    gens = [frozenset(g) for g in gens]
    idx = range(len(gens))
    by_lcm = {}
    for r in range(1, len(gens) + 1):
        for F in combinations(idx, r):
            lcm = frozenset().union(*(gens[i] for i in F))
            by_lcm.setdefault(lcm, {}).setdefault(r, []).append(F)
    out = {}
    for lcm, cells in by_lcm.items():
        ranks = {}
        for r, rows in cells.items():
            cols = cells.get(r - 1, [])
            if not cols:
                ranks[r] = 0
                continue
            col = {F: i for i, F in enumerate(cols)}
            mat = []
            for F in rows:
                row = [0] * len(cols)
                for pos in range(len(F)):
                    G = F[:pos] + F[pos + 1:]
                    if G in col:
                        row[col[G]] = (-1) ** pos
                mat.append(row)
            ranks[r] = rank_mod(mat, p)
        for r, rows in cells.items():
            h = len(rows) - ranks.get(r, 0) - ranks.get(r + 1, 0)
            if h:
                # homological degree r in S/I is degree r - 1 for I
                key = (r - 1, len(lcm))
                out[key] = out.get(key, 0) + h
    return out


def link_faces(faces, F):
    F = frozenset(F)
    return [f - F for f in faces if F <= f]


def reisner_cm(n, gens, p):
    faces = faces_of(n, gens)
    for F in faces:
        lk = link_faces(faces, F)
        dim = max(len(f) for f in lk) - 1
        h = homology(lk, p)
        if any(h.get(i, 0) for i in range(-1, dim)):
            return False
    return True


def depth_by_links(n, gens, p):
    faces = faces_of(n, gens)
    best = None
    for F in faces:
        for i, h in homology(link_faces(faces, F), p).items():
            if h:
                val = i + len(F) + 1
                best = val if best is None else min(best, val)
    return best
