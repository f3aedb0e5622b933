"""Squarefree monomial ideals with generators stored as variable bit masks.

A monomial x_A is the mask of A (bit i <-> variable x_{i+1}).  Divisibility of
squarefree monomials is subset inclusion of masks, lcm is union, and a product
stays squarefree exactly when the supports are disjoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import DomainError, Graph, bits, mask_of, matchings, popcount


def _sort_key(m: int) -> tuple[int, tuple[int, ...]]:
    return popcount(m), tuple(bits(m))


def minimalize(gens: Iterable[int]) -> tuple[int, ...]:
    """Minimal elements of a family of masks under inclusion, sorted."""
    uniq = sorted(set(gens), key=popcount)
    kept: list[int] = []
    for g in uniq:
        if not any(k & g == k for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=_sort_key))


@dataclass(frozen=True)
class SquarefreeIdeal:
    n: int
    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("ambient variable count must be nonnegative")
        for g in self.gens:
            if g < 0 or g >> self.n:
                raise DomainError(f"generator {bits(g)} exceeds {self.n} variables")

    @classmethod
    def from_gens(cls, n: int, gens: Iterable[int]) -> "SquarefreeIdeal":
        return cls(n, minimalize(gens))

    @classmethod
    def from_lists(cls, n: int, gens: Iterable[Iterable[int]]) -> "SquarefreeIdeal":
        """Build from 1-indexed variable lists, e.g. [[1, 2], [2, 3]]."""
        masks = []
        for g in gens:
            idx = list(g)
            if any(not 1 <= i <= n for i in idx):
                raise DomainError(f"variable index out of range in {idx}")
            masks.append(mask_of(i - 1 for i in idx))
        return cls.from_gens(n, masks)

    @classmethod
    def zero(cls, n: int) -> "SquarefreeIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "SquarefreeIdeal":
        return cls(n, (0,))

    @classmethod
    def maximal(cls, n: int) -> "SquarefreeIdeal":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)

    @property
    def mu(self) -> int:
        return len(self.gens)

    def support(self) -> int:
        s = 0
        for g in self.gens:
            s |= g
        return s

    def degrees(self) -> list[int]:
        return [popcount(g) for g in self.gens]

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def contains_monomial(self, m: int) -> bool:
        return any(g & m == g for g in self.gens)

    def __le__(self, other: "SquarefreeIdeal") -> bool:
        return all(other.contains_monomial(g) for g in self.gens)

    def __add__(self, other: "SquarefreeIdeal") -> "SquarefreeIdeal":
        _check_ambient(self, other)
        return SquarefreeIdeal.from_gens(self.n, self.gens + other.gens)

    def gen_lists(self) -> list[list[int]]:
        return [[i + 1 for i in bits(g)] for g in self.gens]

    def to_json(self) -> dict:
        return {"n": self.n, "gens": self.gen_lists()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> "SquarefreeIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_lists(int(data["n"]), data["gens"])

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        if self.is_unit:
            return "(1)"
        return "(" + ", ".join("".join(f"x{i + 1}" for i in bits(g)) for g in self.gens) + ")"


def _check_ambient(a: SquarefreeIdeal, b: SquarefreeIdeal) -> None:
    if a.n != b.n:
        raise DomainError(f"ambient rings differ ({a.n} vs {b.n} variables)")


def squarefree_veronese(n: int, d: int, within: int | None = None) -> SquarefreeIdeal:
    """m^[d]: all squarefree monomials of degree d, optionally only in the variables of ``within``."""
    pool = bits(within) if within is not None else list(range(n))
    return SquarefreeIdeal.from_gens(n, (mask_of(c) for c in combinations(pool, d)))


def edge_ideal(g: Graph) -> SquarefreeIdeal:
    return SquarefreeIdeal.from_gens(g.n, ((1 << i) | (1 << j) for i, j in g.edges()))


def _disjoint_products(gens: Sequence[int], k: int) -> set[int]:
    out: set[int] = set()

    def extend(start: int, acc: int, depth: int) -> None:
        if depth == k:
            out.add(acc)
            return
        for e in range(start, len(gens) - (k - depth) + 1):
            if gens[e] & acc:
                continue
            extend(e + 1, acc | gens[e], depth + 1)

    extend(0, 0, 0)
    return out


def squarefree_power(ideal: SquarefreeIdeal, k: int) -> SquarefreeIdeal:
    """I^[k], generated by products of k support-disjoint minimal generators."""
    if k < 1:
        raise DomainError("squarefree power exponent must be at least 1")
    if ideal.is_unit:
        return ideal
    return SquarefreeIdeal.from_gens(ideal.n, _disjoint_products(ideal.gens, k))


def matching_power(g: Graph, k: int) -> SquarefreeIdeal:
    return SquarefreeIdeal.from_gens(g.n, (m.vertex_set for m in matchings(g, k)))


def matching_product(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_ambient(a, b)
    return SquarefreeIdeal.from_gens(a.n, (u | v for u in a.gens for v in b.gens if not u & v))


def intersect(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_ambient(a, b)
    return SquarefreeIdeal.from_gens(a.n, (u | v for u in a.gens for v in b.gens))


def variable_multiply(ideal: SquarefreeIdeal, i: int) -> SquarefreeIdeal:
    """x_i * I for a 0-indexed variable outside supp(I)."""
    if not 0 <= i < ideal.n:
        raise DomainError(f"variable x{i + 1} is not in the ambient ring")
    if ideal.support() >> i & 1:
        raise DomainError(f"x{i + 1} lies in the support; product would not be squarefree")
    return SquarefreeIdeal(ideal.n, tuple(sorted((g | (1 << i) for g in ideal.gens), key=_sort_key)))


def add_variable_to_ideal(ideal: SquarefreeIdeal, i: int) -> SquarefreeIdeal:
    """(I, x_i) for a 0-indexed variable."""
    if not 0 <= i < ideal.n:
        raise DomainError(f"variable x{i + 1} is not in the ambient ring")
    return SquarefreeIdeal.from_gens(ideal.n, ideal.gens + (1 << i,))


def extend_ambient(ideal: SquarefreeIdeal, n: int) -> SquarefreeIdeal:
    if n < ideal.n:
        raise DomainError("cannot shrink the ambient ring")
    return SquarefreeIdeal(n, ideal.gens)


def restrict_ambient(ideal: SquarefreeIdeal, n: int) -> SquarefreeIdeal:
    """Same generators viewed in the first n variables."""
    if ideal.support() >> n:
        raise DomainError("support does not fit in the smaller ring")
    return SquarefreeIdeal(n, ideal.gens)


# t-spread monomials ---------------------------------------------------------


def is_t_spread(u: int, t: Sequence[int]) -> bool:
    idx = bits(u)
    if len(t) < len(idx) - 1:
        raise DomainError(f"spread vector {tuple(t)} too short for degree {len(idx)}")
    return all(idx[j + 1] - idx[j] >= t[j] for j in range(len(idx) - 1))


def _borel_upper_set(u: int, t: Sequence[int], n: int) -> set[int]:
    a = bits(u)
    d = len(a)
    out: set[int] = set()

    def extend(j: int, prev: int, acc: int) -> None:
        if j == d:
            out.add(acc)
            return
        lo = 0 if j == 0 else prev + max(t[j - 1], 1)
        for b in range(lo, a[j] + 1):
            extend(j + 1, b, acc | (1 << b))

    extend(0, -1, 0)
    return out


def _borel_exchange_closure(u: int, t: Sequence[int], n: int) -> set[int]:
    seen = {u}
    frontier = [u]
    while frontier:
        v = frontier.pop()
        for j in bits(v):
            for i in range(j):
                if v >> i & 1:
                    continue
                w = (v & ~(1 << j)) | (1 << i)
                if w not in seen and is_t_spread(w, t):
                    seen.add(w)
                    frontier.append(w)
    return seen


def t_spread_borel(u: int, t: Sequence[int], n: int, method: str = "upper") -> SquarefreeIdeal:
    """Principal t-spread Borel ideal B_t(u), as the t-spread strongly stable closure of u.

    ``method="upper"`` lists the t-spread monomials b with b_j <= a_j;
    ``method="exchange"`` runs the exchange moves x_i(v/x_j), i < j, to a fixpoint.
    """
    t = tuple(t)
    if u == 0 or u >> n:
        raise DomainError("u must be a nonempty monomial in the ambient ring")
    if len(t) != popcount(u) - 1:
        raise DomainError(f"spread vector length {len(t)} does not match degree {popcount(u)}")
    if any(x < 0 for x in t):
        raise DomainError("spread entries must be nonnegative")
    if not is_t_spread(u, t):
        raise DomainError(f"{[i + 1 for i in bits(u)]} is not {t}-spread")
    if method == "upper":
        gens = _borel_upper_set(u, t, n)
    elif method == "exchange":
        gens = _borel_exchange_closure(u, t, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SquarefreeIdeal.from_gens(n, gens)


def veronese_generator(n: int, d: int, t: int) -> int:
    """x_{n-(d-1)t} ... x_{n-t} x_n as a mask (1-indexed variables)."""
    if d < 1 or t < 0 or n - (d - 1) * t < 1:
        raise DomainError(f"no uniform {t}-spread monomial of degree {d} in {n} variables")
    return mask_of(n - 1 - j * t for j in range(d))


def uniform_veronese(n: int, d: int, t: int) -> SquarefreeIdeal:
    if t < 1:
        raise DomainError("squarefree Veronese ideals need t >= 1")
    return t_spread_borel(veronese_generator(n, d, t), (t,) * (d - 1), n)


# statistics -----------------------------------------------------------------


def min_transversal(gens: Sequence[int]) -> int:
    """Size of a smallest vertex set meeting every mask (height of the ideal)."""
    gens = sorted(gens, key=popcount)
    best = popcount(mask_of(i for g in gens for i in bits(g)))

    def search(chosen: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        for g in gens:
            if not g & chosen:
                break
        else:
            best = size
            return
        for i in bits(g):
            search(chosen | (1 << i), size + 1)

    search(0, 0)
    return best


def monomial_grade(ideal: SquarefreeIdeal) -> int:
    """Largest number of pairwise support-disjoint minimal generators."""
    gens = ideal.gens
    best = 0

    def search(start: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for e in range(start, len(gens)):
            if size + (len(gens) - e) <= best:
                return
            if not gens[e] & used:
                search(e + 1, used | gens[e], size + 1)

    search(0, 0, 0)
    return best


def ideal_stats(ideal: SquarefreeIdeal) -> dict:
    if ideal.is_zero:
        raise DomainError("statistics are undefined for the zero ideal")
    degs = set(ideal.degrees())
    return {
        "mu": ideal.mu,
        "support": [i + 1 for i in bits(ideal.support())],
        "height": 0 if ideal.is_unit else min_transversal(ideal.gens),
        "monomial_grade": monomial_grade(ideal),
        "is_equigenerated": len(degs) == 1,
        "degree": degs.pop() if len(degs) == 1 else None,
    }
