"""Stanley-Reisner complexes, Alexander duality and homological invariants over GF(p).

Betti numbers follow the ideal convention: ``beta[i, j]`` is beta_{i,j}(I),
which equals beta_{i+1,j}(S/I).  They are computed with Hochster's formula

    beta_{i,sigma}(I) = dim H~_{|sigma|-i-2}(Delta|_sigma; GF(p)),

and Cohen-Macaulayness with Reisner's criterion on all links.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import DomainError, bits, popcount
from .ideal import SquarefreeIdeal, add_variable_to_ideal, intersect, variable_multiply
from .kernels import reduced_homology

DEFAULT_P = 2


class ConsistencyError(AssertionError):
    """Two independent routes to the same invariant disagreed."""


def check_prime(p: int) -> int:
    if p < 2 or p >= 1 << 15 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise DomainError(f"field characteristic must be a prime below 2^15, got {p}")
    return p


def _maximal(masks) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (popcount(m), bits(m))))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]
    _faces: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_facets(cls, n: int, facets) -> "SimplicialComplex":
        return cls(n, _maximal(facets))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if not self.facets:
            raise DomainError("the void complex has no dimension")
        return max(popcount(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def faces(self) -> tuple[int, ...]:
        """All faces, the empty face included, sorted by (size, mask)."""
        if self._faces is None:
            found: set[int] = set()
            for f in self.facets:
                sub = f
                while True:
                    found.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & f
            object.__setattr__(self, "_faces", tuple(sorted(found, key=lambda m: (popcount(m), m))))
        return self._faces

    def restrict(self, sigma: int) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(self.n, (f & sigma for f in self.facets))

    def link(self, face: int) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(self.n, (f & ~face for f in self.facets if f & face == face))

    def facet_lists(self) -> list[list[int]]:
        return [[i + 1 for i in bits(f)] for f in self.facets]


def _min_transversals(gens) -> list[int]:
    """Minimal vertex sets meeting every mask in ``gens`` (Berge's algorithm)."""
    covers = [0]
    for g in sorted(gens, key=popcount):
        nxt = []
        for c in covers:
            if c & g:
                nxt.append(c)
            else:
                nxt.extend(c | (1 << i) for i in bits(g))
        uniq = sorted(set(nxt), key=popcount)
        covers = []
        for c in uniq:
            if not any(k & c == k for k in covers):
                covers.append(c)
    return covers


def stanley_reisner(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Complex whose faces are the subsets of [n] containing no generator."""
    if ideal.is_unit:
        raise DomainError("the unit ideal has the void complex")
    full = (1 << ideal.n) - 1
    return SimplicialComplex.from_facets(ideal.n, (full & ~c for c in _min_transversals(ideal.gens)))


def alexander_dual(ideal: SquarefreeIdeal) -> SquarefreeIdeal:
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("Alexander duality needs a proper nonzero ideal")
    full = (1 << ideal.n) - 1
    return SquarefreeIdeal.from_gens(ideal.n, (full & ~f for f in stanley_reisner(ideal).facets))


def reduced_homology_ranks(cx: SimplicialComplex, p: int = DEFAULT_P) -> list[int]:
    """[rank H~_{-1}, rank H~_0, ..., rank H~_{dim}] over GF(p)."""
    return reduced_homology(list(cx.faces()) if cx.facets else [], p)


@dataclass(frozen=True)
class BettiTable:
    p: int
    entries: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self.entries.items()) if b]

    @property
    def projdim(self) -> int:
        """Projective dimension of the ideal (-1 for the zero ideal)."""
        return max((i for i, _, _ in self.nonzero()), default=-1)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j, _ in self.nonzero())

    def is_linear(self) -> bool:
        diag = {j - i for i, j, _ in self.nonzero()}
        return len(diag) <= 1

    def to_json(self) -> dict:
        return {"convention": "ideal", "p": self.p, "entries": [list(e) for e in self.nonzero()]}

    def render(self) -> str:
        """Macaulay2-style table of the ideal: row j - i, column i."""
        nz = self.nonzero()
        if not nz:
            return "(zero)"
        cols = range(0, self.projdim + 1)
        rows = sorted({j - i for i, j, _ in nz})
        lines = ["      " + " ".join(f"{i:>4}" for i in cols)]
        for r in rows:
            cells = [self[i, i + r] for i in cols]
            lines.append(f"{r:>4}: " + " ".join(f"{c if c else '.':>4}" for c in cells))
        return "\n".join(lines)


def _betti_entries(ideal: SquarefreeIdeal, p: int) -> dict[tuple[int, int], int]:
    if ideal.is_zero:
        return {}
    if ideal.is_unit:
        raise DomainError("Betti numbers of the unit ideal are not defined here")
    return dict(_hochster(ideal.n, ideal.gens, p))


@lru_cache(maxsize=4096)
def _hochster(n: int, gens: tuple[int, ...], p: int) -> tuple[tuple[tuple[int, int], int], ...]:
    faces = stanley_reisner(SquarefreeIdeal(n, gens)).faces()
    out: dict[tuple[int, int], int] = {}
    for sigma in range(1, 1 << n):
        # Delta|sigma is a cone unless sigma is a union of generators
        inside = 0
        for g in gens:
            if g & sigma == g:
                inside |= g
        if inside != sigma:
            continue
        sub = [f for f in faces if f & sigma == f]
        size = popcount(sigma)
        for d, h in enumerate(reduced_homology(sub, p), start=-1):
            if h:
                i = size - d - 2
                if i >= 0:
                    out[i, size] = out.get((i, size), 0) + h
    return tuple(sorted(out.items()))


def betti_table(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> BettiTable:
    check_prime(p)
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("Betti tables are computed for proper nonzero ideals")
    return BettiTable(p, _betti_entries(ideal, p))


def depth_of_quotient(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> int:
    """depth S/I by Auslander-Buchsbaum; S/(0) has depth n."""
    if ideal.is_unit:
        raise DomainError("S/S is the zero ring")
    if ideal.is_zero:
        return ideal.n
    return ideal.n - (1 + BettiTable(p, _betti_entries(ideal, p)).projdim)


def krull_dim_of_quotient(ideal: SquarefreeIdeal) -> int:
    return stanley_reisner(ideal).dim + 1


def homological_profile(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> dict:
    check_prime(p)
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("profiles are computed for proper nonzero ideals")
    table = betti_table(ideal, p)
    cx = stanley_reisner(ideal)
    pd_quot = table.projdim + 1
    return {
        "pd": pd_quot,
        "depth_of_quotient": ideal.n - pd_quot,
        "krull_dim_of_quotient": cx.dim + 1,
        "regularity": table.regularity,
        "is_unmixed": cx.is_pure(),
    }


@lru_cache(maxsize=4096)
def _reisner(n: int, facets: tuple[int, ...], p: int) -> bool:
    faces = SimplicialComplex(n, facets).faces()
    for face in faces:
        link = [f & ~face for f in faces if f & face == face]
        ranks = reduced_homology(link, p)
        dim_link = len(ranks) - 2
        # ranks[k] is H~_{k-1}; need H~_i = 0 for i < dim link
        if any(ranks[: dim_link + 1]):
            return False
    return True


def is_cohen_macaulay(ideal: SquarefreeIdeal, p: int = DEFAULT_P, cross_check: bool = False) -> bool:
    """Reisner's criterion over GF(p); zero ideal counts as Cohen-Macaulay.

    With ``cross_check`` the verdict is compared with depth == dim from the
    Betti table and a disagreement raises ``ConsistencyError``.
    """
    check_prime(p)
    if ideal.is_unit:
        raise DomainError("Cohen-Macaulayness is tested for proper ideals")
    if ideal.is_zero:
        return True
    cx = stanley_reisner(ideal)
    verdict = _reisner(cx.n, cx.facets, p)
    if cross_check:
        other = depth_of_quotient(ideal, p) == cx.dim + 1
        if other != verdict:
            raise ConsistencyError(f"Reisner says {verdict}, depth == dim says {other} for {ideal}")
    return verdict


def linear_resolution_routes(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> tuple[bool, bool]:
    """(Betti-table linearity, Cohen-Macaulayness of the Alexander dual)."""
    _require_equigenerated(ideal)
    table = betti_table(ideal, p)
    return table.is_linear(), is_cohen_macaulay(alexander_dual(ideal), p)


def _require_equigenerated(ideal: SquarefreeIdeal) -> None:
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("linear resolutions are tested for proper nonzero ideals")
    if not ideal.is_equigenerated():
        raise DomainError("linear resolution requires generators of a single degree")


def has_linear_resolution(ideal: SquarefreeIdeal, p: int = DEFAULT_P, cross_check: bool = False) -> bool:
    check_prime(p)
    _require_equigenerated(ideal)
    if not cross_check:
        return betti_table(ideal, p).is_linear()
    by_betti, by_dual = linear_resolution_routes(ideal, p)
    if by_betti != by_dual:
        raise ConsistencyError(f"Betti linearity {by_betti} but dual CM {by_dual} for {ideal}")
    return by_betti


@dataclass(frozen=True)
class BiCMReport:
    cohen_macaulay: bool
    linear_by_betti: bool
    dual_cohen_macaulay: bool

    @property
    def bi_cm(self) -> bool:
        return self.cohen_macaulay and self.linear_by_betti

    @property
    def eagon_reiner_agrees(self) -> bool:
        return self.linear_by_betti == self.dual_cohen_macaulay

    def to_json(self) -> dict:
        return {
            "bi_cm": self.bi_cm,
            "cohen_macaulay": self.cohen_macaulay,
            "linear_resolution": self.linear_by_betti,
            "dual_cohen_macaulay": self.dual_cohen_macaulay,
        }


def bicm_report(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> BiCMReport:
    """Every route to bi-CM: CM of I, Betti linearity, CM of the dual."""
    check_prime(p)
    _require_equigenerated(ideal)
    lin, dual_cm = linear_resolution_routes(ideal, p)
    return BiCMReport(is_cohen_macaulay(ideal, p), lin, dual_cm)


def is_bi_cm(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> bool:
    report = bicm_report(ideal, p)
    if not report.eagon_reiner_agrees:
        raise ConsistencyError(f"Eagon-Reiner routes disagree for {ideal}")
    return report.bi_cm


# splittings -----------------------------------------------------------------


def is_betti_splitting(ideal: SquarefreeIdeal, part1: SquarefreeIdeal, part2: SquarefreeIdeal,
                       p: int = DEFAULT_P) -> bool:
    """beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) + beta_{i-1,j}(I1 cap I2) for all i, j."""
    check_prime(p)
    g, g1, g2 = set(ideal.gens), set(part1.gens), set(part2.gens)
    if g1 & g2 or g1 | g2 != g:
        raise DomainError("the generators of I must be the disjoint union of those of I1 and I2")
    if ideal.is_zero:
        return True
    b = _betti_entries(ideal, p)
    b1 = _betti_entries(part1, p)
    b2 = _betti_entries(part2, p)
    b12 = _betti_entries(intersect(part1, part2), p)
    keys = set(b) | set(b1) | set(b2) | {(i + 1, j) for i, j in b12}
    for i, j in keys:
        if b.get((i, j), 0) != b1.get((i, j), 0) + b2.get((i, j), 0) + b12.get((i - 1, j), 0):
            return False
    return True


@dataclass(frozen=True)
class VertexSplit:
    var: int
    part1: SquarefreeIdeal
    part2: SquarefreeIdeal

    def rebuilt(self) -> SquarefreeIdeal:
        bit = 1 << self.var
        return SquarefreeIdeal.from_gens(self.part1.n, tuple(g | bit for g in self.part1.gens) + self.part2.gens)


def split_at(ideal: SquarefreeIdeal, i: int) -> VertexSplit | None:
    """x_i I1 + I2 with I1 = (u/x_i : x_i | u), I2 = (u : x_i does not divide u), if I2 is inside I1."""
    bit = 1 << i
    with_i = [g & ~bit for g in ideal.gens if g & bit]
    if not with_i:
        return None
    part1 = SquarefreeIdeal.from_gens(ideal.n, with_i)
    part2 = SquarefreeIdeal(ideal.n, tuple(g for g in ideal.gens if not g & bit))
    if not part2 <= part1:
        return None
    return VertexSplit(i, part1, part2)


def find_vertex_splitting(ideal: SquarefreeIdeal) -> VertexSplit | None:
    """First splitting vertex, scanning from x_n down to x_1."""
    for i in reversed(range(ideal.n)):
        split = split_at(ideal, i)
        if split is not None:
            return split
    return None


def is_vertex_splittable(ideal: SquarefreeIdeal) -> bool:
    return _splittable(ideal.n, ideal.gens)


@lru_cache(maxsize=None)
def _splittable(n: int, gens: tuple[int, ...]) -> bool:
    if len(gens) <= 1:
        return True
    ideal = SquarefreeIdeal(n, gens)
    for i in reversed(range(n)):
        split = split_at(ideal, i)
        if split is None:
            continue
        if _splittable(n, split.part1.gens) and _splittable(n, split.part2.gens):
            return True
    return False


def depth_equality_check(ideal: SquarefreeIdeal, split: VertexSplit, p: int = DEFAULT_P) -> dict:
    """Compare both sides of the Cohen-Macaulay criterion for a vertex splitting.

    For I = x_i I1 + I2 a Betti splitting (with I2 inside I1 and x_i outside
    supp I2): I is CM iff I1, I2 are CM and depth S/I1 = depth S/(I2, x_i).
    """
    i = split.var
    betti_split = is_betti_splitting(ideal, variable_multiply(split.part1, i), split.part2, p) \
        if not split.part1.is_unit else None
    lhs = is_cohen_macaulay(ideal, p)
    cm1 = True if split.part1.is_unit else is_cohen_macaulay(split.part1, p)
    cm2 = is_cohen_macaulay(split.part2, p)
    d1 = None if split.part1.is_unit else depth_of_quotient(split.part1, p)
    d2 = depth_of_quotient(add_variable_to_ideal(split.part2, i), p)
    rhs = cm1 and cm2 and d1 == d2
    return {
        "var": i + 1,
        "betti_splitting": betti_split,
        "cohen_macaulay": lhs,
        "parts_cohen_macaulay": (cm1, cm2),
        "depths": (d1, d2),
        "holds": (not betti_split) or lhs == rhs,
    }


def depth_via_links(ideal: SquarefreeIdeal, p: int = DEFAULT_P) -> int:
    """depth S/I as min{i + |F| + 1 : F a face, H~_i(lk F) != 0}.

    Independent of the Betti table; used to cross-check Auslander-Buchsbaum.
    """
    if ideal.is_unit:
        raise DomainError("S/S is the zero ring")
    faces = stanley_reisner(ideal).faces()
    best = ideal.n
    for face in faces:
        size = popcount(face)
        if size >= best:
            continue
        link = [f & ~face for f in faces if f & face == face]
        for idx, h in enumerate(reduced_homology(link, p)):
            if h:
                best = min(best, idx - 1 + size + 1)
                break
    return best
