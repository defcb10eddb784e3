"""Multigraded Betti numbers of monomial ideals and the regularities built
on them.

Convention: the ideal itself is the module being resolved, so
``β_{0,b}(I)`` counts minimal generators and
``β_{i,b}(I) = dim H̃_{i-1}(K^b(I))`` where ``K^b(I)`` is the upper Koszul
simplicial complex at ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import ExponentVector, Monomial, MonomialIdeal, check_vector, support_component
from .complexes import SimplicialComplex, reduced_homology
from .linalg import rank
from .reports import CapExceeded

BETTI_CAP = 16


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers, keyed by ``(i, b)``."""

    entries: dict[tuple[int, ExponentVector], int] = field(default_factory=dict)
    characteristic: int = 0

    def __getitem__(self, key: tuple[int, ExponentVector]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def graded(self) -> dict[tuple[int, int], int]:
        """Collapse to the usual Z-graded table ``(i, deg b) -> rank``."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), r in self.entries.items():
            out[(i, sum(b))] = out.get((i, sum(b)), 0) + r
        return out

    def to_json(self) -> list[dict]:
        return [{"i": i, "degree": list(b), "rank": r}
                for (i, b), r in sorted(self.entries.items())]


def lcm_lattice(I: MonomialIdeal, cap: int = BETTI_CAP) -> set[ExponentVector]:
    """lcms of nonempty subsets of ``G(I)``; every Betti degree lies here."""
    if len(I.gens) > cap:
        raise CapExceeded(f"{len(I.gens)} generators exceed the cap of {cap}")
    out: set[ExponentVector] = set()
    frontier = {g.exps for g in I.gens}
    # grow by joining with one generator at a time; the lattice is closed under it
    while frontier:
        out |= frontier
        frontier = {tuple(map(max, a, g.exps)) for a in frontier for g in I.gens} - out
    return out


def koszul_complex(I: MonomialIdeal, b) -> SimplicialComplex:
    """Faces ``F ⊆ supp(b)`` with ``x^(b - e_F) ∈ I``."""
    b = check_vector(b, I.n)
    if I.is_zero:
        return SimplicialComplex.void(I.n)
    supp = [i for i, e in enumerate(b, 1) if e]
    faces = []
    for k in range(len(supp) + 1):
        for F in combinations(supp, k):
            exps = list(b)
            for i in F:
                exps[i - 1] -= 1
            if Monomial(tuple(exps)) in I:
                faces.append(F)
    return SimplicialComplex(I.n, faces)


def betti_table(I: MonomialIdeal, characteristic: int = 0, cap: int = BETTI_CAP) -> BettiTable:
    table = BettiTable(characteristic=characteristic)
    if I.is_zero:
        return table
    for b in lcm_lattice(I, cap):
        for j, r in reduced_homology(koszul_complex(I, b), characteristic).items():
            table.entries[(j + 1, b)] = r
    return table


def taylor_betti_table(I: MonomialIdeal, characteristic: int = 0, cap: int = 10) -> BettiTable:
    """Betti numbers from the Taylor resolution tensored with the field.

    After tensoring, only faces with equal lcm survive in the differential,
    so the complex splits by multidegree.
    """
    if len(I.gens) > cap:
        raise CapExceeded(f"{len(I.gens)} generators exceed the Taylor cap of {cap}")
    gens = I.gens
    by_deg: dict[ExponentVector, dict[int, list[tuple[int, ...]]]] = {}
    for k in range(1, len(gens) + 1):
        for sub in combinations(range(len(gens)), k):
            m = gens[sub[0]]
            for s in sub[1:]:
                m = m.lcm(gens[s])
            by_deg.setdefault(m.exps, {}).setdefault(k - 1, []).append(sub)
    table = BettiTable(characteristic=characteristic)
    for b, cells in by_deg.items():
        ranks = {}
        for i, src in cells.items():
            tgt = cells.get(i - 1, [])
            if not tgt:
                ranks[i] = 0
                continue
            index = {s: r for r, s in enumerate(tgt)}
            mat = [[0] * len(src) for _ in tgt]
            for c, sub in enumerate(src):
                for pos in range(len(sub)):
                    face = sub[:pos] + sub[pos + 1:]
                    if face in index:
                        mat[index[face]][c] = -1 if pos % 2 else 1
            ranks[i] = rank(mat, characteristic)
        for i, src in cells.items():
            h = len(src) - ranks[i] - ranks.get(i + 1, 0)
            if h:
                table.entries[(i, b)] = h
    return table


def suppreg(I: MonomialIdeal, table: BettiTable | None = None) -> int:
    """``max |supp b| - i`` over nonzero ``β_{i,b}(I)``."""
    if table is None:
        table = betti_table(I)
    if not table.entries:
        raise ValueError("the zero ideal has no Betti numbers")
    return max(sum(1 for e in b if e) - i for (i, b) in table.entries)


def reg(I: MonomialIdeal, table: BettiTable | None = None) -> int:
    """Castelnuovo-Mumford regularity of ``I``: ``max deg b - i``."""
    if table is None:
        table = betti_table(I)
    if not table.entries:
        raise ValueError("the zero ideal has no Betti numbers")
    return max(sum(b) - i for (i, b) in table.entries)


def is_support_linear(I: MonomialIdeal, d: int) -> bool:
    """``I = I<d>`` and ``suppreg(I) = d``."""
    if I.is_zero or not 0 <= d <= I.n:
        return False
    if support_component(I, d) != I:
        return False
    return suppreg(I) == d


def support_linearity_profile(I: MonomialIdeal) -> dict[int, bool]:
    out = {}
    for d in range(I.n + 1):
        comp = support_component(I, d)
        if not comp.is_zero:
            out[d] = is_support_linear(comp, d)
    return out


def is_componentwise_support_linear(I: MonomialIdeal) -> bool:
    return all(support_linearity_profile(I).values())


def suppreg_truncation_profile(I: MonomialIdeal) -> dict[int, bool]:
    """For each ``l``, whether ``I<>=l>`` is ``l``-support-linear."""
    out = {}
    for l in range(I.n + 1):
        comp = support_component(I, l, "at_least")
        if not comp.is_zero:
            out[l] = is_support_linear(comp, l)
    return out


def min_linear_truncation(I: MonomialIdeal) -> int | None:
    holding = [l for l, ok in suppreg_truncation_profile(I).items() if ok]
    return min(holding, default=None)
