"""Linear quotients: verification and search for admissible orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    Monomial,
    MonomialIdeal,
    colon_principal,
    ideal_wedge,
    minimal_elements,
    support_component,
    degree_component,
)
from .reports import CapExceeded, PropertyReport, Verdict, timed

DEFAULT_CAP = 12
CONSTRAINTS = ("none", "degree_increasing", "support_degree_increasing")


@dataclass(frozen=True)
class GeneratorOrder:
    """A permutation of ``G(ideal)``; ``seq`` indexes into ``ideal.gens``."""

    ideal: MonomialIdeal
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.seq) != list(range(len(self.ideal.gens))):
            raise ValueError("sequence is not a permutation of the generators")

    @classmethod
    def from_monomials(cls, ideal: MonomialIdeal, monos: Iterable[Monomial]) -> GeneratorOrder:
        index = {g: i for i, g in enumerate(ideal.gens)}
        try:
            seq = tuple(index[m] for m in monos)
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]} is not a minimal generator") from None
        return cls(ideal, seq)

    @property
    def monomials(self) -> list[Monomial]:
        return [self.ideal.gens[i] for i in self.seq]

    def __len__(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return ", ".join(map(str, self.monomials))


def is_degree_increasing(monos: Sequence[Monomial]) -> bool:
    return all(a.degree <= b.degree for a, b in zip(monos, monos[1:]))


def is_support_degree_increasing(monos: Sequence[Monomial]) -> bool:
    return all(a.suppdeg <= b.suppdeg for a, b in zip(monos, monos[1:]))


def colon_generators(prefix: Sequence[Monomial], u: Monomial) -> list[Monomial]:
    """Minimal generators of ``<prefix> : u``."""
    return minimal_elements(colon_principal(p, u) for p in prefix)


def _variable_of(m: Monomial) -> int | None:
    if m.degree != 1:
        return None
    return next(i for i, e in enumerate(m.exps, 1) if e)


def admissibility_certificate(monos: Sequence[Monomial]) -> list[tuple[int, int, int, int]] | None:
    """``(i, j, k, d)`` witnesses, positions 1-indexed: ``<u_k>:u_j = <x_d>``
    and ``x_d`` divides ``u_i / gcd(u_i, u_j)``.  ``None`` if some pair has
    no witness."""
    cert = []
    for j in range(1, len(monos)):
        uj = monos[j]
        lin = []
        for k in range(j):
            d = _variable_of(colon_principal(monos[k], uj))
            if d is not None:
                lin.append((k, d))
        for i in range(j):
            q = colon_principal(monos[i], uj)
            hit = next(((k, d) for k, d in lin if q.exps[d - 1]), None)
            if hit is None:
                return None
            cert.append((i + 1, j + 1, hit[0] + 1, hit[1]))
    return cert


def verify_certificate(monos: Sequence[Monomial], cert) -> bool:
    """Independent re-check of a certificate from :func:`admissibility_certificate`."""
    needed = {(i, j) for j in range(2, len(monos) + 1) for i in range(1, j)}
    seen = set()
    for i, j, k, d in cert:
        if not (1 <= i < j and 1 <= k < j <= len(monos)):
            return False
        uj = monos[j - 1]
        ck = colon_principal(monos[k - 1], uj)
        if ck != Monomial.var(d, uj.n):
            return False
        if colon_principal(monos[i - 1], uj).exps[d - 1] == 0:
            return False
        seen.add((i, j))
    return seen == needed


def is_admissible_sequence(monos: Sequence[Monomial]) -> bool:
    return all(
        all(g.degree == 1 for g in colon_generators(monos[:j], monos[j]))
        for j in range(1, len(monos))
    )


def is_admissible_order(order: GeneratorOrder | Sequence[Monomial]) -> PropertyReport:
    monos = order.monomials if isinstance(order, GeneratorOrder) else list(order)
    stats: dict = {}
    with timed(stats):
        witness = None
        for j in range(1, len(monos)):
            gens = colon_generators(monos[:j], monos[j])
            bad = [g for g in gens if g.degree != 1]
            if bad:
                witness = {"position": j + 1, "generator": monos[j],
                           "colon": gens, "nonlinear": bad[0]}
                break
        cert = admissibility_certificate(monos) if witness is None else None
    return PropertyReport.from_bool("linear_quotients_order", witness is None,
                                    certificate=cert, witness=witness, **stats)


# ---------------------------------------------------------------------------
# search


class _Searcher:
    """Depth-first search over admissible prefixes.

    Whether a prefix can be completed depends only on its *set* of
    generators, so failed sets are memoized as bitmasks.
    """

    def __init__(self, gens: Sequence[Monomial], blocks: Sequence[Sequence[int]]):
        self.gens = list(gens)
        self.blocks = [list(b) for b in blocks if b]
        m = len(self.gens)
        # lin[k][c]: bit of x_d when <u_k>:u_c = <x_d>, else 0
        # supp[i][c]: support bitmask of u_i / gcd(u_i, u_c)
        self.lin = [[0] * m for _ in range(m)]
        self.supp = [[0] * m for _ in range(m)]
        for a in range(m):
            for c in range(m):
                if a == c:
                    continue
                q = colon_principal(self.gens[a], self.gens[c])
                mask = 0
                for i, e in enumerate(q.exps):
                    if e:
                        mask |= 1 << i
                self.supp[a][c] = mask
                if q.degree == 1:
                    self.lin[a][c] = mask
        self.dead: set[int] = set()
        self.nodes = 0

    def can_append(self, used: list[int], c: int) -> bool:
        lin = 0
        for k in used:
            lin |= self.lin[k][c]
        return all(self.supp[i][c] & lin for i in used)

    def run(self) -> list[int] | None:
        used: list[int] = []
        full = (1 << len(self.gens)) - 1
        if self._dfs(used, 0, full):
            return used
        return None

    def _dfs(self, used: list[int], mask: int, full: int) -> bool:
        if mask == full:
            return True
        if mask in self.dead:
            return False
        self.nodes += 1
        block = next(b for b in self.blocks if any(not mask >> i & 1 for i in b))
        for c in block:
            if mask >> c & 1:
                continue
            if used and not self.can_append(used, c):
                continue
            used.append(c)
            if self._dfs(used, mask | 1 << c, full):
                return True
            used.pop()
        self.dead.add(mask)
        return False


def _blocks_for(gens: Sequence[Monomial], constraint: str) -> list[list[int]]:
    if constraint == "none":
        return [list(range(len(gens)))]
    if constraint == "degree_increasing":
        key = lambda m: m.degree  # noqa: E731
    elif constraint == "support_degree_increasing":
        key = lambda m: m.suppdeg  # noqa: E731
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    values = sorted({key(g) for g in gens})
    return [[i for i, g in enumerate(gens) if key(g) == v] for v in values]


def search_order(I: MonomialIdeal, blocks: Sequence[Sequence[int]], cap: int = DEFAULT_CAP,
                 stats: dict | None = None) -> GeneratorOrder | None:
    """Admissible order exhausting ``blocks`` (index lists into ``G(I)``) in turn."""
    if I.is_zero:
        raise ValueError("the zero ideal has no generators to order")
    if len(I.gens) > cap:
        raise CapExceeded(f"{len(I.gens)} generators exceed the cap of {cap}")
    s = _Searcher(I.gens, blocks)
    found = s.run()
    if stats is not None:
        stats["nodes"] = s.nodes
        stats["dead_states"] = len(s.dead)
    return None if found is None else GeneratorOrder(I, tuple(found))


def find_admissible_order(I: MonomialIdeal, constraint: str = "none",
                          cap: int = DEFAULT_CAP) -> GeneratorOrder | None:
    """First admissible order (canonical tie-breaking), or ``None``.

    Raises :class:`CapExceeded` when ``G(I)`` is larger than ``cap``.
    """
    return search_order(I, _blocks_for(I.gens, constraint), cap)


def has_linear_quotients(I: MonomialIdeal, constraint: str = "none",
                         cap: int = DEFAULT_CAP) -> PropertyReport:
    name = "linear_quotients" if constraint == "none" else f"linear_quotients[{constraint}]"
    stats: dict = {"generators": len(I.gens)}
    with timed(stats):
        try:
            order = search_order(I, _blocks_for(I.gens, constraint), cap, stats)
        except CapExceeded as exc:
            return PropertyReport(name, Verdict.UNKNOWN, stats={**stats, "reason": str(exc)})
    return PropertyReport.from_bool(name, order is not None, certificate=order,
                                    witness={"reason": "search exhausted"}, **stats)


def brute_force_orders(I: MonomialIdeal) -> list[tuple[Monomial, ...]]:
    """All admissible orders by plain enumeration (tiny ideals only)."""
    from itertools import permutations

    return [p for p in permutations(I.gens) if is_admissible_sequence(p)]


# ---------------------------------------------------------------------------
# Popescu quotients


def _is_irreducible_gens(gens: Sequence[Monomial]) -> bool:
    return all(g.suppdeg == 1 for g in gens)


def is_popescu_order(order: GeneratorOrder | Sequence[Monomial], s: int = 1,
                     weak: bool = False) -> PropertyReport:
    monos = order.monomials if isinstance(order, GeneratorOrder) else list(order)
    name = "weak_popescu_order" if weak else "popescu_order"
    if weak:
        s = 1
    if not 1 <= s <= len(monos):
        raise ValueError(f"s={s} outside [1, {len(monos)}]")
    if not weak:
        first = monos[0].support
        for j in range(1, s):
            if monos[j].support != first:
                return PropertyReport.from_bool(name, False, witness={
                    "condition": "a", "position": j + 1, "generator": monos[j]})
    for i in range(s, len(monos)):
        gens = colon_generators(monos[:i], monos[i])
        if not _is_irreducible_gens(gens):
            return PropertyReport.from_bool(name, False, witness={
                "condition": "b", "position": i + 1, "generator": monos[i], "colon": gens})
    if not weak:
        for i, a in enumerate(monos):
            for j, b in enumerate(monos):
                if j < i and a.support < b.support:
                    return PropertyReport.from_bool(name, False, witness={
                        "condition": "c", "positions": (j + 1, i + 1)})
    return PropertyReport.from_bool(name, True, certificate={"s": s})


# ---------------------------------------------------------------------------
# the order on I ∧ m built from a support-degree increasing admissible order


def wedge_order_construction(I: MonomialIdeal, order: GeneratorOrder) -> GeneratorOrder:
    if order.ideal != I:
        raise ValueError("order is over a different ideal")
    monos = order.monomials
    if not is_support_degree_increasing(monos):
        raise ValueError("order is not support-degree increasing")
    if not is_admissible_sequence(monos):
        raise ValueError("order is not admissible")
    n = I.n
    pairs = [(i, j) for i, u in enumerate(monos) for j in range(1, n + 1) if not u.exps[j - 1]]
    prods = {p: monos[p[0]].times_var(p[1]) for p in pairs}
    kept = [
        (r, s) for r, s in pairs
        if not any(i < r and prods[(i, j)].divides(prods[(r, s)]) for i, j in pairs)
    ]
    target = ideal_wedge(I, MonomialIdeal.maximal(n))
    # raises if a survivor is not a minimal generator of I ∧ m
    return GeneratorOrder.from_monomials(target, [prods[p] for p in kept])


# ---------------------------------------------------------------------------
# componentwise checks


def components(I: MonomialIdeal, mode: str) -> dict[int, MonomialIdeal]:
    """Nonzero components ``I_d`` (``degree``), ``I<d>`` (``support``) or
    ``I<>=d>`` (``support_geq``)."""
    out = {}
    if I.is_zero:
        return out
    if mode == "degree":
        for d in range(I.min_degree, I.max_degree + 1):
            out[d] = degree_component(I, d)
    elif mode == "support":
        for d in range(0, I.n + 1):
            out[d] = support_component(I, d)
    elif mode == "support_geq":
        for d in range(1, I.n + 1):
            out[d] = support_component(I, d, "at_least")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return {d: J for d, J in out.items() if not J.is_zero}


def componentwise_lq(I: MonomialIdeal, mode: str = "support",
                     cap: int = DEFAULT_CAP) -> dict[int, PropertyReport]:
    return {d: has_linear_quotients(J, cap=cap) for d, J in components(I, mode).items()}


def summarize(reports: dict[int, PropertyReport], name: str) -> PropertyReport:
    """Fold per-component reports: fails beats unknown beats holds."""
    failing = {d: r for d, r in reports.items() if r.fails}
    if failing:
        d = min(failing)
        return PropertyReport(name, Verdict.FAILS, witness={"component": d,
                                                            "report": failing[d].to_json()})
    if any(r.unknown for r in reports.values()):
        return PropertyReport(name, Verdict.UNKNOWN,
                              stats={"unknown": sorted(d for d, r in reports.items() if r.unknown)})
    return PropertyReport(name, Verdict.HOLDS,
                          certificate={d: r.certificate for d, r in reports.items()})


def pack_compatibility(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Search a family of admissible orders of the support components in
    which all of ``G(I<d> ∧ m)`` leads ``σ_{d+1}``."""
    name = "pack_compatibility"
    comps = components(I, "support")
    mx = MonomialIdeal.maximal(I.n)
    orders: dict[int, GeneratorOrder] = {}
    try:
        for d, J in comps.items():
            prev = comps.get(d - 1)
            head: set[Monomial] = set()
            if prev is not None:
                head = set(ideal_wedge(prev, mx).gens)
                # the whole of G(I<d-1> ∧ m) must lead the order, so it has to sit in G(I<d>)
                outside = head - J.gen_set
                if outside:
                    return PropertyReport.from_bool(name, False, witness={
                        "component": d, "not_minimal": sorted(outside, key=lambda m: m.exps)})
            first = [i for i, g in enumerate(J.gens) if g in head]
            rest = [i for i, g in enumerate(J.gens) if g not in head]
            found = search_order(J, [first, rest], cap)
            if found is None:
                return PropertyReport.from_bool(name, False, witness={
                    "component": d, "required_prefix": sorted(head, key=lambda m: m.exps)})
            orders[d] = found
    except CapExceeded as exc:
        return PropertyReport(name, Verdict.UNKNOWN, stats={"reason": str(exc)})
    rank = {}
    for d, o in orders.items():
        for pos, m in enumerate(o.monomials):
            rank.setdefault((d, m), pos)
    induced = sorted(I.gens, key=lambda u: (u.suppdeg, rank[(u.suppdeg, u)]))
    return PropertyReport.from_bool(name, True, certificate={
        "component_orders": orders,
        "induced_order": GeneratorOrder.from_monomials(I, induced),
    })
