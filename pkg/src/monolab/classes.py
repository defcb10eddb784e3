"""Weakly polymatroidal, I-stable, variable decomposable and sequentially
pure monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .core import (
    IrreducibleIdeal,
    Monomial,
    MonomialIdeal,
    degree_component,
    ideal_wedge,
    lex_compare,
    lex_sorted,
    shakin_compare,
    std_form,
    support_component,
)
from .quotients import GeneratorOrder, components
from .reports import CapExceeded, PropertyReport, Verdict

VARIANTS = ("IS", "WIS", "SIS")


# ---------------------------------------------------------------------------
# weakly polymatroidal


def wp_violation(I: MonomialIdeal):
    """First pair ``u >_lex v`` in ``G(I)`` breaking the exchange condition,
    as ``(u, v, t)``; ``None`` if the ideal is weakly polymatroidal."""
    gens = lex_sorted(I.gens)
    for a, u in enumerate(gens):
        for v in gens[a + 1:]:
            t = next(i for i in range(1, I.n + 1) if u.exps[i - 1] != v.exps[i - 1])
            if not any(v.exps[j - 1] and v.div_var(j).times_var(t) in I
                       for j in range(t + 1, I.n + 1)):
                return (u, v, t)
    return None


def is_weakly_polymatroidal(I: MonomialIdeal) -> PropertyReport:
    bad = wp_violation(I)
    return PropertyReport.from_bool(
        "weakly_polymatroidal", bad is None,
        witness=None if bad is None else {"u": bad[0], "v": bad[1], "t": bad[2]})


def _initial_lex_segment(head: MonomialIdeal, whole: MonomialIdeal) -> bool:
    top = lex_sorted(whole.gens)[: len(head.gens)]
    return set(top) == head.gen_set


def init_deg_components(I: MonomialIdeal) -> bool:
    """``G(m I_{a-1})`` is the lex-initial part of ``G(I_a)`` for every ``a``."""
    mx = MonomialIdeal.maximal(I.n)
    for a in range(I.min_degree + 1, I.max_degree + 1):
        if not _initial_lex_segment(degree_component(I, a - 1) * mx, degree_component(I, a)):
            return False
    return True


def init_deg_pairs(I: MonomialIdeal) -> bool:
    """``deg u < deg v`` implies ``u >_lex v`` on ``G(I)``."""
    return all(lex_compare(u, v) > 0 for u in I.gens for v in I.gens if u.degree < v.degree)


def init_supp_conditions(I: MonomialIdeal) -> bool:
    mx = MonomialIdeal.maximal(I.n)
    for a in range(1, I.n + 1):
        prev = support_component(I, a - 1)
        if not ideal_wedge(prev, mx).gen_set <= support_component(I, a).gen_set:
            return False
    return all(lex_compare(u, v) > 0 for u in I.gens for v in I.gens if u.suppdeg < v.suppdeg)


@dataclass
class WPProfile:
    wp: bool
    cpt_wp: bool
    scpt_wp: bool
    init_deg: bool
    init_deg_pairs: bool
    init_supp: bool
    failing_degree_components: list[int] = field(default_factory=list)
    failing_support_components: list[int] = field(default_factory=list)


def wp_profile(I: MonomialIdeal) -> WPProfile:
    bad_deg = [d for d, J in components(I, "degree").items() if wp_violation(J)]
    bad_supp = [d for d, J in components(I, "support").items() if wp_violation(J)]
    return WPProfile(
        wp=wp_violation(I) is None,
        cpt_wp=not bad_deg,
        scpt_wp=not bad_supp,
        init_deg=init_deg_components(I),
        init_deg_pairs=init_deg_pairs(I),
        init_supp=init_supp_conditions(I),
        failing_degree_components=bad_deg,
        failing_support_components=bad_supp,
    )


def lex_order(I: MonomialIdeal) -> GeneratorOrder:
    return GeneratorOrder.from_monomials(I, lex_sorted(I.gens))


# ---------------------------------------------------------------------------
# I-stable ideals


def _max_var(u: Monomial) -> int:
    """Largest index in the support; 0 stands in for -infinity at ``u = 1``."""
    return max(u.support, default=0)


def stability_violation(J: MonomialIdeal, P: IrreducibleIdeal, variant: str):
    variant = variant.upper()
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")

    def member(m: Monomial) -> bool:
        return m in J or m in P

    for u in J.gens:
        mu = _max_var(u)
        supp = sorted(u.support)
        if variant == "SIS":
            for i in supp:
                for j in range(1, i):
                    if not member(u.div_var(i).times_var(j)):
                        return (u, i, j)
            continue
        bound = mu if variant == "IS" else (_max_var(u.div_var(mu)) if mu else 0)
        for j in range(1, bound):
            if not any(member(u.div_var(i).times_var(j)) for i in supp if i > j):
                return (u, None, j)
    return None


def is_I_stable(J: MonomialIdeal, P: IrreducibleIdeal, variant: str = "WIS") -> PropertyReport:
    if std_form(J, P) != J:
        raise ValueError("J must be in standard form with respect to P")
    bad = stability_violation(J, P, variant)
    return PropertyReport.from_bool(
        f"{variant.upper()}-stable", bad is None,
        witness=None if bad is None else {"u": bad[0], "i": bad[1], "j": bad[2]})


def shakin_sorted(monos: Sequence[Monomial]) -> list[Monomial]:
    from functools import cmp_to_key

    return sorted(monos, key=cmp_to_key(shakin_compare))


def stable_prefix_family(J: MonomialIdeal, P: IrreducibleIdeal,
                         variant: str = "WIS") -> list[PropertyReport]:
    if std_form(J, P) != J:
        raise ValueError("J must be in standard form with respect to P")
    gens = shakin_sorted(J.gens)
    return [is_I_stable(MonomialIdeal(J.n, gens[:k]), P, variant)
            for k in range(1, len(gens) + 1)]


def stable_m_closure(J: MonomialIdeal, P: IrreducibleIdeal, variant: str = "WIS") -> PropertyReport:
    """Checks that ``std_P(m J)`` keeps the stability variant of ``J``."""
    if not is_I_stable(J, P, variant).holds:
        raise ValueError(f"J is not {variant}-stable")
    K = std_form(J.times_maximal(), P)
    rep = is_I_stable(K, P, variant)
    rep.name = f"std(mJ) {variant.upper()}-stable"
    rep.stats["closure"] = K
    return rep


def componentwise_std(J: MonomialIdeal, P: IrreducibleIdeal) -> dict[int, MonomialIdeal]:
    return {d: std_form(degree_component(J, d), P)
            for d in range(J.min_degree, J.max_degree + 1)}


# ---------------------------------------------------------------------------
# variable decomposability


@dataclass(frozen=True)
class SheddingTree:
    """Decomposition witness.  ``variable`` is ``None`` at a base node
    (``<0>`` or ``<1>``); otherwise ``children[i]`` is the layer ``I_i``."""

    ideal: MonomialIdeal
    variable: int | None = None
    children: tuple[SheddingTree, ...] = ()

    @property
    def tag(self) -> str:
        if self.variable is not None:
            return "split"
        return "zero" if self.ideal.is_zero else "unit"

    def to_json(self) -> dict:
        out = {"ideal": str(self.ideal), "tag": self.tag}
        if self.variable is not None:
            out["variable"] = self.variable
            out["layers"] = [c.to_json() for c in self.children]
        return out


def layers(I: MonomialIdeal, v: int) -> list[MonomialIdeal]:
    """``I_0..I_r`` for the variable ``x_v``: ``I_i`` collects ``u / x_v^i``
    over generators of ``x_v``-degree exactly ``i``."""
    r = max(u.exps[v - 1] for u in I.gens)
    out = []
    for i in range(r + 1):
        gens = [_strip(u, v) for u in I.gens if u.exps[v - 1] == i]
        out.append(MonomialIdeal(I.n, gens))
    return out


def _strip(u: Monomial, v: int) -> Monomial:
    exps = list(u.exps)
    exps[v - 1] = 0
    return Monomial(tuple(exps))


def shedding_conditions(parts: Sequence[MonomialIdeal], strong: bool) -> bool:
    mx = MonomialIdeal.maximal(parts[0].n)
    for lower, upper in zip(parts, parts[1:]):
        bigger = ideal_wedge(upper, mx) if strong else upper * mx
        if not bigger.contains_ideal(lower):
            return False
    return True


def _compressed_key(I: MonomialIdeal) -> tuple:
    used = sorted(I.used_variables())
    return tuple(sorted(tuple(g.exps[i - 1] for i in used) for g in I.gens))


class _VDSearch:
    def __init__(self, strong: bool, max_calls: int):
        self.strong = strong
        self.max_calls = max_calls
        self.calls = 0
        self.memo: dict[tuple, bool] = {}

    def decomposable(self, I: MonomialIdeal) -> bool:
        if I.is_trivial:
            return True
        key = _compressed_key(I)
        if key in self.memo:
            return self.memo[key]
        self.calls += 1
        if self.calls > self.max_calls:
            raise CapExceeded("variable decomposability search budget exhausted")
        ok = self.shedding_variable(I) is not None
        self.memo[key] = ok
        return ok

    def shedding_variable(self, I: MonomialIdeal) -> int | None:
        for v in sorted(I.used_variables()):
            parts = layers(I, v)
            if shedding_conditions(parts, self.strong) and all(map(self.decomposable, parts)):
                return v
        return None

    def tree(self, I: MonomialIdeal) -> SheddingTree:
        if I.is_trivial:
            return SheddingTree(I)
        v = self.shedding_variable(I)
        return SheddingTree(I, v, tuple(self.tree(p) for p in layers(I, v)))


def is_variable_decomposable(I: MonomialIdeal, strong: bool = False,
                             max_calls: int = 100_000) -> PropertyReport:
    name = "strongly_variable_decomposable" if strong else "variable_decomposable"
    search = _VDSearch(strong, max_calls)
    try:
        ok = search.decomposable(I)
        tree = search.tree(I) if ok else None
    except CapExceeded as exc:
        return PropertyReport(name, Verdict.UNKNOWN, stats={"reason": str(exc)})
    return PropertyReport.from_bool(name, ok, certificate=tree,
                                    witness={"reason": "no shedding variable"},
                                    calls=search.calls)


def check_shedding_tree(tree: SheddingTree, strong: bool = False) -> bool:
    """Re-verify every node of a tree against the definition."""
    I = tree.ideal
    if tree.variable is None:
        return I.is_trivial and not tree.children
    parts = layers(I, tree.variable)
    if [c.ideal for c in tree.children] != parts:
        return False
    if not shedding_conditions(parts, strong):
        return False
    return all(check_shedding_tree(c, strong) for c in tree.children)


def _tree_monomials(tree: SheddingTree) -> list[Monomial]:
    I = tree.ideal
    if tree.variable is None:
        return list(I.gens)
    out = []
    for i in range(len(tree.children) - 1, -1, -1):
        out.extend(m.times_var(tree.variable, i) for m in _tree_monomials(tree.children[i]))
    return out


def vd_admissible_order(tree: SheddingTree) -> GeneratorOrder:
    """Layers from the top ``x_v``-power down, each in its own recursive order."""
    return GeneratorOrder.from_monomials(tree.ideal, _tree_monomials(tree))


def wp_shedding_decomposition(I: MonomialIdeal) -> SheddingTree:
    """Tree that always sheds the smallest-index variable present; every
    layer is checked to be weakly polymatroidal with ``I_k ⊆ m I_{k+1}``."""
    if wp_violation(I) is not None:
        raise ValueError(f"{I} is not weakly polymatroidal")
    if I.is_trivial:
        return SheddingTree(I)
    v = min(I.used_variables())
    parts = layers(I, v)
    for p in parts:
        if wp_violation(p) is not None:
            raise AssertionError(f"layer {p} of {I} is not weakly polymatroidal")
    if not shedding_conditions(parts, strong=False):
        raise AssertionError(f"layers of {I} along x{v} violate the containments")
    return SheddingTree(I, v, tuple(wp_shedding_decomposition(p) for p in parts))


# ---------------------------------------------------------------------------
# sequential purity


def restricted_layer(J: MonomialIdeal, t: int, a: Sequence[int]) -> MonomialIdeal:
    """``J_{F,a}`` with ``t = max(F)``: quotients ``u / x^a`` over generators
    agreeing with ``a`` in every variable ``x_j``, ``j <= t``."""
    a = tuple(a) + (0,) * (J.n - len(a))
    gens = []
    for u in J.gens:
        if all(u.exps[j] == a[j] for j in range(t)):
            gens.append(Monomial(tuple(e - (a[j] if j < t else 0) for j, e in enumerate(u.exps))))
    return MonomialIdeal(J.n, gens)


def is_sequentially_pure(J: MonomialIdeal, max_n: int = 8) -> PropertyReport:
    """Exhaustive check.  ``J_{F,a}`` depends on ``F`` only through
    ``t = max(F)`` (``supp(a) ⊆ F`` and entries of ``a`` off ``F`` are 0),
    so the enumeration runs over ``t`` and ``a ∈ [0, D+1]^t``."""
    name = "sequentially_pure"
    if J.n > max_n:
        return PropertyReport(name, Verdict.UNKNOWN, stats={"reason": f"n > {max_n}"})
    D = max((e for g in J.gens for e in g.exps), default=0)
    for t in range(1, J.n + 1):
        for a in product(range(D + 2), repeat=t):
            L = restricted_layer(J, t, a)
            if not any(g.degree == 1 for g in L.gens):
                continue
            if any(g.degree != 1 for g in L.gens):
                return PropertyReport.from_bool(name, False, witness={
                    "t": t, "a": a, "layer": L, "condition": 1})
            bumped = [restricted_layer(J, t, a[:-1] + (a[-1] + k,)) for k in range(1, D + 2)]
            if not (bumped[0].is_unit or all(b.is_zero for b in bumped)):
                return PropertyReport.from_bool(name, False, witness={
                    "t": t, "a": a, "layer": L, "condition": 2, "next": bumped[0]})
    return PropertyReport.from_bool(name, True)
