"""Random instances, the law registry, audits and the counterexample miner.

Every law is a pair of predicates built only from library calls.  An
instance whose evaluation hits an engine cap is counted as skipped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Iterator

from .betti import (betti_table, reg, is_componentwise_support_linear, is_support_linear,
                    min_linear_truncation, suppreg, taylor_betti_table)
from .classes import (VARIANTS, check_shedding_tree, init_deg_components, init_supp_conditions,
                      is_I_stable, is_sequentially_pure, is_variable_decomposable,
                      is_weakly_polymatroidal, lex_order, stable_m_closure, wp_profile,
                      vd_admissible_order, wp_shedding_decomposition)
from .complexes import (SimplicialComplex, dual_ideal, eagon_complex, facet_skeleton,
                        is_shellable, is_vertex_decomposable, skeleton)
from .core import (IrreducibleIdeal, Monomial, MonomialIdeal, alexander_dual_ideal,
                   ideal_wedge, squarefree_part, std_form, support_component)
from .io import format_complex, format_ideal, parse_complex, parse_ideal, to_jsonable
from .quotients import (brute_force_orders, componentwise_lq, find_admissible_order,
                        has_linear_quotients, is_admissible_order,
                        is_support_degree_increasing, pack_compatibility,
                        wedge_order_construction)
from .reports import CapExceeded, PropertyReport


@dataclass(frozen=True)
class GeneratorSpec:
    n: int = 4
    max_exp: int = 3
    max_deg: int = 3
    min_gens: int = 1
    max_gens: int = 5
    squarefree: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if min(self.n, self.max_exp, self.max_deg, self.min_gens) < 1:
            raise ValueError("all bounds must be positive")
        if self.min_gens > self.max_gens:
            raise ValueError("min_gens exceeds max_gens")

    def rng(self, index: int) -> random.Random:
        # string seeds hash deterministically, unlike tuples
        return random.Random(f"{self.seed}:{index}")


def monomial_pool(n: int, max_deg: int, max_exp: int, squarefree: bool = False) -> list[Monomial]:
    """All monomials of degree ``1..max_deg`` with bounded exponents."""
    top = 1 if squarefree else max_exp
    pool = [Monomial(e) for e in product(range(top + 1), repeat=n) if 1 <= sum(e) <= max_deg]
    return sorted(pool, key=lambda m: (m.degree, tuple(-x for x in m.exps)))


def random_ideal(spec: GeneratorSpec, index: int = 0, retries: int = 200) -> MonomialIdeal:
    rng = spec.rng(index)
    pool = monomial_pool(spec.n, spec.max_deg, spec.max_exp, spec.squarefree)
    hi = min(spec.max_gens, len(pool))
    for _ in range(retries):
        k = rng.randint(spec.min_gens, hi) if spec.min_gens <= hi else hi
        I = MonomialIdeal(spec.n, rng.sample(pool, k))
        if spec.min_gens <= len(I.gens) <= spec.max_gens:
            return I
    raise ValueError(f"no ideal within {spec} after {retries} draws")


def _borel_closure(seeds: list[Monomial], P: IrreducibleIdeal, mode: str) -> list[Monomial]:
    """Close under ``u x_j / x_i`` for ``j < i``, moving every ``i`` in the
    support ("strong") or only the largest one ("stable"); stops at ``P``."""
    out = set(seeds)
    todo = list(seeds)
    while todo:
        u = todo.pop()
        if u in P:
            continue
        idx = sorted(u.support) if mode == "strong" else [max(u.support)]
        for i in idx:
            for j in range(1, i):
                w = u.div_var(i).times_var(j)
                if w not in out:
                    out.add(w)
                    todo.append(w)
    return list(out)


def random_stable_pair(spec: GeneratorSpec, index: int = 0,
                       retries: int = 200) -> tuple[MonomialIdeal, IrreducibleIdeal]:
    """``(J, P)`` with ``J = std_P(J)``; roughly a third are strongly closed,
    a third stable-closed and the rest left as drawn."""
    rng = spec.rng(index)
    for _ in range(retries):
        P = IrreducibleIdeal(tuple(rng.choice((0, 2, 3, 4)) for _ in range(spec.n)))
        pool = [m for m in monomial_pool(spec.n, spec.max_deg, spec.max_exp, spec.squarefree)
                if m not in P]
        if not pool:
            continue
        seeds = rng.sample(pool, rng.randint(1, min(3, len(pool))))
        mode = rng.choice(("strong", "stable", "raw"))
        monos = seeds if mode == "raw" else _borel_closure(seeds, P, mode)
        J = std_form(MonomialIdeal(spec.n, monos), P)
        if not J.is_trivial and spec.min_gens <= len(J.gens) <= spec.max_gens:
            return J, P
    raise ValueError(f"no stable pair within {spec} after {retries} draws")


def random_complex(spec: GeneratorSpec, index: int = 0) -> SimplicialComplex:
    """Up to ``max_gens`` random facets on ``[n]``, each missing a vertex."""
    rng = spec.rng(index)
    k = rng.randint(spec.min_gens, spec.max_gens)
    facets = []
    for _ in range(k):
        size = rng.randint(1, max(spec.n - 1, 1))
        facets.append(rng.sample(range(1, spec.n + 1), size))
    return SimplicialComplex(spec.n, facets)


def random_g_determined(spec: GeneratorSpec, index: int = 0) -> tuple[MonomialIdeal, tuple]:
    """``(I, g)`` with every generator of ``I`` dividing ``x^g``."""
    rng = spec.rng(index)
    g = tuple(rng.randint(1, spec.max_exp) for _ in range(spec.n))
    pool = [Monomial(e) for e in product(*(range(x + 1) for x in g)) if any(e)]
    I = MonomialIdeal(spec.n, rng.sample(pool, min(len(pool), rng.randint(spec.min_gens, spec.max_gens))))
    return I, g


def enumerate_ideals(n: int, max_deg: int, max_exp: int | None = None,
                     squarefree: bool = False) -> Iterator[MonomialIdeal]:
    """Every nonzero proper monomial ideal whose generators lie in the pool,
    each exactly once (antichains of the pool, smallest first)."""
    pool = monomial_pool(n, max_deg, max_exp or max_deg, squarefree)

    def grow(start: int, chosen: list[Monomial]) -> Iterator[list[Monomial]]:
        for k in range(start, len(pool)):
            m = pool[k]
            # pool is sorted by degree, so only earlier picks can divide m
            if any(c.divides(m) for c in chosen):
                continue
            chosen.append(m)
            yield list(chosen)
            yield from grow(k + 1, chosen)
            chosen.pop()

    for gens in grow(0, []):
        yield MonomialIdeal(n, gens)


# ---------------------------------------------------------------------------
# instance kinds


@dataclass(frozen=True)
class InstanceKind:
    draw: Callable[[GeneratorSpec, int], Any]
    dump: Callable[[Any], Any]
    load: Callable[[Any], Any]


def _dump_pair(pair) -> dict:
    J, P = pair
    return {"ideal": format_ideal(J), "param": list(P.a)}


def _dump_gdet(pair) -> dict:
    I, g = pair
    return {"ideal": format_ideal(I), "g": list(g)}


KINDS: dict[str, InstanceKind] = {
    "ideal": InstanceKind(random_ideal, format_ideal, parse_ideal),
    "squarefree": InstanceKind(
        lambda spec, i: random_ideal(GeneratorSpec(**{**spec.__dict__, "squarefree": True}), i),
        format_ideal, parse_ideal),
    "stable": InstanceKind(random_stable_pair, _dump_pair,
                           lambda d: (parse_ideal(d["ideal"]), IrreducibleIdeal(tuple(d["param"])))),
    "complex": InstanceKind(random_complex, format_complex, parse_complex),
    "g-determined": InstanceKind(random_g_determined, _dump_gdet,
                                 lambda d: (parse_ideal(d["ideal"]), tuple(d["g"]))),
}


class _Skip(Exception):
    pass


def _truth(value) -> bool:
    if isinstance(value, PropertyReport):
        if value.unknown:
            raise _Skip(value.name)
        return value.holds
    return bool(value)


# ---------------------------------------------------------------------------
# law predicates


def _sdi_order(I):
    try:
        return find_admissible_order(I, "support_degree_increasing")
    except CapExceeded as exc:
        raise _Skip(str(exc)) from None


def _has_lq(I) -> bool:
    return _truth(has_linear_quotients(I))


def _one_suppdeg(I) -> bool:
    return I.min_suppdeg == I.max_suppdeg


def _wp(I) -> bool:
    return _truth(is_weakly_polymatroidal(I))


def _vd(I, strong=False) -> bool:
    return _truth(is_variable_decomposable(I, strong=strong))


def _vd_tree_order_ok(I) -> bool:
    rep = is_variable_decomposable(I)
    return check_shedding_tree(rep.certificate) and is_admissible_order(vd_admissible_order(rep.certificate)).holds


def _wedge_order_ok(I) -> bool:
    order = wedge_order_construction(I, _sdi_order(I))
    return (order.ideal == ideal_wedge(I, MonomialIdeal.maximal(I.n))
            and is_admissible_order(order).holds
            and is_support_degree_increasing(order.monomials))


def _all_hold(reports: dict) -> bool:
    return all(_truth(r) for r in reports.values())


def _stable(pair, variant: str) -> bool:
    J, P = pair
    return is_I_stable(J, P, variant).holds


def _wp_tree_ok(I) -> bool:
    return check_shedding_tree(wp_shedding_decomposition(I))


SKELETON_CAP = 24


def _shellable(delta) -> bool:
    return _truth(is_shellable(delta, cap=SKELETON_CAP))


def _skeletons_shellable(delta) -> bool:
    d = max(delta.dim, 0)
    return all(_shellable(skeleton(delta, r, s))
               for s in range(d + 1) for r in range(s + 1))


def _facet_skeletons(delta, check) -> bool:
    out, i = True, 1
    while out and delta.dim - i >= -1:
        out = _truth(check(facet_skeleton(delta, i)))
        i += 1
    return out


def _sqf_vd_conditions_agree(I) -> bool:
    from .classes import layers

    for v in I.used_variables():
        parts = layers(I, v)
        if len(parts) != 2:
            continue
        I0, I1 = parts
        disjoint = not (set((I1 + I0).gens) & set(I0.gens))
        c2 = I1.times_maximal().contains_ideal(I0)
        c3 = ideal_wedge(I1, MonomialIdeal.maximal(I.n)).contains_ideal(I0)
        if not disjoint == c2 == c3:
            return False
    return True


@dataclass(frozen=True)
class Law:
    name: str
    kind: str
    hypothesis: Callable[[Any], bool]
    conclusion: Callable[[Any], bool]
    cites: str


def _law(name, kind, hypothesis, conclusion, cites) -> Law:
    return Law(name, kind, hypothesis, conclusion, cites)


_M = MonomialIdeal.maximal
_always = lambda _x: True  # noqa: E731

LAWS: dict[str, Law] = {law.name: law for law in [
    _law("lq-sdi⇒cpt-supp-linear", "ideal", lambda I: _sdi_order(I) is not None,
         is_componentwise_support_linear, "support-degree increasing order gives componentwise support-linearity"),
    _law("lq-sdi⇒supp-geq-lq", "ideal", lambda I: _sdi_order(I) is not None,
         lambda I: _all_hold(componentwise_lq(I, "support_geq")), "I<>=d> has linear quotients for all d"),
    _law("lq-sdi⇒cpt-supp-lq", "ideal", lambda I: _sdi_order(I) is not None,
         lambda I: _all_hold(componentwise_lq(I, "support")), "support-componentwise linear quotients"),
    _law("lq-sdi⇒wedge-order", "ideal", lambda I: _sdi_order(I) is not None,
         _wedge_order_ok, "constructed order on I∧m is admissible and sdeg-increasing"),
    _law("lq⇒suppreg=max-suppdeg", "ideal", _has_lq,
         lambda I: suppreg(I) == I.max_suppdeg, "suppreg of an LQ ideal"),
    _law("lq⇒reg=max-deg", "ideal", _has_lq,
         lambda I: reg(I) == I.max_degree, "reg of an LQ ideal"),
    _law("lq⇒lq-deg-inc", "ideal", _has_lq,
         lambda I: find_admissible_order(I, "degree_increasing") is not None, "degree-increasing admissible orders"),
    _law("lq-d⇒support-linear", "ideal", lambda I: _one_suppdeg(I) and _has_lq(I),
         lambda I: is_support_linear(I, I.max_suppdeg), "LQ in one support-degree is support-linear"),
    _law("lq-d⇒next-component-lq", "ideal", lambda I: _one_suppdeg(I) and _has_lq(I),
         lambda I: support_component(I * _M(I.n), I.max_suppdeg + 1).is_zero
         or _has_lq(support_component(I * _M(I.n), I.max_suppdeg + 1)), "(Im)<d+1> has linear quotients"),
    _law("pack⇒lq-sdi", "ideal", lambda I: _truth(pack_compatibility(I)),
         lambda I: _sdi_order(I) is not None, "pack-compatible ideals have sdeg-increasing orders"),
    _law("search=brute-force", "ideal", _always,
         lambda I: (find_admissible_order(I) is not None) == bool(brute_force_orders(I)),
         "backtracking agrees with all m! orders"),
    _law("wp⇒lex-admissible", "ideal", _wp,
         lambda I: is_admissible_order(lex_order(I)).holds, "lex order of a WP ideal is admissible"),
    _law("wp-one-suppdeg⇒wedge-wp", "ideal", lambda I: _one_suppdeg(I) and _wp(I),
         lambda I: _wp(ideal_wedge(I, _M(I.n))), "wedge with m keeps WP in one support-degree"),
    _law("wp-one-suppdeg⇒scpt-wp", "ideal", lambda I: _one_suppdeg(I) and _wp(I),
         lambda I: wp_profile(I).scpt_wp, "one support-degree WP is support-componentwise WP"),
    _law("wp⇒sqf-part-wp", "ideal", _wp, lambda I: _wp(squarefree_part(I)), "squarefree part keeps WP"),
    _law("sqf-wp⇒wedge-wp", "squarefree", _wp,
         lambda I: _wp(ideal_wedge(I, _M(I.n))), "squarefree WP: I∧m is WP"),
    _law("cpt-wp∧init-deg⇒wp", "ideal", lambda I: wp_profile(I).cpt_wp and init_deg_components(I),
         _wp, "componentwise WP with initial lex segments"),
    _law("scpt-wp∧init-supp⇒wp", "ideal", lambda I: wp_profile(I).scpt_wp and init_supp_conditions(I),
         _wp, "support-componentwise WP with initial lex segments"),
    _law("wp⇒vd", "ideal", _wp, _vd, "weakly polymatroidal ideals are variable decomposable"),
    _law("wp⇒vd-tree", "ideal", _wp, _wp_tree_ok, "shedding the first variable works for WP"),
    _law("vd⇒lq", "ideal", _vd, _vd_tree_order_ok, "variable decomposable ideals have linear quotients"),
    _law("vd⇒Im-vd", "ideal", _vd, lambda I: _vd(I * _M(I.n)), "Im stays variable decomposable"),
    _law("svd⇒wedge-svd", "ideal", lambda I: _vd(I, strong=True),
         lambda I: _vd(ideal_wedge(I, _M(I.n)), strong=True), "I∧m stays strongly variable decomposable"),
    _law("svd⇒vd", "ideal", lambda I: _vd(I, strong=True), _vd, "strong VD implies VD"),
    _law("sqf-vd⇔svd", "squarefree", _always,
         lambda I: _vd(I) == _vd(I, strong=True), "squarefree: VD iff strong VD"),
    _law("sqf-shedding-conditions-agree", "squarefree", _always, _sqf_vd_conditions_agree,
         "three squarefree shedding conditions coincide"),
    _law("sqf-vd⇔eagon-vd", "squarefree", _always,
         lambda I: _vd(I) == _truth(is_vertex_decomposable(eagon_complex(I))),
         "Eagon complexes of VD ideals are the VD complexes"),
    _law("wis⇒lq", "stable", lambda p: _stable(p, "WIS"), lambda p: _has_lq(p[0]),
         "weakly I-stable ideals have linear quotients"),
    *[_law(f"{v.lower()}⇒m-closure", "stable", (lambda v: lambda p: _stable(p, v))(v),
           (lambda v: lambda p: stable_m_closure(p[0], p[1], v).holds)(v),
           f"std(mJ) stays {v}-stable") for v in VARIANTS],
    _law("wis∧seqpure⇒vd", "stable",
         lambda p: _stable(p, "WIS") and _truth(is_sequentially_pure(p[0])),
         lambda p: _vd(p[0]), "weakly stable and sequentially pure ideals are VD"),
    _law("shellable⇒facet-skeleton-shellable", "complex", lambda d: _truth(is_shellable(d)),
         lambda d: _facet_skeletons(d, _shellable), "facet skeletons of shellable complexes"),
    _law("shellable⇒skeleton-shellable", "complex", lambda d: _truth(is_shellable(d)),
         _skeletons_shellable, "all (r,s)-skeletons of shellable complexes"),
    _law("vd⇒shellable", "complex", lambda d: _truth(is_vertex_decomposable(d)),
         lambda d: _truth(is_shellable(d)), "vertex decomposable complexes are shellable"),
    _law("vd⇒facet-skeleton-vd", "complex", lambda d: _truth(is_vertex_decomposable(d)),
         lambda d: _facet_skeletons(d, is_vertex_decomposable), "facet skeletons of VD complexes"),
    _law("facet-skeleton-dual=wedge", "complex", lambda d: not d.is_void and d.dim >= 0,
         lambda d: dual_ideal(facet_skeleton(d, 1)) == ideal_wedge(dual_ideal(d), _M(d.n)),
         "dual ideal of the facet skeleton"),
    _law("koszul=taylor", "ideal", _always,
         lambda I: betti_table(I) == taylor_betti_table(I), "two Betti routes agree"),
    _law("char0=char2", "ideal", _always,
         lambda I: betti_table(I, 0) == betti_table(I, 2), "small tables are characteristic-free"),
    _law("truncation-min=suppreg", "ideal", _always,
         lambda I: min_linear_truncation(I) == suppreg(I), "min l with I<>=l> l-support-linear"),
    _law("double-dual", "g-determined", _always,
         lambda p: alexander_dual_ideal(alexander_dual_ideal(p[0], p[1]), p[1]) == p[0],
         "(I^[g])^[g] = I"),
]}


# ---------------------------------------------------------------------------
# audit


@dataclass
class AuditResult:
    law: str
    count: int
    hypothesis_held: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    spec: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return to_jsonable({"law": self.law, "count": self.count,
                            "hypothesis_held": self.hypothesis_held, "skipped": self.skipped,
                            "violations": self.violations, "spec": self.spec})


def evaluate(law: Law | str, instance) -> tuple[bool | None, bool | None]:
    """(hypothesis, conclusion); the conclusion is ``None`` when the
    hypothesis fails, and both are ``None`` for a skipped instance."""
    law = get_law(law)
    try:
        if not law.hypothesis(instance):
            return False, None
        return True, bool(law.conclusion(instance))
    except (_Skip, CapExceeded):
        return None, None


def get_law(law: Law | str) -> Law:
    if isinstance(law, Law):
        return law
    try:
        return LAWS[law]
    except KeyError:
        raise KeyError(f"unknown law {law!r}; known: {', '.join(LAWS)}") from None


def audit(law: Law | str, spec: GeneratorSpec, count: int) -> AuditResult:
    law = get_law(law)
    kind = KINDS[law.kind]
    result = AuditResult(law.name, count, spec=dict(spec.__dict__))
    for index in range(count):
        instance = kind.draw(spec, index)
        hyp, concl = evaluate(law, instance)
        if hyp is None:
            result.skipped += 1
        elif hyp:
            result.hypothesis_held += 1
            if not concl:
                result.violations.append({"index": index, "instance": kind.dump(instance),
                                          "hypothesis": True, "conclusion": False})
    return result


def replay(law: Law | str, dumped) -> tuple[bool | None, bool | None]:
    law = get_law(law)
    return evaluate(law, KINDS[law.kind].load(dumped))


# ---------------------------------------------------------------------------
# the open question


def _question_verdicts(I: MonomialIdeal) -> dict | None:
    parts = componentwise_lq(I, "degree")
    if not all(_truth(r) for r in parts.values()):
        return None
    lq = has_linear_quotients(I)
    if not lq.fails:
        return None
    return {"componentwise": {d: r for d, r in parts.items()}, "lq": lq}


def replay_hit(hit: dict) -> bool:
    """Re-derives both verdicts of a reported counterexample."""
    I = parse_ideal(hit["instance"])
    parts = componentwise_lq(I, "degree")
    return all(r.holds for r in parts.values()) and has_linear_quotients(I).fails


def mine_open_question(spec: GeneratorSpec, budget: int, exhaustive: bool = False) -> dict:
    """Looks for an ideal whose degree components all have linear quotients
    while the ideal itself has none."""
    bounds = {"n": spec.n, "max_deg": spec.max_deg, "max_exp": spec.max_exp,
              "max_gens": spec.max_gens, "squarefree": spec.squarefree}
    summary = {"mode": "exhaustive" if exhaustive else "random", "bounds": bounds,
               "seed": spec.seed, "tried": 0, "skipped": 0, "complete": False, "hits": []}
    if exhaustive:
        source = enumerate_ideals(spec.n, spec.max_deg, spec.max_exp, spec.squarefree)
    else:
        source = (random_ideal(spec, i) for i in range(budget))
    done = True
    for I in source:
        if summary["tried"] >= budget:
            done = False
            break
        summary["tried"] += 1
        if len(I.gens) > spec.max_gens and exhaustive:
            summary["skipped"] += 1
            continue
        try:
            hit = _question_verdicts(I)
        except (_Skip, CapExceeded):
            summary["skipped"] += 1
            continue
        if hit:
            summary["hits"].append({"instance": format_ideal(I), **to_jsonable(hit)})
    summary["complete"] = exhaustive and done and not summary["skipped"]
    return summary


def exhaustive_squarefree(n: int) -> Iterator[MonomialIdeal]:
    """All squarefree monomial ideals in ``n`` variables, trivial ones included."""
    yield MonomialIdeal.zero(n)
    yield MonomialIdeal.unit(n)
    yield from enumerate_ideals(n, n, 1, squarefree=True)

