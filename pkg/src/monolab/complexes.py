"""Simplicial complexes on the ground set [n] and their dual ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable

from .core import IrreducibleIdeal, Monomial, MonomialIdeal, lex_compare
from .linalg import rank
from .quotients import DEFAULT_CAP, has_linear_quotients
from .reports import CapExceeded, PropertyReport, Verdict

FACE_CAP = 20
Face = frozenset  # frozenset[int]


def _antichain(sets: Iterable[frozenset]) -> frozenset[frozenset]:
    uniq = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= k for k in kept):
            kept.append(s)
    return frozenset(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets over the vertex set ``[n]``.

    The void complex has no facets; ``{∅}`` has the single empty facet.
    """

    n: int
    facets: frozenset

    def __init__(self, n: int, facets: Iterable[Iterable[int]] = ()):
        fs = [frozenset(f) for f in facets]
        for f in fs:
            if not f <= set(range(1, n + 1)):
                raise ValueError(f"face {sorted(f)} not inside [1, {n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", _antichain(fs))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n, [])

    @classmethod
    def empty_face(cls, n: int) -> SimplicialComplex:
        return cls(n, [()])

    @classmethod
    def simplex(cls, vertices: Iterable[int], n: int) -> SimplicialComplex:
        return cls(n, [vertices])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @cached_property
    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(f)) for f in self.facets), key=lambda f: (len(f), f))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dim(self) -> int:
        """``max |F| - 1``; ``-1`` for ``{∅}`` and, by convention, for the void complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def __contains__(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> set[frozenset]:
        if self.n > FACE_CAP:
            raise CapExceeded(f"face enumeration capped at n <= {FACE_CAP}")
        out: set[frozenset] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(frozenset(c) for c in combinations(fl, k))
        return out

    def faces_by_dim(self) -> dict[int, list[tuple[int, ...]]]:
        out: dict[int, list[tuple[int, ...]]] = {}
        for f in self.faces():
            out.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
        for v in out.values():
            v.sort()
        return out

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets) + ">"


def deletion(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    if delta.is_void:
        return delta
    return SimplicialComplex(delta.n, [f - {v} for f in delta.facets])


def link(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    return SimplicialComplex(delta.n, [f - {v} for f in delta.facets if v in f])


def skeleton(delta: SimplicialComplex, r: int, s: int) -> SimplicialComplex:
    """Faces of dimension <= s lying in some facet of dimension >= r."""
    if not 0 <= r <= s <= delta.dim:
        raise ValueError(f"need 0 <= r <= s <= dim = {delta.dim}, got r={r}, s={s}")
    out = []
    for f in delta.facets:
        if len(f) - 1 < r:
            continue
        if len(f) <= s + 1:
            out.append(f)
        else:
            out.extend(frozenset(c) for c in combinations(sorted(f), s + 1))
    return SimplicialComplex(delta.n, out)


def facet_skeleton(delta: SimplicialComplex, i: int = 1) -> SimplicialComplex:
    if i < 1:
        raise ValueError("i must be at least 1")
    for _ in range(i):
        if delta.is_void or frozenset() in delta.facets:
            raise ValueError("cannot take the facet skeleton below {∅}")
        delta = SimplicialComplex(
            delta.n, [f - {v} for f in delta.facets for v in f])
    return delta


# ---------------------------------------------------------------------------
# duality


def _complement(f: frozenset, n: int) -> frozenset:
    return frozenset(range(1, n + 1)) - f


def dual_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """``I(Δ^c) = <x^{F^c} : F a facet>``, the Stanley-Reisner ideal of Δ^∨."""
    n = delta.n
    return MonomialIdeal(n, [Monomial.from_support(_complement(f, n), n) for f in delta.facets])


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree:
        raise ValueError(f"{I} is not squarefree")


def eagon_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex Δ with ``I_{Δ^∨} = I``: faces F with ``x^{F^c} ∈ I``."""
    _require_squarefree(I)
    return SimplicialComplex(I.n, [_complement(g.support, I.n) for g in I.gens])


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal of minimal nonfaces."""
    n = delta.n
    if n > FACE_CAP:
        raise CapExceeded(f"nonface enumeration capped at n <= {FACE_CAP}")
    gens = []
    for k in range(n + 1):
        for c in combinations(range(1, n + 1), k):
            s = frozenset(c)
            if s in delta:
                continue
            if all(s - {v} in delta for v in s):
                gens.append(Monomial.from_support(s, n))
    return MonomialIdeal(n, gens)


def sr_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``I``."""
    _require_squarefree(I)
    n = I.n
    if I.is_unit:
        return SimplicialComplex.void(n)
    nonfaces = [g.support for g in I.gens]
    faces = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)
             if not any(s <= set(c) for s in nonfaces)]
    return SimplicialComplex(n, faces)


# ---------------------------------------------------------------------------
# homology


def reduced_homology_rank(delta: SimplicialComplex, i: int, characteristic: int = 0) -> int:
    """Rank of the reduced homology group in degree ``i`` over Q or GF(p)."""
    if delta.is_void or i < -1:
        return 0
    by_dim = delta.faces_by_dim()
    return _homology_from_faces(by_dim, i, characteristic)


def reduced_homology(delta: SimplicialComplex, characteristic: int = 0) -> dict[int, int]:
    """All nonzero reduced Betti numbers of ``delta``."""
    if delta.is_void:
        return {}
    by_dim = delta.faces_by_dim()
    out = {}
    for i in range(-1, max(by_dim) + 1):
        h = _homology_from_faces(by_dim, i, characteristic)
        if h:
            out[i] = h
    return out


def _boundary_rank(by_dim: dict, k: int, characteristic: int) -> int:
    """Rank of the boundary map from k-faces to (k-1)-faces."""
    src, tgt = by_dim.get(k, []), by_dim.get(k - 1, [])
    if not src or not tgt:
        return 0
    index = {f: r for r, f in enumerate(tgt)}
    mat = [[0] * len(src) for _ in tgt]
    for c, f in enumerate(src):
        for pos in range(len(f)):
            mat[index[f[:pos] + f[pos + 1:]]][c] = -1 if pos % 2 else 1
    return rank(mat, characteristic)


def _homology_from_faces(by_dim: dict, i: int, characteristic: int) -> int:
    dim_c = len(by_dim.get(i, []))
    if not dim_c:
        return 0
    return dim_c - _boundary_rank(by_dim, i, characteristic) - _boundary_rank(by_dim, i + 1, characteristic)


# ---------------------------------------------------------------------------
# combinatorial properties


def is_shellable(delta: SimplicialComplex, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Shellable iff the dual ideal has linear quotients; the certificate is
    the induced shelling order of the facets."""
    I = dual_ideal(delta)
    if I.is_zero:
        return PropertyReport("shellable", Verdict.HOLDS, certificate=[])
    rep = has_linear_quotients(I, cap=cap)
    rep.name = "shellable"
    if rep.holds:
        rep.certificate = [tuple(sorted(_complement(u.support, delta.n)))
                           for u in rep.certificate.monomials]
    return rep


def is_shelling_order(facets: list[Iterable[int]]) -> bool:
    """Direct nonpure shelling test: each facet meets the union of the
    earlier ones in a pure codimension-one subcomplex of its boundary."""
    fs = [frozenset(f) for f in facets]
    for j in range(1, len(fs)):
        inter = _antichain(fs[i] & fs[j] for i in range(j))
        if any(len(g) != len(fs[j]) - 1 for g in inter):
            return False
    return True


def is_vertex_decomposable(delta: SimplicialComplex, max_calls: int = 200_000) -> PropertyReport:
    """Recursive shedding-vertex search; the certificate lists, for each
    decomposed complex, the shedding vertex chosen."""
    memo: dict[frozenset, int | None | bool] = {}
    calls = 0

    def vd(d: SimplicialComplex) -> bool:
        nonlocal calls
        key = d.facets
        if key in memo:
            return memo[key] is not False
        calls += 1
        if calls > max_calls:
            raise CapExceeded("vertex decomposability search budget exhausted")
        if len(d.facets) <= 1:
            memo[key] = None
            return True
        for v in sorted(d.vertices):
            dl, lk = deletion(d, v), link(d, v)
            if lk.facets & dl.facets:
                continue
            if vd(dl) and vd(lk):
                memo[key] = v
                return True
        memo[key] = False
        return False

    try:
        ok = vd(delta)
    except CapExceeded as exc:
        return PropertyReport("vertex_decomposable", Verdict.UNKNOWN, stats={"reason": str(exc)})
    cert = None
    if ok:
        cert = []

        def walk(d: SimplicialComplex) -> None:
            v = memo[d.facets]
            if v is None:
                return
            cert.append((str(d), v))
            walk(deletion(d, v))
            walk(link(d, v))

        walk(delta)
    return PropertyReport.from_bool("vertex_decomposable", ok, certificate=cert,
                                    witness={"reason": "no shedding vertex"}, calls=calls)


def _lex_greater(F: frozenset, G: frozenset, n: int) -> bool:
    return lex_compare(Monomial.from_support(F, n), Monomial.from_support(G, n)) > 0


def _wcp_violation(delta: SimplicialComplex):
    n = delta.n
    for F in delta.facets:
        for G in delta.facets:
            if F == G:
                continue
            # the pair is oriented through the complements, x^{F^c} >_lex x^{G^c}
            if not _lex_greater(_complement(F, n), _complement(G, n), n):
                continue
            i = min(G - F)
            if not any(j not in G and (G - {i}) | {j} in delta for j in range(i + 1, n + 1)):
                return (tuple(sorted(F)), tuple(sorted(G)), i)
    return None


def is_weakly_co_polymatroidal(delta: SimplicialComplex, essential: bool = False,
                               max_n: int = 8) -> PropertyReport:
    name = "essential_weakly_co_polymatroidal" if essential else "weakly_co_polymatroidal"
    if not essential:
        bad = _wcp_violation(delta)
        return PropertyReport.from_bool(name, bad is None,
                                        witness=None if bad is None else
                                        {"F": bad[0], "G": bad[1], "i": bad[2]})
    if delta.n > max_n:
        return PropertyReport(name, Verdict.UNKNOWN, stats={"reason": f"n > {max_n}"})
    for perm in permutations(range(1, delta.n + 1)):
        relabel = dict(zip(range(1, delta.n + 1), perm))
        moved = relabel_complex(delta, relabel)
        if _wcp_violation(moved) is None:
            return PropertyReport.from_bool(name, True, certificate={"relabeling": perm})
    return PropertyReport.from_bool(name, False, witness={"reason": "every relabeling fails"})


def relabel_complex(delta: SimplicialComplex, relabel: dict[int, int]) -> SimplicialComplex:
    return SimplicialComplex(delta.n, [{relabel[v] for v in f} for f in delta.facets])


def co_stable_check(delta: SimplicialComplex, variant: str = "WIS") -> PropertyReport:
    from .classes import is_I_stable

    rep = is_I_stable(dual_ideal(delta), IrreducibleIdeal.squares(delta.n), variant)
    rep.name = {"IS": "co_stable", "WIS": "weakly_co_stable", "SIS": "strongly_co_stable"}[
        variant.upper()]
    return rep


homology_rank = reduced_homology_rank
