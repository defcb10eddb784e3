"""Exact arithmetic on monomials and monomial ideals.

A monomial in ``n`` variables is stored as its exponent vector, a tuple of
nonnegative ints.  Variables are 1-indexed in every user-facing place
(``x1..xn``, supports, shedding variables); the tuples themselves are
0-indexed as usual in Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

ExponentVector = tuple  # tuple[int, ...]


def check_vector(exps: Iterable[int], n: int | None = None) -> ExponentVector:
    vec = tuple(int(e) for e in exps)
    if n is not None and len(vec) != n:
        raise ValueError(f"expected {n} exponents, got {len(vec)}")
    if any(e < 0 for e in vec):
        raise ValueError(f"negative exponent in {vec}")
    return vec


@dataclass(frozen=True, slots=True)
class Monomial:
    """The monomial x^exps."""

    exps: ExponentVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "exps", check_vector(self.exps))

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Monomial:
        """The pure power x_i^power (i is 1-indexed)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside [1, {n}]")
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> Monomial:
        exps = [0] * n
        for i in support:
            exps[i - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        return support(self)

    @property
    def suppdeg(self) -> int:
        return sum(1 for e in self.exps if e)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def deg_in(self, i: int) -> int:
        return self.exps[i - 1]

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def times_var(self, i: int, power: int = 1) -> Monomial:
        exps = list(self.exps)
        exps[i - 1] += power
        return Monomial(tuple(exps))

    def div_var(self, i: int) -> Monomial:
        if self.exps[i - 1] == 0:
            raise ValueError(f"x{i} does not divide {self}")
        exps = list(self.exps)
        exps[i - 1] -= 1
        return Monomial(tuple(exps))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(min, self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(max, self.exps, other.exps)))

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, n={self.n})"


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m.exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def _check_same_n(*monos: Monomial) -> None:
    if len({m.n for m in monos}) > 1:
        raise ValueError("monomials live in different numbers of variables")


def support(m: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m.exps, start=1) if e)


def suppdeg(m: Monomial) -> int:
    return m.suppdeg


# ---------------------------------------------------------------------------
# wedge product


@dataclass(frozen=True, slots=True)
class SignedMonomial:
    """``sign * mono``; ``mono is None`` encodes the zero element."""

    sign: int = 0
    mono: Monomial | None = None

    @property
    def is_zero(self) -> bool:
        return self.mono is None

    def __neg__(self) -> SignedMonomial:
        if self.is_zero:
            return self
        return SignedMonomial(-self.sign, self.mono)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ("+" if self.sign > 0 else "-") + format_monomial(self.mono)


ZERO = SignedMonomial()


def count_inversions(seq: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(seq, 2) if a > b)


def wedge(m1: Monomial, m2: Monomial) -> SignedMonomial:
    _check_same_n(m1, m2)
    s1, s2 = sorted(m1.support), sorted(m2.support)
    if set(s1) & set(s2):
        return ZERO
    # inversions inside each ascending block are zero, so only cross pairs count
    eps = sum(1 for a in s1 for b in s2 if a > b)
    return SignedMonomial(-1 if eps % 2 else 1, m1 * m2)


# ---------------------------------------------------------------------------
# ideals


def _canonical_key(m: Monomial) -> tuple:
    # degree first; inside a degree lex-descending, so x1 precedes x2
    return (m.degree, tuple(-e for e in m.exps))


def minimal_elements(monos: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal members of ``monos`` in canonical order."""
    uniq = sorted(set(monos), key=_canonical_key)
    kept: list[Monomial] = []
    for m in uniq:
        # a proper divisor has strictly smaller degree, hence already kept
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x1..xn]`` given by its minimal generators.

    ``gens`` is always the canonical minimal generating set, sorted by
    (degree, lex-descending).  ``<0>`` has no generators and ``<1>`` has the
    single generator ``1``.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __init__(self, n: int, gens: Iterable[Monomial | Sequence[int]] = ()):
        if n < 0:
            raise ValueError("n must be nonnegative")
        monos = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
        for m in monos:
            if m.n != n:
                raise ValueError(f"generator {m} is not in {n} variables")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(minimal_elements(monos)))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, [Monomial.one(n)])

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls(n, [Monomial.var(i, n) for i in range(1, n + 1)])

    @classmethod
    def variables(cls, idx: Iterable[int], n: int) -> MonomialIdeal:
        return cls(n, [Monomial.var(i, n) for i in idx])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_trivial(self) -> bool:
        return self.is_zero or self.is_unit

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @cached_property
    def gen_set(self) -> frozenset[Monomial]:
        return frozenset(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(g in self for g in other.gens)

    def __le__(self, other: MonomialIdeal) -> bool:
        return other.contains_ideal(self)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _check_same_ring(self, other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _check_same_ring(self, other)
        return MonomialIdeal(self.n, [a * b for a in self.gens for b in other.gens])

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def times_maximal(self) -> MonomialIdeal:
        return self * MonomialIdeal.maximal(self.n)

    def wedge(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_wedge(self, other)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    @property
    def min_degree(self) -> int:
        return min((g.degree for g in self.gens), default=0)

    @property
    def max_suppdeg(self) -> int:
        return max((g.suppdeg for g in self.gens), default=0)

    @property
    def min_suppdeg(self) -> int:
        return min((g.suppdeg for g in self.gens), default=0)

    def used_variables(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.gens:
            out |= g.support
        return frozenset(out)

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(map(format_monomial, self.gens)) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, {self})"


def _check_same_ring(*ideals: MonomialIdeal) -> None:
    if len({I.n for I in ideals}) > 1:
        raise ValueError("ideals live in different numbers of variables")


def minimalize(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    monos = list(monomials)
    if n is None:
        if not monos:
            raise ValueError("cannot infer n from an empty set")
        n = monos[0].n
    return MonomialIdeal(n, monos)


def ideal_wedge(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    prods = [u * v for u in I.gens for v in J.gens if not (u.support & v.support)]
    return MonomialIdeal(I.n, prods)


def colon_principal(u: Monomial, v: Monomial) -> Monomial:
    """Generator of <u> : v, i.e. u / gcd(u, v)."""
    _check_same_n(u, v)
    return Monomial(tuple(max(a - b, 0) for a, b in zip(u.exps, v.exps)))


def colon_ideal(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    if I.is_trivial:
        raise ValueError("colon of a trivial ideal")
    return MonomialIdeal(I.n, [colon_principal(u, v) for u in I.gens])


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.n, [u.lcm(v) for u in I.gens for v in J.gens])


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield Monomial(tuple(exps))


def degree_component(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """The ideal generated by the degree-``d`` monomials of ``I``."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    for u in I.gens:
        if u.degree <= d:
            out.extend(u * w for w in monomials_of_degree(I.n, d - u.degree))
    return MonomialIdeal(I.n, out)


def support_component(I: MonomialIdeal, d: int, mode: str = "exact") -> MonomialIdeal:
    """``I<d>`` (mode ``"exact"``) or ``I<>=d>`` (mode ``"at_least"``)."""
    if not 0 <= d <= I.n:
        raise ValueError(f"support degree {d} outside [0, {I.n}]")
    if mode == "at_least":
        out: list[Monomial] = []
        for e in range(d, I.n + 1):
            out.extend(support_component(I, e).gens)
        return MonomialIdeal(I.n, out)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for u in I.gens:
        k = d - u.suppdeg
        if k < 0:
            continue
        free = [i for i in range(1, I.n + 1) if not u.exps[i - 1]]
        for F in combinations(free, k):
            out.append(u * Monomial.from_support(F, I.n))
    return MonomialIdeal(I.n, out)


def squarefree_part(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, [g for g in I.gens if g.is_squarefree])


# ---------------------------------------------------------------------------
# irreducible ideals


@dataclass(frozen=True)
class IrreducibleIdeal:
    """``m^a = <x_i^a(i) : a(i) >= 1>``; ``a(i) == 0`` leaves ``x_i`` out."""

    a: ExponentVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", check_vector(self.a))

    @classmethod
    def squares(cls, n: int) -> IrreducibleIdeal:
        return cls((2,) * n)

    @property
    def n(self) -> int:
        return len(self.a)

    def __contains__(self, m: Monomial) -> bool:
        return any(p and e >= p for p, e in zip(self.a, m.exps))

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(
            self.n, [Monomial.var(i, self.n, p) for i, p in enumerate(self.a, 1) if p]
        )

    def __str__(self) -> str:
        return str(self.ideal())


def std_form(J: MonomialIdeal, P: IrreducibleIdeal) -> MonomialIdeal:
    """Generators of ``J`` lying outside ``P``."""
    if J.n != P.n:
        raise ValueError("J and P live in different rings")
    return MonomialIdeal(J.n, [u for u in J.gens if u not in P])


# ---------------------------------------------------------------------------
# orders and vector operations


def lex_compare(u: Monomial, v: Monomial) -> int:
    """+1 if ``u >_lex v``, -1 if ``u <_lex v``, 0 if equal."""
    _check_same_n(u, v)
    for a, b in zip(u.exps, v.exps):
        if a != b:
            return 1 if a > b else -1
    return 0


def shakin_compare(u: Monomial, v: Monomial) -> int:
    """Degree first, then the exponent at the highest differing variable.

    Returns -1 when ``u`` precedes ``v``, +1 when it follows, 0 if equal.
    """
    _check_same_n(u, v)
    if u.degree != v.degree:
        return -1 if u.degree < v.degree else 1
    for a, b in zip(reversed(u.exps), reversed(v.exps)):
        if a != b:
            return -1 if a < b else 1
    return 0


def lex_sorted(monos: Iterable[Monomial]) -> list[Monomial]:
    """Lex-descending: the lex-largest monomial first."""
    return sorted(monos, key=lambda m: m.exps, reverse=True)


def gminus(g: Sequence[int], a: Sequence[int]) -> ExponentVector:
    g, a = check_vector(g), check_vector(a)
    if len(g) != len(a):
        raise ValueError("vectors of different length")
    if any(x > y for x, y in zip(a, g)):
        raise ValueError(f"{a} is not bounded by {g}")
    return tuple(gi + 1 - ai if ai >= 1 else 0 for gi, ai in zip(g, a))


def alexander_dual_ideal(I: MonomialIdeal, g: Sequence[int]) -> MonomialIdeal:
    """Intersection of the irreducible ideals ``m^(g \\ a)`` over ``x^a in G(I)``."""
    g = check_vector(g, I.n)
    top = Monomial(g)
    for u in I.gens:
        if not u.divides(top):
            raise ValueError(f"generator {u} does not divide x^g")
    result = MonomialIdeal.unit(I.n)
    for u in I.gens:
        result = intersect(result, IrreducibleIdeal(gminus(g, u.exps)).ideal())
    return result
