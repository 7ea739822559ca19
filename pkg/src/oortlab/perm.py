"""Permutations and finitely generated permutation groups.

Points are 0-based.  The composition convention is (a * b)(x) = a(b(x)):
``a * b`` applies ``b`` first.  Groups carry a deterministic stabilizer
chain (base points chosen as the lowest moved point) for order and
membership, plus an optional exhaustive element store for desk-scale
groups.
"""

from __future__ import annotations

import math
import os
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, DegreeMismatch, NonMember

DEFAULT_ENUM_CAP = 250_000


def enum_cap() -> int:
    """Current element-enumeration cap (env var OORTLAB_ENUM_CAP overrides)."""
    return int(os.environ.get("OORTLAB_ENUM_CAP", DEFAULT_ENUM_CAP))


class Perm(tuple):
    """A permutation of {0..n-1} stored as its image table.

    Subclasses tuple, so perms hash and compare for free and live happily
    in sets.  Construction does not re-validate bijectivity; use
    :func:`make_perm` for untrusted input.
    """

    __slots__ = ()

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):  # type: ignore[override]
        if len(self) != len(other):
            raise DegreeMismatch(f"degree {len(self)} vs {len(other)}")
        return Perm(map(self.__getitem__, other))

    def __rmul__(self, other):  # pragma: no cover - symmetry only
        return Perm(other) * self

    def inv(self) -> "Perm":
        img = [0] * len(self)
        for i, j in enumerate(self):
            img[j] = i
        return Perm(img)

    def __pow__(self, n: int):  # type: ignore[override]
        if n < 0:
            return self.inv() ** (-n)
        result = identity(len(self))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def cycle_str(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def identity(degree: int) -> Perm:
    return Perm(range(degree))


def make_perm(images: Sequence[int]) -> Perm:
    """Validating constructor: images must be a bijection of {0..n-1}."""
    images = tuple(images)
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
    return Perm(images)


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            if not (0 <= a < degree):
                raise ValueError(f"point {a} out of range for degree {degree}")
            img[a] = b
    return make_perm(img)


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return a * b


def inverse(a: Perm) -> Perm:
    return a.inv()


def element_order(a: Perm) -> int:
    return a.order()


def mulclose(gens: Iterable[Perm], cap: Optional[int] = None) -> Optional[set[Perm]]:
    """Closure of gens under composition (a subgroup, since everything is
    finite).  Returns None if the closure grows past ``cap``."""
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator (or an explicit degree)")
    els: set[Perm] = {identity(len(gens[0]))}
    els.update(gens)
    if cap is not None and len(els) > cap:
        return None
    frontier = list(els)
    while frontier:
        new = []
        for b in frontier:
            for a in gens:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if cap is not None and len(els) > cap:
                        return None
        frontier = new
    return els


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {base: identity(degree)}


class StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    Base points are always the lowest point moved by the first generator
    reaching that level, so identical generator lists give identical chains.
    """

    def __init__(self, degree: int, gens: Iterable[Perm]):
        self.degree = degree
        self.levels: list[_Level] = []
        for g in gens:
            self._add(g, 0)

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def sift(self, g: Perm) -> Perm:
        """Residue after stripping through the chain; identity iff member."""
        for level in self.levels:
            x = g[level.base]
            rep = level.transversal.get(x)
            if rep is None:
                return g
            g = rep.inv() * g
        return g

    def contains(self, g: Perm) -> bool:
        return self.sift(g).is_identity()

    def _add(self, g: Perm, i: int) -> None:
        if g.is_identity():
            return
        if i == len(self.levels):
            base = min(p for p in range(self.degree) if g[p] != p)
            self.levels.append(_Level(base, self.degree))
        level = self.levels[i]
        if g in level.gens:
            return
        level.gens.append(g)
        self._close_level(i)

    def _close_level(self, i: int) -> None:
        level = self.levels[i]
        # Rebuild the orbit/transversal of the base under the level gens.
        level.transversal = {level.base: identity(self.degree)}
        queue = deque([level.base])
        while queue:
            pt = queue.popleft()
            rep = level.transversal[pt]
            for s in level.gens:
                img = s[pt]
                if img not in level.transversal:
                    level.transversal[img] = s * rep
                    queue.append(img)
        # Schreier generators of the stabilizer go one level down.
        for pt, rep in list(level.transversal.items()):
            for s in level.gens:
                schreier = level.transversal[s[pt]].inv() * s * rep
                if schreier.is_identity():
                    continue
                residue = self._sift_from(schreier, i + 1)
                if not residue.is_identity():
                    self._add(residue, i + 1)

    def _sift_from(self, g: Perm, i: int) -> Perm:
        for level in self.levels[i:]:
            x = g[level.base]
            rep = level.transversal.get(x)
            if rep is None:
                return g
            g = rep.inv() * g
        return g


class Group:
    """A permutation group given by generators on a fixed point set.

    Immutable once built; the chain and element store are computed lazily
    but depend only on the generator list, so concurrent readers agree.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], *, check: bool = True):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            g = Perm(g)
            if check and sorted(g) != list(range(degree)):
                raise ValueError(f"generator is not a permutation of degree {degree}: {g}")
            if len(g) != degree:
                raise DegreeMismatch(f"generator degree {len(g)} != {degree}")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._chain: Optional[StabilizerChain] = None
        self._order: Optional[int] = None
        self._element_list: Optional[list[Perm]] = None
        self._element_set: Optional[frozenset[Perm]] = None

    def __repr__(self) -> str:
        return f"Group(degree={self.degree}, ngens={len(self.generators)}, order={self.order()})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            if self._element_set is not None:
                self._order = len(self._element_set)
            else:
                self._order = self.chain.order()
        return self._order

    def is_trivial(self) -> bool:
        return not self.generators

    def identity(self) -> Perm:
        return identity(self.degree)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            raise DegreeMismatch(f"degree {len(g)} vs group degree {self.degree}")
        if self._element_set is not None:
            return Perm(g) in self._element_set
        return self.chain.contains(Perm(g))

    def element_list(self) -> list[Perm]:
        """All elements in deterministic BFS order.  Raises CapExceeded when
        the group is larger than ENUM_CAP."""
        if self._element_list is None:
            n = self.order()
            if n > enum_cap():
                raise CapExceeded(f"group order {n} exceeds ENUM_CAP {enum_cap()}")
            if not self.generators:
                self._element_list = [self.identity()]
            else:
                els = {self.identity()}
                order_list = [self.identity()]
                frontier = [self.identity()]
                while frontier:
                    new = []
                    for b in frontier:
                        for a in self.generators:
                            c = a * b
                            if c not in els:
                                els.add(c)
                                order_list.append(c)
                                new.append(c)
                    frontier = new
                if len(order_list) != n:
                    raise AssertionError(
                        f"enumeration found {len(order_list)} elements, chain says {n}"
                    )
                self._element_list = order_list
            self._element_set = frozenset(self._element_list)
        return self._element_list

    def elements(self) -> Iterator[Perm]:
        """Lazy stream over the elements, each exactly once."""
        return iter(self.element_list())

    def element_set(self) -> frozenset[Perm]:
        if self._element_set is None:
            self.element_list()
        assert self._element_set is not None
        return self._element_set

    @classmethod
    def from_element_set(cls, degree: int, els: Iterable[Perm]) -> "Group":
        """Group whose elements are already known (must be closed).

        A small generating set is extracted by sifting the sorted elements
        through an incremental chain, so the result stays cheap to use.
        """
        els = frozenset(Perm(e) for e in els)
        chain = StabilizerChain(degree, [])
        gens: list[Perm] = []
        target = len(els)
        for e in sorted(els):
            if chain.order() == target:
                break
            if not chain.contains(e):
                gens.append(e)
                chain._add(e, 0)
        g = cls(degree, gens, check=False)
        g._chain = chain
        g._element_set = els
        g._element_list = sorted(els)
        g._order = len(els)
        return g

    def subgroup(self, gens: Sequence[Perm]) -> "Group":
        """Subgroup generated by gens, checked for membership."""
        for g in gens:
            if not self.contains(g):
                raise NonMember(f"generator {Perm(g).cycle_str()} not in group")
        return Group(self.degree, gens)

    def orbit(self, point: int) -> frozenset[int]:
        if not (0 <= point < self.degree):
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        orb = {point}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = g[p]
                if q not in orb:
                    orb.add(q)
                    queue.append(q)
        return frozenset(orb)

    def random_elements(self, k: int, seed: int = 0) -> list[Perm]:
        """Deterministic pseudo-random sample (with replacement) of elements."""
        import random

        rng = random.Random(seed)
        els = self.element_list()
        return [els[rng.randrange(len(els))] for _ in range(k)]


def group_from_generators(degree: int, gens: Sequence[Perm]) -> Group:
    return Group(degree, gens)


def order(G: Group) -> int:
    return G.order()


def contains(G: Group, g: Perm) -> bool:
    return G.contains(g)


def subgroup_closure(G: Group, gens: Sequence[Perm]) -> Group:
    return G.subgroup(gens)


def orbit(G: Group, point: int) -> frozenset[int]:
    return G.orbit(point)


class QuotientMap:
    """The homomorphism G -> G/N realized by the left-coset action."""

    def __init__(self, G: Group, N: Group, reps: list[Perm], coset_index: dict[Perm, int]):
        self.domain = G
        self.kernel = N
        self.reps = reps
        self._coset_index = coset_index

    def coset_of(self, g: Perm) -> int:
        idx = self._coset_index.get(Perm(g))
        if idx is None:
            raise NonMember(f"{Perm(g).cycle_str()} not in the domain group")
        return idx

    def __call__(self, g: Perm) -> Perm:
        g = Perm(g)
        return Perm(self.coset_of(g * rep) for rep in self.reps)


def quotient_by(G: Group, N: Group) -> tuple[Group, QuotientMap]:
    """Permutation action of G on the left cosets of a normal subgroup N.

    The kernel of the action is exactly N, so the image is faithful for G/N.
    """
    from .errors import NotNormal

    nset = N.element_set()
    for a in G.generators:
        ainv = a.inv()
        for n in N.generators:
            if a * n * ainv not in nset:
                raise NotNormal("subgroup is not normal in the ambient group")
    els = G.element_list()
    reps: list[Perm] = []
    coset_index: dict[Perm, int] = {}
    for g in els:
        if g in coset_index:
            continue
        idx = len(reps)
        reps.append(g)
        for n in nset:
            coset_index[g * n] = idx
    qmap = QuotientMap(G, N, reps, coset_index)
    qgens = [qmap(a) for a in G.generators]
    Q = Group(len(reps), qgens, check=False)
    if Q.order() * N.order() != G.order():
        raise AssertionError("coset action order mismatch")
    return Q, qmap
