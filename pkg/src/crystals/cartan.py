"""Finite irreducible root systems in the fundamental-weight basis.

Weights are plain tuples of ints: entry i-1 holds the pairing of the
weight with the i-th simple coroot (Bourbaki node numbering).  All
arithmetic is exact; the only non-integer intermediate is the inverse
Cartan matrix, kept as Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

SUPPORTED_KINDS = ("A", "B", "C", "D", "E")


class UnsupportedTypeError(ValueError):
    """Raised for Cartan-Killing types outside A/B/C/D/E6/E7."""


class DecompositionError(RuntimeError):
    """Raised when the bounded minuscule-decomposition search fails."""


def _cartan_matrix(kind: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Entry [i][j] is the pairing of the j-th simple root with the i-th
    simple coroot."""
    m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, a=-1, b=-1):
        m[i - 1][j - 1] = a
        m[j - 1][i - 1] = b

    if kind == "A":
        if rank < 1:
            raise UnsupportedTypeError(f"A{rank} is not a valid type")
        for i in range(1, rank):
            link(i, i + 1)
    elif kind == "B":
        # alpha_rank is the short root
        if rank < 2:
            raise UnsupportedTypeError(f"B{rank} is not supported (need rank >= 2)")
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 1, rank, -1, -2)
    elif kind == "C":
        # alpha_rank is the long root
        if rank < 2:
            raise UnsupportedTypeError(f"C{rank} is not supported (need rank >= 2)")
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 1, rank, -2, -1)
    elif kind == "D":
        if rank < 3:
            raise UnsupportedTypeError(f"D{rank} is not supported (need rank >= 3)")
        for i in range(1, rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1)
        link(rank - 2, rank)
    elif kind == "E":
        if rank not in (6, 7):
            raise UnsupportedTypeError(f"E{rank} is not supported (only E6, E7)")
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)):
            link(i, j)
        if rank == 7:
            link(6, 7)
    else:
        raise UnsupportedTypeError(f"unknown Cartan-Killing type {kind!r}")
    return tuple(tuple(row) for row in m)


class RootSystem:
    """A finite irreducible root system of type A/B/C/D/E6/E7.

    Instances are immutable once built; derived data (root list, longest
    word, orbits) is computed lazily and cached, so sharing an instance
    between concurrent readers is safe.
    """

    def __init__(self, kind: str, rank: int):
        self.kind = kind
        self.rank = rank
        self.cartan = _cartan_matrix(kind, rank)
        self._orbit_cache: dict[Weight, frozenset[Weight]] = {}
        self._w0_word: tuple[int, ...] | None = None
        self._coroots: tuple[tuple[int, ...], ...] | None = None
        self._star: tuple[int, ...] | None = None
        self._minuscule_fundamentals: tuple[Weight, ...] | None = None
        self._cartan_inv: tuple[tuple[Fraction, ...], ...] | None = None
        self._decomp_cache: dict[Weight, "MinusculeDecomposition"] = {}

    def __repr__(self):
        return f"RootSystem({self.kind!r}, {self.rank})"

    def __eq__(self, other):
        return (
            isinstance(other, RootSystem)
            and self.kind == other.kind
            and self.rank == other.rank
        )

    def __hash__(self):
        return hash((self.kind, self.rank))

    # -- basics -------------------------------------------------------

    def zero(self) -> Weight:
        return (0,) * self.rank

    def rho(self) -> Weight:
        return (1,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def simple_root(self, i: int) -> Weight:
        """The simple root alpha_i in fundamental coordinates (column i
        of the Cartan matrix)."""
        self._check_index(i)
        return tuple(self.cartan[j][i - 1] for j in range(self.rank))

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple-root index {i} out of range 1..{self.rank}")

    def check_weight(self, mu) -> Weight:
        mu = tuple(mu)
        if len(mu) != self.rank:
            raise ValueError(
                f"weight {mu} has length {len(mu)}, expected rank {self.rank}"
            )
        if not all(isinstance(c, int) for c in mu):
            raise ValueError(f"weight {mu} must have integer coordinates")
        return mu

    def pairing(self, mu: Weight, i: int) -> int:
        """Pairing of a weight with the i-th simple coroot."""
        self._check_index(i)
        return mu[i - 1]

    def is_dominant(self, mu: Weight) -> bool:
        return all(c >= 0 for c in mu)

    # -- Weyl group ----------------------------------------------------

    def simple_reflection(self, i: int, mu: Weight) -> Weight:
        self._check_index(i)
        c = mu[i - 1]
        if c == 0:
            return mu
        alpha = self.simple_root(i)
        return tuple(m - c * a for m, a in zip(mu, alpha))

    def dom_w(self, mu: Weight) -> Weight:
        """Dominant representative of the Weyl orbit of ``mu``.

        Repeatedly reflects at the smallest index with a negative
        pairing; each step raises the weight in dominance order.
        """
        mu = tuple(mu)
        while True:
            for i, c in enumerate(mu):
                if c < 0:
                    mu = self.simple_reflection(i + 1, mu)
                    break
            else:
                return mu

    def weyl_orbit(self, lam: Weight) -> frozenset[Weight]:
        lam = tuple(lam)
        key = self.dom_w(lam)
        cached = self._orbit_cache.get(key)
        if cached is None:
            seen = {key}
            frontier = [key]
            while frontier:
                nxt = []
                for mu in frontier:
                    for i in range(1, self.rank + 1):
                        nu = self.simple_reflection(i, mu)
                        if nu not in seen:
                            seen.add(nu)
                            nxt.append(nu)
                frontier = nxt
            cached = frozenset(seen)
            self._orbit_cache[key] = cached
        return cached

    def longest_element_word(self) -> tuple[int, ...]:
        """A reduced word for the longest Weyl element, obtained by
        antidominantizing rho with smallest-index tie-breaking."""
        if self._w0_word is None:
            mu = self.rho()
            word = []
            while any(c > 0 for c in mu):
                i = next(k + 1 for k, c in enumerate(mu) if c > 0)
                mu = self.simple_reflection(i, mu)
                word.append(i)
            if mu != tuple(-c for c in self.rho()):
                raise AssertionError("longest element did not send rho to -rho")
            if len(word) != len(self.positive_coroots()):
                raise AssertionError("longest word length != number of positive roots")
            self._w0_word = tuple(word)
        return self._w0_word

    def apply_w0(self, mu: Weight) -> Weight:
        for i in self.longest_element_word():
            mu = self.simple_reflection(i, mu)
        return mu

    def star(self, i: int) -> int:
        """The Dynkin involution i -> i* with alpha_{i*} = -w0(alpha_i)."""
        self._check_index(i)
        if self._star is None:
            perm = []
            for k in range(1, self.rank + 1):
                target = tuple(-c for c in self.apply_w0(self.simple_root(k)))
                matches = [
                    j
                    for j in range(1, self.rank + 1)
                    if self.simple_root(j) == target
                ]
                if len(matches) != 1:
                    raise AssertionError(f"-w0(alpha_{k}) is not a simple root")
                perm.append(matches[0])
            self._star = tuple(perm)
        return self._star[i - 1]

    # -- roots and minuscule tests --------------------------------------

    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """All positive coroots, as coefficient vectors in the
        simple-coroot basis; pairing a weight with such a vector is a
        plain dot product with its fundamental coordinates."""
        if self._coroots is None:
            # Closure of (root, coroot) pairs under simple reflections.
            start = [
                (self.simple_root(i), tuple(int(j == i - 1) for j in range(self.rank)))
                for i in range(1, self.rank + 1)
            ]
            seen = dict(start)
            frontier = list(seen)
            while frontier:
                nxt = []
                for root in frontier:
                    co = seen[root]
                    for j in range(1, self.rank + 1):
                        r2 = self.simple_reflection(j, root)
                        if r2 in seen:
                            continue
                        # s_j on the coroot side only changes coefficient j.
                        drop = sum(
                            c * self.cartan[k][j - 1] for k, c in enumerate(co)
                        )
                        c2 = list(co)
                        c2[j - 1] -= drop
                        seen[r2] = tuple(c2)
                        nxt.append(r2)
                frontier = nxt
            self._coroots = tuple(
                sorted(co for root, co in seen.items() if sum(co) > 0)
            )
        return self._coroots

    def _max_coroot_pairing(self, lam: Weight) -> int:
        return max(
            abs(sum(c * m for c, m in zip(co, lam)))
            for co in self.positive_coroots()
        )

    def is_minuscule(self, lam: Weight) -> bool:
        if all(c == 0 for c in lam):
            return True
        return self._max_coroot_pairing(lam) <= 1

    def is_quasi_minuscule(self, lam: Weight) -> bool:
        if all(c == 0 for c in lam):
            return True
        return self._max_coroot_pairing(lam) <= 2

    def minuscule_fundamentals(self) -> tuple[Weight, ...]:
        if self._minuscule_fundamentals is None:
            self._minuscule_fundamentals = tuple(
                self.fundamental_weight(i)
                for i in range(1, self.rank + 1)
                if self.is_minuscule(self.fundamental_weight(i))
            )
        return self._minuscule_fundamentals

    # -- root-lattice arithmetic ----------------------------------------

    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._cartan_inv is None:
            n = self.rank
            aug = [
                [Fraction(self.cartan[i][j]) for j in range(n)]
                + [Fraction(int(i == j)) for j in range(n)]
                for i in range(n)
            ]
            for col in range(n):
                piv = next(r for r in range(col, n) if aug[r][col] != 0)
                aug[col], aug[piv] = aug[piv], aug[col]
                inv = Fraction(1) / aug[col][col]
                aug[col] = [x * inv for x in aug[col]]
                for r in range(n):
                    if r != col and aug[r][col] != 0:
                        f = aug[r][col]
                        aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
            self._cartan_inv = tuple(tuple(row[n:]) for row in aug)
        return self._cartan_inv

    def root_coordinates(self, mu: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis."""
        inv = self.cartan_inverse()
        return tuple(
            sum(inv[i][j] * mu[j] for j in range(self.rank)) for i in range(self.rank)
        )

    def in_root_lattice(self, mu: Weight) -> bool:
        return all(c.denominator == 1 for c in self.root_coordinates(mu))

    # -- minuscule decompositions ----------------------------------------

    def minuscule_decomposition(self, lam: Weight) -> "MinusculeDecomposition":
        """Write a dominant weight as an ordered sum of minuscule weights
        with dominant partial sums.

        Prefers parts drawn from the orbit of a single minuscule
        fundamental weight (tried in node order), falling back to mixed
        orbits only when no single orbit works.  Deterministic.
        """
        lam = self.check_weight(lam)
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        cached = self._decomp_cache.get(lam)
        if cached is not None:
            return cached
        if all(c == 0 for c in lam):
            result = MinusculeDecomposition((), ())
        else:
            if not self.minuscule_fundamentals():
                raise UnsupportedTypeError(
                    f"{self.kind}{self.rank} has no minuscule weights"
                )
            parts = None
            for omega in self.minuscule_fundamentals():
                parts = self._single_orbit_search(lam, omega)
                if parts is not None:
                    break
            if parts is None:
                parts = self._mixed_orbit_search(lam)
            if parts is None:
                raise DecompositionError(
                    f"bounded search found no minuscule decomposition of {lam} "
                    f"in {self.kind}{self.rank}"
                )
            result = MinusculeDecomposition(
                tuple(parts), tuple(self.dom_w(p) for p in parts)
            )
        self._decomp_cache[lam] = result
        return result

    def _ordered_orbit(self, omega: Weight) -> list[Weight]:
        # Decreasing coordinate sum, then lexicographically decreasing.
        return sorted(
            self.weyl_orbit(omega),
            key=lambda w: (-sum(w), tuple(-c for c in w)),
        )

    def _depth_cap(self, lam: Weight) -> int:
        return self.rank * sum(lam) + 2

    def _single_orbit_search(self, lam, omega):
        candidates = self._ordered_orbit(omega)
        for n in range(1, self._depth_cap(lam) + 1):
            n_omega = tuple(n * c for c in omega)
            diff = tuple(a - b for a, b in zip(n_omega, lam))
            if not self.in_root_lattice(diff):
                continue
            found = self._dfs(lam, candidates, n)
            if found is not None:
                return found
        return None

    def _mixed_orbit_search(self, lam):
        candidates = sorted(
            {w for om in self.minuscule_fundamentals() for w in self.weyl_orbit(om)},
            key=lambda w: (-sum(w), tuple(-c for c in w)),
        )
        for n in range(1, self._depth_cap(lam) + 1):
            found = self._dfs(lam, candidates, n)
            if found is not None:
                return found
        return None

    def _dfs(self, lam, candidates, n):
        """Depth-first search for n parts with dominant partial sums.

        Minuscule weights have coordinates in {-1,0,1}, so a partial sum
        can only close a coordinate gap of 1 per remaining part.
        """

        def rec(s, depth, acc):
            remaining = n - depth
            if remaining == 0:
                return list(acc) if s == lam else None
            if max(abs(a - b) for a, b in zip(lam, s)) > remaining:
                return None
            for mu in candidates:
                s2 = tuple(a + b for a, b in zip(s, mu))
                if all(c >= 0 for c in s2):
                    acc.append(mu)
                    found = rec(s2, depth + 1, acc)
                    if found is not None:
                        return found
                    acc.pop()
            return None

        return rec(self.zero(), 0, [])


@dataclass(frozen=True)
class MinusculeDecomposition:
    """An ordered sum of minuscule weights with dominant partial sums."""

    parts: tuple[Weight, ...]
    dominant_orbits: tuple[Weight, ...]

    def total(self) -> Weight:
        if not self.parts:
            return ()
        return tuple(sum(cs) for cs in zip(*self.parts))

    def __len__(self):
        return len(self.parts)


@lru_cache(maxsize=None)
def root_system(kind: str, rank: int) -> RootSystem:
    """Shared, cached constructor; RootSystem caches are per instance."""
    return RootSystem(kind, rank)
