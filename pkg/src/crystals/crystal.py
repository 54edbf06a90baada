"""Tensor products of minuscule crystals with Kashiwara root operators.

An element of B_{w1} x ... x B_{wn} is a tuple of weights, one per
factor, each lying in the Weyl orbit of its (dominant minuscule) factor
weight.  The operator conventions follow the usual bracketing rule for
n-fold tensor products; raising picks the smallest maximizing index,
lowering the largest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import RootSystem, Weight


@dataclass(frozen=True)
class TensorShape:
    system: RootSystem
    factors: tuple[Weight, ...]

    def __post_init__(self):
        for om in self.factors:
            self.system.check_weight(om)
            if not self.system.is_dominant(om):
                raise ValueError(f"factor {om} is not dominant")
            if not self.system.is_minuscule(om):
                raise ValueError(f"factor {om} is not minuscule")
            if all(c == 0 for c in om):
                raise ValueError("zero factors are not allowed")

    def __len__(self):
        return len(self.factors)

    def concat(self, other: "TensorShape") -> "TensorShape":
        if self.system != other.system:
            raise ValueError("cannot concatenate shapes over different systems")
        return TensorShape(self.system, self.factors + other.factors)


def shape(system: RootSystem, factors) -> TensorShape:
    return TensorShape(system, tuple(tuple(f) for f in factors))


@dataclass(frozen=True)
class TensorElement:
    shape: TensorShape
    entries: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.shape.factors):
            raise ValueError("entry count does not match factor count")
        sys = self.shape.system
        for a, om in zip(self.entries, self.shape.factors):
            if a not in sys.weyl_orbit(om):
                raise ValueError(f"entry {a} is not in the orbit of factor {om}")

    # -- basic structure maps -------------------------------------------

    @property
    def system(self) -> RootSystem:
        return self.shape.system

    def __len__(self):
        return len(self.entries)

    def weight(self) -> Weight:
        sys = self.system
        total = [0] * sys.rank
        for a in self.entries:
            for k, c in enumerate(a):
                total[k] += c
        return tuple(total)

    def eps(self, i: int) -> int:
        """Depth in direction alpha_i of the tensor element."""
        self.system._check_index(i)
        best = 0
        prefix = 0
        for a in self.entries:
            c = a[i - 1]
            term = max(0, -c) - prefix
            if term > best:
                best = term
            prefix += c
        return best

    def phi(self, i: int) -> int:
        """Rise in direction alpha_i of the tensor element."""
        self.system._check_index(i)
        best = 0
        suffix = 0
        for a in reversed(self.entries):
            c = a[i - 1]
            term = max(0, c) + suffix
            if term > best:
                best = term
            suffix += c
        return best

    def string_data(self, i: int) -> tuple[int, int]:
        return (self.eps(i), self.phi(i))

    def eps_weight(self) -> Weight:
        return tuple(self.eps(i) for i in range(1, self.system.rank + 1))

    def phi_weight(self) -> Weight:
        return tuple(self.phi(i) for i in range(1, self.system.rank + 1))

    # -- root operators --------------------------------------------------

    def f(self, i: int) -> "TensorElement | None":
        """Lowering operator; None plays the role of the null element."""
        if self.phi(i) == 0:
            return None
        best = None
        pos = -1
        suffix = 0
        for k in range(len(self.entries) - 1, -1, -1):
            c = self.entries[k][i - 1]
            term = max(0, c) + suffix
            if best is None or term > best:
                best = term
                pos = k
            suffix += c
        entry = self.entries[pos]
        if entry[i - 1] != 1:
            raise AssertionError("lowering position does not carry pairing 1")
        alpha = self.system.simple_root(i)
        new = tuple(m - a for m, a in zip(entry, alpha))
        return self._replace_entry(pos, new)

    def e(self, i: int) -> "TensorElement | None":
        """Raising operator; None plays the role of the null element."""
        if self.eps(i) == 0:
            return None
        best = None
        pos = -1
        prefix = 0
        for j, a in enumerate(self.entries):
            c = a[i - 1]
            term = max(0, -c) - prefix
            if best is None or term > best:
                best = term
                pos = j
            prefix += c
        entry = self.entries[pos]
        if entry[i - 1] != -1:
            raise AssertionError("raising position does not carry pairing -1")
        alpha = self.system.simple_root(i)
        new = tuple(m + a for m, a in zip(entry, alpha))
        return self._replace_entry(pos, new)

    def _replace_entry(self, pos: int, new: Weight) -> "TensorElement":
        entries = self.entries[:pos] + (new,) + self.entries[pos + 1 :]
        return TensorElement(self.shape, entries)

    # -- highest / lowest machinery ---------------------------------------

    def is_highest(self) -> bool:
        return all(self.eps(i) == 0 for i in range(1, self.system.rank + 1))

    def is_highest_by_charge(self) -> bool:
        """Partial-sum criterion: every weight prefix dominates the depth
        of the next entry."""
        sys = self.system
        prefix = [0] * sys.rank
        for a in self.entries:
            for k in range(sys.rank):
                if prefix[k] - max(0, -a[k]) < 0:
                    return False
            for k, c in enumerate(a):
                prefix[k] += c
        return True

    def to_highest(self) -> tuple["TensorElement", tuple[int, ...]]:
        """Raise at the smallest applicable index until highest; returns
        the highest element and the indices in application order."""
        cur = self
        path = []
        while True:
            for i in range(1, self.system.rank + 1):
                nxt = cur.e(i)
                if nxt is not None:
                    cur = nxt
                    path.append(i)
                    break
            else:
                return cur, tuple(path)

    def component_lowest(self) -> "TensorElement":
        """The minimum of the component containing this element."""
        cur = self.to_highest()[0]
        while True:
            for i in range(1, self.system.rank + 1):
                nxt = cur.f(i)
                if nxt is not None:
                    cur = nxt
                    break
            else:
                return cur

    def lusztig_involution(self) -> "TensorElement":
        """The involution sending each component's highest element to its
        lowest and intertwining e_i with f_{i*}."""
        return _lusztig_involution(self)

    # -- slicing ----------------------------------------------------------


    def sub(self, start: int, stop: int) -> "TensorElement":
        sh = TensorShape(self.system, self.shape.factors[start:stop])
        return TensorElement(sh, self.entries[start:stop])

    def concat(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(
            self.shape.concat(other.shape), self.entries + other.entries
        )


@lru_cache(maxsize=1 << 18)
def _lusztig_involution(elem: TensorElement) -> TensorElement:
    sys = elem.system
    _, path = elem.to_highest()
    cur = elem.component_lowest()
    for i in reversed(path):
        cur = cur.e(sys.star(i))
        if cur is None:
            raise AssertionError("the involution hit a null operator")
    return cur


def element(sys: RootSystem, factors, entries) -> TensorElement:
    return TensorElement(shape(sys, factors), tuple(tuple(a) for a in entries))


def empty_element(sys: RootSystem) -> TensorElement:
    return TensorElement(TensorShape(sys, ()), ())


def component_members(elem: TensorElement) -> list[TensorElement]:
    """All elements of the component of ``elem``, in BFS order from the
    highest element."""
    sys = elem.system
    top = elem.to_highest()[0]
    seen = {top.entries}
    order = [top]
    frontier = [top]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, sys.rank + 1):
                y = x.f(i)
                if y is not None and y.entries not in seen:
                    seen.add(y.entries)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order


def max_elements(sh: TensorShape) -> list[TensorElement]:
    """All highest elements of the tensor product, in lexicographic
    entry order, enumerated with the prefix-dominance pruning."""
    sys = sh.system
    rank = sys.rank
    orbits = [sorted(sys.weyl_orbit(om)) for om in sh.factors]
    out = []

    def extend(entries, prefix):
        j = len(entries)
        if j == len(sh.factors):
            out.append(TensorElement(sh, tuple(entries)))
            return
        for mu in orbits[j]:
            if all(prefix[k] + min(0, mu[k]) >= 0 for k in range(rank)):
                entries.append(mu)
                extend(entries, tuple(p + c for p, c in zip(prefix, mu)))
                entries.pop()

    extend([], (0,) * rank)
    return out


def embed_highest(sys: RootSystem, lam: Weight) -> tuple[TensorShape, TensorElement]:
    """Embed the highest element of weight ``lam`` into a tensor product
    of minuscule crystals chosen by the minuscule decomposition."""
    lam = sys.check_weight(lam)
    dec = sys.minuscule_decomposition(lam)
    sh = TensorShape(sys, dec.dominant_orbits)
    elem = TensorElement(sh, dec.parts)
    if not elem.is_highest():
        raise AssertionError("decomposition did not yield a highest element")
    return sh, elem


def crystal_leq(a: TensorElement, b: TensorElement) -> bool:
    """Whether ``a`` is reachable from ``b`` by lowering operators."""
    if a.shape != b.shape:
        raise ValueError("elements must share a shape")
    sys = a.system
    diff = tuple(x - y for x, y in zip(b.weight(), a.weight()))
    gap = sys.root_coordinates(diff)
    if any(c.denominator != 1 or c < 0 for c in gap):
        return False
    target = a.entries
    seen = {b.entries: tuple(int(c) for c in gap)}
    frontier = [b]
    while frontier:
        nxt = []
        for x in frontier:
            g = seen[x.entries]
            if x.entries == target:
                return True
            for i in range(1, sys.rank + 1):
                if g[i - 1] == 0:
                    continue  # lowering at i would overshoot the weight gap
                y = x.f(i)
                if y is None or y.entries in seen:
                    continue
                g2 = tuple(c - int(k == i - 1) for k, c in enumerate(g))
                seen[y.entries] = g2
                nxt.append(y)
        frontier = nxt
    return False
