"""Vectorized batch evaluation of crystal operators.

Large verification sweeps (millions of tensor elements) are infeasible
one TensorElement at a time, so batches are stored as integer matrices:
row = element, column = factor, value = index into the sorted Weyl orbit
of that factor.  All operators become table lookups and cumulative sums
over the rows.  Results are cross-checked against the per-element API by
the test suite.
"""

from __future__ import annotations

import numpy as np

from .crystal import TensorElement, TensorShape


class BulkCrystal:
    """Batch operator tables for one fixed tensor shape."""

    def __init__(self, shape: TensorShape):
        self.shape = shape
        sys = shape.system
        self.rank = sys.rank
        self.n = len(shape.factors)
        self.orbits: list[list] = []
        self.coord: list[np.ndarray] = []
        self.ftab: list[np.ndarray] = []
        self.etab: list[np.ndarray] = []
        shifts = []
        shift = 0
        for om in shape.factors:
            orbit = sorted(sys.weyl_orbit(om))
            index = {w: k for k, w in enumerate(orbit)}
            m = len(orbit)
            coord = np.array(orbit, dtype=np.int16).reshape(m, self.rank)
            ftab = np.full((self.rank, m), -1, dtype=np.int32)
            etab = np.full((self.rank, m), -1, dtype=np.int32)
            for k, w in enumerate(orbit):
                for i in range(1, self.rank + 1):
                    if w[i - 1] == 1:
                        ftab[i - 1, k] = index[sys.simple_reflection(i, w)]
                    elif w[i - 1] == -1:
                        etab[i - 1, k] = index[sys.simple_reflection(i, w)]
            self.orbits.append(orbit)
            self.coord.append(coord)
            self.ftab.append(ftab)
            self.etab.append(etab)
            shifts.append(shift)
            shift += max(1, int(m - 1).bit_length())
        if shift > 62:
            raise ValueError("shape too wide for int64 row encoding")
        self.shifts = shifts

    # -- conversions -----------------------------------------------------

    def rows_from_elements(self, elems) -> np.ndarray:
        out = np.empty((len(elems), self.n), dtype=np.uint8)
        for k, el in enumerate(elems):
            for t, a in enumerate(el.entries):
                out[k, t] = self.orbits[t].index(a)
        return out

    def element(self, row) -> TensorElement:
        entries = tuple(self.orbits[t][int(row[t])] for t in range(self.n))
        return TensorElement(self.shape, entries)

    def encode(self, rows: np.ndarray) -> np.ndarray:
        enc = np.zeros(rows.shape[0], dtype=np.int64)
        for t in range(self.n):
            enc |= rows[:, t].astype(np.int64) << self.shifts[t]
        return enc

    # -- structure maps ----------------------------------------------------

    def pairings(self, rows: np.ndarray, i: int) -> np.ndarray:
        c = np.empty(rows.shape, dtype=np.int16)
        for t in range(self.n):
            c[:, t] = self.coord[t][rows[:, t], i - 1]
        return c

    def weights(self, rows: np.ndarray) -> np.ndarray:
        w = np.zeros((rows.shape[0], self.rank), dtype=np.int32)
        for t in range(self.n):
            w += self.coord[t][rows[:, t]]
        return w

    def eps(self, rows: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Depths and the smallest maximizing position per row."""
        N = rows.shape[0]
        if self.n == 0:
            return np.zeros(N, np.int32), np.zeros(N, np.int64)
        c = self.pairings(rows, i).astype(np.int32)
        prefix = np.zeros_like(c)
        np.cumsum(c[:, :-1], axis=1, out=prefix[:, 1:])
        terms = np.maximum(-c, 0) - prefix
        pos = np.argmax(terms, axis=1)
        val = terms[np.arange(N), pos]
        return np.maximum(val, 0), pos

    def phi(self, rows: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Rises and the largest maximizing position per row."""
        N = rows.shape[0]
        if self.n == 0:
            return np.zeros(N, np.int32), np.zeros(N, np.int64)
        c = self.pairings(rows, i).astype(np.int32)
        cs = np.cumsum(c, axis=1)
        suffix = cs[:, -1:] - cs
        terms = np.maximum(c, 0) + suffix
        pos = self.n - 1 - np.argmax(terms[:, ::-1], axis=1)
        val = terms[np.arange(N), pos]
        return np.maximum(val, 0), pos

    def _apply(self, rows, pos, mask, tabs, i) -> np.ndarray:
        out = rows[mask].copy()
        p = pos[mask]
        for t in range(self.n):
            sel = p == t
            if sel.any():
                new = tabs[t][i - 1][out[sel, t]]
                if (new < 0).any():
                    raise AssertionError("operator applied at an invalid position")
                out[sel, t] = new
        return out

    def f(self, rows: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Lowering on a batch: boolean mask of rows where it applies,
        plus the lowered rows (in mask order)."""
        val, pos = self.phi(rows, i)
        mask = val > 0
        return mask, self._apply(rows, pos, mask, self.ftab, i)

    def e(self, rows: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
        val, pos = self.eps(rows, i)
        mask = val > 0
        return mask, self._apply(rows, pos, mask, self.etab, i)

    def is_highest(self, rows: np.ndarray) -> np.ndarray:
        ok = np.ones(rows.shape[0], dtype=bool)
        for i in range(1, self.rank + 1):
            ok &= self.eps(rows, i)[0] == 0
        return ok

    # -- whole-set helpers ---------------------------------------------------

    def component(self, top: TensorElement) -> np.ndarray:
        """All rows of the component of ``top``, highest row first."""
        seed = self.rows_from_elements([top])
        seen = {int(self.encode(seed)[0])}
        chunks = [seed]
        frontier = seed
        while frontier.shape[0]:
            nxt = []
            for i in range(1, self.rank + 1):
                _, child = self.f(frontier, i)
                if child.shape[0]:
                    nxt.append(child)
            if not nxt:
                break
            cand = np.concatenate(nxt)
            enc = self.encode(cand)
            _, first = np.unique(enc, return_index=True)
            cand, enc = cand[first], enc[first]
            fresh = np.fromiter(
                (e not in seen for e in enc.tolist()), bool, len(enc)
            )
            cand = cand[fresh]
            seen.update(enc[fresh].tolist())
            chunks.append(cand)
            frontier = cand
        return np.concatenate(chunks)

    def descend_to_lowest(self, rows: np.ndarray) -> np.ndarray:
        """Apply lowering at the smallest applicable index until stuck."""
        rows = rows.copy()
        while True:
            active = np.flatnonzero(~self._is_lowest(rows))
            if not active.size:
                return rows
            # one lowering step per active row, smallest index first
            remaining = np.ones(active.size, dtype=bool)
            for i in range(1, self.rank + 1):
                if not remaining.any():
                    break
                sub = np.flatnonzero(remaining)
                mask, lowered = self.f(rows[active[sub]], i)
                rows[active[sub[mask]]] = lowered
                remaining[sub[mask]] = False

    def _is_lowest(self, rows: np.ndarray) -> np.ndarray:
        ok = np.ones(rows.shape[0], dtype=bool)
        for i in range(1, self.rank + 1):
            ok &= self.phi(rows, i)[0] == 0
        return ok


class IndexedSet:
    """A closed set of rows with O(log N) vectorized row -> index lookup."""

    def __init__(self, bulk: BulkCrystal, rows: np.ndarray):
        self.bulk = bulk
        self.rows = rows
        enc = bulk.encode(rows)
        self.order = np.argsort(enc, kind="stable")
        self.sorted_enc = enc[self.order]
        if self.rows.shape[0] > 1 and (np.diff(self.sorted_enc) == 0).any():
            raise AssertionError("duplicate rows in indexed set")

    def __len__(self):
        return self.rows.shape[0]

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        enc = self.bulk.encode(rows)
        pos = np.searchsorted(self.sorted_enc, enc)
        if (pos >= len(self.sorted_enc)).any() or (
            self.sorted_enc[pos] != enc
        ).any():
            raise AssertionError("row outside the indexed set")
        return self.order[pos]


def product_rows(a_rows: np.ndarray, b_rows: np.ndarray) -> np.ndarray:
    """Rows of the cartesian product, index (ia, ib) -> ia * |B| + ib."""
    na, nb = a_rows.shape[0], b_rows.shape[0]
    left = np.repeat(a_rows, nb, axis=0)
    right = np.tile(b_rows, (na, 1))
    return np.concatenate([left, right], axis=1)


def eta_transport(src: IndexedSet, dst: IndexedSet, seed_idx, seed_images):
    """Involution transport: map(f_i x) = e_{i*}(map(x))."""
    sys = src.bulk.shape.system
    table = np.full(len(src), -1, dtype=np.int64)
    table[seed_idx] = seed_images
    frontier = np.asarray(seed_idx, dtype=np.int64)
    while frontier.size:
        nxt = []
        cur_rows = src.rows[frontier]
        img_rows = dst.rows[table[frontier]]
        for i in range(1, src.bulk.rank + 1):
            mask, child = src.bulk.f(cur_rows, i)
            if not mask.any():
                continue
            child_idx = src.lookup(child)
            new = table[child_idx] < 0
            if not new.any():
                continue
            imask, img_child = dst.bulk.e(img_rows[mask][new], sys.star(i))
            if not imask.all():
                raise AssertionError("raising vanished during involution transport")
            fresh_idx = child_idx[new]
            table[fresh_idx] = dst.lookup(img_child)
            nxt.append(fresh_idx)
        if nxt:
            frontier = np.unique(np.concatenate(nxt))
        else:
            frontier = np.empty(0, dtype=np.int64)
    if (table < 0).any():
        raise AssertionError("involution transport did not reach every element")
    return table


def morphism_transport(src: IndexedSet, dst: IndexedSet, seed_idx, seed_images):
    """Morphism transport: map(f_i x) = f_i(map(x))."""
    table = np.full(len(src), -1, dtype=np.int64)
    table[seed_idx] = seed_images
    frontier = np.asarray(seed_idx, dtype=np.int64)
    while frontier.size:
        nxt = []
        cur_rows = src.rows[frontier]
        img_rows = dst.rows[table[frontier]]
        for i in range(1, src.bulk.rank + 1):
            mask, child = src.bulk.f(cur_rows, i)
            if not mask.any():
                continue
            child_idx = src.lookup(child)
            new = table[child_idx] < 0
            if not new.any():
                continue
            imask, img_child = dst.bulk.f(img_rows[mask][new], i)
            if not imask.all():
                raise AssertionError("lowering vanished during morphism transport")
            fresh_idx = child_idx[new]
            table[fresh_idx] = dst.lookup(img_child)
            nxt.append(fresh_idx)
        if nxt:
            frontier = np.unique(np.concatenate(nxt))
        else:
            frontier = np.empty(0, dtype=np.int64)
    if (table < 0).any():
        raise AssertionError("morphism transport did not reach every element")
    return table


def lusztig_table(iset: IndexedSet) -> np.ndarray:
    """The Lusztig involution on a closed set, as an index permutation."""
    bulk = iset.bulk
    high = np.flatnonzero(bulk.is_highest(iset.rows))
    lows = bulk.descend_to_lowest(iset.rows[high])
    return eta_transport(iset, iset, high, iset.lookup(lows))


def equivariance_failures(src: IndexedSet, dst: IndexedSet, table: np.ndarray) -> int:
    """Count of edges where the table fails map(f_i x) = f_i(map(x)),
    including the null-to-null direction."""
    bad = 0
    for i in range(1, src.bulk.rank + 1):
        mask, child = src.bulk.f(src.rows, i)
        child_idx = src.lookup(child)
        imask, img_child = dst.bulk.f(dst.rows[table[mask]], i)
        bad += int((~imask).sum())
        bad += int((table[child_idx[imask]] != dst.lookup(img_child)).sum())
        nmask, _ = dst.bulk.f(dst.rows[table[~mask]], i)
        bad += int(nmask.sum())
    return bad
