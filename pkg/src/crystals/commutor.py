"""Two realizations of the crystal commutor, plus the cactus action.

The reference realization composes Lusztig involutions; the growth
realization fills a rectangle of van Leeuwen local moves.  Both act on
blocked elements: concatenations of embedded irreducible crystals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cartan import RootSystem, Weight
from .crystal import (
    TensorElement,
    TensorShape,
    embed_highest,
    max_elements,
)


class LocalMoveError(ValueError):
    """Rejected input to a local move or growth rectangle."""


class QuasiMinusculeError(LocalMoveError):
    """Local moves are only defined for minuscule factor orbits."""


# ---------------------------------------------------------------------------
# local moves and growth diagrams
# ---------------------------------------------------------------------------


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _check_max_pair(sys: RootSystem, kappa: Weight, x: Weight) -> bool:
    # (b_kappa, x) is a highest pair iff kappa dominates the depth of x.
    return all(k + min(0, c) >= 0 for k, c in zip(kappa, x))


def local_move(
    sys: RootSystem,
    kappa: Weight,
    h: Weight,
    v: Weight,
    verify: bool = True,
) -> tuple[Weight, Weight]:
    """One van Leeuwen move: (b_kappa, h, v) -> (b_kappa, v_out, h_out).

    Both edge labels must lie in orbits of dominant minuscule weights.
    The pivot is mu = dom_W(kappa + wt(v)); then v_out = mu - kappa and
    h_out = nu - mu with nu the total weight.
    """
    kappa = sys.check_weight(kappa)
    h = sys.check_weight(h)
    v = sys.check_weight(v)
    omega_h = sys.dom_w(h)
    omega_v = sys.dom_w(v)
    if verify:
        if not sys.is_dominant(kappa):
            raise LocalMoveError(f"kappa={kappa} is not dominant")
        for om, label in ((omega_h, h), (omega_v, v)):
            if not sys.is_minuscule(om):
                if sys.is_quasi_minuscule(om):
                    raise QuasiMinusculeError(
                        f"label {label} lies in a quasi-minuscule orbit; "
                        "local moves are not defined for it"
                    )
                raise LocalMoveError(f"label {label} is not in a minuscule orbit")
        lam = _add(kappa, h)
        if not _check_max_pair(sys, kappa, h) or not sys.is_dominant(lam):
            raise LocalMoveError(f"(b_{kappa}, {h}) is not a highest pair")
        if not _check_max_pair(sys, lam, v):
            raise LocalMoveError(f"(b_{lam}, {v}) is not a highest pair")
    lam = _add(kappa, h)
    nu = _add(lam, v)
    mu = sys.dom_w(_add(kappa, v))
    v_out = _sub(mu, kappa)
    h_out = _sub(nu, mu)
    if verify:
        if v_out not in sys.weyl_orbit(omega_v) or h_out not in sys.weyl_orbit(
            omega_h
        ):
            raise AssertionError("local move left the factor orbits")
        if not (_check_max_pair(sys, kappa, v_out) and _check_max_pair(sys, mu, h_out)):
            raise AssertionError("local move broke the highest-pair conditions")
    return v_out, h_out


@dataclass(frozen=True)
class GrowthDiagram:
    """Edge labels of a (k+1) x (l+1) corner lattice.

    ``h[i][j]`` labels the horizontal segment with left corner (i, j),
    ``v[i][j]`` the vertical segment with top corner (i, j); row index
    grows downward.  ``corner[i][j]`` is the accumulated dominant weight
    at corner (i, j).
    """

    system: RootSystem
    k: int
    l: int
    h: tuple[tuple[Weight, ...], ...]
    v: tuple[tuple[Weight, ...], ...]
    corner: tuple[tuple[Weight, ...], ...]

    def check_invariants(self):
        sys = self.system
        for i in range(self.k + 1):
            for j in range(self.l + 1):
                kap = self.corner[i][j]
                if not sys.is_dominant(kap):
                    raise AssertionError(f"corner ({i},{j}) = {kap} not dominant")
                if j < self.l:
                    if self.corner[i][j + 1] != _add(kap, self.h[i][j]):
                        raise AssertionError(f"corner mismatch right of ({i},{j})")
                    if not _check_max_pair(sys, kap, self.h[i][j]):
                        raise AssertionError(f"h[{i}][{j}] is not a highest extension")
                if i < self.k:
                    if self.corner[i + 1][j] != _add(kap, self.v[i][j]):
                        raise AssertionError(f"corner mismatch below ({i},{j})")
                    if not _check_max_pair(sys, kap, self.v[i][j]):
                        raise AssertionError(f"v[{i}][{j}] is not a highest extension")
        for i in range(self.k):
            for j in range(self.l):
                if _add(self.h[i][j], self.v[i][j + 1]) != _add(
                    self.v[i][j], self.h[i + 1][j]
                ):
                    raise AssertionError(f"weight conservation fails at cell ({i},{j})")

    def top_row(self) -> tuple[Weight, ...]:
        return self.h[0] if self.l else ()

    def bottom_row(self) -> tuple[Weight, ...]:
        return self.h[self.k] if self.l else ()

    def left_column(self) -> tuple[Weight, ...]:
        return tuple(self.v[i][0] for i in range(self.k))

    def right_column(self) -> tuple[Weight, ...]:
        return tuple(self.v[i][self.l] for i in range(self.k))


def growth_rectangle(
    pi_prime_parts: TensorElement,
    p: TensorElement,
    verify: bool = True,
) -> tuple[TensorElement, GrowthDiagram]:
    """Fill the growth rectangle for a highest pair.

    ``pi_prime_parts`` is the highest element (parts of a minuscule
    decomposition) of the left tensor factor; ``p`` completes it to a
    highest element of the product.  Returns the bottom row as the new
    right factor, plus the filled diagram whose left column recovers the
    decomposition of wt-of-left-column.
    """
    sys = pi_prime_parts.system
    if p.system != sys:
        raise LocalMoveError("factors live over different root systems")
    if not pi_prime_parts.is_highest():
        raise LocalMoveError("left factor is not a highest element")
    if not pi_prime_parts.concat(p).is_highest():
        raise LocalMoveError("input pair is not a highest element of the product")
    k, l = len(p), len(pi_prime_parts)
    h = [[None] * l for _ in range(k + 1)]
    v = [[None] * (l + 1) for _ in range(k)]
    corner = [[None] * (l + 1) for _ in range(k + 1)]
    corner[0][0] = sys.zero()
    for j in range(l):
        h[0][j] = pi_prime_parts.entries[j]
        corner[0][j + 1] = _add(corner[0][j], h[0][j])
    for i in range(k):
        v[i][l] = p.entries[i]
        corner[i + 1][l] = _add(corner[i][l], v[i][l])
    for i in range(k):
        for j in range(l - 1, -1, -1):
            v[i][j], h[i + 1][j] = local_move(
                sys, corner[i][j], h[i][j], v[i][j + 1], verify=verify
            )
            corner[i + 1][j] = _add(corner[i][j], v[i][j])
    diagram = GrowthDiagram(
        system=sys,
        k=k,
        l=l,
        h=tuple(tuple(row) for row in h),
        v=tuple(tuple(row) for row in v),
        corner=tuple(tuple(row) for row in corner),
    )
    expected_left = p.to_highest()[0].entries
    if diagram.left_column() != expected_left:
        raise AssertionError(
            "left column does not reproduce the decomposition of the right factor"
        )
    p_out = TensorElement(pi_prime_parts.shape, diagram.bottom_row())
    if verify:
        diagram.check_invariants()
        new_high = TensorElement(p.shape, diagram.left_column()).concat(p_out)
        if not new_high.is_highest():
            raise AssertionError("output pair is not highest")
    return p_out, diagram


# ---------------------------------------------------------------------------
# commutors on concatenated elements
# ---------------------------------------------------------------------------

BACKENDS = ("hk", "hk_alt", "jdt")


def commutor_on_concat(
    elem: TensorElement, split: int, backend: str = "hk", verify: bool = False
) -> TensorElement:
    """Apply the commutor to a concatenated element, swapping the factor
    groups [0:split) and [split:n).  Returns the reordered concatenation.
    """
    if not 0 <= split <= len(elem):
        raise IndexError(f"split {split} out of range")
    a, b = elem.sub(0, split), elem.sub(split, len(elem))
    if split == 0 or split == len(elem):
        return b.concat(a)
    if backend == "hk":
        flipped = b.lusztig_involution().concat(a.lusztig_involution())
        return flipped.lusztig_involution()
    if backend == "hk_alt":
        # Inverse reading of the reference composite: involution of the
        # whole product first, then per-group involutions, then flip.
        out = elem.lusztig_involution()
        oa, ob = out.sub(0, split), out.sub(split, len(elem))
        return ob.lusztig_involution().concat(oa.lusztig_involution())
    if backend == "jdt":
        highest, path = elem.to_highest()
        left = highest.sub(0, split)
        right = highest.sub(split, len(elem))
        p_out, diagram = growth_rectangle(left, right, verify=verify)
        new_left = TensorElement(right.shape, diagram.left_column())
        cur = new_left.concat(p_out)
        for i in reversed(path):
            cur = cur.f(i)
            if cur is None:
                raise AssertionError("lowering path broke while transporting")
        return cur
    raise ValueError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# blocked elements and the cactus action
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """An element of an embedded irreducible crystal of highest weight
    ``highest_weight``."""

    highest_weight: Weight
    element: TensorElement


@dataclass(frozen=True)
class BlockedElement:
    system: RootSystem
    blocks: tuple[Block, ...]

    def __len__(self):
        return len(self.blocks)

    def concat(self) -> TensorElement:
        from .crystal import empty_element

        out = empty_element(self.system)
        for blk in self.blocks:
            out = out.concat(blk.element)
        return out

    def validate(self):
        """Check each block lies in the component of its embedded highest
        element."""
        for blk in self.blocks:
            _, high = embed_highest(self.system, blk.highest_weight)
            if blk.element.shape != high.shape:
                raise ValueError(
                    f"block of weight {blk.highest_weight} has shape "
                    f"{blk.element.shape.factors}, expected {high.shape.factors}"
                )
            if blk.element.to_highest()[0] != high:
                raise ValueError(
                    f"block element does not lie in the component of weight "
                    f"{blk.highest_weight}"
                )


def blocked_element(sys: RootSystem, blocks) -> BlockedElement:
    be = BlockedElement(sys, tuple(Block(tuple(lam), el) for lam, el in blocks))
    be.validate()
    return be


def blocked_from_entries(sys: RootSystem, lambdas, entries) -> BlockedElement:
    """Build a blocked element from concatenated entries split per the
    embedded shapes of the given highest weights."""
    entries = [tuple(a) for a in entries]
    blocks = []
    pos = 0
    for lam in lambdas:
        sh, _ = embed_highest(sys, tuple(lam))
        n = len(sh.factors)
        blocks.append((tuple(lam), TensorElement(sh, tuple(entries[pos : pos + n]))))
        pos += n
    if pos != len(entries):
        raise ValueError(f"{len(entries)} entries but shapes consume {pos}")
    return blocked_element(sys, blocks)


def _apply_commutor_blocks(
    be: BlockedElement, p: int, r: int, q: int, backend: str, verify: bool = False
) -> BlockedElement:
    """1 x sigma x 1 on blocks: swap the block groups [p..r] and [r+1..q]
    (1-based, inclusive)."""
    blocks = be.blocks
    left = blocks[p - 1 : r]
    right = blocks[r : q]
    sub = BlockedElement(be.system, left + right).concat()
    split = sum(len(blk.element) for blk in left)
    out = commutor_on_concat(sub, split, backend=backend, verify=verify)
    new_blocks = []
    pos = 0
    for blk in right + left:
        n = len(blk.element)
        new_blocks.append(
            Block(
                blk.highest_weight,
                TensorElement(blk.element.shape, out.entries[pos : pos + n]),
            )
        )
        pos += n
    return BlockedElement(
        be.system, blocks[: p - 1] + tuple(new_blocks) + blocks[q:]
    )


def sigma_prq(
    be: BlockedElement,
    p: int,
    r: int,
    q: int,
    backend: str = "hk",
    via_generators: bool = False,
) -> BlockedElement:
    """The natural isomorphism swapping block intervals [p..r] and
    [r+1..q]; either directly or as s_{p,q} s_{r+1,q} s_{p,r}."""
    n = len(be)
    if not (1 <= p <= r < q <= n):
        raise IndexError(f"need 1 <= p <= r < q <= n, got p={p}, r={r}, q={q}, n={n}")
    if via_generators:
        out = be
        if p < r:
            out = cactus_s(out, p, r, backend=backend)
        if r + 1 < q:
            out = cactus_s(out, r + 1, q, backend=backend)
        return cactus_s(out, p, q, backend=backend)
    return _apply_commutor_blocks(be, p, r, q, backend)


def cactus_s(be: BlockedElement, p: int, q: int, backend: str = "hk") -> BlockedElement:
    """Cactus generator: reverse the block interval [p..q]."""
    n = len(be)
    if not (1 <= p < q <= n):
        raise IndexError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    if q == p + 1:
        return sigma_prq(be, p, p, q, backend=backend)
    return sigma_prq(cactus_s(be, p + 1, q, backend=backend), p, p, q, backend=backend)


def hk_commutor(be: BlockedElement, alt: bool = False) -> BlockedElement:
    """The involution-based commutor on a two-block element."""
    if len(be) != 2:
        raise ValueError("hk_commutor acts on two-block elements")
    return sigma_prq(be, 1, 1, 2, backend="hk_alt" if alt else "hk")


def hk_commutor_alt(be: BlockedElement) -> BlockedElement:
    return hk_commutor(be, alt=True)


def jdt_commutor(be: BlockedElement, verify: bool = False) -> BlockedElement:
    """The growth-diagram commutor on a two-block element."""
    if len(be) != 2:
        raise ValueError("jdt_commutor acts on two-block elements")
    return _apply_commutor_blocks(be, 1, 1, 2, "jdt", verify=verify)


def local_move_as_commutor(
    sys: RootSystem, kappa: Weight, h: Weight, v: Weight
) -> tuple[Weight, Weight]:
    """Evaluate a local move through the commutor composite
    sigma_{w', kappa x w} o (sigma_{kappa, w'} x 1)."""
    kappa = sys.check_weight(kappa)
    omega_h, omega_v = sys.dom_w(h), sys.dom_w(v)
    for om in (omega_h, omega_v):
        if not sys.is_minuscule(om):
            raise LocalMoveError(f"orbit of {om} is not minuscule")
    _, b_kappa = embed_highest(sys, kappa)
    m = len(b_kappa)
    h_el = TensorElement(TensorShape(sys, (omega_h,)), (tuple(h),))
    v_el = TensorElement(TensorShape(sys, (omega_v,)), (tuple(v),))
    elem = b_kappa.concat(h_el).concat(v_el)
    if not elem.is_highest():
        raise LocalMoveError("(b_kappa, h, v) is not a highest triple")
    step1 = commutor_on_concat(elem.sub(0, m + 1), m, backend="hk")
    step1 = step1.concat(elem.sub(m + 1, m + 2))
    step2 = commutor_on_concat(step1, 1, backend="hk")
    v_out = step2.entries[m]
    h_out = step2.entries[m + 1]
    if step2.entries[:m] != b_kappa.entries:
        raise AssertionError("commutor composite moved the b_kappa block")
    return v_out, h_out


def decompose_tensor(sh: TensorShape) -> Counter:
    """Multiset of highest weights (with multiplicity) of the tensor
    product, from its highest elements."""
    return Counter(el.weight() for el in max_elements(sh))


def decompose_blocked(sys: RootSystem, lambdas) -> Counter:
    """Decompose a product of embedded irreducibles B_{lam_1} x ... x
    B_{lam_n}: max elements of the factor product restricted to those
    whose blocks lie in the right components.

    For two blocks with the second minuscule, every summand must appear
    with multiplicity one and weight lam_1 + (orbit member); this is
    asserted.
    """
    lambdas = [tuple(lam) for lam in lambdas]
    pieces = [embed_highest(sys, lam) for lam in lambdas]
    shape_all = TensorShape(sys, tuple(f for sh, _ in pieces for f in sh.factors))
    out = Counter()
    for el in max_elements(shape_all):
        pos, ok = 0, True
        for (sh, high), lam in zip(pieces, lambdas):
            n = len(sh.factors)
            block = el.sub(pos, pos + n)
            pos += n
            if len(block) and block.to_highest()[0] != high:
                ok = False
                break
        if ok:
            out[el.weight()] += 1
    if len(lambdas) == 2 and sys.is_minuscule(lambdas[1]):
        orbit = sys.weyl_orbit(lambdas[1])
        for wt, mult in out.items():
            assert mult == 1, f"summand {wt} has multiplicity {mult}"
            mu_bar = tuple(a - b for a, b in zip(wt, lambdas[0]))
            assert mu_bar in orbit, f"summand {wt} is not lam + orbit member"
    return out
