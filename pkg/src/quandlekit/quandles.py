"""Finite quandles as n x n operation tables.

Conventions: table[x][y] = x <| y, inv_table[x][y] = x <|~ y (the unique z
with z <| y = x).  Columns act on the left argument, so column y is the
permutation S_y.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    AutomorphismMismatch,
    ClosureViolation,
    ColumnNotBijective,
    FileFormatError,
    NotIdempotent,
    NotNormal,
    NotSelfDistributive,
    SizeMismatch,
)
from .groups import FiniteGroup, GroupAutomorphism, Subgroup


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    order: int
    table: np.ndarray
    inv_table: np.ndarray
    label: str = ""

    def op(self, x, y):
        return int(self.table[x, y])

    def inv_op(self, x, y):
        return int(self.inv_table[x, y])

    def same_table(self, other):
        return self.order == other.order and np.array_equal(self.table, other.table)


def validate_quandle(table, label=""):
    """Check the three quandle axioms and precompute the inverse operation.

    Raises NotIdempotent / ColumnNotBijective / NotSelfDistributive with the
    first violating indices.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise FileFormatError("table must be a nonempty square matrix")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise FileFormatError(f"table entries must lie in 0..{n - 1}")

    diag = np.diagonal(t)
    bad = np.argwhere(diag != np.arange(n))
    if bad.size:
        raise NotIdempotent(int(bad[0, 0]))

    ar = np.arange(n)
    for y in range(n):
        if not np.array_equal(np.sort(t[:, y]), ar):
            raise ColumnNotBijective(y)

    x, y, z = _kernels.self_distrib_violation(t)
    if x != -1:
        raise NotSelfDistributive(x, y, z)

    inv = np.empty((n, n), dtype=np.int64)
    inv[t, ar[None, :]] = ar[:, None]
    t.setflags(write=False)
    inv.setflags(write=False)
    return FiniteQuandle(order=n, table=t, inv_table=inv, label=label)


def trivial_quandle(n):
    t = np.tile(np.arange(n)[:, None], (1, n))
    return validate_quandle(t, label=f"trivial({n})")


def dihedral_quandle(n):
    """x <| y = (2y - x) mod n."""
    t = (2 * np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return validate_quandle(t, label=f"R{n}")


# -- constructions from groups ------------------------------------------------

def conj_quandle(g: FiniteGroup):
    """Conjugation quandle: x <| y = y^-1 x y."""
    m = g.table
    tmp = m[g.inverse].T                       # tmp[x, y] = inv(y) * x
    t = m[tmp, np.arange(g.order)[None, :]]    # (inv(y) * x) * y
    return validate_quandle(t, label=f"Conj({g.name})")


def galex(g: FiniteGroup, sigma: GroupAutomorphism):
    """Generalized Alexander quandle: x <| y = sigma(x y^-1) y."""
    if sigma.group is not g and not sigma.group.same_table(g):
        raise AutomorphismMismatch("automorphism is not over the given group")
    m = g.table
    smap = np.asarray(sigma.map, dtype=np.int64)
    u = m[:, g.inverse]                        # u[x, y] = x * inv(y)
    t = m[smap[u], np.arange(g.order)[None, :]]
    return validate_quandle(t, label=f"GAlex({g.name},{''.join(map(str, sigma.map))})")


def hopf_pair_index(nsize, gi, rank):
    """Row-major (g, n) encoding used by hopf_extension."""
    return gi * nsize + rank


def hopf_extension(g: FiniteGroup, n: Subgroup):
    """Quandle on G x N built from a normal subgroup N of G.

    Index encoding: (g, n) -> g * |N| + rank of n in sorted N.
    """
    if n.group is not g and not n.group.same_table(g):
        raise NotNormal("subgroup is not over the given group")
    if not n.normal:
        raise NotNormal("subgroup is not normal")
    nelems = list(n.elements)
    rank = {v: r for r, v in enumerate(nelems)}
    nsize = len(nelems)
    size = g.order * nsize
    m, inv = g.table, g.inverse

    def mul(a, b):
        return int(m[a, b])

    table = np.empty((size, size), dtype=np.int64)
    prods = [[(mul(gi, ni)) for ni in nelems] for gi in range(g.order)]
    for g1 in range(g.order):
        for r1, n1 in enumerate(nelems):
            a = prods[g1][r1]                  # g1 * n1
            ai = int(inv[a])
            x = hopf_pair_index(nsize, g1, r1)
            for g2 in range(g.order):
                for r2, n2 in enumerate(nelems):
                    b = prods[g2][r2]          # g2 * n2
                    bi = int(inv[b])
                    # c |-> b^-1 a c a^-1 b
                    pre = mul(bi, a)
                    post = mul(ai, b)
                    first = mul(mul(pre, g1), post)
                    second = mul(mul(pre, n1), post)
                    if second not in rank:
                        raise ClosureViolation(
                            f"second coordinate {second} left the subgroup")
                    y = hopf_pair_index(nsize, g2, r2)
                    table[x, y] = hopf_pair_index(nsize, first, rank[second])
    return validate_quandle(table, label=f"HopfExt({g.name},N{nsize})")


# -- subquandles, homomorphisms, isomorphisms --------------------------------

def subquandle_closure(q: FiniteQuandle, seed):
    """Smallest subset containing seed closed under <| and <|~ in both
    operand positions."""
    s = set(int(x) for x in seed)
    if not s:
        raise ValueError("seed must be nonempty")
    if any(x < 0 or x >= q.order for x in s):
        raise ValueError("seed elements out of range")
    changed = True
    while changed:
        changed = False
        cur = list(s)
        for a in cur:
            for b in cur:
                for v in (q.op(a, b), q.inv_op(a, b)):
                    if v not in s:
                        s.add(v)
                        changed = True
    return frozenset(s)


def restrict(q: FiniteQuandle, elements, label=""):
    """Subquandle on an explicit closed element set, reindexed by sorted
    position."""
    elems = sorted(int(x) for x in set(elements))
    idx = {v: i for i, v in enumerate(elems)}
    k = len(elems)
    t = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            v = q.op(a, b)
            if v not in idx:
                raise ValueError("element set is not closed under <|")
            t[i, j] = idx[v]
    return validate_quandle(t, label=label or f"{q.label}|{elems}")


def is_homomorphism(f, src: FiniteQuandle, dst: FiniteQuandle):
    """True iff f(x <| y) = f(x) <| f(y) for all pairs."""
    if len(f) != src.order:
        raise SizeMismatch(f"map has {len(f)} entries, source has {src.order}")
    fm = np.asarray(f, dtype=np.int64)
    if fm.min() < 0 or fm.max() >= dst.order:
        raise SizeMismatch("map values out of range for target quandle")
    return bool(np.array_equal(fm[src.table], dst.table[fm[:, None], fm[None, :]]))


def _cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        l, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            l += 1
        lens.append(l)
    return tuple(sorted(lens))


def invariant_profile(q: FiniteQuandle):
    """Per-element invariant used to prune isomorphism search: cycle type
    of the column permutation S_x plus the fixed-point count of row x."""
    t = q.table
    prof = []
    for x in range(q.order):
        col = [int(t[z, x]) for z in range(q.order)]
        row_fix = int(np.count_nonzero(t[x] == x))
        prof.append((_cycle_type(col), row_fix))
    return prof


def _refined_profiles(a: FiniteQuandle, b: FiniteQuandle):
    """Jointly refine the per-element invariants of two quandles until the
    color partition stabilizes.  Returns (colors_a, colors_b), or None if
    the color multisets ever diverge (no isomorphism possible)."""
    n = a.order
    ta, tb = a.table, b.table

    def rank(sig_a, sig_b):
        uniq = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        return [uniq[s] for s in sig_a], [uniq[s] for s in sig_b]

    ca, cb = rank(invariant_profile(a), invariant_profile(b))
    if sorted(ca) != sorted(cb):
        return None
    while True:
        sig_a = [(ca[x], tuple(sorted((ca[y], ca[ta[x, y]], ca[ta[y, x]])
                                      for y in range(n))))
                 for x in range(n)]
        sig_b = [(cb[x], tuple(sorted((cb[y], cb[tb[x, y]], cb[tb[y, x]])
                                      for y in range(n))))
                 for x in range(n)]
        na, nb = rank(sig_a, sig_b)
        if sorted(na) != sorted(nb):
            return None
        if len(set(na)) == len(set(ca)):
            return na, nb
        ca, cb = na, nb


def isomorphic(a: FiniteQuandle, b: FiniteQuandle):
    """A bijective homomorphism a -> b as a map list, or None.

    Backtracking on element images in index order, pruned by matching
    refined per-element invariant profiles; first map found in
    lexicographic candidate order is returned.
    """
    if a.order != b.order:
        return None
    n = a.order
    prof = _refined_profiles(a, b)
    if prof is None:
        return None
    pa, pb = prof
    ta, tb = a.table, b.table
    mapping = [-1] * n
    used = [False] * n

    def assign(x, u):
        """Map x -> u and propagate images forced through the operation.
        Returns the list of assignments made, or None on conflict (after
        undoing them)."""
        made = []
        stack = [(x, u)]
        while stack:
            p, q_ = stack.pop()
            if mapping[p] != -1:
                if mapping[p] == q_:
                    continue
                break
            if used[q_] or pb[q_] != pa[p]:
                break
            mapping[p] = q_
            used[q_] = True
            made.append((p, q_))
            ok = True
            for y in range(n):
                v = mapping[y]
                if v == -1:
                    continue
                for (w, fw) in ((int(ta[p, y]), int(tb[q_, v])),
                                (int(ta[y, p]), int(tb[v, q_]))):
                    if mapping[w] == -1:
                        stack.append((w, fw))
                    elif mapping[w] != fw:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        else:
            return made
        for p, q_ in made:
            mapping[p] = -1
            used[q_] = False
        return None

    def bt():
        x = next((i for i in range(n) if mapping[i] == -1), None)
        if x is None:
            return True
        for u in range(n):
            if used[u] or pb[u] != pa[x]:
                continue
            made = assign(x, u)
            if made is None:
                continue
            if bt():
                return True
            for p, q_ in made:
                mapping[p] = -1
                used[q_] = False
        return False

    if not bt():
        return None
    if not is_homomorphism(mapping, a, b):     # full recheck
        return None
    return mapping


def relabel(q: FiniteQuandle, perm):
    """Transport the table along a permutation: new[p x][p y] = p[x <| y]."""
    p = np.asarray(perm, dtype=np.int64)
    if sorted(p.tolist()) != list(range(q.order)):
        raise ValueError("perm is not a permutation of the elements")
    inv = np.empty_like(p)
    inv[p] = np.arange(q.order)
    t = p[q.table[inv[:, None], inv[None, :]]]
    return validate_quandle(t, label=f"{q.label}~relabel")


# -- file format --------------------------------------------------------------

def parse_quandle_file(text, label=""):
    """Quandle table format: line 1 `quandle <n>`, then n rows of n
    integers (row x, column y = x <| y).  `#` starts a comment line."""
    lines = [ln for ln in (raw.split("#")[0].strip() for raw in text.splitlines())
             if ln]
    if not lines:
        raise FileFormatError("empty quandle file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "quandle":
        raise FileFormatError("first line must be 'quandle <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FileFormatError("first line must be 'quandle <n>'")
    if len(lines) != n + 1:
        raise FileFormatError(f"expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(v) for v in ln.split()]
        except ValueError:
            raise FileFormatError(f"non-integer entry in row: {ln!r}")
        if len(row) != n:
            raise FileFormatError(f"row has {len(row)} entries, expected {n}")
        rows.append(row)
    return validate_quandle(np.array(rows, dtype=np.int64), label=label)


def format_quandle_file(q: FiniteQuandle):
    out = [f"quandle {q.order}"]
    for i in range(q.order):
        out.append(" ".join(str(int(v)) for v in q.table[i]))
    return "\n".join(out) + "\n"
