"""Finite groups as Cayley tables.

Element orderings for the built-in families are frozen so that element
indices quoted elsewhere (witnesses, CLI output) stay stable:

  cyclic n                  indices 0..n-1, i*j = (i+j) mod n
  dihedral n   (order 2n)   0..n-1 are rotations r^i; n..2n-1 are r^i*s
  quaternion8               1, -1, i, -i, j, -j, k, -k  (indices 0..7)
  generalized_quaternion16  a^0..a^7 then a^0*b..a^7*b
  symmetric n / alternating 4   permutation tuples in lexicographic order;
                            (p*q)(t) = p[q[t]] (apply q first)
  direct_product(A, B)      (x, y) -> x*|B| + y
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    FileFormatError,
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
    OrderTooLarge,
    UnknownFamily,
)

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: np.ndarray
    identity: int
    inverse: np.ndarray
    name: str = "group"
    labels: tuple = ()

    def mul(self, i, j):
        return int(self.table[i, j])

    def inv(self, i):
        return int(self.inverse[i])

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def element_order(self, x):
        k, p = 1, x
        while p != self.identity:
            p = self.mul(p, x)
            k += 1
        return k

    def element_orders(self):
        return [self.element_order(x) for x in range(self.order)]

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def same_table(self, other):
        return self.order == other.order and np.array_equal(self.table, other.table)


@dataclass(frozen=True)
class GroupAutomorphism:
    group: FiniteGroup
    map: tuple

    def __post_init__(self):
        n = self.group.order
        if len(self.map) != n or sorted(self.map) != list(range(n)):
            raise ValueError("map is not a permutation of the group elements")

    def apply(self, x):
        return self.map[x]

    def is_identity(self):
        return all(self.map[i] == i for i in range(self.group.order))


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    elements: tuple
    normal: bool

    def __contains__(self, x):
        return x in self.elements

    @property
    def order(self):
        return len(self.elements)


def validate_group(table, name="group", labels=()):
    """Check all group axioms on an n x n table and build a FiniteGroup.

    Raises NotLatinSquare / NoIdentity / NotAssociative naming the first
    violation found.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise FileFormatError("table must be a nonempty square matrix")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise FileFormatError(f"table entries must lie in 0..{n - 1}")

    for i in range(n):
        row = t[i]
        if len(set(row.tolist())) != n:
            seen = set()
            for v in row.tolist():
                if v in seen:
                    raise NotLatinSquare("row", i, v)
                seen.add(v)
        col = t[:, i]
        if len(set(col.tolist())) != n:
            seen = set()
            for v in col.tolist():
                if v in seen:
                    raise NotLatinSquare("column", i, v)
                seen.add(v)

    ar = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    i, j, k = _kernels.assoc_violation(t)
    if i != -1:
        raise NotAssociative(i, j, k)

    inverse = np.empty(n, dtype=np.int64)
    for x in range(n):
        y = int(np.argwhere(t[x] == identity)[0, 0])
        assert t[y, x] == identity
        inverse[x] = y

    t.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(order=n, table=t, identity=identity, inverse=inverse,
                       name=name, labels=tuple(labels))


# -- catalog families ---------------------------------------------------------

def _from_elements(elements, mult, name):
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    t = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            t[i, j] = idx[mult(a, b)]
    return validate_group(t, name=name, labels=tuple(str(e) for e in elements))


def cyclic_group(n):
    t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return validate_group(t, name=f"cyclic({n})",
                          labels=tuple(str(i) for i in range(n)))


def dihedral_group(n):
    elements = [(i, b) for b in (0, 1) for i in range(n)]

    def mult(a, b):
        (i, s), (k, l) = a, b
        if s == 0:
            return ((i + k) % n, l)
        return ((i - k) % n, (1 + l) % 2)

    g = _from_elements(elements, mult, f"dihedral({n})")
    labels = tuple(f"r{i}" if b == 0 else f"r{i}s" for b in (0, 1) for i in range(n))
    return FiniteGroup(g.order, g.table, g.identity, g.inverse, g.name, labels)


def _quat_mult(a, b):
    # units as (sign, axis), axis 0 = 1, 1 = i, 2 = j, 3 = k
    (sa, xa), (sb, xb) = a, b
    s = sa * sb
    if xa == 0:
        return (s, xb)
    if xb == 0:
        return (s, xa)
    if xa == xb:
        return (-s, 0)
    # i*j=k, j*k=i, k*i=j; reversed order flips the sign
    cyc = {(1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
           (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    sgn, ax = cyc[(xa, xb)]
    return (s * sgn, ax)


def quaternion_group():
    elements = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    g = _from_elements(elements, _quat_mult, "quaternion8")
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return FiniteGroup(g.order, g.table, g.identity, g.inverse, g.name, labels)


def generalized_quaternion16():
    # <a, b | a^8 = 1, b^2 = a^4, b^-1 a b = a^-1>, elements a^i b^j
    elements = [(i, j) for j in (0, 1) for i in range(8)]

    def mult(x, y):
        (i1, j1), (i2, j2) = x, y
        i = (i1 + (i2 if j1 == 0 else -i2) + (4 if j1 == 1 and j2 == 1 else 0)) % 8
        return (i, (j1 + j2) % 2)

    g = _from_elements(elements, mult, "generalized_quaternion16")
    labels = tuple(f"a{i}" if j == 0 else f"a{i}b" for j in (0, 1) for i in range(8))
    return FiniteGroup(g.order, g.table, g.identity, g.inverse, g.name, labels)


def _perm_mult(p, q):
    # apply q first, then p
    return tuple(p[q[t]] for t in range(len(p)))


def symmetric_group(n):
    if n > 4:
        raise UnknownFamily(f"symmetric({n}) not in catalog (n <= 4)")
    elements = sorted(itertools.permutations(range(n)))
    return _from_elements(elements, _perm_mult, f"symmetric({n})")


def alternating_group_4():
    def parity(p):
        inv = sum(1 for a, b in itertools.combinations(range(4), 2) if p[a] > p[b])
        return inv % 2

    elements = sorted(p for p in itertools.permutations(range(4)) if parity(p) == 0)
    return _from_elements(elements, _perm_mult, "alternating(4)")


def direct_product(a: FiniteGroup, b: FiniteGroup, max_order=DEFAULT_MAX_ORDER):
    n = a.order * b.order
    if n > max_order:
        raise OrderTooLarge(f"product order {n} exceeds bound {max_order}")
    t = np.empty((n, n), dtype=np.int64)
    for xa in range(a.order):
        for xb in range(b.order):
            x = xa * b.order + xb
            t[x] = (a.table[xa][:, None] * b.order + b.table[xb][None, :]).reshape(-1)
    labels = tuple(f"({a.label(xa)},{b.label(xb)})"
                   for xa in range(a.order) for xb in range(b.order))
    return validate_group(t, name=f"{a.name}x{b.name}", labels=labels)


def catalog(name, *params, max_order=DEFAULT_MAX_ORDER):
    """Build a named group from the built-in catalog."""
    fams = {
        "cyclic": (1, lambda n: cyclic_group(n)),
        "dihedral": (1, lambda n: dihedral_group(n)),
        "quaternion8": (0, quaternion_group),
        "generalized_quaternion16": (0, generalized_quaternion16),
        "symmetric": (1, lambda n: symmetric_group(n)),
        "alternating": (1, lambda n: alternating_group_4() if n == 4
                        else _bad_alternating(n)),
    }
    if name not in fams:
        raise UnknownFamily(f"unknown group family {name!r}")
    arity, builder = fams[name]
    if len(params) != arity:
        raise UnknownFamily(f"{name} takes {arity} parameter(s)")
    if params and (params[0] < 1):
        raise UnknownFamily(f"{name} parameter must be positive")
    est = {"cyclic": lambda p: p[0], "dihedral": lambda p: 2 * p[0],
           "quaternion8": lambda p: 8, "generalized_quaternion16": lambda p: 16,
           "symmetric": lambda p: _factorial(p[0]),
           "alternating": lambda p: 12}[name](params)
    if est > max_order:
        raise OrderTooLarge(f"order {est} exceeds bound {max_order}")
    return builder(*params)


def _bad_alternating(n):
    raise UnknownFamily(f"alternating({n}) not in catalog (only n = 4)")


def _factorial(n):
    import math
    return math.factorial(n)


def parse_group_spec(spec, max_order=DEFAULT_MAX_ORDER):
    """Parse a textual group spec like 'cyclic:3', 'quaternion8',
    or a product 'cyclic:2*cyclic:4' (left-associated)."""
    parts = [p.strip() for p in spec.split("*")]
    groups = []
    for part in parts:
        if ":" in part:
            fam, _, arg = part.partition(":")
            try:
                params = tuple(int(v) for v in arg.split(","))
            except ValueError:
                raise UnknownFamily(f"bad parameters in {part!r}")
        else:
            fam, params = part, ()
        groups.append(catalog(fam, *params, max_order=max_order))
    g = groups[0]
    for h in groups[1:]:
        g = direct_product(g, h, max_order=max_order)
    return g


def census_catalog(max_order):
    """The deterministic desk-scale group list used by the census and the
    acceptance suite: all catalog families plus a few abelian products,
    restricted to |G| <= max_order, sorted by (order, name).

    This is necessarily a subset of all groups of each order; no
    completeness is claimed.
    """
    gs = []
    for n in range(1, max_order + 1):
        gs.append(cyclic_group(n))
    for n in range(3, max_order // 2 + 1):
        gs.append(dihedral_group(n))
    if max_order >= 8:
        gs.append(quaternion_group())
    if max_order >= 16:
        gs.append(generalized_quaternion16())
    if max_order >= 6:
        gs.append(symmetric_group(3))
    if max_order >= 24:
        gs.append(symmetric_group(4))
    if max_order >= 12:
        gs.append(alternating_group_4())
    products = [(2, 2), (2, 4), (2, 6), (2, 8), (4, 4)]
    for a, b in products:
        if a * b <= max_order:
            gs.append(direct_product(cyclic_group(a), cyclic_group(b)))
    if 8 <= max_order:
        v4 = direct_product(cyclic_group(2), cyclic_group(2))
        gs.append(direct_product(v4, cyclic_group(2)))       # (Z2)^3
    if 16 <= max_order:
        v4 = direct_product(cyclic_group(2), cyclic_group(2))
        gs.append(direct_product(v4, cyclic_group(4)))       # Z2 x Z2 x Z4
    gs.sort(key=lambda g: (g.order, g.name))
    return gs


# -- subgroups ----------------------------------------------------------------

def _closure(g: FiniteGroup, seed):
    t = g.table
    elems = set(seed)
    elems.add(g.identity)
    queue = deque(elems)
    while queue:
        x = queue.popleft()
        for y in list(elems):
            for z in (int(t[x, y]), int(t[y, x])):
                if z not in elems:
                    elems.add(z)
                    queue.append(z)
    return frozenset(elems)


def _is_normal(g: FiniteGroup, elems):
    t, inv = g.table, g.inverse
    s = set(elems)
    for x in range(g.order):
        xi = int(inv[x])
        for h in elems:
            if int(t[int(t[xi, h]), x]) not in s:
                return False
    return True


def subgroups(g: FiniteGroup):
    """All subgroups, by BFS joins over the lattice seeded with the cyclic
    subgroups.  Complete because every subgroup is the join of the cyclic
    subgroups it contains."""
    cyclics = {_closure(g, {x}) for x in range(g.order)}
    found = set(cyclics)
    queue = deque(found)
    while queue:
        s = queue.popleft()
        for c in cyclics:
            if c <= s:
                continue
            j = _closure(g, s | c)
            if j not in found:
                found.add(j)
                queue.append(j)
    subs = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [Subgroup(g, tuple(sorted(s)), _is_normal(g, s)) for s in subs]


def normal_subgroups(g: FiniteGroup):
    return [s for s in subgroups(g) if s.normal]


def center(g: FiniteGroup):
    t = g.table
    elems = tuple(x for x in range(g.order)
                  if np.array_equal(t[x], t[:, x]))
    return Subgroup(g, elems, True)


def subgroup_from_elements(g: FiniteGroup, elements):
    """Wrap an explicit element set, verifying closure."""
    s = frozenset(int(x) for x in elements)
    if not s or any(x < 0 or x >= g.order for x in s):
        raise ValueError("subgroup elements out of range")
    if _closure(g, s) != s:
        raise ValueError("element set is not closed")
    return Subgroup(g, tuple(sorted(s)), _is_normal(g, s))


# -- automorphisms ------------------------------------------------------------

def _generating_set(g: FiniteGroup):
    """Greedy minimal-ish generating set: repeatedly add the element whose
    inclusion enlarges the generated subgroup the most."""
    n = g.order
    gens = []
    sub = frozenset({g.identity})
    while len(sub) < n:
        best_x, best_sub = None, None
        for x in range(n):
            if x in sub:
                continue
            cl = _closure(g, sub | {x})
            if best_sub is None or len(cl) > len(best_sub):
                best_x, best_sub = x, cl
        gens.append(best_x)
        sub = best_sub
    return gens


def _extend_hom(g: FiniteGroup, gens, images):
    """Extend gen -> image to a total map by closing under right
    multiplication; None on inconsistency."""
    n = g.order
    t = g.table
    mp = [-1] * n
    mp[g.identity] = g.identity
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        fx = mp[x]
        for gi, hi in zip(gens, images):
            y = int(t[x, gi])
            fy = int(t[fx, hi])
            if mp[y] == -1:
                mp[y] = fy
                queue.append(y)
            elif mp[y] != fy:
                return None
    return mp


def automorphisms(g: FiniteGroup):
    """The full automorphism group, sorted lexicographically by map.

    Candidate generator images are restricted to elements of equal order;
    each consistent extension is verified to be a bijection.
    """
    n = g.order
    if n == 1:
        return [GroupAutomorphism(g, (0,))]
    orders = g.element_orders()
    gens = _generating_set(g)
    cands = [[y for y in range(n) if orders[y] == orders[x]] for x in gens]
    found = set()
    for images in itertools.product(*cands):
        mp = _extend_hom(g, gens, images)
        if mp is not None and len(set(mp)) == n:
            found.add(tuple(mp))
    return [GroupAutomorphism(g, m) for m in sorted(found)]


def identity_automorphism(g: FiniteGroup):
    return GroupAutomorphism(g, tuple(range(g.order)))


# -- file format --------------------------------------------------------------

def parse_group_file(text, name="group"):
    """Group table format: line 1 `group <n>`, then n rows of n integers.
    `#` starts a comment line."""
    lines = [ln for ln in (raw.split("#")[0].strip() for raw in text.splitlines())
             if ln]
    if not lines:
        raise FileFormatError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "group":
        raise FileFormatError("first line must be 'group <n>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FileFormatError("first line must be 'group <n>'")
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
    return validate_group(np.array(rows, dtype=np.int64), name=name)


def format_group_file(g: FiniteGroup):
    out = [f"group {g.order}"]
    for i in range(g.order):
        out.append(" ".join(str(int(v)) for v in g.table[i]))
    return "\n".join(out) + "\n"
