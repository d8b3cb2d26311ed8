import itertools
import random

import pytest

from quandlekit.groups import census_catalog
from quandlekit.quandles import (
    conj_quandle,
    dihedral_quandle,
    relabel,
    restrict,
    subquandle_closure,
    trivial_quandle,
)


@pytest.fixture(scope="session")
def catalog16():
    return census_catalog(16)


@pytest.fixture(scope="session")
def random_quandles():
    """100 randomized valid quandles of order <= 6: catalog-built tables
    relabeled by random permutations (relabeling preserves validity)."""
    rng = random.Random(20240817)
    pool = []
    for n in range(1, 7):
        pool.append(trivial_quandle(n))
        pool.append(dihedral_quandle(n))
    for g in census_catalog(6):
        q = conj_quandle(g)
        pool.append(q)
        for x in range(q.order):
            sub = subquandle_closure(q, {x})
            if 1 < len(sub) < q.order:
                pool.append(restrict(q, sub))
    pool = [q for q in pool if q.order <= 6]
    out = []
    while len(out) < 100:
        q = pool[rng.randrange(len(pool))]
        p = list(range(q.order))
        rng.shuffle(p)
        out.append(relabel(q, p))
    return out


def brute_force_colorings(d, q):
    """Independent oracle: try every assignment of quandle elements to
    arcs and keep those satisfying all crossing equations."""
    out = []
    for assign in itertools.product(range(q.order), repeat=d.arc_count):
        ok = True
        for c in d.crossings:
            want = (q.op(assign[c.under_in], assign[c.over]) if c.sign > 0
                    else q.inv_op(assign[c.under_in], assign[c.over]))
            if assign[c.under_out] != want:
                ok = False
                break
        if ok:
            out.append(assign)
    return out
