"""Brute-force reference computations, written without the library's algorithms."""
import itertools

import numpy as np

from dicat.rel import FinSet, Relation


# ---------------------------------------------------------------------------
# coends of finite profunctors


def coend_tuples(atoms, a, c):
    """Every (mids, elems) for the composite of ``atoms`` at (a, c)."""
    cats = [atoms[0].src] + [x.tgt for x in atoms]
    out = []
    for mids in itertools.product(*(cats[i].objects for i in range(1, len(atoms)))):
        ends = (a,) + mids + (c,)
        for elems in itertools.product(*(x.elements(ends[i], ends[i + 1]) for i, x in enumerate(atoms))):
            out.append((mids, elems))
    return out


def zigzag_moves(atoms, a, c, tuples):
    """Pairs related by sliding one arrow across one junction."""
    cats = [atoms[0].src] + [x.tgt for x in atoms]
    present = set(tuples)
    moves = []
    for mids, elems in tuples:
        ends = (a,) + mids + (c,)
        for i in range(1, len(atoms)):
            X = cats[i]
            b = mids[i - 1]
            for b2 in X.objects:
                for g in X.hom(b, b2):
                    # elems[i-1] . g  ~  g . y for each y over b2
                    pushed = atoms[i - 1].act(cats[i - 1].ident(ends[i - 1]), elems[i - 1], g)
                    for y in atoms[i].elements(b2, ends[i + 1]):
                        pulled = atoms[i].act(g, y, cats[i + 1].ident(ends[i + 1]))
                        if pulled != elems[i]:
                            continue
                        left = (mids[:i - 1] + (b2,) + mids[i:], elems[:i - 1] + (pushed, y) + elems[i + 1:])
                        right = (mids, elems)
                        assert left in present and right in present
                        moves.append((left, right))
    return moves


def fixpoint_classes(tuples, moves) -> set:
    """Connected components by repeated min-label propagation."""
    index = {t: i for i, t in enumerate(tuples)}
    label = list(range(len(tuples)))
    edges = [(index[x], index[y]) for x, y in moves]
    changed = True
    while changed:
        changed = False
        for i, j in edges:
            low = min(label[i], label[j])
            if label[i] != low or label[j] != low:
                label[i] = label[j] = low
                changed = True
    groups: dict = {}
    for t, i in index.items():
        groups.setdefault(label[i], set()).add(t)
    return {frozenset(g) for g in groups.values()}


def oracle_partition(atoms, a, c) -> set:
    tuples = coend_tuples(atoms, a, c)
    return fixpoint_classes(tuples, zigzag_moves(atoms, a, c, tuples))


def library_partition(evaluation, a, c) -> set:
    return {frozenset(evaluation.members(a, c, rep)) for rep in evaluation.classes(a, c)}


# ---------------------------------------------------------------------------
# relations as boolean matrices


def standard_set(n: int) -> FinSet:
    return FinSet.of(*range(1, n + 1), name=f"S{n}")


def all_matrices(n: int, k: int) -> np.ndarray:
    """Every n x k boolean matrix; row-major bit i*k+j of the index is entry (i, j)."""
    codes = np.arange(2 ** (n * k), dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n * k)) & 1
    return bits.reshape(len(codes), n, k).astype(bool)


def encode(mats: np.ndarray) -> np.ndarray:
    n, k = mats.shape[-2:]
    weights = (1 << np.arange(n * k, dtype=np.int64)).reshape(n, k)
    return (mats * weights).sum(axis=(-2, -1))


def composition_table(n: int, k: int, m: int) -> np.ndarray:
    """table[r, s] is the code of r ; s for r: n -> k and s: k -> m."""
    left, right = all_matrices(n, k).astype(np.int64), all_matrices(k, m).astype(np.int64)
    product = np.einsum("rij,sjl->rsil", left, right) > 0
    return encode(product)


def diagonal_code(n: int) -> int:
    return int(encode(np.eye(n, dtype=bool)[None])[0])


def relation_from_code(code: int, src: FinSet, tgt: FinSet) -> Relation:
    k = len(tgt)
    pairs = [(x, y) for i, x in enumerate(src) for j, y in enumerate(tgt) if code >> (i * k + j) & 1]
    return Relation(src, tgt, frozenset(pairs))


def relation_code(r: Relation) -> int:
    ia = {x: i for i, x in enumerate(r.src)}
    ib = {y: j for j, y in enumerate(r.tgt)}
    k = len(r.tgt)
    return sum(1 << (ia[x] * k + ib[y]) for x, y in r.pairs)


def tables_associative(tables: dict, sizes) -> int:
    """Check (r;s);t == r;(s;t) on every composable triple; returns the count."""
    checked = 0
    for n, k, m, p in itertools.product(sizes, repeat=4):
        t_nkm, t_kmp = tables[(n, k, m)], tables[(k, m, p)]
        t_nmp, t_nkp = tables[(n, m, p)], tables[(n, k, p)]
        for r in range(t_nkm.shape[0]):
            lhs = t_nmp[t_nkm[r]]
            rhs = t_nkp[r][t_kmp]
            assert np.array_equal(lhs, rhs), (n, k, m, p, r)
            checked += lhs.size
    return checked


def tables_unital(tables: dict, sizes) -> None:
    for n, k in itertools.product(sizes, repeat=2):
        ids = np.arange(2 ** (n * k))
        assert np.array_equal(tables[(n, n, k)][diagonal_code(n)], ids)
        assert np.array_equal(tables[(n, k, k)][:, diagonal_code(k)], ids)
