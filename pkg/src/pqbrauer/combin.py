"""Partition, tableau and coset combinatorics for degree-l computations.

Partitions are tuples of weakly decreasing positive integers, the empty
partition being ``()``.  Nodes are 1-indexed ``(row, col)`` pairs with
content ``col - row``.  The label set of degree l is
``Sigma_plus(l) = union of partitions of l - 2f for 0 <= f <= l//2``;
on it lives the order in which fewer boxes means strictly larger, with
dominance breaking ties among equal sizes.

Up-down tableaux are paths of partitions from the empty one, each step
adding or removing exactly one box; they index Murphy bases of standard
modules.  Coset representatives come with explicit reduced words
``s_{2f,i_f} s_{2f-1,j_f} ... s_{2,i_1} s_{1,j_1}`` subject to
``2k-1 <= j_k < i_k <= l`` and ``i_1 < ... < i_f``, which gives
``|D_{f,l}| = l! / (2^f f! (l-2f)!)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .coeff import Laurent, residue_add, residue_remove

Partition = tuple
UpDownPath = tuple  # (t0, t1, ..., tl) with t0 == ()


def is_partition(p) -> bool:
    return all(isinstance(x, int) and x > 0 for x in p) and \
        all(p[i] >= p[i + 1] for i in range(len(p) - 1))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """All partitions of n, largest-first lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return tuple(out)


def npartitions(n: int) -> int:
    return len(partitions(n))


def sigma_plus(l: int) -> list:
    """The label set: partitions of l, l-2, l-4, ..., in that order."""
    labels = []
    for f in range(l // 2 + 1):
        labels.extend(partitions(l - 2 * f))
    return labels


def caps_count(lam: Partition, l: int) -> int:
    """The f with lam a partition of l - 2f."""
    d = l - sum(lam)
    if d < 0 or d % 2:
        raise ValueError("%r is not a label at degree %d" % (lam, l))
    return d // 2


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def nodes(lam: Partition):
    """All nodes (row, col), 1-indexed, row by row."""
    for r, p in enumerate(lam, start=1):
        for c in range(1, p + 1):
            yield (r, c)


def content(node) -> int:
    r, c = node
    return c - r


def dominates(lam: Partition, mu: Partition) -> bool:
    """Partial-sum dominance for |lam| == |mu|: every prefix sum of mu <= lam's."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if b > a:
            return False
    return True


def order_leq(mu: Partition, lam: Partition, l: int) -> bool:
    """mu trianglelefteq lam on Sigma_plus(l): fewer boxes is larger."""
    for p in (mu, lam):
        caps_count(p, l)
    if sum(mu) != sum(lam):
        return sum(mu) > sum(lam)
    return dominates(lam, mu)


def order_lt(mu: Partition, lam: Partition, l: int) -> bool:
    return mu != lam and order_leq(mu, lam, l)


def addable_nodes(lam: Partition):
    """Nodes addable to the shape: row r+1 is open iff the row above is longer."""
    out = []
    for r in range(len(lam) + 1):
        c = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > c:
            out.append((r + 1, c + 1))
    return out


def removable_nodes(lam: Partition):
    out = []
    for r, p in enumerate(lam):
        if r + 1 == len(lam) or lam[r + 1] < p:
            out.append((r + 1, p))
    return out


def add_node(lam: Partition, node) -> Partition:
    r, c = node
    rows = list(lam) + [0]
    rows[r - 1] += 1
    return tuple(x for x in rows if x)


def remove_node(lam: Partition, node) -> Partition:
    r, c = node
    rows = list(lam)
    rows[r - 1] -= 1
    return tuple(x for x in rows if x)


def addable_removable(lam: Partition):
    """(additions, removals): lists of (partition, node) pairs."""
    adds = [(add_node(lam, p), p) for p in addable_nodes(lam)]
    rems = [(remove_node(lam, p), p) for p in removable_nodes(lam)]
    return adds, rems


def ra_set(lam: Partition, l: int) -> list:
    """The neighbours of lam one level down, removals first, dominance-descending.

    Additions participate only when lam sits strictly below the top layer
    (f > 0); within removals and within additions the order is dominance
    descending, which is total for one-box modifications of a fixed shape.
    """
    f = caps_count(lam, l)
    adds, rems = addable_removable(lam)
    rems_sorted = sorted((p for p, _ in rems),
                         key=lambda m: _dominance_key(m), reverse=True)
    out = list(rems_sorted)
    if f > 0:
        adds_sorted = sorted((p for p, _ in adds),
                             key=lambda m: _dominance_key(m), reverse=True)
        out.extend(adds_sorted)
    return out


def _dominance_key(lam: Partition):
    """Prefix sums; comparing keys lexicographically refines dominance."""
    acc, key = 0, []
    for p in lam:
        acc += p
        key.append(acc)
    return tuple(key)


@lru_cache(maxsize=None)
def updown_tableaux(l: int, lam: Partition) -> tuple:
    """All up-down paths of length l from the empty partition to lam."""
    caps_count(lam, l)
    if l == 0:
        return (((),),) if lam == () else ()
    out = []
    for prev in sigma_plus(l - 1):
        # one-box neighbours: lam = prev +/- box
        if abs(sum(prev) - sum(lam)) != 1:
            continue
        if sum(prev) < sum(lam):
            bigger, smaller = lam, prev
        else:
            bigger, smaller = prev, lam
        if not _covers(bigger, smaller):
            continue
        for path in updown_tableaux(l - 1, prev):
            out.append(path + (lam,))
    return tuple(out)


def _covers(big: Partition, small: Partition) -> bool:
    """big == small + one box."""
    if sum(big) != sum(small) + 1 or len(big) < len(small):
        return False
    diff = 0
    for k in range(len(big)):
        s = small[k] if k < len(small) else 0
        if big[k] != s:
            diff += big[k] - s
    return diff == 1


def path_steps(path: UpDownPath):
    """Yield ('add'|'remove', node) for each step of the path."""
    for k in range(1, len(path)):
        prev, cur = path[k - 1], path[k]
        if sum(cur) > sum(prev):
            node = _diff_node(cur, prev)
            yield ("add", node)
        else:
            node = _diff_node(prev, cur)
            yield ("remove", node)


def _diff_node(big: Partition, small: Partition):
    for r in range(len(big)):
        s = small[r] if r < len(small) else 0
        if big[r] != s:
            return (r + 1, big[r])
    raise ValueError("partitions do not differ by one box")


def residues(path: UpDownPath) -> list:
    """The residue sequence c_t(k), k = 1..l, as exact Laurent scalars."""
    out = []
    for kind, node in path_steps(path):
        c = content(node)
        out.append(residue_add(c) if kind == "add" else residue_remove(c))
    return out


def tableau_order_lt(t: UpDownPath, s: UpDownPath) -> bool:
    """Strict order on same-type paths: t < s iff t_k < s_k at the last difference."""
    if len(t) != len(s) or t[-1] != s[-1]:
        raise ValueError("paths must share degree and type")
    l = len(t) - 1
    for k in range(l, -1, -1):
        if t[k] != s[k]:
            return order_lt(t[k], s[k], k)
    return False


# ---------------------------------------------------------------------------
# permutations and reduced words

def perm_length(perm) -> int:
    """Inversion count of a permutation given in one-line form (tuple of images)."""
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def word_to_perm(word, n: int) -> tuple:
    """One-line form of s_{k_1} s_{k_2} ... s_{k_r} for word (k_1, ..., k_r).

    Group elements compose as functions, rightmost letter acting first; this
    matches the way braid-diagram slices stack bottom to top.
    """
    line = list(range(1, n + 1))
    for k in word:
        line[k - 1], line[k] = line[k], line[k - 1]
    return tuple(line)


def perm_to_word(perm) -> tuple:
    """A reduced word for the permutation, by bubbling inversions away."""
    line = list(perm)
    word = []
    n = len(line)
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if line[k] > line[k + 1]:
                line[k], line[k + 1] = line[k + 1], line[k]
                word.append(k + 1)
                changed = True
    word.reverse()
    return tuple(word)


def interval_word(i: int, j: int) -> tuple:
    """The word for s_{i,j}: s_i s_{i+1} ... s_{j-1} if i < j, descending if i > j."""
    if i == j:
        return ()
    if i < j:
        return tuple(range(i, j))
    return tuple(range(i - 1, j - 1, -1))


@dataclass(frozen=True)
class CosetRep:
    """One representative of D_{f,l} with its defining index pairs and word."""
    f: int
    l: int
    pairs: tuple  # ((j_1, i_1), ..., (j_f, i_f))
    word: tuple   # reduced word, letters are generator indices

    def perm(self) -> tuple:
        return word_to_perm(self.word, self.l)


@lru_cache(maxsize=None)
def coset_reps(f: int, l: int) -> tuple:
    """The set D_{f,l}, enumerated with i_1 < ... < i_f and 2k-1 <= j_k < i_k <= l."""
    if 2 * f > l or f < 0:
        raise ValueError("need 0 <= 2f <= l")
    if f == 0:
        return (CosetRep(0, l, (), ()),)
    reps = []

    def rec(k, pairs, min_i):
        if k > f:
            word = []
            for kk in range(f, 0, -1):
                j, i = pairs[kk - 1]
                word.extend(interval_word(2 * kk, i))
                word.extend(interval_word(2 * kk - 1, j))
            reps.append(CosetRep(f, l, tuple(pairs), tuple(word)))
            return
        for i in range(max(min_i + 1, 2 * k), l + 1):
            for j in range(2 * k - 1, i):
                rec(k + 1, pairs + [(j, i)], i)

    rec(1, [], 0)
    out = tuple(reps)
    expected = factorial(l) // (2 ** f * factorial(f) * factorial(l - 2 * f))
    if len(out) != expected:
        raise AssertionError("|D_{%d,%d}| = %d, expected %d" % (f, l, len(out), expected))
    return out


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# ---------------------------------------------------------------------------
# standard tableaux

@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of shape by an integer interval, stored row by row."""
    shape: Partition
    rows: tuple  # tuple of tuples

    def entry_positions(self) -> dict:
        pos = {}
        for r, row in enumerate(self.rows):
            for c, entry in enumerate(row):
                pos[entry] = (r + 1, c + 1)
        return pos

    def word(self) -> tuple:
        """Reduced word of d(t), relative to the row-reading superstandard filling."""
        if not self.rows:
            return ()
        entries = sorted(self.entry_positions())
        offset = entries[0] - 1
        # d(t) sends the superstandard entry of each cell to t's entry there
        reading = [e - offset for row in self.rows for e in row]
        return perm_to_word(tuple(reading))


def _invert(line: tuple) -> tuple:
    inv = [0] * len(line)
    for i, v in enumerate(line, start=1):
        inv[v - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def std_tableaux(lam: Partition, offset: int = 0) -> tuple:
    """All standard tableaux of the shape, entries offset+1 .. offset+|lam|."""
    n = sum(lam)
    if n == 0:
        return (StandardTableau((), ()),)
    out = []

    def rec(filled_rows, next_entry):
        if next_entry > n:
            rows = tuple(tuple(offset + e for e in row) for row in filled_rows)
            out.append(StandardTableau(lam, rows))
            return
        for r in range(len(lam)):
            row_len = len(filled_rows[r])
            if row_len >= lam[r]:
                continue
            if r > 0 and len(filled_rows[r - 1]) <= row_len:
                continue
            filled_rows[r].append(next_entry)
            rec(filled_rows, next_entry + 1)
            filled_rows[r].pop()

    rec([[] for _ in lam], 1)
    return tuple(out)


def superstandard(lam: Partition, offset: int = 0) -> StandardTableau:
    rows, k = [], offset
    for p in lam:
        rows.append(tuple(range(k + 1, k + p + 1)))
        k += p
    return StandardTableau(lam, tuple(rows))


def hook_lengths(lam: Partition) -> list:
    conj = conjugate(lam)
    return [lam[r] - (c + 1) + conj[c] - r
            for r in range(len(lam)) for c in range(lam[r])]


def n_std_tableaux(lam: Partition) -> int:
    n = sum(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(n) // prod if n else 1


# ---------------------------------------------------------------------------
# 2-cores and the sharp invariant

def two_core(lam: Partition) -> Partition:
    """Strip rim 2-hooks until none remain; the result is order-independent."""
    lam = tuple(lam)
    while True:
        stripped = _strip_one_domino(lam)
        if stripped is None:
            return lam
        lam = stripped


def _strip_one_domino(lam: Partition):
    for mu, _ in _domino_removals(lam):
        return mu
    return None


def _domino_removals(lam: Partition):
    """All partitions obtained by removing one rim 2-hook, with the hook's cells."""
    cells = set(nodes(lam))
    for (r, c) in sorted(cells):
        for other in (((r, c + 1)), ((r + 1, c))):
            pair = {(r, c), other}
            if other not in cells:
                continue
            rest = cells - pair
            mu = _cells_to_partition(rest)
            if mu is not None and _is_rim_pair(lam, pair):
                yield mu, pair


def _is_rim_pair(lam: Partition, pair) -> bool:
    rest = set(nodes(lam)) - pair
    return _cells_to_partition(rest) is not None


def _cells_to_partition(cells):
    if not cells:
        return ()
    rows = {}
    for (r, c) in cells:
        rows.setdefault(r, []).append(c)
    maxr = max(rows)
    parts = []
    for r in range(1, maxr + 1):
        if r not in rows:
            return None
        cs = sorted(rows[r])
        if cs != list(range(1, len(cs) + 1)):
            return None
        parts.append(len(cs))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    return tuple(parts)


def two_core_all_orders(lam: Partition) -> set:
    """Brute-force: every reachable hook-free partition over all removal orders."""
    frontier = {lam}
    finals = set()
    while frontier:
        nxt = set()
        for p in frontier:
            removals = list(_domino_removals(p))
            if not removals:
                finals.add(p)
            else:
                nxt.update(mu for mu, _ in removals)
        frontier = nxt
    return finals


def sharp(lam: Partition) -> int:
    """(# nodes of even content) - (# nodes of odd content)."""
    even = odd = 0
    for node in nodes(lam):
        if content(node) % 2 == 0:
            even += 1
        else:
            odd += 1
    return even - odd
