"""Exact counts of connected marked coverings by monodromy enumeration.

A covering with ramification data (g, n; mu_1..mu_k) corresponds to a tuple
(sigma_1..sigma_k, tau_1..tau_c) in S_n with prescribed cycle types, every
tau a transposition, product the identity, and the generated subgroup
transitive; the count divided by n! implements the 1/|Aut| weight, and each
sigma_j carries a binomial factor choosing which of its fixed points are the
marked simple preimages.

The transposition phase is walked by an exact dynamic program over
configuration classes.  A configuration is (running product, partition of
the points into the connected blocks merged so far); its class records, per
block, the cycle type of the product restricted to that block.  Transition
counts out of a configuration depend only on its class, and the accepting
class (identity product, single block) contains exactly one configuration,
so class-level path counting reproduces the exact tuple count while keeping
the state space at "multisets of partitions" size instead of n! x Bell(n).

All values are immutable and all functions pure; the module-level caches
are grow-only with idempotent inserts, so concurrent use under CPython at
worst duplicates work.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct

from .errors import BudgetExceeded, DomainError
from .symmetric import (
    Partition,
    character,
    class_elements,
    conjugacy_class_size,
    identity_perm,
    irrep_dimension,
    partitions_of,
    perm_cycles,
    perm_from_cycle_lengths,
    perm_mult,
)

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_CHARACTER_LIMIT = 10


@dataclass(frozen=True)
class CoveringSpec:
    """A covering-count problem: genus, sheet count, ramification profiles."""

    g: int
    n: int
    mus: tuple[Partition, ...] = ()

    def __init__(self, g: int, n: int, mus=()):
        mus = tuple(mu if isinstance(mu, Partition) else Partition(mu) for mu in mus)
        object.__setattr__(self, "g", int(g))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "mus", mus)
        if self.g < 0:
            raise DomainError("genus must be >= 0")
        if self.n < 1:
            raise DomainError("sheet count must be >= 1")
        for mu in mus:
            if mu.m > self.n:
                raise DomainError(f"partition {mu} does not fit in {self.n} sheets")
        if self.c < 0:
            raise DomainError(
                f"spec has c = {self.c} < 0 simple points (over-degenerate ramification)"
            )

    @property
    def total_degeneracy(self) -> int:
        return sum(mu.degeneracy for mu in self.mus)

    @property
    def c(self) -> int:
        """Number of simple ramification points, fixed by Riemann-Hurwitz."""
        return 2 * self.n + 2 * self.g - 2 - self.total_degeneracy

    def marking_weight(self) -> int:
        """Product of binomials choosing the marked simple preimages."""
        w = 1
        for mu in self.mus:
            moved = sum(b for b in mu.parts if b >= 2)
            w *= math.comb(self.n - moved, mu.multiplicity(1))
        return w


# ---------------------------------------------------------------------------
# class-level dynamic program

# A state is a tuple of blocks, each block a weakly decreasing tuple of the
# cycle lengths of the running product inside it; blocks sorted descending.
_STATE_IDS: dict[tuple, int] = {}
_STATES: list[tuple] = []
_TRANSITIONS: list[list[tuple[int, int]] | None] = []
_STATE_MIN_STEPS: list[int] = []  # (n - #cycles) + 2*(#blocks - 1), needs n added back


def _canon(blocks) -> tuple:
    return tuple(sorted((tuple(sorted(b, reverse=True)) for b in blocks), reverse=True))


def _intern(state: tuple) -> int:
    sid = _STATE_IDS.get(state)
    if sid is None:
        sid = len(_STATES)
        _STATE_IDS[state] = sid
        _STATES.append(state)
        _TRANSITIONS.append(None)
        cycles = sum(len(b) for b in state)
        _STATE_MIN_STEPS.append(-cycles + 2 * (len(state) - 1))
    return sid


def _build_transitions(sid: int) -> list[tuple[int, int]]:
    """All single-transposition moves out of a class, with multiplicities."""
    state = _STATES[sid]
    blocks = [list(b) for b in state]
    nb = len(blocks)
    out: dict[int, int] = {}

    def emit(new_blocks, ways):
        tid = _intern(_canon(new_blocks))
        out[tid] = out.get(tid, 0) + ways

    for i, b in enumerate(blocks):
        others = [blocks[t] for t in range(nb) if t != i]
        cnt = Counter(b)
        # both points in one cycle: the cycle splits
        for l, mult in cnt.items():
            if l < 2:
                continue
            for d in range(1, l // 2 + 1):
                ways = (l // 2 if 2 * d == l else l) * mult
                nb2 = list(b)
                nb2.remove(l)
                nb2.extend((d, l - d))
                emit(others + [nb2], ways)
        # points in two different cycles of the same block: cycles merge
        lengths = sorted(cnt)
        for ai in range(len(lengths)):
            for bi in range(ai, len(lengths)):
                l1, l2 = lengths[ai], lengths[bi]
                if l1 == l2:
                    mult = cnt[l1]
                    if mult < 2:
                        continue
                    ways = (mult * (mult - 1) // 2) * l1 * l2
                else:
                    ways = cnt[l1] * cnt[l2] * l1 * l2
                nb2 = list(b)
                nb2.remove(l1)
                nb2.remove(l2)
                nb2.append(l1 + l2)
                emit(others + [nb2], ways)
    # points in different blocks: blocks merge through the touched cycles
    for i in range(nb):
        for j in range(i + 1, nb):
            rest = [blocks[t] for t in range(nb) if t not in (i, j)]
            for l1, m1 in Counter(blocks[i]).items():
                for l2, m2 in Counter(blocks[j]).items():
                    ways = m1 * l1 * m2 * l2
                    merged = list(blocks[i])
                    merged.remove(l1)
                    tail = list(blocks[j])
                    tail.remove(l2)
                    merged.extend(tail)
                    merged.append(l1 + l2)
                    emit(rest + [merged], ways)
    return list(out.items())


def _transitions(sid: int) -> list[tuple[int, int]]:
    cached = _TRANSITIONS[sid]
    if cached is None:
        cached = _build_transitions(sid)
        _TRANSITIONS[sid] = cached
    return cached


def _walk_count(n: int, start: dict[int, int], steps: int, budget: int) -> int:
    """Exact number of weighted transposition walks landing on the accepting
    class (identity, fully merged) after the given number of steps."""
    target = _intern(_canon([[1] * n]))
    vec = dict(start)
    ops = 0
    for step in range(steps):
        remaining = steps - step - 1
        new: dict[int, int] = {}
        for sid, weight in vec.items():
            for tid, mult in _transitions(sid):
                # parity is preserved automatically; prune distance-to-target
                if n + _STATE_MIN_STEPS[tid] > remaining:
                    continue
                new[tid] = new.get(tid, 0) + weight * mult
                ops += 1
        if ops > budget:
            raise BudgetExceeded(
                f"monodromy walk exceeded the node budget ({ops} > {budget})"
            )
        vec = new
        if not vec:
            return 0
    return vec.get(target, 0)


def _join_blocks(n: int, perms) -> list[list[int]]:
    """Connected blocks generated by the supports of the given permutations,
    with the cycle type of the running product inside each block."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    prod = identity_perm(n)
    for p in perms:
        prod = perm_mult(prod, p)
        for cyc in perm_cycles(p):
            for a, b in zip(cyc, cyc[1:]):
                union(a, b)
    blocks: dict[int, list[int]] = {}
    for cyc in perm_cycles(prod):
        blocks.setdefault(find(cyc[0]), []).append(len(cyc))
    return list(blocks.values())


_CONNECTED_CACHE: dict[tuple, Fraction] = {}


def hurwitz_connected(
    spec: CoveringSpec, node_budget: int = DEFAULT_NODE_BUDGET
) -> Fraction:
    """Connected marked covering count, weighted 1/|Aut|, as an exact rational.

    Tuple count over the monodromy data divided by n!; the division is the
    orbit-stabilizer form of the automorphism weight.
    """
    key = (spec.g, spec.n, tuple(mu.parts for mu in spec.mus))
    cached = _CONNECTED_CACHE.get(key)
    if cached is not None:
        return cached
    n, c = spec.n, spec.c
    weight = spec.marking_weight()
    if weight == 0:
        return Fraction(0)
    if not spec.mus:
        start = {_intern(_canon([[1]] * n)): 1}
    else:
        # the first profile is pinned to one class representative and scaled
        # by its class size; conjugation symmetry makes every representative
        # contribute equally.  Remaining profiles range over their full class.
        first = spec.mus[0].nontrivial()
        rep = perm_from_cycle_lengths(first, n)
        scale = conjugacy_class_size(Partition(first), n)
        start = {}
        pools = [list(class_elements(n, mu.nontrivial())) for mu in spec.mus[1:]]
        est = scale
        for pool in pools:
            est *= len(pool)
        if est > node_budget:
            raise BudgetExceeded(
                f"profile enumeration would visit ~{est} tuples (> {node_budget})"
            )
        for rest in _iproduct(*pools):
            sid = _intern(_canon(_join_blocks(n, (rep,) + rest)))
            start[sid] = start.get(sid, 0) + scale
        if c == 0:
            # no transpositions: accept only configurations that are already
            # the identity with a single block (n = 1 only, in practice)
            target = _intern(_canon([[1] * n]))
            count = start.get(target, 0)
            value = Fraction(weight * count, math.factorial(n))
            _CONNECTED_CACHE[key] = value
            return value
    count = _walk_count(n, start, c, node_budget)
    value = Fraction(weight * count, math.factorial(n))
    _CONNECTED_CACHE[key] = value
    return value


def hurwitz_disconnected(
    spec: CoveringSpec, character_limit: int = DEFAULT_CHARACTER_LIMIT
) -> Fraction:
    """The same weighted count without the transitivity requirement,
    via the class-algebra character sum (independent cross-check route)."""
    n, c = spec.n, spec.c
    if n > character_limit:
        raise BudgetExceeded(
            f"character table for n={n} exceeds the configured limit {character_limit}"
        )
    weight = spec.marking_weight()
    if weight == 0:
        return Fraction(0)
    sigma_types = [
        Partition(list(mu.nontrivial()) + [1] * (n - sum(mu.nontrivial())))
        for mu in spec.mus
    ]
    if n >= 2:
        tau_type = Partition([2] + [1] * (n - 2))
        tau_size = conjugacy_class_size(tau_type)
    else:
        tau_type = None
        tau_size = 0
    if c > 0 and n < 2:
        return Fraction(0)
    total = Fraction(0)
    for shape in partitions_of(n):
        dim = irrep_dimension(shape)
        term = Fraction(dim, 1) ** 2
        for st in sigma_types:
            term *= Fraction(conjugacy_class_size(st) * character(shape, st), dim)
        if c > 0:
            term *= Fraction(tau_size * character(shape, tau_type), dim) ** c
        total += term
    tuples = total / math.factorial(n)
    return Fraction(weight, math.factorial(n)) * tuples


def clear_caches() -> None:
    """Drop memoized covering counts (the class graph is kept)."""
    _CONNECTED_CACHE.clear()
