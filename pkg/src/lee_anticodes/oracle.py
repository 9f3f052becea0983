"""Brute-force reference implementations backing the property tests.

Everything here is intentionally naive and element-based so it can serve as
an independent check of the closed forms and canonical algorithms: modules
are manipulated as explicit element sets, subtypes are read off the sizes
of the multiplication-by-p filtration, posets are handled by definition.
The only machinery shared with the main modules is ring arithmetic and the
Howell canonicalization used for digests, and the latter is cross-checked
against raw element sets every time a census is built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate, product

from .anticodes import Anticode
from .codes import Code
from .errors import InternalCheckError, guard_cap
from .matrices import ModMatrix, howell_form
from .ring import ChainRingParams

DEFAULT_CENSUS_CAP = 3**6
DEFAULT_POSET_CAP = 10**4
DEFAULT_ANTICODE_CAP = 10**5


def span_elements(params: ChainRingParams, n: int, gens) -> frozenset:
    """All elements of the module generated by gens, by closure under addition."""
    m = params.modulus
    zero = (0,) * n
    elems = {zero}
    frontier = [zero]
    gens = [tuple(int(x) % m for x in g) for g in gens]
    while frontier:
        e = frontier.pop()
        for g in gens:
            x = tuple((a + b) % m for a, b in zip(e, g))
            if x not in elems:
                elems.add(x)
                frontier.append(x)
    return frozenset(elems)


def subtype_from_elements(params: ChainRingParams, elems) -> tuple[int, ...]:
    """Subtype recovered from the sizes of p^j * M alone.

    With M of subtype (k_0, ..., k_{s-1}), log_p |p^j M| drops by
    sum_{i <= s-1-j} k_i from step j to j+1; differencing twice isolates
    each k_i.
    """
    p, s, m = params.p, params.s, params.modulus
    logsizes = []
    for j in range(s + 1):
        pj = p**j
        size = len({tuple((pj * x) % m for x in e) for e in elems})
        log = 0
        while p**log < size:
            log += 1
        if p**log != size:
            raise InternalCheckError(f"|p^{j} M| = {size} is not a power of {p}")
        logsizes.append(log)
    drops = [logsizes[j] - logsizes[j + 1] for j in range(s)] + [0]
    counts = tuple(drops[s - 1 - i] - drops[s - i] for i in range(s))
    if any(k < 0 for k in counts):
        raise InternalCheckError(f"negative subtype from sizes {logsizes}")
    return counts


@dataclass(frozen=True)
class CensusEntry:
    mat: ModMatrix
    elements: frozenset
    subtype: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(self.subtype)


@dataclass(frozen=True)
class ModuleCensus:
    parent: ModMatrix
    entries: tuple[CensusEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def enumerate_submodules(mat: ModMatrix, cap: int = DEFAULT_CENSUS_CAP) -> ModuleCensus:
    """Every submodule of span(mat), built from element sets alone.

    Grows modules one index-p cyclic extension at a time: every submodule
    has a composition series whose steps adjoin some x with p*x already
    present, so the breadth-first closure reaches all of them. Distinct
    extension elements yielding one child differ by a child element, so
    pruning each new child's elements from the candidate list visits every
    (module, child) edge exactly once. Deduplication is by raw element set;
    Howell digests are attached afterwards and verified against the sets.
    """
    params, n = mat.params, mat.n
    p, m = params.p, params.modulus
    parent = span_elements(params, n, mat.rows)
    guard_cap(len(parent), cap, "submodule census")
    universe = sorted(parent)
    zero = frozenset({(0,) * n})
    found = {zero}
    todo = [zero]
    while todo:
        base = todo.pop()
        queue = [
            x
            for x in universe
            if x not in base and tuple((p * t) % m for t in x) in base
        ]
        while queue:
            x = queue[0]
            child = set(base)
            shift = x
            for _ in range(p - 1):
                child.update(tuple((a + b) % m for a, b in zip(e, shift)) for e in base)
                shift = tuple((a + b) % m for a, b in zip(shift, x))
            child = frozenset(child)
            if child not in found:
                found.add(child)
                todo.append(child)
            queue = [y for y in queue if y not in child]
    entries = []
    for elems in found:
        digest = howell_form(ModMatrix(params, n, tuple(sorted(elems))))
        if span_elements(params, n, digest.rows) != elems:
            raise InternalCheckError(
                f"howell form of a census module spans a different set: {digest.rows}"
            )
        entries.append(CensusEntry(digest, elems, subtype_from_elements(params, elems)))
    entries.sort(key=lambda e: (len(e.elements), e.mat.rows))
    return ModuleCensus(howell_form(mat), tuple(entries))


def _brute_compositions(parts: int, total: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _brute_compositions(parts - 1, total - first):
            yield (first,) + rest


class PosetOracle:
    """The dominance order handled entirely by definition.

    Order is decided by comparing prefix sums; joins and meets scan all
    bounds; covers test interval emptiness; the Moebius function uses the
    recursive sum over half-open intervals; maximal chains walk covers.
    """

    def __init__(self, parts: int, total: int, cap: int = DEFAULT_POSET_CAP):
        if parts < 1 or total < 0:
            raise ValueError("need parts >= 1 and total >= 0")
        guard_cap(math.comb(total + parts - 1, parts - 1), cap, "poset oracle")
        self.parts = parts
        self.total = total
        self.elements = tuple(
            sorted(_brute_compositions(parts, total), key=lambda a: tuple(accumulate(a)))
        )
        self._mobius_memo: dict = {}

    def leq(self, a, b) -> bool:
        a, b = tuple(a), tuple(b)
        return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))

    def join(self, a, b):
        ubs = [c for c in self.elements if self.leq(a, c) and self.leq(b, c)]
        least = [c for c in ubs if all(self.leq(c, d) for d in ubs)]
        if len(least) != 1:
            raise InternalCheckError(f"join of {a}, {b} is not unique: {least}")
        return least[0]

    def meet(self, a, b):
        lbs = [c for c in self.elements if self.leq(c, a) and self.leq(c, b)]
        greatest = [c for c in lbs if all(self.leq(d, c) for d in lbs)]
        if len(greatest) != 1:
            raise InternalCheckError(f"meet of {a}, {b} is not unique: {greatest}")
        return greatest[0]

    def covers(self, a) -> tuple:
        a = tuple(a)
        out = []
        for b in self.elements:
            if b != a and self.leq(a, b):
                strictly_between = any(
                    c != a and c != b and self.leq(a, c) and self.leq(c, b)
                    for c in self.elements
                )
                if not strictly_between:
                    out.append(b)
        return tuple(out)

    def mobius(self, a, b) -> int:
        a, b = tuple(a), tuple(b)
        if not self.leq(a, b):
            return 0
        key = (a, b)
        if key not in self._mobius_memo:
            if a == b:
                value = 1
            else:
                value = -sum(
                    self.mobius(a, c)
                    for c in self.elements
                    if c != b and self.leq(a, c) and self.leq(c, b)
                )
            self._mobius_memo[key] = value
        return self._mobius_memo[key]

    def bottom(self):
        low = [a for a in self.elements if all(self.leq(a, b) for b in self.elements)]
        if len(low) != 1:
            raise InternalCheckError(f"bottom is not unique: {low}")
        return low[0]

    def top(self):
        high = [a for a in self.elements if all(self.leq(b, a) for b in self.elements)]
        if len(high) != 1:
            raise InternalCheckError(f"top is not unique: {high}")
        return high[0]

    def maximal_chains(self):
        goal = self.top()
        stack = [(self.bottom(),)]
        while stack:
            chain = stack.pop()
            if chain[-1] == goal:
                yield chain
                continue
            for nxt in reversed(self.covers(chain[-1])):
                stack.append(chain + (nxt,))


def poset_oracle(parts: int, total: int, cap: int = DEFAULT_POSET_CAP) -> PosetOracle:
    return PosetOracle(parts, total, cap)


def enumerate_anticodes(
    n: int, params: ChainRingParams, cap: int = DEFAULT_ANTICODE_CAP
) -> list[Anticode]:
    """Every anticode of length n: all exponent vectors in {0..s}^n, lex order."""
    guard_cap((params.s + 1) ** n, cap, "anticode enumeration")
    return [Anticode(params, exps) for exps in product(range(params.s + 1), repeat=n)]


def enumerate_codes(n: int, params: ChainRingParams, cap: int = DEFAULT_CENSUS_CAP):
    """Every code of length n exactly once, via the full-module census."""
    census = enumerate_submodules(ModMatrix.full(params, n), cap)
    return (Code(entry.mat) for entry in census.entries)
