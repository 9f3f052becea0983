"""Canonical linear algebra for finitely generated submodules of (Z/p^s Z)^n.

The workhorse is the Howell form, a canonical echelon form over the chain
ring: pivots are exact powers of p, entries above a pivot are reduced modulo
that pivot, and the span is Howell-closed, meaning every span element whose
leading coordinates vanish lies in the span of the trailing rows. Two row
sets span the same module iff their Howell forms are identical, which makes
module equality, deduplication, and counting reliable.

The systematic form is a second normal form, reached by full pivoting on a
globally minimal valuation entry at each step. Its diagonal consists of
pivots p^{v_1}, ..., p^{v_K} with nondecreasing valuations, and those
valuations read off the module's subtype: the span is isomorphic to a direct
sum of cyclic modules p^{v_i} R. Howell pivots cannot be used for that
purpose: span{(3,1)} over Z/9 has Howell form {(3,1),(0,3)} with two
non-unit pivots, yet the module is cyclic with a single generator of
valuation 1 and free rank 0, subtype (0,1) read from its systematic
diagonal after a column swap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import guard_cap
from .ring import ChainRingParams

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class ModMatrix:
    """A matrix over Z/p^s Z whose rows generate a submodule of R^n."""

    params: ChainRingParams
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one column")
        m = self.params.modulus
        rows = []
        for row in self.rows:
            row = tuple(int(x) % m for x in row)
            if len(row) != self.n:
                raise ValueError(f"row length {len(row)} != {self.n}")
            rows.append(row)
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def zero(cls, params: ChainRingParams, n: int) -> "ModMatrix":
        return cls(params, n, ())

    @classmethod
    def full(cls, params: ChainRingParams, n: int) -> "ModMatrix":
        rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        return cls(params, n, rows)


def _check_same_space(a: ModMatrix, b: ModMatrix) -> None:
    if a.params != b.params:
        raise ValueError("ring parameter mismatch")
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")


def _first_nonzero(row) -> int | None:
    for j, x in enumerate(row):
        if x:
            return j
    return None


def _vec_add(m: int, a, b) -> tuple[int, ...]:
    return tuple((x + y) % m for x, y in zip(a, b))


def _vec_scale(m: int, c: int, a) -> tuple[int, ...]:
    return tuple((c * x) % m for x in a)


def _normalized(params: ChainRingParams, row: list[int], j: int, v: int) -> list[int]:
    """Scale the row by a unit so entry j becomes exactly p^v."""
    m = params.modulus
    inv = params.unit_inverse(row[j] // params.p**v)
    return [(inv * x) % m for x in row]


def howell_form(mat: ModMatrix) -> ModMatrix:
    """The unique canonical generator matrix of the row span.

    Rows are inserted into a pivot table one at a time. An incoming row is
    reduced against existing pivots while its leading entry sits in an
    occupied column with a pivot of no larger valuation; otherwise it is
    unit-normalized and installed, displacing any weaker pivot back onto the
    worklist. Installing a row with leading valuation v also enqueues its
    closure p^{s-v} * row, which is what makes the final span Howell-closed.
    A last pass reduces entries above each pivot modulo that pivot.
    """
    params = mat.params
    p, s, m = params.p, params.s, params.modulus
    pivots: dict[int, list[int]] = {}

    def install(row: list[int], j: int, v: int) -> None:
        row = _normalized(params, row, j, v)
        pivots[j] = row
        if v:
            closure = [(p ** (s - v) * x) % m for x in row]
            if any(closure):
                work.append(closure)

    work = [list(row) for row in mat.rows]
    while work:
        row = work.pop()
        while True:
            j = _first_nonzero(row)
            if j is None:
                break
            v = params.valuation(row[j])
            held = pivots.get(j)
            if held is None:
                install(row, j, v)
                break
            vb = params.valuation(held[j])
            if vb <= v:
                q = row[j] // p**vb
                row = [(x - q * y) % m for x, y in zip(row, held)]
            else:
                install(row, j, v)
                work.append(held)
                break

    for j in sorted(pivots):
        piv = pivots[j]
        step = p ** params.valuation(piv[j])
        for j2, other in list(pivots.items()):
            if j2 < j and other[j]:
                q = other[j] // step
                if q:
                    pivots[j2] = [(x - q * y) % m for x, y in zip(other, piv)]

    return ModMatrix(mat.params, mat.n, tuple(tuple(pivots[j]) for j in sorted(pivots)))


def span_size(mat: ModMatrix) -> int:
    """Number of elements of the row span: product of p^{s-v} over Howell pivots."""
    params = mat.params
    H = howell_form(mat)
    size = 1
    for row in H.rows:
        size *= params.p ** (params.s - params.valuation(row[_first_nonzero(row)]))
    return size


def _residue(vec, H: ModMatrix) -> list[int]:
    """Reduce a vector against a Howell form; the residue is zero iff vec is in the span."""
    params = H.params
    p, m = params.p, params.modulus
    row = [int(x) % m for x in vec]
    for piv in H.rows:
        j = _first_nonzero(piv)
        if row[j]:
            q = row[j] // p ** params.valuation(piv[j])
            if q:
                row = [(x - q * y) % m for x, y in zip(row, piv)]
    return row


def membership(vec, mat: ModMatrix) -> bool:
    if len(vec) != mat.n:
        raise ValueError(f"vector length {len(vec)} != {mat.n}")
    return not any(_residue(vec, howell_form(mat)))


def enumerate_elements(mat: ModMatrix, cap: int = DEFAULT_ENUM_CAP):
    """Yield every element of the row span exactly once.

    Elements are formed as sums c_1 r_1 + ... + c_h r_h over the Howell rows
    with 0 <= c_i < p^{s - v_i}; leading-term induction shows these hit each
    span element once. Yield order is lexicographic in (c_1, ..., c_h).
    """
    params = mat.params
    p, s, m = params.p, params.s, params.modulus
    H = howell_form(mat)
    guard_cap(span_size(H), cap, "module enumeration")

    def gen():
        elems = [(0,) * H.n]
        for row in H.rows:
            order = p ** (s - params.valuation(row[_first_nonzero(row)]))
            multiples = [(0,) * H.n]
            for _ in range(order - 1):
                multiples.append(_vec_add(m, multiples[-1], row))
            elems[:] = [_vec_add(m, e, f) for e in elems for f in multiples]
        yield from elems

    return gen()


def kernel(mat: ModMatrix) -> ModMatrix:
    """Generators of {x in R^n : M x^T = 0}, as a canonical Howell form.

    Computed from the Howell form of the block matrix [H^T | I_n]: a row
    combination has zero left block iff its right block annihilates every
    row of H, and by Howell closure the rows with zero left block span all
    such combinations.
    """
    params, n = mat.params, mat.n
    H = howell_form(mat)
    h = len(H.rows)
    big_rows = []
    for i in range(n):
        left = tuple(H.rows[k][i] for k in range(h))
        right = tuple(1 if t == i else 0 for t in range(n))
        big_rows.append(left + right)
    big = howell_form(ModMatrix(params, h + n, tuple(big_rows)))
    ker_rows = tuple(row[h:] for row in big.rows if not any(row[:h]))
    return howell_form(ModMatrix(params, n, ker_rows))


def module_sum(a: ModMatrix, b: ModMatrix) -> ModMatrix:
    _check_same_space(a, b)
    return howell_form(ModMatrix(a.params, a.n, a.rows + b.rows))


def module_intersect(a: ModMatrix, b: ModMatrix) -> ModMatrix:
    """Intersection via duality: (A cap B) is the annihilator of ann(A) + ann(B)."""
    _check_same_space(a, b)
    return kernel(module_sum(kernel(a), kernel(b)))


@dataclass(frozen=True)
class SystematicForm:
    """Result of full pivoting: permuted generators in block triangular shape.

    Position t of each row holds original column col_perm[t]. The leading
    K x K block is upper triangular with diagonal p^{diag[0]}, ...,
    p^{diag[K-1]}, diag nondecreasing; every entry of row i has valuation
    at least diag[i], and entries above a diagonal pivot are reduced modulo
    it, so equal-valuation rows form exact p^v I blocks.
    """

    params: ChainRingParams
    n: int
    col_perm: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    diag: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def subtype(self) -> tuple[int, ...]:
        counts = [0] * self.params.s
        for v in self.diag:
            counts[v] += 1
        return tuple(counts)

    @property
    def free_rank(self) -> int:
        return self.subtype[0]


def systematic_form(mat: ModMatrix) -> SystematicForm:
    """Full-pivot reduction with deterministic tie-breaking.

    Each step selects a remaining entry of globally minimal valuation,
    preferring the leftmost column and then the topmost row, swaps it to the
    diagonal, unit-normalizes it to p^v, and eliminates its column in every
    other row. The global-minimum choice keeps each elimination quotient an
    exact division and keeps every later entry's valuation at least v, so
    the diagonal valuations are nondecreasing and give the subtype.
    """
    params, n = mat.params, mat.n
    p, m = params.p, params.modulus
    rows = [list(row) for row in mat.rows if any(row)]
    perm = list(range(n))
    diag: list[int] = []
    r = 0
    while r < len(rows):
        best = None
        for i in range(r, len(rows)):
            for j in range(r, n):
                if rows[i][j]:
                    key = (params.valuation(rows[i][j]), j, i)
                    if best is None or key < best:
                        best = key
        if best is None:
            rows = rows[:r]
            break
        v, j, i = best
        rows[r], rows[i] = rows[i], rows[r]
        if j != r:
            perm[r], perm[j] = perm[j], perm[r]
            for row in rows:
                row[r], row[j] = row[j], row[r]
        rows[r] = _normalized(params, rows[r], r, v)
        pivot = rows[r]
        step = p**v
        for i2 in range(len(rows)):
            if i2 != r and rows[i2][r]:
                q = rows[i2][r] // step
                if q:
                    rows[i2] = [(x - q * y) % m for x, y in zip(rows[i2], pivot)]
        diag.append(v)
        r += 1
        rows = rows[:r] + [row for row in rows[r:] if any(row)]
    return SystematicForm(params, n, tuple(perm), tuple(tuple(row) for row in rows), tuple(diag))


def permute_columns(mat: ModMatrix, perm) -> ModMatrix:
    """Reorder columns so position t holds original column perm[t]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(mat.n)):
        raise ValueError(f"not a permutation of 0..{mat.n - 1}: {perm}")
    return ModMatrix(mat.params, mat.n, tuple(tuple(row[t] for t in perm) for row in mat.rows))


def subtype(mat: ModMatrix) -> tuple[int, ...]:
    """(k_0, ..., k_{s-1}) with k_i the number of systematic pivots of valuation i."""
    return systematic_form(mat).subtype


def rank(mat: ModMatrix) -> int:
    """Size of a minimal generating set: the number of systematic pivots."""
    return systematic_form(mat).rank


def free_rank(mat: ModMatrix) -> int:
    """Number of unit pivots in the systematic form, k_0."""
    return systematic_form(mat).free_rank


def parse_matrix(text: str) -> ModMatrix:
    """Read the shared text format: header line `p s n`, then one row per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"header must be `p s n`, got {lines[0]!r}")
    p, s, n = (int(tok) for tok in header)
    params = ChainRingParams(p, s)
    rows = []
    for ln in lines[1:]:
        row = tuple(int(tok) for tok in ln.split())
        if len(row) != n:
            raise ValueError(f"row {row} has {len(row)} entries, expected {n}")
        rows.append(row)
    return ModMatrix(params, n, tuple(rows))


def format_matrix(mat: ModMatrix) -> str:
    lines = [f"{mat.params.p} {mat.params.s} {mat.n}"]
    lines.extend(" ".join(str(x) for x in row) for row in mat.rows)
    return "\n".join(lines) + "\n"


def submodule_census(mat: ModMatrix, cap: int = 3**7) -> list[ModMatrix]:
    """All submodules of the row span, as canonical Howell forms.

    Breadth-first closure under index-p extensions: every submodule N admits
    a composition series whose steps adjoin an x with p*x already inside, so
    extending each known module M by every such x reaches everything. For a
    fixed M the extension candidates generating one child differ by an
    element of that child, so removing each new child's elements from the
    candidate list builds every edge (M, child) exactly once. The cap bounds
    the span size, not the census length.
    """
    params, n = mat.params, mat.n
    p, m = params.p, params.modulus
    guard_cap(span_size(mat), cap, "submodule census base module")
    universe = list(enumerate_elements(mat, cap))
    zero = ModMatrix.zero(params, n)
    found: dict[tuple, tuple[ModMatrix, frozenset]] = {
        zero.rows: (zero, frozenset([(0,) * n]))
    }
    todo = [zero.rows]
    while todo:
        base, elems = found[todo.pop()]
        queue = [x for x in universe if x not in elems and _vec_scale(m, p, x) in elems]
        while queue:
            x = queue[0]
            child_elems = set(elems)
            shift = x
            for _ in range(p - 1):
                child_elems.update(_vec_add(m, e, shift) for e in elems)
                shift = _vec_add(m, shift, x)
            child_elems = frozenset(child_elems)
            child = howell_form(ModMatrix(params, n, base.rows + (x,)))
            if span_size(child) != len(child_elems):
                raise AssertionError("howell span size disagrees with element count")
            if child.rows not in found:
                found[child.rows] = (child, child_elems)
                todo.append(child.rows)
            queue = [y for y in queue if y not in child_elems]
    mods = [entry[0] for entry in found.values()]
    mods.sort(key=lambda mm: (span_size(mm), mm.rows))
    return mods
