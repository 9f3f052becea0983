"""Oracle-vs-closed-form verification suites, shared by the CLI and tests.

Each suite returns a list of CheckResult records, one per property. A check
fails by returning a counterexample description, never by raising: internal
cross-check errors from the library are caught and reported as failures so
the CLI can dump them and exit with the triage code for theorem violations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import anticodes as ac
from . import dominance as comp
from . import invariants as inv
from . import matrices, oracle
from .codes import Code
from .errors import InternalCheckError
from .matrices import ModMatrix
from .ring import ChainRingParams


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn) -> CheckResult:
    """Run one check; fn returns None on success or a counterexample string."""
    try:
        detail = fn()
    except InternalCheckError as exc:
        return CheckResult(name, False, str(exc))
    if detail is None:
        return CheckResult(name, True)
    return CheckResult(name, False, detail)


def verify_lattice(parts: int, total: int) -> list[CheckResult]:
    po = oracle.poset_oracle(parts, total)
    elems = comp.compositions(parts, total)

    def check_enumeration():
        expected = math.comb(total + parts - 1, parts - 1)
        if len(elems) != expected or set(elems) != set(po.elements):
            return f"enumeration mismatch: {len(elems)} vs {expected}"
        return None

    def check_order():
        for a in elems:
            for b in elems:
                if comp.dominance_leq(a, b) != po.leq(a, b):
                    return f"order disagrees at {a}, {b}"
        return None

    def check_join_meet():
        for a in elems:
            for b in elems:
                if comp.join(a, b) != po.join(a, b):
                    return f"join disagrees at {a}, {b}"
                if comp.meet(a, b) != po.meet(a, b):
                    return f"meet disagrees at {a}, {b}"
        return None

    def check_covers():
        for a in elems:
            if set(comp.covers(a)) != set(po.covers(a)):
                return f"covers disagree at {a}"
            below = {b for b in elems if a in po.covers(b)}
            if set(comp.covered_by(a)) != below:
                return f"lower covers disagree at {a}"
        return None

    def check_mobius():
        for a in elems:
            for b in elems:
                if comp.mobius(a, b) != po.mobius(a, b):
                    return (
                        f"mobius disagrees at {a}, {b}: "
                        f"closed {comp.mobius(a, b)}, recursive {po.mobius(a, b)}"
                    )
        return None

    def check_mobius_support():
        for a in elems:
            support = {b for b in elems if comp.mobius(a, b) != 0}
            if support != set(comp.boolean_sublattice(a)):
                return f"mobius support differs from the boolean sublattice at {a}"
        return None

    def check_chains():
        want = comp.maximal_chain_length(parts, total)
        count = 0
        for chain in comp.maximal_chains(parts, total):
            if len(chain) - 1 != want:
                return f"chain of length {len(chain) - 1}, expected {want}"
            count += 1
        oracle_count = sum(1 for _ in po.maximal_chains())
        if count != oracle_count:
            return f"chain count {count} != oracle {oracle_count}"
        return None

    def check_reversal():
        for a in elems:
            for b in elems:
                fwd = comp.dominance_leq(a, b)
                rev = comp.dominance_leq(
                    comp.reverse_composition(b), comp.reverse_composition(a)
                )
                if fwd != rev:
                    return f"reversal fails at {a}, {b}"
        return None

    def check_distributivity():
        for a in elems:
            for b in elems:
                for c in elems:
                    lhs = comp.meet(a, comp.join(b, c))
                    rhs = comp.join(comp.meet(a, b), comp.meet(a, c))
                    if lhs != rhs:
                        return f"distributivity fails at {a}, {b}, {c}"
        return None

    def check_linear_extension():
        for a in elems:
            for b in elems:
                if comp.dominance_leq(a, b) and comp.linear_key(a) > comp.linear_key(b):
                    return f"linear extension violates order at {a}, {b}"
        return None

    def check_irreducibles():
        for a in elems:
            lower = sum(1 for b in elems if a in po.covers(b))
            upper = len(po.covers(a))
            if comp.is_join_irreducible(a) != (lower == 1):
                return f"join irreducibility disagrees at {a}"
            if comp.is_meet_irreducible(a) != (upper == 1):
                return f"meet irreducibility disagrees at {a}"
        return None

    return [
        _run("lattice enumeration matches the oracle", check_enumeration),
        _run("dominance order matches the oracle", check_order),
        _run("join and meet match brute bounds", check_join_meet),
        _run("covers match interval emptiness", check_covers),
        _run("Moebius closed form equals the recursion", check_mobius),
        _run("Moebius support equals the boolean sublattice", check_mobius_support),
        _run("maximal chains have the uniform length", check_chains),
        _run("reversal is an order anti-isomorphism", check_reversal),
        _run("the lattice is distributive", check_distributivity),
        _run("the linear extension refines dominance", check_linear_extension),
        _run("irreducibles have unique covers", check_irreducibles),
    ]


def _census_codes(params: ChainRingParams, n: int, cap: int):
    census = oracle.enumerate_submodules(ModMatrix.full(params, n), cap)
    return census, [Code(entry.mat) for entry in census.entries]


def verify_counting(p: int, s: int, n: int, cap: int = oracle.DEFAULT_CENSUS_CAP):
    params = ChainRingParams(p, s)
    census, _codes = _census_codes(params, n, cap)
    comps = comp.compositions(s + 1, n)

    def check_census_total():
        full_ext = (n,) + (0,) * s
        expected = sum(inv.chain_bracket(full_ext, b, p) for b in comps)
        if len(census) != expected:
            return f"census size {len(census)} != bracket total {expected}"
        return None

    def check_span_sizes():
        for entry in census.entries:
            if matrices.span_size(entry.mat) != len(entry.elements):
                return f"span size disagrees for {entry.mat.rows}"
        return None

    def check_subtypes():
        for entry in census.entries:
            if matrices.subtype(entry.mat) != entry.subtype:
                return (
                    f"subtype disagrees for {entry.mat.rows}: "
                    f"systematic {matrices.subtype(entry.mat)}, "
                    f"filtration {entry.subtype}"
                )
        return None

    def check_howell_uniqueness():
        for entry in census.entries:
            doubled = ModMatrix(
                params, n, tuple(reversed(entry.mat.rows)) + entry.mat.rows
            )
            if matrices.howell_form(doubled) != entry.mat:
                return f"howell form not canonical for {entry.mat.rows}"
        return None

    def check_brackets():
        for parent in census.entries:
            ext = parent.subtype + (n - parent.rank,)
            counts: dict = {}
            for entry in census.entries:
                if entry.elements <= parent.elements:
                    key = entry.subtype + (n - entry.rank,)
                    counts[key] = counts.get(key, 0) + 1
            for b in comps:
                if inv.chain_bracket(ext, b, p) != counts.get(b, 0):
                    return (
                        f"bracket({ext}, {b}) = {inv.chain_bracket(ext, b, p)} "
                        f"but census finds {counts.get(b, 0)}"
                    )
        return None

    def check_kernels():
        for entry in census.entries:
            ker = matrices.kernel(entry.mat)
            if matrices.span_size(entry.mat) * matrices.span_size(ker) != p ** (s * n):
                return f"kernel size pairing fails for {entry.mat.rows}"
            if matrices.kernel(ker) != entry.mat:
                return f"double kernel differs for {entry.mat.rows}"
            k = entry.subtype
            expect = (n - entry.rank,) + tuple(k[s - i] for i in range(1, s))
            if matrices.subtype(ker) != expect:
                return f"kernel subtype {matrices.subtype(ker)} != {expect}"
        return None

    def check_membership():
        universe = sorted(census.entries[-1].elements)
        for entry in census.entries:
            for x in universe:
                if matrices.membership(x, entry.mat) != (x in entry.elements):
                    return f"membership disagrees for {x} in {entry.mat.rows}"
        return None

    def check_enumeration():
        for entry in census.entries:
            if sorted(matrices.enumerate_elements(entry.mat)) != sorted(entry.elements):
                return f"enumeration disagrees for {entry.mat.rows}"
        return None

    return [
        _run("census size equals the bracket total", check_census_total),
        _run("span sizes match element counts", check_span_sizes),
        _run("systematic subtypes match the size filtration", check_subtypes),
        _run("howell form is canonical under row shuffling", check_howell_uniqueness),
        _run("brackets count submodules on every parent", check_brackets),
        _run("kernels pair sizes and reverse subtypes", check_kernels),
        _run("membership agrees with element sets", check_membership),
        _run("enumeration yields each element once", check_enumeration),
    ]


def _vector_in_anticode(params: ChainRingParams, vec, anticode: ac.Anticode) -> bool:
    return all(params.valuation(x) >= e for x, e in zip(vec, anticode.exponents))


def verify_anticodes(p: int, s: int, n: int, cap: int = oracle.DEFAULT_CENSUS_CAP):
    params = ChainRingParams(p, s)
    _census, codes = _census_codes(params, n, cap)
    all_anticodes = oracle.enumerate_anticodes(n, params)
    comps = comp.compositions(s + 1, n)

    def check_hamming_bound():
        for c in codes:
            if c.max_weight("hamming") < ac.hamming_bound(c.rank):
                return f"hamming bound fails for {c.gen.rows}"
        return None

    def check_hom_bound():
        for c in codes:
            if c.max_weight("hom") < ac.hom_bound_scaled(c.rank, params):
                return f"homogeneous bound fails for {c.gen.rows}"
        return None

    def check_lee_bound():
        for c in codes:
            if c.max_weight("lee") < ac.lee_bound(c.subtype, params):
                return f"lee bound fails for {c.gen.rows}"
        return None

    def check_lee_characterization():
        for c in codes:
            weight_route = c.max_weight("lee") == ac.lee_bound(c.subtype, params)
            structure_route = c.size == ac.hull(c).size
            if weight_route != structure_route:
                return (
                    f"characterization split for {c.gen.rows}: "
                    f"weight {weight_route}, structure {structure_route}"
                )
            if ac.is_optimal(c, "lee") != structure_route:
                return f"is_optimal verdict inconsistent for {c.gen.rows}"
        return None

    def check_families_optimal():
        for a in comps:
            for A in ac.family(a, params):
                if not ac.is_optimal(A.as_code(), "lee"):
                    return f"family member {A.exponents} not optimal"
        return None

    def check_containment():
        spans = {
            A.exponents: oracle.span_elements(params, n, A.module().rows)
            for A in all_anticodes
        }
        for A in all_anticodes:
            for B in all_anticodes:
                if ac.contains(A, B) != (spans[B.exponents] <= spans[A.exponents]):
                    return f"containment disagrees at {A.exponents}, {B.exponents}"
        return None

    def check_hull_minimality():
        for c in codes:
            hl = ac.hull(c)
            for B in all_anticodes:
                includes = all(
                    _vector_in_anticode(params, row, B) for row in c.gen.rows
                )
                if includes != ac.contains(B, hl):
                    return f"hull wrong for {c.gen.rows} against {B.exponents}"
        return None

    def check_anticode_duality():
        for A in all_anticodes:
            if ac.dual_anticode(A).module() != matrices.kernel(A.module()):
                return f"dual anticode differs from kernel at {A.exponents}"
        return None

    def check_subtype_consistency():
        for A in all_anticodes:
            code = A.as_code()
            if code.extended_subtype != A.extended_subtype:
                return f"extended subtype mismatch at {A.exponents}"
            if code.support_subtype != A.extended_subtype:
                return f"support subtype mismatch at {A.exponents}"
        return None

    results = [
        _run("hamming bound holds on the census", check_hamming_bound),
        _run("homogeneous bound holds on the census", check_hom_bound),
    ]
    if p != 2:
        results.extend(
            [
                _run("lee bound holds on the census", check_lee_bound),
                _run("lee optimality routes agree everywhere", check_lee_characterization),
                _run("every family member is lee-optimal", check_families_optimal),
            ]
        )
    results.extend(
        [
            _run("containment agrees with module inclusion", check_containment),
            _run("hull is the minimal covering anticode", check_hull_minimality),
            _run("anticode duality matches kernels", check_anticode_duality),
            _run("anticode subtypes are consistent", check_subtype_consistency),
        ]
    )
    return results


def verify_invariants(p: int, s: int, n: int, cap: int = oracle.DEFAULT_CENSUS_CAP):
    params = ChainRingParams(p, s)
    _census, codes = _census_codes(params, n, cap)
    all_anticodes = oracle.enumerate_anticodes(n, params)
    comps = comp.compositions(s + 1, n)

    def check_tables():
        for c in codes:
            inv.build_invariant_table(c)
        return None

    def check_rank_identity():
        # rk(C cap A) = n - freerk(Cperp + Aperp). This is the sound form of
        # the duality, via rk(M) = n - freerk(Mperp) and (C cap A)perp =
        # Cperp + Aperp. The often-quoted variant K - a_s + freerk(Cperp cap
        # Aperp) is false in general (free rank is not modular); see
        # rank_intersection_identity, which reports both sides of it.
        for c in codes:
            dual = c.dual()
            for A in all_anticodes:
                lhs = Code(matrices.module_intersect(c.gen, A.module())).rank
                rhs = n - Code(
                    matrices.module_sum(dual.gen, ac.dual_anticode(A).module())
                ).free_rank
                if lhs != rhs:
                    return (
                        f"rank duality fails for {c.gen.rows}, {A.exponents}: "
                        f"{lhs} != {rhs}"
                    )
        return None

    def check_pair_counts():
        for a in comps:
            for b in comps:
                if comp.dominance_leq(b, a):
                    inv.pair_count(a, b, n)
        return None

    def check_chain_monotone():
        for c in codes:
            chain = [inv.r_weight(c, r) for r in range(1, c.rank + 1)]
            for d1, d2 in zip(chain, chain[1:]):
                if comp.linear_key(d1) > comp.linear_key(d2):
                    return f"r-weight chain decreases for {c.gen.rows}: {chain}"
        return None

    def check_ghw():
        for c in codes:
            values = [inv.ghw(c, r) for r in range(1, c.rank + 1)]
            brute = [inv.ghw_brute(c, r) for r in range(1, c.rank + 1)]
            if values != brute:
                return f"ghw {values} != brute {brute} for {c.gen.rows}"
            if any(x >= y for x, y in zip(values, values[1:])):
                return f"ghw not strictly increasing for {c.gen.rows}: {values}"
        return None

    def check_free_weights_determined():
        data = [
            (
                [inv.r_weight(c, r) for r in range(1, c.rank + 1)],
                [inv.r_weight_free(c, r) for r in range(1, c.rank + 1)],
            )
            for c in codes
        ]
        for chain_a, free_a in data:
            for chain_b, free_b in data:
                for r in range(min(len(chain_a), len(chain_b))):
                    if chain_a[r] == chain_b[r] and free_a[r] != free_b[r]:
                        return f"equal d_{r + 1} but different free weights"
        return None

    results = [
        _run("invariant tables satisfy both identities", check_tables),
        _run("intersection rank matches dual-sum free rank", check_rank_identity),
        _run("pair counts match double enumeration", check_pair_counts),
        _run("r-weight chains are monotone", check_chain_monotone),
    ]
    if p != 2:
        results.append(_run("ghw matches brute support minima", check_ghw))
    results.append(
        _run("equal r-weights force equal free r-weights", check_free_weights_determined)
    )
    return results


def verify_all(p: int, s: int, n: int, parts: int, total: int) -> list[CheckResult]:
    results = []
    results.extend(verify_lattice(parts, total))
    results.extend(verify_counting(p, s, n))
    results.extend(verify_anticodes(p, s, n))
    results.extend(verify_invariants(p, s, n))
    return results
