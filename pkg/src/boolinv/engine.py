"""Recursive computation of complete orthogonal implicant covers.

The solver picks variable-disjoint small-support factors, solves each by
minterm enumeration, crosses the results, and recurses on the remaining
factors cofactored by every cross term.  When no factor is small enough
it falls back to a Boole-Shannon split.  Output order is canonical, so
runs are reproducible at any parallelism level.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import reduce
from typing import Callable

from .algebra import Anf, BoolSystem, CONTRADICTION, ImplicantSet, Term, vars_of

#: Largest support handled by direct minterm enumeration.
DEFAULT_BOUND = 12


class BoundExceededError(ValueError):
    """Function support too large for enumeration; decompose instead."""

    def __init__(self, size: int, bound: int):
        super().__init__(
            f"support of {size} variables exceeds the enumeration bound {bound}; "
            "use implicants() to decompose the system first"
        )
        self.size = size
        self.bound = bound


@dataclass(frozen=True)
class EngineConfig:
    """Solver knobs.

    ``deterministic`` is accepted for interface stability but output is
    canonically ordered unconditionally; there is no unordered fast path.
    """

    base_bound_m: int = DEFAULT_BOUND
    parallelism: int = 1
    deterministic: bool = True

    def __post_init__(self):
        if self.base_bound_m < 1:
            raise ValueError("base_bound_m must be at least 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")


@dataclass(frozen=True)
class ClusterPlan:
    """Partition of factor indices chosen for one decomposition step.

    ``disjoint_factors`` have pairwise disjoint supports, each within the
    enumeration bound, except when ``split_var`` is set: then no factor
    fit the bound, the smallest is listed alone, and the recursion must
    branch on ``split_var`` instead of enumerating.
    """

    disjoint_factors: tuple[int, ...]
    residual: tuple[int, ...]
    split_var: int | None = None


def impl_for_simple(f: Anf, bound: int = DEFAULT_BOUND) -> ImplicantSet:
    """All satisfying minterms over support(f), ascending binary order.

    The first (lowest-index) support variable is the most significant
    bit of the enumeration, which coincides with the canonical term
    order used everywhere else.
    """
    support = f.support
    k = support.bit_count()
    if k > bound:
        raise BoundExceededError(k, bound)
    vs = vars_of(support)
    monomials = tuple(f.monomials)
    out = []
    for bits in itertools.product((0, 1), repeat=k):
        trues = 0
        for v, b in zip(vs, bits):
            if b:
                trues |= 1 << v
        acc = 0
        for m in monomials:
            if m & trues == m:
                acc ^= 1
        if acc:
            out.append(Term(trues, support & ~trues))
    return ImplicantSet(tuple(out), support)


def select_disjoint_clusters(sys: BoolSystem, cfg: EngineConfig) -> ClusterPlan:
    """Greedy smallest-support-first packing of variable-disjoint factors.

    Factors are scanned by (support size, index).  A factor is admitted
    when it fits the bound and shares no variable with those already
    admitted.  If nothing fits the bound at all, the smallest factor is
    returned alone with a Shannon split variable: the variable occurring
    in the most factors (lowest index on ties).
    """
    if not sys.factors:
        raise ValueError("cannot plan an empty factor list")
    order = sorted(range(len(sys.factors)), key=lambda i: (sys.factors[i].support.bit_count(), i))
    admitted: list[int] = []
    taken = 0
    for i in order:
        s = sys.factors[i].support
        if s.bit_count() <= cfg.base_bound_m and not (s & taken):
            admitted.append(i)
            taken |= s
    if not admitted:
        smallest = order[0]
        counts: dict[int, int] = {}
        for h in sys.factors:
            for v in vars_of(h.support):
                counts[v] = counts.get(v, 0) + 1
        split = min(counts, key=lambda v: (-counts[v], v))
        rest = tuple(i for i in range(len(sys.factors)) if i != smallest)
        return ClusterPlan((smallest,), rest, split_var=split)
    rest = tuple(i for i in range(len(sys.factors)) if i not in set(admitted))
    return ClusterPlan(tuple(admitted), rest)


def _conjunction(factors: tuple[Anf, ...], support: int) -> Anf:
    return reduce(Anf.__mul__, factors, Anf.one(support))


def _branches(sys: BoolSystem, cfg: EngineConfig) -> list[tuple[Term, BoolSystem]]:
    """Orthogonal seed terms with the residual system under each."""
    plan = select_disjoint_clusters(sys, cfg)
    if plan.split_var is not None:
        v = plan.split_var
        return [
            (t, sys.ratio(t)) for t in (Term.of((v, 0)), Term.of((v, 1)))
        ]
    per_factor = [
        impl_for_simple(sys.factors[i], cfg.base_bound_m).terms
        for i in plan.disjoint_factors
    ]
    residual = tuple(sys.factors[i] for i in plan.residual)
    out = []
    for combo in itertools.product(*per_factor):
        t = Term()
        for part in combo:
            t = t.conjoin(part)
            if t is CONTRADICTION:  # unreachable with disjoint supports
                break
        if t is CONTRADICTION:
            continue
        sub = BoolSystem(
            tuple(h.ratio(t) for h in residual), sys.universe & ~t.vars_mask
        )
        out.append((t, sub))
    return out


def _solve(sys: BoolSystem, cfg: EngineConfig) -> list[Term]:
    factors = tuple(h for h in sys.factors if not h.is_one)
    for h in factors:
        if h.is_zero:
            return []
    support = 0
    for h in factors:
        support |= h.support
    if support.bit_count() <= cfg.base_bound_m:
        f = _conjunction(factors, support)
        return list(impl_for_simple(f, cfg.base_bound_m).terms)
    sub_sys = BoolSystem(factors, sys.universe)
    out: list[Term] = []
    for seed, sub in _branches(sub_sys, cfg):
        for s in _solve(sub, cfg):
            ts = seed.conjoin(s)
            if ts is not CONTRADICTION:
                out.append(ts)
    out.sort(key=Term.sort_key)
    return out


def implicants(sys: BoolSystem, cfg: EngineConfig | None = None) -> ImplicantSet:
    """Complete orthogonal implicant cover of the system's solution set.

    Empty result means the system is unsatisfiable.  Terms come back in
    canonical order whatever the parallelism, so equal inputs give
    byte-equal outputs.
    """
    cfg = cfg or EngineConfig()
    factors = tuple(h for h in sys.factors if not h.is_one)
    for h in factors:
        if h.is_zero:
            return ImplicantSet((), sys.universe)
    support = 0
    for h in factors:
        support |= h.support
    if cfg.parallelism > 1 and support.bit_count() > cfg.base_bound_m:
        seq = replace(cfg, parallelism=1)
        branches = _branches(BoolSystem(factors, sys.universe), cfg)
        solve_one: Callable[[tuple[Term, BoolSystem]], list[Term]] = lambda b: [
            t
            for s in _solve(b[1], seq)
            if (t := b[0].conjoin(s)) is not CONTRADICTION
        ]
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            chunks = list(pool.map(solve_one, branches))
        terms = sorted((t for chunk in chunks for t in chunk), key=Term.sort_key)
        return ImplicantSet(tuple(terms), sys.universe)
    return ImplicantSet(tuple(_solve(sys, cfg)), sys.universe)


def compose_product(
    seed: ImplicantSet, sys_g: BoolSystem, cfg: EngineConfig | None = None
) -> ImplicantSet:
    """Implicants of (cover's function) AND (system), built per seed term.

    For each seed term the system is cofactored and solved recursively;
    branches whose cofactored system is unsatisfiable vanish on their
    own.  The result is complete and orthogonal for the conjunction.
    """
    cfg = cfg or EngineConfig()
    universe = seed.universe | sys_g.universe
    out: list[Term] = []
    for t in seed.terms:
        sub = sys_g.ratio(t)
        for s in _solve(sub, cfg):
            ts = t.conjoin(s)
            if ts is not CONTRADICTION:
                out.append(ts)
    out.sort(key=Term.sort_key)
    return ImplicantSet(tuple(out), universe)
