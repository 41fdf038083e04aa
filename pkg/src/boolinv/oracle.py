"""Exhaustive ground truth for small instances.

Truth tables are single big integers: bit ``i`` holds the function value
at point ``i``, where bit ``k`` of the point index is the value of the
k-th smallest universe variable.  Everything here is brute force by
design; it exists to validate the symbolic machinery, so it shares no
logic with it beyond ANF evaluation semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator, Sequence

from .algebra import Anf, Assignment, BoolSystem, ImplicantSet, Term, vars_of

if TYPE_CHECKING:  # pragma: no cover
    from .maps import BoolMap


@lru_cache(maxsize=None)
def _var_pattern(k: int, n: int) -> int:
    """Truth table of the k-th variable over 2**n points."""
    half = 1 << k
    period = half << 1
    block = ((1 << half) - 1) << half
    reps = (1 << n) // period
    return block * (((1 << (reps * period)) - 1) // ((1 << period) - 1))


def _point_trues(universe: int, index: int) -> int:
    trues = 0
    for k, v in enumerate(vars_of(universe)):
        if (index >> k) & 1:
            trues |= 1 << v
    return trues


def point_assignment(universe: int, index: int) -> Assignment:
    """Decode a truth-table point index into an assignment."""
    return Assignment(universe, _point_trues(universe, index))


@dataclass(frozen=True)
class TruthTable:
    """Dense 2**n-entry table packed into one integer."""

    bits: int
    universe: int

    @property
    def size(self) -> int:
        return 1 << self.universe.bit_count()

    @classmethod
    def from_anf(cls, f: Anf) -> "TruthTable":
        n = f.universe.bit_count()
        pos = {v: k for k, v in enumerate(vars_of(f.universe))}
        full = (1 << (1 << n)) - 1
        acc = 0
        for m in f.monomials:
            tt = full
            for v in vars_of(m):
                tt &= _var_pattern(pos[v], n)
            acc ^= tt
        return cls(acc, f.universe)

    @classmethod
    def from_term(cls, t: Term, universe: int) -> "TruthTable":
        n = universe.bit_count()
        pos = {v: k for k, v in enumerate(vars_of(universe))}
        full = (1 << (1 << n)) - 1
        tt = full
        for v in vars_of(t.pos):
            tt &= _var_pattern(pos[v], n)
        for v in vars_of(t.neg):
            tt &= full ^ _var_pattern(pos[v], n)
        return cls(tt, universe)

    @classmethod
    def from_system(cls, sys: BoolSystem) -> "TruthTable":
        """Conjunction of all factors: 1 exactly on the solution set."""
        n = sys.universe.bit_count()
        acc = (1 << (1 << n)) - 1
        for h in sys.factors:
            acc &= cls.from_anf(h.with_universe(sys.universe)).bits
        return cls(acc, sys.universe)

    def to_anf(self) -> Anf:
        """Invert the evaluation map (binary Moebius transform)."""
        n = self.universe.bit_count()
        size = 1 << n
        a = [(self.bits >> i) & 1 for i in range(size)]
        for k in range(n):
            step = 1 << k
            for i in range(size):
                if i & step:
                    a[i] ^= a[i ^ step]
        vs = vars_of(self.universe)
        monomials = []
        for i in range(size):
            if a[i]:
                m = 0
                for k in range(n):
                    if (i >> k) & 1:
                        m |= 1 << vs[k]
                monomials.append(m)
        return Anf(frozenset(monomials), self.universe)

    def count(self) -> int:
        return self.bits.bit_count()

    def points(self) -> Iterator[int]:
        """Indices of set entries, ascending."""
        bits = self.bits
        i = 0
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            yield i
            bits ^= low


def _byte_view(bits: int, n_points: int) -> bytes:
    return bits.to_bytes((n_points + 7) // 8, "little")


def _bit_at(view: bytes, i: int) -> int:
    return (view[i >> 3] >> (i & 7)) & 1


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of exhaustively auditing an implicant cover."""

    sound: bool
    orthogonal: bool
    complete: bool
    unsound_term: tuple[int, Assignment] | None = None
    overlap: tuple[int, int, Assignment] | None = None
    missing_point: Assignment | None = None

    @property
    def ok(self) -> bool:
        return self.sound and self.orthogonal and self.complete


def validate_implicant_set(
    cover: ImplicantSet, sys: BoolSystem, cap: int = 24
) -> ValidationReport:
    """Check soundness, pairwise orthogonality and completeness by truth table.

    Soundness: every term lies inside the solution set.  Orthogonality:
    no two terms share a point.  Completeness: the union hits every
    solution.  The first counterexample of each kind is decoded.
    """
    if cover.universe != sys.universe:
        raise ValueError("cover and system universes differ")
    n = sys.universe.bit_count()
    if n > cap:
        raise ValueError(f"{n} variables exceeds the exhaustive cap {cap}")
    sol = TruthTable.from_system(sys).bits
    sound, orthogonal = True, True
    unsound_term = overlap = None
    acc = 0
    union = 0
    for idx, t in enumerate(cover.terms):
        tt = TruthTable.from_term(t, sys.universe).bits
        if sound and tt & ~sol:
            bad = (tt & ~sol) & -(tt & ~sol)
            sound = False
            unsound_term = (idx, point_assignment(sys.universe, bad.bit_length() - 1))
        if orthogonal and tt & acc:
            shared = (tt & acc) & -(tt & acc)
            point = shared.bit_length() - 1
            prev = next(
                j
                for j, s in enumerate(cover.terms[:idx])
                if _term_hits(s, sys.universe, point)
            )
            orthogonal = False
            overlap = (prev, idx, point_assignment(sys.universe, point))
        acc |= tt
        union |= tt
    missing = sol & ~union
    complete = missing == 0
    missing_point = None
    if not complete:
        low = missing & -missing
        missing_point = point_assignment(sys.universe, low.bit_length() - 1)
    return ValidationReport(sound, orthogonal, complete, unsound_term, overlap, missing_point)


def _term_hits(t: Term, universe: int, point: int) -> bool:
    return t.satisfies(point_assignment(universe, point))


def solution_count(sys: BoolSystem, cap: int = 24) -> int:
    n = sys.universe.bit_count()
    if n > cap:
        raise ValueError(f"{n} variables exceeds the exhaustive cap {cap}")
    return TruthTable.from_system(sys).count()


def brute_solutions(sys: BoolSystem, cap: int = 24) -> list[Assignment]:
    """All satisfying points in ascending point-index order."""
    n = sys.universe.bit_count()
    if n > cap:
        raise ValueError(f"{n} variables exceeds the exhaustive cap {cap}")
    tt = TruthTable.from_system(sys)
    return [point_assignment(sys.universe, i) for i in tt.points()]


def _coord_views(F: "BoolMap") -> list[bytes]:
    n_points = 1 << F.n_in
    return [
        _byte_view(TruthTable.from_anf(f).bits, n_points) for f in F.coords
    ]


def brute_image(F: "BoolMap", cap: int = 16) -> frozenset[int]:
    """Every attained output, packed with coordinate j at bit j."""
    if F.n_in > cap:
        raise ValueError(f"{F.n_in} inputs exceeds the exhaustive cap {cap}")
    views = _coord_views(F)
    out = set()
    for x in range(1 << F.n_in):
        y = 0
        for j, view in enumerate(views):
            y |= _bit_at(view, x) << j
        out.add(y)
    return frozenset(out)


def brute_image_count(F: "BoolMap", cap: int = 24) -> int:
    """Distinct outputs; bitset-backed so it scales past set overhead."""
    if F.n_in > cap:
        raise ValueError(f"{F.n_in} inputs exceeds the exhaustive cap {cap}")
    views = _coord_views(F)
    m = len(F.coords)
    if m > 24:
        return len(brute_image(F, cap=cap))
    seen = bytearray(1 << max(m - 3, 0))
    count = 0
    for x in range(1 << F.n_in):
        y = 0
        for j, view in enumerate(views):
            y |= _bit_at(view, x) << j
        byte, bit = y >> 3, 1 << (y & 7)
        if not seen[byte] & bit:
            seen[byte] |= bit
            count += 1
    return count


def brute_injective(
    F: "BoolMap", cap: int = 16
) -> tuple[bool, tuple[Assignment, Assignment] | None]:
    """Scan for a collision; the witness pair is in input-scan order."""
    if F.n_in > cap:
        raise ValueError(f"{F.n_in} inputs exceeds the exhaustive cap {cap}")
    views = _coord_views(F)
    universe = (1 << F.n_in) - 1
    seen: dict[int, int] = {}
    for x in range(1 << F.n_in):
        y = 0
        for j, view in enumerate(views):
            y |= _bit_at(view, x) << j
        if y in seen:
            return False, (
                point_assignment(universe, seen[y]),
                point_assignment(universe, x),
            )
        seen[y] = x
    return True, None
