"""Boolean maps and the graph-system analyses built on the implicant engine.

A map F: F2^n -> F2^m is held as m coordinate polynomials over input
variables 0..n-1.  Output variables take the ids n..n+m-1, appended
after the inputs.  The graph system h_i = f_i + y_i + 1 is satisfied
exactly by the pairs (x, F(x)); every cover term factors into an X part
and a Y part, and the Y parts decide injectivity, image and the
complement of the image without enumerating inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .algebra import Anf, Assignment, BoolSystem, ImplicantSet, Term, mask_of
from .engine import EngineConfig, implicants

#: Explicit complement-of-image points are materialized only below this.
DEFAULT_MAX_POINTS = 1 << 20


class NonSquareMapError(ValueError):
    """Square-map analysis applied to a map with m_out != n_in."""

    def __init__(self, n_in: int, m_out: int):
        super().__init__(
            f"map has {n_in} inputs and {m_out} outputs; "
            "use is_one_to_one_general for non-square maps"
        )


@dataclass(frozen=True)
class BoolMap:
    """Tuple of coordinate functions over inputs 0..n_in-1."""

    coords: tuple[Anf, ...]
    n_in: int

    def __post_init__(self):
        x_mask = mask_of(range(self.n_in))
        normalized = tuple(f.with_universe(x_mask) for f in self.coords)
        object.__setattr__(self, "coords", normalized)

    @classmethod
    def of(cls, coords, n_in: int) -> "BoolMap":
        return cls(tuple(coords), n_in)

    @property
    def m_out(self) -> int:
        return len(self.coords)

    @property
    def x_universe(self) -> int:
        return mask_of(range(self.n_in))

    @property
    def y_universe(self) -> int:
        return mask_of(range(self.n_in, self.n_in + self.m_out))

    def y_var(self, j: int) -> int:
        return self.n_in + j

    def evaluate(self, a: Assignment) -> int:
        """Output packed with coordinate j at bit j."""
        y = 0
        for j, f in enumerate(self.coords):
            y |= f.evaluate(a) << j
        return y


@dataclass(frozen=True)
class GraphImplicant:
    """Cover term of a graph system, factored into input and output parts."""

    r: Term
    s: Term


@dataclass(frozen=True)
class Verdict:
    """Injectivity decision with a colliding input pair when negative."""

    one_to_one: bool
    witness: tuple[Assignment, Assignment] | None
    y_minterm_count: int | None

    def __post_init__(self):
        if self.one_to_one == (self.witness is not None):
            raise ValueError("witness must be present exactly when not one-to-one")


class Uniqueness(Enum):
    NONE = "none"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class UniqueSolutionResult:
    status: Uniqueness
    assignment: Assignment | None = None

    def __post_init__(self):
        if (self.status is Uniqueness.UNIQUE) == (self.assignment is None):
            raise ValueError("assignment must accompany UNIQUE and only UNIQUE")


@dataclass(frozen=True)
class ComplementResult:
    """Outputs with no preimage: explicit points plus a symbolic system.

    ``points`` is None when the output space exceeds the enumeration
    cap; ``system`` (factors s_i' = 1 over the Y variables) and ``size``
    are always available.
    """

    size: int
    system: BoolSystem
    points: tuple[Assignment, ...] | None

    @property
    def is_empty(self) -> bool:
        return self.size == 0


def build_graph_system(F: BoolMap) -> BoolSystem:
    """Factors h_i = f_i + y_i + 1, each 1 exactly when y_i = f_i(x)."""
    uni = F.x_universe | F.y_universe
    factors = tuple(
        f.with_universe(uni) ^ Anf.variable(F.y_var(j), uni) ^ Anf.one(uni)
        for j, f in enumerate(F.coords)
    )
    return BoolSystem(factors, uni)


def split_xy(t: Term, F: BoolMap) -> GraphImplicant:
    """Partition a term's literals into input and output parts."""
    x_mask, y_mask = F.x_universe, F.y_universe
    if t.vars_mask & ~(x_mask | y_mask):
        raise ValueError("term uses a variable outside the map's universe")
    return GraphImplicant(
        r=Term(t.pos & x_mask, t.neg & x_mask),
        s=Term(t.pos & y_mask, t.neg & y_mask),
    )


def graph_implicants(
    F: BoolMap, cfg: EngineConfig | None = None
) -> tuple[list[GraphImplicant], ImplicantSet]:
    """Cover of the graph system, factored; s parts are full Y-minterms.

    A free output variable in a sound cover term is impossible: every
    factor depends linearly on its y_i, so the cofactor could not be
    constant 1.  The guard stays as a cheap internal consistency check.
    """
    cover = implicants(build_graph_system(F), cfg)
    out = []
    for t in cover.terms:
        gi = split_xy(t, F)
        if not gi.s.fixes(F.y_universe):
            raise RuntimeError(f"graph cover term {t} leaves an output variable free")
        out.append(gi)
    return out, cover


def _packed_y(s: Term, F: BoolMap) -> int:
    return s.pos >> F.n_in


def _collision_witness(
    gis: list[GraphImplicant], F: BoolMap
) -> tuple[Assignment, Assignment] | None:
    """Two distinct inputs with equal output, read off the factored cover.

    Either two terms share one output minterm (their input cubes are
    disjoint by orthogonality), or some input cube has a free variable
    and collides within itself.
    """
    x_mask = F.x_universe
    first_by_y: dict[int, GraphImplicant] = {}
    for gi in gis:
        y = _packed_y(gi.s, F)
        if y in first_by_y:
            other = first_by_y[y]
            return (
                Assignment(x_mask, other.r.pos),
                Assignment(x_mask, gi.r.pos),
            )
        first_by_y[y] = gi
    for gi in gis:
        free = x_mask & ~gi.r.vars_mask
        if free:
            low = free & -free
            return (
                Assignment(x_mask, gi.r.pos),
                Assignment(x_mask, gi.r.pos | low),
            )
    return None


def _one_to_one_verdict(F: BoolMap, cfg: EngineConfig | None) -> Verdict:
    gis, _ = graph_implicants(F, cfg)
    count = len({_packed_y(gi.s, F) for gi in gis})
    if count == 1 << F.n_in:
        return Verdict(True, None, count)
    witness = _collision_witness(gis, F)
    if witness is None:
        raise RuntimeError("non-injective map without extractable witness")
    return Verdict(False, witness, count)


def is_invertible_square(F: BoolMap, cfg: EngineConfig | None = None) -> Verdict:
    """Bijectivity of a square map: all 2^n output minterms must appear."""
    if F.m_out != F.n_in:
        raise NonSquareMapError(F.n_in, F.m_out)
    return _one_to_one_verdict(F, cfg)


def is_one_to_one_general(F: BoolMap, cfg: EngineConfig | None = None) -> Verdict:
    """Injectivity for any arity: 2^n distinct output minterms required.

    With m < n the count cannot reach 2^n, so the verdict is negative a
    priori; the cover is still built to extract the witness pair and
    the distinct-minterm count.
    """
    return _one_to_one_verdict(F, cfg)


def _image_complement(
    F: BoolMap, cfg: EngineConfig | None, max_points: int
) -> ComplementResult:
    gis, _ = graph_implicants(F, cfg)
    distinct = sorted(
        {gi.s for gi in gis}, key=Term.sort_key
    )
    image = {_packed_y(s, F) for s in distinct}
    y_mask = F.y_universe
    m = F.m_out
    size = (1 << m) - len(image)
    factors = tuple(~s.to_anf(y_mask) for s in distinct)
    system = BoolSystem(factors, y_mask)
    points: tuple[Assignment, ...] | None = None
    if (1 << m) <= max_points:
        acc = []
        for bits in itertools.product((0, 1), repeat=m):
            packed = 0
            for j, b in enumerate(bits):
                if b:
                    packed |= 1 << j
            if packed not in image:
                trues = packed << F.n_in
                acc.append(Assignment(y_mask, trues))
        points = tuple(acc)
    return ComplementResult(size=size, system=system, points=points)


def goe(
    F: BoolMap,
    cfg: EngineConfig | None = None,
    max_points: int = DEFAULT_MAX_POINTS,
) -> ComplementResult:
    """Outputs of a square map with no preimage; empty iff invertible."""
    if F.m_out != F.n_in:
        raise NonSquareMapError(F.n_in, F.m_out)
    return _image_complement(F, cfg, max_points)


def coi(
    F: BoolMap,
    cfg: EngineConfig | None = None,
    max_points: int = DEFAULT_MAX_POINTS,
) -> ComplementResult:
    """Complement of the image for m >= n; coincides with goe when m = n."""
    if F.m_out < F.n_in:
        raise ValueError(
            f"complement-of-image analysis expects at least {F.n_in} outputs, "
            f"got {F.m_out}"
        )
    return _image_complement(F, cfg, max_points)


def unique_solution(
    sys: BoolSystem, cfg: EngineConfig | None = None
) -> UniqueSolutionResult:
    """Classify a system as unsolvable, uniquely solvable, or neither.

    Unique solvability is equivalent to the cover being one single term
    that fixes every universe variable.
    """
    cover = implicants(sys, cfg)
    if not cover.terms:
        return UniqueSolutionResult(Uniqueness.NONE)
    if len(cover.terms) == 1 and cover.terms[0].fixes(sys.universe):
        return UniqueSolutionResult(
            Uniqueness.UNIQUE, cover.terms[0].assignment(sys.universe)
        )
    return UniqueSolutionResult(Uniqueness.MULTIPLE)
