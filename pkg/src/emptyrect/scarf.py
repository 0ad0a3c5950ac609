"""Orthogonal surfaces and their Scarf complexes.

A subset U of an antichain V is a face when the componentwise maximum of U
strictly dominates no generator.  For planar point sets the 4-dimensional
lift ``(x1, x2, M - x1, M - x2)`` plus the four axis suspensions yields a
complex whose face numbers are linear in the rectangle statistics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .geom import as_pointset2, GeometryError, normalize_ranks3
from .rectgraph import exposed_count, rectangle_graph, span_counts


class ScarfError(ValueError):
    pass


class NotAntichain(ScarfError):
    pass


class NotGeneric(ScarfError):
    pass


class NotSuspended(ScarfError):
    pass


class CoordinateOutOfRange(ScarfError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    d: int
    vectors: tuple[tuple[int, ...], ...]
    suspension_indices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        vecs = tuple(tuple(int(c) for c in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "suspension_indices", frozenset(self.suspension_indices))
        if any(len(v) != self.d for v in vecs):
            raise ScarfError(f"all generators must have {self.d} coordinates")
        if any(c < 0 for v in vecs for c in v):
            raise ScarfError("generator coordinates must be nonnegative")

    def __len__(self):
        return len(self.vectors)

    def is_antichain(self) -> bool:
        for a, b in combinations(self.vectors, 2):
            if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
                return False
        return True

    def is_generic(self) -> bool:
        # only positive coordinate values need to be distinct
        for i in range(self.d):
            vals = [v[i] for v in self.vectors if v[i] > 0]
            if len(vals) != len(set(vals)):
                return False
        return True

    def is_suspended(self) -> bool:
        axis_gens = {}
        for k, v in enumerate(self.vectors):
            support = [i for i, c in enumerate(v) if c > 0]
            if len(support) == 1:
                if support[0] in axis_gens:
                    return False
                axis_gens[support[0]] = k
            elif len(support) != self.d:
                return False
        if sorted(axis_gens) != list(range(self.d)):
            return False
        return not self.suspension_indices or set(axis_gens.values()) == set(self.suspension_indices)

    def to_json(self) -> dict:
        return {"d": self.d, "vectors": [list(v) for v in self.vectors],
                "suspensions": sorted(self.suspension_indices)}

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSet":
        return cls(int(data["d"]), tuple(tuple(v) for v in data["vectors"]),
                   frozenset(data.get("suspensions", ())))


def suspend(vectors, M: int | None = None) -> GeneratorSet:
    """Append one generator ``M * e_i`` per axis to strictly positive vectors."""
    vectors = [tuple(int(c) for c in v) for v in vectors]
    d = len(vectors[0]) if vectors else None
    if d is None:
        raise ScarfError("need at least one vector to infer the dimension")
    if M is None:
        M = max(max(v) for v in vectors) + 1
    if any(not (0 < c < M) for v in vectors for c in v):
        raise CoordinateOutOfRange(f"interior generator coordinates must lie in (0, {M})")
    sus = [tuple(M if i == a else 0 for i in range(d)) for a in range(d)]
    n = len(vectors)
    return GeneratorSet(d, tuple(vectors + sus), frozenset(range(n, n + d)))


def axis_suspensions(d: int, M: int) -> GeneratorSet:
    return GeneratorSet(d, tuple(tuple(M if i == a else 0 for i in range(d)) for a in range(d)),
                        frozenset(range(d)))


def join(U) -> tuple[int, ...]:
    U = list(U)
    if not U:
        raise GeometryError("join of an empty subset")
    return tuple(max(c) for c in zip(*U))


def on_surface(u, V) -> bool:
    """No generator is strictly dominated by u."""
    vecs = V.vectors if isinstance(V, GeneratorSet) else V
    return not any(all(a < b for a, b in zip(v, u)) for v in vecs)


def on_surface_ii(u, V) -> bool:
    """Every generator dominated by u shares at least one coordinate with it."""
    vecs = V.vectors if isinstance(V, GeneratorSet) else V
    for v in vecs:
        if all(a <= b for a, b in zip(v, u)) and not any(a == b for a, b in zip(v, u)):
            return False
    return True


@dataclass(frozen=True)
class ScarfComplex:
    d: int
    faces: frozenset

    @property
    def f_vector(self) -> tuple[int, ...]:
        f = [0] * self.d
        for face in self.faces:
            f[len(face) - 1] += 1
        return tuple(f)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector))

    def is_downward_closed(self) -> bool:
        for face in self.faces:
            for k in range(1, len(face)):
                for sub in combinations(face, k):
                    if sub not in self.faces:
                        return False
        return True

    def facets(self) -> list[tuple[int, ...]]:
        maximal = []
        for face in self.faces:
            covered = any(set(face) < set(g) for g in self.faces if len(g) == len(face) + 1)
            if not covered:
                maximal.append(face)
        return sorted(maximal, key=lambda f: (len(f), f))

    def to_json(self) -> dict:
        return {"faces": [list(f) for f in sorted(self.faces, key=lambda f: (len(f), f))],
                "f_vector": list(self.f_vector)}

    def facet_text(self) -> str:
        return "".join(" ".join(map(str, f)) + "\n" for f in self.facets())


def _validate(V: GeneratorSet):
    if not V.is_antichain():
        raise NotAntichain("generators must form an antichain in the dominance order")
    if not V.is_generic():
        raise NotGeneric("two generators share a positive coordinate value")


def scarf_complex(V: GeneratorSet, prune: bool = True) -> ScarfComplex:
    """All subsets of at most d generators whose join lies on the surface.

    With ``prune`` the search only extends faces: once a join strictly
    dominates some generator, every superset's join does too.
    """
    _validate(V)
    vecs = np.array(V.vectors, dtype=np.int64).reshape(len(V), V.d)
    m, d = vecs.shape

    def is_face(u):
        return not (vecs < u).all(axis=1).any()

    faces = []
    if prune:
        stack = [((k,), vecs[k]) for k in range(m - 1, -1, -1)]
        while stack:
            face, u = stack.pop()
            if not is_face(u):
                continue
            faces.append(face)
            if len(face) < d:
                for k in range(m - 1, face[-1], -1):
                    stack.append((face + (k,), np.maximum(u, vecs[k])))
    else:
        for size in range(1, d + 1):
            for U in combinations(range(m), size):
                if is_face(vecs[list(U)].max(axis=0)):
                    faces.append(U)
    return ScarfComplex(d, frozenset(faces))


def lift_to_4d(X, M: int | None = None) -> GeneratorSet:
    """Points map to (x1, x2, M - x1, M - x2); four axis suspensions are appended last."""
    X = as_pointset2(X)
    if M is None:
        M = X.n + 1
    for p in X:
        if not (0 < p[0] < M and 0 < p[1] < M):
            raise CoordinateOutOfRange(f"point {p} not strictly inside (0, {M})^2")
    lifted = [(p[0], p[1], M - p[0], M - p[1]) for p in X]
    sus = [tuple(M if i == a else 0 for i in range(4)) for a in range(4)]
    n = X.n
    return GeneratorSet(4, tuple(lifted + sus), frozenset(range(n, n + 4)))


@dataclass(frozen=True)
class FaceNumbers4:
    f0: int
    f1: int
    f2: int
    f3: int

    @property
    def F(self) -> tuple[int, int, int, int]:
        # the facet spanned by the four suspensions is missing from the complex
        return self.f0, self.f1, self.f2, self.f3 + 1

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.f0, self.f1, self.f2, self.f3


def euler_poincare_check(f: FaceNumbers4) -> bool:
    F0, F1, F2, F3 = f.F
    return F0 - F1 + F2 - F3 == 0 and 2 * F2 == 4 * F3


def predicted_face_numbers(n, span2, span3, span4, exposed) -> FaceNumbers4:
    return FaceNumbers4(
        n + 4,
        span2 + 4 * n + 6,
        span3 + 10 * n - exposed,
        span4 + 6 * n - exposed - 2,
    )


@dataclass(frozen=True)
class FaceNumberCheck:
    enumerated: FaceNumbers4
    predicted: FaceNumbers4
    formulas_ok: tuple[bool, bool, bool, bool]
    euler_ok: bool
    identity1: bool
    identity2: bool

    @property
    def all_ok(self) -> bool:
        return all(self.formulas_ok) and self.euler_ok

    def to_json(self) -> dict:
        return {
            "f": list(self.enumerated.as_tuple()),
            "predicted": list(self.predicted.as_tuple()),
            "F": list(self.enumerated.F),
            "formulas_ok": all(self.formulas_ok),
            "formula_checks": list(self.formulas_ok),
            "euler_ok": self.euler_ok,
            "identity1_from_complex": self.identity1,
            "identity2_from_complex": self.identity2,
        }


def verify_face_numbers(X, M: int | None = None, prune: bool = True) -> FaceNumberCheck:
    """Enumerate the lifted complex and compare with the closed-form face numbers.

    The span identities are also re-derived from the enumerated counts; they
    hold exactly when F3 = F1 - F0 and F2 = 2 (F1 - F0).
    """
    X = as_pointset2(X)
    n = X.n
    if n == 0:
        raise ValueError("need at least one point")
    cx = scarf_complex(lift_to_4d(X, M), prune=prune)
    f = FaceNumbers4(*cx.f_vector)
    s2, s3, s4 = span_counts(X, rectangle_graph(X))
    ex = exposed_count(X)
    pred = predicted_face_numbers(n, s2, s3, s4, ex)
    # span numbers read back off the enumerated complex
    c2 = f.f1 - 4 * n - 6
    c3 = f.f2 - 10 * n + ex
    c4 = f.f3 - 6 * n + ex + 2
    id1 = c2 - c4 + ex == 3 * (n - 1)
    id2 = 2 * c2 - c3 + ex == 4 * (n - 1)
    return FaceNumberCheck(
        enumerated=f,
        predicted=pred,
        formulas_ok=tuple(a == b for a, b in zip(f.as_tuple(), pred.as_tuple())),
        euler_ok=euler_poincare_check(f),
        identity1=id1,
        identity2=id2,
    )


def scarf_complex_3d(V: GeneratorSet, prune: bool = True) -> ScarfComplex:
    if V.d != 3:
        raise ScarfError("expected 3-dimensional generators")
    if not V.is_suspended():
        raise NotSuspended("need one generator per positive axis, all others strictly positive")
    return scarf_complex(V, prune=prune)


def random_antichain3(n: int, rng: np.random.Generator):
    """n generic rank-valued points on a plane x + y + z = const (an antichain)."""
    pts = rng.random((n, 3))
    pts = pts / pts.sum(axis=1, keepdims=True)
    return normalize_ranks3(pts.tolist()).points
