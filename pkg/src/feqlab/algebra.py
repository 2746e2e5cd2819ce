"""Finite semigroups as dense Cayley tables, plus involutive morphisms.

Elements are indices 0..n-1 throughout; labels are display-only. All
structures are validated on construction and immutable afterwards, so they
are safe to share across threads. The associativity check is the naive
triple loop (vectorized); n up to a few hundred is the supported scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

AUTOMORPHISM = "automorphism"
ANTI_AUTOMORPHISM = "anti-automorphism"
MORPHISM_KINDS = (AUTOMORPHISM, ANTI_AUTOMORPHISM)


class EntryOutOfRange(ValidationError):
    def __init__(self, x: int, y: int, value: int, n: int):
        self.x, self.y, self.value = x, y, value
        super().__init__(f"table[{x}][{y}] = {value} is outside [0, {n})")


class NotAssociative(ValidationError):
    def __init__(self, x: int, y: int, z: int):
        self.triple = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) at (x, y, z) = ({x}, {y}, {z})")


class NotBijective(ValidationError):
    pass


class NotInvolutive(ValidationError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"map[map[{x}]] != {x}")


class NotMorphism(ValidationError):
    def __init__(self, x: int, y: int, kind: str):
        self.pair = (x, y)
        super().__init__(f"{kind} property fails at (x, y) = ({x}, {y})")


class UnknownCatalogName(ValidationError):
    pass


class BadParams(ValidationError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A verified finite semigroup on elements 0..n-1."""

    n: int
    table: np.ndarray  # shape (n, n), int32, read-only; table[x, y] = x*y
    labels: tuple[str, ...]
    identity: int | None
    center: frozenset[int]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def label(self, x: int) -> str:
        return self.labels[x]


@dataclass(frozen=True, eq=False)
class InvolutiveMorphism:
    """A verified involutive automorphism or anti-automorphism."""

    map: np.ndarray  # shape (n,), int32, read-only
    kind: str

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.map, np.arange(len(self.map))))


def _first_mismatch(a: np.ndarray, b: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically first index where a and b differ, or None."""
    bad = np.argwhere(a != b)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def _compute_center(table: np.ndarray) -> frozenset[int]:
    commutes = (table == table.T).all(axis=1)
    return frozenset(int(z) for z in np.nonzero(commutes)[0])


def _compute_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def validate_semigroup(n: int, table, labels=None) -> FiniteSemigroup:
    """Validate a Cayley table and return the semigroup with identity and
    center populated.

    Raises EntryOutOfRange or NotAssociative with the lexicographically
    first violation.
    """
    tbl = np.asarray(table)
    if n < 1:
        raise ValidationError(f"element count must be >= 1, got {n}")
    if tbl.shape != (n, n):
        raise ValidationError(f"table has shape {tbl.shape}, expected ({n}, {n})")
    if not np.issubdtype(tbl.dtype, np.integer):
        raise ValidationError("table entries must be integers")
    if tbl.min() < 0 or tbl.max() >= n:
        bad = np.argwhere((tbl < 0) | (tbl >= n))[0]
        x, y = int(bad[0]), int(bad[1])
        raise EntryOutOfRange(x, y, int(tbl[x, y]), n)

    tbl = np.ascontiguousarray(tbl, dtype=np.int32)
    # (x*y)*z versus x*(y*z), scanned row by row so the first violating
    # triple is lexicographic in (x, y, z).
    for x in range(n):
        lhs = tbl[tbl[x], :]   # lhs[y, z] = (x*y)*z
        rhs = tbl[x, tbl]      # rhs[y, z] = x*(y*z)
        bad = _first_mismatch(lhs, rhs)
        if bad is not None:
            raise NotAssociative(x, bad[0], bad[1])

    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValidationError(f"{len(labels)} labels for {n} elements")

    tbl.setflags(write=False)
    return FiniteSemigroup(
        n=n,
        table=tbl,
        labels=labels,
        identity=_compute_identity(tbl),
        center=_compute_center(tbl),
    )


def center(S: FiniteSemigroup) -> frozenset[int]:
    """Elements commuting with every element of S."""
    return _compute_center(S.table)


def find_identity(S: FiniteSemigroup) -> int | None:
    """The unique two-sided identity of S, if one exists."""
    return _compute_identity(S.table)


def validate_morphism(S: FiniteSemigroup, map_, kind: str) -> InvolutiveMorphism:
    """Validate an involutive morphism of the declared kind on S."""
    if kind not in MORPHISM_KINDS:
        raise ValidationError(f"kind must be one of {MORPHISM_KINDS}, got {kind!r}")
    m = np.asarray(map_)
    if m.shape != (S.n,):
        raise ValidationError(f"map has shape {m.shape}, expected ({S.n},)")
    m = np.ascontiguousarray(m, dtype=np.int32)
    if m.min() < 0 or m.max() >= S.n or len(np.unique(m)) != S.n:
        raise NotBijective("map is not a bijection of [0, n)")
    invol = m[m] != np.arange(S.n)
    if invol.any():
        raise NotInvolutive(int(np.nonzero(invol)[0][0]))

    lhs = m[S.table]                       # sigma(x*y)
    rhs = S.table[np.ix_(m, m)]            # sigma(x)*sigma(y)
    if kind == ANTI_AUTOMORPHISM:
        rhs = rhs.T                        # sigma(y)*sigma(x)
    bad = _first_mismatch(lhs, rhs)
    if bad is not None:
        raise NotMorphism(bad[0], bad[1], kind)

    m.setflags(write=False)
    return InvolutiveMorphism(map=m, kind=kind)


def identity_morphism(S: FiniteSemigroup) -> InvolutiveMorphism:
    return validate_morphism(S, np.arange(S.n), AUTOMORPHISM)


# ---------------------------------------------------------------------------
# standard catalog


def _cyclic(n: int) -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    S = validate_semigroup(n, table)
    morphisms = {"id": identity_morphism(S)}
    if n >= 3:
        morphisms["neg"] = validate_morphism(S, (-idx) % n, AUTOMORPHISM)
    return S, morphisms


def _product(a: int, b: int) -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    n = a * b
    idx = np.arange(n)
    i, j = idx // b, idx % b
    table = ((i[:, None] + i[None, :]) % a) * b + (j[:, None] + j[None, :]) % b
    labels = tuple(f"({u},{v})" for u, v in zip(i, j))
    S = validate_semigroup(n, table, labels)
    morphisms = {"id": identity_morphism(S)}
    candidates = {
        "neg": ((-i) % a) * b + (-j) % b,
        "neg1": ((-i) % a) * b + j,
        "neg2": i * b + (-j) % b,
    }
    for name, m in candidates.items():
        if not np.array_equal(m, idx):
            morphisms[name] = validate_morphism(S, m, AUTOMORPHISM)
    return S, morphisms


_S3_PERMS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
_S3_LABELS = ("e", "(01)", "(02)", "(12)", "(012)", "(021)")


def _sym3() -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    def compose(p, q):  # apply q first
        return tuple(p[q[i]] for i in range(3))

    index = {p: k for k, p in enumerate(_S3_PERMS)}
    table = [[index[compose(p, q)] for q in _S3_PERMS] for p in _S3_PERMS]
    S = validate_semigroup(6, table, _S3_LABELS)

    def invert(p):
        out = [0, 0, 0]
        for i in range(3):
            out[p[i]] = i
        return tuple(out)

    t = _S3_PERMS[1]
    inv_map = [index[invert(p)] for p in _S3_PERMS]
    conj_map = [index[compose(t, compose(p, t))] for p in _S3_PERMS]
    morphisms = {
        "id": identity_morphism(S),
        "inv": validate_morphism(S, inv_map, ANTI_AUTOMORPHISM),
        "conj": validate_morphism(S, conj_map, AUTOMORPHISM),
    }
    return S, morphisms


def _semilattice_chain(k: int) -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    idx = np.arange(k)
    table = np.minimum(idx[:, None], idx[None, :])
    S = validate_semigroup(k, table)
    return S, {"id": identity_morphism(S)}


def _leftzero(n: int) -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    table = np.repeat(np.arange(n)[:, None], n, axis=1)
    S = validate_semigroup(n, table)
    return S, {"id": identity_morphism(S)}


CATALOG_NAMES = ("cyclic", "product", "sym3", "semilattice_chain", "leftzero")


def build_standard(name: str, params=()) -> tuple[FiniteSemigroup, dict[str, InvolutiveMorphism]]:
    """Build a catalog structure together with its standard involutive
    morphisms (the identity map always; negation for cyclic groups and
    products; inversion and conjugation for sym3).
    """
    params = tuple(int(p) for p in params)
    if name == "cyclic":
        if len(params) != 1 or params[0] < 1:
            raise BadParams(f"cyclic expects one positive integer, got {params}")
        return _cyclic(params[0])
    if name == "product":
        if len(params) != 2 or min(params) < 1:
            raise BadParams(f"product expects two positive integers, got {params}")
        return _product(*params)
    if name == "sym3":
        if params:
            raise BadParams("sym3 takes no parameters")
        return _sym3()
    if name == "semilattice_chain":
        if len(params) != 1 or params[0] < 1:
            raise BadParams(f"semilattice_chain expects one positive integer, got {params}")
        return _semilattice_chain(params[0])
    if name == "leftzero":
        if len(params) != 1 or params[0] < 1:
            raise BadParams(f"leftzero expects one positive integer, got {params}")
        return _leftzero(params[0])
    raise UnknownCatalogName(f"unknown catalog name {name!r}; known: {CATALOG_NAMES}")


# ---------------------------------------------------------------------------
# JSON wire formats


def semigroup_to_json(S: FiniteSemigroup) -> dict:
    return {"n": S.n, "table": S.table.tolist(), "labels": list(S.labels)}


def semigroup_from_json(obj: dict) -> FiniteSemigroup:
    try:
        n = obj["n"]
        table = obj["table"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"semigroup JSON needs 'n' and 'table': {exc}") from exc
    return validate_semigroup(int(n), table, obj.get("labels"))


def morphism_to_json(sigma: InvolutiveMorphism) -> dict:
    return {"map": sigma.map.tolist(), "kind": sigma.kind}


def morphism_from_json(S: FiniteSemigroup, obj: dict) -> InvolutiveMorphism:
    try:
        map_ = obj["map"]
        kind = obj["kind"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"morphism JSON needs 'map' and 'kind': {exc}") from exc
    return validate_morphism(S, map_, kind)
