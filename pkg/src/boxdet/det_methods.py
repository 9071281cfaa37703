"""Four independent determinants for box products of paths, plus the
algebraic identity suite that justifies them.

The routes, for the grid graph P_n box P_m:

* direct: assemble the nm x nm adjacency matrix, Bareiss-eliminate.
* block: det(q_n(-B)) where B is the m-path adjacency matrix and q_n the
  n-path characteristic polynomial, using the block view of the product's
  adjacency matrix over the ring generated by B.
* resultant: the product of q_m over the roots of q_n, computed with no
  root ever materialized as (-1)**(n*m) * Res(q_n, q_m), using
  lc(q_n) = (-1)**n.
* closed: the gcd rule, 0 when gcd(n+1, m+1) > 1, else (-1)**(n*m/2).

All "evaluate at every root of q_k" identities are checked as exact
divisibility by q_k, which is stronger than any pointwise floating check and
needs no eigenvalue formula.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .exact_linalg import bareiss_det, matpoly_eval
from .graphs import adjacency_matrix, box_product, path
from .polynomials import IntPoly, path_charpoly, pseudo_rem, resultant

DEFAULT_DIRECT_CEILING = 400
DEFAULT_BLOCK_CEILING = 60

METHOD_NAMES = ("direct", "block", "resultant", "closed_form")

IDENTITY_NAMES = (
    "splitting",
    "shift",
    "annihilation",
    "power",
    "product_n_plus_1",
    "symmetry",
)


class SizeLimitError(ValueError):
    """A method was asked to run beyond its configured size ceiling."""


def _require_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")


@dataclass(frozen=True)
class DetReport:
    """Results of every determinant method that ran for one (n, m) pair.

    ``direct``, ``block`` and ``resultant`` are None when skipped (size
    ceiling); the closed form always runs.  ``agree`` holds exactly when all
    computed values coincide.  Elapsed times are wall-clock seconds.
    """

    n: int
    m: int
    direct: int | None
    block: int | None
    resultant: int | None
    closed_form: int
    agree: bool
    elapsed: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.closed_form not in (-1, 0, 1):
            raise ValueError(f"closed form value out of range: {self.closed_form}")
        if self.agree != (len(set(self.results().values())) <= 1):
            raise ValueError("agree flag contradicts the recorded results")

    def results(self) -> dict[str, int]:
        """Computed values only, keyed by method name."""
        values = {
            "direct": self.direct,
            "block": self.block,
            "resultant": self.resultant,
            "closed_form": self.closed_form,
        }
        return {k: v for k, v in values.items() if v is not None}

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "results": {
                "direct": None if self.direct is None else str(self.direct),
                "block": None if self.block is None else str(self.block),
                "resultant": None if self.resultant is None else str(self.resultant),
                "closed_form": str(self.closed_form),
            },
            "agree": self.agree,
            "elapsed_ms": {k: v * 1000.0 for k, v in self.elapsed.items()},
        }


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check; witness carries the nonzero residue
    (a polynomial or an integer) exactly when the check failed."""

    identity: str
    params: dict[str, int]
    passed: bool
    witness: IntPoly | int | None = None

    def __post_init__(self) -> None:
        if self.identity not in IDENTITY_NAMES:
            raise ValueError(f"unknown identity name: {self.identity}")
        if self.passed == (self.witness is not None):
            raise ValueError("witness must be present exactly when the check failed")


def det_direct(n: int, m: int, ceiling: int = DEFAULT_DIRECT_CEILING) -> int:
    """Bareiss determinant of the literally assembled grid adjacency matrix."""
    _require_positive(n=n, m=m)
    if n * m > ceiling:
        raise SizeLimitError(
            f"matrix size {n * m} exceeds the direct-method ceiling of {ceiling}"
        )
    return bareiss_det(adjacency_matrix(box_product(path(n), path(m))))


def det_block(n: int, m: int) -> int:
    """Block reduction: determinant of q_n evaluated at minus the m-path
    adjacency matrix, an m x m determinant after n-1 matrix products."""
    _require_positive(n=n, m=m)
    b = adjacency_matrix(path(m))
    return bareiss_det(matpoly_eval(path_charpoly(n), -b))


def det_resultant(n: int, m: int) -> int:
    """Root product via the resultant, no roots computed.

    Res(q_n, q_m) = lc(q_n)**m * prod q_m(root) and lc(q_n) = (-1)**n, so
    the determinant (the bare root product) is (-1)**(n*m) * Res(q_n, q_m).
    """
    _require_positive(n=n, m=m)
    res = resultant(path_charpoly(n), path_charpoly(m))
    return -res if (n * m) % 2 else res


def det_closed_form(n: int, m: int) -> int:
    """The gcd rule: 0 unless gcd(n+1, m+1) = 1, in which case (-1)**(n*m/2).

    In the coprime branch n*m is provably even (n+1 and m+1 cannot both be
    even); the explicit check below guards this implementation's gcd, not
    the mathematics, and fails loudly if it ever trips.
    """
    _require_positive(n=n, m=m)
    if math.gcd(n + 1, m + 1) != 1:
        return 0
    if (n * m) % 2:
        raise RuntimeError(
            f"gcd({n + 1}, {m + 1}) reported coprime but {n}*{m} is odd; "
            "the gcd implementation is broken"
        )
    return -1 if (n * m // 2) % 2 else 1


def verify_all(
    n: int,
    m: int,
    ceiling: int = DEFAULT_DIRECT_CEILING,
    *,
    block_ceiling: int = DEFAULT_BLOCK_CEILING,
    methods: frozenset[str] | set[str] = frozenset(METHOD_NAMES),
) -> DetReport:
    """Run every requested method whose cost fits its ceiling and compare.

    The closed form always runs (it is O(log) arithmetic and anchors the
    report).  Methods priced out by their ceiling are recorded as absent
    rather than raising.
    """
    _require_positive(n=n, m=m)
    unknown = set(methods) - set(METHOD_NAMES)
    if unknown:
        raise ValueError(f"unknown methods: {sorted(unknown)}")

    values: dict[str, int | None] = {"direct": None, "block": None, "resultant": None}
    elapsed: dict[str, float] = {}

    def timed(name: str, fn) -> None:
        start = time.perf_counter()
        values[name] = fn()
        elapsed[name] = time.perf_counter() - start

    if "direct" in methods and n * m <= ceiling:
        timed("direct", lambda: det_direct(n, m, ceiling))
    if "block" in methods and m <= block_ceiling:
        timed("block", lambda: det_block(n, m))
    if "resultant" in methods:
        timed("resultant", lambda: det_resultant(n, m))

    start = time.perf_counter()
    closed = det_closed_form(n, m)
    elapsed["closed_form"] = time.perf_counter() - start

    computed = [v for v in values.values() if v is not None] + [closed]
    return DetReport(
        n=n,
        m=m,
        direct=values["direct"],
        block=values["block"],
        resultant=values["resultant"],
        closed_form=closed,
        agree=len(set(computed)) <= 1,
        elapsed=elapsed,
    )


# --- identity checks -------------------------------------------------------
#
# Each check returns an IdentityReport rather than asserting, so suite
# runners can collect failures with their witnesses.


def check_splitting(k: int) -> IdentityReport:
    """q_k = q_i * q_{k-i} - q_{i-1} * q_{k-i-1} for every i in 1..k-1,
    as an exact polynomial identity (vacuous for k = 1)."""
    _require_positive(k=k)
    lhs = path_charpoly(k)
    for i in range(1, k):
        rhs = path_charpoly(i) * path_charpoly(k - i) - path_charpoly(
            i - 1
        ) * path_charpoly(k - i - 1)
        if lhs != rhs:
            return IdentityReport(
                "splitting", {"k": k, "i": i}, False, witness=lhs - rhs
            )
    return IdentityReport("splitting", {"k": k}, True)


def check_shift(k: int, s: int) -> IdentityReport:
    """At every root of q_k, q_{k+s} = -q_{k-s}; checked as q_k dividing
    q_{k+s} + q_{k-s}."""
    _require_positive(k=k)
    if not 0 <= s <= k:
        raise ValueError(f"shift must satisfy 0 <= s <= k, got s={s}, k={k}")
    residue = pseudo_rem(
        path_charpoly(k + s) + path_charpoly(k - s), path_charpoly(k)
    )
    return IdentityReport(
        "shift",
        {"k": k, "s": s},
        residue.is_zero,
        witness=None if residue.is_zero else residue,
    )


def check_annihilation(k: int, t: int) -> IdentityReport:
    """q_{t(k+1)-1} vanishes at every root of q_k; checked as divisibility."""
    _require_positive(k=k, t=t)
    residue = pseudo_rem(path_charpoly(t * (k + 1) - 1), path_charpoly(k))
    return IdentityReport(
        "annihilation",
        {"k": k, "t": t},
        residue.is_zero,
        witness=None if residue.is_zero else residue,
    )


def check_power(k: int, a: int, b: int) -> IdentityReport:
    """At every root of q_k, q_{a(k+1)+b} = q_{k+1}**a * q_b; checked as
    q_k dividing the difference."""
    _require_positive(k=k, a=a)
    if not 0 <= b <= k:
        raise ValueError(f"offset must satisfy 0 <= b <= k, got b={b}, k={k}")
    difference = path_charpoly(a * (k + 1) + b) - path_charpoly(k + 1) ** a * path_charpoly(b)
    residue = pseudo_rem(difference, path_charpoly(k))
    return IdentityReport(
        "power",
        {"k": k, "a": a, "b": b},
        residue.is_zero,
        witness=None if residue.is_zero else residue,
    )


def check_product_n_plus_1(n: int) -> IdentityReport:
    """The product of q_{n+1} over the roots of q_n is (-1)**(n(n+1)/2).

    Since n(n+1) is even, the lc correction (-1)**(n(n+1)) is +1 and the
    claim is exactly Res(q_n, q_{n+1}) = (-1)**(n(n+1)/2).
    """
    _require_positive(n=n)
    res = resultant(path_charpoly(n), path_charpoly(n + 1))
    expected = -1 if (n * (n + 1) // 2) % 2 else 1
    return IdentityReport(
        "product_n_plus_1",
        {"n": n},
        res == expected,
        witness=None if res == expected else res,
    )


def check_symmetry(n: int, m: int) -> IdentityReport:
    """Swapping the two path sizes cannot change the root product (the two
    box products are isomorphic graphs)."""
    _require_positive(n=n, m=m)
    forward = det_resultant(n, m)
    backward = det_resultant(m, n)
    return IdentityReport(
        "symmetry",
        {"n": n, "m": m},
        forward == backward,
        witness=None if forward == backward else forward - backward,
    )


def identity_suite(
    *,
    splitting_max_k: int = 30,
    shift_max_k: int = 20,
    annihilation_max_k: int = 15,
    annihilation_max_t: int = 5,
    power_max_k: int = 10,
    power_max_a: int = 4,
    product_max_n: int = 20,
    symmetry_max: int = 8,
) -> list[IdentityReport]:
    """Every identity check over the configured parameter grids, in a
    deterministic order (family by family, parameters ascending)."""
    reports: list[IdentityReport] = []
    for k in range(1, splitting_max_k + 1):
        reports.append(check_splitting(k))
    for k in range(1, shift_max_k + 1):
        for s in range(0, k + 1):
            reports.append(check_shift(k, s))
    for k in range(1, annihilation_max_k + 1):
        for t in range(1, annihilation_max_t + 1):
            reports.append(check_annihilation(k, t))
    for k in range(1, power_max_k + 1):
        for a in range(1, power_max_a + 1):
            for b in range(0, k + 1):
                reports.append(check_power(k, a, b))
    for n in range(1, product_max_n + 1):
        reports.append(check_product_n_plus_1(n))
    for n in range(1, symmetry_max + 1):
        for m in range(1, symmetry_max + 1):
            reports.append(check_symmetry(n, m))
    return reports
