"""Families of projective-linear endomorphisms of the projective line.

A family is a 2x2 matrix over Z[T] acting by [T0:T1] -> [a T0 + b T1 : c T0 + d T1];
it is well defined on all of P^1 exactly when det = a d - b c is a unit of
Z[T], i.e. a constant +-1.  The image of the base point infinity = [1:0] is
[a : c]; it stays inside the chart where T1 is invertible iff c is a unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Poly
from .resultants import is_unit
from .rings import Scalar, ZZ

FORWARD = "forward"
REVERSED = "reversed"
ORIENTATIONS = (FORWARD, REVERSED)

TVAR = "T"


@dataclass(frozen=True)
class MatrixFamily:
    a: Poly
    b: Poly
    c: Poly
    d: Poly

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def from_ints(a, b, c, d) -> "MatrixFamily":
        mk = lambda v: Poly.constant(ZZ, TVAR, v)
        return MatrixFamily(mk(a), mk(b), mk(c), mk(d))


@dataclass(frozen=True)
class Mat2:
    """A constant integer 2x2 matrix (an endpoint of a family)."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def neg(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)


def det_family(M: MatrixFamily) -> Poly:
    return (M.a * M.d - M.b * M.c).trim()


def is_valid_family(M: MatrixFamily) -> bool:
    return is_unit(det_family(M))


def endpoint_matrix(M: MatrixFamily, t: int) -> Mat2:
    if t not in (0, 1):
        raise ValueError("endpoints live at T = 0 and T = 1")
    s = Scalar(ZZ, t)
    return Mat2(*(int(p.eval(s).value) for p in M.entries()))


def projective_unit(M: Mat2, N: Mat2):
    """The unit u in {1, -1} with M = u*N, or None."""
    if M == N:
        return 1
    if M == N.neg():
        return -1
    return None


def projectively_equal(M: Mat2, N: Mat2) -> bool:
    return projective_unit(M, N) is not None


def image_of_infinity_in_open(M: MatrixFamily) -> bool:
    """[a : c] lies in the T1-chart for every parameter value iff c is a unit."""
    return is_unit(M.c)


def fixes_infinity(M: MatrixFamily) -> bool:
    return M.c.is_zero() and is_unit(M.a)


# ---------------------------------------------------------------------------
# Chains of matrix families


@dataclass(frozen=True)
class MatrixChainLink:
    family: MatrixFamily
    orientation: str

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")


@dataclass(frozen=True)
class MatrixChain:
    links: tuple
    from_mat: Mat2
    to_mat: Mat2


@dataclass
class MatrixLinkReport:
    index: int
    det_ok: bool
    basepoint_ok: bool
    det: Poly | None = None
    start: Mat2 | None = None
    end: Mat2 | None = None

    @property
    def ok(self) -> bool:
        return self.det_ok and self.basepoint_ok


@dataclass
class MatrixJunctionReport:
    index: int
    ok: bool
    unit: int | None = None
    left: Mat2 | None = None
    right: Mat2 | None = None

    @property
    def label(self) -> str:
        return f"{self.index}/{self.index + 1}"


@dataclass
class MatrixChainReport:
    links: list = field(default_factory=list)
    junctions: list = field(default_factory=list)
    from_ok: bool = False
    to_ok: bool = False
    passed: bool = False
    first_failure: str | None = None


def verify_matrix_chain(chain: MatrixChain, exact_junctions: bool = False) -> MatrixChainReport:
    """Check unit determinants, the base-point condition, junctions (projective
    by default, exact on request) and the end matrices."""
    report = MatrixChainReport()
    for i, link in enumerate(chain.links, start=1):
        det = det_family(link.family)
        lr = MatrixLinkReport(
            index=i,
            det_ok=is_unit(det),
            basepoint_ok=image_of_infinity_in_open(link.family),
            det=det,
        )
        e0 = endpoint_matrix(link.family, 0)
        e1 = endpoint_matrix(link.family, 1)
        lr.start, lr.end = (e0, e1) if link.orientation == FORWARD else (e1, e0)
        report.links.append(lr)

    def _match(a, b):
        if exact_junctions:
            return 1 if a == b else None
        return projective_unit(a, b)

    for i in range(1, len(chain.links)):
        left = report.links[i - 1].end
        right = report.links[i].start
        u = _match(left, right)
        report.junctions.append(
            MatrixJunctionReport(index=i, ok=u is not None, unit=u, left=left, right=right)
        )
    if chain.links:
        report.from_ok = _match(report.links[0].start, chain.from_mat) is not None
        report.to_ok = _match(report.links[-1].end, chain.to_mat) is not None
    else:
        same = _match(chain.from_mat, chain.to_mat) is not None
        report.from_ok = report.to_ok = same
    failures = []
    if not report.from_ok:
        failures.append("from mismatch")
    for i, lr in enumerate(report.links):
        if not lr.det_ok:
            failures.append(f"link {lr.index}: determinant {lr.det} is not a unit")
        if not lr.basepoint_ok:
            failures.append(f"link {lr.index}: image of infinity leaves the T1-chart")
        if i < len(report.junctions) and not report.junctions[i].ok:
            failures.append(f"junction {report.junctions[i].label}")
    if not report.to_ok:
        failures.append("to mismatch (endpoint mismatch at T = 1)")
    report.passed = not failures
    report.first_failure = failures[0] if failures else None
    return report


BUILTIN_MATRIX_CHAINS = ("prop_3_4_2",)


def builtin_matrix_chain(name: str = "prop_3_4_2") -> MatrixChain:
    """The shipped two-family chain joining the two composites of the swap
    and the shear of P^1: H1 = [[T,-1],[1,0]] traversed backwards, then
    H2 = [[0,1],[-1,T]] forwards; the junction holds up to the unit -1."""
    if name not in BUILTIN_MATRIX_CHAINS:
        raise ValueError(f"unknown builtin matrix chain {name!r}")
    t = Poly.x(ZZ, TVAR)
    one = Poly.one(ZZ, TVAR)
    zero = Poly.zero(ZZ, TVAR)
    h1 = MatrixFamily(t, -one, one, zero)
    h2 = MatrixFamily(zero, one, -one, t)
    return MatrixChain(
        links=(MatrixChainLink(h1, REVERSED), MatrixChainLink(h2, FORWARD)),
        from_mat=Mat2(1, -1, 1, 0),
        to_mat=Mat2(0, 1, -1, 1),
    )
