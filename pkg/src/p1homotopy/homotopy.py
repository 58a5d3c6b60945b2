"""Homotopy certificates over R[T] and chain verification.

A certificate is a pair F/G of X-polynomials with coefficients in R[T],
F monic in X of degree n, deg_X G < n, whose resultant over R[T] is a unit
(a constant +-1 over Z; a nonzero constant over a field).  Substituting
T = 0 and T = 1 yields its two endpoint maps; a chain strings certificates
together, each traversed forward or reversed, with exact junction equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .monoid import MapValidationError, PointedMap, validate
from .mpoly import MPoly
from .poly import Poly
from .resultants import is_unit, resultant_tpoly, resultant_tpoly_oracle
from .rings import RingTag, ZZ

FORWARD = "forward"
REVERSED = "reversed"
ORIENTATIONS = (FORWARD, REVERSED)

XVAR = "X"
TVAR = "T"


class CertValidationError(ValueError):
    """A candidate pair F/G violates a certificate invariant."""


class NotMonicInXError(CertValidationError):
    pass


class XDegreeTooHighError(CertValidationError):
    pass


class CertResultantNotUnitError(CertValidationError):
    def __init__(self, res: Poly):
        self.res = res
        super().__init__(f"resultant {res} is not a unit of {res.ring.name()}[T]")


def _as_xt(p, ring: RingTag) -> MPoly:
    if isinstance(p, Poly):
        p = MPoly.from_poly(p, (XVAR, TVAR))
    if p.vars != (XVAR, TVAR):
        p = p._embed((XVAR, TVAR))
    if p.ring != ring:
        raise CertValidationError(f"coefficients in {p.ring.name()}, expected {ring.name()}")
    return p


@dataclass(frozen=True)
class HomotopyCert:
    """Validated certificate; construct through validate_cert()."""

    ring: RingTag
    n: int
    F: MPoly
    G: MPoly
    res: Poly

    def __str__(self):
        from .exprio import print_poly

        return f"({print_poly(self.F)})/({print_poly(self.G)})"


def validate_cert(F, G, ring: RingTag | None = None) -> HomotopyCert:
    """Check certificate invariants; raises the failing one."""
    ring = F.ring if ring is None else ring
    F = _as_xt(F, ring)
    G = _as_xt(G, ring)
    n = F.degree_in(XVAR)
    if n < 0:
        raise NotMonicInXError("zero numerator")
    lead = F.coeff_of(XVAR, n)
    if not (lead.total_degree() == 0 and lead.to_poly(TVAR).coeff(0).is_one()):
        raise NotMonicInXError(f"X^{n} coefficient must be the constant 1")
    if G.degree_in(XVAR) >= n:
        raise XDegreeTooHighError(
            f"denominator X-degree {G.degree_in(XVAR)} not below {n}"
        )
    fc = F.x_coeff_polys(XVAR, TVAR)
    gc = G.x_coeff_polys(XVAR, TVAR)
    gc += [Poly.zero(ring, TVAR)] * (n + 1 - len(gc))
    res = resultant_tpoly(fc, gc, ring, TVAR)
    if not is_unit(res):
        raise CertResultantNotUnitError(res)
    return HomotopyCert(ring, n, F, G, res)


def cert_resultant_oracle(cert: HomotopyCert) -> Poly:
    """Recompute the certificate resultant by the cofactor route."""
    fc = cert.F.x_coeff_polys(XVAR, TVAR)
    gc = cert.G.x_coeff_polys(XVAR, TVAR)
    gc += [Poly.zero(cert.ring, TVAR)] * (cert.n + 1 - len(gc))
    return resultant_tpoly_oracle(fc, gc, cert.ring, TVAR)


def endpoint(cert: HomotopyCert, t: int) -> PointedMap:
    """The map at T = t (t in {0, 1}); a unit resultant specializes to a unit."""
    if t not in (0, 1):
        raise ValueError("endpoints live at T = 0 and T = 1")
    s = cert.ring.from_int(t)
    f = cert.F.subst(TVAR, s).to_poly(XVAR)
    g = cert.G.subst(TVAR, s).to_poly(XVAR)
    return validate(f, g, cert.ring)


def reverse(cert: HomotopyCert) -> HomotopyCert:
    """Reparametrize T -> 1 - T; swaps the endpoints."""
    one_minus_t = MPoly(cert.ring, (TVAR,), {(0,): 1, (1,): -1})
    return validate_cert(
        cert.F.subst(TVAR, one_minus_t), cert.G.subst(TVAR, one_minus_t), cert.ring
    )


# ---------------------------------------------------------------------------
# Chains


@dataclass(frozen=True)
class ChainLink:
    """One certificate plus the direction it is traversed in."""

    F: MPoly
    G: MPoly
    orientation: str

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")


@dataclass(frozen=True)
class Chain:
    """Links are stored unvalidated so verification can report defects."""

    ring: RingTag
    links: tuple
    from_pair: tuple
    to_pair: tuple


@dataclass
class LinkReport:
    index: int
    ok: bool
    res: Poly | None = None
    error: str | None = None
    start: PointedMap | None = None
    end: PointedMap | None = None


@dataclass
class JunctionReport:
    index: int  # junction between links index and index+1 (1-based)
    ok: bool
    left: PointedMap | None = None
    right: PointedMap | None = None

    @property
    def label(self) -> str:
        return f"{self.index}/{self.index + 1}"


@dataclass
class ChainReport:
    links: list = field(default_factory=list)
    junctions: list = field(default_factory=list)
    from_ok: bool = False
    to_ok: bool = False
    passed: bool = False
    first_failure: str | None = None


def _maps_equal(a: PointedMap, b: PointedMap) -> bool:
    # exact structural equality of canonicalized pairs
    return (
        a.ring == b.ring
        and a.n == b.n
        and a.f == b.f
        and a.g.trim() == b.g.trim()
    )


def _link_endpoints(link: ChainLink, ring: RingTag):
    cert = validate_cert(link.F, link.G, ring)
    e0 = endpoint(cert, 0)
    e1 = endpoint(cert, 1)
    if link.orientation == FORWARD:
        return cert, e0, e1
    return cert, e1, e0


def verify_chain(chain: Chain) -> ChainReport:
    """Validate every link, then check all junctions and the end maps.

    Verification never stops early: every link and junction gets a verdict,
    and first_failure names the first one that failed.
    """
    report = ChainReport()
    maps = []
    for i, link in enumerate(chain.links, start=1):
        try:
            cert, start, end = _link_endpoints(link, chain.ring)
            report.links.append(
                LinkReport(index=i, ok=True, res=cert.res, start=start, end=end)
            )
            maps.append((start, end))
        except (CertValidationError, MapValidationError) as exc:
            report.links.append(LinkReport(index=i, ok=False, error=str(exc)))
            maps.append(None)
    for i in range(1, len(chain.links)):
        left = maps[i - 1]
        right = maps[i]
        if left is None or right is None:
            jr = JunctionReport(index=i, ok=False)
        else:
            jr = JunctionReport(
                index=i, ok=_maps_equal(left[1], right[0]), left=left[1], right=right[0]
            )
        report.junctions.append(jr)
    try:
        from_map = validate(chain.from_pair[0], chain.from_pair[1], chain.ring)
        to_map = validate(chain.to_pair[0], chain.to_pair[1], chain.ring)
    except MapValidationError as exc:
        report.first_failure = f"end map invalid: {exc}"
        report.passed = False
        return report
    if chain.links:
        report.from_ok = maps[0] is not None and _maps_equal(maps[0][0], from_map)
        report.to_ok = maps[-1] is not None and _maps_equal(maps[-1][1], to_map)
    else:
        same = _maps_equal(from_map, to_map)
        report.from_ok = report.to_ok = same
    # failures in walk order; a broken link outranks its consequences
    failures = []
    if not report.from_ok and (not chain.links or maps[0] is not None):
        failures.append("from mismatch")
    for i, lr in enumerate(report.links):
        if not lr.ok:
            failures.append(f"link {lr.index}: {lr.error}")
        if i < len(report.junctions):
            jr = report.junctions[i]
            if not jr.ok and jr.left is not None:
                failures.append(f"junction {jr.label}")
    if not report.to_ok and (not chain.links or maps[-1] is not None):
        failures.append("to mismatch")
    report.passed = (
        report.from_ok
        and report.to_ok
        and all(lr.ok for lr in report.links)
        and all(jr.ok for jr in report.junctions)
    )
    report.first_failure = failures[0] if failures else None
    return report


# ---------------------------------------------------------------------------
# Built-in chain


BUILTIN_CHAINS = ("prop_3_4_3",)


def builtin_chain(name: str = "prop_3_4_3") -> Chain:
    """The shipped four-certificate chain from the squaring map X^2/1 to
    (X^2-X+1)/(X-1), traversed (forward, forward, reversed, forward)."""
    if name not in BUILTIN_CHAINS:
        raise ValueError(f"unknown builtin chain {name!r}")
    from .exprio import parse_poly

    def xt(s):
        return parse_poly(s, (XVAR, TVAR), ZZ)

    def x(s):
        return parse_poly(s, (XVAR,), ZZ)

    links = (
        ChainLink(xt("X^2"), xt("T*X + 1"), FORWARD),
        ChainLink(xt("X^2 + 2*T*X + 2*T"), xt("X + 1"), FORWARD),
        ChainLink(xt("X^2 + 2*T*X + 2*T"), xt("X + (2*T - 1)"), REVERSED),
        ChainLink(xt("X^2 - T*X + T"), xt("X - 1"), FORWARD),
    )
    return Chain(
        ring=ZZ,
        links=links,
        from_pair=(x("X^2"), x("1")),
        to_pair=(x("X^2 - X + 1"), x("X - 1")),
    )
