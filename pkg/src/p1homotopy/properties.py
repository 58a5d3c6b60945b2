"""Seeded randomized law suites driven by independent oracles.

Each property draws its own deterministic RNG from the given seed, runs the
requested number of trials, and on failure reports the first counterexample
as a JSON-ready dictionary.  The resultant laws are checked against the
cofactor oracle (never against Bareiss itself), the product formula against
split polynomials with known roots, and Bezout uniqueness against a
from-scratch field solver with two pivot orders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .monoid import bezout_pair, mat_mul, oplus, validate
from .poly import Poly
from .randgen import RandomMapSpec, _gen_valid_map, rand_poly, rand_scalar
from .resultants import (
    res_bezout,
    resultant,
    resultant_oracle,
    resultant_product_oracle,
    split_poly,
)
from .rings import QQ, RingTag, Scalar, ZZ

F5 = RingTag("Fp", 5)
F2 = RingTag("Fp", 2)

_RES_RINGS = (ZZ, ZZ, QQ, F5, F2)
_MAP_RINGS = (ZZ, ZZ, QQ, F5)


class UnknownPropertyError(ValueError):
    pass


@dataclass
class PropertyResult:
    name: str
    passed: bool
    trials: int
    seed: int
    counterexample: dict | None = None

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.trials} trials, seed {self.seed})"


PROPERTIES = {}


def _property(fn):
    PROPERTIES[fn.__name__] = fn
    return fn


def run_property(name: str, trials: int = 1000, seed: int = 7) -> PropertyResult:
    fn = PROPERTIES.get(name)
    if fn is None:
        raise UnknownPropertyError(
            f"unknown property {name!r} (known: {', '.join(sorted(PROPERTIES))})"
        )
    rng = random.Random(f"{seed}:{name}")
    counterexample = fn(rng, trials)
    return PropertyResult(name, counterexample is None, trials, seed, counterexample)


def _rand_res_inputs(rng):
    ring = rng.choice(_RES_RINGS)
    n = rng.randint(0, 4)
    m = rng.randint(0, 4)
    f = rand_poly(rng, ring, n, 4)
    g = rand_poly(rng, ring, m, 4)
    return ring, n, m, f, g


def _poly_note(p) -> str:
    return f"{p} (formal degree {p.formal_degree})"


# ---------------------------------------------------------------------------
# Resultant laws (sizes n+m <= 8 so the cofactor oracle always applies)


@_property
def oracle_agreement(rng, trials):
    for k in range(trials):
        ring, n, m, f, g = _rand_res_inputs(rng)
        fast = resultant(f, g, n, m)
        slow = resultant_oracle(f, g, n, m)
        if fast != slow:
            return {
                "trial": k,
                "ring": ring.name(),
                "f": _poly_note(f),
                "g": _poly_note(g),
                "bareiss": str(fast),
                "cofactor": str(slow),
            }
    return None


@_property
def swap_law(rng, trials):
    for k in range(trials):
        ring, n, m, f, g = _rand_res_inputs(rng)
        lhs = resultant(f, g, n, m)
        rhs = resultant_oracle(g, f, m, n)
        if (n * m) % 2:
            rhs = -rhs
        if lhs != rhs:
            return {
                "trial": k,
                "ring": ring.name(),
                "f": _poly_note(f),
                "g": _poly_note(g),
                "res(f,g)": str(lhs),
                "(-1)^(nm) res(g,f)": str(rhs),
            }
    return None


@_property
def scaling_law(rng, trials):
    # the exponent placement a^m b^n is what the matrix satisfies: scaling f
    # multiplies the m f-columns by a, scaling g the n g-columns by b
    for k in range(trials):
        ring, n, m, f, g = _rand_res_inputs(rng)
        a = rand_scalar(rng, ring, 3)
        b = rand_scalar(rng, ring, 3)
        lhs = resultant(f.scale(a), g.scale(b), n, m)
        rhs = a**m * b**n * resultant_oracle(f, g, n, m)
        if lhs != rhs:
            return {
                "trial": k,
                "ring": ring.name(),
                "f": _poly_note(f),
                "g": _poly_note(g),
                "a": str(a),
                "b": str(b),
                "res(af,bg)": str(lhs),
                "a^m b^n res(f,g)": str(rhs),
            }
    return None


@_property
def bezout_law(rng, trials):
    for k in range(trials):
        ring, n, m, f, g = _rand_res_inputs(rng)
        if n + m < 1:
            continue
        r = resultant(f, g, n, m)
        p, q = res_bezout(f, g, n, m)
        combo = (p * f + q * g).trim()
        expected = Poly.constant(ring, "X", r)
        if combo != expected or p.actual_degree() >= m or q.actual_degree() >= n:
            return {
                "trial": k,
                "ring": ring.name(),
                "f": _poly_note(f),
                "g": _poly_note(g),
                "p": str(p),
                "q": str(q),
                "p*f+q*g": str(combo),
                "res": str(r),
            }
    return None


@_property
def product_law(rng, trials):
    for k in range(trials):
        n = rng.randint(0, 4)
        m = rng.randint(0, 4)
        roots_f = [Scalar(ZZ, rng.randint(-4, 4)) for _ in range(n)]
        roots_g = [Scalar(ZZ, rng.randint(-4, 4)) for _ in range(m)]
        lead_f = Scalar(ZZ, rng.randint(-3, 3))
        lead_g = Scalar(ZZ, rng.randint(-3, 3))
        f = split_poly(ZZ, "X", lead_f, roots_f).pad_to(n)
        g = split_poly(ZZ, "X", lead_g, roots_g).pad_to(m)
        lhs = resultant(f, g, n, m)
        rhs = resultant_product_oracle(roots_f, roots_g, lead_f, lead_g)
        if lhs != rhs:
            return {
                "trial": k,
                "roots_f": [str(r) for r in roots_f],
                "roots_g": [str(r) for r in roots_g],
                "lead_f": str(lead_f),
                "lead_g": str(lead_g),
                "sylvester": str(lhs),
                "product": str(rhs),
            }
    return None


@_property
def reciprocal_law(rng, trials):
    from .resultants import reciprocal

    for k in range(trials):
        ring, n, m, f, g = _rand_res_inputs(rng)
        lhs = resultant(reciprocal(f), reciprocal(g), n, m)
        rhs = resultant_oracle(f, g, n, m)
        if (n * m) % 2:
            rhs = -rhs
        if lhs != rhs:
            return {
                "trial": k,
                "ring": ring.name(),
                "f": _poly_note(f),
                "g": _poly_note(g),
                "res(f*,g*)": str(lhs),
                "(-1)^(nm) res(f,g)": str(rhs),
            }
    return None


# ---------------------------------------------------------------------------
# Monoid laws


def _rand_map(rng, ring=None, max_degree=3):
    ring = rng.choice(_MAP_RINGS) if ring is None else ring
    spec = RandomMapSpec(ring, 0, max_degree, 3, seed=0)
    return _gen_valid_map(rng, spec)


def _map_note(u) -> dict:
    return {"ring": u.ring.name(), "f": str(u.f), "g": str(u.g)}


@_property
def oplus_assoc(rng, trials):
    for k in range(trials):
        ring = rng.choice(_MAP_RINGS)
        u, v, w = (_rand_map(rng, ring, 2) for _ in range(3))
        if oplus(oplus(u, v), w) != oplus(u, oplus(v, w)):
            return {"trial": k, "u": _map_note(u), "v": _map_note(v), "w": _map_note(w)}
    return None


@_property
def oplus_identity(rng, trials):
    for k in range(trials):
        ring = rng.choice(_MAP_RINGS)
        u = _rand_map(rng, ring)
        e = validate(Poly.one(ring, "X"), Poly.zero(ring, "X"), ring)
        if oplus(u, e) != u or oplus(e, u) != u:
            return {"trial": k, "u": _map_note(u)}
    return None


@_property
def degree_additivity(rng, trials):
    for k in range(trials):
        ring = rng.choice(_MAP_RINGS)
        u = _rand_map(rng, ring)
        v = _rand_map(rng, ring)
        s = oplus(u, v)  # oplus re-validates the sum internally
        if s.n != u.n + v.n:
            return {"trial": k, "u": _map_note(u), "v": _map_note(v), "sum": _map_note(s)}
    return None


@_property
def matrix_law(rng, trials):
    for k in range(trials):
        ring = rng.choice(_MAP_RINGS)
        u = _rand_map(rng, ring)
        v = _rand_map(rng, ring)
        lhs = bezout_pair(oplus(u, v)).matrix()
        rhs = mat_mul(bezout_pair(u).matrix(), bezout_pair(v).matrix())
        same = all(
            lhs[i][j].trim() == rhs[i][j].trim() for i in range(2) for j in range(2)
        )
        if not same:
            return {"trial": k, "u": _map_note(u), "v": _map_note(v)}
    return None


@_property
def det_witness(rng, trials):
    for k in range(trials):
        u = _rand_map(rng)
        w = bezout_pair(u)
        det = (u.f * w.p + w.q * u.g).trim()
        if det != Poly.one(u.ring, "X"):
            return {"trial": k, "u": _map_note(u), "det": str(det)}
    return None


# -- independent Bezout solver (field Gaussian elimination on raw numbers) --


def _raw_sylvester(u):
    n = u.n
    fc = [u.f.coeff(i).value for i in range(n + 1)]
    gc = [u.g.coeff(i).value for i in range(n + 1)]
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for j in range(n):
        for i in range(n + 1):
            rows[j + i][j] = fc[n - i]
            rows[j + i][n + j] = gc[n - i]
    return rows


def _field_solve(rows, rhs, modulus, pivot_from_bottom):
    """Unique solution of a nonsingular system over Q or F_p."""
    size = len(rows)
    if modulus is None:
        m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    else:
        m = [[v % modulus for v in row] + [rhs[i] % modulus] for i, row in enumerate(rows)]
    for col in range(size):
        search = range(size - 1, col - 1, -1) if pivot_from_bottom else range(col, size)
        pr = next(i for i in search if m[i][col])
        m[col], m[pr] = m[pr], m[col]
        if modulus is None:
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
        else:
            inv = pow(m[col][col], -1, modulus)
            m[col] = [v * inv % modulus for v in m[col]]
        for i in range(size):
            if i != col and m[i][col]:
                factor = m[i][col]
                if modulus is None:
                    m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
                else:
                    m[i] = [(a - factor * b) % modulus for a, b in zip(m[i], m[col])]
    return [m[i][size] for i in range(size)]


@_property
def bezout_unique(rng, trials):
    for k in range(trials):
        u = _rand_map(rng, max_degree=3)
        if u.n == 0:
            continue
        w = bezout_pair(u)
        rows = _raw_sylvester(u)
        rhs = [0] * (2 * u.n - 1) + [1]
        modulus = u.ring.modulus
        sol_a = _field_solve([r[:] for r in rows], rhs, modulus, False)
        sol_b = _field_solve([r[:] for r in rows], rhs, modulus, True)
        got = [w.p.coeff(u.n - 1 - i).value for i in range(u.n)] + [
            w.q.coeff(u.n - 1 - i).value for i in range(u.n)
        ]
        if modulus is None:
            got = [Fraction(v) for v in got]
        ok = sol_a == sol_b == got
        if not ok:
            return {
                "trial": k,
                "u": _map_note(u),
                "pivot_down": [str(v) for v in sol_a],
                "pivot_up": [str(v) for v in sol_b],
                "bezout_pair": [str(v) for v in got],
            }
    return None


# ---------------------------------------------------------------------------
# I/O round-trips


@_property
def parse_print_roundtrip(rng, trials):
    from .exprio import parse_poly, print_poly
    from .mpoly import MPoly

    var_pools = (("X",), ("X", "T"), ("T0", "T1", "T"))
    for k in range(trials):
        ring = rng.choice(_RES_RINGS)
        vars = rng.choice(var_pools)
        if len(vars) == 1:
            p = rand_poly(rng, ring, rng.randint(0, 6), 9).trim()
        else:
            terms = {}
            for _ in range(rng.randint(0, 6)):
                e = tuple(rng.randint(0, 3) for _ in vars)
                terms[e] = rand_scalar(rng, ring, 9)
            p = MPoly(ring, vars, terms)
        text = print_poly(p)
        back = parse_poly(text, vars, ring)
        if len(vars) == 1:
            back = back.trim()
        if back != p:
            return {"trial": k, "ring": ring.name(), "printed": text, "reparsed": str(back)}
    return None


@_property
def json_roundtrip(rng, trials):
    import json

    from . import exprio
    from .homotopy import builtin_chain
    from .plane import builtin_plane_chain
    from .projlinear import builtin_matrix_chain
    from .randgen import rand_poly as _rp

    for k in range(trials):
        ring = rng.choice(_MAP_RINGS)
        u = _rand_map(rng, ring)
        if exprio.map_from_json(exprio.loads(json.dumps(exprio.map_to_json(u)))) != u:
            return {"trial": k, "map": _map_note(u)}
        p = _rp(rng, ring, rng.randint(0, 5), 9).trim()
        if exprio.poly_from_json(exprio.poly_to_json(p)) != p:
            return {"trial": k, "poly": str(p)}
    chain = builtin_chain()
    if exprio.chain_from_json(exprio.loads(json.dumps(exprio.chain_to_json(chain)))) != chain:
        return {"chain": "builtin homotopy chain"}
    mchain = builtin_matrix_chain()
    if exprio.matrix_chain_from_json(exprio.matrix_chain_to_json(mchain)) != mchain:
        return {"chain": "builtin matrix chain"}
    pchain = builtin_plane_chain()
    if exprio.plane_chain_from_json(exprio.plane_chain_to_json(pchain)) != pchain:
        return {"chain": "builtin plane chain"}
    return None


RESULTANT_LAWS = (
    "oracle_agreement",
    "swap_law",
    "scaling_law",
    "bezout_law",
    "product_law",
    "reciprocal_law",
)

MONOID_LAWS = (
    "oplus_assoc",
    "oplus_identity",
    "degree_additivity",
    "matrix_law",
    "det_witness",
    "bezout_unique",
)

IO_LAWS = ("parse_print_roundtrip", "json_roundtrip")
