"""Monte Carlo sphericity oracle via exact orbit dimensions.

A Borel orbit through a rational point has dimension equal to the rank of
an integer constraint matrix, so sphericity of a flag variety or module is
decided by sampling points and comparing the best rank against the variety
dimension.  Sampled ranks are filtered with the fast modular kernel: a
modular rank can only undercount, so hitting the dimension certifies a Yes
outright, and the single best sample of a failing run is recomputed with
exact Bareiss elimination so every reported rank is exact.

Points on the flag variety are sampled as g = L U with unit triangular
integer L, U and off-diagonal entries drawn uniformly from the coefficient
box; det g = 1, and the exact integer inverse comes from triangular
inversion, keeping all constraint entries integral.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebras import CatalogAlgebra, ModuleSpec, representation
from .errors import BadSampleCount, DimensionMismatch, NoMatrixModel
from .partitions import FlagType
from .rank import rank_exact, rank_modp, reduce_mod

COEFF_BOX = 10_000
DEFAULT_SAMPLES = 5


class FlagPoint:
    """A flag given by an invertible integer matrix: the first n_i columns
    of g span the i-th subspace."""

    __slots__ = ("ambient", "dims", "g", "g_inv")

    def __init__(self, ambient, dims, g, g_inv=None):
        self.ambient = ambient
        self.dims = tuple(dims)
        self.g = [list(row) for row in g]
        if g_inv is None:
            raise DimensionMismatch("g_inv required")
        self.g_inv = [list(row) for row in g_inv]

    @classmethod
    def standard(cls, flag: FlagType):
        n = flag.ambient
        ident = linalg.identity(n)
        return cls(n, flag.dims, ident, ident)

    def __repr__(self):
        return "FlagPoint(n=%d, dims=%r)" % (self.ambient, self.dims)


class OracleVerdict:
    """Yes carries a certificate point; ProbablyNo carries replay data."""

    __slots__ = ("kind", "rank", "target", "samples", "seed", "certificate")

    def __init__(self, kind, rank, target, samples, seed, certificate=None):
        self.kind = kind  # "Yes" | "ProbablyNo"
        self.rank = rank
        self.target = target
        self.samples = samples
        self.seed = seed
        self.certificate = certificate

    @property
    def complexity(self):
        return self.target - self.rank

    def __bool__(self):
        return self.kind == "Yes"

    def __repr__(self):
        return "OracleVerdict(%s, rank=%d/%d, samples=%r, seed=%r)" % (
            self.kind,
            self.rank,
            self.target,
            self.samples,
            self.seed,
        )


def _unit_lower(n, rng, box):
    m = linalg.identity(n)
    for i in range(n):
        for j in range(i):
            m[i][j] = int(rng.integers(-box, box + 1))
    return m


def sample_flag_point(flag: FlagType, rng, box=COEFF_BOX) -> FlagPoint:
    n = flag.ambient
    lo = _unit_lower(n, rng, box)
    up = linalg.transpose(_unit_lower(n, rng, box))
    g = linalg.matmul(lo, up)
    g_inv = linalg.matmul(
        linalg.invert_unit_upper(up), linalg.invert_unit_lower(lo)
    )
    return FlagPoint(n, flag.dims, g, g_inv)


def _borel_of(b):
    if isinstance(b, CatalogAlgebra):
        return [list(map(list, m)) for m in b.borel_basis]
    return [list(map(list, m)) for m in b]


def _constraint_rows(borel_mats, x: FlagPoint):
    """Rows of the map  coefficients -> violated flag-stability entries.

    y fixes the flag iff (g^-1 y g) keeps every coordinate subspace
    span(e_0..e_{d-1}); the rank of these rows is the orbit dimension.
    """
    n = x.ambient
    conj = [
        linalg.matmul(linalg.matmul(x.g_inv, y), x.g) for y in borel_mats
    ]
    rows = []
    for d in x.dims:
        for r in range(d, n):
            for k in range(d):
                rows.append([c[r][k] for c in conj])
    return rows


def borel_orbit_dim_at(b, x: FlagPoint):
    """Exact dimension of the orbit of the Borel b through the flag x."""
    borel = _borel_of(b)
    if borel and len(borel[0]) != x.ambient:
        raise DimensionMismatch(
            "Borel acts on C^%d, point lives in C^%d"
            % (len(borel[0]), x.ambient)
        )
    rows = _constraint_rows(borel, x)
    if not rows or not borel:
        return 0
    return rank_exact(rows)


def _scan(target, row_iter, samples, seed, certificates):
    """Shared max-rank loop: modular rank per sample, Yes on certification,
    exact recomputation at the best sample otherwise."""
    best_rank, best_index, best_rows = -1, -1, None
    for idx in range(samples):
        rows = row_iter(idx)
        if not rows or not rows[0]:
            rp = 0
        else:
            rp = rank_modp(reduce_mod(rows))
        if rp >= target:
            return OracleVerdict(
                "Yes", target, target, samples, seed, certificates[idx]
            )
        if rp > best_rank:
            best_rank, best_index, best_rows = rp, idx, rows
    if best_rows and best_rows[0]:
        exact = rank_exact(best_rows)
    else:
        exact = 0
    if exact >= target:
        return OracleVerdict(
            "Yes", target, target, samples, seed, certificates[best_index]
        )
    return OracleVerdict("ProbablyNo", exact, target, samples, seed)


def is_spherical_flag(
    k, flag: FlagType, samples=DEFAULT_SAMPLES, seed=0, box=COEFF_BOX
) -> OracleVerdict:
    if samples < 1:
        raise BadSampleCount("samples must be >= 1")
    borel = _borel_of(k)
    if borel and len(borel[0]) != flag.ambient:
        raise DimensionMismatch("algebra size does not match flag ambient")
    target = flag.dim()
    rng = np.random.default_rng(seed)
    points = [sample_flag_point(flag, rng, box) for _ in range(samples)]
    return _scan(
        target,
        lambda i: _constraint_rows(borel, points[i]),
        samples,
        seed,
        points,
    )


def complexity_flag(k, flag: FlagType, samples=DEFAULT_SAMPLES, seed=0, box=COEFF_BOX):
    return is_spherical_flag(k, flag, samples, seed, box).complexity


def is_spherical_module(
    k,
    spec: ModuleSpec = None,
    with_scalar=True,
    samples=DEFAULT_SAMPLES,
    seed=0,
    box=COEFF_BOX,
) -> OracleVerdict:
    """Open-Borel-orbit test on the module itself: the span of b.w (plus w
    for the appended scalar) must be everything at some sampled w.

    k is either a list of factors with a ModuleSpec, or an already-built
    representation algebra (spec omitted)."""
    if samples < 1:
        raise BadSampleCount("samples must be >= 1")
    if isinstance(k, CatalogAlgebra) and spec is None:
        rep = k
    else:
        factors = [k] if isinstance(k, CatalogAlgebra) else list(k)
        for f in factors:
            if f.meta["type"] not in ("gl", "sl", "so", "sp", "sum", "rep"):
                raise NoMatrixModel(
                    "no matrix model for factor type %r" % (f.meta["type"],)
                )
        rep = representation(factors, spec)
    borel = _borel_of(rep)
    if with_scalar:
        borel = borel + [linalg.identity(rep.n)]
    target = rep.n
    rng = np.random.default_rng(seed)
    points = [
        [int(rng.integers(-box, box + 1)) for _ in range(rep.n)]
        for _ in range(samples)
    ]

    def rows_at(i):
        w = points[i]
        return [linalg.matvec(y, w) for y in borel]

    return _scan(target, rows_at, samples, seed, points)


def _gl_borel(n):
    return [
        [[1 if (a, c) == (i, j) else 0 for c in range(n)] for a in range(n)]
        for i in range(n)
        for j in range(i, n)
    ]


def levi_borel(n, flag: FlagType):
    """Borel of the block-diagonal Levi cut out by the steps of a flag:
    upper-triangular inside each diagonal block."""
    if flag.ambient != n:
        raise DimensionMismatch("flag ambient does not match n")
    exts = (0,) + flag.dims + (n,)
    out = []
    for b in range(len(exts) - 1):
        lo, hi = exts[b], exts[b + 1]
        for i in range(lo, hi):
            for j in range(i, hi):
                m = [[0] * n for _ in range(n)]
                m[i][j] = 1
                out.append(m)
    return out


def product_flag_complexity(
    g_n, f1: FlagType, f2: FlagType, samples=DEFAULT_SAMPLES, seed=0, box=COEFF_BOX
):
    """Complexity of the gl_n Borel acting diagonally on pairs of flags."""
    if samples < 1:
        raise BadSampleCount("samples must be >= 1")
    if f1.ambient != g_n or f2.ambient != g_n:
        raise DimensionMismatch("flag ambients must equal g_n")
    borel = _gl_borel(g_n)
    target = f1.dim() + f2.dim()
    rng = np.random.default_rng(seed)
    pairs = [
        (sample_flag_point(f1, rng, box), sample_flag_point(f2, rng, box))
        for _ in range(samples)
    ]

    def rows_at(i):
        x1, x2 = pairs[i]
        return _constraint_rows(borel, x1) + _constraint_rows(borel, x2)

    verdict = _scan(target, rows_at, samples, seed, pairs)
    return verdict.complexity


def levi_flag_complexity(
    g_n, f1: FlagType, f2: FlagType, samples=DEFAULT_SAMPLES, seed=0, box=COEFF_BOX
):
    """Complexity of f1 under the Borel of the Levi attached to f2; equal to
    the product complexity by the restriction identity."""
    borel = levi_borel(g_n, f2)
    if samples < 1:
        raise BadSampleCount("samples must be >= 1")
    target = f1.dim()
    rng = np.random.default_rng(seed)
    points = [sample_flag_point(f1, rng, box) for _ in range(samples)]
    verdict = _scan(
        target,
        lambda i: _constraint_rows(borel, points[i]),
        samples,
        seed,
        points,
    )
    return verdict.complexity
