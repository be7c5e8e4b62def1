"""Matrix models of the classical Lie algebras and their small modules.

All bases are integer matrices.  so_n and sp_n are realized through
ANTIDIAGONAL bilinear forms, so the intersection with upper-triangular
matrices is a genuine Borel subalgebra and no triangular decomposition has
to be computed.  Modules built from factors (naturals, duals, symmetric and
exterior squares, two-factor tensor products, trivial summands) are
assembled by pushing each factor's basis through the representation maps.
"""

from __future__ import annotations

from . import linalg
from .errors import BadParameter, MismatchedSize
from .rank import rank_capped


class CatalogAlgebra:
    """A Lie algebra of n x n integer matrices with a chosen Borel."""

    __slots__ = ("basis", "borel_basis", "n", "meta")

    def __init__(self, basis, borel_basis, n, meta):
        self.basis = [tuple(tuple(row) for row in b) for b in basis]
        self.borel_basis = [tuple(tuple(row) for row in b) for b in borel_basis]
        self.n = n
        self.meta = meta

    @property
    def dim(self):
        return len(self.basis)

    @property
    def borel_dim(self):
        return len(self.borel_basis)

    def check_closed(self):
        """Basis independent and closed under commutator (test hook)."""
        vecs = [linalg.flatten(b) for b in self.basis]
        if linalg.rank(vecs) != len(vecs):
            return False
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1 :]:
                c = linalg.commutator([list(r) for r in a], [list(r) for r in b])
                if not linalg.in_span(vecs, linalg.flatten(c)):
                    return False
        bvecs = [linalg.flatten(b) for b in self.borel_basis]
        if linalg.rank(bvecs) != len(bvecs):
            return False
        if any(not linalg.in_span(vecs, v) for v in bvecs):
            return False
        for i, a in enumerate(self.borel_basis):
            for b in self.borel_basis[i + 1 :]:
                c = linalg.commutator([list(r) for r in a], [list(r) for r in b])
                if not linalg.in_span(bvecs, linalg.flatten(c)):
                    return False
        return True

    def __repr__(self):
        return "CatalogAlgebra(%s, n=%d, dim=%d)" % (
            self.meta.get("type"),
            self.n,
            self.dim,
        )


def _unit(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i][j] = 1
    return m


def _form_so(n):
    f = [[0] * n for _ in range(n)]
    for i in range(n):
        f[i][n - 1 - i] = 1
    return f


def _form_sp(n):
    f = [[0] * n for _ in range(n)]
    for i in range(n):
        f[i][n - 1 - i] = 1 if i < n // 2 else -1
    return f


def _form_algebra(n, form, upper_only=False):
    """Basis of {x : x^T F + F x = 0}, optionally intersected with upper
    triangular matrices, found as an exact nullspace."""
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for a in range(n):
                # coefficient of x_{a i} in (x^T F)_{ij} is F[a][j]
                row[a * n + i] += form[a][j]
                # coefficient of x_{a j} in (F x)_{ij} is F[i][a]
                row[a * n + j] += form[i][a]
            rows.append(row)
    if upper_only:
        for a in range(n):
            for b in range(a):
                row = [0] * (n * n)
                row[a * n + b] = 1
                rows.append(row)
    basis = []
    for v in linalg.int_rows(linalg.nullspace(rows)):
        basis.append([v[i * n : (i + 1) * n] for i in range(n)])
    return basis


def make_algebra(tag, n):
    n = int(n)
    if tag == "gl":
        if n < 1:
            raise BadParameter("gl needs n >= 1")
        basis = [_unit(n, i, j) for i in range(n) for j in range(n)]
        borel = [_unit(n, i, j) for i in range(n) for j in range(i, n)]
        rank = n
    elif tag == "sl":
        if n < 1:
            raise BadParameter("sl needs n >= 1")
        basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        diag = []
        for i in range(n - 1):
            h = _unit(n, i, i)
            h[i + 1][i + 1] = -1
            diag.append(h)
        basis += diag
        borel = [_unit(n, i, j) for i in range(n) for j in range(i + 1, n)] + diag
        rank = n - 1
    elif tag == "so":
        if n < 3:
            raise BadParameter("so needs n >= 3")
        basis = _form_algebra(n, _form_so(n))
        borel = _form_algebra(n, _form_so(n), upper_only=True)
        rank = n // 2
    elif tag == "sp":
        if n < 2 or n % 2:
            raise BadParameter("sp needs even n >= 2")
        basis = _form_algebra(n, _form_sp(n))
        borel = _form_algebra(n, _form_sp(n), upper_only=True)
        rank = n // 2
    else:
        raise BadParameter("unknown algebra tag %r" % (tag,))
    return CatalogAlgebra(
        basis, borel, n, {"type": tag, "rank": rank, "factors": ((tag, n),)}
    )


def _embed(m, size, offset):
    out = [[0] * size for _ in range(size)]
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            out[offset + i][offset + j] = x
    return out


def direct_sum(a: CatalogAlgebra, b: CatalogAlgebra) -> CatalogAlgebra:
    n = a.n + b.n
    basis = [_embed(m, n, 0) for m in a.basis] + [_embed(m, n, a.n) for m in b.basis]
    borel = [_embed(m, n, 0) for m in a.borel_basis] + [
        _embed(m, n, a.n) for m in b.borel_basis
    ]
    meta = {
        "type": "sum",
        "rank": a.meta["rank"] + b.meta["rank"],
        "factors": a.meta["factors"] + b.meta["factors"],
    }
    return CatalogAlgebra(basis, borel, n, meta)


# --- module construction -------------------------------------------------

_SYMBOL_SUMMANDS = ("trivial",)


def _norm_summand(s):
    """Accepts ('natural', i) | ('dual', i) | ('sym2', i) | ('wedge2', i)
    | ('trivial',) | ('tensor', i, j) | ('tensor', (i, 'n'|'d'), (j, 'n'|'d'))."""
    if s == ("trivial",) or s == "trivial":
        return ("trivial",)
    kind = s[0]
    if kind in ("natural", "dual", "sym2", "wedge2"):
        return (kind, int(s[1]))
    if kind == "tensor":
        a, b = s[1], s[2]
        if isinstance(a, int):
            a = (a, "n")
        if isinstance(b, int):
            b = (b, "n")
        return ("tensor", (int(a[0]), a[1]), (int(b[0]), b[1]))
    raise BadParameter("unknown summand %r" % (s,))


class ModuleSpec:
    """A direct sum of summands built from a list of factors."""

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = tuple(_norm_summand(s) for s in summands)

    def summand_dims(self, factor_sizes):
        out = []
        for s in self.summands:
            if s[0] == "trivial":
                out.append(1)
            elif s[0] in ("natural", "dual"):
                out.append(factor_sizes[s[1]])
            elif s[0] == "sym2":
                k = factor_sizes[s[1]]
                out.append(k * (k + 1) // 2)
            elif s[0] == "wedge2":
                k = factor_sizes[s[1]]
                out.append(k * (k - 1) // 2)
            else:
                out.append(factor_sizes[s[1][0]] * factor_sizes[s[2][0]])
        return out

    def dim(self, factor_sizes):
        return sum(self.summand_dims(factor_sizes))

    def __repr__(self):
        return "ModuleSpec(%r)" % (self.summands,)


def _dual_op(x):
    n = len(x)
    return [[-x[j][i] for j in range(n)] for i in range(n)]


def _sym2_op(x):
    n = len(x)
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    idx = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)
    out = [[0] * d for _ in range(d)]

    def add(a, b, col, coef):
        if a > b:
            a, b = b, a
        out[idx[(a, b)]][col] += coef

    for col, (a, b) in enumerate(pairs):
        for c in range(n):
            if x[c][a]:
                add(c, b, col, x[c][a])
            if x[c][b]:
                add(a, c, col, x[c][b])
    return out


def _wedge2_op(x):
    n = len(x)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    idx = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)
    out = [[0] * d for _ in range(d)]

    def add(a, b, col, coef):
        if a == b:
            return
        if a > b:
            a, b = b, a
            coef = -coef
        out[idx[(a, b)]][col] += coef

    for col, (a, b) in enumerate(pairs):
        for c in range(n):
            if x[c][a]:
                add(c, b, col, x[c][a])
            if x[c][b]:
                add(a, c, col, x[c][b])
    return out


def _kron(a, b):
    na, nb = len(a), len(b)
    out = [[0] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if a[i][j]:
                for k in range(nb):
                    for l in range(nb):
                        if b[k][l]:
                            out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


def _summand_op(x, factor_index, summand, factor_sizes):
    """Operator induced on one summand by basis element x of the given
    factor, or None if the factor does not act there."""
    kind = summand[0]
    if kind == "trivial":
        return None
    if kind in ("natural", "dual", "sym2", "wedge2"):
        if summand[1] != factor_index:
            return None
        if kind == "natural":
            return [list(r) for r in x]
        if kind == "dual":
            return _dual_op(x)
        if kind == "sym2":
            return _sym2_op(x)
        return _wedge2_op(x)
    (i, ci), (j, cj) = summand[1], summand[2]
    ni, nj = factor_sizes[i], factor_sizes[j]
    if factor_index == i:
        xi = _dual_op(x) if ci == "d" else [list(r) for r in x]
        return _kron(xi, linalg.identity(nj))
    if factor_index == j:
        xj = _dual_op(x) if cj == "d" else [list(r) for r in x]
        return _kron(linalg.identity(ni), xj)
    return None


def _assemble(ops_by_summand, dims):
    total = sum(dims)
    out = [[0] * total for _ in range(total)]
    off = 0
    for op, d in zip(ops_by_summand, dims):
        if op is not None:
            for i in range(d):
                for j in range(d):
                    out[off + i][off + j] = op[i][j]
        off += d
    return out


def representation(factors, spec: ModuleSpec) -> CatalogAlgebra:
    """Direct sum of factors acting on the module described by spec."""
    if isinstance(factors, CatalogAlgebra):
        factors = [factors]
    sizes = [f.n for f in factors]
    dims = spec.summand_dims(sizes)
    for s in spec.summands:
        for ref in _factor_refs(s):
            if ref >= len(factors):
                raise BadParameter("summand %r references missing factor" % (s,))

    def induce(fi, x):
        return _assemble(
            [_summand_op(x, fi, s, sizes) for s in spec.summands], dims
        )

    basis, borel = [], []
    for fi, f in enumerate(factors):
        for x in f.basis:
            m = induce(fi, x)
            if any(any(row) for row in m):
                basis.append(m)
        for x in f.borel_basis:
            m = induce(fi, x)
            if any(any(row) for row in m):
                borel.append(m)
    meta = {
        "type": "rep",
        "rank": sum(f.meta["rank"] for f in factors),
        "factors": tuple((f.meta["type"], f.n) for f in factors),
        "module": spec,
        "summand_dims": tuple(dims),
    }
    return CatalogAlgebra(basis, borel, sum(dims), meta)


def _factor_refs(summand):
    if summand[0] == "trivial":
        return ()
    if summand[0] == "tensor":
        return (summand[1][0], summand[2][0])
    return (summand[1],)


def summand_scalars(spec: ModuleSpec, factor_sizes):
    """One identity-on-summand operator per summand (the maximal torus of
    scalars commuting with the factor action)."""
    dims = spec.summand_dims(factor_sizes)
    total = sum(dims)
    out = []
    off = 0
    for d in dims:
        m = [[0] * total for _ in range(total)]
        for i in range(d):
            m[off + i][off + i] = 1
        out.append(m)
        off += d
    return out


def scalar_on_summands(spec: ModuleSpec, factor_sizes, weights):
    """Sum of weight_s * Id restricted to summand s."""
    scalars = summand_scalars(spec, factor_sizes)
    total = len(scalars[0])
    m = [[0] * total for _ in range(total)]
    for w, s in zip(weights, scalars):
        for i in range(total):
            m[i][i] += w * s[i][i]
    return m


# --- normalizer ----------------------------------------------------------


def _normalizer_rows(span_basis, n):
    """Integer constraint rows whose nullspace is {x : [x, span] <= span}."""
    vecs = [linalg.flatten(s) for s in span_basis]
    ann = linalg.int_rows(linalg.nullspace(vecs)) if vecs else []
    rows = []
    for s in span_basis:
        st = [[s[j][i] for j in range(n)] for i in range(n)]
        for f in ann:
            fm = [f[i * n : (i + 1) * n] for i in range(n)]
            c = linalg.matmul(fm, st)
            d = linalg.matmul(st, fm)
            rows.append([c[i][j] - d[i][j] for i in range(n) for j in range(n)])
    return rows


def _span_basis(matrices):
    """Reduce a list of matrices to an independent integer basis of its span."""
    if not matrices:
        return []
    red, pivots = linalg.rref([linalg.flatten(m) for m in matrices])
    n = len(matrices[0])
    out = []
    for r in range(len(pivots)):
        v = linalg.scale_row_to_int(red[r])
        out.append([v[i * n : (i + 1) * n] for i in range(n)])
    return out


def normalizer_in_gl(k: CatalogAlgebra, extra_center=()) -> CatalogAlgebra:
    """Normalizer of span(k.basis + extra_center) in gl_n, exact basis."""
    n = k.n
    for m in extra_center:
        if len(m) != n:
            raise MismatchedSize("extra center operator of wrong size")
    span = _span_basis(list(k.basis) + [list(map(list, m)) for m in extra_center])
    rows = _normalizer_rows(span, n)
    if not rows:
        sol = linalg.identity(n * n)
    else:
        sol = linalg.int_rows(linalg.nullspace(rows))
    basis = [[v[i * n : (i + 1) * n] for i in range(n)] for v in sol]
    meta = {"type": "normalizer", "rank": None, "factors": k.meta.get("factors")}
    return CatalogAlgebra(basis, [], n, meta)


def normalizer_dim(k_basis, extra_center=(), n=None):
    """dim of the normalizer of span(k_basis + extra_center) in gl_n.

    Uses the capped-rank fast path: the normalizer always contains the span,
    so its dimension is certified as soon as the modular kernel confirms it.
    """
    mats = [list(map(list, m)) for m in k_basis] + [
        list(map(list, m)) for m in extra_center
    ]
    if not mats:
        return n * n
    n = len(mats[0])
    span = _span_basis(mats)
    rows = _normalizer_rows(span, n)
    if not rows:
        return n * n
    cap = n * n - len(span)
    return n * n - rank_capped(rows, cap)
