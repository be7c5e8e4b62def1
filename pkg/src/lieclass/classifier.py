"""Decision tables for spherical partial flag varieties.

A classification datum is a flag type together with the semisimple factors
acting blockwise on the ambient space (each factor on its natural module)
plus optional trivial one-dimensional summands.  The verdict is computed
purely combinatorially:

  * flags are normalized by their step multiset (cotangent equivalence);
  * flags equivalent to the projective space delegate to the module table
    with the maximal torus of summand scalars;
  * everything else is matched against the encoded Grassmannian and
    multi-step case lists with their literal parameter guards.

"Spherical" here means spherical for the factors extended by the best
possible central torus; datum_algebra builds the matching matrix model so
the Monte Carlo oracle probes exactly the same group.
"""

from __future__ import annotations

from collections import Counter

from . import linalg
from .algebras import (
    CatalogAlgebra,
    ModuleSpec,
    direct_sum,
    make_algebra,
)
from .errors import BadParameter, MismatchedSize, UnsupportedShape
from .oracle import is_spherical_module
from .partitions import FlagType
from .sphericaltable import is_spherical_module_by_table


class ClassificationDatum:
    """Flag dims + factor list (tag, size) + count of trivial summands."""

    __slots__ = ("dims", "factors", "trivial", "ambient")

    def __init__(self, dims, factors, trivial=0):
        self.factors = tuple((tag, int(size)) for tag, size in factors)
        self.trivial = int(trivial)
        for tag, size in self.factors:
            if tag not in ("sl", "so", "sp"):
                raise UnsupportedShape("factor type %r unsupported" % (tag,))
            if tag == "sl" and size < 1:
                raise BadParameter("sl factor needs size >= 1")
            if tag == "so" and size < 3:
                raise BadParameter("so factor needs size >= 3")
            if tag == "sp" and (size < 2 or size % 2):
                raise BadParameter("sp factor needs even size >= 2")
        self.ambient = sum(s for _, s in self.factors) + self.trivial
        flag = FlagType(dims, self.ambient)  # validates the dims
        self.dims = flag.dims

    @property
    def flag(self):
        return FlagType(self.dims, self.ambient)

    def __repr__(self):
        return "ClassificationDatum(dims=%r, factors=%r, trivial=%d)" % (
            self.dims,
            self.factors,
            self.trivial,
        )


class ClassificationVerdict:
    __slots__ = ("spherical", "case_id", "reason")

    def __init__(self, spherical, case_id=None, reason=""):
        self.spherical = spherical
        self.case_id = case_id
        self.reason = reason

    def __bool__(self):
        return self.spherical

    def __repr__(self):
        if self.spherical:
            return "Spherical(%r)" % (self.case_id,)
        return "NotSpherical(%r)" % (self.reason,)


def _canon_factors(factors, trivial):
    """sp_2 is sl_2 and sl_1 acts trivially; normalize both away."""
    out = []
    t = trivial
    for tag, size in factors:
        if tag == "sl" and size == 1:
            t += 1
        elif tag == "sp" and size == 2:
            out.append(("sl", 2))
        else:
            out.append((tag, size))
    return out, t


def _steps(dims, n):
    exts = (0,) + tuple(dims) + (n,)
    return Counter(exts[i + 1] - exts[i] for i in range(len(exts) - 1))


def _slot_ok(slot, factor):
    kind = slot[0]
    tag, size = factor
    if kind == "sl":
        return tag == "sl" and size >= slot[1] and (slot[2] is None or size == slot[2])
    if kind == "so":
        return tag == "so"
    if kind == "sp":
        return tag == "sp" and (slot[1] is None or size == slot[1])
    return False


def _assign(slots, factors, trivial):
    """Can the factors + trivial summands fill the slots exactly?  sl slots
    with minimum 1 may absorb a trivial summand (an sl_1 factor)."""
    if not slots:
        return not factors and trivial == 0
    slot, rest = slots[0], slots[1:]
    if slot[0] == "triv":
        return trivial > 0 and _assign(rest, factors, trivial - 1)
    for i, f in enumerate(factors):
        if _slot_ok(slot, f) and _assign(rest, factors[:i] + factors[i + 1 :], trivial):
            return True
    if slot[0] == "sl" and slot[1] <= 1 and trivial > 0:
        return _assign(rest, factors, trivial - 1)
    return False


def _sl(minsize=1, exact=None):
    return ("sl", minsize, exact)


def _sp(exact=None):
    return ("sp", exact)


_SO = ("so",)
_TRIV = ("triv",)


def _two(step):
    return lambda s, n: len(list(s.elements())) == 2 and s[step] >= 1


def _any2(s, n):
    return len(list(s.elements())) == 2


def _any(s, n):
    return True


# Grassmannian case list; used both for one-step flag data and for the
# standalone Grassmannian classifier (same case numbering, different
# prefix).  Order matters only for which case id gets reported.
_GR_CASES = [
    ("1", [_sl()], _any2),
    ("1", [_SO], _any2),
    ("1", [_sp()], _any2),
    ("2-1-1", [_sp(), _sl()], _two(2)),
    ("2-1-2", [_sp(), _sp()], _two(2)),
    ("2-2", [_sl(), _sp()], _two(3)),
    ("2-3", [_sp(), _TRIV], _any2),
    ("2-4", [_sl(), _sp(4)], _any2),
    ("2-5", [_sl(), _sl()], _any2),
    ("3-1-1", [_sl(), _sl(), _sl()], _two(2)),
    ("3-1-2", [_sl(), _sl(), _sp()], _two(2)),
    ("3-1-3", [_sl(), _sp(), _sp()], _two(2)),
    ("3-1-4", [_sp(), _sp(), _sp()], _two(2)),
    ("3-2", [_sl(), _sl(), _TRIV], _any2),
]


def _len3_with_1(s, n):
    return len(list(s.elements())) == 3 and s[1] >= 1


def _len3(s, n):
    return len(list(s.elements())) == 3


def _fl123(s, n):
    return s == _steps((1, 2, 3), n)


def _fl12(s, n):
    return s == _steps((1, 2), n)


_MULTI_CASES = [
    ("II-1-1", [_sl()], _any),
    ("II-1-2", [_sp()], _fl123),
    ("II-1-3", [_sp()], _len3_with_1),
    ("II-2-1", [_sl(), _TRIV], _any),
    ("II-2-2", [_sl(), _sl()], _len3_with_1),
    ("II-2-3", [_sl(exact=2), _sl()], _len3),
    ("II-2-4", [_sl(), _sp()], _fl12),
    ("II-2-5", [_sp(), _sp()], _fl12),
]


def _match(cases, factors, trivial, steps, n, prefix=""):
    for case_id, slots, pred in cases:
        if pred(steps, n) and _assign(tuple(slots), tuple(factors), trivial):
            return ClassificationVerdict(True, prefix + case_id)
    return None


def _projective_spec(datum: ClassificationDatum):
    algs = [make_algebra(tag, size) for tag, size in datum.factors]
    summands = [("natural", i) for i in range(len(algs))]
    summands += [("trivial",)] * datum.trivial
    return algs, ModuleSpec(summands)


def classify_flag_datum(d: ClassificationDatum) -> ClassificationVerdict:
    n = d.ambient
    steps = _steps(d.dims, n)
    if steps == Counter({1: 2} if n == 2 else {1: 1, n - 1: 1}):
        algs, spec = _projective_spec(d)
        verdict = is_spherical_module_by_table(algs, spec, centers="summands")
        if verdict:
            return ClassificationVerdict(True, "P(V)")
        return ClassificationVerdict(False, reason="P(V) module test failed")
    factors, trivial = _canon_factors(d.factors, d.trivial)
    if len(list(steps.elements())) == 2:
        hit = _match(_GR_CASES, factors, trivial, steps, n, prefix="I-")
    else:
        hit = _match(_MULTI_CASES, factors, trivial, steps, n)
    if hit is not None:
        return hit
    return ClassificationVerdict(False, reason="absent-from-list")


def classify_grassmannian(r, d: ClassificationDatum) -> ClassificationVerdict:
    n = d.ambient
    if r == 1:
        algs, spec = _projective_spec(d)
        verdict = is_spherical_module_by_table(algs, spec, centers="summands")
        if verdict:
            return ClassificationVerdict(True, "P(V)")
        return ClassificationVerdict(False, reason="P(V) module test failed")
    if not 2 <= r <= n // 2:
        raise BadParameter("need 2 <= r <= n/2")
    factors, trivial = _canon_factors(d.factors, d.trivial)
    steps = Counter((r, n - r))
    hit = _match(_GR_CASES, factors, trivial, steps, n)
    if hit is not None:
        return hit
    return ClassificationVerdict(False, reason="absent-from-list")


def product_flags_spherical(steps1, steps2) -> bool:
    """Membership in the list of spherical products of two flag varieties,
    by unordered pair of step multisets."""
    a = sorted(steps1)
    b = sorted(steps2)
    if sum(a) != sum(b):
        raise MismatchedSize("step multisets must sum to the same total")
    for x, y in ((a, b), (b, a)):
        if len(x) == 2 and len(y) == 2:
            return True
        if len(x) == 2 and len(y) == 3 and 1 in y:
            return True
        if len(x) == 2 and 2 in x and len(y) == 3:
            return True
        if len(x) == 2 and 1 in x:
            return True
    return False


def _adjoin_scalar(alg: CatalogAlgebra) -> CatalogAlgebra:
    ident = linalg.identity(alg.n)
    return CatalogAlgebra(
        list(alg.basis) + [ident],
        list(alg.borel_basis) + [ident],
        alg.n,
        dict(alg.meta, type=alg.meta["type"] + "+c"),
    )


def datum_algebra(d: ClassificationDatum) -> CatalogAlgebra:
    """Matrix model of the factors extended by all per-summand scalars; the
    group the classification verdict speaks about."""
    blocks = []
    for tag, size in d.factors:
        if tag == "sl":
            blocks.append(make_algebra("gl", size))
        else:
            blocks.append(_adjoin_scalar(make_algebra(tag, size)))
    blocks += [make_algebra("gl", 1)] * d.trivial
    k = blocks[0]
    for b in blocks[1:]:
        k = direct_sum(k, b)
    return k


def bounded_subalgebra_sl(k, spec: ModuleSpec, samples=5, seed=0) -> bool:
    """Existence of an infinite-dimensional simple bounded pair: sphericity
    of the module with the overall scalar appended."""
    if not isinstance(k, (list, tuple, CatalogAlgebra)):
        raise BadParameter("k must be factor algebras")
    if not isinstance(k, CatalogAlgebra):
        k = [f if isinstance(f, CatalogAlgebra) else make_algebra(*f) for f in k]
    verdict = is_spherical_module(
        k, spec, with_scalar=True, samples=samples, seed=seed
    )
    return bool(verdict)
