"""Generic twisted Laurent ring: sums f_beta(x) * d^beta over a monoid Z^m.

A SkewSpec fixes v commuting base variables, a rank-m monoid with units
d_1..d_m, and an integer action matrix A (m rows, v columns): commuting the
unit d_k left past a coefficient substitutes x_j -> q^(A[k][j]) x_j.  With
A = I this is the coordinate ring of 2n q-commuting coordinates
(y_i x_j = q^{delta_ij} x_j y_i, the d's playing the role of the y's); with
A = -I on a triangular index set it is the skew monoid ring acting on
Gelfand-Tsetlin style Laurent coefficients.

Elements are finite term maps beta -> coefficient.  Coefficients are RatFn
values (or any object with the same arithmetic surface, which is how the
random-evaluation mode reuses this engine).  General elements are never
inverted; every identity downstream is verified in fraction-free form.
"""

from __future__ import annotations

from .scalars import RatFn

ExpVec = tuple


class SkewSpec:
    """Commutation data (v base variables, m monoid units, action matrix A)."""

    __slots__ = ("v", "m", "rows", "_zero_coeff_key")

    def __init__(self, v: int, m: int, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != m or any(len(r) != v for r in rows):
            raise ValueError(f"action matrix must be {m}x{v}")
        self.v = v
        self.m = m
        self.rows = rows

    @classmethod
    def diagonal(cls, n: int, step: int = 1) -> SkewSpec:
        """n base variables, n units, y_i x_j = q^(step * delta_ij) x_j y_i."""
        rows = [[step if i == j else 0 for j in range(n)] for i in range(n)]
        return cls(n, n, rows)

    def shift_for(self, beta: ExpVec) -> tuple:
        """A^T beta: the q-power vector picked up when d^beta passes coefficients."""
        out = [0] * self.v
        for k, b in enumerate(beta):
            if b:
                row = self.rows[k]
                for j in range(self.v):
                    if row[j]:
                        out[j] += b * row[j]
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, SkewSpec)
            and self.v == other.v
            and self.m == other.m
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.v, self.m, self.rows))

    def __repr__(self):
        return f"SkewSpec(v={self.v}, m={self.m})"

    def to_json(self):
        return {"v": self.v, "m": self.m, "A": [list(r) for r in self.rows]}

    # -- canonical small elements -------------------------------------------

    def zero(self) -> SkewElem:
        return SkewElem(self, {})

    def one(self) -> SkewElem:
        return self.from_coeff(RatFn.const(1, self.v))

    def from_coeff(self, f) -> SkewElem:
        return SkewElem(self, {(0,) * self.m: f})

    def x(self, j: int) -> SkewElem:
        """Base variable x_j (1-based) as a degree-zero element."""
        return self.from_coeff(RatFn.var(j, self.v))

    def y(self, k: int) -> SkewElem:
        """Monoid unit d_k (1-based) with coefficient 1."""
        e = [0] * self.m
        e[k - 1] = 1
        return SkewElem(self, {tuple(e): RatFn.const(1, self.v)})


def _grlex(e: ExpVec):
    return (sum(e), e)


class SkewElem:
    """Immutable element of a twisted Laurent ring over a SkewSpec."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: SkewSpec, terms: dict, normalized: bool = False):
        if not normalized:
            clean = {}
            for e, f in terms.items():
                if len(e) != spec.m:
                    raise ValueError("monoid exponent length mismatch")
                vc = getattr(f, "varcount", None)
                if vc is not None and vc != spec.v:
                    raise ValueError("coefficient varcount mismatch")
                if not f.is_zero():
                    clean[tuple(e)] = f
            terms = clean
        self.spec = spec
        self.terms = terms

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SkewElem):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError("spec mismatch")
        out = dict(self.terms)
        for e, f in other.terms.items():
            if e in out:
                s = out[e] + f
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = f
        return SkewElem(self.spec, out, normalized=True)

    def __neg__(self):
        return SkewElem(self.spec, {e: -f for e, f in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        if not isinstance(other, SkewElem):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> SkewElem:
        """Left-multiply every coefficient by a scalar (RatFn, lifted as needed)."""
        out = {}
        for e, f in self.terms.items():
            g = c * f
            if not g.is_zero():
                out[e] = g
        return SkewElem(self.spec, out, normalized=True)

    # -- multiplication -------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, SkewElem):
            return skew_mul(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("general skew elements are not invertible")
        out = self.spec.one()
        for _ in range(k):
            out = skew_mul(out, self)
        return out

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, SkewElem):
            return NotImplemented
        if self.spec != other.spec:
            raise ValueError("spec mismatch")
        return elems_equal(self, other)

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "SkewElem(0)"
        parts = []
        for e in sorted(self.terms, key=_grlex):
            parts.append(f"({self.terms[e].text()})*d^{list(e)}")
        return "SkewElem(" + " + ".join(parts) + ")"

    # -- structure queries -------------------------------------------------------

    def y_degree(self, weights: tuple[int, ...] | None = None) -> int | None:
        """Common weighted monoid degree of all terms, or None if inhomogeneous.

        Raises on the zero element, whose degree is undefined.
        """
        if not self.terms:
            raise ValueError("y_degree of the zero element")
        if weights is None:
            weights = (1,) * self.spec.m
        if len(weights) != self.spec.m:
            raise ValueError("weight vector length mismatch")
        deg = None
        for e in self.terms:
            d = sum(w * b for w, b in zip(weights, e))
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def map_coefficients(self, fn) -> SkewElem:
        return SkewElem(self.spec, {e: fn(f) for e, f in self.terms.items()})

    # -- substitution ---------------------------------------------------------

    def substitute_base(
        self,
        target: SkewSpec,
        xmap: list[tuple[int, int, int]],
        ymap: list[tuple[int, int]] | None = None,
    ) -> SkewElem:
        """Push the element through x_j -> sign * x_sigma(j)^power, d_k -> sign * d_tau(k).

        xmap[j-1] = (sigma(j), power, sign); ymap[k-1] = (tau(k), sign) with
        1-based targets, identity when ymap is None.  The substitution must
        transport the commutation data: A[k][j] = power_j * A'[tau(k)][sigma(j)]
        for all k, j, which is validated before anything is computed.
        """
        spec = self.spec
        if len(xmap) != spec.v:
            raise ValueError("xmap length mismatch")
        if ymap is None:
            ymap = [(k + 1, 1) for k in range(spec.m)]
        if len(ymap) != spec.m:
            raise ValueError("ymap length mismatch")
        for k in range(spec.m):
            tk, _ = ymap[k]
            for j in range(spec.v):
                sj, pw, _ = xmap[j]
                if spec.rows[k][j] != pw * target.rows[tk - 1][sj - 1]:
                    raise ValueError(
                        "substitution is incompatible with the commutation data"
                    )
        out: dict = {}
        for e, f in self.terms.items():
            sign = 1
            ne = [0] * target.m
            for k, b in enumerate(e):
                tk, s = ymap[k]
                ne[tk - 1] += b
                if s < 0 and b % 2:
                    sign = -sign
            g = _substitute_coeff(f, target.v, xmap)
            if sign < 0:
                g = -g
            key = tuple(ne)
            if key in out:
                out[key] = out[key] + g
            else:
                out[key] = g
        return SkewElem(target, out)

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "terms": [
                {"exp": list(e), "coeff": self.terms[e].to_json()}
                for e in sorted(self.terms, key=_grlex)
            ],
        }


def _substitute_coeff(f, target_v: int, xmap):
    return f.substitute_monomials(target_v, xmap)


def make_element(spec: SkewSpec, terms) -> SkewElem:
    """Build an element from (exponent, coefficient) pairs, merging duplicates."""
    acc: dict = {}
    for e, f in terms:
        e = tuple(e)
        if len(e) != spec.m:
            raise ValueError("monoid exponent length mismatch")
        if e in acc:
            acc[e] = acc[e] + f
        else:
            acc[e] = f
    return SkewElem(spec, acc)


def skew_mul(a: SkewElem, b: SkewElem, opposite: bool = False) -> SkewElem:
    """Normal-form product; opposite=True computes b*a instead."""
    if a.spec != b.spec:
        raise ValueError("spec mismatch")
    if opposite:
        return skew_mul(b, a, False)
    spec = a.spec
    buckets: dict = {}
    shifted_cache: dict = {}
    for beta, f in a.terms.items():
        shift = spec.shift_for(beta)
        shifted = shifted_cache.get(shift)
        if shifted is None:
            if any(shift):
                shifted = [(g_, c.qshift(shift)) for g_, c in b.terms.items()]
            else:
                shifted = list(b.terms.items())
            shifted_cache[shift] = shifted
        for gamma, g in shifted:
            e = tuple(x + y for x, y in zip(beta, gamma))
            buckets.setdefault(e, []).append(f * g)
    out = {e: _sum_coeffs(vals) for e, vals in buckets.items()}
    return SkewElem(spec, out)


def _sum_coeffs(vals: list):
    if len(vals) == 1:
        return vals[0]
    if isinstance(vals[0], RatFn):
        from .scalars import rat_sum

        return rat_sum(vals)
    total = vals[0]
    for v in vals[1:]:
        total = total + v
    return total


def skew_linear(op: str, a: SkewElem, b=None) -> SkewElem:
    """Componentwise linear operations: add, sub, neg, scale."""
    if op == "neg":
        return -a
    if op == "scale":
        return a.scale(b)
    if not isinstance(b, SkewElem):
        raise ValueError("second operand must be a SkewElem")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def elems_equal(a: SkewElem, b: SkewElem) -> bool:
    """Termwise equality; in sampled mode this compares base-point evaluations."""
    keys = set(a.terms) | set(b.terms)
    for e in keys:
        fa = a.terms.get(e)
        fb = b.terms.get(e)
        if fa is None:
            if not fb.vanishes_at_base():
                return False
        elif fb is None:
            if not fa.vanishes_at_base():
                return False
        elif not (fa - fb).vanishes_at_base():
            return False
    return True


def commutator(a: SkewElem, b: SkewElem, qpower=None) -> SkewElem:
    """[a, b]_{qpower} = a*b - qpower * b*a (plain commutator when qpower is None)."""
    ab = skew_mul(a, b)
    ba = skew_mul(b, a)
    if qpower is not None:
        ba = ba.scale(qpower)
    return ab - ba
