"""Random-evaluation mode: exact rational sampling of q-shift lattices.

Identity checking by evaluation has a twist here: multiplying past a monoid
unit substitutes x_j -> q^a x_j, so a coefficient's value is needed not just
at the sample point (q0, x0) but on the whole lattice of q-power shifts of
x0.  A SampleRat therefore represents a coefficient extensionally, as a
memoized map  shift vector c  ->  value at (q0, q0^c * x0),  built up as a
closure tree by the same ring operations the symbolic engine uses.  The
final equality test evaluates at the base point c = 0; the base point is
already random, so this is ordinary polynomial identity testing with exact
Fraction arithmetic (agreement is probabilistic evidence, disagreement is a
definitive failure).

Coefficients are never dropped as "zero" during sampled arithmetic: a value
vanishing at the base point need not vanish on the rest of the lattice, so
is_zero() always answers False and only vanishes_at_base() consults the
sample.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction

from .scalars import RatFn
from .skewring import SkewElem, SkewSpec

MAX_MAGNITUDE = 10**6


class ResampleNeeded(RuntimeError):
    """A denominator vanished at the sample point; draw a fresh point."""


class SampleContext:
    """A single exact sample point (q0, x0) shared by a family of SampleRats."""

    __slots__ = ("qval", "xvals", "v", "_qpows")

    def __init__(self, qval: Fraction, xvals: tuple[Fraction, ...]):
        if qval == 0 or abs(qval) == 1:
            raise ValueError("q sample must avoid 0 and roots of unity")
        self.qval = qval
        self.xvals = xvals
        self.v = len(xvals)
        self._qpows: dict[int, Fraction] = {0: Fraction(1), 1: qval}

    def qpow(self, k: int) -> Fraction:
        out = self._qpows.get(k)
        if out is None:
            out = self.qval**k
            self._qpows[k] = out
        return out

    def point(self, shift: tuple[int, ...]) -> tuple[Fraction, ...]:
        return tuple(x * self.qpow(c) for x, c in zip(self.xvals, shift))


def sample_context(v: int, rng: random.Random) -> SampleContext:
    def frac() -> Fraction:
        num = rng.randint(1, MAX_MAGNITUDE) * rng.choice((1, -1))
        den = rng.randint(1, MAX_MAGNITUDE)
        return Fraction(num, den)

    while True:
        q0 = frac()
        if q0 != 0 and abs(q0) != 1:
            break
    return SampleContext(q0, tuple(frac() for _ in range(v)))


class SampleRat:
    """A coefficient known through lattice evaluations; same surface as RatFn."""

    __slots__ = ("ctx", "varcount", "_fn", "_memo")

    def __init__(self, ctx: SampleContext, fn):
        self.ctx = ctx
        self.varcount = ctx.v
        self._fn = fn
        self._memo: dict[tuple, Fraction] = {}

    def eval(self, shift: tuple[int, ...]) -> Fraction:
        out = self._memo.get(shift)
        if out is None:
            out = self._fn(shift)
            self._memo[shift] = out
        return out

    @classmethod
    def from_rat(cls, ctx: SampleContext, rat: RatFn) -> SampleRat:
        rat = rat.lift(ctx.v) if rat.varcount != ctx.v else rat

        def fn(shift):
            try:
                return rat.eval_at(ctx.qval, ctx.point(shift))
            except ZeroDivisionError as exc:
                raise ResampleNeeded(str(exc)) from exc

        return cls(ctx, fn)

    def _coerce(self, other) -> SampleRat | None:
        if isinstance(other, SampleRat):
            return other
        if isinstance(other, RatFn):
            return SampleRat.from_rat(self.ctx, other)
        if isinstance(other, (int, Fraction)):
            val = Fraction(other)
            return SampleRat(self.ctx, lambda shift: val)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SampleRat(self.ctx, lambda c: self.eval(c) + other.eval(c))

    __radd__ = __add__

    def __neg__(self):
        return SampleRat(self.ctx, lambda c: -self.eval(c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SampleRat(self.ctx, lambda c: self.eval(c) - other.eval(c))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SampleRat(self.ctx, lambda c: other.eval(c) - self.eval(c))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return SampleRat(self.ctx, lambda c: self.eval(c) * other.eval(c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        def fn(c):
            d = other.eval(c)
            if d == 0:
                raise ResampleNeeded("division by a coefficient vanishing at sample")
            return self.eval(c) / d

        return SampleRat(self.ctx, fn)

    def __pow__(self, k: int):
        return SampleRat(self.ctx, lambda c: self.eval(c) ** k)

    def qshift(self, alpha: tuple[int, ...]) -> SampleRat:
        alpha = tuple(alpha)
        return SampleRat(
            self.ctx, lambda c: self.eval(tuple(x + a for x, a in zip(c, alpha)))
        )

    def relabel(self, perm, signs) -> SampleRat:
        """x_i -> (-1)^signs[i] x_{perm(i)}: evaluate at the permuted point."""
        raise NotImplementedError("group actions run in symbolic mode only")

    # term-dropping must never consult the sample; see module docstring
    def is_zero(self) -> bool:
        return False

    def vanishes_at_base(self) -> bool:
        return self.eval((0,) * self.varcount) == 0

    def text(self) -> str:
        return f"<sampled:{self.vanishes_at_base() and '0' or '?'}>"


def sampled_spec_element(ctx: SampleContext, elem: SkewElem) -> SkewElem:
    return elem.map_coefficients(lambda f: SampleRat.from_rat(ctx, f))


class SampledNoetherData:
    """Drop-in for NoetherData with coefficients bound to a sample point."""

    def __init__(self, n: int, ctx: SampleContext, need_levels: bool):
        from . import noether

        self.n = n
        self.ctx = ctx
        self.spec = SkewSpec.diagonal(n)
        self.aseq = noether.aseq(max(n, 1))
        levels = {}
        for k in range(n + 1):
            levels[(0, k)] = sampled_spec_element(ctx, noether.elem_sym(n, k))
        for k, t in enumerate(noether.t_gens(n)):
            levels[(1, k)] = sampled_spec_element(ctx, t)
        if need_levels:
            for i in range(2, n + 1):
                for k in range(n - i + 1):
                    levels[(i, k)] = noether._eki(levels, n, i, k)
        self.levels = levels
        if need_levels:
            self.X = tuple(levels[(i - 1, n - i + 1)] for i in range(1, n + 1))
            self.Y = tuple(levels[(i, 0)] for i in range(1, n + 1))

    def q(self, k: int = 1) -> RatFn:
        return RatFn.qpow(k)

    def level(self, i: int, k: int) -> SkewElem:
        if (i, k) in self.levels:
            return self.levels[(i, k)]
        return self.spec.zero()

    def xvar(self, r: int) -> SkewElem:
        return sampled_spec_element(self.ctx, self.spec.x(r))


def sampled_noether_data(
    n: int, seed: int, trial: int, salt: int = 0, need_levels: bool = False
) -> SampledNoetherData:
    rng = random.Random((seed, trial, salt))
    ctx = sample_context(n, rng)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    return SampledNoetherData(n, ctx, need_levels)


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(1, MAX_MAGNITUDE) * rng.choice((1, -1)), rng.randint(1, MAX_MAGNITUDE)
    )
