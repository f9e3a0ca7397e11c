"""Numeric Schottky model used to cross-check the combinatorics.

Generators are real SL(2, R) matrices acting on the upper half-plane, viewed in
the disk through the Cayley map z -> (z - i)/(z + i). Each generator e is the
product of the reflection in the side s_e of the Dirichlet domain at O with the
reflection in the diameter that swaps s_e and s_{e^-1}; then e(O) is the mirror
image of O in s_e, so s_e is the perpendicular bisector of [O, e(O)] and D(e)
is the disk cap it cuts off.

Endpoints of distinct lifts of a word of length L can be e^(-2 L lambda) apart,
far below double precision, so everything runs in mpmath at ``DPS`` digits.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import mpmath

from .chart import PeriodicWord, SurfaceKind
from .errors import BoundaryAmbiguityError, ConfigInvalidError, ConvergenceError, NonPrimitiveError
from .words import CHARS, CyclicWord, inverse_text, is_primitive

DPS = 60
EPS = 1e-9
DET_TOL = 1e-12
LIMIT_TOL = 1e-10

ctx = mpmath.MPContext()
ctx.dps = DPS

# cap centers in degrees, counterclockwise; deliberately not symmetric so that
# crossings of lifts do not land on the sides of P
CENTERS = {
    SurfaceKind.torus: {"a": 0, "B": 97, "A": 181, "b": 263},
    SurfaceKind.pants: {"a": 0, "B": 95, "b": 188, "A": 271},
}

DEFAULT_LAMBDAS = (3.7, 4.3)


class NearTangencyWarning(UserWarning):
    pass


def to_disk(z):
    if z == ctx.inf:
        return ctx.mpc(1)
    return (z - ctx.j) / (z + ctx.j)


def to_uhp(w):
    return ctx.j * (1 + w) / (1 - w)


def boundary_angle(x) -> mpmath.mpf:
    """Disk angle in [0, 2pi) of a real boundary point x (or infinity) of the half-plane."""
    if x == ctx.inf:
        return ctx.mpf(0)
    return ctx.atan2(-2 * x, x * x - 1) % (2 * ctx.pi)


@dataclass(frozen=True)
class Mobius:
    """z -> (a z + b)/(c z + d) on the upper half-plane, ad - bc = 1."""

    a: mpmath.mpf
    b: mpmath.mpf
    c: mpmath.mpf
    d: mpmath.mpf

    @classmethod
    def normalized(cls, a, b, c, d) -> "Mobius":
        det = a * d - b * c
        if det <= 0:
            raise ValueError("matrix must have positive determinant")
        s = ctx.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(ctx.mpf(1), ctx.mpf(0), ctx.mpf(0), ctx.mpf(1))

    def __matmul__(self, o: "Mobius") -> "Mobius":
        return Mobius.normalized(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    @property
    def translation_length(self):
        t = abs(self.trace) / 2
        return 2 * ctx.acosh(t) if t > 1 else ctx.mpf(0)

    def __call__(self, z):
        if z == ctx.inf:
            return self.a / self.c if self.c != 0 else ctx.inf
        den = self.c * z + self.d
        if den == 0:
            return ctx.inf
        return (self.a * z + self.b) / den

    def on_disk(self, w):
        return to_disk(self(to_uhp(w)))

    def power(self, n: int) -> "Mobius":
        out = Mobius.identity()
        base = self
        while True:
            if n & 1:
                out = out @ base
            n >>= 1
            if not n:
                return out
            base = base @ base

    def fixed_points(self):
        """(repelling, attracting) boundary points on the real line (or inf)."""
        a, b, c, d = self.a, self.b, self.c, self.d
        disc = (a + d) ** 2 - 4
        if disc <= 0:
            raise ValueError("not hyperbolic")
        if c == 0:
            x = b / (d - a)
            return (x, ctx.inf) if abs(a) > abs(d) else (ctx.inf, x)
        r = ctx.sqrt(disc)
        x1 = (a - d + r) / (2 * c)
        x2 = (a - d - r) / (2 * c)
        if abs(c * x1 + d) > abs(c * x2 + d):
            return x2, x1
        return x1, x2


@dataclass(frozen=True)
class DiskPoint:
    """A point of the closed disk; ideal points are on the unit circle."""

    z: mpmath.mpc
    ideal: bool = False

    @classmethod
    def from_angle(cls, theta) -> "DiskPoint":
        return cls(ctx.expjpi(theta / ctx.pi), True)

    @property
    def angle(self):
        return ctx.arg(self.z) % (2 * ctx.pi)

    @property
    def xy(self) -> tuple[float, float]:
        return float(self.z.real), float(self.z.imag)


ORIGIN = DiskPoint(ctx.mpc(0))


@dataclass(frozen=True)
class SchottkyConfig:
    kind: SurfaceKind
    generators: dict
    lambdas: tuple[float, float]
    centers: dict
    half_widths: dict
    anchor: mpmath.mpf
    images_of_origin: dict = field(repr=False)

    def __getitem__(self, e: str) -> Mobius:
        return self.generators[e]

    def word_matrix(self, s: str) -> Mobius:
        m = Mobius.identity()
        for c in s:
            m = m @ self.generators[c]
        return m


def _short_half_gap(phi, phib):
    d = (phib - phi + ctx.pi) % (2 * ctx.pi) - ctx.pi
    if abs(abs(d) - ctx.pi) < ctx.mpf(10) ** (-DPS // 2):
        d = ctx.pi
    return d / 2


def _disk_generator(phi, phib, alpha) -> Mobius:
    """Reflection in the cap of half-width alpha at phi, after the swapping reflection."""
    half = _short_half_gap(phi, phib)
    psi = phi + half
    c = ctx.expj(phi) / ctx.cos(alpha)
    # z -> c + r^2/(conj(z) - conj(c)) is (c zbar - 1)/(zbar - cbar) since |c|^2 - r^2 = 1
    s11, s12, s21, s22 = c, ctx.mpc(-1), ctx.mpc(1), -ctx.conj(c)
    m11, m22 = ctx.expj(-psi), ctx.expj(psi)
    d11, d12, d21, d22 = s11 * m11, s12 * m22, s21 * m11, s22 * m22
    # conjugate into the half-plane: H = C^-1 D C, C = [[1, -i], [1, i]], C^-1 ~ [[i, i], [-1, 1]]
    i = ctx.j
    t11, t12 = d11 + d12, -i * d11 + i * d12
    t21, t22 = d21 + d22, -i * d21 + i * d22
    h11 = i * t11 + i * t21
    h12 = i * t12 + i * t22
    h21 = -t11 + t21
    h22 = -t12 + t22
    det = h11 * h22 - h12 * h21
    s = ctx.sqrt(det)
    h = [h11 / s, h12 / s, h21 / s, h22 / s]
    if max(abs(x.imag) for x in h) > ctx.mpf(10) ** (-DPS // 2):
        raise AssertionError("half-plane generator is not real")
    return Mobius(*(x.real for x in h))


def _solve_half_width(phi, phib, lam) -> mpmath.mpf:
    half = abs(_short_half_gap(phi, phib))
    hi = half * (1 - ctx.mpf(10) ** -12)
    lo = ctx.mpf(10) ** -12
    target = ctx.mpf(lam)

    def f(al):
        return _disk_generator(phi, phib, al).translation_length - target

    if f(lo) < 0 or f(hi) > 0:
        raise ConfigInvalidError(f"translation length {lam} is not realizable")
    for _ in range(200):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < ctx.mpf(10) ** (-DPS + 10):
            break
    return (lo + hi) / 2


def standard_config(kind, lam_a: float = DEFAULT_LAMBDAS[0], lam_b: float = DEFAULT_LAMBDAS[1]) -> SchottkyConfig:
    kind = SurfaceKind.parse(kind)
    if lam_a <= 0 or lam_b <= 0:
        raise ConfigInvalidError("translation lengths must be positive")
    centers = {e: ctx.radians(v) for e, v in CENTERS[kind].items()}
    gens, widths = {}, {}
    for e, lam in (("a", lam_a), ("b", lam_b)):
        E = inverse_text(e)
        alpha = _solve_half_width(centers[e], centers[E], lam)
        widths[e] = widths[E] = alpha
        gens[e] = _disk_generator(centers[e], centers[E], alpha)
        gens[E] = _disk_generator(centers[E], centers[e], alpha)
    _check_disjoint(centers, widths)
    arr = kind.arrangement
    last = arr[-1]
    gap = (centers["a"] - widths["a"]) - (centers[last] + widths[last])
    anchor = (centers[last] + widths[last] + (gap % (2 * ctx.pi)) / 2) % (2 * ctx.pi)
    origin_images = {e: g.on_disk(ctx.mpc(0)) for e, g in gens.items()}
    cfg = SchottkyConfig(kind, gens, (float(lam_a), float(lam_b)), centers, widths, anchor, origin_images)
    for e in CHARS:
        g = gens[e]
        if abs(g.det - 1) > DET_TOL:
            raise ConfigInvalidError(f"generator {e} lost determinant normalization")
        if abs(g.trace) <= 2:
            raise ConfigInvalidError(f"generator {e} is not hyperbolic")
    return cfg


def _check_disjoint(centers, widths) -> None:
    order = sorted(centers, key=lambda e: centers[e])
    for k, e in enumerate(order):
        f = order[(k + 1) % len(order)]
        gap = (centers[f] - centers[e]) % (2 * ctx.pi)
        if widths[e] + widths[f] >= gap:
            raise ConfigInvalidError(f"half-spaces D({e}) and D({f}) overlap")


def hyperbolic_distance(z, w):
    num = 2 * abs(z - w) ** 2
    den = (1 - abs(z) ** 2) * (1 - abs(w) ** 2)
    return ctx.acosh(1 + num / den)


def _as_z(z):
    return z.z if isinstance(z, DiskPoint) else ctx.mpc(z)


def half_space_margin(cfg: SchottkyConfig, e: str, z) -> mpmath.mpf:
    """d(z, O) - d(z, e(O)): positive inside D(e)."""
    z = _as_z(z)
    return hyperbolic_distance(z, ctx.mpc(0)) - hyperbolic_distance(z, cfg.images_of_origin[e])


def half_space_contains(cfg: SchottkyConfig, e: str, z) -> bool:
    return half_space_margin(cfg, e, z) > ctx.mpf(10) ** (-DPS // 2)


def in_fundamental_domain(cfg: SchottkyConfig, z) -> bool:
    return not any(half_space_contains(cfg, e, z) for e in CHARS)


def _fixed_angle(m: Mobius):
    return boundary_angle(m.fixed_points()[1])


def limit_point(cfg: SchottkyConfig, u, check: bool = True) -> DiskPoint:
    """Attracting fixed point of the period of u, i.e. lim e_0 ... e_n (O)."""
    period = u.period if isinstance(u, PeriodicWord) else str(u)
    m = cfg.word_matrix(period)
    theta = _fixed_angle(m)
    pt = DiskPoint.from_angle(theta)
    if check:
        reps = max(2, int(math.ceil(50 / (len(period) * min(cfg.lambdas)))))
        approx = m.power(reps).on_disk(ctx.mpc(0))
        if abs(approx - pt.z) > LIMIT_TOL:
            raise ConvergenceError(f"limit of {period!r} disagrees with its fixed point")
    return pt


def axis(cfg: SchottkyConfig, w, check: bool = False) -> tuple[DiskPoint, DiskPoint]:
    """(backward, forward) ideal endpoints of the axis of w."""
    s = w.text if isinstance(w, CyclicWord) else str(w)
    m = cfg.word_matrix(s)
    rep, att = m.fixed_points()
    out = (DiskPoint.from_angle(boundary_angle(rep)), DiskPoint.from_angle(boundary_angle(att)))
    if check:
        limit_point(cfg, PeriodicWord(s))
        limit_point(cfg, PeriodicWord(inverse_text(s)))
    return out


def _ccw(a, b):
    return (b - a) % (2 * ctx.pi)


def separates(g1, g2) -> bool:
    t1, t2 = g1[0].angle, g1[1].angle
    span = _ccw(t1, t2)
    inside = [0 < _ccw(t1, p.angle) < span for p in g2]
    return inside[0] != inside[1]


def geodesic_intersection(g1, g2) -> DiskPoint | None:
    """Crossing point of two geodesics given by ideal endpoints, or None."""
    if not separates(g1, g2):
        return None
    sep = min(abs(ctx.arg(p.z / q.z)) for p in g1 for q in g2)
    if sep < EPS:
        warnings.warn(f"feet within {float(sep):.3g} rad", NearTangencyWarning, stacklevel=2)
    # chords in the Klein model, then back to the Poincare disk
    p1, p2 = g1[0].z, g1[1].z
    q1, q2 = g2[0].z, g2[1].z
    dp, dq, r = p2 - p1, q2 - q1, q1 - p1
    den = dp.real * (-dq.imag) - dp.imag * (-dq.real)
    s = (r.real * (-dq.imag) - r.imag * (-dq.real)) / den
    k = p1 + s * dp
    return DiskPoint(k / (1 + ctx.sqrt(1 - abs(k) ** 2)))


def lift_axes(cfg: SchottkyConfig, w: CyclicWord) -> list[tuple[DiskPoint, DiskPoint]]:
    s = w.text
    return [axis(cfg, s[i:] + s[:i]) for i in range(len(s))]


def crossings(cfg: SchottkyConfig, w: CyclicWord):
    """Yield (i, j, point, inside_P) over crossing pairs of lifts, 1-based.

    Raises BoundaryAmbiguityError when a crossing is within EPS of a side of P.
    """
    axes = lift_axes(cfg, w)
    for i in range(len(axes)):
        for j in range(i + 1, len(axes)):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", NearTangencyWarning)
                z = geodesic_intersection(axes[i], axes[j])
            if z is None:
                continue
            margins = [half_space_margin(cfg, e, z) for e in CHARS]
            if min(abs(m) for m in margins) < EPS:
                raise BoundaryAmbiguityError(f"crossing of lifts {i + 1}, {j + 1} of {w.text!r} is on the boundary of P")
            yield i + 1, j + 1, z, all(m < 0 for m in margins)


def numeric_self_intersection(cfg: SchottkyConfig, w: CyclicWord) -> int:
    if not is_primitive(w):
        raise NonPrimitiveError(f"{w.text!r} is a proper power")
    return sum(1 for *_, inside in crossings(cfg, w) if inside)


def tile_of(cfg: SchottkyConfig, z, max_steps: int = 500) -> str:
    """Word g with z in g . P, found by pulling z back through the half-spaces."""
    z = _as_z(z)
    g = []
    for _ in range(max_steps):
        margins = [(half_space_margin(cfg, e, z), e) for e in CHARS]
        m, e = max(margins)
        if m <= 0:
            return "".join(g)
        z = cfg.generators[inverse_text(e)].on_disk(z)
        g.append(e)
    raise ConvergenceError("tile search did not terminate")


def geodesic_point(g, s):
    """Point at signed arclength s from the foot of the perpendicular from O."""
    minus, plus = g
    t1, t2 = minus.angle, plus.angle
    delta = _ccw(t1, t2)
    if delta > ctx.pi:
        mid = t2 + (2 * ctx.pi - delta) / 2
        delta = 2 * ctx.pi - delta
        direction = ctx.expj(mid - ctx.pi / 2)
    else:
        mid = t1 + delta / 2
        direction = ctx.expj(mid + ctx.pi / 2)
    foot = ctx.tan(ctx.pi / 4 - delta / 4) * ctx.expj(mid)
    # translate the diameter through O perpendicular to the foot direction onto the geodesic
    v = ctx.tanh(ctx.mpf(s) / 2) * direction
    return (v + foot) / (1 + ctx.conj(foot) * v)


def tiles_along(cfg: SchottkyConfig, g, s_values) -> list[str]:
    """Consecutive distinct tiles crossed by a geodesic at the sampled arclengths."""
    out: list[str] = []
    for s in s_values:
        t = tile_of(cfg, geodesic_point(g, s))
        if not out or out[-1] != t:
            out.append(t)
    return out
