"""Construction of t-spread strongly stable ideals with maximally many corners.

Everything here is driven by the decomposition n = d + k*t with 1 <= d <= t.
Writing l1 for the initial degree, the witness ideal is the Borel closure of
a short list of monomials, one per degree from l1 upward:

* the starter  x_1 x_{1+t} ... x_{1+(l1-2)t} x_n  (just x_1 x_n for l1 = 2);
* "forward" monomials, each obtained from its predecessor by advancing the
  penultimate variable and appending a new one t further along;
* possibly a "critic" monomial, where advancement is no longer possible and
  an internal block snaps to the arithmetic progression x_{d+it}, and after
  it "backward" monomials that shift that block back by t at each step.

The closed forms for how many monomials exist (and hence how many corners an
ideal of initial degree l1 in n variables can carry) are wrapped by
:func:`max_corners`; :func:`build_omegas` materializes the list and
:func:`construct_extremal_ideal` assembles and self-verifies the ideal.
:func:`omega_claim_check` re-derives the whole list by explicit search,
independently of the closed forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .betti import CornerSequence
from .errors import (
    ConstructionInapplicableError,
    InvalidMonomialError,
    InvariantViolationError,
    NotTSpreadError,
)
from .ideals import SpreadIdeal
from .monomials import Context, Monomial, format_monomial, is_t_spread


@dataclass(frozen=True)
class Decomposition:
    """The unique writing n = d + k*t with 1 <= d <= t."""

    d: int
    k: int


def decompose(n: int, t: int) -> Decomposition:
    """Decompose n with respect to t: n = d + k*t, 1 <= d <= t."""
    if t <= 0:
        raise ValueError(f"spread t must be positive, got {t}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = (n - 1) % t + 1
    return Decomposition(d, (n - d) // t)


def slex_successor_with_max_n(u: Monomial, ctx: Context) -> Monomial | None:
    """Largest t-spread v of the same degree with max(v) = n and u > v in slex.

    Returns None when u is already the smallest such monomial (all gaps
    exactly t), in which case B_t(u) is the t-spread Veronese ideal of its
    degree.  Otherwise, with p the last position whose gap exceeds t, the
    successor keeps u up to position p-1, bumps position p by one, continues
    in steps of t, and ends at n.
    """
    n, t = ctx.n_vars, ctx.spread_t
    if not is_t_spread(u, ctx):
        raise NotTSpreadError(f"{format_monomial(u)} is not {t}-spread")
    if not u or u[-1] != n:
        raise InvalidMonomialError(f"max({format_monomial(u)}) != {n}")
    d = len(u)
    wide = [a for a in range(d - 1) if u[a + 1] - u[a] > t]
    if not wide:
        return None
    p = wide[-1]
    v = u[:p] + tuple(u[p] + 1 + m * t for m in range(d - 1 - p)) + (n,)
    if not is_t_spread(v, ctx):
        raise InvariantViolationError(f"successor of {u} is not t-spread: {v}")
    return v


def j_max(n: int, t: int, ell1: int = 2) -> int:
    """Index of the last forward monomial.

    floor(n / (1+t)) - 1 in initial degree two; in general the numerator is
    reduced by (l1 - 2)t.
    """
    return (n - (ell1 - 2) * t) // (1 + t) - 1


def s_value(n: int, t: int, ell1: int = 2) -> int:
    """2t minus the gap between the last two variables of the final forward
    monomial; controls whether the critic monomial exists."""
    return 2 * t - n + j_max(n, t, ell1) * (1 + t) + 1 + (ell1 - 2) * t


def nu_max(n: int, t: int, ell1: int = 2) -> int:
    """Number of backward monomials (may be negative: none, and no critic).

    Initial degree two uses floor((d-3)/t) + k - 2 - j_max; higher initial
    degrees use floor((d-2)/t) + k - 2 - j_max - (l1 - 2).  The two branches
    are kept verbatim; they are not unifiable.
    """
    dec = decompose(n, t)
    jm = j_max(n, t, ell1)
    if ell1 == 2:
        return (dec.d - 3) // t + dec.k - 2 - jm
    return (dec.d - 2) // t + dec.k - 2 - jm - (ell1 - 2)


def max_corners(n: int, t: int, ell1: int) -> int | None:
    """Maximal number of corners of an ideal of initial degree l1, or None.

    None encodes inapplicability: no t-spread monomial of degree l1 at all,
    or (for l1 >= 3) no possible corner of positive homological index in
    degree l1, i.e. l1 > k + floor((d-2)/t) + 1.

    For l1 = 2 the bound is k + floor((d-3)/t) when k >= 3; the k = 1, 2
    values come from the small-k analysis (a single corner, except two when
    k = 2 and d >= 2).  For l1 >= 3 the bound is
    k + floor((d-2)/t) - (l1 - 2) whenever l1 lies in range; the k = 2 cells
    are covered by the same expression (corroborated by the brute-force
    oracle).
    """
    if t < 2 or ell1 < 2 or n < 1:
        return None
    dec = decompose(n, t)
    d, k = dec.d, dec.k
    if ell1 == 2:
        if k == 0:
            return None  # n <= t: no t-spread monomial of degree 2
        if k == 1:
            return 1
        if k == 2:
            return 1 if d == 1 else 2
        return k + (d - 3) // t
    if ell1 > k + (d - 2) // t + 1:
        return None
    return k + (d - 2) // t - (ell1 - 2)


@dataclass(frozen=True)
class ConstructionReport:
    """Everything the construction decided: parameters, monomials, corners."""

    ctx: Context
    ell1: int
    decomp: Decomposition
    j_max: int
    s: int
    nu_max: int
    omegas: tuple[Monomial, ...]
    predicted_corners: CornerSequence
    total: int
    regime: str  # "general" (k >= 3) or "small-k"
    critic_index: int | None  # position of the critic monomial, if any

    def to_json(self) -> str:
        payload = {
            "n": self.ctx.n_vars,
            "t": self.ctx.spread_t,
            "ell1": self.ell1,
            "d": self.decomp.d,
            "k": self.decomp.k,
            "j_max": self.j_max,
            "s": self.s,
            "nu_max": self.nu_max,
            "omegas": [list(u) for u in self.omegas],
            "corners": [list(c) for c in self.predicted_corners.corners],
            "total": self.total,
            "regime": self.regime,
            "critic_index": self.critic_index,
        }
        return json.dumps(payload)


def build_omegas(n: int, t: int, ell1: int) -> ConstructionReport:
    """Materialize the corner-witness monomials for (n, t, l1).

    Raises ConstructionInapplicableError, naming the failing condition, when
    (n, t, l1) lies outside the construction's hypotheses (see
    :func:`max_corners`).
    """
    if t < 2:
        raise ConstructionInapplicableError(
            f"construction requires t >= 2, got t={t}", reason="t < 2"
        )
    if ell1 < 2:
        raise ConstructionInapplicableError(
            f"initial degree must be >= 2, got {ell1}", reason="ell1 < 2"
        )
    expected = max_corners(n, t, ell1)
    dec = decompose(n, t)
    d, k = dec.d, dec.k
    if expected is None:
        if ell1 == 2 or n < (ell1 - 1) * t + 1:
            reason = f"no {t}-spread monomial of degree {ell1} in {n} variables"
        else:
            reason = (
                f"initial degree {ell1} exceeds k + floor((d-2)/t) + 1 = "
                f"{k + (d - 2) // t + 1}"
            )
        raise ConstructionInapplicableError(
            f"no construction for n={n}, t={t}, ell1={ell1}: {reason}",
            reason=reason,
        )

    ctx = Context(n, t)
    jm = j_max(n, t, ell1)
    s = s_value(n, t, ell1)
    nm = nu_max(n, t, ell1)

    omegas: list[Monomial] = [tuple(1 + i * t for i in range(ell1 - 1)) + (n,)]
    head = tuple(1 + i * t for i in range(ell1 - 2))
    for j in range(1, jm + 1):
        body = tuple(2 + i + (ell1 - 2 + i) * t for i in range(j))
        omegas.append(head + body + ((j + 1) + (ell1 - 2 + j) * t, n))

    critic_index = None
    if nm >= 0:
        critic_index = jm + 1
        last_forward = omegas[-1]
        keep_base = jm - 2 - s if ell1 == 2 else jm + ell1 - 4 - s
        for nu in range(nm + 1):
            keep = keep_base - nu * t
            lo = k - 4 - s - nu * (1 + t)
            block = tuple(d + i * t for i in range(lo, k + 1))
            omegas.append(last_forward[:keep] + block)

    for j, w in enumerate(omegas):
        if len(w) != ell1 + j or w[-1] != n or not is_t_spread(w, ctx):
            raise InvariantViolationError(
                f"malformed witness monomial #{j} for (n={n}, t={t}, "
                f"ell1={ell1}): {w}"
            )
    if len(omegas) != expected:
        raise InvariantViolationError(
            f"built {len(omegas)} monomials for (n={n}, t={t}, ell1={ell1}), "
            f"expected {expected}"
        )

    corners = tuple(
        (n - t * (ell - 1) - 1, ell) for ell in range(ell1, ell1 + expected)
    )
    return ConstructionReport(
        ctx=ctx,
        ell1=ell1,
        decomp=dec,
        j_max=jm,
        s=s,
        nu_max=nm,
        omegas=tuple(omegas),
        predicted_corners=CornerSequence(corners, (1,) * expected),
        total=expected,
        regime="general" if k >= 3 else "small-k",
        critic_index=critic_index,
    )


def _minimal_generators(omegas, ctx: Context, ell1: int) -> dict[int, tuple[Monomial, ...]]:
    """Minimal generators of B_t(omegas), one search per degree.

    A monomial belongs to the degree-(l1+j) generators iff it is dominated
    componentwise by omega_j and its length-(l1+i) prefix escapes domination
    by omega_i for every i < j (escaping prefix domination is exactly not
    being a multiple of anything in lower degrees).  The search never
    materializes the per-degree closures, whose size grows exponentially.
    """
    n, t = ctx.n_vars, ctx.spread_t
    gens: dict[int, tuple[Monomial, ...]] = {}
    for j, w in enumerate(omegas):
        deg = ell1 + j
        earlier = omegas[:j]
        found: list[Monomial] = []
        u = [0] * deg

        def rec(p: int, pending: tuple[int, ...]) -> None:
            if p == deg:
                found.append(tuple(u))
                return
            lo = u[p - 1] + t if p else 1
            hi = min(w[p], n - t * (deg - 1 - p))
            for v in range(lo, hi + 1):
                u[p] = v
                nxt = []
                dead = False
                for i in pending:
                    if v > earlier[i][p]:
                        continue  # prefix-domination broken: constraint met
                    if len(earlier[i]) == p + 1:
                        dead = True  # whole prefix dominated: u is a multiple
                        break
                    nxt.append(i)
                if not dead:
                    rec(p + 1, tuple(nxt))

        rec(0, tuple(range(j)))
        if found:
            gens[deg] = tuple(found)  # ascending tuple order = slex-descending
    return gens


def construct_extremal_ideal(n: int, t: int, ell1: int) -> tuple[SpreadIdeal, ConstructionReport]:
    """Build the witness ideal B_t(omegas) and verify its corners.

    The returned ideal attains :func:`max_corners` corners, at positions
    (n - t(l-1) - 1, l) for l = l1, ..., l1 + total - 1, each of value 1.
    The corner sequence is recomputed from the assembled generators and
    compared against the prediction; a mismatch raises
    InvariantViolationError (it indicates a bug, not bad input).  Stability
    of the result is by construction (it is a Borel closure), so the
    recomputation skips the redundant stability check.
    """
    from .betti import corners_via_characterization

    report = build_omegas(n, t, ell1)
    gens = _minimal_generators(report.omegas, report.ctx, ell1)
    ideal = SpreadIdeal(report.ctx, gens)
    got = corners_via_characterization(ideal, check_stability=False)
    if got != report.predicted_corners:
        raise InvariantViolationError(
            f"corner verification failed for (n={n}, t={t}, ell1={ell1}): "
            f"predicted {report.predicted_corners}, recomputed {got}"
        )
    return ideal, report


def _max_excluded(n: int, t: int, deg: int, earlier) -> Monomial | None:
    """slex-max of { u in M_{n,deg,t} : max(u) = n, u escapes prefix
    domination by every monomial in `earlier` }, or None if the set is empty.

    Direct lexicographic search; knows nothing of the closed forms.
    """
    if deg < 1 or 1 + t * (deg - 1) > n:
        return None
    if deg == 1:
        u1 = (n,)
        return u1 if not earlier else None
    u = [0] * deg
    u[-1] = n

    def rec(p: int, pending: tuple[int, ...]) -> Monomial | None:
        if p == deg - 1:
            return tuple(u) if not pending else None
        lo = u[p - 1] + t if p else 1
        hi = n - t * (deg - 1 - p)
        for v in range(lo, hi + 1):
            u[p] = v
            nxt = []
            dead = False
            for i in pending:
                wi = earlier[i]
                if v > wi[p]:
                    continue
                if len(wi) == p + 1:
                    dead = True
                    break
                nxt.append(i)
            if dead:
                continue
            r = rec(p + 1, tuple(nxt))
            if r is not None:
                return r
        return None

    return rec(0, tuple(range(len(earlier))))


def omega_claim_check(omegas, ctx: Context, ell1: int) -> bool:
    """Independently verify the defining property of the witness monomials.

    For each j >= 1, the set of degree-(l1+j) monomials with maximal index n
    that avoid every iterated shadow of the earlier closures must have
    omega_j as its slex-maximum (avoiding those shadows is equivalent to
    escaping prefix domination); and the set one degree beyond the last
    monomial must be empty.  Returns a plain verdict, never raises.
    """
    n, t = ctx.n_vars, ctx.spread_t
    omegas = list(omegas)
    for j in range(1, len(omegas)):
        if _max_excluded(n, t, ell1 + j, omegas[:j]) != omegas[j]:
            return False
    return _max_excluded(n, t, ell1 + len(omegas), omegas) is None
