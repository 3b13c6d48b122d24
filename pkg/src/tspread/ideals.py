"""t-spread strongly stable ideals: Borel closures, shadows, minimal generators.

A t-spread ideal is held by its minimal monomial generators, grouped by
degree and slex-sorted.  The Borel closure B_t(u_1, ..., u_r) is the smallest
t-spread strongly stable ideal containing the given monomials; it is computed
literally from the definition, by breadth-first search over the admissible
moves x_i * (u / x_j) with i < j.  (The equivalent componentwise-domination
description of single-monomial closures is exercised by the test suite as an
independent oracle, never used here.)
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidMonomialError, NotStronglyStableError, NotTSpreadError
from .monomials import (
    Context,
    Monomial,
    format_monomial,
    is_t_spread,
    slex_sorted,
    spread_monomials,
)


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff the squarefree monomial u divides v (index-set inclusion)."""
    return set(u) <= set(v)


@dataclass(frozen=True)
class SpreadIdeal:
    """A t-spread monomial ideal, stored as minimal generators by degree.

    ``gens`` maps each generator degree to a slex-descending tuple of
    monomials; degrees without generators are absent.  The zero ideal has an
    empty map.  Instances should be built through :meth:`from_generators` or
    :func:`borel_ideal`, which establish the invariants (t-spread generators,
    no generator dividing another).
    """

    ctx: Context
    gens: dict[int, tuple[Monomial, ...]]

    @classmethod
    def from_generators(cls, ctx: Context, monomials) -> "SpreadIdeal":
        """Build an ideal from arbitrary t-spread generators.

        Redundant generators (divisible by another) are dropped and the rest
        slex-sorted; no Borel closure is taken, so the result need not be
        strongly stable.
        """
        mons = list(monomials)
        for u in mons:
            if not u:
                raise InvalidMonomialError("the unit monomial generates the whole ring")
            if not is_t_spread(u, ctx):
                raise NotTSpreadError(
                    f"{format_monomial(u)} is not {ctx.spread_t}-spread"
                )
        return cls(ctx, _minimalize(mons))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def indeg(self) -> int:
        """Smallest generator degree; 0 for the zero ideal."""
        return min(self.gens) if self.gens else 0

    def max_gen_degree(self) -> int:
        return max(self.gens) if self.gens else 0

    def all_generators(self) -> list[Monomial]:
        """Every minimal generator, ascending by degree then slex-descending."""
        return [u for d in sorted(self.gens) for u in self.gens[d]]

    def contains(self, u: Monomial) -> bool:
        """Membership of a monomial: some minimal generator divides it."""
        return any(divides(g, u) for d, gs in self.gens.items() if d <= len(u)
                   for g in gs)

    def to_json(self) -> str:
        payload = {
            "n": self.ctx.n_vars,
            "t": self.ctx.spread_t,
            "gens": [list(u) for u in self.all_generators()],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "SpreadIdeal":
        data = json.loads(text)
        ctx = Context(int(data["n"]), int(data["t"]))
        gens = [tuple(int(i) for i in g) for g in data["gens"]]
        return cls.from_generators(ctx, gens)


def _minimalize(monomials) -> dict[int, tuple[Monomial, ...]]:
    """Drop duplicates and anything divisible by another generator."""
    by_degree: dict[int, set[Monomial]] = {}
    for u in monomials:
        by_degree.setdefault(len(u), set()).add(u)
    kept: list[Monomial] = []
    out: dict[int, tuple[Monomial, ...]] = {}
    for d in sorted(by_degree):
        level = [u for u in by_degree[d] if not any(divides(g, u) for g in kept)]
        if level:
            out[d] = tuple(slex_sorted(level))
            kept.extend(level)
    return out


def _single_moves(w: Monomial, ctx: Context):
    """Yield all admissible moves x_i * (w / x_j), i < j, that stay t-spread."""
    t = ctx.spread_t
    sup = set(w)
    for j in w:
        rest = sup - {j}
        for i in range(1, j):
            if i in rest:
                continue
            moved = tuple(sorted(rest | {i}))
            if all(b - a >= t for a, b in zip(moved, moved[1:])):
                yield moved


def borel_closure_degree(u: Monomial, ctx: Context) -> list[Monomial]:
    """Degree-deg(u) minimal generators of B_t(u), slex-descending.

    Breadth-first search over single moves x_i * (w / x_j), exactly as the
    strong-stability condition prescribes; every intermediate monomial is
    t-spread.
    """
    if not is_t_spread(u, ctx):
        raise NotTSpreadError(f"{format_monomial(u)} is not {ctx.spread_t}-spread")
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            for moved in _single_moves(w, ctx):
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return slex_sorted(seen)


def borel_ideal(generators, ctx: Context) -> SpreadIdeal:
    """B_t(u_1, ..., u_r): per-degree closure union, then minimalized.

    ``borel_ideal([])`` is the zero ideal.
    """
    closure: list[Monomial] = []
    for u in generators:
        closure.extend(borel_closure_degree(u, ctx))
    return SpreadIdeal(ctx, _minimalize(closure))


def shadow(monomial_set, ctx: Context) -> list[Monomial]:
    """Shad_t(T) = { x_i * w : w in T } ∩ M_{n, deg+1, t}, slex-descending.

    May be empty even for nonempty T.
    """
    n, t = ctx.n_vars, ctx.spread_t
    monomial_set = list(monomial_set)
    if len({len(w) for w in monomial_set}) > 1:
        raise InvalidMonomialError("shadow input must share one degree")
    out = set()
    for w in monomial_set:
        for i in range(1, n + 1):
            if i in w:
                continue
            grown = tuple(sorted(w + (i,)))
            if all(b - a >= t for a, b in zip(grown, grown[1:])):
                out.add(grown)
    return slex_sorted(out)


def iterated_shadow(monomial_set, ctx: Context, m: int) -> list[Monomial]:
    """m-fold shadow; m = 1 is shadow() itself."""
    if m < 1:
        raise ValueError(f"shadow iteration count must be >= 1, got {m}")
    current = list(monomial_set)
    for _ in range(m):
        current = shadow(current, ctx)
    return current


def generator_move_violation(ideal: SpreadIdeal):
    """Fast strong-stability test: check admissible moves of generators only.

    Returns None if stable, else a witness ``(u, j, i, result)`` with
    ``result = x_i * (u / x_j)`` t-spread but outside the ideal.  Checking
    generators suffices: any t-spread monomial of the ideal is a generator
    times extra variables, and moves factor through generator moves.
    """
    for u in ideal.all_generators():
        sup = set(u)
        for moved in _single_moves(u, ideal.ctx):
            if not ideal.contains(moved):
                (j,) = sup - set(moved)
                (i,) = set(moved) - sup
                return u, j, i, moved
    return None


def find_stability_violation(ideal: SpreadIdeal):
    """Exhaustive strong-stability test over the monomial basis of the ideal.

    Walks every t-spread monomial of each degree from indeg to the maximal
    generator degree plus one, keeps those lying in the ideal, and checks all
    admissible moves.  Returns None if stable, else the first witness
    ``(u, j, i, result)``.  Intended for desk-scale n; see
    :func:`generator_move_violation` for the scalable test.
    """
    if ideal.is_zero:
        return None
    ctx = ideal.ctx
    for d in range(ideal.indeg(), ideal.max_gen_degree() + 2):
        for u in spread_monomials(ctx, d):
            if not ideal.contains(u):
                continue
            sup = set(u)
            for moved in _single_moves(u, ctx):
                if not ideal.contains(moved):
                    (j,) = sup - set(moved)
                    (i,) = set(moved) - sup
                    return u, j, i, moved
    return None


def is_strongly_stable(ideal: SpreadIdeal) -> bool:
    """True iff the ideal is t-spread strongly stable (basis-window check)."""
    return find_stability_violation(ideal) is None


def require_strongly_stable(ideal: SpreadIdeal) -> None:
    """Raise NotStronglyStableError (with a witness move) unless stable."""
    witness = generator_move_violation(ideal)
    if witness is not None:
        u, j, i, moved = witness
        raise NotStronglyStableError(
            f"not strongly stable: x{i}*({format_monomial(u)}/x{j}) = "
            f"{format_monomial(moved)} lies outside the ideal",
            witness=witness,
        )
