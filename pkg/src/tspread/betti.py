"""Graded Betti numbers of t-spread strongly stable ideals and their corners.

For a t-spread strongly stable ideal I the graded Betti numbers are given by
the closed formula

    beta_{k, k+l}(I) = sum over u in G(I)_l of binom(max(u) - t(l-1) - 1, k),

the t-spread analogue of the Eliahou-Kervaire (t = 0) and
Aramova-Herzog-Hibi (t = 1) formulas.  All arithmetic is exact; entries are
arbitrary-precision integers.

Conventions: tables are for the ideal I itself, not the quotient S/I (the
two differ by an index shift); rows are labelled by the generator degree l,
columns by the homological index k.  An entry is extremal when every other
nonzero entry (i, j) has i < k or j < l; the positions (k, l) of extremal
entries, listed with k strictly decreasing, form the corner sequence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .errors import TSpreadError
from .ideals import SpreadIdeal, require_strongly_stable
from .monomials import max_index


@dataclass(frozen=True)
class BettiTable:
    """Sparse table (k, l) -> beta_{k,k+l}; zero entries are never stored."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (k, l), beta in self.entries.items():
            if beta <= 0 or k < 0:
                raise TSpreadError(f"bad Betti entry beta_{{{k},{k}+{l}}} = {beta}")

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def rows(self) -> dict[int, list[int]]:
        """Dense rows: l -> [beta_{0,l}, beta_{1,1+l}, ...] up to the last nonzero."""
        out: dict[int, list[int]] = {}
        for (k, l), beta in self.entries.items():
            row = out.setdefault(l, [])
            if len(row) <= k:
                row.extend([0] * (k + 1 - len(row)))
            row[k] = beta
        return {l: out[l] for l in sorted(out)}

    def to_json(self) -> str:
        return json.dumps({"rows": {str(l): row for l, row in self.rows().items()}})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        entries: dict[tuple[int, int], int] = {}
        for l_str, row in data["rows"].items():
            for k, beta in enumerate(row):
                if beta:
                    entries[(k, int(l_str))] = int(beta)
        return cls(entries)


@dataclass(frozen=True)
class CornerSequence:
    """Extremal-Betti positions (k_1, l_1), ..., (k_r, l_r) and their values.

    Positions carry strictly decreasing k and strictly increasing l; the
    values are the corresponding nonzero Betti numbers.
    """

    corners: tuple[tuple[int, int], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        ks = [k for k, _ in self.corners]
        ls = [l for _, l in self.corners]
        if any(a <= b for a, b in zip(ks, ks[1:])) or any(
            a >= b for a, b in zip(ls, ls[1:])
        ):
            raise TSpreadError(f"not a corner sequence: {self.corners}")
        if len(self.values) != len(self.corners) or any(v < 1 for v in self.values):
            raise TSpreadError(f"bad corner values: {self.values}")

    def to_json(self) -> str:
        return json.dumps(
            {"corners": [list(c) for c in self.corners], "values": list(self.values)}
        )


def graded_betti(ideal: SpreadIdeal) -> BettiTable:
    """Betti table of a t-spread strongly stable ideal via the closed formula.

    Raises NotStronglyStableError (the formula does not apply) otherwise.
    """
    require_strongly_stable(ideal)
    t = ideal.ctx.spread_t
    entries: dict[tuple[int, int], int] = {}
    for l, gens in ideal.gens.items():
        for u in gens:
            m = max_index(u) - t * (l - 1) - 1
            for k in range(m + 1):
                entries[(k, l)] = entries.get((k, l), 0) + comb(m, k)
    return BettiTable(entries)


def corners_from_table(table: BettiTable) -> CornerSequence:
    """Corners straight from the definition of extremal Betti numbers.

    An entry (k, l) is a corner iff it is nonzero and no other nonzero entry
    dominates it componentwise.  Works for any sparse table.
    """
    row_max: dict[int, int] = {}
    for k, l in table.entries:
        row_max[l] = max(k, row_max.get(l, -1))
    corners = []
    best = -1
    for l in sorted(row_max, reverse=True):
        if row_max[l] > best:
            best = row_max[l]
            corners.append((best, l))
    corners.reverse()
    values = tuple(table.entries[(k, l)] for k, l in corners)
    return CornerSequence(tuple(corners), values)


def corners_via_characterization(ideal: SpreadIdeal, check_stability: bool = True) -> CornerSequence:
    """Corners computed from generator data alone, without the Betti table.

    For each generator degree l the only candidate is
    k = max{max(u) : u in G(I)_l} - t(l-1) - 1, and it is a corner iff every
    higher generator degree j satisfies max(u) < k + t(j-1) + 1 for all its
    generators; the corner value is the number of degree-l generators
    attaining the maximal last index.  Input must be strongly stable;
    callers holding an ideal that is stable by construction (a Borel closure)
    may pass ``check_stability=False`` to skip the redundant verification.
    """
    if check_stability:
        require_strongly_stable(ideal)
    t = ideal.ctx.spread_t
    stats = []
    for l in sorted(ideal.gens):
        mm = max(max_index(u) for u in ideal.gens[l])
        count = sum(1 for u in ideal.gens[l] if max_index(u) == mm)
        stats.append((l, mm, count))
    corners = []
    values = []
    for pos, (l, mm, count) in enumerate(stats):
        k = mm - t * (l - 1) - 1
        if all(mm_j < k + t * (j - 1) + 1 for j, mm_j, _ in stats[pos + 1:]):
            corners.append((k, l))
            values.append(count)
    return CornerSequence(tuple(corners), tuple(values))


def regularity(table: BettiTable) -> int:
    """Castelnuovo-Mumford regularity of the ideal: the largest nonzero row."""
    if table.is_empty:
        raise TSpreadError("regularity of an empty Betti table")
    return max(l for _, l in table.entries)


def proj_dim(table: BettiTable) -> int:
    """Projective dimension of the ideal: the largest nonzero column."""
    if table.is_empty:
        raise TSpreadError("projective dimension of an empty Betti table")
    return max(k for k, _ in table.entries)


def render_diagram(table: BettiTable) -> str:
    """Plain-text Betti diagram: header row of k, one row per degree l.

    Zero positions inside the rectangle print as ``-``.  The empty table
    renders as an empty string.
    """
    if table.is_empty:
        return ""
    rows = table.rows()
    width_k = proj_dim(table) + 1
    cells: list[list[str]] = [[str(k) for k in range(width_k)]]
    labels = [""] + [f"{l}:" for l in rows]
    for l, row in rows.items():
        padded = row + [0] * (width_k - len(row))
        cells.append([str(b) if b else "-" for b in padded])
    col_w = [max(len(r[k]) for r in cells) for k in range(width_k)]
    lab_w = max(len(s) for s in labels)
    lines = []
    for label, row in zip(labels, cells):
        line = label.ljust(lab_w) + "  " + "  ".join(
            s.rjust(col_w[k]) for k, s in enumerate(row)
        )
        lines.append(line.rstrip())
    return "\n".join(lines)
