"""Brute-force lattice-path enumeration.

Paths start at (0, 0), move by unit up/down diagonals plus an optional
flat step, and end back on the x-axis.  The enumerator here is
deliberately naive - depth-first search over step choices with light
pruning - because its whole job is to certify the closed formulas and
generating functions by independent exhaustive counting.

Counting without listing is also available through a dynamic-programming
counter that scales to much longer spans; the test suite pins it to the
enumerator on their overlap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

__all__ = [
    "Step",
    "PathFamily",
    "Path",
    "EnumerationLimitError",
    "ReflectionError",
    "enumerate_paths",
    "count_paths",
    "count_by_downs",
    "reflect_first_crossing",
    "render_grid",
    "MAX_ENUMERATION_SPAN",
    "MAX_COUNT_SPAN",
]

MAX_ENUMERATION_SPAN = 24
MAX_COUNT_SPAN = 400


class EnumerationLimitError(RuntimeError):
    """The requested span exceeds the resource guard."""


class ReflectionError(ValueError):
    """The path is outside the domain of the reflection map."""


class Step(Enum):
    """One move: U=(1,1), D=(1,-1), H=(2,0), F=(1,0)."""

    U = (1, 1)
    D = (1, -1)
    H = (2, 0)
    F = (1, 0)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def is_flat(self) -> bool:
        return self.value[1] == 0


# Lexicographic order of label strings = DFS visiting order.
_STEP_ORDER = sorted(Step, key=lambda s: s.name)


@dataclass(frozen=True)
class Path:
    """An immutable step sequence."""

    steps: tuple[Step, ...]

    @property
    def labels(self) -> str:
        return "".join(s.name for s in self.steps)

    def points(self) -> Iterator[tuple[int, int]]:
        """All visited lattice points, starting at (0, 0)."""
        x = y = 0
        yield (x, y)
        for s in self.steps:
            x += s.dx
            y += s.dy
            yield (x, y)

    @property
    def endpoint(self) -> tuple[int, int]:
        x = sum(s.dx for s in self.steps)
        y = sum(s.dy for s in self.steps)
        return (x, y)

    def downs(self) -> int:
        return sum(1 for s in self.steps if s is Step.D)

    @classmethod
    def from_labels(cls, labels: str) -> "Path":
        return cls(tuple(Step[c] for c in labels))

    def __str__(self) -> str:
        return self.labels


@dataclass(frozen=True)
class PathFamily:
    """Which paths to count: step set, endpoint, and constraints.

    ``span`` is the target endpoint ``(span, 0)``.  ``nonpositive``
    forbids any point above the x-axis.  ``forbid_up_then_flat`` bans a
    flat step (H or F) directly after an up step, so flats may appear
    only at the start of the path or after a down step.
    """

    steps: frozenset[Step]
    span: int
    nonpositive: bool = False
    forbid_up_then_flat: bool = False

    def __post_init__(self):
        if not {Step.U, Step.D} <= self.steps:
            raise ValueError("a path family always includes both U and D steps")
        if {Step.H, Step.F} <= self.steps:
            raise ValueError("H and F steps never coexist in one family")
        if self.span < 0:
            raise ValueError("span must be >= 0")
        if Step.F not in self.steps and self.span % 2 != 0:
            raise ValueError("span must be even when every step preserves x-parity of y")

    def _check_enumerable(self) -> None:
        if self.span > MAX_ENUMERATION_SPAN:
            raise EnumerationLimitError(
                f"span {self.span} exceeds the enumeration guard of {MAX_ENUMERATION_SPAN}"
            )


def _ordered_steps(family: PathFamily) -> list[Step]:
    return [s for s in _STEP_ORDER if s in family.steps]


def enumerate_paths(family: PathFamily) -> list[Path]:
    """All paths of the family, in lexicographic label order (D < F < H < U).

    Guarded at span <= 24; exhaustive listing beyond that is pointless.
    """
    family._check_enumerable()
    span = family.span
    steps = _ordered_steps(family)
    nonpositive = family.nonpositive
    forbid = family.forbid_up_then_flat
    found: list[Path] = []
    prefix: list[Step] = []

    def walk(x: int, y: int, last: Step | None) -> None:
        if x == span:
            if y == 0:
                found.append(Path(tuple(prefix)))
            return
        for s in steps:
            nx = x + s.dx
            if nx > span:
                continue
            ny = y + s.dy
            if abs(ny) > span - nx:
                continue
            if nonpositive and ny > 0:
                continue
            if forbid and s.is_flat and last is Step.U:
                continue
            prefix.append(s)
            walk(nx, ny, s)
            prefix.pop()

    walk(0, 0, None)
    return found


def count_paths(family: PathFamily) -> int:
    """Number of paths in the family, by dynamic programming over
    (x, y, came-from-an-up-step) states.  Exact big integers; handles
    spans far beyond the enumeration guard."""
    if family.span > MAX_COUNT_SPAN:
        raise EnumerationLimitError(
            f"span {family.span} exceeds the counting guard of {MAX_COUNT_SPAN}"
        )
    span = family.span
    steps = _ordered_steps(family)
    nonpositive = family.nonpositive
    forbid = family.forbid_up_then_flat
    # layers[x] maps (y, last_was_up) -> path count
    layers: list[dict[tuple[int, bool], int]] = [dict() for _ in range(span + 1)]
    layers[0][(0, False)] = 1
    for x in range(span):
        for (y, last_up), ways in layers[x].items():
            for s in steps:
                nx = x + s.dx
                if nx > span:
                    continue
                ny = y + s.dy
                if abs(ny) > span - nx:
                    continue
                if nonpositive and ny > 0:
                    continue
                if forbid and s.is_flat and last_up:
                    continue
                key = (ny, s is Step.U)
                layers[nx][key] = layers[nx].get(key, 0) + ways
    return sum(ways for (y, _), ways in layers[span].items() if y == 0)


def count_by_downs(family: PathFamily) -> dict[int, int]:
    """Path counts bucketed by the number of down steps (enumeration-backed)."""
    return dict(Counter(p.downs() for p in enumerate_paths(family)))


def reflect_first_crossing(path: Path) -> Path:
    """Reflect a U/D path after its first visit above the x-axis.

    Steps up to and including the first arrival at height +1 are kept;
    every later step is replaced by its opposite.  A path ending at
    ``(2n, 0)`` maps to one ending at ``(2n, 2)``, and the map is a
    bijection onto such paths - which is how the sub-axis paths get
    counted.
    """
    if any(s not in (Step.U, Step.D) for s in path.steps):
        raise ValueError("reflection is defined for paths of U and D steps only")
    y = 0
    crossing = None
    for i, s in enumerate(path.steps):
        y += s.dy
        if y > 0:
            crossing = i + 1
            break
    if crossing is None:
        raise ReflectionError("path never rises above the x-axis")
    flipped = tuple(
        (Step.D if s is Step.U else Step.U) for s in path.steps[crossing:]
    )
    return Path(path.steps[:crossing] + flipped)


def render_grid(path: Path) -> str:
    """Plain-text picture of the polyline: '/' up, '\\' down, '_' flat.

    Each character row is the band between consecutive integer heights;
    flats sit on the baseline of their band.  Empty path renders as ''.
    """
    cells: list[tuple[int, int, str]] = []  # (band, column, char)
    x = y = 0
    for s in path.steps:
        if s is Step.U:
            cells.append((y, x, "/"))
        elif s is Step.D:
            cells.append((y - 1, x, "\\"))
        elif s is Step.F:
            cells.append((y, x, "_"))
        else:
            cells.append((y, x, "_"))
            cells.append((y, x + 1, "_"))
        x += s.dx
        y += s.dy
    if not cells:
        return ""
    top = max(band for band, _, _ in cells)
    bottom = min(band for band, _, _ in cells)
    width = x
    rows = [[" "] * width for _ in range(top - bottom + 1)]
    for band, col, char in cells:
        rows[top - band][col] = char
    return "\n".join("".join(row).rstrip() for row in rows)
