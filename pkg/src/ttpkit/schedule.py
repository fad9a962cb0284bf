"""Double round-robin schedules: representation, validation, travel accounting.

Teams are numbered 1..n (n even, n >= 4) and play one game per round over
2(n-1) rounds.  Travel follows the usual tournament convention: every team
starts at home, drives directly between consecutive away venues on a road
trip, and returns home after its last away game.  When the n home venues sit
on a line in team order, total travel decomposes into per-bridge crossing
counts, which this module computes exactly in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

HOME = 1
AWAY = -1

RULE_EACH_VENUE = "EACH_VENUE"
RULE_AT_MOST_THREE = "AT_MOST_THREE"
RULE_NO_REPEAT = "NO_REPEAT"
RULE_PAIRING = "PAIRING"

ROLE_ACTUAL = "ACTUAL"
ROLE_PREDICTED = "PREDICTED"
ROLE_LOWER_BOUND = "LOWER_BOUND"

MAX_RUN = 3  # longest permitted home stand / road trip


class FormatError(ValueError):
    """Malformed schedule or matrix file; carries file name and line number."""

    def __init__(self, message: str, path=None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
            if line is not None:
                where += f"{line}:"
            where += " "
        super().__init__(where + message)


@dataclass(frozen=True)
class Schedule:
    """A double round-robin schedule on n teams.

    ``grid[t-1][r]`` is ``+u`` when team t hosts team u in round r (0-based)
    and ``-u`` when t plays away at u.  Construction checks structure only
    (shape, opponent range, no self-games); rule conformance is the job of
    :func:`validate`.
    """

    n: int
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 4 or self.n % 2:
            raise ValueError(f"team count must be even and >= 4, got {self.n}")
        rounds = 2 * (self.n - 1)
        if len(self.grid) != self.n:
            raise ValueError(f"expected {self.n} team rows, got {len(self.grid)}")
        for t, row in enumerate(self.grid, start=1):
            if len(row) != rounds:
                raise ValueError(f"team {t}: expected {rounds} rounds, got {len(row)}")
            for r, entry in enumerate(row):
                opp = abs(entry)
                if entry == 0 or not 1 <= opp <= self.n:
                    raise ValueError(f"team {t} round {r + 1}: bad entry {entry}")
                if opp == t:
                    raise ValueError(f"team {t} round {r + 1}: plays itself")

    @property
    def rounds(self) -> int:
        return 2 * (self.n - 1)

    def opponent(self, team: int, rnd: int) -> int:
        """Opponent of ``team`` in 0-based round ``rnd``."""
        return abs(self.grid[team - 1][rnd])

    def at_home(self, team: int, rnd: int) -> bool:
        return self.grid[team - 1][rnd] > 0


@dataclass(frozen=True)
class Violation:
    """One broken scheduling rule, with the teams and 1-based rounds involved."""

    rule: str
    teams: tuple[int, ...]
    rounds: tuple[int, ...]


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple[Violation, ...]

    def __post_init__(self):
        assert self.feasible == (not self.violations)


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative distances between home venues, zero diagonal."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError("distance matrix is not square")
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise ValueError(f"nonzero diagonal at {i + 1}")
            for j in range(self.n):
                if self.entries[i][j] < 0:
                    raise ValueError(f"negative distance at ({i + 1},{j + 1})")
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"asymmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_rows(cls, rows) -> "DistanceMatrix":
        return cls(len(rows), tuple(tuple(row) for row in rows))

    def distance(self, i: int, j: int) -> int:
        """Distance between the venues of teams i and j (1-indexed)."""
        return self.entries[i - 1][j - 1]

    def permuted(self, order: tuple[int, ...]) -> "DistanceMatrix":
        """Matrix reindexed so that new team p is old team ``order[p-1]``."""
        return DistanceMatrix.from_rows(
            [[self.entries[a - 1][b - 1] for b in order] for a in order]
        )

    def metric_violations(self) -> list[tuple[int, int, int]]:
        """Triples (i, j, k) with D[i][j] > D[i][k] + D[k][j]."""
        out = []
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                for k in range(1, self.n + 1):
                    if self.distance(i, j) > self.distance(i, k) + self.distance(k, j):
                        out.append((i, j, k))
        return out


@dataclass(frozen=True)
class LinearInstance:
    """Teams on a line; ``gaps[k-1]`` is the distance between venues k and k+1."""

    gaps: tuple[int, ...]

    def __post_init__(self):
        if len(self.gaps) < 3:
            raise ValueError("need at least 4 teams, i.e. 3 gaps")
        if any(g < 0 for g in self.gaps):
            raise ValueError("gaps must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.gaps) + 1

    def induced_matrix(self) -> DistanceMatrix:
        """The full matrix with telescoping distances D[i][j] = sum of gaps."""
        prefix = [0]
        for g in self.gaps:
            prefix.append(prefix[-1] + g)
        n = self.n
        rows = [[abs(prefix[j] - prefix[i]) for j in range(n)] for i in range(n)]
        return DistanceMatrix.from_rows(rows)


@dataclass(frozen=True)
class CrossingVector:
    """Per-bridge traversal counts; bridge k joins line positions k and k+1."""

    counts: tuple[int, ...]
    role: str

    def __post_init__(self):
        if self.role not in (ROLE_ACTUAL, ROLE_PREDICTED, ROLE_LOWER_BOUND):
            raise ValueError(f"unknown role {self.role!r}")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative crossing count")
        if self.role == ROLE_ACTUAL and any(c % 2 for c in self.counts):
            raise ValueError("actual crossing counts must be even")

    def dot(self, gaps) -> int:
        """Total distance contribution against a gap vector of equal length."""
        if len(gaps) != len(self.counts):
            raise ValueError("gap vector length mismatch")
        return sum(c * g for c, g in zip(self.counts, gaps))


def validate(schedule: Schedule) -> FeasibilityReport:
    """Check pairing symmetry and the three round-robin rules.

    Pairing failures short-circuit the per-rule checks: a grid whose cells do
    not mirror each other has no well-defined games to test, so only the
    PAIRING violations are reported in that case.
    """
    n, rounds = schedule.n, schedule.rounds
    grid = schedule.grid

    pairing = []
    for r in range(rounds):
        for t in range(1, n + 1):
            entry = grid[t - 1][r]
            u = abs(entry)
            if u < t:
                continue  # each unordered pair once
            expected = -t if entry > 0 else t
            if grid[u - 1][r] != expected:
                pairing.append(Violation(RULE_PAIRING, (t, u), (r + 1,)))
    if pairing:
        return FeasibilityReport(False, tuple(pairing))

    violations = []

    # each-venue: team t hosts team u in exactly one round
    for t in range(1, n + 1):
        for u in range(1, n + 1):
            if u == t:
                continue
            hosted = tuple(r + 1 for r in range(rounds) if grid[t - 1][r] == u)
            if len(hosted) != 1:
                violations.append(Violation(RULE_EACH_VENUE, (t, u), hosted))

    # at-most-three: no home stand or road trip longer than MAX_RUN
    for t in range(1, n + 1):
        r = 0
        while r < rounds:
            venue = grid[t - 1][r] > 0
            end = r
            while end + 1 < rounds and (grid[t - 1][end + 1] > 0) == venue:
                end += 1
            if end - r + 1 > MAX_RUN:
                violations.append(
                    Violation(RULE_AT_MOST_THREE, (t,), tuple(range(r + 1, end + 2)))
                )
            r = end + 1

    # no-repeat: the same pair never meets in consecutive rounds
    for t in range(1, n + 1):
        for r in range(rounds - 1):
            u = abs(grid[t - 1][r])
            if u > t and abs(grid[t - 1][r + 1]) == u:
                violations.append(Violation(RULE_NO_REPEAT, (t, u), (r + 1, r + 2)))

    return FeasibilityReport(not violations, tuple(violations))


def itinerary(schedule: Schedule, team: int) -> tuple[int, ...]:
    """Locations visited by ``team``, as venue owners, start and end at home.

    Consecutive duplicates are collapsed, so home stands contribute a single
    entry and zero-length legs never arise.
    """
    locs = [team]
    for r in range(schedule.rounds):
        entry = schedule.grid[team - 1][r]
        loc = team if entry > 0 else -entry
        if loc != locs[-1]:
            locs.append(loc)
    if locs[-1] != team:
        locs.append(team)
    return tuple(locs)


def total_distance(schedule: Schedule, matrix: DistanceMatrix) -> int:
    """Sum of leg distances over every team's itinerary.

    Integer inputs accumulate exactly; no floating point is introduced.
    """
    if matrix.n != schedule.n:
        raise ValueError(f"matrix is {matrix.n}x{matrix.n}, schedule has {schedule.n} teams")
    total = 0
    for team in range(1, schedule.n + 1):
        path = itinerary(schedule, team)
        for a, b in zip(path, path[1:]):
            total += matrix.entries[a - 1][b - 1]
    return total


def bridge_crossings(schedule: Schedule) -> CrossingVector:
    """Traversal counts of each inter-venue bridge, teams read as line positions.

    Bridge k sits between positions k and k+1; a leg from a to b crosses every
    bridge strictly between them.  Start and end legs are included.
    """
    counts = [0] * (schedule.n - 1)
    for team in range(1, schedule.n + 1):
        path = itinerary(schedule, team)
        for a, b in zip(path, path[1:]):
            lo, hi = (a, b) if a < b else (b, a)
            for k in range(lo, hi):
                counts[k - 1] += 1
    return CrossingVector(tuple(counts), ROLE_ACTUAL)


def relabel(schedule: Schedule, perm: tuple[int, ...]) -> Schedule:
    """Rename teams: old team t becomes ``perm[t-1]`` (perm is 1-indexed values)."""
    if sorted(perm) != list(range(1, schedule.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    rows = [None] * schedule.n
    for t in range(1, schedule.n + 1):
        rows[perm[t - 1] - 1] = tuple(
            (1 if e > 0 else -1) * perm[abs(e) - 1] for e in schedule.grid[t - 1]
        )
    return Schedule(schedule.n, tuple(rows))


# file formats -------------------------------------------------------------
#
# schedule file: optional '#' comment lines, then n rows of 2(n-1) signed
# integers; +j hosts team j, -j plays away at j.  matrix file: optional '#'
# comments, then n rows of n nonnegative integers; n inferred from the row
# count.  Writers emit single-space separated fields with LF endings so a
# read/write cycle is byte-stable.


def _data_lines(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield idx, line


def parse_schedule(text: str, path=None) -> Schedule:
    rows = []
    for idx, line in _data_lines(text):
        try:
            rows.append((idx, tuple(int(tok) for tok in line.split())))
        except ValueError:
            raise FormatError("non-integer field", path, idx) from None
    n = len(rows)
    if n < 4 or n % 2:
        raise FormatError(f"schedule needs an even team count >= 4, found {n} rows", path)
    want = 2 * (n - 1)
    for idx, row in rows:
        if len(row) != want:
            raise FormatError(f"expected {want} rounds, found {len(row)}", path, idx)
    try:
        return Schedule(n, tuple(row for _, row in rows))
    except ValueError as exc:
        raise FormatError(str(exc), path) from None


def read_schedule(path) -> Schedule:
    try:
        text = open(path, "r", encoding="ascii").read()
    except OSError as exc:
        raise FormatError(str(exc), path) from None
    return parse_schedule(text, path)


def format_schedule(schedule: Schedule) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in schedule.grid) + "\n"


def write_schedule(schedule: Schedule, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_schedule(schedule))


def parse_matrix(text: str, path=None) -> DistanceMatrix:
    rows = []
    for idx, line in _data_lines(text):
        try:
            rows.append((idx, tuple(int(tok) for tok in line.split())))
        except ValueError:
            raise FormatError("non-integer field", path, idx) from None
    n = len(rows)
    if n == 0:
        raise FormatError("empty matrix file", path)
    for idx, row in rows:
        if len(row) != n:
            raise FormatError(f"expected {n} columns, found {len(row)}", path, idx)
    try:
        return DistanceMatrix(n, tuple(row for _, row in rows))
    except ValueError as exc:
        raise FormatError(str(exc), path) from None


def read_matrix(path) -> DistanceMatrix:
    try:
        text = open(path, "r", encoding="ascii").read()
    except OSError as exc:
        raise FormatError(str(exc), path) from None
    return parse_matrix(text, path)


def format_matrix(matrix: DistanceMatrix) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in matrix.entries) + "\n"


def write_matrix(matrix: DistanceMatrix, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_matrix(matrix))
