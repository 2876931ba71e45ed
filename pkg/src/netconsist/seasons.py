"""Season network construction from game schedules.

Each season becomes one unweighted graph over a fixed team universe: one
edge per distinct pair of member teams that played at least once (repeat
games collapse). Teams not yet members drop their games and stay as
isolated singleton communities; independents are singleton communities
too. The ground-truth partition groups each conference as one community.

File formats: games CSV ``year,team_a,team_b``; membership CSV
``year,team,affiliation`` where affiliation is a conference name,
``independent``, or ``none`` (not yet a member).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, NodeUniverse, Partition

__all__ = [
    "INDEPENDENT",
    "NOT_YET_MEMBER",
    "SeasonSchedule",
    "GroundTruthAlignment",
    "load_schedules",
    "build_season_network",
    "conference_size_table",
]

INDEPENDENT = "independent"
NOT_YET_MEMBER = "none"


@dataclass(frozen=True)
class SeasonSchedule:
    year: int
    games: tuple[tuple[str, str], ...]
    membership: dict[str, str]  # team -> conference | independent | none


@dataclass(frozen=True)
class GroundTruthAlignment:
    partition: Partition


def load_schedules(
    games_path: str | Path,
    membership_path: str | Path,
    years: tuple[int, int] | None = None,
) -> list[SeasonSchedule]:
    """Assemble one schedule per year from the two CSV files."""
    games_by_year: dict[int, list[tuple[str, str]]] = {}
    with open(games_path, newline="", encoding="utf-8") as fh:
        for rowno, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 3:
                raise ValueError(f"{games_path}:{rowno}: expected year,team_a,team_b")
            year = int(row[0])
            games_by_year.setdefault(year, []).append((row[1].strip(), row[2].strip()))
    membership_by_year: dict[int, dict[str, str]] = {}
    with open(membership_path, newline="", encoding="utf-8") as fh:
        for rowno, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 3:
                raise ValueError(
                    f"{membership_path}:{rowno}: expected year,team,affiliation"
                )
            year = int(row[0])
            membership_by_year.setdefault(year, {})[row[1].strip()] = row[2].strip()
    all_years = sorted(set(games_by_year) | set(membership_by_year))
    if years is not None:
        lo, hi = years
        all_years = [y for y in all_years if lo <= y <= hi]
    schedules = []
    for year in all_years:
        schedules.append(
            SeasonSchedule(
                year=year,
                games=tuple(games_by_year.get(year, [])),
                membership=membership_by_year.get(year, {}),
            )
        )
    return schedules


def build_season_network(
    schedule: SeasonSchedule,
    universe: NodeUniverse,
    allow_unknown: bool = False,
) -> tuple[Graph, GroundTruthAlignment]:
    """One season's graph plus its conference ground truth.

    Games involving a not-yet-member team are dropped; those teams remain
    in the node set as isolated singleton communities. Unknown labels are
    a hard error unless ``allow_unknown``, which silently skips the game.
    """
    if not schedule.games:
        raise ValueError(f"season {schedule.year}: empty game list")
    index = universe.index()
    missing = [t for t in universe.labels if t not in schedule.membership]
    if missing:
        raise ValueError(
            f"season {schedule.year}: no membership for team {missing[0]!r}"
        )
    edges: set[tuple[int, int]] = set()
    for team_a, team_b in schedule.games:
        unknown = [t for t in (team_a, team_b) if t not in index]
        if unknown:
            if allow_unknown:
                continue
            raise ValueError(
                f"season {schedule.year}: unknown team {unknown[0]!r}"
            )
        if NOT_YET_MEMBER in (
            schedule.membership[team_a],
            schedule.membership[team_b],
        ):
            continue
        u, v = index[team_a], index[team_b]
        if u == v:
            raise ValueError(
                f"season {schedule.year}: team {team_a!r} plays itself"
            )
        edges.add((min(u, v), max(u, v)))
    graph = Graph(node_count=len(universe), edges=frozenset(edges))
    labels = []
    for i, team in enumerate(universe.labels):
        aff = schedule.membership[team]
        if aff in (INDEPENDENT, NOT_YET_MEMBER):
            labels.append(("solo", i))  # singleton community
        else:
            labels.append(("conf", aff))
    return graph, GroundTruthAlignment(partition=Partition.from_labels(labels))


def conference_size_table(
    seasons: list[SeasonSchedule],
) -> list[tuple[int, str, int]]:
    """Rows (year, conference, size), independents aggregated under "Ind.".

    Conferences absent in a given year get an explicit size-0 row;
    not-yet-member teams are not counted anywhere.
    """
    if not seasons:
        raise ValueError("need at least one season")
    conferences = sorted(
        {
            aff
            for s in seasons
            for aff in s.membership.values()
            if aff not in (INDEPENDENT, NOT_YET_MEMBER)
        }
    )
    rows: list[tuple[int, str, int]] = []
    for s in sorted(seasons, key=lambda s: s.year):
        counts = {c: 0 for c in conferences}
        independents = 0
        for aff in s.membership.values():
            if aff == INDEPENDENT:
                independents += 1
            elif aff != NOT_YET_MEMBER:
                counts[aff] += 1
        for c in conferences:
            rows.append((s.year, c, counts[c]))
        rows.append((s.year, "Ind.", independents))
    return rows
