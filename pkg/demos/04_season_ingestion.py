"""Turning yearly schedules into an ensemble of ground-truth partitions.

Six teams play a handful of games per season. Conference membership is the
ground truth: conferences are communities, independents are singletons, and
a team that has not joined yet ("none") is kept out of the schedule but
still present as an isolated singleton so every season shares one node set.

Team t3 hops between the West conference and independence every other
year; everyone else stays put. Scaled inclusivity across the seasons'
ground truths shows exactly who moved.
"""

from netconsist import (
    NodeUniverse,
    SeasonSchedule,
    build_season_network,
    conference_size_table,
    scaled_inclusivity,
)

universe = NodeUniverse(("t1", "t2", "t3", "t4", "t5", "t6"))

seasons = []
for year in range(2000, 2010):
    membership = {
        "t1": "East",
        "t2": "East",
        "t3": "West" if year % 2 == 0 else "independent",
        "t4": "West",
        "t5": "independent",
        "t6": "none" if year < 2005 else "West",
    }
    games = [("t1", "t2"), ("t3", "t4"), ("t1", "t4"), ("t2", "t6")]
    seasons.append(SeasonSchedule(year=year, games=tuple(games), membership=membership))

print("Per-season networks (games against not-yet-members are dropped):")
truths = []
for season in seasons:
    graph, truth = build_season_network(season, universe)
    truths.append(truth.partition)
    print(
        f"  {season.year}: {graph.edge_count} games kept, "
        f"{truth.partition.community_count} ground-truth communities"
    )

print("\nConference sizes by year (independents pooled under 'Ind.'):")
rows = conference_size_table(seasons)
for year, conference, size in rows:
    if year in (2000, 2005):
        print(f"  {year}  {conference:<6} {size}")

print("\nScaled inclusivity of each team across all 10 seasons")
print("(reference = season 2000; ceiling is 9):")
scores = scaled_inclusivity(truths[1:], truths[0]).scores
for i, label in enumerate(universe.labels):
    print(f"  {label}: {scores[i]:.3f}")

# t1 and t2 never change conference -> exactly the ceiling; t3's yearly
# hop and t6's late arrival cost them credit.
assert scores[0] == scores[1] == len(truths) - 1
assert scores[2] < len(truths) - 1
