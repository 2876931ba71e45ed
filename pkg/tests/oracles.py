"""Independent brute-force recomputations used as test oracles.

Everything here works by exhaustive enumeration (all node pairs, all
(p, q, node) triples, all set partitions) and never shares code paths
with the library implementations it checks.
"""

from itertools import combinations

from netconsist.graph import Graph, Partition


def copairs_brute(partition: Partition) -> set:
    mem = partition.membership
    return {
        (q, r)
        for q, r in combinations(range(len(mem)), 2)
        if mem[q] == mem[r]
    }


def jaccard_brute(a: Partition, b: Partition) -> float:
    sa, sb = copairs_brute(a), copairs_brute(b)
    union = sa | sb
    if not union:
        return 1.0
    return len(sa & sb) / len(union)


def overlap_brute(compared: Partition, reference: Partition):
    """X[p][q] per the product-of-fractions rule, via explicit sets."""
    rows = [set(compared.members(p)) for p in range(compared.community_count)]
    cols = [set(reference.members(q)) for q in range(reference.community_count)]
    return [
        [
            (len(a & r) / len(a)) * (len(a & r) / len(r))
            for r in cols
        ]
        for a in rows
    ], rows, cols


def scaled_brute(others, reference: Partition):
    scores = [0.0] * reference.node_count
    for compared in others:
        x, rows, cols = overlap_brute(compared, reference)
        for p, a_set in enumerate(rows):
            for q, r_set in enumerate(cols):
                if x[p][q] > 0:
                    for node in a_set & r_set:
                        scores[node] += x[p][q]
    return scores


def exclusive_brute(others, reference: Partition):
    scores = [0] * reference.node_count
    for compared in others:
        x, rows, _ = overlap_brute(compared, reference)
        for q in range(reference.community_count):
            best_p = 0
            for p in range(compared.community_count):
                if x[p][q] > x[best_p][q]:
                    best_p = p
            for node in rows[best_p]:
                scores[node] += 1
    return scores


def inclusive_brute(others, reference: Partition, threshold: float = 0.0):
    scores = [0] * reference.node_count
    for compared in others:
        x, rows, cols = overlap_brute(compared, reference)
        for p, a_set in enumerate(rows):
            for q, r_set in enumerate(cols):
                if x[p][q] > threshold:
                    for node in a_set & r_set:
                        scores[node] += 1
    return scores


def signed_brute(partitions, reference_index: int, community_id: int):
    reference = partitions[reference_index]
    r_set = set(reference.members(community_id))
    scores = [0.0] * reference.node_count
    for i, compared in enumerate(partitions):
        if i == reference_index:
            continue
        x, rows, _ = overlap_brute(compared, reference)
        for p, a_set in enumerate(rows):
            if x[p][community_id] > 0:
                for node in a_set & r_set:
                    scores[node] += x[p][community_id]
                for node in a_set - r_set:
                    scores[node] -= x[p][community_id]
    return scores


def modularity_brute(graph: Graph, partition: Partition) -> float:
    """Loop over every edge; single float expression per community."""
    big_m = graph.degree_sum
    q = 0.0
    for i in range(partition.community_count):
        members = partition.members(i)
        intra_ends = 2 * sum(
            1 for u, v in graph.edges if u in members and v in members
        )
        degree = sum(
            sum(1 for u, v in graph.edges if u == w or v == w) for w in members
        )
        q += intra_ends / big_m - (degree / big_m) ** 2
    return q


def all_partitions(n: int):
    """Every set partition of range(n) as a membership list (Bell(n) many)."""
    if n == 0:
        yield []
        return
    for rest in all_partitions(n - 1):
        m = max(rest, default=-1) + 1
        for c in range(m + 1):
            yield rest + [c]
