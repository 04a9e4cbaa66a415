"""
Testes das campanhas em lote (fuzzing e tabela dos oráculos).
"""
import random

from emc_lab.commands.oracle import is_mismatch
from emc_lab.models.familia import Params
from emc_lab.services.campanha import (
    _hunt_target,
    build_oracle_row,
    hunt_one,
    oracle_one,
    replay_hunt_item,
    run_hunt_campaign,
    run_oracle_grid,
)
from emc_lab.services.familias import emc_bound
from emc_lab.services.sementes import derive_seed

K1_GRID = [Params(n=n, k=1, s=s) for s in (1, 2, 3) for n in range(s, 7)]
GRAPH_GRID = [Params(n=n, k=2, s=2) for n in range(4, 8)]


def test_derive_seed_is_stable():
    assert derive_seed(1, 0) == derive_seed(1, 0)
    assert derive_seed(1, 0) != derive_seed(1, 1)
    assert derive_seed(1, 0) != derive_seed(2, 0)
    assert 0 <= derive_seed(9, 9) < 2**64


async def test_hunt_on_singletons_has_no_findings():
    report = await run_hunt_campaign(K1_GRID, seed=3, count=30, workers=1)
    assert report.runs == 30
    assert report.completed == 30
    assert report.findings == []
    assert report.errors == []


async def test_hunt_on_intersecting_graphs_has_no_findings():
    report = await run_hunt_campaign(GRAPH_GRID, seed=8, count=40, workers=1)
    assert report.findings == []
    assert report.completed == 40
    assert set(report.kinds) <= {"SubsetOfFStar", "SubsetOfGStar"}
    assert report.max_iterations <= 1


async def test_hunt_is_deterministic():
    first = await run_hunt_campaign(GRAPH_GRID, seed=21, count=15, workers=1)
    second = await run_hunt_campaign(GRAPH_GRID, seed=21, count=15, workers=1)
    assert first.model_dump() == second.model_dump()


def test_hunt_item_replays_from_seed():
    seed = derive_seed(4, 2)
    grid_dump = [p.model_dump() for p in GRAPH_GRID]
    assert replay_hunt_item(GRAPH_GRID, seed) == hunt_one(grid_dump, seed)


def test_oracle_row_matches_bound():
    row = build_oracle_row(oracle_one(Params(n=6, k=2, s=3).model_dump()))
    assert row.f == "10"
    assert row.bound == "10"
    assert row.match == "true"
    assert row.method == "covering+direct"


def test_oracle_row_below_threshold():
    row = build_oracle_row(oracle_one(Params(n=5, k=2, s=3).model_dump()))
    assert row.f == "10"
    assert row.bound == "n<sk: out of theorem scope"
    assert row.match == ""


def test_oracle_row_marks_inconclusive():
    row = build_oracle_row({"params": Params(n=9, k=3, s=3).model_dump(), "values": {}, "witness": None})
    assert row.f == "inconclusive"
    assert row.match == ""


async def test_oracle_grid_keeps_grid_order():
    grid = [Params(n=5, k=2, s=2), Params(n=4, k=2, s=2), Params(n=4, k=1, s=2)]
    items = await run_oracle_grid(grid, workers=1)
    assert [item["params"] for item in items] == [p.model_dump() for p in grid]
    assert [item["values"]["direct"] for item in items] == [4, 3, 1]


DESK_GRID = (
    [Params(n=n, k=2, s=s) for s in (2, 3) for n in range(2 * s, 9)]
    + [Params(n=n, k=3, s=2) for n in range(6, 8)]
    + [Params(n=n, k=1, s=s) for s in range(1, 5) for n in range(s, 9)]
)


def test_desk_grid_concluded_by_both_oracles():
    for p in DESK_GRID:
        row = build_oracle_row(oracle_one(p.model_dump(), budget=2_000_000))
        assert row.method == "covering+direct", p.label()
        assert row.f == str(emc_bound(p)), p.label()
        assert row.match == "true"


def test_oracle_row_gated_direct_has_no_verdict():
    item = oracle_one(Params(n=8, k=2, s=2).model_dump())
    assert item["values"] == {"covering": 7}
    row = build_oracle_row(item)
    assert row.method == "covering"
    assert row.f == "7"
    assert row.match == ""
    assert is_mismatch(row)


def test_hunt_targets_stay_near_the_bound():
    p = Params(n=7, k=2, s=3)
    rng = random.Random(5)
    targets = [_hunt_target(p, rng) for _ in range(200)]
    sized = [t for t in targets if t is not None]
    assert 0 < len(sized) < len(targets)
    assert all(emc_bound(p) // 2 <= t <= emc_bound(p) for t in sized)
