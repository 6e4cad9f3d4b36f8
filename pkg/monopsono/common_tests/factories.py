"""
Factory Boy factories for monopsono tests.
"""

import factory

from monopsono.oligopsony_sim.economy import OligopsonyEconomy


class SnapshotRecordFactory(factory.DictFactory):
    """One June-30 worker snapshot as a dict in input-file column names."""

    worker_id = factory.Sequence(lambda n: f"W{n:06d}")
    estab_id = "E1"
    industry = "12345"
    region = "05111"
    year = 2010
    daily_wage = 100.0
    contract = "regular_ft"


class MarginalSnapshotFactory(SnapshotRecordFactory):
    contract = "marginal"
    daily_wage = 10.0


class ApprenticeSnapshotFactory(SnapshotRecordFactory):
    contract = "apprentice"
    daily_wage = None


class OligopsonyEconomyFactory(factory.Factory):
    """Textbook linear economy: w = L supply, MRPL flat at 10."""

    class Meta:
        model = OligopsonyEconomy

    a = 0.0
    b = 1.0
    c = 10.0
    d = 0.0
    j = 1


def snapshot_records(estab_sizes, **fields):
    """Snapshot dicts: ``estab_sizes`` maps estab_id to head count."""
    records = []
    for estab_id, size in estab_sizes.items():
        records.extend(SnapshotRecordFactory.build_batch(size, estab_id=estab_id, **fields))
    return records
