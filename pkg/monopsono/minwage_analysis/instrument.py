"""
Leave-one-out instrument for local concentration.
"""

import math
from typing import Optional

import numpy as np
import pandas as pd

from monopsono.common_conf import settings
from monopsono.core.exceptions import DomainError
from monopsono.data_model.records import MARKET_KEY_COLUMNS, MarketPanel, market_label
from monopsono.debug.core.categories import Categories

logger = Categories.get_logger(__name__, Categories.ESTIMATION)

INSTRUMENT_COLUMNS = MARKET_KEY_COLUMNS + ["market", "j", "contributing", "loo_ins"]


def leave_one_out_instrument(
    panel: MarketPanel,
    zone_count: Optional[int] = None,
    strict: Optional[bool] = None,
) -> pd.DataFrame:
    """
    Average log inverse firm count of the same industry in all other zones.

    For each (industry, zone, year) cell the log(1/J) values of the other
    zones where the industry exists are summed exactly (``math.fsum``), so
    the focal cell's own J never enters its value. The divisor is the
    number of contributing zones, or ``zone_count - 1`` when ``strict``.
    Cells whose industry exists in no other zone get NaN.
    """
    strict = settings.LOO_STRICT_DIVISOR if strict is None else strict
    zone_count = panel.zone_count if zone_count is None else zone_count
    if strict and zone_count < 2:
        raise DomainError("A strict leave-one-out divisor needs at least 2 zones")

    cells = panel.cells[MARKET_KEY_COLUMNS + ["j"]].copy()
    if (cells["j"] <= 0).any():
        raise DomainError("Firm counts must be positive")
    cells["log_inverse"] = -np.log(cells["j"].to_numpy(dtype=float))

    values = np.full(len(cells), np.nan)
    contributing = np.zeros(len(cells), dtype=int)
    for _, group in cells.groupby(["industry", "year"], sort=False):
        logs = group["log_inverse"].tolist()
        positions = group.index.to_numpy()
        others = len(logs) - 1
        for i, position in enumerate(positions):
            contributing[position] = others
            if others == 0:
                continue
            total = math.fsum(logs[:i] + logs[i + 1 :])
            values[position] = total / ((zone_count - 1) if strict else others)

    cells["contributing"] = contributing
    cells["loo_ins"] = values
    cells["market"] = [market_label(i, z) for i, z in zip(cells["industry"], cells["zone"])]
    missing = int(np.isnan(values).sum())
    if missing:
        logger.info(f"Instrument absent for {missing} cells without other zones")
    return cells[INSTRUMENT_COLUMNS]
