"""
Assembly of regression frames from the establishment panel.
"""

from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from monopsono.common_conf import settings
from monopsono.core.enums import Design, FeScheme, HhiSource, Interaction
from monopsono.core.exceptions import ConfigurationError, EmptySampleError
from monopsono.data_model.establishments import kaitz_quintile
from monopsono.data_model.records import EstabPanel
from monopsono.debug.core.categories import Categories
from monopsono.econometrics.frame import RegressionFrame

from .config import SpecConfig

logger = Categories.get_logger(__name__, Categories.ESTIMATION)

CLUSTER_COLUMN = "market"
CONTROL_COLUMNS = ["cba_share", "log_employment"]
HHI_COLUMNS = {
    HhiSource.AVG: "hhi_avg",
    HhiSource.PREDETERMINED: "hhi_predetermined",
    HhiSource.CURRENT: "hhi_current",
}
LOG_MW = "log_mw"
LOG_MW_X_HHI = "log_mw_x_hhi"
LOG_MW_X_AKM = "log_mw_x_akm"
OUTCOME = "outcome"
BAND_PREFIX = "log_mw_x_band"
QUINTILE_PREFIX = "log_mw_x_q"
QUINTILE_SLOPE_PREFIX = "log_mw_x_hhi_x_q"


class _Trace:
    """Row counts after each sample restriction."""

    def __init__(self, data: pd.DataFrame):
        self.steps: List[Tuple[str, int]] = [("panel", len(data))]

    def keep(self, data: pd.DataFrame, mask, step: str) -> pd.DataFrame:
        kept = data[np.asarray(mask, dtype=bool)]
        self.steps.append((step, len(kept)))
        return kept


def _fixed_effects(data: pd.DataFrame, scheme: FeScheme) -> Tuple[pd.DataFrame, List[str]]:
    if scheme is FeScheme.ESTAB:
        return data, ["estab_id"]
    if scheme is FeScheme.ESTAB_YEAR:
        return data, ["estab_id", "year"]
    data = data.assign(zone_year=data["zone"].astype(str) + "|" + data["year"].astype(str))
    return data, ["estab_id", "zone_year"]


def _available_controls(data: pd.DataFrame) -> List[str]:
    return [c for c in CONTROL_COLUMNS if c in data.columns and data[c].notna().any()]


def _trend_columns(
    data: pd.DataFrame, scheme: FeScheme, base_year: Optional[int]
) -> Tuple[pd.DataFrame, List[str]]:
    """Sector-specific linear trends; the first is dropped when year effects are absorbed."""
    base = int(data["year"].min()) if base_year is None else base_year
    sectors = sorted(data["sector"].unique())
    if scheme is not FeScheme.ESTAB:
        sectors = sectors[1:]
    elapsed = (data["year"] - base).astype(float)
    columns = {}
    for sector in sectors:
        columns[f"trend_{sector}"] = np.where(data["sector"] == sector, elapsed, 0.0)
    return data.assign(**columns), list(columns)


def hhi_band(hhi) -> np.ndarray:
    """Band 1..5 of HHI values; each inner edge opens the next band."""
    inner = np.asarray(settings.HHI_BAND_EDGES[1:-1], dtype=float)
    return np.searchsorted(inner, np.asarray(hhi, dtype=float), side="right") + 1


def _categorical_terms(
    data: pd.DataFrame, groups: pd.Series, base: pd.Series, prefix: str
) -> Tuple[pd.DataFrame, List[str], List[int]]:
    """
    Interactions of ``base`` with each populated group above the lowest one.

    Returns the populated groups too; the first is the reference.
    """
    populated = [int(group) for group in sorted(groups.unique())]
    columns = {}
    for group in populated[1:]:
        columns[f"{prefix}{group}"] = np.where(groups == group, base, 0.0)
    return data.assign(**columns), list(columns), populated


def _subsample(data: pd.DataFrame, config: SpecConfig, trace: _Trace) -> pd.DataFrame:
    for column, value in config.subsample.items():
        if column not in data.columns:
            raise ConfigurationError(f"Subsample column '{column}' not in panel")
        data = trace.keep(data, data[column].astype(str) == value, f"{column}={value}")
    return data


def _outcome(data: pd.DataFrame, config: SpecConfig, trace: _Trace) -> pd.DataFrame:
    if config.outcome not in data.columns:
        raise ConfigurationError(f"Outcome column '{config.outcome}' not in panel")
    values = data[config.outcome].astype(float)
    if config.log_outcome:
        data = trace.keep(data, values > 0, "positive outcome")
        return data.assign(**{OUTCOME: np.log(data[config.outcome].astype(float))})
    data = trace.keep(data, values.notna(), "observed outcome")
    return data.assign(**{OUTCOME: data[config.outcome].astype(float)})


def _concentration_design(data, config, trace, instrument):
    index_column = f"{config.concentration_index.value}_current"
    regressor = f"log_{config.concentration_index.value}"
    regulated_from = data["first_regulated_year"]
    data = trace.keep(
        data,
        regulated_from.isna() | (data["year"] < regulated_from),
        "before regulation",
    )
    data = trace.keep(data, data[index_column] > 0, "observed concentration")
    data = data.assign(**{regressor: np.log(data[index_column])})
    if not config.iv:
        return data, [regressor], [], []
    if instrument is None:
        raise ConfigurationError("IV specification needs the leave-one-out instrument")
    data = data.merge(
        instrument[["market", "year", "loo_ins"]], on=["market", "year"], how="left"
    )
    data = trace.keep(data, data["loo_ins"].notna(), "instrument available")
    return data, [], [regressor], ["loo_ins"]


def _minwage_design(data, config, trace):
    minwage = data["minwage"]
    if config.implicit_minwage_on:
        minwage = minwage.fillna(data["implicit_minwage"])
    data = trace.keep(data.assign(_minwage=minwage), minwage > 0, "minimum wage in force")
    log_mw = np.log(data["_minwage"])
    data = data.assign(**{LOG_MW: log_mw})
    hhi_column = HHI_COLUMNS[config.hhi_source]
    interaction = config.interaction
    exog = [LOG_MW]
    groups: Dict[str, List[int]] = {}
    if interaction is Interaction.NONE:
        return data, exog, groups

    data = trace.keep(data, data[hhi_column].notna(), f"observed {hhi_column}")
    log_mw = data[LOG_MW]
    hhi = data[hhi_column]
    if config.hhi_source is HhiSource.CURRENT:
        exog.append(hhi_column)

    if interaction is Interaction.HHI_BANDS:
        bands = pd.Series(hhi_band(hhi.to_numpy()), index=data.index)
        data, terms, groups[BAND_PREFIX] = _categorical_terms(data, bands, log_mw, BAND_PREFIX)
        return data, exog + terms, groups

    data = data.assign(**{LOG_MW_X_HHI: log_mw * hhi})
    exog.append(LOG_MW_X_HHI)

    if interaction is Interaction.AKM_EXTRA:
        data = trace.keep(data, data["akm_premium"].notna(), "observed akm_premium")
        data = data.assign(**{LOG_MW_X_AKM: data[LOG_MW] * data["akm_premium"]})
        exog.append(LOG_MW_X_AKM)
    elif interaction is Interaction.KAITZ_QUINTILES_TRIPLE:
        data = trace.keep(data, data["kaitz_avg"].notna(), "observed kaitz_avg")
        quintiles = pd.Series(kaitz_quintile(data["kaitz_avg"].to_numpy()), index=data.index)
        data, main_terms, groups[QUINTILE_PREFIX] = _categorical_terms(
            data, quintiles, data[LOG_MW], QUINTILE_PREFIX
        )
        data, triple_terms, _ = _categorical_terms(
            data, quintiles, data[LOG_MW_X_HHI], QUINTILE_SLOPE_PREFIX
        )
        exog += main_terms + triple_terms
    return data, exog, groups


def assemble_spec(
    panel: Union[EstabPanel, pd.DataFrame],
    config: SpecConfig,
    instrument: Optional[pd.DataFrame] = None,
) -> RegressionFrame:
    """
    Build the regression frame of a specification.

    The concentration design keeps establishment-years before the first
    minimum wage and regresses the (log) outcome on the log concentration
    index, instrumented by ``loo_ins`` when ``config.iv``. The minimum-wage
    design keeps rows with a wage floor in force and regresses on the log
    minimum wage and its interactions; time-invariant HHI levels are
    absorbed by the establishment effects. Standard errors cluster by
    labor market.
    """
    data = panel.frame if isinstance(panel, EstabPanel) else panel
    trace = _Trace(data)
    data = _subsample(data, config, trace)
    data = _outcome(data, config, trace)

    endog: List[str] = []
    instruments: List[str] = []
    groups: Dict[str, List[int]] = {}
    if config.design is Design.CONCENTRATION_EQ2:
        data, exog, endog, instruments = _concentration_design(
            data, config, trace, instrument
        )
    else:
        data, exog, groups = _minwage_design(data, config, trace)

    if config.controls_on:
        controls = _available_controls(data)
        for column in controls:
            data = trace.keep(data, data[column].notna(), f"observed {column}")
        exog += controls
    if config.time_trends_on and not data.empty:
        data, trends = _trend_columns(data, config.fe_scheme, config.base_year)
        exog += trends

    if data.empty:
        raise EmptySampleError(f"Specification '{config.name}' has no observations", trace.steps)
    data, fe = _fixed_effects(data.reset_index(drop=True), config.fe_scheme)
    logger.debug(f"Assembled '{config.name}': {trace.steps}")
    return RegressionFrame(
        data=data,
        y=OUTCOME,
        exog=exog,
        endog=endog,
        instruments=instruments,
        fe=fe,
        cluster=CLUSTER_COLUMN,
        groups=groups,
    )
