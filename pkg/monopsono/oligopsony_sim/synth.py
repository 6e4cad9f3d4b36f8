"""
Synthetic worker snapshots from a family of oligopsony markets.

Markets are industry by zone cells. Firm counts follow a national
industry random walk plus a local shock, establishments keep persistent
slots, head counts follow the Cournot employment per firm and log wages
carry a planted elasticity with respect to the HHI (1/J for symmetric
firms). Every random draw comes from a child of one ``SeedSequence``, so
a seed fixes the output.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from monopsono.common_conf import settings
from monopsono.core.exceptions import ConfigurationError, DomainError
from monopsono.data_model.records import SNAPSHOT_COLUMNS
from monopsono.debug.core.categories import Categories

from .economy import OligopsonyEconomy, competitive_equilibrium, cournot_equilibrium, minwage_response

logger = Categories.get_logger(__name__, Categories.SIMULATION)

CONTRACT_PATTERN = (
    ["regular_ft"] * 7 + ["regular_pt", "marginal", "apprentice"]
)
STATE_CYCLE = [1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 4]
DAILY_PER_HOURLY_UNIT = 40 / 7


@dataclass(frozen=True)
class SynthConfig:
    """Dimensions, economy family and noise scales of a synthetic panel."""

    n_industries: int = 20
    n_zones: int = 10
    n_years: int = 10
    start_year: int = 2000
    districts_per_zone: int = 3
    # economy family: industry i uses c * (1 + c_spread * i / n_industries)
    a: float = 4.0
    b: float = 0.05
    c: float = 20.0
    d: float = 0.5
    c_spread: float = 0.5
    # planted log-wage elasticity with respect to the HHI
    theta: float = -0.05
    mean_log_j: float = 1.6
    national_sd: float = 0.25
    local_sd: float = 0.15
    endogeneity: float = 0.0
    employment_scale: float = 0.5
    wage_noise: float = 0.05
    emp_noise: float = 0.10
    estab_sd: float = 0.10
    zone_year_sd: float = 0.02
    switch_share: float = 0.3
    minwage: bool = False
    regulated_share: float = 0.5
    minwage_bite: float = 0.9
    minwage_growth: float = 0.02
    seed: int = 0

    def __post_init__(self):
        for name in ("n_industries", "n_zones", "n_years", "districts_per_zone"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive")

    @classmethod
    def for_markets(cls, n_markets: int, n_years: int, seed: int = 0, **kwargs) -> "SynthConfig":
        """Config with about ``n_markets`` industry by zone markets."""
        n_zones = kwargs.pop("n_zones", min(10, max(1, n_markets)))
        n_industries = max(1, -(-n_markets // n_zones))
        return cls(
            n_industries=n_industries, n_zones=n_zones, n_years=n_years, seed=seed, **kwargs
        )

    @classmethod
    def from_mapping(cls, values: Mapping[str, str], seed: Optional[int] = None) -> "SynthConfig":
        """
        Build a config from INI-style string values.

        ``markets`` asks for about that many markets instead of giving
        ``n_industries`` and ``n_zones``.
        """
        values = dict(values)
        n_markets = values.pop("markets", None)
        kwargs: Dict[str, Any] = {}
        for key, raw in values.items():
            if key not in cls.__dataclass_fields__:
                raise ConfigurationError(f"Unknown synth key '{key}'")
            kwargs[key] = _coerce(key, cls.__dataclass_fields__[key].type, raw)
        if seed is not None:
            kwargs["seed"] = seed
        if n_markets:
            n_years = kwargs.pop("n_years", cls.n_years)
            return cls.for_markets(_coerce("markets", int, n_markets), n_years, **kwargs)
        return cls(**kwargs)

    def without_noise(self) -> "SynthConfig":
        return SynthConfig(
            **{
                **asdict(self),
                "local_sd": 0.0,
                "wage_noise": 0.0,
                "emp_noise": 0.0,
                "estab_sd": 0.0,
                "zone_year_sd": 0.0,
                "endogeneity": 0.0,
            }
        )


def _coerce(key: str, kind: type, raw: Any) -> Any:
    if not isinstance(raw, str):
        return raw
    text = raw.strip().lower()
    try:
        if kind is bool:
            if text not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(text)
            return text in ("true", "1", "yes")
        return kind(text)
    except ValueError:
        raise ConfigurationError(
            f"Synth key '{key}' expects {kind.__name__}, got '{raw}'"
        ) from None


@dataclass
class SynthPanel:
    """Generated input tables plus the planted truth."""

    snapshots: pd.DataFrame
    sectors: pd.DataFrame
    minwage: pd.DataFrame
    controls: pd.DataFrame
    flows: pd.DataFrame
    delineation: pd.DataFrame
    ground_truth: pd.DataFrame
    markets: pd.DataFrame = field(repr=False)

    def tables(self) -> Dict[str, pd.DataFrame]:
        return {
            "snapshots.csv": self.snapshots,
            "sectors.csv": self.sectors,
            "minwage.csv": self.minwage,
            "controls.csv": self.controls,
            "flows.csv": self.flows,
            "delineation_truth.csv": self.delineation,
            "ground_truth.csv": self.ground_truth,
        }


def industry_code(i: int) -> str:
    return f"{1000 + i:04d}0"


def district_code(zone: int, k: int) -> str:
    state = STATE_CYCLE[zone % len(STATE_CYCLE)]
    return f"{state:02d}{zone:02d}{k}"


def _economy(config: SynthConfig, industry: int) -> OligopsonyEconomy:
    c = config.c * (1 + config.c_spread * industry / config.n_industries)
    return OligopsonyEconomy(config.a, config.b, c, config.d, 1)


def _sector_of(config: SynthConfig, industry: int) -> str:
    return f"S{industry % max(1, config.n_industries // 2):02d}"


def _minwage_schedule(config: SynthConfig) -> pd.DataFrame:
    """
    Staggered introductions for a share of sectors, same floor in every territory.

    Floors rise every other year after their introduction.
    """
    sectors = sorted({_sector_of(config, i) for i in range(config.n_industries)})
    regulated = sectors[: int(round(config.regulated_share * len(sectors)))]
    rows = []
    for position, sector in enumerate(regulated):
        members = [i for i in range(config.n_industries) if _sector_of(config, i) == sector]
        level = min(cournot_equilibrium(_economy(config, i).with_firms(2)).wage for i in members)
        intro = config.start_year + 1 + position % max(1, config.n_years - 1)
        for territory in ("west", "east", "berlin"):
            for year in range(intro, config.start_year + config.n_years):
                rows.append(
                    {
                        "sector": sector,
                        "territory": territory,
                        "valid_from": f"{year}-01-01",
                        "valid_to": f"{year}-12-31",
                        "hourly_wage": round(
                            config.minwage_bite
                            * level
                            * (1 + config.minwage_growth) ** ((year - intro) // 2),
                            2,
                        ),
                    }
                )
    return pd.DataFrame(rows, columns=["sector", "territory", "valid_from", "valid_to", "hourly_wage"])


def _territory(district: str) -> str:
    state = int(district[:2])
    if state == 11:
        return "berlin"
    return "east" if 12 <= state <= 16 else "west"


def _market(config, market, industry, zone, national, zone_year, floors, seed_seq):
    """Establishment-year rows of one market."""
    rng = np.random.default_rng(seed_seq)
    years = config.n_years
    persistent = rng.standard_normal()
    local = config.local_sd * (persistent + rng.standard_normal(years)) / np.sqrt(2)
    log_j = config.mean_log_j + national[industry] + local
    firm_counts = np.maximum(1, np.rint(np.exp(log_j))).astype(int)
    slots = int(firm_counts.max())
    estab_effects = config.estab_sd * rng.standard_normal(slots)
    emp_draws = rng.standard_normal((slots, years))

    econ = _economy(config, industry)
    base_wage = np.log(competitive_equilibrium(econ).wage * DAILY_PER_HOURLY_UNIT)
    sector = _sector_of(config, industry)
    rows = []
    active_before = np.zeros(slots, dtype=bool)
    spells = np.zeros(slots, dtype=int)
    for t in range(years):
        year = config.start_year + t
        j = int(firm_counts[t])
        econ_j = econ.with_firms(j)
        free = cournot_equilibrium(econ_j)
        per_firm = free.employment_per_firm
        district = district_code(zone, 0)
        floor = floors.get((sector, _territory(district), year))
        floor_daily = None
        if floor is not None:
            point = minwage_response(econ_j, floor)
            per_firm = point.employment_per_firm
            floor_daily = floor * DAILY_PER_HOURLY_UNIT
        for slot in range(slots):
            active = slot < j
            if active and not active_before[slot]:
                spells[slot] += 1
            active_before[slot] = active
            if not active:
                continue
            headcount = max(
                1,
                int(
                    np.rint(
                        config.employment_scale
                        * per_firm
                        * np.exp(config.emp_noise * emp_draws[slot, t])
                    )
                ),
            )
            log_wage = (
                base_wage
                + config.theta * np.log(1.0 / j)
                + estab_effects[slot]
                + zone_year[zone, t]
                + config.endogeneity * local[t]
            )
            rows.append(
                {
                    "market": market,
                    "industry": industry_code(industry),
                    "zone": zone,
                    "district": district_code(zone, slot % config.districts_per_zone),
                    "estab_id": f"E{market:05d}{slot:03d}{spells[slot]:02d}",
                    "estab_effect": estab_effects[slot],
                    "year": year,
                    "j": j,
                    "headcount": headcount,
                    "log_wage": log_wage,
                    "floor_daily": floor_daily,
                }
            )
    return rows


def _worker_rows(config: SynthConfig, estab_years: pd.DataFrame, rng) -> pd.DataFrame:
    """Expand establishment-years into worker snapshots with persistent ids and switchers."""
    repeats = estab_years["headcount"].to_numpy()
    base = estab_years.loc[estab_years.index.repeat(repeats)].reset_index(drop=True)
    position = np.concatenate([np.arange(h) for h in repeats]) if len(repeats) else np.array([], dtype=int)
    base["position"] = position
    first_year = base.groupby("estab_id")["year"].transform("min")
    tenure = 3 + position % 4
    base["spell"] = (base["year"] - first_year + position) // tenure
    base["spell_key"] = (
        base["estab_id"] + "-" + base["position"].astype(str) + "-" + base["spell"].astype(str)
    )

    spans = base.groupby("spell_key")["year"].agg(["min", "max"])
    person = {key: key for key in spans.index}
    last_year = config.start_year + config.n_years - 1
    for year in range(config.start_year + 1, last_year + 1):
        leavers = spans.index[(spans["max"] == year - 1)].to_numpy()
        starters = spans.index[(spans["min"] == year)].to_numpy()
        if leavers.size == 0 or starters.size == 0:
            continue
        chosen = starters[rng.random(starters.size) < config.switch_share]
        matched = rng.permutation(leavers)[: chosen.size]
        for starter, leaver in zip(chosen[: matched.size], matched):
            person[starter] = person[leaver]
    base["worker_id"] = base["spell_key"].map(person)

    contracts = np.array(CONTRACT_PATTERN)[position % len(CONTRACT_PATTERN)]
    noise = config.wage_noise * rng.standard_normal(len(base))
    wage = np.exp(base["log_wage"].to_numpy() + noise)
    floor = base["floor_daily"].to_numpy(dtype=float)
    wage = np.where(np.isnan(floor), wage, np.maximum(wage, np.nan_to_num(floor)))
    daily = np.where(contracts == "regular_pt", wage * 0.5, wage)
    daily = np.where(contracts == "marginal", np.minimum(wage * 0.15, 15.0), daily)
    snapshots = pd.DataFrame(
        {
            "worker_id": base["worker_id"],
            "estab_id": base["estab_id"],
            "industry": base["industry"],
            "region": base["district"],
            "year": base["year"],
            "daily_wage": daily,
            "contract": contracts,
        },
        columns=SNAPSHOT_COLUMNS,
    )
    snapshots.loc[snapshots["contract"] == "apprentice", "daily_wage"] = np.nan
    return snapshots.sort_values(["year", "estab_id", "worker_id"], kind="mergesort").reset_index(drop=True)


def _flows(config: SynthConfig) -> pd.DataFrame:
    """Block commuting matrix: zones are the planted blocks."""
    rows = []
    districts = [
        (zone, district_code(zone, k))
        for zone in range(config.n_zones)
        for k in range(config.districts_per_zone)
    ]
    for origin_zone, origin in districts:
        for destination_zone, destination in districts:
            if origin == destination:
                commuters = 1000
            elif origin_zone == destination_zone:
                commuters = 150
            else:
                commuters = 5
            rows.append({"origin": origin, "destination": destination, "commuters": commuters})
    return pd.DataFrame(rows)


def synth_panel(config: Optional[SynthConfig] = None, n_jobs: Optional[int] = None) -> SynthPanel:
    """Generate snapshots and the companion input files for a synthetic economy."""
    config = config or SynthConfig()
    n_jobs = settings.THREADS if n_jobs is None else n_jobs
    root = np.random.SeedSequence(config.seed)
    national_seq, zone_seq, worker_seq, controls_seq, market_root = root.spawn(5)

    national_rng = np.random.default_rng(national_seq)
    steps = config.national_sd * national_rng.standard_normal((config.n_industries, config.n_years))
    national = np.cumsum(steps, axis=1) - steps[:, :1]
    zone_year = config.zone_year_sd * np.random.default_rng(zone_seq).standard_normal(
        (config.n_zones, config.n_years)
    )

    schedule = _minwage_schedule(config)
    if not config.minwage:
        schedule = schedule.iloc[0:0]
    floors = {
        (row.sector, row.territory, int(row.valid_from[:4])): row.hourly_wage
        for row in schedule.itertuples(index=False)
    }

    n_markets = config.n_industries * config.n_zones
    children = market_root.spawn(n_markets)
    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_market)(
            config,
            market,
            market // config.n_zones,
            market % config.n_zones,
            national,
            zone_year,
            floors,
            children[market],
        )
        for market in range(n_markets)
    )
    estab_years = pd.DataFrame([row for rows in results for row in rows])
    snapshots = _worker_rows(config, estab_years, np.random.default_rng(worker_seq))

    sectors = pd.DataFrame(
        {
            "industry_prefix": [industry_code(i)[:4] for i in range(config.n_industries)],
            "sector": [_sector_of(config, i) for i in range(config.n_industries)],
        }
    )
    controls = _controls(config, estab_years, np.random.default_rng(controls_seq))
    flows = _flows(config)
    delineation = pd.DataFrame(
        {
            "district": [
                district_code(zone, k)
                for zone in range(config.n_zones)
                for k in range(config.districts_per_zone)
            ],
            "zone": [
                f"cz{zone:03d}"
                for zone in range(config.n_zones)
                for _ in range(config.districts_per_zone)
            ],
        }
    )
    ground_truth = pd.DataFrame(
        [{"parameter": key, "value": value} for key, value in asdict(config).items()]
        + [{"parameter": "n_markets", "value": n_markets}]
    )
    logger.info(
        f"Synthesized {len(snapshots)} snapshots for {n_markets} markets "
        f"over {config.n_years} years"
    )
    return SynthPanel(
        snapshots=snapshots,
        sectors=sectors,
        minwage=schedule,
        controls=controls,
        flows=flows,
        delineation=delineation,
        ground_truth=ground_truth,
        markets=estab_years,
    )


def _controls(config: SynthConfig, estab_years: pd.DataFrame, rng) -> pd.DataFrame:
    """CBA shares per sector, territory and year plus each establishment's wage premium."""
    sectors = sorted({_sector_of(config, i) for i in range(config.n_industries)})
    rows: List[dict] = []
    for sector in sectors:
        level = rng.uniform(0.3, 0.7)
        for territory in ("west", "east", "berlin"):
            for t in range(config.n_years):
                rows.append(
                    {
                        "sector": sector,
                        "territory": territory,
                        "year": str(config.start_year + t),
                        "log_employment": "",
                        "cba_share": round(level - 0.01 * t + 0.02 * rng.standard_normal(), 4),
                        "estab_id": "",
                        "akm_premium": "",
                    }
                )
    premiums = estab_years.drop_duplicates("estab_id")[["estab_id", "estab_effect"]]
    for row in premiums.itertuples(index=False):
        rows.append(
            {
                "sector": "",
                "territory": "",
                "year": "",
                "log_employment": "",
                "cba_share": "",
                "estab_id": row.estab_id,
                "akm_premium": round(float(row.estab_effect), 6),
            }
        )
    return pd.DataFrame(rows)
