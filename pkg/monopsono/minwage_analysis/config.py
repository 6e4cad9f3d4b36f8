"""
Regression specification configs and named presets.
"""

from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Mapping, Optional

from monopsono.core.enums import (
    ConcentrationIndex,
    Design,
    FeScheme,
    HhiSource,
    Interaction,
)
from monopsono.core.exceptions import ConfigurationError

BOOLEAN_STRINGS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


@dataclass(frozen=True)
class SpecConfig:
    """One regression specification on the establishment panel."""

    name: str = "custom"
    outcome: str = "mean_wage"
    design: Design = Design.CONCENTRATION_EQ2
    fe_scheme: FeScheme = FeScheme.ESTAB_ZONE_YEAR
    iv: bool = False
    interaction: Interaction = Interaction.NONE
    controls_on: bool = False
    time_trends_on: bool = False
    implicit_minwage_on: bool = False
    hhi_source: HhiSource = HhiSource.AVG
    concentration_index: ConcentrationIndex = ConcentrationIndex.HHI
    log_outcome: bool = True
    subsample: Dict[str, str] = field(default_factory=dict)
    base_year: Optional[int] = None

    def __post_init__(self):
        for name, enum in (
            ("design", Design),
            ("fe_scheme", FeScheme),
            ("interaction", Interaction),
            ("hhi_source", HhiSource),
            ("concentration_index", ConcentrationIndex),
        ):
            value = getattr(self, name)
            try:
                object.__setattr__(self, name, enum(value))
            except ValueError:
                raise ConfigurationError(
                    f"Invalid {name} '{value}'. Expected one of {[e.value for e in enum]}"
                ) from None
        if self.iv and self.design is not Design.CONCENTRATION_EQ2:
            raise ConfigurationError("iv requires the concentration_eq2 design")
        if (
            self.interaction is not Interaction.NONE
            and self.design is not Design.MINWAGE_EQ4
        ):
            raise ConfigurationError(
                f"interaction '{self.interaction.value}' requires the minwage_eq4 design"
            )
        if self.implicit_minwage_on and self.design is not Design.MINWAGE_EQ4:
            raise ConfigurationError("implicit_minwage_on requires the minwage_eq4 design")

    def to_dict(self) -> Dict[str, Any]:
        values = asdict(self)
        for key, value in values.items():
            if isinstance(value, Enum):
                values[key] = value.value
        return values

    @classmethod
    def from_mapping(cls, values: Mapping[str, str], base: Optional["SpecConfig"] = None):
        """
        Build a config from INI-style string values.

        ``preset`` selects a starting preset; remaining keys override it.
        ``subsample`` is written ``column=value[,column=value]``.
        """
        values = dict(values)
        preset = values.pop("preset", None)
        start = base or (get_preset(preset) if preset else cls())
        overrides: Dict[str, Any] = {}
        for key, raw in values.items():
            if key not in cls.__dataclass_fields__:
                raise ConfigurationError(f"Unknown spec key '{key}'")
            overrides[key] = _coerce(key, raw)
        return replace(start, **overrides)


def _coerce(key: str, raw: Any) -> Any:
    if not isinstance(raw, str):
        return raw
    text = raw.strip()
    if key in ("iv", "controls_on", "time_trends_on", "implicit_minwage_on", "log_outcome"):
        if text.lower() not in BOOLEAN_STRINGS:
            raise ConfigurationError(f"Spec key '{key}' expects a boolean, got '{raw}'")
        return BOOLEAN_STRINGS[text.lower()]
    if key == "base_year":
        try:
            return int(text) if text else None
        except ValueError:
            raise ConfigurationError(f"base_year must be an integer, got '{raw}'") from None
    if key == "subsample":
        pairs = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            column, sep, value = item.partition("=")
            if not sep:
                raise ConfigurationError(f"subsample entry '{item}' is not column=value")
            pairs[column.strip()] = value.strip()
        return pairs
    return text


_EQ2 = dict(design=Design.CONCENTRATION_EQ2, outcome="mean_wage", hhi_source=HhiSource.CURRENT)
_EQ4 = dict(
    design=Design.MINWAGE_EQ4,
    outcome="emp_overall",
    fe_scheme=FeScheme.ESTAB_YEAR,
    interaction=Interaction.LINEAR_HHI,
    controls_on=True,
    time_trends_on=True,
)

PRESETS: Dict[str, SpecConfig] = {
    "eq2_fe_estab": SpecConfig(name="eq2_fe_estab", fe_scheme=FeScheme.ESTAB, **_EQ2),
    "eq2_fe_year": SpecConfig(name="eq2_fe_year", fe_scheme=FeScheme.ESTAB_YEAR, **_EQ2),
    "eq2_fe_zone_year": SpecConfig(
        name="eq2_fe_zone_year", fe_scheme=FeScheme.ESTAB_ZONE_YEAR, **_EQ2
    ),
    "eq2_iv": SpecConfig(name="eq2_iv", fe_scheme=FeScheme.ESTAB_ZONE_YEAR, iv=True, **_EQ2),
    "eq2_iv_employment": SpecConfig(
        name="eq2_iv_employment",
        fe_scheme=FeScheme.ESTAB_ZONE_YEAR,
        iv=True,
        **{**_EQ2, "outcome": "emp_overall"},
    ),
    "eq4_linear": SpecConfig(name="eq4_linear", **_EQ4),
    "eq4_linear_wage": SpecConfig(name="eq4_linear_wage", **{**_EQ4, "outcome": "mean_wage"}),
    "eq4_bands": SpecConfig(
        name="eq4_bands", **{**_EQ4, "interaction": Interaction.HHI_BANDS}
    ),
    "eq4_kaitz": SpecConfig(
        name="eq4_kaitz", **{**_EQ4, "interaction": Interaction.KAITZ_QUINTILES_TRIPLE}
    ),
    "eq4_akm": SpecConfig(name="eq4_akm", **{**_EQ4, "interaction": Interaction.AKM_EXTRA}),
    "eq4_closure": SpecConfig(
        name="eq4_closure", **{**_EQ4, "outcome": "closure", "log_outcome": False}
    ),
    "eq4_balance": SpecConfig(
        name="eq4_balance",
        **{
            **_EQ4,
            "outcome": "hhi_current",
            "log_outcome": False,
            "interaction": Interaction.NONE,
        },
    ),
}


def get_preset(name: str) -> SpecConfig:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigurationError(
            f"Unknown spec preset '{name}'. Available: {sorted(PRESETS)}"
        ) from None
