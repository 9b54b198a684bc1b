"""Resource planning engine for scenario documents."""

from importlib import resources
from pathlib import Path

from ._fairplan import (
    ComputationError,
    Document,
    ScenarioError,
    ValidationError,
    campaign_hs06,
    convert_volume,
    hs06_per_event,
    hs06_scale_by_clock,
    offline_total,
    online_reco_time,
    reprocessed_accumulation,
    schema_version,
    validate,
)

__all__ = [
    "ComputationError",
    "Document",
    "ScenarioError",
    "ValidationError",
    "campaign_hs06",
    "convert_volume",
    "hs06_per_event",
    "hs06_scale_by_clock",
    "load",
    "offline_total",
    "online_reco_time",
    "reprocessed_accumulation",
    "schema_version",
    "shipped_scenario",
    "validate",
]


def load(path):
    """Parse a scenario document from a file."""
    return Document.parse(Path(path).read_text(encoding="utf-8"))


def shipped_scenario():
    """Path of the bundled FS+/MSVc scenario document."""
    return resources.files(__name__) / "data" / "fsplus.json"
