"""
Pipelines exposés comme sous-commandes de la CLI.
"""

from typing import Optional

from tropical_app.core.engine import PipelineEngine
from tropical_app.core.settings import Settings
from .algebra import ChartPipeline, InitialFormPipeline, JacobianPipeline, RelationsPipeline, ValuationPipeline
from .fans import ConvertFanPipeline, OrbitFVectorPipeline, StarScanPipeline
from .geometry import DualGraphPipeline, FacetsPipeline, SubdividePipeline, TreePipeline
from .matroids import EnumeratePipeline, NamedPipeline


ALL_PIPELINES = (
    SubdividePipeline,
    DualGraphPipeline,
    FacetsPipeline,
    RelationsPipeline,
    InitialFormPipeline,
    ChartPipeline,
    JacobianPipeline,
    ValuationPipeline,
    TreePipeline,
    StarScanPipeline,
    OrbitFVectorPipeline,
    ConvertFanPipeline,
    EnumeratePipeline,
    NamedPipeline,
)


def build_engine(settings: Optional[Settings] = None) -> PipelineEngine:
    """Moteur avec toutes les sous-commandes enregistrées."""
    engine = PipelineEngine(settings)
    for pipeline_cls in ALL_PIPELINES:
        engine.register(pipeline_cls())
    return engine


__all__ = [
    "ALL_PIPELINES",
    "build_engine",
    "ChartPipeline",
    "ConvertFanPipeline",
    "DualGraphPipeline",
    "EnumeratePipeline",
    "FacetsPipeline",
    "InitialFormPipeline",
    "JacobianPipeline",
    "NamedPipeline",
    "OrbitFVectorPipeline",
    "RelationsPipeline",
    "StarScanPipeline",
    "SubdividePipeline",
    "TreePipeline",
    "ValuationPipeline",
]
