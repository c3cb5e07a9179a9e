"""
Value objects for the concavity radius toolkit
"""

from .functions import (
    CATALOG_BY_NAME, CatalogFunction, CloseToStarExtremal, ComplexPoint, FunctionSpec, as_complex,
    GeneralizedKoebe, MeromorphicKp, Monomial, PowerDistortion, RotatedFunction,
    RotatedKoebe, Schild, SeriesFunction, SubordinateProduct,
)
from .phi import Phi1, Phi2, Phi3, Phi4, Phi6, PhiSpec, RadiusResult, check_concavity_param
from .report import CLASS_IDS, RadiusQuery, ReportRecord, WitnessSummary
from .scan import CircleScan, PoleLimit
from .witness import SchwarzFunction, WitnessP

__all__ = [
    'CATALOG_BY_NAME', 'CatalogFunction', 'CloseToStarExtremal', 'ComplexPoint', 'FunctionSpec', 'as_complex',
    'GeneralizedKoebe', 'MeromorphicKp', 'Monomial', 'PowerDistortion', 'RotatedFunction',
    'RotatedKoebe', 'Schild', 'SeriesFunction', 'SubordinateProduct',
    'Phi1', 'Phi2', 'Phi3', 'Phi4', 'Phi6', 'PhiSpec', 'RadiusResult', 'check_concavity_param',
    'CLASS_IDS', 'RadiusQuery', 'ReportRecord', 'WitnessSummary', 'CircleScan', 'PoleLimit',
    'SchwarzFunction', 'WitnessP',
]
