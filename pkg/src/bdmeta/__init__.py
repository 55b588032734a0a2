"""Metaplectic covers of split tori and reductive groups from Brylinski-Deligne data."""
from .rootdata import RootDatum, preset, validate
from .metadual import BisectorData, fair_default_bisector, metaplectic_data, dual_descriptor, enlarged_dual
from .localfield import TameFieldModel
from .covertorus import CoveringTorusModel, distinguished_character, obstruction_report

__version__ = "0.1.0"
