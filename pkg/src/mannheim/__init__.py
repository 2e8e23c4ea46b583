"""Residue constellations over Z[w], Mannheim-type metrics, and perfect w-cyclic codes."""

from .codec import (Code, DecodeResult, PerfectnessReport, build_code, decode_single, encode,
                    simulate, syndrome, verify_perfect, wshift)
from .eisenstein import UNITS, EisensteinInt, parse, render, unit_set
from .errors import MannheimError
from .metric import WeightKind, audit_metric, compare_weights, distance, graph_weight, weight_M, weight_m
from .residue_field import ResidueField, build_field, label_ratio, split_prime

__all__ = [
    "Code", "DecodeResult", "EisensteinInt", "MannheimError", "PerfectnessReport", "ResidueField",
    "UNITS", "WeightKind", "audit_metric", "build_code", "build_field", "compare_weights",
    "decode_single", "distance", "encode", "graph_weight", "label_ratio", "parse", "render",
    "simulate", "split_prime", "syndrome", "unit_set", "verify_perfect", "weight_M", "weight_m",
    "wshift",
]
