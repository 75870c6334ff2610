"""Exact big-integer determinants, differential testing and Casorati positivity scans."""

from .casorati import IndexSet, ScanReport, casorati_det, casorati_matrix, general_scan, ks_scan
from .det import DetAlgorithm, det_bareiss, det_cofactor, det_modular, hadamard_bound
from .difftest import CasDialect, FuzzReport, Verdict, cross_check, export_cas, fuzz_run, import_result
from .fixture import paper_fixture
from .gen import GENERATOR_ID, GenConfig, Prng, compose_big_matrix, gen_basic_matrix, sample_uniform
from .matrix import IntMatrix, mat_add, mat_mul, parse_matrix, format_matrix, render_sci
from .orthopoly import (
    DiscreteMeasure,
    IntPolynomial,
    eval_poly,
    hankel_det,
    inner_product,
    moments,
    orthogonal_poly,
)

__version__ = "0.1.0"
