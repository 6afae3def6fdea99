"""Integral cohomology of rank-one sign local systems on hyperplane arrangement complements."""

from .arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    IntersectionPoset,
    betti_numbers,
    cone,
    intersection_poset,
    localization,
    projective_betti,
)
from .core_math import AbelianGroup, cohomology_of_pair, rank, smith_normal_form, solve_intersection
from .density import (
    DenseEdgeReport,
    ProjectiveClosure,
    SignLocalSystem,
    cdo_check,
    dense_edges_at_infinity,
    edge_monodromy,
    is_irreducible,
    matroid_components,
)
from .documents import ArrangementDocument, load_corpus, load_document, parse_document
from .engine import CDOViolation, CohomologyProfile, beta_sequence, lemma_central_cohomology, theorem_cohomology
from .salvetti import SalvettiComplex, build_salvetti, enumerate_faces, oracle_cohomology, twisted_coboundaries

__version__ = "0.1.0"
