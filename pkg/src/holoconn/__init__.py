"""Exact symbolic calculus for holomorphic affine and projective connections
on two-dimensional charts."""

__version__ = "0.1.0"

from .connection import (
    Connection, CurvatureTensor, DiffTensor, add, curvature, difference,
    is_flat, is_torsion_free, torsion,
)
from .errors import (
    AnalysisError, ArityError, BadSpectrum, ChartMismatch, DependsOnFirstVariable,
    HoloconnError, InputSyntaxError, NotSymmetric, NotTorsionFree, NotUnimodular,
    ParseError, PoleAtBase, PoleCreated, UnknownVariable,
)
from .expr import ChartPoint, Expr, Scalar, SeriesJet, jet, parse_expr
from .families import (
    EllipticFamilyData, TranslationInvariantData, elliptic_closed_form_curvature,
    elliptic_family, flatness_relations, gamma_equivariance_residuals,
    inoue_sm_invariant_space, translation_invariant,
)
from .killing import (
    JetSolutionSpace, KillingSystem, VectorFieldSymbolic, is_killing,
    killing_dimension, killing_jet_space, killing_system,
)
from .projective import (
    GeodesicODE, LiouvillePair, geodesic_ode, is_projectively_flat,
    liouville_invariants, projective_change, trace_decompose,
)
