"""Path coalgebras of quivers, their monomial subcoalgebras, complete path
algebras, finite-dimensional comodules, and coreflexivity certificates."""

from .coalgebra import PathVector, coradical_layer, counit, delta
from .criteria import Report, Verdict, XEntry, ext_quiver, local_finite, propose_xdata, report, thm41, thm43, thm44
from .dual import TruncatedDual, convolve, evaluate, functional, invert, unit
from .fields import QQ, Field, Fp
from .paths import NOPATH, PairStats, arrow_count, enumerate_paths, max_len, pair_stats, path_count
from .quiver import OMEGA, Bundle, Path, Quiver, compose, factorizations, loop, single_arrow, subpaths, thick, two_arrows
from .reps import (
    LEFT,
    RIGHT,
    Representation,
    assemble_extension,
    coboundary,
    direct_sum,
    euler_pairing,
    ext1,
    hom,
    injective_trunc,
    is_comodule,
    loewy,
    quotient_by_socle,
    sequence_check_thick,
    side_flip,
    simple,
    socle,
)
from .shape import AllowedAutomaton, MonomialShape, closure

__all__ = [
    "AllowedAutomaton",
    "arrow_count",
    "assemble_extension",
    "Bundle",
    "closure",
    "coboundary",
    "compose",
    "convolve",
    "coradical_layer",
    "counit",
    "delta",
    "direct_sum",
    "enumerate_paths",
    "euler_pairing",
    "evaluate",
    "ext1",
    "ext_quiver",
    "factorizations",
    "Field",
    "Fp",
    "functional",
    "hom",
    "injective_trunc",
    "invert",
    "is_comodule",
    "LEFT",
    "local_finite",
    "loewy",
    "loop",
    "max_len",
    "MonomialShape",
    "NOPATH",
    "OMEGA",
    "pair_stats",
    "PairStats",
    "Path",
    "path_count",
    "PathVector",
    "propose_xdata",
    "QQ",
    "Quiver",
    "quotient_by_socle",
    "report",
    "Report",
    "Representation",
    "RIGHT",
    "sequence_check_thick",
    "side_flip",
    "simple",
    "single_arrow",
    "socle",
    "subpaths",
    "thick",
    "thm41",
    "thm43",
    "thm44",
    "TruncatedDual",
    "two_arrows",
    "unit",
    "Verdict",
    "XEntry",
]

__version__ = "0.1.0"
