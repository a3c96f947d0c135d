"""Fox calculus, Alexander strata and Betti numbers of abelian covers.

Presentations are passed as text in the ``gens:`` / ``rel:`` format; ``None``
selects the built-in presentation with its fixed assignment to r, s.
"""

import json

from . import _core
from ._core import BoundViolation, ParseError, divisor_sum

__all__ = [
    "BoundViolation",
    "ParseError",
    "abelianization",
    "builtin_presentation",
    "census",
    "certify_strata",
    "cover_invariants",
    "divisor_sum",
    "fox_matrix",
    "run_cli",
    "sublattices",
    "surface_invariants",
]


def fox_matrix(presentation=None):
    """Alexander matrix as {variables, images, entries[{generator, relation, terms, text}]}."""
    return json.loads(_core.fox_matrix(presentation))


def abelianization(presentation=None):
    return json.loads(_core.abelianization(presentation))


def certify_strata(modulus_bound=12, samples=200, seed=20170601, matrix="computed"):
    return json.loads(_core.certify_strata(modulus_bound, samples, seed, matrix))


def census(presentation=None, n_max=12):
    """{rows: [{n, hnf, invariant_factors, b1}], summary: {...}}."""
    return json.loads(_core.census(presentation, n_max))


def sublattices(n, dim=2):
    """Upper triangles of the Hermite bases of all index-n sublattices of Z^dim."""
    return json.loads(_core.sublattices(n, dim))


def surface_invariants(q, p_g, c2):
    return json.loads(_core.surface_invariants(q, p_g, c2))


def cover_invariants(n):
    return json.loads(_core.cover_invariants(n))


def builtin_presentation():
    return _core.builtin_presentation()


def run_cli(args):
    """Runs the command line tool in-process; returns (status, stdout, stderr)."""
    return _core.run_cli(list(args))
