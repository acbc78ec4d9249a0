"""Per_n loci of quadratic rational maps, curve pullback and equalizing certificates."""

import json as _json

from ._pernloci import (
    PernlociError,
    Scenario,
    load_scenario,
    orbit,
    params_from_rho_s,
    per3_fiber,
    per4_param,
    per4_punctures,
    pern_poly,
    pern_roots,
    pern_solve,
)
from ._pernloci import parse_scenario as _parse_scenario


def parse_scenario(spec, tol=1e-6):
    """Scenario from a dict or a JSON string."""
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return _parse_scenario(spec, tol)


__all__ = [
    "PernlociError",
    "Scenario",
    "load_scenario",
    "parse_scenario",
    "orbit",
    "params_from_rho_s",
    "per3_fiber",
    "per4_param",
    "per4_punctures",
    "pern_poly",
    "pern_roots",
    "pern_solve",
]
