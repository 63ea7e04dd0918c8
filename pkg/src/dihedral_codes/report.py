"""Analysis reports: certified parameters and checks for one dihedral code."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

from .dihedral import (
    DihedralSpec,
    LinearCode,
    char2_containment,
    code_from_generator,
    dimension_lower_bound,
    dual_code,
    is_dihedral_invariant,
)
from .distance import DEFAULT_EXHAUSTIVE_CAP, bch_lower_bound, minimum_distance
from .polynomial import format_polynomial

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AnalysisReport:
    q: int
    m: int
    generator: str
    n: int
    k: int
    d: int | None
    d_method: str
    d_certified: bool
    d_lower: int | None
    work: int
    bch_bound: int
    dim_bound: int
    dihedral_invariant: bool
    dual_dihedral_invariant: bool
    char2_containment: bool | None
    principal_guarantee: bool

    def as_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, **asdict(self)}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        return "".join(f"{key}: {_text_value(v)}\n" for key, v in self.as_dict().items())


def _text_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def analyze(
    spec: DihedralSpec,
    method: str = "auto",
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    budget: int | None = None,
    code: LinearCode | None = None,
) -> AnalysisReport:
    """Expand ``spec`` and certify its parameters.

    ``method`` is one of auto, exhaustive, bz or bound-only; ``auto`` runs the
    exhaustive search while q^k <= 2^cap and Brouwer-Zimmermann beyond that.
    """
    C = code or code_from_generator(spec)
    bch = bch_lower_bound(spec)
    dim_bound = dimension_lower_bound(spec)
    if method in ("bound-only", "bound_only") or C.k == 0:
        d, d_method, certified, lower, work = None, "bound_only", False, None, 0
    else:
        if method == "auto":
            method = "exhaustive" if C.k * math.log2(C.q) <= cap else "bz"
        kwargs = {"budget": budget} if method == "bz" else {"cap": cap}
        res = minimum_distance(C, method=method, **kwargs)
        d, d_method, certified, lower, work = res.d, res.method, res.exact, res.lower_bound, res.work
    if spec.basis.base.characteristic == 2:
        contained = char2_containment(spec)
    else:
        contained = None
    return AnalysisReport(
        q=spec.q,
        m=spec.m,
        generator=format_polynomial(spec.generator),
        n=C.n,
        k=C.k,
        d=d,
        d_method=d_method,
        d_certified=certified,
        d_lower=lower,
        work=work,
        bch_bound=bch,
        dim_bound=dim_bound,
        dihedral_invariant=is_dihedral_invariant(C),
        dual_dihedral_invariant=is_dihedral_invariant(dual_code(C)),
        char2_containment=contained,
        principal_guarantee=spec.principal_guarantee,
    )
