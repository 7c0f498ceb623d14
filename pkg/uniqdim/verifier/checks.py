"""
Audit checks: the bounds and extremal properties run against one graph.

The catalog (id, statement, applicability) lives in ``checks.yaml``; each id
maps to a check function here. A check is PASS, FAIL (with a witness of the
computed numbers) or NA with the reason it does not apply.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Callable, Optional

import yaml

from uniqdim.common.exceptions import ConfigurationError, GraphError
from uniqdim.graphs.core import DistanceMatrix, Graph, TwinClasses, diameter, distances, gamma_mask, girth, twin_classes
from uniqdim.graphs.formats import emit_graph6
from uniqdim.solver.basis import count_bases, iter_bases

CHECKS_PATH = Path(__file__).resolve().parent / "checks.yaml"

APPLICABILITY = ('always', 'unique', 'unique_cyclic', 'extremal', 'extremal_multi')


class Verdict(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    NA = 'na'


@dataclass(frozen=True)
class CheckSpec:
    id: str
    statement: str
    applies_when: str


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: Verdict
    reason: str = ''
    witness: dict = field(default_factory=dict)

    def witness_text(self) -> str:
        return ' '.join(f"{k}={v}" for k, v in self.witness.items())


@dataclass(frozen=True)
class GraphProfile:
    """The invariants every check reads: n, m, β, d, g (None if acyclic), twins, uniqueness."""
    n: int
    m: int
    dimension: int
    diameter: int
    girth: Optional[int]
    twin_sizes: tuple[int, ...]
    unique: bool

    @property
    def extremal(self) -> bool:
        return self.n == self.dimension + self.diameter ** self.dimension


@dataclass(frozen=True)
class AuditReport:
    graph6: str
    profile: GraphProfile
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.verdict != Verdict.FAIL for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict == Verdict.FAIL]

    def verdict(self, check_id: str) -> Verdict:
        for r in self.results:
            if r.check_id == check_id:
                return r.verdict
        raise KeyError(check_id)


@lru_cache(maxsize=None)
def load_checks(path: Path = CHECKS_PATH) -> tuple[CheckSpec, ...]:
    """Load the check catalog from YAML."""
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)

    specs = []
    for raw in data:
        spec = CheckSpec(
            id=raw["id"],
            statement=raw["statement"],
            applies_when=raw.get("applies_when", "always"),
        )
        if spec.applies_when not in APPLICABILITY:
            raise ConfigurationError(
                f"Check {spec.id}: unknown applies_when {spec.applies_when!r}",
                context={'check': spec.id}
            )
        if spec.id not in CHECK_FUNCTIONS:
            raise ConfigurationError(f"Check {spec.id} has no implementation", context={'check': spec.id})
        specs.append(spec)
    return tuple(specs)


def check_ids() -> list[str]:
    return [spec.id for spec in load_checks()]


class _Subject:
    """One graph under audit; the expensive pieces are computed once, on demand."""

    def __init__(self, g: Graph, d: DistanceMatrix, classes: TwinClasses, profile: GraphProfile):
        self.g = g
        self.d = d
        self.classes = classes
        self.profile = profile

    @cached_property
    def bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(iter_bases(self.g, self.d, order_bound=False))


def _bound(check_id: str, holds: bool, **witness) -> CheckResult:
    return CheckResult(check_id, Verdict.PASS if holds else Verdict.FAIL, witness={} if holds else witness)


def _dim_vs_diameter(s: _Subject) -> CheckResult:
    p = s.profile
    return _bound('dim_vs_diameter', p.dimension <= p.n - p.diameter, k=p.dimension, n=p.n, d=p.diameter)


def _order_bound(s: _Subject) -> CheckResult:
    p = s.profile
    return _bound('order_bound', p.n <= p.dimension + p.diameter ** p.dimension, k=p.dimension, n=p.n, d=p.diameter)


def _unique_no_twins(s: _Subject) -> CheckResult:
    twins = s.classes.nontrivial()
    if not twins:
        return CheckResult('unique_no_twins', Verdict.PASS)
    u, v = twins[0][:2]
    return CheckResult('unique_no_twins', Verdict.FAIL, witness={'u': u, 'v': v})


def _unique_diameter_bound(s: _Subject) -> CheckResult:
    p = s.profile
    return _bound('unique_diameter_bound', p.dimension <= p.n - p.diameter - 2, k=p.dimension, n=p.n, d=p.diameter)


def _unique_girth_bound(s: _Subject) -> CheckResult:
    p = s.profile
    return _bound('unique_girth_bound', p.dimension <= p.n - p.girth + 1, k=p.dimension, n=p.n, g=p.girth)


def _unique_half_order(s: _Subject) -> CheckResult:
    p = s.profile
    return _bound('unique_half_order', 2 * p.dimension < p.n, k=p.dimension, n=p.n)


def _extremal_diameter(s: _Subject) -> CheckResult:
    return _bound('extremal_diameter', s.profile.diameter <= 3, d=s.profile.diameter)


def _extremal_gamma(s: _Subject) -> CheckResult:
    p = s.profile
    need = p.diameter ** (p.dimension - 1)
    for basis in s.bases:
        for v in basis:
            size = gamma_mask(s.d, v, p.diameter).bit_count()
            if size < need:
                return CheckResult(
                    'extremal_gamma', Verdict.FAIL,
                    witness={'basis': ','.join(map(str, basis)), 'v': v, 'gamma': size, 'need': need}
                )
    return CheckResult('extremal_gamma', Verdict.PASS)


CHECK_FUNCTIONS: dict[str, Callable[[_Subject], CheckResult]] = {
    'dim_vs_diameter': _dim_vs_diameter,
    'order_bound': _order_bound,
    'unique_no_twins': _unique_no_twins,
    'unique_diameter_bound': _unique_diameter_bound,
    'unique_girth_bound': _unique_girth_bound,
    'unique_half_order': _unique_half_order,
    'extremal_diameter': _extremal_diameter,
    'extremal_gamma': _extremal_gamma,
}


def _not_applicable(spec: CheckSpec, p: GraphProfile) -> Optional[str]:
    """Reason the check does not apply, or None."""
    if spec.applies_when in ('unique', 'unique_cyclic') and not p.unique:
        return "not uniquely dimensional"
    if spec.applies_when == 'unique_cyclic' and p.girth is None:
        return "acyclic"
    if spec.applies_when in ('extremal', 'extremal_multi') and not p.extremal:
        return f"n != k + d^k ({p.n} != {p.dimension} + {p.diameter}^{p.dimension})"
    if spec.applies_when == 'extremal_multi' and p.dimension < 2:
        # paths are extremal at every diameter
        return "k = 1"
    return None


def _subject(g: Graph) -> _Subject:
    if g.n < 2:
        raise GraphError("Audit needs at least 2 vertices", context={'n': g.n})
    d = distances(g)
    classes = twin_classes(g)
    # solved without the n <= k + d^k bound that order_bound audits
    k, count = count_bases(g, limit=2, d=d, order_bound=False)
    profile = GraphProfile(
        n=g.n,
        m=g.m,
        dimension=k,
        diameter=diameter(g, d),
        girth=girth(g, d),
        twin_sizes=tuple(classes.sizes()),
        unique=count == 1,
    )
    return _Subject(g, d, classes, profile)


def _run(s: _Subject, specs: tuple[CheckSpec, ...]) -> tuple[CheckResult, ...]:
    results = []
    for spec in specs:
        reason = _not_applicable(spec, s.profile)
        if reason is not None:
            results.append(CheckResult(spec.id, Verdict.NA, reason=reason))
        else:
            results.append(CHECK_FUNCTIONS[spec.id](s))
    return tuple(results)


def audit_graph(g: Graph) -> AuditReport:
    """
    Run every catalog check on g.

    Raises:
        DisconnectedGraphError: g is not connected
        GraphError: g has fewer than 2 vertices
    """
    s = _subject(g)
    return AuditReport(emit_graph6(g), s.profile, _run(s, load_checks()))


def run_check(g: Graph, check_id: str) -> CheckResult:
    """Re-run a single check (reproduces a witness)."""
    specs = tuple(spec for spec in load_checks() if spec.id == check_id)
    if not specs:
        raise KeyError(check_id)
    return _run(_subject(g), specs)[0]


def verify_extremal(g: Graph) -> list[CheckResult]:
    """The extremal checks alone: NA unless n = k + d^k."""
    specs = tuple(spec for spec in load_checks() if spec.applies_when.startswith('extremal'))
    return list(_run(_subject(g), specs))
