"""Executable identity checks: comparison modes, reports and the suite runner.

A check pairs two series builders (``order -> QSeries``) with a comparison
mode.  Builders may also return a tuple of series, compared componentwise,
for identities that are stated for several parameter values at once.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .rings import format_scalar
from .series import QSeries, first_mismatch, reduce_mod

Builder = Callable[[int], Union[QSeries, Tuple[QSeries, ...]]]

# roles: a claim must pass; an adjudication is one of several competing
# readings, and its group passes when any member does; a correction is a
# repaired form of a claim that fails as stated.
CLAIM = "claim"
ADJUDICATION = "adjudication"
CORRECTION = "correction"


class UsageError(ValueError):
    """Unknown check id or tag, or an invalid run parameter."""


@dataclass(frozen=True)
class Mode:
    kind: str = "exact"
    modulus: int = 0
    residues: Tuple[int, ...] = ()
    period: int = 0

    def __str__(self):
        if self.kind == "exact":
            return "exact"
        if self.kind == "congruent":
            return f"congruent({self.modulus})"
        res = ",".join(map(str, self.residues))
        return f"residue-class-vanishing({self.period},{res}; mod {self.modulus})"


EXACT = Mode()


def congruent(m: int) -> Mode:
    return Mode("congruent", m)


def vanishing(period: int, residues: Union[int, Sequence[int]], modulus: Optional[int] = None) -> Mode:
    """Coefficients at exponents ``= r (mod period)`` vanish after reduction mod ``modulus``.

    ``modulus`` defaults to ``period``; ``modulus=0`` compares exactly.
    """
    if isinstance(residues, int):
        residues = (residues,)
    return Mode("vanishing", period if modulus is None else modulus, tuple(residues), period)


@dataclass
class IdentityCheck:
    id: str
    description: str
    anchor: str
    lhs: Builder
    rhs: Optional[Builder] = None
    mode: Mode = EXACT
    min_exp: int = 0
    order: int = 40
    tags: Tuple[str, ...] = ()
    unproven: bool = False
    role: str = CLAIM
    group: Optional[str] = None


@dataclass
class IdentityReport:
    id: str
    passed: bool
    effective_order: int
    first_mismatch: Optional[Tuple[int, str, str]] = None
    runtime_ms: float = 0.0
    error: Optional[str] = None
    component: Optional[int] = None
    role: str = CLAIM
    group: Optional[str] = None
    mode: str = "exact"
    min_exp: int = 0

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.first_mismatch is not None:
            e, a, b = self.first_mismatch
            d["first_mismatch"] = {"exponent": e, "lhs": a, "rhs": b}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        d = dict(d)
        fm = d.get("first_mismatch")
        if fm is not None:
            d["first_mismatch"] = (fm["exponent"], fm["lhs"], fm["rhs"])
        return cls(**d)


def _as_tuple(x) -> Tuple[QSeries, ...]:
    return x if isinstance(x, tuple) else (x,)


def _compare(check: IdentityCheck, lhs: QSeries, rhs: Optional[QSeries], order: int, min_exp: int):
    """``(effective_order, mismatch)`` for one component."""
    mode = check.mode
    if mode.kind == "vanishing":
        eff = min(lhs.order, order)
        red = reduce_mod(lhs, mode.modulus) if mode.modulus else lhs
        for e in range(min_exp, eff + 1):
            if e % mode.period in mode.residues and red[e]:
                return eff, (e, lhs[e], 0)
        return eff, None
    eff = min(lhs.order, rhs.order, order)
    if mode.kind == "exact":
        return eff, first_mismatch(lhs, rhs, min_exp, eff)
    if mode.kind == "congruent":
        diff = reduce_mod(lhs - rhs, mode.modulus)
        for e in range(min_exp, eff + 1):
            if diff[e]:
                return eff, (e, lhs[e], rhs[e])
        return eff, None
    raise UsageError(f"unknown comparison mode {mode.kind!r}")


def run_check(check: IdentityCheck, order: Optional[int] = None, min_exp: Optional[int] = None) -> IdentityReport:
    """Build both sides and compare; builder failures become failed reports."""
    order = check.order if order is None else order
    min_exp = check.min_exp if min_exp is None else min_exp
    if order < 1:
        raise UsageError("order must be at least 1")
    start = time.perf_counter()
    report = IdentityReport(check.id, False, order, role=check.role, group=check.group,
                            mode=str(check.mode), min_exp=min_exp)
    try:
        lhs = _as_tuple(check.lhs(order))
        rhs = _as_tuple(check.rhs(order)) if check.rhs is not None else (None,) * len(lhs)
        if len(lhs) != len(rhs):
            raise ValueError("builders returned different numbers of components")
        eff_all = order
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            eff, mm = _compare(check, a, b, order, min_exp)
            eff_all = min(eff_all, eff)
            if mm is not None:
                e, x, y = mm
                report.first_mismatch = (e, format_scalar(x), format_scalar(y))
                report.component = i if len(lhs) > 1 else None
                break
        report.effective_order = eff_all
        report.passed = report.first_mismatch is None
    except (ArithmeticError, ValueError, KeyError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    report.runtime_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


# ------------------------------------------------------------------ selection
def _registry() -> List[IdentityCheck]:
    from .identities import registry

    return registry()


def registry() -> List[IdentityCheck]:
    return _registry()


def tags() -> List[str]:
    seen: Dict[str, None] = {}
    for c in _registry():
        for t in c.tags:
            seen.setdefault(t, None)
    return list(seen)


def select(selector: Union[None, str, Iterable[str]] = None) -> List[IdentityCheck]:
    """Checks picked by a tag, a single id, a list of ids, or ``None``/``"all"``."""
    checks = _registry()
    if selector is None or selector == "all":
        return checks
    by_id = {c.id: c for c in checks}
    if isinstance(selector, str):
        if selector in by_id:
            return [by_id[selector]]
        picked = [c for c in checks if selector in c.tags]
        if not picked:
            raise UsageError(f"unknown check id or suite {selector!r}")
        return picked
    wanted = list(selector)
    unknown = [i for i in wanted if i not in by_id]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    keep = set(wanted)
    return [c for c in checks if c.id in keep]


def _run_by_id(args):
    cid, order, min_exp = args
    (check,) = [c for c in _registry() if c.id == cid]
    return run_check(check, order, min_exp)


def run_suite(selector=None, order: Optional[int] = None, jobs: Optional[int] = 1,
              min_exp: Optional[int] = None) -> List[IdentityReport]:
    """Run the selected checks; reports come back in registry order.

    ``order=None`` uses each check's own default order.  ``jobs > 1`` runs
    checks in worker processes.
    """
    checks = select(selector)
    if order is not None and order < 1:
        raise UsageError("order must be at least 1")
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(checks) <= 1:
        return [run_check(c, order, min_exp) for c in checks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(checks))) as pool:
        return list(pool.map(_run_by_id, [(c.id, order, min_exp) for c in checks]))


def overall_passed(reports: Sequence[IdentityReport]) -> bool:
    """Claims and corrections must pass; each adjudication group needs one passing reading."""
    groups: Dict[str, bool] = {}
    for r in reports:
        if r.role == ADJUDICATION:
            key = r.group or r.id
            groups[key] = groups.get(key, False) or r.passed
        elif not r.passed:
            return False
    return all(groups.values())


def adjudication_summary(reports: Sequence[IdentityReport]) -> Dict[str, List[str]]:
    """For each adjudication group, the ids of the readings that verified."""
    out: Dict[str, List[str]] = {}
    for r in reports:
        if r.role == ADJUDICATION:
            out.setdefault(r.group or r.id, [])
            if r.passed:
                out[r.group or r.id].append(r.id)
    return out


# -------------------------------------------------------------- serialization
def reports_to_json(reports: Sequence[IdentityReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_from_json(text: str) -> List[IdentityReport]:
    return [IdentityReport.from_dict(d) for d in json.loads(text)]


def format_report(r: IdentityReport) -> str:
    status = "PASS" if r.passed else "FAIL"
    line = f"{status}  {r.id:<28} order={r.effective_order:<4} {r.runtime_ms:9.1f} ms"
    if r.role != CLAIM:
        line += f"  [{r.role}]"
    if r.error:
        line += f"  error: {r.error}"
    elif r.first_mismatch is not None:
        e, a, b = r.first_mismatch
        where = f" (component {r.component})" if r.component is not None else ""
        line += f"  first mismatch at q^{e}{where}: lhs={a} rhs={b}"
    return line
