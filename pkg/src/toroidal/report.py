"""Text and JSON rendering of a :class:`ClassificationReport`."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .caselaw import ClassificationReport, EliminationStep, Rule, Survivor, Verdict
from .rings import OrderKind
from .surfaces import parse_slope

SCHEMA_RESOURCE = "schema/report.schema.json"

_SECTIONS = (
    ("kappa2.", "Kodaira dimension 2"),
    ("kappa1.", "Kodaira dimension 1"),
    ("kappa-inf.", "Kodaira dimension -infinity"),
    ("kappa0.", "Kodaira dimension 0: minimal models"),
    ("cusps.enumeration", "Boundary self-intersections"),
    ("curves.", "Blow-down curves"),
    ("cusps.", "Cusp configurations"),
    ("config.", "Good configurations of four elliptic curves"),
    ("survivor.", "Survivor"),
)


def load_schema() -> dict:
    text = resources.files("toroidal").joinpath(SCHEMA_RESOURCE).read_text(encoding="utf-8")
    return json.loads(text)


def step_to_dict(step: EliminationStep) -> dict:
    d = {
        "case_id": step.case_id,
        "rule": step.rule.value,
        "citation": step.citation,
        "verdict": step.verdict.value,
    }
    if step.detail:
        d["detail"] = step.detail
    return d


def survivor_to_dict(s: Survivor) -> dict:
    return {
        "order": s.order.label,
        "slopes": [str(x) for x in s.slopes],
        "boundary_selfints": list(s.boundary_selfints),
        "c1bar_sq": s.c1bar_sq,
        "c2bar": s.c2bar,
        "bmy_equality": s.bmy_equality,
    }


def report_to_dict(report: ClassificationReport) -> dict:
    return {
        "orders": [o.label for o in report.orders],
        "steps": [step_to_dict(s) for s in report.steps],
        "survivor": None if report.survivor is None else survivor_to_dict(report.survivor),
    }


def report_from_dict(data: dict) -> ClassificationReport:
    steps = tuple(
        EliminationStep(
            case_id=d["case_id"],
            rule=Rule(d["rule"]),
            citation=d["citation"],
            verdict=Verdict(d["verdict"]),
            detail=d.get("detail", ""),
        )
        for d in data["steps"]
    )
    survivor = None
    sd = data.get("survivor")
    if sd is not None:
        order = OrderKind.from_name(sd["order"])
        survivor = Survivor(
            order=order,
            slopes=tuple(parse_slope(x, order) for x in sd["slopes"]),
            boundary_selfints=tuple(sd["boundary_selfints"]),
            c1bar_sq=sd["c1bar_sq"],
            c2bar=sd["c2bar"],
            bmy_equality=sd["bmy_equality"],
        )
    orders = tuple(OrderKind.from_name(o) for o in data.get("orders", [o.label for o in OrderKind]))
    return ClassificationReport(steps=steps, survivor=survivor, orders=orders)


def _section_of(case_id: str) -> str:
    for prefix, title in _SECTIONS:
        if case_id.startswith(prefix):
            return title
    return "Other"


def render_text(report: ClassificationReport) -> str:
    lines = [
        "Toroidal compactifications with 3*c2bar = c1bar^2 and c2bar = 1",
        "orders searched: " + ", ".join(o.label for o in report.orders),
    ]
    current = None
    for st in report.steps:
        section = _section_of(st.case_id)
        if section != current:
            lines += ["", f"== {section} =="]
            current = section
        lines.append(f"[{st.verdict.value.upper():>12}] {st.case_id} ({st.rule.value})")
        if st.detail:
            lines.append(f"    {st.detail}")
        lines.append(f"    by: {st.citation}")
    lines.append("")
    s = report.survivor
    if s is None:
        lines.append("no survivor")
    else:
        lines += [
            f"survivor: {s.order.label} order, slopes " + ", ".join(str(x) for x in s.slopes),
            "  curves: " + ", ".join(_curve_equation(x) for x in s.slopes),
            "  boundary self-intersections: " + ", ".join(str(d) for d in s.boundary_selfints),
            f"  (c1bar^2, c2bar) = ({s.c1bar_sq}, {s.c2bar}); "
            f"3*c2bar = c1bar^2: {str(s.bmy_equality).lower()}",
        ]
    return "\n".join(lines) + "\n"


def _curve_equation(slope) -> str:
    if slope.is_infinite:
        return "z=0"
    a = slope.alpha
    if not a:
        return "w=0"
    return f"w={'' if str(a) == '1' else f'({a})'}z"


def render_json(report: ClassificationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def emit_report(report: ClassificationReport, fmt: str = "text",
                path: Optional[Union[str, Path]] = None) -> str:
    """Render ``report`` as ``text`` or ``json``; also write it to ``path`` if given."""
    if fmt == "json":
        doc = render_json(report)
    elif fmt == "text":
        doc = render_text(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        try:
            Path(path).write_text(doc, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return doc
