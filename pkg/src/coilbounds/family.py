"""Parametrized families of double coil knots and expanding-family verdicts.

Two family kinds reproduce the headline phenomena:

* ``fixed-slope``: fix (p, q) and n2, sweep n1.  The continued-fraction
  length k never changes, so the volume upper bound 4*v8*k is constant
  while the diagrams grow without bound: unbounded twist number at bounded
  volume, hence lambda_1 uniformly bounded away from 0 -- an expanding
  family.
* ``vary-slope``: sweep slopes of strictly growing k at fixed twists.
  The volume lower bound grows linearly in k, so lambda_1's upper bound
  12650/vol tends to 0: not an expanding family.

Verdicts are decided by the family *kind* (an infinite family's volumes
are bounded or not by construction), never by eyeballing finitely many
numbers; and they concern the certified bound intervals, not the true
spectra.  Diagram-level columns (crossing count, twist regions) are
honest proxies computed from actually generated diagrams, capped by
``diagram_cap`` because vary-slope members quickly have billions of
crossings; the crossing-count column itself is exact from the generator
contract q(q-1)(|n1|+|n2|).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    CONSTANTS,
    coil_lambda_interval,
    coil_volume_interval,
    disk_obstruction_check,
    ell_param,
    coil_hyperbolicity_certificate,
)
from .errors import CoilboundsError, ConfigError, NoCertifiedRows
from .generators import CoilSpec, gen_double_coil, generalized_twist_regions
from .slopes import Slope, cfrac_expand

__all__ = [
    "CoilFamily",
    "FamilyRow",
    "FamilyReport",
    "fixed_slope_vary_twists",
    "vary_slope_fixed_twists",
    "fibonacci_slopes",
    "odd_denominator_slopes",
    "analyze_family",
    "expanding_verdict",
    "twist_growth_experiment",
    "load_family_config",
    "report_to_csv",
    "report_to_json",
    "CSV_COLUMNS",
]

DEFAULT_DIAGRAM_CAP = 4000


@dataclass(frozen=True)
class CoilFamily:
    """A finite window into an infinite family of coil specs."""

    kind: str  # "fixed-slope" | "vary-slope"
    members: tuple[CoilSpec, ...]
    description: str = ""

    def __post_init__(self):
        if self.kind not in ("fixed-slope", "vary-slope"):
            raise ConfigError(f"unknown family kind {self.kind!r}")
        if not self.members:
            raise ConfigError("family range is empty")


def fixed_slope_vary_twists(p: int, q: int, n2: int, n1_range) -> CoilFamily:
    members = tuple(CoilSpec(p, q, n1, n2) for n1 in n1_range if n1 != 0)
    return CoilFamily(
        "fixed-slope", members, f"(p,q)=({p},{q}), n2={n2}, n1 in given range"
    )


def vary_slope_fixed_twists(slopes, n: int) -> CoilFamily:
    members = tuple(CoilSpec(s.p, s.q, n, n) for s in slopes)
    return CoilFamily("vary-slope", members, f"n1=n2={n}, slopes as given")


def fibonacci_slopes(count: int):
    """Slopes F(i)/F(i+1): continued fraction [1,...,1,2] of length i."""
    out = []
    a, b = 1, 2
    for _ in range(count):
        out.append(Slope(a, b))
        a, b = b, a + b
    return out


def odd_denominator_slopes(count: int):
    """Slopes 1/3, 1/5, 1/7, ...: every continued fraction has length 1."""
    return [Slope(1, 2 * i + 3) for i in range(count)]


@dataclass(frozen=True)
class FamilyRow:
    index: int
    spec: CoilSpec
    k: int
    ell: float
    certificate: str
    crossings: int
    vol_lower: float
    vol_upper: float
    lam_lower: float
    lam_upper: float
    twist_regions: int | None = None
    gen_twist_regions: int = 2


@dataclass
class FamilyReport:
    family: CoilFamily
    rows: list[FamilyRow] = field(default_factory=list)
    uncertified: list[tuple[int, CoilSpec, str]] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    verdict: str = "Inconclusive"


def _row(index: int, spec: CoilSpec, diagram_cap: int) -> FamilyRow:
    k = cfrac_expand(spec.slope).length
    vol = coil_volume_interval(spec)
    lam = coil_lambda_interval(spec)
    cert = coil_hyperbolicity_certificate(k, spec.n1, spec.n2)
    twist = None
    if spec.crossing_count <= diagram_cap:
        d = gen_double_coil(spec)
        assert d.n_crossings == spec.crossing_count
        twist = d.twist_regions().count
    return FamilyRow(
        index=index,
        spec=spec,
        k=k,
        ell=ell_param(k, spec.n1, spec.n2),
        certificate=cert.condition.value,
        crossings=spec.crossing_count,
        vol_lower=vol.lower,
        vol_upper=vol.upper,
        lam_lower=lam.lower,
        lam_upper=lam.upper,
        twist_regions=twist,
        gen_twist_regions=2,
    )


def analyze_family(
    f: CoilFamily, diagram_cap: int = DEFAULT_DIAGRAM_CAP, jobs: int = 1
) -> FamilyReport:
    """Evaluate every member; uncertified members are listed, never fatal."""
    report = FamilyReport(family=f)
    indexed = list(enumerate(f.members))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(
                partial(_row_or_error, diagram_cap=diagram_cap), indexed
            )
            outcomes = list(results)
    else:
        outcomes = [_row_or_error(item, diagram_cap=diagram_cap) for item in indexed]
    for (i, spec), outcome in zip(indexed, outcomes):
        if isinstance(outcome, FamilyRow):
            report.rows.append(outcome)
        else:
            report.uncertified.append((i, spec, outcome))
    _summarize(report)
    try:
        report.verdict = expanding_verdict(report)
    except NoCertifiedRows:
        report.verdict = "Inconclusive"
    return report


def _row_or_error(item, diagram_cap):
    i, spec = item
    try:
        return _row(i, spec, diagram_cap)
    except CoilboundsError as e:
        return type(e).__name__


def _summarize(report: FamilyReport) -> None:
    rows = report.rows
    if not rows:
        report.summary = {"certified_rows": 0}
        return
    report.summary = {
        "certified_rows": len(rows),
        "uncertified_rows": len(report.uncertified),
        "sup_vol_upper": max(r.vol_upper for r in rows),
        "inf_vol_lower": min(r.vol_lower for r in rows),
        "max_vol_lower": max(r.vol_lower for r in rows),
        "inf_lambda_lower": min(r.lam_lower for r in rows),
        "sup_lambda_upper": max(r.lam_upper for r in rows),
        "min_lambda_upper": min(r.lam_upper for r in rows),
    }


def _k_sequence(report: FamilyReport):
    return [r.k for r in report.rows]


def expanding_verdict(r: FamilyReport) -> str:
    """Expanding-family verdict for the infinite family the window samples.

    The volumes of a fixed-slope family are bounded by the constant
    4*v8*k, which pins inf lambda_1 >= A1/(4*v8*k)^2 > 0: expanding.  A
    vary-slope family with strictly increasing k has volume lower bounds
    growing linearly, so sup-type reasoning gives lambda_1 upper bounds
    tending to 0: not expanding.  Constant-k vary-slope windows are
    bounded for the same reason as fixed-slope; anything else is
    inconclusive from the window alone.
    """
    if not r.rows:
        raise NoCertifiedRows("verdict needs at least one certified member")
    ks = _k_sequence(r)
    if r.family.kind == "fixed-slope" or len(set(ks)) == 1:
        return "ExpandingCertified"
    if all(b > a for a, b in zip(ks, ks[1:])):
        return "NotExpandingCertified"
    return "Inconclusive"


def twist_growth_experiment(p: int, q: int, n2_fixed: int, n1_range,
                            diagram_cap: int = DEFAULT_DIAGRAM_CAP) -> list[dict]:
    """Per-n1 table behind the bounded-volume / growing-twist phenomenon.

    Each row reports the exact crossing count q(q-1)(|n1|+|n2|), the twist
    number t(D) of the generated diagram (an upper bound for the twist
    number of the knot), the constant volume upper bound, and whether the
    punctured-disk obstruction applies to the fixed 1/n2 filling.
    """
    table = []
    for n1 in n1_range:
        spec = CoilSpec(p, q, n1, n2_fixed)
        k = cfrac_expand(spec.slope).length
        vol = coil_volume_interval(spec)
        twist = None
        if spec.crossing_count <= diagram_cap:
            twist = gen_double_coil(spec).twist_regions().count
        table.append(
            {
                "n1": n1,
                "crossings": spec.crossing_count,
                "twist_regions": twist,
                "generalized_twist_regions": 2,
                "vol_upper": vol.upper,
                "disk_obstruction": disk_obstruction_check(n2_fixed),
            }
        )
    return table


# ---------------------------------------------------------------------------
# Config files and report serialization
# ---------------------------------------------------------------------------
#
# Key-value text, one ``key = value`` per line, '#' comments.  Keys:
#   kind            fixed-slope | vary-slope
#   p, q, n1, n2    integers (fixed-slope: p, q, n2 fixed, n1 swept)
#   range_start, range_end, range_step    the swept window (inclusive end)
#   slope_sequence  fibonacci | odd-denominators | custom-list
#   slopes          comma-separated p/q list for custom-list
#   diagram_cap     optional diagram-size cap

CSV_COLUMNS = (
    "index",
    "p",
    "q",
    "n1",
    "n2",
    "k",
    "crossings",
    "twist_regions",
    "generalized_twist_regions",
    "ell",
    "certificate",
    "vol_lower",
    "vol_upper",
    "lambda_lower",
    "lambda_upper",
)


def load_family_config(text: str) -> tuple[CoilFamily, dict]:
    """Parse a family description; returns the family and extra options."""
    kv = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value'")
        key, _, value = line.partition("=")
        kv[key.strip()] = value.strip()

    kind = kv.get("kind")
    options = {}
    if "diagram_cap" in kv:
        options["diagram_cap"] = int(kv["diagram_cap"])
    try:
        if kind == "fixed-slope":
            start = int(kv["range_start"])
            end = int(kv["range_end"])
            step = int(kv.get("range_step", "1"))
            family = fixed_slope_vary_twists(
                int(kv["p"]), int(kv["q"]), int(kv["n2"]), range(start, end + 1, step)
            )
        elif kind == "vary-slope":
            seq = kv.get("slope_sequence", "fibonacci")
            start = int(kv.get("range_start", "1"))
            end = int(kv["range_end"])
            if seq == "fibonacci":
                slopes = fibonacci_slopes(end)[start - 1 :]
            elif seq == "odd-denominators":
                slopes = odd_denominator_slopes(end)[start - 1 :]
            elif seq == "custom-list":
                slopes = [Slope.parse(tok) for tok in kv["slopes"].split(",")]
            else:
                raise ConfigError(f"unknown slope_sequence {seq!r}")
            family = vary_slope_fixed_twists(slopes, int(kv["n1"]))
        else:
            raise ConfigError("config must set kind to fixed-slope or vary-slope")
    except KeyError as e:
        raise ConfigError(f"missing config key {e.args[0]!r}") from None
    except ValueError as e:
        raise ConfigError(f"bad config value: {e}") from None
    return family, options


def _row_record(r: FamilyRow) -> dict:
    return {
        "index": r.index,
        "p": r.spec.p,
        "q": r.spec.q,
        "n1": r.spec.n1,
        "n2": r.spec.n2,
        "k": r.k,
        "crossings": r.crossings,
        "twist_regions": r.twist_regions,
        "generalized_twist_regions": r.gen_twist_regions,
        "ell": r.ell,
        "certificate": r.certificate,
        "vol_lower": r.vol_lower,
        "vol_upper": r.vol_upper,
        "lambda_lower": r.lam_lower,
        "lambda_upper": r.lam_upper,
    }


def report_to_json(report: FamilyReport) -> dict:
    return {
        "kind": report.family.kind,
        "description": report.family.description,
        "rows": [_row_record(r) for r in report.rows],
        "uncertified": [
            {"index": i, "spec": {"p": s.p, "q": s.q, "n1": s.n1, "n2": s.n2}, "error": err}
            for i, s, err in report.uncertified
        ],
        "summary": report.summary,
        "verdict": report.verdict,
    }


def report_to_csv(report: FamilyReport, fmt_float=lambda x: f"{x:.6g}") -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in report.rows:
        rec = _row_record(r)
        cells = []
        for col in CSV_COLUMNS:
            v = rec[col]
            if v is None:
                cells.append("")
            elif isinstance(v, float):
                cells.append(fmt_float(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
