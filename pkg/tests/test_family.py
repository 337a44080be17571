import json

import pytest

from coilbounds.bounds import CONSTANTS
from coilbounds.errors import ConfigError, NoCertifiedRows
from coilbounds.family import (
    CoilFamily,
    analyze_family,
    expanding_verdict,
    fibonacci_slopes,
    fixed_slope_vary_twists,
    load_family_config,
    odd_denominator_slopes,
    report_to_csv,
    report_to_json,
    twist_growth_experiment,
    vary_slope_fixed_twists,
    CSV_COLUMNS,
)
from coilbounds.slopes import Slope, cfrac_expand


def test_fibonacci_slopes_have_increasing_k():
    slopes = fibonacci_slopes(12)
    assert [str(s) for s in slopes[:4]] == ["1/2", "2/3", "3/5", "5/8"]
    assert [cfrac_expand(s).length for s in slopes] == list(range(1, 13))


def test_odd_denominator_slopes():
    slopes = odd_denominator_slopes(4)
    assert [str(s) for s in slopes] == ["1/3", "1/5", "1/7", "1/9"]
    assert all(cfrac_expand(s).length == 1 for s in slopes)


def test_empty_range_rejected():
    with pytest.raises(ConfigError):
        fixed_slope_vary_twists(2, 5, 6, range(0))


def test_fixed_slope_family():
    rep = analyze_family(fixed_slope_vary_twists(2, 5, 6, range(4, 21)))
    assert rep.verdict == "ExpandingCertified"
    assert len(rep.rows) == 17 and not rep.uncertified
    assert len({r.vol_upper for r in rep.rows}) == 1
    assert len({r.lam_lower for r in rep.rows}) == 1
    assert all(r.gen_twist_regions == 2 for r in rep.rows)
    # lambda lower = A1 / (8 v8)^2 for the whole family
    expected = CONSTANTS.lambda_floor_numerator / (8 * CONSTANTS.v8) ** 2
    assert abs(rep.rows[0].lam_lower - expected) < 1e-25
    assert abs(expected - 1.020e-17) < 1e-19


def test_vary_slope_family():
    rep = analyze_family(vary_slope_fixed_twists(fibonacci_slopes(8), 4))
    assert rep.verdict == "NotExpandingCertified"
    ups = [r.lam_upper for r in rep.rows]
    assert all(b < a for a, b in zip(ups, ups[1:]))


def test_single_member_family_expanding():
    rep = analyze_family(vary_slope_fixed_twists([Slope(2, 5)], 4))
    assert rep.verdict == "ExpandingCertified"


def test_uncertified_rows_listed():
    rep = analyze_family(vary_slope_fixed_twists(fibonacci_slopes(3), 1))
    assert len(rep.uncertified) == 3 and not rep.rows
    assert all(err == "NoHyperbolicityCertificate" for _, _, err in rep.uncertified)
    assert rep.verdict == "Inconclusive"
    with pytest.raises(NoCertifiedRows):
        expanding_verdict(rep)


def test_verdict_stable_under_reordering():
    members = fixed_slope_vary_twists(2, 5, 6, range(4, 10)).members
    rep_fwd = analyze_family(CoilFamily("fixed-slope", members))
    rep_rev = analyze_family(CoilFamily("fixed-slope", tuple(reversed(members))))
    assert rep_fwd.verdict == rep_rev.verdict


def test_jobs_parallel_matches_serial():
    fam = fixed_slope_vary_twists(2, 5, 6, range(4, 16))
    serial = analyze_family(fam, jobs=1)
    parallel = analyze_family(fam, jobs=2)
    assert report_to_csv(serial) == report_to_csv(parallel)


def test_twist_growth_experiment():
    tbl = twist_growth_experiment(2, 5, 6, range(4, 11))
    assert [row["crossings"] for row in tbl] == [20 * (n + 6) for n in range(4, 11)]
    assert all(row["disk_obstruction"] for row in tbl)
    assert all(row["vol_upper"] == tbl[0]["vol_upper"] for row in tbl)
    growth = [row["twist_regions"] for row in tbl]
    assert all(b > a for a, b in zip(growth, growth[1:]))
    assert len(twist_growth_experiment(2, 5, 6, [4])) == 1


def test_config_fixed_slope():
    fam, options = load_family_config(
        """
        # the bounded-volume sweep
        kind = fixed-slope
        p = 2
        q = 5
        n2 = 6
        range_start = 4
        range_end = 8
        diagram_cap = 100
        """
    )
    assert fam.kind == "fixed-slope" and len(fam.members) == 5
    assert options == {"diagram_cap": 100}


def test_config_vary_slope_custom():
    fam, _ = load_family_config(
        "kind = vary-slope\nslope_sequence = custom-list\nslopes = 2/5, 3/7\nn1 = 5\nrange_end = 2\n"
    )
    assert [str(m.slope) for m in fam.members] == ["2/5", "3/7"]
    assert all(m.n1 == m.n2 == 5 for m in fam.members)


def test_config_errors():
    with pytest.raises(ConfigError):
        load_family_config("kind = nonsense\n")
    with pytest.raises(ConfigError):
        load_family_config("kind = fixed-slope\np = 2\n")  # missing keys
    with pytest.raises(ConfigError):
        load_family_config("just some words\n")


def test_csv_columns_fixed():
    rep = analyze_family(fixed_slope_vary_twists(2, 5, 6, range(4, 6)))
    csv = report_to_csv(rep)
    assert csv.splitlines()[0] == ",".join(CSV_COLUMNS)
    assert len(csv.splitlines()) == 3


def test_json_report_schema():
    from importlib.resources import files

    import jsonschema

    schema = json.loads(
        files("coilbounds").joinpath("schemas/family_report.schema.json").read_text()
    )
    rep = analyze_family(vary_slope_fixed_twists(fibonacci_slopes(25), 4))
    data = json.loads(json.dumps(report_to_json(rep)))
    jsonschema.validate(data, schema)
    # far members exceed the diagram cap: twist column null, crossings exact
    assert data["rows"][-1]["twist_regions"] is None
    assert data["rows"][-1]["crossings"] > 10**6
