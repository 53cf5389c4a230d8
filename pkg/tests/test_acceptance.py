"""The ten acceptance criteria at their stated limits.

Each test writes one ``[PASS]``/``[FAIL]`` line to the terminal, whether or
not output capture is on. Run ``python tests/test_acceptance.py`` for the
bare summary.
"""

import pytest

from gl2hopf.acceptance import CRITERIA, run_criterion


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # compile the numba kernels up front so the timing measures the work only
    from gl2hopf.points import hopf_points_consistency

    hopf_points_consistency("GL2", 2, "G")


@pytest.mark.parametrize("crit", CRITERIA, ids=lambda c: f"c{c.number:02d}")
def test_criterion(crit, capsys):
    outcome = run_criterion(crit)
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.report.ok, [f"{x.name}: {x.details}" for x in outcome.report.failures()]
    assert outcome.in_time, f"{outcome.seconds:.2f}s over the {crit.limit:g}s limit"


if __name__ == "__main__":
    import sys

    from gl2hopf.acceptance import run_all

    results = run_all()
    for o in results:
        print(o.line())
    sys.exit(0 if all(o.passed for o in results) else 1)
