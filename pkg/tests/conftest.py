# acceptance test name -> criterion line printed after the run
CRITERIA = {
    "test_c01_five_element_sigma": "1  sigma of the five-element 3-representation",
    "test_c02_triangle_matrix": "2  TD-Delaunay system of the triangle, entry for entry",
    "test_c03_tdd_equals_sigma": "3  tdd(P) = sigma(orders of P), 500 configurations",
    "test_c04_farkas_dichotomy": "4  exactly one of solution / multi-flow, 500 representations",
    "test_c05_realize_round_trip": "5  realize() round trip on the feasible ones",
    "test_c06_counterexample_sweep": "6  all 31104 counterexample candidates infeasible",
    "test_c07_swaps_preserve_sigma": "7  consecutive swaps preserve sigma and edge orders",
    "test_c08_standardness_agrees": "8  standardness of R agrees with standardness of sigma(R)",
    "test_c09_rectangle_pipeline": "9  rectangular Delaunay pipeline, 200 point sets",
    "test_c10_acyclic_flows_vanish": "10 divergence-free flows on acyclic digraphs vanish",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in CRITERIA:
        return
    if report.when == "call" or report.failed:
        prev = _outcomes.get(name)
        if prev is None or prev[0] == "PASS":
            _outcomes[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _outcomes:
            status, secs = _outcomes[name]
            terminalreporter.write_line(f"{status}  criterion {label}  ({secs:.1f} s)")
        else:
            terminalreporter.write_line(f"NOT RUN  criterion {label}")
