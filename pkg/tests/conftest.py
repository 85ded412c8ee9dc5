import pytest

from queengames import (
    KQueen,
    KQueenDee,
    PTable,
    QueenBee,
    RestrictedStroll,
    Standard,
    WidenedQueen,
)

# published 15-column tables, rows (a_n, b_n)
QUEEN_BEE_15 = PTable(tuple(
    (a, 2 * a) for a in (1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21)
))
TWO_QUEEN_DEE_15 = PTable(tuple(zip(
    (1, 2, 4, 5, 6, 7, 9, 10, 11, 13, 14, 15, 16, 18, 19),
    (3, 8, 12, 17, 20, 25, 29, 34, 39, 43, 48, 51, 56, 60, 65),
)))
QUEEN_DEE_15 = PTable(tuple(zip(
    (1, 3, 4, 6, 7, 9, 10, 12, 14, 15, 17, 18, 20, 21, 23),
    (2, 5, 8, 11, 13, 16, 19, 22, 25, 28, 31, 33, 36, 39, 42),
)))
TWO_ONE_15 = PTable(tuple(zip(
    (1, 2, 4, 5, 7, 8, 9, 10, 12, 13, 15, 16, 17, 18, 20),
    (3, 6, 11, 14, 19, 22, 25, 28, 33, 36, 41, 44, 47, 50, 55),
)))

TRIBONACCI_26 = "abacabaabacababacabaabacab"
T_C = "abaabaabaababaabaabaab"
T_B = "aacaaaacaaacaaaaca"

NON_MORPHIC_5 = ((1, 2), (3, 7), (4, 9), (5, 11), (6, 13))

CATALOG = (
    Standard(),
    KQueen(2),
    KQueen(3),
    QueenBee(),
    KQueenDee(1),
    KQueenDee(2),
    KQueenDee(3),
    WidenedQueen(2, 1),
    RestrictedStroll(2, 1),
    RestrictedStroll(3, 1),
)

def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


_results = {}


@pytest.fixture
def note(request):
    """Attach a one-line detail to the current acceptance criterion."""
    def add(text):
        request.node.user_properties.append(("note", text))
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    num, title = mark.args
    entry = _results.setdefault(num, {"title": title, "ok": True, "notes": []})
    entry["ok"] = entry["ok"] and rep.passed
    entry["notes"] += [v for k, v in item.user_properties if k == "note" and v not in entry["notes"]]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        r = _results[num]
        tr.write_line(f"{'PASS' if r['ok'] else 'FAIL'} criterion {num:>2}: {r['title']}")
        for text in r["notes"]:
            tr.write_line(f"     {text}")
