import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gsbasis.freealg import Alphabet, Poly
from gsbasis.groups import cyclic_group, group_from_permutations, group_from_table
from gsbasis.hnn import build_hnn
from gsbasis.io import fixtures_dir, load_hnn, load_presentation
from gsbasis.orders import DegLex
from gsbasis.rewrite import Presentation


def z4_group():
    names = ["e", "a", "a2", "a3"]
    return group_from_table(names, [[(i + j) % 4 for j in range(4)] for i in range(4)])


def make_z4():
    G = z4_group()
    A = G.subgroup(["e", "a2"])
    return build_hnn(G, A, A, {0: 0, 2: 2})


def make_s3():
    G = group_from_permutations(["(1,2)", "(1,2,3)"]).group
    A = G.generated(["(1,2)"])
    return build_hnn(G, A, A, {a: a for a in A.elements})


def make_z6():
    G = cyclic_group(6)
    A = G.subgroup(["e", "c2", "c4"])
    return build_hnn(G, A, A, {0: 0, 2: 4, 4: 2})


@pytest.fixture(scope="session")
def z4():
    return make_z4()


@pytest.fixture(scope="session")
def s3hnn():
    return make_s3()


@pytest.fixture(scope="session")
def z6():
    return make_z6()


@pytest.fixture(scope="session")
def hnn_fixtures(z4, s3hnn, z6):
    return {"Z4": z4, "S3": s3hnn, "Z6": z6}


def semigroup_presentation(names, rels):
    """Deg-lex presentation from ``[(lhs, rhs)]`` strings."""
    alpha = Alphabet(names)
    polys = [Poly.binomial(alpha, alpha.parse_word(l), alpha.parse_word(r)) for l, r in rels]
    return Presentation(alpha, polys, DegLex(len(alpha)))


@pytest.fixture
def s3cox():
    return semigroup_presentation(["a", "b"], [("a a", "1"), ("b b", "1"), ("a b a", "b a b")])


@pytest.fixture
def fixtures():
    return fixtures_dir()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report(request):
    """Record one PASS/FAIL line for the calling acceptance criterion."""
    info = {"detail": ""}
    yield info
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"criterion {info['id']}: {'PASS' if ok else 'FAIL'} - {info['name']}"
    if info["detail"]:
        line += f" ({info['detail']})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
