import pytest

from xmod import catalog, library
from xmod.groups import cyclic_group
from xmod.simplicial import TruncatedSimplicialGroup, check_simplicial_group, moore_pi0_iso


def tab(G):
    """Multiplication table as nested lists, for the brute-force oracles."""
    return G.table.tolist()


@pytest.fixture(scope="session")
def s3():
    return library.symmetric3()


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def z8():
    return cyclic_group(8)


@pytest.fixture(scope="session")
def mod2():
    return catalog.get("mod2").build()


@pytest.fixture(scope="session")
def a3s3():
    return catalog.get("incl-A3-S3").build()


@pytest.fixture(scope="session")
def corpus():
    return catalog.corpus()


# ------------------------------------------------------------------------------
# Moore pi_0 versus pi_0 on every simplicial group any test builds.
#
# Construction is recorded; after each test the recorded objects are compared
# and the objects are dropped. A disagreement only counts when the object really
# is a simplicial group (some tests build broken ones on purpose).

CROSS_ORACLE = {"checked": 0, "not_simplicial": 0, "failures": []}
ACCEPTANCE_LINES = []
_built = []
_original_init = TruncatedSimplicialGroup.__init__


def _recording_init(self, *args, **kwargs):
    _original_init(self, *args, **kwargs)
    _built.append(self)


TruncatedSimplicialGroup.__init__ = _recording_init


@pytest.fixture(autouse=True)
def _moore_pi0_cross_oracle(request):
    _built.clear()
    yield
    seen, _built[:] = list(_built), []
    for S in {id(S): S for S in seen}.values():
        try:
            moore_pi0_iso(S)
            CROSS_ORACLE["checked"] += 1
        except Exception as exc:
            if check_simplicial_group(S).ok:
                CROSS_ORACLE["failures"].append((request.node.nodeid, S.label, repr(exc)))
            else:
                CROSS_ORACLE["not_simplicial"] += 1


def pytest_collection_modifyitems(items):
    # acceptance last, so the cross-oracle tally covers the whole suite
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
