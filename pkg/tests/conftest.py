import pytest

from judgekit.finset_topos import build_finset_topos
from judgekit.finsets import fin_skeleton
from judgekit.ndt import ChainDoctrine, PowersetDoctrine, \
    build_deduction_system
from judgekit.toy import build_toy_theory


@pytest.fixture(scope="session")
def skel2():
    return fin_skeleton(2)


@pytest.fixture(scope="session")
def topos2():
    """The subset dtt over contexts of size ≤ 2 (shared; mutated only by
    registry closure, which is memoized and harmless)."""
    return build_finset_topos(2)


@pytest.fixture(scope="session")
def ds2():
    return build_deduction_system(PowersetDoctrine(2))


@pytest.fixture(scope="session")
def chain_ds():
    return build_deduction_system(ChainDoctrine(2, 2))


@pytest.fixture(scope="session")
def toy():
    return build_toy_theory()
