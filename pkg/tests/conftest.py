from fractions import Fraction

import pytest

from leibniz_lab.algebra import StructureTable, direct_sum
from leibniz_lab.catalog import (
    IrrepSpec,
    RightModuleAction,
    SimpleLieSpec,
    direct_sum_actions,
    external_tensor,
    make_irrep_right,
    make_simple_lie,
    trivial_action,
)
from leibniz_lab.semidirect import semidirect_product

SL2 = SimpleLieSpec(2)


def v_irrep(m: int) -> RightModuleAction:
    return make_irrep_right(IrrepSpec("sl2", SL2, m))


@pytest.fixture(scope="session")
def sl2():
    return make_simple_lie(SL2)


@pytest.fixture(scope="session")
def sl2_sl2(sl2):
    return direct_sum(sl2, sl2)


@pytest.fixture(scope="session")
def k22_algebra(sl2):
    """Complete bipartite build: two sl2 blocks, both modules V(1) x V(1). 14-dim."""
    blocks = [sl2, sl2]
    i1 = external_tensor(blocks, [v_irrep(1), v_irrep(1)])
    i2 = external_tensor(blocks, [v_irrep(1), v_irrep(1)])
    return semidirect_product(direct_sum(sl2, sl2), direct_sum_actions([i1, i2]))


@pytest.fixture(scope="session")
def path_algebra(sl2):
    """Build over the 3-edge graph: modules V(1) x V(1) and V(1) x C. 12-dim."""
    blocks = [sl2, sl2]
    i1 = external_tensor(blocks, [v_irrep(1), v_irrep(1)])
    i2 = external_tensor(blocks, [v_irrep(1), trivial_action(3)])
    return semidirect_product(direct_sum(sl2, sl2), direct_sum_actions([i1, i2]))


@pytest.fixture(scope="session")
def solvable_2dim():
    """[e1, e1] = e2, everything else zero: Leibniz, not semisimple."""
    return StructureTable(2, {(0, 0): {1: Fraction(1)}})
