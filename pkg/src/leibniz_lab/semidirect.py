"""The Leibniz algebra g x| M built from a Lie table and a right module action:
algebra part brackets as in g, [m, x] = m.x, [x, m] = [m, m'] = 0."""

from __future__ import annotations

from typing import Sequence

from .algebra import Cell, LeibnizAlgebra, StructureTable, check_lie
from .catalog import RightModuleAction


class AxiomFailure(ValueError):
    """An input to the semidirect product fails its own axioms."""


def semidirect_product(
    g: StructureTable,
    action: RightModuleAction,
    module_labels: Sequence[str] | None = None,
) -> LeibnizAlgebra:
    """Basis ordered (g-basis, then module basis); verified before returning."""
    if action.algebra_dim != g.dim:
        raise AxiomFailure("action is not over the given algebra")
    lie = check_lie(g)
    if not lie.is_lie:
        raise AxiomFailure(f"algebra part is not Lie: {lie.violations[:3]}")
    bad = action.check_right_axiom(g)
    if bad:
        raise AxiomFailure(f"right module axiom fails on pairs {bad[:3]}")
    dg = g.dim
    dm = action.module_dim
    cells: dict[tuple[int, int], Cell] = {}
    for (i, j), cell in g._c.items():
        cells[(i, j)] = dict(cell)
    for j in range(dg):
        r = action.mats[j]
        for t in range(dm):
            col = r.column(t)
            cell = {dg + a: v for a, v in enumerate(col) if v}
            if cell:
                cells[(dg + t, j)] = cell
    if module_labels is None:
        module_labels = [f"v{t + 1}" for t in range(dm)]
    table = StructureTable(dg + dm, cells, list(g.labels) + list(module_labels))
    return LeibnizAlgebra.from_table(table)
