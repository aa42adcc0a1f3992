"""leibniz-lab: exact construction and analysis of semisimple Leibniz algebras.

Builds finite-dimensional indecomposable semisimple Leibniz algebras from
connected bipartite graphs, and analyzes structure-constant Leibniz algebras
back into the graph: liezation, Killing test, simple-ideal and simple-module
decomposition, edge tests, connectivity, and summand splitting. All
arithmetic is exact over the rationals.
"""

from ._kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
