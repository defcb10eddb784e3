"""Skeletons, duals and shellability on two small complexes."""

from monolab.complexes import (SimplicialComplex, dual_ideal, facet_skeleton, is_shellable,
                               is_vertex_decomposable, skeleton)
from monolab.core import MonomialIdeal, ideal_wedge

for delta in (SimplicialComplex(3, [{1, 2}, {3}]), SimplicialComplex(4, [{1, 2}, {3, 4}]),
              SimplicialComplex(4, [{1, 2, 3}, {2, 3, 4}])):
    J = dual_ideal(delta)
    print("complex", delta.sorted_facets, "dual ideal", J)
    print("  shellable:", is_shellable(delta).verdict.value,
          " vd:", is_vertex_decomposable(delta).verdict.value)
    if delta.dim >= 1:
        fs = facet_skeleton(delta, 1)
        print("  facet skeleton", fs.sorted_facets,
              "dual equals J ∧ m:", dual_ideal(fs) == ideal_wedge(J, MonomialIdeal.maximal(delta.n)))
        print("  (0,0)-skeleton", skeleton(delta, 0, 0).sorted_facets)
