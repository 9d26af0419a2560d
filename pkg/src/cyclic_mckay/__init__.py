"""Special McKay correspondence for cyclic quotient surface singularities C^2 / C_{r,a}.

Three independent descriptions of the same data are computed exactly:

* monomial combinatorics: the G-basis B(G), the L-space L(G) and the special
  representations (:mod:`cyclic_mckay.monomials`);
* toric geometry: the Hirzebruch-Jung fan of the minimal resolution
  (:mod:`cyclic_mckay.resolution`);
* torus-fixed G-clusters of Hilb^G(C^2) (:mod:`cyclic_mckay.clusters`);

and :mod:`cyclic_mckay.checks` cross-validates them.
"""

from .checks import ValidationReport, check_group, sweep
from .clusters import (
    an_corollary_check,
    chart_deformation,
    cluster_ideal,
    cotangent_decomposition,
    curve_point_ideal,
    enumerate_clusters,
    reconstruct_chain,
)
from .errors import McKayError
from .group import (
    GroupElement,
    GroupParams,
    age,
    is_in_sl2,
    make_group,
    monomial_character,
    monomial_weight,
    natural_rep_summands,
)
from .monomials import (
    Monomial,
    g_basis,
    invariant_generators,
    l_space,
    module_generators,
    special_reps,
    surjectivity_oracle,
)
from .quiver import cartan_matrix, quiver_graph, tensor_matrix
from .resolution import build_resolution, dual_graph, hj_expansion, newton_boundary, self_intersections

__version__ = "0.1.0"
