"""Graph colourings and Z2-equivariant topology: box complexes, Csorba's
graph functor, and chromatic bounds for the Z2-index."""

from .complexes import (SimplicialComplex, Z2Complex, antipodal_cycle, barycentric_subdivision,
                        closed_star, crosspolytope_sphere, is_free, open_star, product, sd_iter,
                        simplex)
from .config import Budget, BudgetExceeded, InputError
from .functors import (Z2SimplicialMap, box_complex, check_adjunction, check_product_preservation,
                       csorba_A, enumerate_z2_maps, phi, psi)
from .graphs import (Graph, GraphHom, clique_complex, complete_graph, cycle_graph,
                     exponential_graph, is_homomorphism, looped_vertices, tensor_product)
from .index import chi_A_sd, hedetniemi_probe, ind_bounds
from .posets import Poset, face_poset, order_complex, poset_product_witness
from .search import chromatic_number, enumerate_homomorphisms, find_homomorphism

__version__ = "0.1.0"
