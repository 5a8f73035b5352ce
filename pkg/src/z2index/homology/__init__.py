from .chains import ChainData, HomologyGroups, chain_data, homology, sphere_homology_check
from .quotient import (CircleMapResult, QuotientData, circle_map_exists, quotient_with_parity,
                       verify_circle_certificate, w1_height)
from .snf import SNF, determinant, invariant_factors, smith_normal_form, solve_integer
