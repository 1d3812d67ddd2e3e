"""Exact-arithmetic Lie algebra calculus and geometric-structure checks."""

from .scalars import (CScalar, DenominatorVanishes, Poly, Scalar, ScalarError,
                      ScalarParseError, parse_scalar, scalar_eval)
from .lie_core import (Derivation, LieAlgebra, LieError, Subspace, center,
                       centralizer, derived_subalgebra, extend_by_derivation,
                       is_derivation)
from .exterior import (KForm, ce_d, dual_pairing, interior, lie_derivative,
                       solve_potential, twisted_cohomology_dim, twisted_d,
                       wedge, wedge_power)
from .structures import (CONVENTION_DEF, CONVENTION_THM, ComplexStructure,
                         LckData, LcsData, Metric, StructureError,
                         StructureReport, assemble_lck, biinvariant_identities,
                         compatibility_check, exact_signature, lcs_check,
                         levi_civita, metric_from, nijenhuis, signature_at,
                         subalgebra_to_J, J_to_subalgebra, vaisman_check)
from .constructions import (OrbitData, coadjoint_stabilizer,
                            kirillov_kostant_form, lcs_from_orbit)
from . import catalog, document

__version__ = "0.1.0"
