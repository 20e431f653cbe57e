#!/usr/bin/env python
# coding: UTF-8


from .__about__ import __version__
from .catalog import Catalog, CellCatalogEntry, catalog_lookup
from .ktypes import KTypeDecomposition, closed_form, decompose, weight_multiplicity, weyl_dimension
from .orbits import Partition, collapse, jm_h, lambda_of, ls_dual, transpose, validate
from .vchar import VirtualCharacter, dominant_rep, mcgovern_character, r_x, unipotent_pair, x_pi
from .vogan import (GammaCertificate, gamma, parity_split_check, root_order_leq, support_maxima,
                    theorem_c_closed_form, verify_achar_sommers)
from .weights import Weight
from .weyl import SignedPermutation, SubgroupSpec, act, arrangement, det_sign, enumerate_elements
