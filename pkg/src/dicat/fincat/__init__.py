"""The double category of finite categories, functors, profunctors and natural families."""
from .category import (UNIT, Cat, CatFunctor, Factor, FinCategory, all_functors, chain3, identity_cat_functor,
                       idempotent, involution, parallel_pair, span_category, tensor_functors, terminal_category,
                       walking_arrow)
from .instance import (FinCatDC, NatSquare, disk_by_values, enumerate_squares, fincat_dc, functor_square,
                       identity_square, make_square, random_profunctor, square_keys, standard_categories)
from .profunctor import (Atom, CapAtom, ConstantAtom, EvaluatedAtom, HomAtom, ProarrowList, ProdAtom,
                         RepresentableAtom, SwapAtom, TableAtom, TransposeAtom, check_well_defined,
                         compose_proarrows, cup, eval_atom, hom, prod, transpose, transpose_list)
from .monoidal import (FinCatMonoidal, evaluation_disk, fincat_dual, fincat_monoidal, monoidal_interchanger,
                       tensor_compositor, tensor_lists)
