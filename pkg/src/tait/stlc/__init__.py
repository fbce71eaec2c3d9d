from tait.stlc.nbe import Verdict, canonicity, embed_ne, embed_nf, normalize, rename_nf
from tait.stlc.oracle import bounded_beta_normalize, enumerate_terms, eta_expand, oracle_equal, step
from tait.stlc.set_model import consistency_check, interp_tm, interp_ty
from tait.stlc.syntax import ANS, UNIT, Fun, Prod, Renaming, Substitution, infer, rename, subst
