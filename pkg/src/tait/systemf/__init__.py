from tait.systemf.param import RelInstance, free_theorem_check, free_theorem_print, rel_member
from tait.systemf.syntax import f_infer, f_normalize
