"""q-analogues of symmetric multiple zeta values: word algebras, products,
truncated and limiting evaluators, generating-series identities and
verification suites.
"""
from .coeffring import HBAR, HPoly
from .classical import ClassicalPoly, harm, shuf, z
from .errors import *  # noqa: F401,F403
from .evaluation import (QContext, B_bound, T_qM, Lq_tseries, ZqM, ZSqM, Zq, ZqS_sh, ZqS_star,
                         kontsevich_ZS_star, limit_probe)
from .freealg import H, NCPoly, e, g, hoffman_dual, membership
from .harness import (depth2_solve, ohno_depth2_check, qsmzv_depth2, run_suite)
from .qops import (E_index, E_ones, circ, decompose_E, iota, psi_sh, psi_star, qharm, qshuf,
                   wS_q)
from .series import HSeries, check_identity

__version__ = "0.1.0"
