"""Pure-Python (numpy) implementations of the hot frame kernels.

Every kernel works on both ``float64`` arrays and ``object`` arrays of
Fractions.  The compiled twin lives in ``_ckernels.pyx``; both must return
identical values on identical inputs.
"""

import numpy as np


def koszul(C, g, ginv):
    """Christoffel array of the left-invariant Levi-Civita connection.

    ``C[i, j, k]`` is the e_k coefficient of [e_i, e_j]; the result
    ``G[i, j, l]`` is the e_l coefficient of nabla_{e_i} e_j.
    """
    low = np.einsum("ijm,mk->ijk", C, g)  # g([e_i, e_j], e_k)
    two = low + np.einsum("kij->ijk", low) + np.einsum("kji->ijk", low)
    return np.einsum("ijk,kl->ijl", two, ginv) / 2


def riemann(C, G, g):
    """R(e_i, e_j, e_k, e_l) = g(R(e_i, e_j) e_k, e_l) for constant Christoffels."""
    up = (
        np.einsum("jkm,imp->ijkp", G, G)
        - np.einsum("ikm,jmp->ijkp", G, G)
        - np.einsum("ijm,mkp->ijkp", C, G)
    )
    return np.einsum("ijkp,pl->ijkl", up, g)


def nabla_endomorphism(G, A):
    """``N[i, j, l]``: e_l coefficient of (nabla_{e_i} A) e_j.

    ``A[a, b]`` is the e_a coefficient of A e_b.
    """
    return np.einsum("aj,ial->ijl", A, G) - np.einsum("ijm,lm->ijl", G, A)


def jacobi(C):
    """``D[i, j, k, m]``: e_m coefficient of the Jacobi cyclic sum on (e_i, e_j, e_k)."""
    inner = np.einsum("jkp,ipm->ijkm", C, C)  # [e_i, [e_j, e_k]]
    return inner + np.einsum("jkim->ijkm", inner) + np.einsum("kijm->ijkm", inner)
