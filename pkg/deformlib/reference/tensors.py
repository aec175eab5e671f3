# coding=utf-8

# License: BSD 3 clause

import itertools

import numpy as np

from deformlib.ensemble.wigner import SymmetryClass, check_beta

"""
This file contains the covariance tensors of the Gaussian part of the reference
matrices.

A covariance tensor over m indices is an array T of shape (m, m, m, m) with
T[i, j, k, l] = E Psi_ij Psi_kl. It is complex for beta = 2 and real for
beta = 1. Viewed as a matrix over index pairs through
K[(i, j), (k, l)] = T[i, j, l, k] = E Psi_ij conj(Psi_kl), it is Hermitian and
nonnegative.

The tensors built from V (Q, W and R) are evaluated with matrix products and
einsum contractions in O(N^2 r + N r^4) operations. Quadruple-loop versions are
kept as oracles for the property suites.
"""

PSD_TOL = 1e-10


class IndefiniteCovarianceError(ValueError):
    """Raised when a covariance has an eigenvalue below -PSD_TOL * trace."""


def tensor_delta(r, beta):
    """Delta_{ij,kl} = delta_il delta_kj + 1{beta = 1} delta_ik delta_jl,
    the covariance tensor of an r x r GOE/GUE matrix Phi with
    E Phi_ij Phi_kl = Delta_{ij,kl}."""
    beta = check_beta(beta)
    eye = np.eye(r)
    delta = np.einsum('il,kj->ijkl', eye, eye)
    if beta == SymmetryClass.REAL:
        delta = delta + np.einsum('ik,jl->ijkl', eye, eye)
    return delta


def tensor_p(mat, beta):
    """P_{ij,kl}(R) = R_il R_kj + 1{beta = 1} R_ik R_jl."""
    beta = check_beta(beta)
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("Expected a square matrix, got shape {}."
                         .format(mat.shape))
    out = np.einsum('il,kj->ijkl', mat, mat)
    if beta == SymmetryClass.REAL:
        out = out + np.einsum('ik,jl->ijkl', mat, mat)
    return out


def tensor_e(r, beta, phi):
    """Regularizing term E = phi^{-1} Delta."""
    return tensor_delta(r, beta) / phi


def _check_shapes(v, moments):
    v = np.asarray(v)
    if v.ndim != 2 or v.shape[0] != moments.n:
        raise ValueError("v must have shape ({}, r), got {}."
                         .format(moments.n, v.shape))
    return v


def tensor_s(v, moments):
    """S(V) = V* mu3 V / N."""
    v = _check_shapes(v, moments)
    return v.conj().T @ moments.mu3 @ v / v.shape[0]


def tensor_w(v, moments):
    """W_{ij,kl}(V) = N^{-1/2} sum_ab (conj(V_ai) conj(V_ak) V_al mu3_ab V_bj
    + conj(V_ai) mu3_ab V_bj conj(V_bk) V_bl)."""
    v = _check_shapes(v, moments)
    n = v.shape[0]
    vc = v.conj()
    mu3_v = moments.mu3 @ v
    v_mu3 = vc.T @ moments.mu3
    first = np.einsum('ai,ak,al,aj->ijkl', vc, vc, v, mu3_v, optimize=True)
    second = np.einsum('ib,bj,bk,bl->ijkl', v_mu3, v, vc, v, optimize=True)
    return (first + second) / np.sqrt(n)


def tensor_q(v, moments):
    """Q_{ij,kl}(V) = W_{ij,kl}(V) + W_{kl,ij}(V)."""
    w = tensor_w(v, moments)
    return w + w.transpose(2, 3, 0, 1)


def tensor_r(v, moments, beta):
    """R_{ij,kl}(V) = N^{-1} sum_ab (mu4_ab - 4 + beta)
    conj(V_bi) V_bj conj(V_bk) V_bl."""
    beta = check_beta(beta)
    v = _check_shapes(v, moments)
    n = v.shape[0]
    weights = (moments.mu4 - 4.0 + beta).sum(axis=0)
    vc = v.conj()
    return np.einsum('b,bi,bj,bk,bl->ijkl', weights, vc, v, vc, v,
                     optimize=True) / n


def as_pair_matrix(tensor):
    """Matrix K[(i, j), (k, l)] = T[i, j, l, k] over index pairs."""
    m = tensor.shape[0]
    return tensor.transpose(0, 1, 3, 2).reshape(m * m, m * m)


def check_nonnegative(tensor, tol=PSD_TOL):
    """Return ``tensor`` if its pair matrix has no eigenvalue below
    -tol * trace.

    Raises
    ------
    IndefiniteCovarianceError
    """
    pair = as_pair_matrix(tensor)
    pair = (pair + pair.conj().T) / 2.0
    w = np.linalg.eigvalsh(pair)
    scale = max(float(np.real(np.trace(pair))), float(np.max(np.abs(w))))
    if w[0] < -tol * scale:
        raise IndefiniteCovarianceError(
            "The covariance of Psi is indefinite: smallest eigenvalue "
            "{:.3e} of its pair matrix, tolerance {:.3e}. The law of the "
            "entries or V is inconsistent.".format(w[0], -tol * scale))
    return tensor


def _real_if_real_class(tensor, beta):
    if beta == SymmetryClass.REAL:
        return np.real(tensor)
    return tensor.astype(np.complex128, copy=False)


def psi_covariance_single(spec, block):
    """Covariance tensor of Psi restricted to one block pi,

        (|d|+1)/d^2 Delta + (|d|+1)^2 (|d|-1) (-P(V_d* V_d)/d^4 + Q(V)/d^5
        + R(V)/d^6) + E,

    with d = d_pi and V, V_d = V_delta restricted to the columns of pi.

    Parameters
    ----------
    spec : ReferenceSpec

    block : tuple of int
        A block of ``spec.partition``.

    Returns
    -------
    cov : array of shape (m, m, m, m)
        m = len(block).

    Raises
    ------
    IndefiniteCovarianceError
        If the tensor is not nonnegative up to PSD_TOL.
    """
    block = tuple(block)
    if block not in spec.partition.blocks:
        raise ValueError("{} is not a block of the partition {}."
                         .format(block, spec.partition.blocks))
    beta = spec.beta
    idx = np.asarray(block) - 1
    d = spec.partition.d_blocks[spec.partition.blocks.index(block)]
    v = spec.deformation.v[:, idx]
    v_delta = spec.v_delta[:, idx]
    m = len(block)
    ad = abs(d)

    cov = (ad + 1.0) / d ** 2 * tensor_delta(m, beta)
    cov = cov + (ad + 1.0) ** 2 * (ad - 1.0) * (
        -tensor_p(v_delta.conj().T @ v_delta, beta) / d ** 4
        + tensor_q(v, spec.moments) / d ** 5
        + tensor_r(v, spec.moments, beta) / d ** 6)
    if spec.include_e:
        cov = cov + tensor_e(m, beta, spec.phi)
    return check_nonnegative(_real_if_real_class(cov, beta))


def psi_covariance_joint(spec):
    """Joint covariance tensor of Psi over the covered indices [Pi].

    For i, j in a block pi and k, l in a block pi',

        E Psi_ij Psi_kl = delta_{pi pi'} ((|d_pi|+1)/d_pi^2 Delta + E)
            + c_pi c_pi' (-P(V_d* V_d) + R/(d_pi d_pi') + W_{ij,kl}/d_pi'
            + W_{kl,ij}/d_pi),

    with c_p = (|d_p|-1)^{1/2} (|d_p|+1)/d_p^2. Entries with i, j (or k, l)
    in different blocks are zero.

    Returns
    -------
    cov : array of shape (m, m, m, m)
        m = |[Pi]|, indices in the order of ``spec.partition.covered``.

    Raises
    ------
    IndefiniteCovarianceError
    """
    partition = spec.partition
    if len(partition) == 0:
        raise ValueError("The partition is empty.")
    beta = spec.beta
    covered = np.asarray(partition.covered)
    m = covered.size
    v = spec.deformation.v[:, covered - 1]
    v_delta = spec.v_delta[:, covered - 1]

    block_id = np.empty(m, dtype=int)
    d_of = np.empty(m)
    position = {i: p for p, i in enumerate(partition.covered)}
    for b, (block, d_pi) in enumerate(zip(partition.blocks,
                                          partition.d_blocks)):
        for i in block:
            block_id[position[i]] = b
            d_of[position[i]] = d_pi
    c_of = np.sqrt(np.abs(d_of) - 1.0) * (np.abs(d_of) + 1.0) / d_of ** 2

    # broadcast per-index quantities along the axis of i (pi) or k (pi')
    d_pi = d_of[:, None, None, None]
    d_pi2 = d_of[None, None, :, None]
    c_pi = c_of[:, None, None, None]
    c_pi2 = c_of[None, None, :, None]
    same = (block_id[:, None, None, None] == block_id[None, None, :, None])

    w = tensor_w(v, spec.moments)
    diagonal = tensor_delta(m, beta) * (np.abs(d_pi) + 1.0) / d_pi ** 2
    if spec.include_e:
        diagonal = diagonal + tensor_e(m, beta, spec.phi)
    cross = c_pi * c_pi2 * (
        -tensor_p(v_delta.conj().T @ v_delta, beta)
        + tensor_r(v, spec.moments, beta) / (d_pi * d_pi2)
        + w / d_pi2 + w.transpose(2, 3, 0, 1) / d_pi)
    cov = np.where(same, diagonal, 0.0) + cross

    within = block_id[:, None] == block_id[None, :]
    mask = within[:, :, None, None] & within[None, None, :, :]
    cov = np.where(mask, cov, 0.0)
    return check_nonnegative(_real_if_real_class(cov, beta))


def oracle_tensor_s(v, moments):
    """Double-loop evaluation of S(V)."""
    v = np.asarray(v)
    n, r = v.shape
    out = np.zeros((r, r), dtype=np.result_type(v, moments.mu3))
    for i, j in itertools.product(range(r), repeat=2):
        out[i, j] = sum(np.conj(v[a, i]) * moments.mu3[a, b] * v[b, j]
                        for a in range(n) for b in range(n)) / n
    return out


def oracle_tensor_w(v, moments):
    """Quadruple-loop evaluation of W(V), sums over a, b written out."""
    v = np.asarray(v)
    n, r = v.shape
    mu3 = moments.mu3
    vc = v.conj()
    out = np.zeros((r,) * 4, dtype=np.result_type(v, mu3))
    for i, j, k, l in itertools.product(range(r), repeat=4):
        total = 0.0
        for a in range(n):
            for b in range(n):
                total += (vc[a, i] * vc[a, k] * v[a, l] * mu3[a, b] * v[b, j]
                          + vc[a, i] * mu3[a, b] * v[b, j] * vc[b, k]
                          * v[b, l])
        out[i, j, k, l] = total / np.sqrt(n)
    return out


def oracle_tensor_r(v, moments, beta):
    """Quadruple-loop evaluation of R(V)."""
    v = np.asarray(v)
    n, r = v.shape
    mu4 = moments.mu4
    vc = v.conj()
    out = np.zeros((r,) * 4, dtype=np.result_type(v, float))
    for i, j, k, l in itertools.product(range(r), repeat=4):
        total = 0.0
        for a in range(n):
            for b in range(n):
                total += ((mu4[a, b] - 4.0 + beta) * vc[b, i] * v[b, j]
                          * vc[b, k] * v[b, l])
        out[i, j, k, l] = total / n
    return out
