"""
Seeded random and fixed fixtures: channels, classical transition matrices and
relations, valid quantum multi-relations and symmetric decomposable ones.

Every random function draws from a :class:`numpy.random.Generator` passed in by the
caller, so a seed fully determines the generated family.
"""

from typing import List, Optional, Tuple

import numpy as np

from qmultigraph.algebra import AlgebraMap, BlockAlgebra
from qmultigraph.channel import ChannelMap, classical_channel, make_channel
from qmultigraph.decomposable import sigma, sigma_embed
from qmultigraph.multirelation import (
    ClassicalMultiRelation,
    QuantumMultiRelation,
    make_multirelation,
)
from qmultigraph.tensor import OperatorSubspace

#: Largest total dimension of the randomly drawn algebras
MAX_DIM = 3


def generator(seed: int, *stream: int) -> np.random.Generator:
    """
    Independent generator for the sub-stream ``stream`` of ``seed``.
    """
    return np.random.default_rng([seed, *stream])


def random_complex(rng: np.random.Generator, *shape: int) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_isometry(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """
    ``rows x cols`` isometry from the QR decomposition of a Gaussian matrix, with the
    phases of ``R``'s diagonal folded into ``Q``.
    """
    if rows < cols:
        raise ValueError(f"An isometry needs rows >= cols, got {rows} x {cols}.")
    q, r = np.linalg.qr(random_complex(rng, rows, cols))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[None, :]


def random_block_algebra(
    rng: np.random.Generator,
    max_dim: int = MAX_DIM,
    min_blocks: int = 1,
) -> BlockAlgebra:
    """
    Algebra of total dimension at most ``max_dim`` with at least ``min_blocks``
    blocks.
    """
    total = int(rng.integers(max(min_blocks, 1), max_dim + 1))
    dims = []
    remaining = total
    while remaining:
        needed = max(min_blocks - len(dims) - 1, 0)
        d = int(rng.integers(1, remaining - needed + 1))
        dims.append(d)
        remaining -= d
    return BlockAlgebra(tuple(dims))


def random_isometry_channel(
    rng: np.random.Generator,
    in_alg: BlockAlgebra,
    out_alg: BlockAlgebra,
    max_sector_kraus: int = 2,
) -> ChannelMap:
    """
    Trace-preserving channel built input block by input block: the column block of
    ``H_a`` is a random isometry into ``⊕_b (H^b_out)^{r_ab}`` cut into Kraus
    operators, with ``0 <= r_ab <= max_sector_kraus`` operators per sector.
    """
    kraus = []
    for a, n_a in enumerate(in_alg.block_dims):
        counts = rng.integers(0, max_sector_kraus + 1, size=out_alg.num_blocks)
        while int(np.dot(counts, out_alg.block_dims)) < n_a:
            counts[int(rng.integers(out_alg.num_blocks))] += 1
        v = random_isometry(rng, int(np.dot(counts, out_alg.block_dims)), n_a)
        start = 0
        for b, m_b in enumerate(out_alg.block_dims):
            for _ in range(int(counts[b])):
                matrix = np.zeros((m_b, in_alg.total_dim), dtype=complex)
                matrix[:, list(in_alg.supports[a])] = v[start : start + m_b]
                kraus.append((b, matrix))
                start += m_b
    return make_channel(in_alg, out_alg, kraus)


def random_kraus_channel(
    rng: np.random.Generator, n_in: int, n_out: int, num_kraus: int
) -> ChannelMap:
    """
    Map between full matrix algebras with ``num_kraus`` Gaussian Kraus operators,
    linearly independent with probability one when ``num_kraus <= n_in * n_out``.
    """
    kraus = [(0, random_complex(rng, n_out, n_in)) for _ in range(num_kraus)]
    return make_channel(BlockAlgebra.full(n_in), BlockAlgebra.full(n_out), kraus)


def random_unitary_channel(rng: np.random.Generator, n: int) -> ChannelMap:
    u = random_isometry(rng, n, n)
    return make_channel(BlockAlgebra.full(n), BlockAlgebra.full(n), [(0, u)])


def random_stochastic(
    rng: np.random.Generator, outputs: int, inputs: int, zero_fraction: float = 0.3
) -> np.ndarray:
    """
    Column-stochastic ``outputs x inputs`` matrix of normalized squared Gaussians,
    with a fraction of entries forced to zero. Every column keeps a positive entry.
    """
    p = rng.standard_normal((outputs, inputs)) ** 2
    p[rng.random((outputs, inputs)) < zero_fraction] = 0.0
    for x in range(inputs):
        if not p[:, x].any():
            p[int(rng.integers(outputs)), x] = 1.0
    return p / p.sum(axis=0, keepdims=True)


def random_classical_relation(
    rng: np.random.Generator, max_x: int = 4, max_y: int = 4
) -> ClassicalMultiRelation:
    x_size = int(rng.integers(1, max_x + 1))
    y_size = int(rng.integers(1, max_y + 1))
    present = rng.random((x_size, x_size, y_size)) < 0.4
    triples = [(int(a), int(b), int(y)) for a, b, y in zip(*np.nonzero(present))]
    return ClassicalMultiRelation.of(x_size, y_size, triples)


def random_multirelation(
    rng: np.random.Generator,
    m_alg: BlockAlgebra,
    n_alg: BlockAlgebra,
    max_generators: int = 3,
) -> QuantumMultiRelation:
    """
    Valid multi-relation spanned by random elements of single sectors
    ``B(H_a ⊗ K_b, H_{a'} ⊗ K_b)``; each such sector is invariant under ``M' ⊗ 1``
    and ``1 ⊗ Z(N)``.
    """
    h, k = m_alg.total_dim, n_alg.total_dim
    generators = []
    for _ in range(int(rng.integers(1, max_generators + 1))):
        a, a2 = rng.integers(m_alg.num_blocks, size=2)
        b = int(rng.integers(n_alg.num_blocks))
        g = np.zeros((h, k, h, k), dtype=complex)
        rows, cols = list(m_alg.supports[a]), list(m_alg.supports[a2])
        legs = list(n_alg.supports[b])
        block = random_complex(rng, len(rows), len(legs), len(cols), len(legs))
        g[np.ix_(rows, legs, cols, legs)] = block
        generators.append(g.reshape(h * k, h * k))
    return make_multirelation(m_alg, n_alg, generators)


def random_kraus_family(
    rng: np.random.Generator,
    m_alg: BlockAlgebra,
    n_alg: BlockAlgebra,
    max_per_block: int = 2,
) -> List[Tuple[int, np.ndarray]]:
    """
    Block-form operators ``F: H → K_b`` as ``(b, embedded matrix)`` pairs, at least
    one in total.
    """
    family = []
    while not family:
        for b, support in enumerate(n_alg.supports):
            for _ in range(int(rng.integers(0, max_per_block + 1))):
                a = int(rng.integers(m_alg.num_blocks))
                f = np.zeros((n_alg.total_dim, m_alg.total_dim), dtype=complex)
                columns = list(m_alg.supports[a])
                f[np.ix_(list(support), columns)] = random_complex(
                    rng, len(support), len(columns)
                )
                family.append((b, f))
    return family


def random_decomposable_relation(
    rng: np.random.Generator, m_alg: BlockAlgebra, n_alg: BlockAlgebra
) -> QuantumMultiRelation:
    """
    Symmetric decomposable multi-relation ``⊕_b σ(W_b^* ⊗ W_b)`` for random block-form
    subspaces ``W_b ⊆ B(H, K_b)``.
    """
    family = random_kraus_family(rng, m_alg, n_alg)
    shape = (n_alg.total_dim, m_alg.total_dim)
    parts = []
    for b in range(n_alg.num_blocks):
        operators = [f for block, f in family if block == b]
        if operators:
            w = OperatorSubspace.from_spanning(operators, shape)
            parts.append(sigma_embed(w.adjoint(), w).basis)
    return make_multirelation(m_alg, n_alg, np.concatenate(parts))


def random_asymmetric_decomposable_relation(
    rng: np.random.Generator, m_alg: BlockAlgebra, n_alg: BlockAlgebra
) -> QuantumMultiRelation:
    """
    Decomposable multi-relation ``⊕_b σ(W1_b^* ⊗ W2_b)`` for two independent
    families of block-form subspaces, usually not symmetric. Blocks missing from
    either family contribute nothing.
    """
    first = random_kraus_family(rng, m_alg, n_alg)
    second = random_kraus_family(rng, m_alg, n_alg)
    shape = (n_alg.total_dim, m_alg.total_dim)
    size = m_alg.total_dim * n_alg.total_dim
    parts = []
    for b in range(n_alg.num_blocks):
        left = [f for block, f in first if block == b]
        right = [f for block, f in second if block == b]
        if left and right:
            w1 = OperatorSubspace.from_spanning(left, shape)
            w2 = OperatorSubspace.from_spanning(right, shape)
            parts.append(sigma_embed(w1.adjoint(), w2).basis)
    if not parts:
        return make_multirelation(m_alg, n_alg, OperatorSubspace.zero(size))
    return make_multirelation(m_alg, n_alg, np.concatenate(parts))


def entangled_relation() -> QuantumMultiRelation:
    """
    ``span{σ(a ⊗ b) + σ(c ⊗ d)}`` on ``M_2 ⊗ M_2`` with ``{a, c}`` and ``{b, d}``
    independent: one-dimensional with two-dimensional marginals, hence not
    decomposable.
    """
    units = np.eye(4).reshape(4, 2, 2)
    a, c = units[0], units[1]
    b, d = units[0], units[2]
    m2 = BlockAlgebra.full(2)
    return make_multirelation(m2, m2, [sigma(a, b) + sigma(c, d)])


def bimodule_violation() -> Tuple[BlockAlgebra, BlockAlgebra, List[np.ndarray]]:
    """
    ``span{(e_11 + e_12) ⊗ f_11}`` over diagonal ``M = N = ℓ∞(2)``: contained in
    ``B(H) ⊗ N`` and center-stable, but not an ``M'``-bimodule.
    """
    m_alg = n_alg = BlockAlgebra.diagonal(2)
    x = np.array([[1, 1], [0, 0]], dtype=complex)
    f11 = np.array([[1, 0], [0, 0]], dtype=complex)
    return m_alg, n_alg, [np.kron(x, f11)]


def identity_channel(n: int) -> ChannelMap:
    return make_channel(BlockAlgebra.full(n), BlockAlgebra.full(n), [(0, np.eye(n))])


def amplitude_damping(gamma: float) -> ChannelMap:
    e0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]])
    e1 = np.array([[0, np.sqrt(gamma)], [0, 0]])
    m2 = BlockAlgebra.full(2)
    return make_channel(m2, m2, [(0, e0), (0, e1)])


def transpose_map(n: int) -> AlgebraMap:
    mn = BlockAlgebra.full(n)
    return AlgebraMap.from_function(mn, mn, lambda x: x.T)


def counting_channel() -> ChannelMap:
    """
    Classical channel ``p = [[1, 0.5], [0, 0.5]]`` whose multigraph has two parallel
    edges on the loop at the second input.
    """
    return classical_channel(COUNTING_P)


#: Transition matrix ``p[y][x]`` of :func:`counting_channel`
COUNTING_P = ((1.0, 0.5), (0.0, 0.5))


def random_algebra_pair(
    rng: np.random.Generator,
    max_dim: int = MAX_DIM,
    min_blocks: Optional[int] = None,
) -> Tuple[BlockAlgebra, BlockAlgebra]:
    lower = 1 if min_blocks is None else min_blocks
    return (
        random_block_algebra(rng, max_dim, lower),
        random_block_algebra(rng, max_dim, lower),
    )
