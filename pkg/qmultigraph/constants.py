#: Relative singular-value threshold below which a spanning direction is discarded
RANK_CUTOFF = 1e-10

#: Subspace equality tolerance, multiplied by the ambient dimension
SUBSPACE_EQUALITY = 1e-8

#: Positive semidefiniteness tolerance, relative to the Frobenius norm of the operator
PSD = 1e-9

#: Relative Hermiticity tolerance accepted by Hermitian routines
HERMITIAN = 1e-10

#: Relative residual tolerance used by multi-relation axiom checks
AXIOM = 1e-8

#: Threshold for p(y|x1)p(y|x2) above which a classical edge exists
CLASSICAL_EDGE = 1e-12

#: Entry magnitude below which a Kraus operator is considered zero
ZERO_KRAUS = 1e-12

#: Tolerance for reconstructing maps, e.g. from a Choi operator
RECONSTRUCTION = 1e-8

#: Tolerance on stochastic column sums and on trace preservation
STOCHASTIC = 1e-9

#: Default seed for randomized fixtures
DEFAULT_SEED = 0

#: Separator used by the CLI for tolerance overrides, as in ``--tol psd=1e-12``
TOLERANCE_OVERRIDE_SEPARATOR = "="
