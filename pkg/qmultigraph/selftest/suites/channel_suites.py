import numpy as np

from qmultigraph.channel import adjoint_map, channel_from_choi, check_cp, choi
from qmultigraph.selftest.selftest_suite_decorator import selftest_suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.tensor import frobenius_norm
from qmultigraph.testing import random_unitary_channel, transpose_map
from qmultigraph.tolerances import current_tolerances

#: Number of random unitary channels composed with the transpose
NUM_TRANSPOSED_UNITARIES = 5

#: Expected smallest Choi eigenvalue of the transpose on M_2, and its tolerance
TRANSPOSE_MIN_EIGENVALUE = -1.0
TRANSPOSE_EIGENVALUE_TOLERANCE = 1e-9

#: Largest accepted defect of the Hilbert-Schmidt adjoint identity
ADJOINT_IDENTITY_TOLERANCE = 1e-10


@selftest_suite(group="channel", order=1)
def cp_characterization(context: SuiteContext):
    """
    Kraus channels are CP with a Choi spectrum bounded below by the ``psd``
    tolerance; the transpose, alone or after a unitary, is not CP.
    """
    tolerance = current_tolerances().psd
    for n, phi in enumerate(context.fixture("random_channels")):
        report = check_cp(phi)
        bound = -tolerance * max(frobenius_norm(choi(phi).matrix), 1.0)
        context.check(
            report.cp and report.min_eigenvalue >= bound,
            "kraus channel is cp",
            channel=n,
            min_eigenvalue=report.min_eigenvalue,
        )
    report = check_cp(transpose_map(2))
    context.check(
        not report.cp
        and abs(report.min_eigenvalue - TRANSPOSE_MIN_EIGENVALUE)
        <= TRANSPOSE_EIGENVALUE_TOLERANCE,
        "transpose is not cp",
        min_eigenvalue=report.min_eigenvalue,
    )
    for n in range(NUM_TRANSPOSED_UNITARIES):
        phi = random_unitary_channel(context.rng(10, n), 2)
        transposed = transpose_map(2).compose(phi.unit_images)
        context.check(
            not check_cp(transposed).cp, "transposed unitary is not cp", index=n
        )


@selftest_suite(group="channel", order=2)
def choi_kraus_roundtrip(context: SuiteContext):
    """
    Kraus operators recovered from the Choi operator reproduce the unit images, and
    the adjoint satisfies the Hilbert-Schmidt identity on every pair of units.
    """
    reconstruction = current_tolerances().reconstruction
    for n, phi in enumerate(context.fixture("random_channels")):
        rebuilt = channel_from_choi(choi(phi))
        distance = rebuilt.unit_images.distance(phi.unit_images)
        context.check(
            distance <= reconstruction, "choi roundtrip", channel=n, distance=distance
        )
        adjoint = adjoint_map(phi)
        worst = 0.0
        for x_key in phi.in_alg.unit_keys():
            x = phi.in_alg.matrix_unit(*x_key)
            image = phi(x)
            for y_key in phi.out_alg.unit_keys():
                y = phi.out_alg.matrix_unit(*y_key)
                lhs = np.vdot(adjoint(y), x)
                rhs = np.vdot(y, image)
                worst = max(worst, float(abs(lhs - rhs)))
        context.check(
            worst <= ADJOINT_IDENTITY_TOLERANCE,
            "adjoint identity",
            channel=n,
            defect=worst,
        )
