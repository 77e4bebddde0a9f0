"""Identity records grouped by family."""

from qrk.catalog.records import (
    classical,
    congruences,
    cubic,
    euler_transform,
    logarithms,
    partitions,
    quantum_powers,
    symmetric,
)

__all__ = [
    "classical",
    "symmetric",
    "logarithms",
    "cubic",
    "quantum_powers",
    "euler_transform",
    "partitions",
    "congruences",
]
