"""Exception hierarchy shared by all tensorperm modules."""

import numpy as np


class TensorPermError(Exception):
    """Base class for every error raised by tensorperm."""


class DimensionError(TensorPermError, ValueError):
    """Shapes, lengths or index ranges do not fit together."""


class SizeOverflowError(DimensionError):
    """A product of dimensions exceeds the index range or the materialization cap."""


class SingularSystemError(TensorPermError, np.linalg.LinAlgError):
    """Gaussian elimination found no usable pivot.

    ``step`` is the 0-based elimination step at which it stopped.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class ParseError(TensorPermError, ValueError):
    """A matrix or TPM text file is malformed."""


class VerificationError(TensorPermError, AssertionError):
    """Two routes that must agree produced different results."""
