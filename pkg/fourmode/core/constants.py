"""Numerical defaults shared by the core modules and the settings layer."""

DEFAULT_TRANSFER_TOLERANCE = 1e-9
DEFAULT_CONE_TOLERANCE = 1e-9
DEFAULT_MAX_DENOMINATOR = 99

# propagate_factored rejects states whose norm deviates more than this
NORM_TOLERANCE = 1e-6
