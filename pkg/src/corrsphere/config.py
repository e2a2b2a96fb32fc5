"""Numeric defaults for corrsphere.

Every value here can be overridden per call or by a command-line flag; nothing
is read from the environment.
"""

# Standardization
EPS_DIAG = 1e-12
SIGN_CUTOFF = 1e-12

# Symmetric eigensolver
JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100

# Barycenter
DEGENERACY_RTOL = 1e-9
OBJECTIVE_CHECK_TOL = 1e-10

# Clustering
TIE_TOLERANCE = 1e-12
DEFAULT_MAX_ITERS = 100
DEFAULT_TOL = 1e-8
DEFAULT_SEED = 0

# Serialization: 17 significant digits round-trip every IEEE double.
FLOAT_FORMAT = "%.17g"
