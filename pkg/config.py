# encoding=utf8
# numerical defaults of the force sensing service
# these values can be overwritten by local_config values or environment variables

LOGGING_LEVEL = 'DEBUG'

# adaptive integration of the master equation
FORCESRV_EVOLVE_METHOD = 'DOP853'
FORCESRV_EVOLVE_REL_TOL = 1e-8
FORCESRV_EVOLVE_ABS_TOL = 1e-10

# Fock-tail diagnostic: population of the top levels above which a run is truncation-unsafe
FORCESRV_TAIL_THRESHOLD = 1e-6
FORCESRV_TAIL_LEVELS = 3

# default Fock truncations, steady state runs (figures 1-4) and adiabatic sweeps
FORCESRV_FOCK_DIM_STEADY = 40
FORCESRV_FOCK_DIM_SWEEP = 60
# dissipative sweeps carry the full density matrix
FORCESRV_FOCK_DIM_DISSIPATIVE = 16

# steady state detection, residual ||drho/dt||_F measured in units of gamma
FORCESRV_STEADY_EPSILON = 1e-6
# give up after this many 1/gamma
FORCESRV_STEADY_MAX_DECAY_TIMES = 200
# full-model quasi-steady state is read off after this many 1/gamma
FORCESRV_SETTLE_DECAY_TIMES = 10
# records per 1/gamma while settling or detecting the steady state
FORCESRV_RECORDS_PER_DECAY_TIME = 4
# longest unhermitized integration piece is 1/(gamma this)
FORCESRV_HERMITIZE_PER_DECAY_TIME = 20

# vectorized Liouvillian oracle
FORCESRV_STEADY_MAX_DIM = 64
# singular values below this fraction of the largest one count as null
FORCESRV_NULL_SPACE_TOL = 1e-9
FORCESRV_NULL_SPACE_RESIDUAL = 1e-10

# sensitivity root finding: bracket in units of dF_x and relative tolerance
FORCESRV_FORCE_BRACKET = [1e-3, 1e3]
FORCESRV_ROOT_REL_TOL = 1e-3

# fidelity based quantum Fisher information
FORCESRV_FIDELITY_STEP_FTILDE = 1e-2
FORCESRV_FIDELITY_MAX = 1.0 + 1e-8

# squeezing enhanced adiabatic protocol
# minimal Delta E * t_f / hbar for the two-state reduction to be trusted
FORCESRV_ADIABATIC_MIN_PHASE = 50.0
# warn when Omega(t_f) exceeds this fraction of omega
FORCESRV_FERRO_ENDPOINT_RATIO = 0.1
# integrator steps per period of the transverse field
FORCESRV_STEPS_PER_PERIOD = 20
FORCESRV_PROTOCOL_REL_TOL = 1e-2
FORCESRV_PROTOCOL_RECORD_EVERY = 1e-3

# zero-point spread used when an experiment does not give one, nm
FORCESRV_DEFAULT_Z_NM = 14.0

# worker pool for sweeps
FORCESRV_MAX_JOBS = 8

# csv floats
FORCESRV_CSV_SIGNIFICANT_DIGITS = 12
