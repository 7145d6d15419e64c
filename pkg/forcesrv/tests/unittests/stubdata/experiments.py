# experiment files as the command line reads them

fig1_config = """
# full model, fig1 parameters
[model]
type = rabi

[params]
omega = 0.30 kHz
Omega = 320 kHz
g = 4.0 kHz
gamma = 0.08 kHz
z = 14 nm
F = 5 yN

[hilbert]
fock_dim = 40
"""

fig4_text_config = """
[model]
type = effective   ; the sensitivities only use closed forms

[params]
omega = 0.28 kHz
Omega = 320 kHz
g = 4.5 kHz
gamma = 0.08 kHz
z = 14 nm
"""

coupling_sweep_config = """
[model]
type = effective
[params]
omega = 0.30 kHz
Omega = 320 kHz
g = 1 kHz
gamma = 0.08 kHz
F = 5 yN
[sweep]
variable = g
start = 1 kHz
stop = 4 kHz
points = 4
"""

small_effective_config = """
[model]
type = effective
[params]
omega = 0.30 kHz
Omega = 320 kHz
g = 2 kHz
gamma = 0.08 kHz
F = 5 yN
[hilbert]
fock_dim = 20
[evolve]
t_final = 4 ms
record_every = 1 ms
"""

fig5_config = """
[model]
type = squeezed
[params]
omega = 4.4 kHz
g = 1.6 kHz
F = 46 xN
z = 14 nm
[protocol]
xi = 1.95 kHz
Omega0 = 200 kHz
kappa = 9.5 Hz
t_final = 284 ms
[hilbert]
fock_dim = 60
"""

unstable_config = """
[model]
type = effective
[params]
omega = 0.30 kHz
Omega = 320 kHz
g = 6 kHz
gamma = 0.08 kHz
"""

bad_unit_config = """
[model]
type = rabi
[params]
omega = 0.30 kHz
Omega = 320 kHz
g = 4.0 furlongs
"""
