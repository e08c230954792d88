# coding: utf-8

# # Integrating the equation of motion
#
# The closed-form Dirac orbit makes a clean target for a numerical
# integrator.  Here the fourth-order equation m a + a''/4m = 0 is stepped with
# RK4 and compared with the exact answer.

# In[1]:

import numpy as np

from zitterlab import dirac, integrator, lagrangian as lg

params = dirac.canonical_params(1.0)
spec = lg.dirac_spec(1.0)
init = dirac.state_at(params, 0.0)


# Ten periods at a few step sizes.  The error should fall by about 16 each
# time the step is halved.

# In[2]:

errors = []
for dtau in (np.pi / 500, np.pi / 1000, np.pi / 2000):
    traj = integrator.integrate(spec, init, 10 * np.pi, dtau)
    exact = np.array([dirac.state_at(params, t, n_derivs=2).v for t in traj.taus])
    errors.append(np.max(np.abs(traj.derivs[:, 1] - exact)))
    print(f"dtau=pi/{round(np.pi / dtau)}  max velocity error {errors[-1]:.3e}")
print("ratios:", [errors[i] / errors[i + 1] for i in range(len(errors) - 1)])


# Momentum is linear in the state, so RK4 keeps it to roundoff.  Energy and
# angular momentum are quadratic and drift at the scheme's order.

# In[3]:

report = integrator.conservation_report(traj)
print(report.as_dict())


# The Compton frequency can be read back from the zero crossings of the
# oscillating part of the velocity.

# In[4]:

signal = traj.derivs[:, 1, 1] - params.p[1]
print("omega =", integrator.zero_crossing_frequency(traj.taus, signal))


# Flip the sign of k1 and the characteristic root moves to the positive
# axis.  The acceleration now grows like exp(2 tau).

# In[5]:

wrong = lg.LagrangianSpec(1.0, (0.25,))
seed = lg.KinematicState(0.0, [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1e-3, 0, 0], [0, 2e-3, 0, 0]])
run = integrator.integrate(wrong, seed, 6.0, 1e-3)
norms = np.linalg.norm(run.derivs[:, 2], axis=1)
print("growth rate:", integrator.growth_rate(run.taus[2000:], norms[2000:]))
