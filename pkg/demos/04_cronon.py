# coding: utf-8

# # A charge with an elementary time step
#
# With coefficients k_i = (-1)^i m T^(2i)/(2i+1)! the equation of motion of a
# charge in a field collapses into a two-point finite-difference relation.
# For small T it should reproduce the Lorentz force.

# In[1]:

import numpy as np

from zitterlab import cronon

for i in range(5):
    print(i, cronon.cronon_coefficient(1.0, 0.5, i))


# A constant electric field along x accelerates a charge from rest into
# hyperbolic motion, v = (cosh tau, sinh tau, 0, 0) for e E / m = 1.

# In[2]:

def run(T, tau_end=1.0):
    params = cronon.CrononParams(1.0, 1.0, cronon.field_tensor([1.0, 0.0, 0.0]), T)
    steps = int(round(tau_end / T))
    v0 = np.array([1.0, 0.0, 0.0, 0.0])
    vel = cronon.simulate_cronon(params, (cronon.euler_seed(params, v0), v0), steps)
    return cronon.cronon_taus(params, steps), vel


for T in (0.02, 0.01, 0.005):
    taus, vel = run(T)
    err = np.max(np.abs(vel[1:, 1] - np.sinh(taus[1:])))
    print(f"T={T:<6} error in v^1 at tau<=1: {err:.3e}")


# The error falls by four each time T halves.  The mass shell v.v = 1 is
# held to the accuracy of the starting pair: second order for an Euler
# step backwards, fourth order for a two-term Taylor step.

# In[3]:

for seed in (cronon.euler_seed, cronon.taylor_seed):
    params = cronon.CrononParams(1.0, 1.0, cronon.field_tensor([1.0, 0.0, 0.0]), 0.01)
    v0 = np.array([1.0, 0.0, 0.0, 0.0])
    vel = cronon.simulate_cronon(params, (seed(params, v0), v0), 100)
    vv = vel[:, 0] ** 2 - np.sum(vel[:, 1:] ** 2, axis=1)
    print(f"{seed.__name__:12s} max |v.v - 1| = {np.max(np.abs(vv - 1)):.2e}")
