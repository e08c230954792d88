# coding: utf-8

# # The free Dirac orbit
#
# A first-order Lagrangian with k1 = -1/4m has a closed-form solution: the
# velocity is p/m plus a rotating vector at angular frequency 2m.  This
# notebook builds the simplest such state and looks at it from two frames.

# In[1]:

import numpy as np

from zitterlab import dirac, kinematics, lagrangian as lg

np.set_printoptions(precision=4, suppress=True)


# In the centre-of-mass frame the charge circles at the speed of light.
# E and H are unit vectors along x and y.

# In[2]:

cmf = dirac.canonical_params(1.0)
for tau in np.linspace(0, np.pi, 5):
    st = dirac.state_at(cmf, tau)
    print(f"tau={tau:5.3f}  x={st.x}  v={st.v}")


# v^2 is zero at every instant, so the motion is lightlike and the
# orbit radius comes out as 1/(2m).

# In[3]:

info = dirac.constant_v2_info(cmf)
print(info)
print(kinematics.classify_v2(dirac.state_at(cmf, 0.3).v))


# The conserved quantities are evaluated from the derivative chain alone.

# In[4]:

st = dirac.state_at(cmf, 0.7)
spec = cmf.spec
print("p =", lg.canonical_momentum(spec, st))
print("H =", lg.hamiltonian(spec, st))
print("s =", lg.spin_vector(spec, st))


# Boosting along x puts part of the circulation along the momentum, so the
# times-ratio dt/dtau oscillates between 0.5 and 2.0 around gamma = 1.25.

# In[5]:

moved = cmf.boosted([0.6, 0.0, 0.0])
taus = np.linspace(0, np.pi, 9)
print([round(dirac.times_ratio(moved, t), 4) for t in taus])
print("mean:", dirac.times_ratio_mean(moved))


# A boost along z is perpendicular to the orbit plane.  The time component
# of the oscillation stays zero and the times-ratio is constant.

# In[6]:

side = cmf.boosted([0.0, 0.0, 0.6])
print([round(dirac.times_ratio(side, t), 12) for t in taus])
print(dirac.polarization_info(side))


# The Pauli-Lubanski vector is the frame-independent way to talk about the
# spin.  Its square stays at -m^2 s*^2 = -1/4 in every frame.

# In[7]:

for params in (cmf, moved, side):
    w, helicity = dirac.pauli_lubanski(params)
    print(w, float(w[0] ** 2 - w[1:] @ w[1:]), helicity)
