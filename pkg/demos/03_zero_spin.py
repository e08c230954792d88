# coding: utf-8

# # Oscillation without spin
#
# If the centre-of-mass oscillation is a straight line, v and a are always
# parallel there and k1 (v x a) vanishes.  A boost changes that picture.

# In[1]:

import numpy as np

from zitterlab import zerospin as zs
from zitterlab.minkowski import four

params = zs.LinearOscParams(m=1.0, k1=-0.25, p=four(1.0), amp_f=four(0.0, 1.0))
print("omega =", params.omega)


# In the centre-of-mass frame the spin is identically zero.

# In[2]:

print([zs.cmf_spin(params, t) for t in (0.0, 0.4, 1.234)])


# Seen from a frame moving along y the spin vibrates along z, always
# perpendicular to the momentum.

# In[3]:

w = [0.0, 0.6, 0.0]
for tau in np.linspace(0, params.period, 5):
    print(f"tau={tau:5.3f}  s={zs.boosted_spin(params, w, tau)}")


# Helicity and the Pauli-Lubanski vector remain zero in every frame.

# In[4]:

print(zs.helicity_zero_check(params, w))
print(zs.helicity_zero_check(params, [0.3, -0.2, 0.5]))


# The period average of s vanishes while that of s^2 does not.  Two closed
# forms for the average of s^2 are in circulation and they disagree by a
# factor omega.  Both are reported next to each other.

# In[5]:

print("mean s:", zs.mean_boosted_spin(params, w))
msq = zs.mean_spin_squared(params, w)
print(msq, "flagged:", msq.flagged)
