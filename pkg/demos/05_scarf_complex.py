# %% [markdown]
# # Scarf complexes of lifted point sets
#
# Lifting (x, y) to (x, y, M - x, M - y) and adding four suspension vectors
# gives a generic antichain in 4D.  Its Scarf complex encodes the empty
# rectangles: pure k-faces are the sets spanned by empty rectangles.

# %%
from emptyrect import lift_to_4d, scarf_complex, verify_face_numbers

SIX = [(1, 1), (2, 4), (3, 3), (4, 2), (5, 6), (6, 5)]
cx = scarf_complex(lift_to_4d(SIX))
print("f-vector:", cx.f_vector)

# %% [markdown]
# The face numbers follow from the span counts, and the Euler relation
# (with the missing suspension facet added back) holds.

# %%
check = verify_face_numbers(SIX)
print("enumerated", check.enumerated.as_tuple(), "predicted", check.predicted.as_tuple())
print("Euler ok:", check.euler_ok)

# %% [markdown]
# In 3D the suspended complex is a triangulated disc.

# %%
import numpy as np
from emptyrect.scarf import random_antichain3, scarf_complex_3d, suspend

cx3 = scarf_complex_3d(suspend(random_antichain3(10, np.random.default_rng(4))))
print(cx3.f_vector, "euler characteristic", cx3.euler_characteristic())
