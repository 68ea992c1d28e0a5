"""Integer matrices of ideals acting on classes of projective modules."""

import numpy as np

from qim import Quiver, generator_J, ideal_monoid
from qim.presentation import decategorify, matrix_monoid

q = Quiver(4, ((1, 2), (3, 2), (4, 2)))
for s in q.vertices:
    print(f"J{s}:\n{np.array(decategorify(generator_J(q, s)))}")

ideals = ideal_monoid(q)
mats = matrix_monoid(q)
distinct = {decategorify(b) for b in ideals.elements}
print(f"{len(ideals)} ideals, {len(mats)} matrices, {len(distinct)} distinct images")
