# This code is part of unipotent-lifts.
#
# (C) Copyright the unipotent-lifts developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at https://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

from unipotent_lifts.exponential import NilpotentMatrix
from unipotent_lifts.morphisms import validate
from unipotent_lifts.morphisms.library import commute, commute_pairwise
from unipotent_lifts.morphisms.library.commutators import SupportsCommutation
from unipotent_lifts.unipotent import make_group


def test_commute_matrices():
    a = NilpotentMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 3)
    b = NilpotentMatrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]], 3)
    c = NilpotentMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]], 3)
    assert isinstance(a, SupportsCommutation)
    assert not commute(a, b)
    assert commute(a, c)
    assert commute(b, c)


def test_commute_morphisms():
    grp = make_group([1, 1, 1], 5)
    phi = validate({"Y_1_2": [0, 1], "Y_2_3": [0, 1], "Y_1_3": [0, 0, 3]}, grp, 1)
    assert isinstance(phi, SupportsCommutation)
    assert commute(phi, phi)


def test_commute_pairwise():
    a = NilpotentMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], 3)
    b = NilpotentMatrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]], 3)
    c = NilpotentMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]], 3)
    assert commute_pairwise([a, c, b]) == (0, 2)
    assert commute_pairwise([c, a, 2 * a]) is None
    assert commute_pairwise([]) is None
