import numpy as np

from abelfourier.utils import chunks, digest


def test_chunks():
    assert chunks(7, 3) == [range(0, 3), range(3, 6), range(6, 7)]
    assert chunks(2, 5) == [range(0, 2)]
    assert sum(len(c) for c in chunks(20, 5)) == 20


def test_digest():
    a = np.arange(4.0)
    assert digest(a) == digest(np.arange(4.0))
    assert digest(a) != digest(a + 1)
    assert digest((4, 2), 3) != digest((4, 2), 4)
    assert len(digest(a)) == 16
