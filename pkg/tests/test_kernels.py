import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicm import _pykernels
from bicm import kernels

from . import oracles

try:
    from bicm import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


def closure(facets):
    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return sorted(faces)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_known_complexes(impl):
    assert impl.reduced_homology([], 2) == [0]
    assert impl.reduced_homology([0], 2) == [1]
    assert impl.reduced_homology(closure([0b011, 0b101, 0b110]), 3) == [0, 0, 1]
    assert impl.reduced_homology(closure([0b01, 0b10, 0b100]), 5) == [0, 2]
    assert impl.rank_mod_p([[1, 2], [2, 4]], 7) == 1
    assert impl.rank_mod_p([[1, 2], [2, 4]], 2) == 1
    assert impl.rank_mod_p([[1, 1], [1, -1]], 2) == 1
    assert impl.rank_mod_p([[1, 1], [1, -1]], 3) == 2


@settings(max_examples=150)
@given(st.lists(st.integers(1, (1 << 6) - 1), min_size=1, max_size=6), st.sampled_from([2, 3, 5, 7]))
def test_backends_agree_with_oracle(facets, p):
    faces = closure(facets)
    expected = oracles.homology([[i for i in range(6) if f >> i & 1] for f in faces], p)
    expected = [expected[d] for d in sorted(expected)]
    for impl in BACKENDS:
        assert impl.reduced_homology(faces, p) == expected


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=6),
       st.sampled_from([2, 3, 5, 32749]))
def test_rank_agrees(matrix, p):
    expected = oracles.rank_mod(matrix, p)
    for impl in BACKENDS:
        assert impl.rank_mod_p(matrix, p) == expected


def test_selected_backend_is_exposed():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.reduced_homology is not None
