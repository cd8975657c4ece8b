import doctest

import pytest

import skyline.permutations
import skyline.shapes


@pytest.mark.parametrize("module", [skyline.shapes, skyline.permutations])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
