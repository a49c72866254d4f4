import doctest

import pytest

import woplab.counting
import woplab.noncross
import woplab.perm


@pytest.mark.parametrize(
    "module", [woplab.perm, woplab.noncross, woplab.counting], ids=lambda m: m.__name__
)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
