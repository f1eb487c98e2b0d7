import doctest

import pytest

import ecsd
import ecsd.covering
import ecsd.digits


@pytest.mark.parametrize("module", [ecsd, ecsd.covering, ecsd.digits], ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
