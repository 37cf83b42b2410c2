import os
import random

import hypothesis
import pytest

from tcgtools.core.regex import RegularExpression
from tcgtools.witnesses import fixtures


hypothesis.settings.register_profile('default', deadline=None, max_examples=50)
hypothesis.settings.register_profile('fast', deadline=None, max_examples=5)
hypothesis.settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def l1():
    """a* b (a|b)*, the language of words with at least one b."""
    return RegularExpression.from_text('a*b(a|b)*', ('a', 'b')).to_dfa()


@pytest.fixture
def g1():
    return fixtures.example_g1()


@pytest.fixture
def g2():
    return fixtures.example_g2()


@pytest.fixture
def abc_grammar():
    return fixtures.abc_monotone_grammar()
