import pytest

from friedzeta import Character, SuspensionModel, ToralAutomorphism, TrigPolynomial, TruncationPolicy

CAT = ((2, 1), (1, 1))


@pytest.fixture
def cat():
    return ToralAutomorphism(CAT)


@pytest.fixture
def cat_model(cat):
    return SuspensionModel(cat, TrigPolynomial.const(1.0))


@pytest.fixture
def cat_family(cat):
    """Constant roof with the standard 0.05-amplitude time change."""
    return SuspensionModel(cat, TrigPolynomial.const(1.0), TrigPolynomial.cosine((1, 0), 0.05))


@pytest.fixture
def perturbed_model(cat):
    return SuspensionModel(cat, TrigPolynomial.cosine((1, 0), 0.05, constant=1.0))


@pytest.fixture
def rep_minus(cat):
    return Character.from_angle_fraction(0.5, cat.coker_orders, (0, 0))


@pytest.fixture
def policy14(cat_model):
    return TruncationPolicy(max_period=14, j_max=40, entropy=cat_model.default_entropy())
