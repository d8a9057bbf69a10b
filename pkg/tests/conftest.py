import os

import pytest

from knopf.exactalg import FieldSpec

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_dir() -> str:
    return DATA


@pytest.fixture
def QQ() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture(params=[2, 3, 5])
def Fp(request) -> FieldSpec:
    return FieldSpec.prime(request.param)
