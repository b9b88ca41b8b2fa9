from __future__ import annotations

import pytest

from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.field.gf import FieldSpec
from mdsfec.field.search import make_field


@pytest.fixture
def gf13() -> FieldSpec:
    return make_field(13)


@pytest.fixture
def gf8() -> FieldSpec:
    return make_field(2, 3)


@pytest.fixture
def f12(gf13: FieldSpec) -> FourierCtx:
    return FourierCtx(gf13, 12, 2)


@pytest.fixture
def code_k(f12: FourierCtx) -> CodeSpec:
    """The (12,6,7) code of the first six rows of F_12 over GF(13)."""
    return CodeSpec(f12, 6)


@pytest.fixture
def code_l(f12: FourierCtx) -> CodeSpec:
    """The (12,6,7) code of rows e_1, e_6, e_11, e_4, e_9, e_2."""
    return CodeSpec(f12, 6, 1, 5)
