"""Shared pytest fixtures; lives at the root so the flat modules import."""

import os

import pytest

from presentations import build_genus2, build_gervais_lift, build_wajnryb_lift

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "tests", "fixtures")


@pytest.fixture(scope="session")
def genus2():
    return build_genus2()


@pytest.fixture(scope="session")
def wajnryb31():
    return build_wajnryb_lift(3, 1)


@pytest.fixture(scope="session")
def wajnryb30():
    return build_wajnryb_lift(3, 0)


@pytest.fixture(scope="session")
def gervais31():
    return build_gervais_lift(3, 1)


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
