"""Shared test helpers."""

from __future__ import annotations

import pytest


def binom_oracle(n: int, k: int) -> int:
    """Independent binomial coefficient: multiplicative formula, exact ints,
    zero outside 0 <= k <= n.  Deliberately not math.comb, which the
    package itself uses."""
    if k < 0 or n < 0 or k > n:
        return 0
    value = 1
    for i in range(1, k + 1):
        value = value * (n - i + 1) // i
    return value


@pytest.fixture()
def client():
    from fastapi.testclient import TestClient

    from latticepaths.service.app import app

    with TestClient(app) as test_client:
        yield test_client
