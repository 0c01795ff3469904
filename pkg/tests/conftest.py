import os
import sys
from math import gcd

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def coprime_pairs(lo, hi, ordered=True):
    for p in range(lo, hi + 1):
        for q in range(p + 1 if ordered else lo, hi + 1):
            if gcd(p, q) == 1 and p != q:
                yield p, q


@pytest.fixture
def streaming(monkeypatch):
    monkeypatch.setenv("TORSIG_STREAMING", "1")
