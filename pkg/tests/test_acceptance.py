"""The acceptance gate: one test per numbered check, one pass/fail line
printed per check.

Check 7b (the signed mixed-equation set at q=3) asserts its stated
target set verbatim and currently fails: the enumeration — validated
against the brute-force search, the quaternion-algebra oracle, and the
endomorphism-transport derivation (see test_parikh.py) — contains
+-(1,1,1,1) and +-(3,-3,-3,3) where the stated set has +-(3,-3,3,3).
"""

import pytest

from quatlat import acceptance


@pytest.mark.parametrize(
    "name,func", acceptance.ALL_CHECKS, ids=[name for name, _ in acceptance.ALL_CHECKS]
)
def test_acceptance_criterion(name, func):
    result = acceptance.run_check(name, func)
    print(f"{'PASS' if result.ok else 'FAIL'} {result.name} ({result.seconds:.2f}s): {result.detail}")
    assert result.ok, f"{result.name}: {result.detail}"
