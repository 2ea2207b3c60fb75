"""Smoke test for the calogero_moser extension.

Build with `maturin develop -m crates/py/Cargo.toml`, or copy
target/release/libcalogero_moser.so to calogero_moser.so on PYTHONPATH.
"""

import json
import math

import calogero_moser as cm


def test_singular_vectors():
    f = cm.singular_vectors(2, 1)
    assert len(f) == 2 and all("x1" in p for p in f)


def test_support():
    assert cm.support_test(2, ["1/3", "1/3", "5", "5"])
    assert not cm.support_test(2, ["0", "1", "2", "3"])


def test_quotient_dims():
    assert sum(cm.quotient_dims(3, 2)) == 4
    assert sum(cm.quotient_dims(2, 3)) == 3


def test_character():
    ch = json.loads(cm.character("S3", "triv", 4))
    # 1/det(1 - g t) on the defining 3-dimensional space
    assert ch["classes"]["e"] == ["1", "3", "6", "10", "15"]
    assert ch["classes"]["(12)"] == ["1", "1", "2", "2", "3"]
    assert ch["classes"]["(123)"] == ["1", "0", "0", "1", "0"]


def test_two_body_attracts():
    # eigenvalues of X + 2tY from x = (0, 1), p = 0 are (1 ± sqrt(1 − 16t²))/2
    xs = cm.flow_positions([0.0, 1.0], [0.0, 0.0], 0.2, 0.05)
    t = 0.2
    gap = xs[-1][1] - xs[-1][0]
    assert abs(gap - math.sqrt(1 - 16 * t * t)) < 1e-9
    assert abs(cm.hamiltonian([0.0, 1.0], [0.0, 0.0]) + 2.0) < 1e-12


def test_necklace():
    rep = json.loads(cm.necklace_check(3, 3, 3, 5))
    assert rep["failures"] == 0 and rep["instances"] > 0


def test_verify_quick():
    rep = json.loads(cm.verify("quick", 3))
    assert rep["passed"], [c["check"] for c in rep["checks"] if not c["passed"]]


def test_errors():
    try:
        cm.verify("nope")
    except ValueError:
        return
    raise AssertionError("bad profile accepted")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print("ok", name)
