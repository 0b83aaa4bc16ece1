"""Smoke test for the pycoxweight extension.

Builds the extension with cargo, copies it next to a temporary import path
and exercises the main entry points.
"""

import os
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "coxweight-python"],
        cwd=ROOT,
        check=True,
    )
    target = Path(os.environ.get("CARGO_TARGET_DIR", ROOT / "target")) / "release"
    built = target / "libpycoxweight.so"
    if not built.exists():
        built = target / "libpycoxweight.dylib"
    dest = Path(tempfile.mkdtemp()) / "pycoxweight.so"
    shutil.copy(built, dest)
    sys.path.insert(0, str(dest.parent))
    import pycoxweight

    return pycoxweight


def main():
    cw = load()

    w = cw.Weight.parse("2,3,4;10")
    assert w.degrees == [2, 3, 4] and w.total == 10
    assert w.is_weight()
    assert w.milnor_number() == 14
    assert w.monodromy() == "Φ2^2·Φ5·Φ10^2"
    assert w.monodromy(ascii=True) == "F2^2*F5*F10^2"
    assert w.q_milnor() == [1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1]
    assert w.eigen_multiplicities() == w.eigen_multiplicities("q_milnor")
    assert w.name() == "S_{1,0}"

    assert cw.Weight([3, 5], 20).product(cw.Weight([1], 5)) == cw.Weight([3, 4, 5], 20)
    assert cw.Weight([2, 3, 5, 5], 15).central_charge() == Fraction(2)
    assert cw.Weight([3, 4, 5, 6], 15).is_prime()
    facs = cw.Weight([2, 4, 6, 7], 18).factorizations()
    assert sorted(str(f[0]) for f in facs) == ["1;3", "1;9"]
    assert cw.Weight([2, 2], 6).canonicalize() == cw.Weight([1, 1], 3)

    try:
        cw.Weight.parse("7;10")
    except ValueError as e:
        assert "D/2" in str(e)
    else:
        raise AssertionError("expected ValueError")

    star = cw.Poset(4, [(0, 3), (1, 3), (2, 3)])
    diamond = cw.Poset.family("chain", 2).product(cw.Poset.family("chain", 2))
    assert len(diamond) == 4
    assert star.coxeter_polynomial() == diamond.coxeter_polynomial() == [1, 1, 0, 1, 1]
    assert cw.Weight([1, 1], 3).coxeter_polynomial() == star.coxeter_polynomial()
    assert cw.factor_cyclotomic(star.coxeter_polynomial()) == ("Φ2^2·Φ6", [1])

    t4 = cw.Poset.family("tamari", 4)
    report = cw.check(t4, cw.Weight.family("catalan", 4))
    assert report["match"] and report["poset_size"] == 14
    assert cw.Poset.from_json(t4.to_json()).coxeter_polynomial() == t4.coxeter_polynomial()

    rows = cw.check_family("green-cyclic", "cyclic-quiver", 2, 4)
    assert [r["poset_size"] for r in rows] == [4, 14, 50]
    assert all(r["match"] for r in rows)

    print("pycoxweight smoke test passed")


if __name__ == "__main__":
    main()
