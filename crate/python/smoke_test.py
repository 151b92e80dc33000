#!/usr/bin/env python3
"""Build the hardy_sums_py extension and exercise it end to end.

Usage: python3 python/smoke_test.py [--profile debug|release]
"""

import argparse
import pathlib
import shutil
import subprocess
import sys
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_extension(profile: str) -> pathlib.Path:
    cmd = ["cargo", "build", "-p", "hardy-sums-py"]
    if profile == "release":
        cmd.append("--release")
    subprocess.run(cmd, cwd=ROOT, check=True)
    built = ROOT / "target" / profile / "libhardy_sums_py.so"
    if not built.exists():  # e.g. macOS
        built = ROOT / "target" / profile / "libhardy_sums_py.dylib"
    stage = ROOT / "build" / "python"
    stage.mkdir(parents=True, exist_ok=True)
    target = stage / "hardy_sums_py.so"
    shutil.copy2(built, target)
    return stage


def frac(pair) -> Fraction:
    num, den = pair
    return Fraction(num, den)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--profile", choices=["debug", "release"], default="debug")
    args = parser.parse_args()

    sys.path.insert(0, str(build_extension(args.profile)))
    import hardy_sums_py as hs

    checks = 0

    def expect(label, got, want):
        nonlocal checks
        checks += 1
        assert got == want, f"{label}: expected {want!r}, got {got!r}"
        print(f"ok  {label} = {got!r}")

    # exact arithmetic primitives
    expect("gcd(12, 18)", hs.gcd(12, 18), 6)
    expect("sign(-3)", hs.sign(-3), -1)
    expect("sawtooth(1/3)", frac(hs.sawtooth(1, 3)), Fraction(-1, 6))

    # dedekind sums, both routes, including big inputs
    expect("s(1, 3)", frac(hs.dedekind(1, 3)), Fraction(1, 18))
    expect("s(2, 3)", frac(hs.dedekind(2, 3)), Fraction(-1, 18))
    big_c = 10**40 + 1
    expect(
        "fast dedekind handles huge inputs",
        frac(hs.dedekind_fast(2, big_c)) == frac(hs.dedekind_fast(2 + big_c, big_c)),
        True,
    )

    # hardy sums
    expect("S4(1, 3)", hs.s4(1, 3), 2)
    expect("S4(3, 5)", hs.s4(3, 5), 0)
    expect("S4 via dedekind agrees", hs.s4_via_dedekind(3, 5), 0)
    expect("S(1, 2)", hs.hardy_s(1, 2), 1)
    expect("frak_s4(1, 2)", hs.frak_s4(1, 2), 1)

    # matrices and words
    t2 = hs.UniModMatrix.t(2)
    s = hs.UniModMatrix.s()
    m = t2 * s * t2 * s
    expect("T2 S T2 S in gamma_theta", m.in_gamma_theta(), True)
    expect("frak_s of the word", m.frak_s(), -1)
    expect("dedekind symbol of the word", m.dedekind_symbol(), 1)
    expect("chi_theta of the word", m.chi_theta(), 4)
    sign_, exps = m.decompose()
    rebuilt = hs.compose_word(sign_, exps)
    expect("word round trip", rebuilt == m, True)
    expect("moebius action", m.moebius(1, 0), (3, 2))
    expect("cocycle(T2S, T2S)", hs.rademacher_cocycle(t2 * s, t2 * s), -1)

    # lattice counts and the reconciliation report
    expect("triangle count (2, 3)", hs.count_triangle(2, 3), 5)
    expect("even triangle count (4, 1)", hs.count_triangle_even(4, 1), 2)
    expect("tetrahedron count (1, 3, 2)", hs.count_tetra(1, 3, 2), 4)
    brute, printed, corrected, delta = hs.count_tetra_even_report(2, 1)
    expect("report brute", brute, 2)
    expect("report printed", printed, "31/16")
    expect("report corrected", corrected, "2")
    expect("report delta", delta, "-1/16")

    # geodesic crossings
    expect("crossing number at 1/2", hs.intersection_number(1, 2), 1)
    expect("crossing number at infinity", hs.intersection_number(1, 0), 0)
    crossings = hs.enumerate_crossings(3, 4)
    expect("crossings at 3/4", len(crossings), 4)
    expect("signed sum at 3/4", sum(phi for _, _, phi in crossings), 3)

    # domain errors surface as ValueError
    try:
        hs.dedekind(2, 4)
    except ValueError as e:
        expect("domain error names the condition", "gcd(d, c) = 1" in str(e), True)
    else:
        raise AssertionError("dedekind(2, 4) should have raised")

    # a quick verification sweep through the bindings
    expect("verify('cocycle', 6)", hs.verify("cocycle", 6), True)

    print(f"\nsmoke test passed: {checks} checks")
    return 0


if __name__ == "__main__":
    sys.exit(main())
