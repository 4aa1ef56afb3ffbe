"""Compare the two term-map kernels on the workloads that dominate the
verification catalog.

Run without arguments to benchmark both backends (the script re-invokes
itself under GROTHPOLY_KERNEL=py and =c); pass --single to benchmark
whichever backend the current environment selects.
"""

from __future__ import annotations

import os
import subprocess
import sys
import time


def _run_workloads() -> list[tuple[str, float]]:
    from grothpoly._backend import kernel_name
    from grothpoly.classical import family_table, top_class
    from grothpoly.divdiff import apply_word
    from grothpoly.perms import first_reduced_word, longest
    from grothpoly.poly import MultiPoly, xvar, yvar

    results = []

    def bench(label: str, fn, repeat: int = 3) -> None:
        best = min(_timed(fn) for _ in range(repeat))
        results.append((label, best))

    def _timed(fn) -> float:
        t0 = time.perf_counter()
        fn()
        return time.perf_counter() - t0

    n = 5
    f = top_class(n)

    bench("top_class(5) * top_class(5)", lambda: f * f)

    g4 = top_class(4) * top_class(4)
    word = first_reduced_word(longest(4))

    bench("pi+ sweep over w0, n=4", lambda: apply_word("pi+", word, g4, "x"))

    def tables() -> None:
        from grothpoly import classical

        classical._TABLE_CACHE.clear()
        family_table(4, "G")
        family_table(4, "H")

    bench("family tables G,H at n=4", tables, repeat=2)

    p = sum((xvar(i % 5 + 1) + yvar(i % 3 + 1) for i in range(10)), MultiPoly.constant(1))
    q = p ** 3

    bench("dense product deg 9", lambda: q * q)

    print(f"kernel = {kernel_name()}")
    for label, secs in results:
        print(f"  {label:32s} {secs * 1000:8.1f} ms")
    return results


def main() -> int:
    if "--single" in sys.argv:
        _run_workloads()
        return 0
    for backend in ("py", "c"):
        env = dict(os.environ, GROTHPOLY_KERNEL=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--single"], env=env, check=False
        )
        if proc.returncode:
            return proc.returncode
    return 0


if __name__ == "__main__":
    sys.exit(main())
