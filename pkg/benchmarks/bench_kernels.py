"""Time the law-checking kernels on both backends.

    python benchmarks/bench_kernels.py [--repeat N]

Every kernel is run on lawful algebras, so each call is a full sweep with no
early exit.  The two backends must agree on every result.
"""
import argparse
import time

from rough_crdsa import _kernels, build_c3_power, build_prsa
from rough_crdsa.acceptance import shape_space


def workloads():
    yield "C3^4", build_c3_power(4)
    yield "C3^5", build_c3_power(5, max_size=243)
    yield "R_θ(2,2,1,3,2)", build_prsa(shape_space((2, 2, 1, 3, 2)), max_size=243)
    yield "C3^6", build_c3_power(6)


def calls(A):
    m, j, s, p = A.meet_table, A.join_table, A.star_table, A.plus_table
    z, o = A.zero_index, A.one_index
    return {
        "lattice": ("lattice_violation", (m, j, z, o)),
        "pseudocomplement": ("pseudocomplement_violation", (m, s, z)),
        "dual_pseudocomplement": ("dual_pseudocomplement_violation", (m, j, p, o)),
        "stone": ("stone_violation", (m, j, s, p, z, o)),
        "dsa_equations": ("dsa_equation_violation", (m, j, s, p, z, o)),
        "regularity": ("regularity_violation", (m, j, s, p)),
    }


def best_of(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = _kernels.backends()
    if "cython" not in backends:
        print("compiled backend not built; timing the numpy fallback only")
    names = sorted(backends)
    print(f"{'algebra':<16}{'n':>5}  {'kernel':<22}" + "".join(f"{b:>12}" for b in names)
          + ("     speedup" if len(names) == 2 else ""))
    for label, A in workloads():
        for kernel, (fname, kargs) in calls(A).items():
            times, results = [], []
            for b in names:
                t, r = best_of(getattr(backends[b], fname), kargs, args.repeat)
                times.append(t)
                results.append(r)
            assert all(r == results[0] for r in results), (label, kernel, results)
            row = f"{label:<16}{len(A):>5}  {kernel:<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(names) == 2:
                # names are sorted, so this is python time over cython time
                row += f"{times[1] / times[0]:>11.1f}x"
            print(row)


if __name__ == "__main__":
    main()
