"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import importlib
import timeit

from cdsenum import _kernels_py
from cdsenum.analysis import _flat, _grid, objective_templates
from cdsenum.generators import gen_gtk, gen_random_degenerate


def cases():
    g14 = gen_random_degenerate(14, 3, 1)
    gtk, _ = gen_gtk(2, 2)
    coef, starts = _flat(objective_templates("general"))
    grid = _grid(0.05, 0.95, 0.05)
    return {
        "minimal_cds_masks n=14": lambda k: k.minimal_cds_masks(g14.adj_masks, g14.n),
        "minimal_cds_masks gtk(2,2)": lambda k: k.minimal_cds_masks(gtk.adj_masks, gtk.n),
        "minimal_hitting_masks ground=12": lambda k: k.minimal_hitting_masks(
            [0b111, 0b111000, 0b1001001001, 0b110000000110, 0b11], 12),
        "branching_number x1000": lambda k: [k.branching_number((1, 2, 3, 3.9 + i * 1e-4, 4.8)) for i in range(1000)],
        "grid_min 19x20x19 general": lambda k: k.grid_min(coef, starts, grid, grid + [1.0], grid),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        fast = importlib.import_module("cdsenum._ckernels")
    except ImportError:
        print("compiled kernels not built; only the fallback can be timed")
        fast = None
    print(f"{'case':36} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, fn in cases().items():
        slow_t = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if fast is None:
            print(f"{name:36} {slow_t:11.4f} {'-':>11} {'-':>8}")
            continue
        assert fn(fast) == fn(_kernels_py), name
        fast_t = min(timeit.repeat(lambda: fn(fast), number=1, repeat=args.repeat))
        print(f"{name:36} {slow_t:11.4f} {fast_t:11.4f} {slow_t / fast_t:7.1f}x")


if __name__ == "__main__":
    main()
