"""Time the compiled and pure-Python secant tables against each other.

    python benchmarks/bench_kernels.py [--n 500] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from lllcount import _kernels_py
from lllcount.secint import derive_params

try:
    from lllcount import _kernels
except ImportError:
    _kernels = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500, help="dimension; table length is n^2/4")
    ap.add_argument("--eta", type=float, default=0.51)
    ap.add_argument("--delta", type=float, default=0.99)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    m_max = args.n * args.n // 4 - 1
    phi = derive_params(args.n, args.eta, args.delta).phi
    print(f"table length {m_max + 1} (n = {args.n}), best of {args.repeat}")

    pure = min(timeit.repeat(lambda: _kernels_py.sec_log_table(m_max, phi),
                             number=1, repeat=args.repeat))
    print(f"python  {pure * 1e3:9.2f} ms")
    if _kernels is None:
        print("cython  extension not built")
        return
    fast = min(timeit.repeat(lambda: _kernels.sec_log_table(m_max, phi),
                             number=1, repeat=args.repeat))
    a = _kernels.sec_log_table(m_max, phi)
    b = _kernels_py.sec_log_table(m_max, phi)
    diff = float(np.max(np.abs(a - b)))
    print(f"cython  {fast * 1e3:9.2f} ms  speedup {pure / fast:.1f}x  max |diff| {diff:.1e}")


if __name__ == "__main__":
    main()
