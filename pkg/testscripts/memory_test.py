'''
Memory Test

Peak memory of the range reporting structures, measured with filprofiler
(a dev dependency).

    $ fil-profile run testscripts/memory_test.py

https://pythonspeed.com/fil/docs/trying.html
'''
import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / 'src'))

import wordram.rangereport as rangereport
from wordram.model_data_classes import Backend, Variant


KEYS = 1 << 14


def fill (variant: Variant, B: int, backend: Backend):
	config = rangereport.makeRangeConfig(64, B, variant, backend, capacity=KEYS, seed=1)
	rr = rangereport.RangeReporter(config)
	rng = np.random.default_rng(1)
	for x in rng.integers(0, 1 << 64, size=KEYS, dtype=np.uint64).tolist():
		rr.insert(x)
	return rr


def main():
	exact = fill(Variant.CORE, 2, Backend.EXACT)
	bloomier = fill(Variant.FAST_QUERY_5B, 4, Backend.BLOOMIER)
	print(len(exact), len(bloomier))


if __name__ == '__main__':
	main()
