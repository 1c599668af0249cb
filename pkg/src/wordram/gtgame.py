'''
Greater-Than Game

Bit-probe schemes for "is b > a?": an update stage writes a into a
fresh bit memory, a query stage reads bits to compare b against it.
Both work on a B-ary tree with L levels over [0, n), one bit per node.

 - query-heavy: update marks a's root-to-leaf path. A query binary
   searches the levels of b's path for the divergence point and then
   reads the siblings to the left of b's node there.
 - update-heavy: update also marks every left sibling of a's path, so
   the query needs a single read after the binary search.

Layout is level-major: for each level an on-path block of B^l bits,
followed (update-heavy only) by a sibling block of the same size.
'''
import math
import sys
from typing import Iterable, List, Tuple

import numpy as np
from bitarray import bitarray
from bitarray.util import zeros

from wordram.errors import ConfigError, WordRamError
from wordram.model_data_classes import GtScheme, Strategy, SweepRow



QUERIES_PER_UPDATE = 16


class BitMemory:
	'''Zero-initialised bits that grow on write, with probe counters.'''

	def __init__ (self):
		self.bits = bitarray()
		self.reads = 0
		self.writes = 0

	@property
	def fresh (self) -> bool:
		return self.writes == 0

	def read (self, addr: int) -> int:
		self.reads += 1
		return self.bits[addr] if addr < len(self.bits) else 0

	def write (self, addr: int):
		self.writes += 1
		if addr >= len(self.bits):
			self.bits.extend(zeros(addr + 1 - len(self.bits)))
		self.bits[addr] = 1



def makeGtScheme (n: int, B: int, strategy: Strategy) -> GtScheme:
	if n < 2:
		raise ConfigError(f"n must be >= 2, got {n}")
	if B < 2:
		raise ConfigError(f"B must be >= 2, got {B}")
	L = 1
	while B ** L < n:
		L += 1

	on, sib = [], []
	pos = 0
	for l in range(1, L + 1):
		on.append(pos)
		pos += B ** l
		if strategy is Strategy.UPDATE_HEAVY:
			sib.append(pos)
			pos += B ** l
	return GtScheme(n=n, B=B, L=L, strategy=strategy, on_offsets=tuple(on), sib_offsets=tuple(sib), total_bits=pos)


def nodeAt (scheme: GtScheme, x: int, level: int) -> int:
	'''Index among the B^level nodes of that level of x's ancestor.'''
	return x // scheme.B ** (scheme.L - level)


def queryBound (scheme: GtScheme) -> int:
	search = math.ceil(math.log2(scheme.L + 1))
	if scheme.strategy is Strategy.QUERY_HEAVY:
		return search + scheme.B - 1
	return search + 1


def updateCount (scheme: GtScheme, a: int) -> int:
	if scheme.strategy is Strategy.QUERY_HEAVY:
		return scheme.L
	return scheme.L + sum(nodeAt(scheme, a, l) % scheme.B for l in range(1, scheme.L + 1))


def _checkRange (scheme: GtScheme, x: int):
	if not 0 <= x < scheme.n:
		raise ConfigError(f"{x} is outside [0, {scheme.n})")



# ======================================================
#                  Update and Query
# ======================================================

def gtUpdate (scheme: GtScheme, mem: BitMemory, a: int) -> int:
	_checkRange(scheme, a)
	if not mem.fresh:
		raise WordRamError("update needs a fresh memory")
	for l in range(1, scheme.L + 1):
		node = nodeAt(scheme, a, l)
		mem.write(scheme.on_offsets[l - 1] + node)
		if scheme.strategy is Strategy.UPDATE_HEAVY:
			first = node - node % scheme.B
			for sibling in range(first, node):
				mem.write(scheme.sib_offsets[l - 1] + sibling)
	return mem.writes


def gtQuery (scheme: GtScheme, mem: BitMemory, b: int) -> Tuple[bool, int]:
	'''Returns (b > a, bits read by this query).'''
	_checkRange(scheme, b)
	start = mem.reads

	# b's path is marked at levels < hi and unmarked from hi on
	lo, hi = 0, scheme.L + 1
	while hi - lo > 1:
		mid = (lo + hi) // 2
		if mem.read(scheme.on_offsets[mid - 1] + nodeAt(scheme, b, mid)):
			lo = mid
		else:
			hi = mid
	if lo == scheme.L:
		return False, mem.reads - start

	level = lo + 1
	node = nodeAt(scheme, b, level)
	if scheme.strategy is Strategy.QUERY_HEAVY:
		first = node - node % scheme.B
		answer = False
		for sibling in range(first, node):
			if mem.read(scheme.on_offsets[level - 1] + sibling):
				answer = True
				break
	else:
		answer = not mem.read(scheme.sib_offsets[level - 1] + node)
	return answer, mem.reads - start



# ======================================================
#                  Checks and Sweeps
# ======================================================

def _play (scheme: GtScheme, aValues: List[int], bValues: List[List[int]]) -> SweepRow:
	'''One fresh memory per a, every b of its list queried on it.'''
	bound = queryBound(scheme)
	writes: List[int] = []
	reads: List[int] = []
	correct = True
	for a, bs in zip(aValues, bValues):
		mem = BitMemory()
		tu = gtUpdate(scheme, mem, a)
		writes.append(tu)
		correct = correct and tu == updateCount(scheme, a)
		for b in bs:
			answer, tq = gtQuery(scheme, mem, b)
			reads.append(tq)
			correct = correct and answer == (b > a) and tq <= bound

	return SweepRow(
		B=scheme.B,
		strategy=scheme.strategy,
		Tu_max=int(np.max(writes)),
		Tq_max=int(np.max(reads)),
		Tu_mean=float(np.mean(writes)),
		Tq_mean=float(np.mean(reads)),
		correct=correct,
	)


def exhaustiveCheck (scheme: GtScheme) -> SweepRow:
	'''Every a gets one update, then every b is queried on that memory.'''
	everything = list(range(scheme.n))
	return _play(scheme, everything, [everything] * scheme.n)


def sweepOne (scheme: GtScheme, trials: int, rng: np.random.Generator) -> SweepRow:
	updates = max(1, math.ceil(trials / QUERIES_PER_UPDATE))
	aValues = rng.integers(0, scheme.n, size=updates).tolist()
	bValues = rng.integers(0, scheme.n, size=(updates, QUERIES_PER_UPDATE)).tolist()
	return _play(scheme, aValues, bValues)


def gtSweep (n: int, Bs: Iterable[int], strategies: Iterable[Strategy], trials: int, seed: int) -> List[SweepRow]:
	rng = np.random.default_rng(seed)
	rows = []
	for B in Bs:
		for strategy in strategies:
			rows.append(sweepOne(makeGtScheme(n, B, strategy), trials, rng))
	return rows



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
