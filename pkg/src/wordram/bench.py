'''
Bench

The runs behind each CLI subcommand. Every function here takes plain
parameters, is fully determined by its seed and returns a report from
model_data_classes; printing and exit codes belong to bench_cli.

Statistical runs (fp-rate, perfect-hash-demo, space-report) retry with
up to three derived seeds before giving up.
'''
import math
import sys
from typing import Dict, Iterator, List, Optional, Set

import numpy as np
from sortedcontainers import SortedList

import wordram.bloomier as bloomier
import wordram.gtgame as gtgame
import wordram.hashing as hashing
import wordram.perfecthash as perfecthash
import wordram.rangereport as rangereport
from wordram.errors import RebuildRequiredError
from wordram.model_data_classes import (Backend, FpRateReport, FuzzReport, PerfectHashReport, ProbeCounters,
                                        SpaceReport, Strategy, StructureSpace, SweepRow, Variant)



RESEED_STEP = 0x9E3779B97F4A7C15
MAX_ATTEMPTS = 3
FP_SLACK = 1.5
BLOOMIER_SPACE_FACTOR = 8
PERFECT_HASH_SPACE_FACTOR = 2
SPILL_PEAK_FACTOR = 4

# traffic mix for oracle-fuzz, the rest are queries
INSERT_SHARE = 0.4
DELETE_SHARE = 0.2


def attemptSeeds (seed: int, attempts: int = MAX_ATTEMPTS) -> Iterator[int]:
	for i in range(attempts):
		yield (seed + i * RESEED_STEP) % (1 << 64)


def drawKeys (rng: np.random.Generator, bits: int, count: int) -> List[int]:
	if bits <= 64:
		return rng.integers(0, 1 << bits, size=count, dtype=np.uint64).tolist()
	return [hashing.drawBits(rng, bits) for _ in range(count)]


def distinctKeys (rng: np.random.Generator, bits: int, count: int) -> List[int]:
	'''`count` distinct keys in draw order.'''
	seen: Set[int] = set()
	out: List[int] = []
	while len(out) < count:
		for k in drawKeys(rng, bits, count - len(out)):
			if k not in seen:
				seen.add(k)
				out.append(k)
	return out



# ======================================================
#                     Oracle Fuzz
# ======================================================

def fuzzEnvelopes (variant: Variant, w: int, B: int, peak: ProbeCounters, queryPredQueries: int) -> Dict[str, bool]:
	'''Instrumented cost limits for the worst operation of a run.'''
	top = math.ceil(math.log(w, B) - 1e-9)
	search = math.ceil(math.log2(top + 1))
	lgw = w.bit_length() - 1
	if variant is Variant.FAST_QUERY_5B:
		writeLimit = 4 * B * top
	else:
		writeLimit = 4 * (lgw + 1)
	return {
		'test_branching': peak.testBranching <= search + 2,
		'nav_queries': peak.navQueries <= 4,
		'pred_queries': queryPredQueries == 0,
		'index_reads': peak.indexReads <= search + B + 2,
		'index_writes': peak.indexWrites <= writeLimit,
	}


def _queryInterval (rng: np.random.Generator, w: int, oracle: SortedList):
	'''Half the intervals are drawn around a stored key, the rest anywhere.'''
	if oracle and rng.random() < 0.5:
		k = oracle[int(rng.integers(0, len(oracle)))]
		span = int(rng.integers(0, w + 1))
		a = max(0, k - hashing.drawBits(rng, span))
		b = min((1 << w) - 1, k + hashing.drawBits(rng, span))
		return a, b
	a, b = sorted(drawKeys(rng, w, 2))
	return a, b


def runOracleFuzz (
		w: int,
		B: int,
		variant: Variant,
		backend: Backend,
		ops: int,
		seed: int,
		audit: bool = False,
		exhaustiveEvery: int = 0) -> FuzzReport:
	'''
	Random insert/delete/findany traffic replayed against a SortedList.
	With `exhaustiveEvery` > 0 every interval of the universe is also
	checked after that many operations (only sensible for tiny w).
	'''
	config = rangereport.makeRangeConfig(
		w, B, variant, backend,
		capacity=min(1 << w, max(1, ops)),
		audit=audit,
		seed=seed,
	)
	rr = rangereport.RangeReporter(config)
	oracle = SortedList()
	rng = np.random.default_rng(seed)

	inserts = deletes = queries = reports = mismatches = 0
	peakQuery = ProbeCounters()
	peakUpdate = ProbeCounters()
	queryPredQueries = 0

	def check (a: int, b: int):
		nonlocal queries, reports, mismatches, queryPredQueries
		found = rr.findany(a, b)
		queries += 1
		peakQuery.maxWith(rr.lastOp)
		queryPredQueries += rr.lastOp.predQueries
		hits = list(oracle.irange(a, b))
		if (found is None) != (not hits):
			mismatches += 1
		elif found is not None and found not in oracle:
			mismatches += 1
		if audit:
			reports += 1
			if list(rr.report(a, b)) != hits:
				mismatches += 1

	for step in range(ops):
		roll = rng.random()
		if roll < INSERT_SHARE or not oracle:
			x = drawKeys(rng, w, 1)[0]
			expected = x not in oracle
			if rr.insert(x) != expected:
				mismatches += 1
			if expected:
				oracle.add(x)
			inserts += 1
			peakUpdate.maxWith(rr.lastOp)
		elif roll < INSERT_SHARE + DELETE_SHARE:
			x = oracle[int(rng.integers(0, len(oracle)))]
			if not rr.delete(x):
				mismatches += 1
			oracle.remove(x)
			deletes += 1
			peakUpdate.maxWith(rr.lastOp)
		else:
			check(*_queryInterval(rng, w, oracle))

		if exhaustiveEvery and (step + 1) % exhaustiveEvery == 0:
			for a in range(1 << w):
				for b in range(a, 1 << w):
					check(a, b)

	peak = ProbeCounters(
		testBranching=peakQuery.testBranching,
		navQueries=peakQuery.navQueries,
		predQueries=peakQuery.predQueries,
		indexReads=peakQuery.indexReads,
		indexWrites=peakUpdate.indexWrites,
	)
	envelopes = fuzzEnvelopes(variant, w, B, peak, queryPredQueries)
	if len(rr) != len(oracle) or list(rr.keys()) != list(oracle):
		mismatches += 1

	return FuzzReport(
		w=w, B=B, variant=variant, backend=backend,
		ops=ops, seed=seed, audit=audit,
		inserts=inserts, deletes=deletes, queries=queries, reports=reports,
		mismatches=mismatches,
		final_size=len(rr),
		max_test_branching=peak.testBranching,
		max_nav_queries=peak.navQueries,
		max_pred_queries=peak.predQueries,
		max_index_reads=peak.indexReads,
		max_index_writes=peak.indexWrites,
		envelopes=envelopes,
		ok=mismatches == 0 and all(envelopes.values()),
	)



# ======================================================
#                   Space and FP Rate
# ======================================================

def _fillPerfectHash (ph: perfecthash.PerfectHash, keys: List[int]):
	for k in keys:
		ph.insert(k)


def _fillBloomier (bf: bloomier.BloomierFilter, keys: List[int], values: List[int]):
	for k, a in zip(keys, values):
		bf.insert(k, a)


def perfectHashSpace (n: int, u_bits: int, seed: int, empty: bool = False) -> StructureSpace:
	config = perfecthash.makePerfectHashConfig(n, u_bits)
	rng = np.random.default_rng(seed)
	keys = [] if empty else distinctKeys(rng, u_bits, n)
	ph = None
	for s in attemptSeeds(seed):
		ph = perfecthash.PerfectHash(config, s)
		try:
			_fillPerfectHash(ph, keys)
			break
		except RebuildRequiredError:
			ph = None
	measured = ph.space_bits() if ph is not None else 0
	reference = n * math.log2(max(2.0, float(u_bits)))
	layout = perfecthash.layoutBoundBits(config)
	limit = PERFECT_HASH_SPACE_FACTOR * layout
	return StructureSpace(
		name='perfect_hash',
		keys=len(keys),
		measured_bits=measured,
		reference_bits=reference,
		C_measured=measured / reference,
		layout_bits=float(layout),
		C_layout=measured / layout,
		limit_bits=float(limit),
		ok=ph is not None and measured <= limit,
	)


def bloomierSpace (n: int, u_bits: int, r: int, epsilon: float, seed: int, empty: bool = False) -> StructureSpace:
	config = bloomier.makeBloomierConfig(n, u_bits, r, epsilon)
	rng = np.random.default_rng(seed)
	keys = [] if empty else distinctKeys(rng, u_bits, n)
	values = rng.integers(1, 1 << r, size=len(keys)).tolist()
	bf = bloomier.BloomierFilter(config, seed)
	_fillBloomier(bf, keys, values)
	measured = bf.space_bits()
	reference = bloomier.referenceBits(config)
	limit = BLOOMIER_SPACE_FACTOR * reference
	return StructureSpace(
		name='bloomier',
		keys=len(keys),
		measured_bits=measured,
		reference_bits=reference,
		C_measured=measured / reference,
		# the filter has no tighter layout than its reference
		layout_bits=reference,
		C_layout=measured / reference,
		limit_bits=limit,
		ok=measured <= limit,
	)


def runSpaceReport (n: int, u_bits: int, r: int, epsilon: float, seed: int, empty: bool = False) -> SpaceReport:
	ph = perfectHashSpace(n, u_bits, seed, empty)
	bf = bloomierSpace(n, u_bits, r, epsilon, seed, empty)
	return SpaceReport(
		n=n, u_bits=u_bits, r=r, epsilon=epsilon, seed=seed,
		perfect_hash=ph,
		bloomier=bf,
		ok=ph.ok and bf.ok,
	)


def runFpRate (n: int, u_bits: int, r: int, epsilon: float, trials: int, seed: int) -> FpRateReport:
	'''
	Store n random keys, read the stored keys back max(n, trials) times in
	total (cycling through them), then count nonzero answers over `trials`
	random non-keys.
	'''
	config = bloomier.makeBloomierConfig(n, u_bits, r, epsilon)
	report = None
	for attempt, s in enumerate(attemptSeeds(seed), start=1):
		rng = np.random.default_rng(s)
		keys = distinctKeys(rng, u_bits, n)
		values = rng.integers(1, 1 << r, size=n).tolist()
		bf = bloomier.BloomierFilter(config, s)
		_fillBloomier(bf, keys, values)

		storedLookups = max(n, trials)
		storedErrors = 0
		for i in range(storedLookups):
			if bf.lookup(keys[i % n]) != values[i % n]:
				storedErrors += 1
		stored = set(keys)
		positives = 0
		checked = 0
		while checked < trials:
			for x in drawKeys(rng, u_bits, trials - checked):
				if x in stored:
					continue
				checked += 1
				if bf.lookup(x) != 0:
					positives += 1
		fpRate = positives / trials
		space = bf.space_bits()

		ok = storedErrors == 0 and fpRate <= FP_SLACK * epsilon
		report = FpRateReport(
			n=n, u_bits=u_bits, r=r, epsilon=epsilon, trials=trials,
			seed=seed, seed_used=s, attempts=attempt,
			stored_lookups=storedLookups,
			stored_errors=storedErrors,
			fp_rate=fpRate,
			space_bits=space,
			C_measured=space / bloomier.referenceBits(config),
			ok=ok,
		)
		if ok:
			break
	return report



# ======================================================
#                  Perfect Hash Demo
# ======================================================

def rangeLimit (n: int, u_bits: int) -> float:
	lgn = max(1.0, math.log2(n))
	return n * (1 + 2 / lgn ** (1 / 3)) + 8 * math.ceil(n / u_bits)


def _phTraffic (config, s: int, ops: int):
	'''
	Mixed traffic with at most n live keys, injectivity checked on every
	insert and in full every n/16 operations. Returns the structure, or
	None if the spill ran out.
	'''
	rng = np.random.default_rng(s)
	ph = perfecthash.PerfectHash(config, s, audit=True)
	live: List[int] = []
	where: Dict[int, int] = {}
	every = max(1, config.n // 16)
	for step in range(ops):
		if not live or (len(live) < config.n and rng.random() < 0.6):
			x = drawKeys(rng, config.u_bits, 1)[0]
			if x in where:
				continue
			try:
				ph.insert(x)
			except RebuildRequiredError:
				return None
			where[x] = len(live)
			live.append(x)
		else:
			i = int(rng.integers(0, len(live)))
			x = live[i]
			last = live.pop()
			if last != x:
				live[i] = last
				where[last] = i
			del where[x]
			ph.delete(x)
		if (step + 1) % every == 0:
			ph.checkInjective()
	ph.checkInjective()
	return ph


def runPerfectHashDemo (n: int, u_bits: int, ops: Optional[int], seed: int) -> PerfectHashReport:
	config = perfecthash.makePerfectHashConfig(n, u_bits)
	ops = 3 * n if ops is None else ops
	spillLimit = SPILL_PEAK_FACTOR * math.ceil(n / u_bits)

	report = None
	for attempt, s in enumerate(attemptSeeds(seed), start=1):
		injective = True
		try:
			ph = _phTraffic(config, s, ops)
		except AssertionError:
			ph, injective = None, False

		rangeOk = config.range_size <= rangeLimit(n, u_bits)
		ok = ph is not None and injective and rangeOk and ph.spillPeak <= spillLimit
		report = PerfectHashReport(
			n=n, u_bits=u_bits, ops=ops,
			seed=seed, seed_used=s, attempts=attempt,
			range=config.range_size,
			spill_peak=ph.spillPeak if ph is not None else config.spill_capacity,
			spill_limit=spillLimit,
			space_bits=ph.space_bits() if ph is not None else 0,
			injective=injective,
			ok=ok,
		)
		if ok or not injective:
			break
	return report



# ======================================================
#                     Probe Bench
# ======================================================

def runProbeBench (n: int, Bs: List[int], strategies: List[Strategy], trials: int, seed: int, exhaustive: bool = False) -> List[SweepRow]:
	if not exhaustive:
		return gtgame.gtSweep(n, Bs, strategies, trials, seed)
	return [
		gtgame.exhaustiveCheck(gtgame.makeGtScheme(n, B, strategy))
		for B in Bs
		for strategy in strategies
	]



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
