'''
Perfect Hash

A dynamic perfect hash for a stream of inserts and deletes: every live
key gets a distinct value in a range of r*j + spill_capacity, and keeps it
while it stays live. Only reduced keys are stored, not the keys themselves.

 - rho squeezes a u-bit key to v bits.
 - phi picks one of r buckets, and the bucket's own hash names the key with
   s bits inside a SmallDict of capacity j. The value is (i-1)*j + slot.
 - A key whose bucket is full, or whose s-bit name is taken, goes to the
   spill dictionary keyed by the original key. Spill values start at r*j.
'''
import math
import sys
from typing import Dict, Iterable, List, Optional, Tuple

import wordram.hashing as hashing
from wordram.compactdict import HEADER_BITS, PackedMap, SmallDict, slotBits
from wordram.errors import CapacityExceededError, ConfigError, RebuildRequiredError
from wordram.model_data_classes import PerfectHashConfig



DEFAULT_C = 2
DEFAULT_KAPPA = 8
SMALL_N = 256
MIN_J = 16


def makePerfectHashConfig (n: int, u_bits: int, c: int = DEFAULT_C, kappa: int = DEFAULT_KAPPA) -> PerfectHashConfig:
	if n < 1:
		raise ConfigError(f"n must be >= 1, got {n}")
	if u_bits < 2:
		raise ConfigError(f"u_bits must be >= 2, got {u_bits}")
	if n > (1 << u_bits):
		raise ConfigError(f"n={n} exceeds the universe 2^{u_bits}")

	clamped = []
	lgn = max(1.0, math.log2(n))
	lgu = float(u_bits)

	v = 3 * math.ceil(lgn) + 16
	if v > u_bits:
		v = u_bits
		clamped.append('v')

	r = math.ceil(n / lgn ** 2)
	if r < 1:
		r = 1
		clamped.append('r')

	j = math.ceil(lgn ** 2 + lgn ** (5 / 3))
	if n < SMALL_N and j < MIN_J:
		j = MIN_J
		clamped.append('j')

	s = math.ceil((6 + 2 * c) * max(1.0, math.log2(lgu)))
	if s > v:
		s = v
		clamped.append('s')
	if s < 4:
		s = min(4, v)
		clamped.append('s')

	spill = kappa * math.ceil(n / lgu)
	return PerfectHashConfig(
		n=n, u_bits=u_bits, c=c, kappa=kappa,
		v=v, r=r, s=s, j=j,
		spill_capacity=spill,
		clamped=tuple(clamped),
	)


def layoutBoundBits (config: PerfectHashConfig) -> int:
	'''n (s + lg j) + r j, the size the bucket layout aims for.'''
	return config.n * (config.s + slotBits(config.j)) + config.r * config.j



class PerfectHash:

	def __init__ (self, config: PerfectHashConfig, seed: int = 0, audit: bool = False):
		self.config = config
		self.audit = audit
		self._reset(seed)


	def _reset (self, seed: int):
		cfg = self.config
		self.seed = seed
		rhoSeed, familySeed = hashing.childSeeds(seed, 2)
		self.rho = hashing.newUniversal(rhoSeed, cfg.u_bits, cfg.v)
		self.family = hashing.BucketHashFamily(familySeed, cfg.v, cfg.r, cfg.s)
		self.buckets: List[SmallDict] = [SmallDict(cfg.j, cfg.s) for _ in range(cfg.r)]

		self.spillSlotBits = slotBits(max(2, cfg.spill_capacity))
		self.spill = PackedMap(cfg.u_bits, self.spillSlotBits, cfg.spill_capacity)
		# pops come off the end, so slot 0 goes first
		self.spillFree: List[int] = list(range(cfg.spill_capacity - 1, -1, -1))
		self.spillPeak = 0
		self.live = 0
		self.shadow: Optional[Dict[int, int]] = {} if self.audit else None
		self.shadowOwners: Dict[int, int] = {}


	@property
	def range_size (self) -> int:
		return self.config.range_size


	def _locate (self, k: int) -> Tuple[int, int]:
		'''Bucket number (1-based) and the bucket-local key of k.'''
		reduced = self.rho(k)
		i = self.family.bucketOf(reduced)
		return i, self.family.bucketHash(i)(reduced)


	def _spillInsert (self, k: int) -> int:
		if not self.spillFree:
			raise RebuildRequiredError("rebuild required")
		slot = self.spillFree.pop()
		self.spill.insert(k, slot)
		self.spillPeak = max(self.spillPeak, len(self.spill))
		return self.config.r * self.config.j + slot



	# ======================================================
	#                      Operations
	# ======================================================

	def insert (self, k: int) -> Tuple[int, bool]:
		'''
		Returns (value, inserted). A repeated insert of a live key is a
		no-op returning (value, False); outside audit mode that is only
		detected for keys sitting in the spill.
		'''
		if self.shadow is not None and k in self.shadow:
			return self.shadow[k], False
		if k in self.spill:
			return self.eval(k), False
		if self.live >= self.config.n:
			raise CapacityExceededError(f"perfect hash holds at most {self.config.n} keys")

		i, name = self._locate(k)
		bucket = self.buckets[i - 1]
		if len(bucket) >= bucket.j or name in bucket:
			value = self._spillInsert(k)
		else:
			value = (i - 1) * self.config.j + bucket.insert(name)

		self.live += 1
		if self.shadow is not None:
			assert 0 <= value < self.range_size, f"value {value} out of range"
			assert value not in self.shadowOwners, f"keys {self.shadowOwners.get(value)} and {k} share value {value}"
			self.shadow[k] = value
			self.shadowOwners[value] = k
		return value, True


	def delete (self, k: int) -> bool:
		'''
		Remove k, returns False if it was not live. Outside audit mode a
		bucket only knows names, so deleting a key that was never inserted
		but shares its bucket and name with a live key removes that live
		key's entry instead. Callers that cannot rule this out should use
		audit mode, which checks k against the live set first.
		'''
		if self.shadow is not None and k not in self.shadow:
			return False
		if k in self.spill:
			self.spillFree.append(self.spill.get(k))
			self.spill.delete(k)
		else:
			i, name = self._locate(k)
			bucket = self.buckets[i - 1]
			if name not in bucket:
				return False
			bucket.delete(name)

		self.live -= 1
		if self.shadow is not None:
			del self.shadowOwners[self.shadow.pop(k)]
		return True


	def eval (self, k: int) -> int:
		slot = self.spill.get(k)
		if slot is not None:
			return self.config.r * self.config.j + slot
		i, name = self._locate(k)
		delta = self.buckets[i - 1].lookup(name)
		base = (i - 1) * self.config.j
		# keys that were never inserted land on their bucket's first value
		return base if delta is None else base + delta


	def rebuild (self, keys: Iterable[int], seed: int) -> Dict[int, int]:
		'''
		Start over with a new seed and insert `keys`. Values are not kept.
		'''
		self._reset(seed)
		return {k: self.insert(k)[0] for k in keys}


	def checkInjective (self):
		'''
		Re-evaluate every live key against the values recorded at insert.
		Inserts already refuse a value that is in use, this also catches
		keys whose value drifted.
		'''
		assert self.shadow is not None, "injectivity needs audit mode"
		seen = {}
		for k, stored in self.shadow.items():
			value = self.eval(k)
			assert value == stored, f"key {k} moved from {stored} to {value}"
			assert value not in seen, f"keys {seen.get(value)} and {k} share value {value}"
			assert 0 <= value < self.range_size
			seen[value] = k


	def space_bits (self) -> int:
		freeBits = len(self.spillFree) * self.spillSlotBits
		return (
			HEADER_BITS
			+ self.rho.seedBits
			+ self.family.seedBits
			+ sum(b.space_bits() for b in self.buckets)
			+ self.spill.space_bits()
			+ freeBits
		)



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
