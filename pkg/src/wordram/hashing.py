'''
Hashing

Seeded hash families for the perfect hash and the Bloomier filter.

 - UniversalHash: multiply-shift, ((a * x) mod 2^in) >> (in - out) with
   a random odd multiplier a. Pairwise collision probability is at most
   2 / 2^out.
 - TabulationHash: 4-wise independent tabulation over 8-bit characters.
   The c input characters are extended with c - 1 derived characters
   (a Vandermonde code mod 257) and every character indexes its own random
   table; the entries are XORed together. Stands in for a highly
   independent family where only concentration matters.
 - BucketHashFamily: the bucket selector plus one UniversalHash per bucket.

Seeds are 64-bit integers and everything is drawn from numpy's
default_rng, so the same seed gives the same functions on every platform.
'''
import sys
from typing import List

import numpy as np
from attrs import define, field

from wordram.errors import ConfigError



CHAR_BITS = 8
CHAR_MASK = (1 << CHAR_BITS) - 1
DERIVED_MODULUS = 257


def drawBits (rng: np.random.Generator, bits: int) -> int:
	'''A uniform integer of `bits` bits, built from 32-bit draws.'''
	words = rng.integers(0, 1 << 32, size=(bits + 31) // 32, dtype=np.uint64)
	value = 0
	for word in words.tolist():
		value = (value << 32) | word
	return value & ((1 << bits) - 1)


def childSeeds (seed: int, count: int) -> List[int]:
	rng = np.random.default_rng(seed)
	return rng.integers(0, 1 << 63, size=count, dtype=np.uint64).tolist()



# ======================================================
#                   Multiply-shift
# ======================================================

@define(frozen=True)
class UniversalHash:
	seed: int
	in_bits: int
	out_bits: int
	multiplier: int = field(init=False)

	def __attrs_post_init__ (self):
		if self.out_bits < 1 or self.out_bits > self.in_bits:
			raise ConfigError(
				f"need 1 <= out_bits <= in_bits, got out={self.out_bits} in={self.in_bits}"
			)
		rng = np.random.default_rng(self.seed)
		object.__setattr__(self, 'multiplier', drawBits(rng, self.in_bits) | 1)

	@property
	def seedBits (self) -> int:
		return self.in_bits

	def __call__ (self, x: int) -> int:
		inMask = (1 << self.in_bits) - 1
		return ((self.multiplier * x) & inMask) >> (self.in_bits - self.out_bits)


def newUniversal (seed: int, in_bits: int, out_bits: int) -> UniversalHash:
	return UniversalHash(seed, in_bits, out_bits)



# ======================================================
#                     Tabulation
# ======================================================

class TabulationHash:
	'''
	Maps in_bits-bit strings to [1, r].
	'''

	def __init__ (self, seed: int, in_bits: int, r: int):
		if r < 1:
			raise ConfigError(f"tabulation range must be >= 1, got {r}")
		self.seed = seed
		self.in_bits = in_bits
		self.r = r
		self.chars = max(1, (in_bits + CHAR_BITS - 1) // CHAR_BITS)
		self.derived = self.chars - 1
		self.entryBits = max(1, (r - 1).bit_length()) + 8

		rng = np.random.default_rng(seed)
		high = 1 << self.entryBits
		self.inputTables = rng.integers(0, high, size=(self.chars, 1 << CHAR_BITS), dtype=np.uint64).tolist()
		self.derivedTables = rng.integers(0, high, size=(self.derived, DERIVED_MODULUS), dtype=np.uint64).tolist()


	@property
	def seedBits (self) -> int:
		entries = self.chars * (1 << CHAR_BITS) + self.derived * DERIVED_MODULUS
		return entries * self.entryBits


	def raw (self, x: int) -> int:
		chars = [(x >> (CHAR_BITS * i)) & CHAR_MASK for i in range(self.chars)]
		acc = 0
		for i, ch in enumerate(chars):
			acc ^= self.inputTables[i][ch]
		for k in range(self.derived):
			point = k + 1
			z = 0
			for ch in reversed(chars):
				z = (z * point + ch) % DERIVED_MODULUS
			acc ^= self.derivedTables[k][z]
		return acc


	def __call__ (self, x: int) -> int:
		return ((self.raw(x) * self.r) >> self.entryBits) + 1



# ======================================================
#                 Bucket Hash Family
# ======================================================

class BucketHashFamily:
	'''
	phi picks a bucket in [1, r]; bucketHash(i) is the hash that names
	keys inside bucket i with s bits.
	'''

	def __init__ (self, seed: int, v: int, r: int, s: int):
		if s > v:
			raise ConfigError(f"bucket key width s={s} exceeds v={v}")
		seeds = childSeeds(seed, r + 1)
		self.v = v
		self.r = r
		self.s = s
		self.phi = TabulationHash(seeds[0], v, r)
		self.hashes = [UniversalHash(sd, v, s) for sd in seeds[1:]]

	def bucketOf (self, x: int) -> int:
		return self.phi(x)

	def bucketHash (self, i: int) -> UniversalHash:
		return self.hashes[i - 1]

	@property
	def seedBits (self) -> int:
		return self.phi.seedBits + sum(h.seedBits for h in self.hashes)



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
