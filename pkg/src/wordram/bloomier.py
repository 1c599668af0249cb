'''
Bloomier Filter

A dynamic key -> r-bit value map that answers 0 for absent keys, except
with probability about n / v when an absent key's hash hits a stored one.

One universal hash h: [u] -> [v] and two exact dictionaries:
 - first:  original key -> value, for keys whose hash was already taken
 - second: h(key) -> value, for everything else
'''
import math
import sys
from typing import Optional

import wordram.hashing as hashing
from wordram.compactdict import HEADER_BITS, PackedMap
from wordram.errors import CapacityExceededError, ConfigError
from wordram.model_data_classes import BloomierConfig



def makeBloomierConfig (n: int, u_bits: int, r: int, epsilon: float) -> BloomierConfig:
	if n < 1:
		raise ConfigError(f"n must be >= 1, got {n}")
	if r < 1:
		raise ConfigError(f"value width r must be >= 1, got {r}")
	if not (0.0 < epsilon <= 1.0):
		raise ConfigError(f"epsilon must be in (0, 1], got {epsilon}")
	if (1 << u_bits) < 2 * n:
		raise ConfigError(f"universe 2^{u_bits} must be at least 2n = {2 * n}")

	clamped = []
	lgRatio = u_bits - math.log2(n)
	target = max(n * lgRatio, n / epsilon, float(n))
	v_bits = max(1, math.ceil(math.log2(target)))
	if v_bits > u_bits:
		v_bits = u_bits
		clamped.append('v')
	return BloomierConfig(n=n, u_bits=u_bits, r=r, epsilon=epsilon, v_bits=v_bits, clamped=tuple(clamped))


def referenceBits (config: BloomierConfig) -> float:
	'''n (lg lg(u/n) + lg(1/eps) + r), the bound the space report compares against.'''
	lgRatio = max(2.0, config.u_bits - math.log2(config.n))
	return config.n * (math.log2(lgRatio) + math.log2(1 / config.epsilon) + config.r)



class BloomierFilter:

	def __init__ (self, config: BloomierConfig, seed: int = 0):
		self.config = config
		self.seed = seed
		self.h = hashing.newUniversal(seed, config.u_bits, config.v_bits)
		self.first = PackedMap(config.u_bits, config.r)
		self.second = PackedMap(config.v_bits, config.r)


	@property
	def live (self) -> int:
		return len(self.first) + len(self.second)


	@property
	def firstSize (self) -> int:
		return len(self.first)


	def insert (self, x: int, a: int):
		if a == 0:
			raise ConfigError("use delete")
		if a >= (1 << self.config.r):
			raise ConfigError(f"value {a} does not fit in {self.config.r} bits")
		if self.live >= self.config.n:
			raise CapacityExceededError(f"filter holds at most {self.config.n} keys")
		hx = self.h(x)
		if hx in self.second:
			self.first.insert(x, a)
		else:
			self.second.insert(hx, a)


	def delete (self, x: int):
		'''
		Only valid for keys that are stored; anything else may remove an
		entry that belongs to a colliding key.
		'''
		if x in self.first:
			self.first.delete(x)
			return
		hx = self.h(x)
		if hx in self.second:
			self.second.delete(hx)


	def update (self, x: int, a: int):
		self.delete(x)
		if a != 0:
			self.insert(x, a)


	def lookup (self, x: int) -> int:
		value = self.first.get(x)
		if value is not None:
			return value
		return self.second.get(self.h(x), 0)


	def get (self, x: int, default: Optional[int] = None) -> Optional[int]:
		value = self.lookup(x)
		return default if value == 0 else value


	def space_bits (self) -> int:
		return HEADER_BITS + self.h.seedBits + self.first.space_bits() + self.second.space_bits()



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
