import numpy as np
import pytest

import wordram.hashing as hashing
from wordram.errors import ConfigError



def test_draw_bits_width (rng):
	assert hashing.drawBits(rng, 0) == 0
	for _ in range(100):
		assert 0 <= hashing.drawBits(rng, 70) < (1 << 70)
		assert 0 <= hashing.drawBits(rng, 5) < 32


def test_child_seeds_are_reproducible ():
	assert hashing.childSeeds(7, 4) == hashing.childSeeds(7, 4)
	assert hashing.childSeeds(7, 4) != hashing.childSeeds(8, 4)
	assert len(set(hashing.childSeeds(7, 16))) == 16


def test_universal_hash_range_and_determinism (rng):
	h = hashing.newUniversal(3, 32, 10)
	again = hashing.newUniversal(3, 32, 10)
	keys = rng.integers(0, 1 << 32, size=1000, dtype=np.uint64).tolist()
	for x in keys:
		assert 0 <= h(x) < 1024
		assert h(x) == again(x)
	assert h.multiplier & 1
	assert h.seedBits == 32


def test_universal_hash_rejects_bad_widths ():
	with pytest.raises(ConfigError):
		hashing.newUniversal(0, 16, 20)
	with pytest.raises(ConfigError):
		hashing.newUniversal(0, 16, 0)


def test_universal_hash_spreads_keys (rng):
	h = hashing.newUniversal(11, 40, 8)
	keys = rng.integers(0, 1 << 40, size=4096, dtype=np.uint64).tolist()
	counts = np.bincount([h(x) for x in keys], minlength=256)
	# 16 expected per cell
	assert counts.max() < 64


def test_universal_hash_collision_rate (rng):
	pairs = collisions = 0
	for seed in range(250):
		h = hashing.newUniversal(seed, 32, 10)
		xs = rng.integers(0, 1 << 32, size=4000, dtype=np.uint64).tolist()
		ys = rng.integers(0, 1 << 32, size=4000, dtype=np.uint64).tolist()
		for x, y in zip(xs, ys):
			if x == y:
				continue
			pairs += 1
			collisions += h(x) == h(y)
	assert pairs > 999_000
	assert collisions <= 4 * pairs / (1 << 10)


def test_tabulation_hash_range (rng):
	tab = hashing.TabulationHash(5, 52, 29)
	keys = rng.integers(0, 1 << 52, size=2000, dtype=np.uint64).tolist()
	values = [tab(x) for x in keys]
	assert min(values) >= 1
	assert max(values) <= 29
	assert len(set(values)) == 29
	assert values == [hashing.TabulationHash(5, 52, 29)(x) for x in keys]


def test_tabulation_seed_bits ():
	tab = hashing.TabulationHash(0, 16, 4)
	# two characters, one derived table, entries of 2 + 8 bits
	assert tab.seedBits == (2 * 256 + 257) * 10
	with pytest.raises(ConfigError):
		hashing.TabulationHash(0, 16, 0)


def test_bucket_family ():
	family = hashing.BucketHashFamily(9, 25, 12, 20)
	assert len(family.hashes) == 12
	for x in range(0, 1 << 25, 99991):
		i = family.bucketOf(x)
		assert 1 <= i <= 12
		assert 0 <= family.bucketHash(i)(x) < (1 << 20)
	with pytest.raises(ConfigError):
		hashing.BucketHashFamily(9, 20, 12, 25)
