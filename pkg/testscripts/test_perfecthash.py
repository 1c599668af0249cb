import numpy as np
import pytest

import wordram.perfecthash as perfecthash
from wordram.errors import CapacityExceededError, ConfigError, RebuildRequiredError
from wordram.model_data_classes import PerfectHashConfig



def _keys (rng, bits, count):
	out = set()
	while len(out) < count:
		out.update(rng.integers(0, 1 << bits, size=count, dtype=np.uint64).tolist())
	return sorted(out)[:count]


def test_config_at_sixteen_thousand_keys ():
	cfg = perfecthash.makePerfectHashConfig(1 << 14, 64)
	assert cfg.r == 84
	assert cfg.j == 278
	assert cfg.v == 58
	assert cfg.s == 58
	assert 's' in cfg.clamped
	assert cfg.spill_capacity == 2048
	assert cfg.range_size == 23352 + 2048


def test_config_rejects_bad_sizes ():
	with pytest.raises(ConfigError):
		perfecthash.makePerfectHashConfig(0, 32)
	with pytest.raises(ConfigError):
		perfecthash.makePerfectHashConfig(20, 4)


def test_small_n_gets_minimum_bucket ():
	cfg = perfecthash.makePerfectHashConfig(4, 32)
	assert cfg.j == perfecthash.MIN_J
	assert 'j' in cfg.clamped


def test_values_are_injective_and_stable (rng):
	cfg = perfecthash.makePerfectHashConfig(2048, 32)
	ph = perfecthash.PerfectHash(cfg, seed=4, audit=True)
	keys = _keys(rng, 32, 2000)
	values = {}
	for k in keys:
		value, inserted = ph.insert(k)
		assert inserted
		assert 0 <= value < ph.range_size
		values[k] = value
	assert len(set(values.values())) == len(keys)
	assert all(ph.eval(k) == v for k, v in values.items())
	assert ph.live == len(keys)

	for k in keys[::2]:
		assert ph.delete(k)
	for k in keys[1::2]:
		assert ph.eval(k) == values[k]
	ph.checkInjective()


def test_repeat_insert_is_a_no_op ():
	cfg = perfecthash.makePerfectHashConfig(64, 32)
	ph = perfecthash.PerfectHash(cfg, seed=1, audit=True)
	value, inserted = ph.insert(12345)
	assert inserted
	assert ph.insert(12345) == (value, False)
	assert ph.live == 1
	assert not ph.delete(999)


def test_capacity_is_enforced ():
	cfg = perfecthash.makePerfectHashConfig(8, 32)
	ph = perfecthash.PerfectHash(cfg, seed=2)
	for k in range(8):
		ph.insert(k * 1000003)
	with pytest.raises(CapacityExceededError):
		ph.insert(77)


def test_full_spill_needs_rebuild ():
	cfg = PerfectHashConfig(
		n=64, u_bits=32, c=2, kappa=0,
		v=25, r=1, s=25, j=4,
		spill_capacity=0,
		clamped=(),
	)
	ph = perfecthash.PerfectHash(cfg, seed=3)
	for k in range(4):
		ph.insert(k + 1)
	with pytest.raises(RebuildRequiredError, match="rebuild required"):
		ph.insert(99)


def test_spill_takes_overflow ():
	cfg = PerfectHashConfig(
		n=64, u_bits=32, c=2, kappa=8,
		v=25, r=1, s=25, j=4,
		spill_capacity=8,
		clamped=(),
	)
	ph = perfecthash.PerfectHash(cfg, seed=3, audit=True)
	values = [ph.insert(k + 1)[0] for k in range(10)]
	assert sorted(values) == list(range(10))
	assert ph.spillPeak == 6
	ph.delete(5)
	ph.delete(6)
	# freed spill slots are handed out again
	assert ph.insert(500)[0] in (4, 5)
	ph.checkInjective()


def test_rebuild_keeps_every_key (rng):
	cfg = perfecthash.makePerfectHashConfig(512, 32)
	ph = perfecthash.PerfectHash(cfg, seed=0, audit=True)
	keys = _keys(rng, 32, 400)
	for k in keys:
		ph.insert(k)
	fresh = ph.rebuild(keys, seed=99)
	assert set(fresh) == set(keys)
	assert len(set(fresh.values())) == len(keys)
	assert ph.seed == 99
	ph.checkInjective()


def test_check_injective_needs_audit ():
	ph = perfecthash.PerfectHash(perfecthash.makePerfectHashConfig(16, 32))
	with pytest.raises(AssertionError):
		ph.checkInjective()


def test_space_within_twice_the_layout (rng):
	cfg = perfecthash.makePerfectHashConfig(4096, 64)
	ph = perfecthash.PerfectHash(cfg, seed=5)
	for k in _keys(rng, 64, 4096):
		ph.insert(k)
	assert ph.space_bits() <= 2 * perfecthash.layoutBoundBits(cfg)


def _sharedName (ph):
	'''Two keys landing on the same bucket and name.'''
	seen = {}
	k = 0
	while True:
		k += 1
		where = ph._locate(k)
		if where in seen:
			return seen[where], k
		seen[where] = k


def _tinyNames ():
	return PerfectHashConfig(
		n=64, u_bits=32, c=2, kappa=8,
		v=25, r=2, s=3, j=16,
		spill_capacity=16,
		clamped=(),
	)


def test_name_collision_goes_to_spill ():
	cfg = _tinyNames()
	ph = perfecthash.PerfectHash(cfg, seed=7, audit=True)
	first, second = _sharedName(ph)
	i, _ = ph._locate(first)

	value, _ = ph.insert(first)
	assert value < cfg.r * cfg.j
	other, inserted = ph.insert(second)
	assert inserted
	# the bucket had room, only the name was taken
	assert len(ph.buckets[i - 1]) == 1
	assert second in ph.spill
	assert other >= cfg.r * cfg.j
	assert ph.spillPeak == 1
	ph.checkInjective()

	assert ph.delete(second)
	assert ph.eval(first) == value
	ph.checkInjective()


def test_deleting_an_absent_key_outside_audit ():
	ph = perfecthash.PerfectHash(_tinyNames(), seed=7)
	first, second = _sharedName(ph)
	i, _ = ph._locate(first)
	ph.insert(first)
	# second was never inserted but takes first's entry with it
	assert ph.delete(second)
	assert len(ph.buckets[i - 1]) == 0

	audited = perfecthash.PerfectHash(_tinyNames(), seed=7, audit=True)
	audited.insert(first)
	assert not audited.delete(second)
	assert len(audited.buckets[i - 1]) == 1
