import pytest

from wordram.compactdict import HEADER_BITS, PackedMap, SmallDict, VacancyTracker, slotBits
from wordram.errors import BucketFullError, CapacityExceededError, DuplicateKeyError, KeyAbsentError



def test_slot_bits ():
	assert slotBits(2) == 1
	assert slotBits(16) == 4
	assert slotBits(17) == 5
	assert slotBits(278) == 9



# ======================================================
#                   Vacancy Tracker
# ======================================================

def test_vacancy_hands_out_lowest_free ():
	vt = VacancyTracker(10, blockBits=4)
	assert [vt.alloc() for _ in range(10)] == list(range(10))
	with pytest.raises(BucketFullError, match="bucket full"):
		vt.alloc()
	vt.release(3)
	vt.release(7)
	assert vt.free == 2
	assert vt.alloc() == 3
	assert vt.alloc() == 7


def test_vacancy_summary_tracks_blocks ():
	vt = VacancyTracker(12, blockBits=4)
	for _ in range(5):
		vt.alloc()
	assert vt.summary.tolist() == [1, 1, 0]
	vt.release(4)
	assert vt.summary.tolist() == [1, 0, 0]
	assert not vt.isAllocated(4)
	with pytest.raises(KeyAbsentError):
		vt.release(4)
	assert vt.space_bits() == 12 + 3



# ======================================================
#                      Small Dict
# ======================================================

def test_small_dict_basic ():
	sd = SmallDict(8, 6)
	slots = {k: sd.insert(k) for k in (40, 3, 17, 63)}
	assert sorted(slots.values()) == [0, 1, 2, 3]
	assert len(sd) == 4
	for k, slot in slots.items():
		assert sd.lookup(k) == slot
		assert k in sd
	assert sd.lookup(5) is None
	assert [k for k, _ in sd.items()] == [3, 17, 40, 63]
	with pytest.raises(DuplicateKeyError, match="duplicate"):
		sd.insert(17)


def test_small_dict_full_and_reuse ():
	sd = SmallDict(4, 8)
	for k in range(4):
		sd.insert(k * 10)
	with pytest.raises(BucketFullError, match="bucket full"):
		sd.insert(99)
	freed = sd.lookup(20)
	sd.delete(20)
	assert 20 not in sd
	assert sd.insert(99) == freed
	with pytest.raises(KeyAbsentError):
		sd.delete(20)


def test_small_dict_against_dict (rng):
	sd = SmallDict(40, 12)
	shadow = {}
	for _ in range(2000):
		k = int(rng.integers(0, 1 << 12))
		if k in shadow:
			sd.delete(k)
			del shadow[k]
		elif len(shadow) < 40:
			shadow[k] = sd.insert(k)
		assert len(sd) == len(shadow)
	assert dict(sd.items()) == shadow
	assert len(set(shadow.values())) == len(shadow)
	assert all(0 <= v < 40 for v in shadow.values())


def test_small_dict_space ():
	sd = SmallDict(16, 10)
	tracker = sd.vacancy.space_bits()
	assert sd.space_bits() == 16 * (10 + 4) + tracker + HEADER_BITS



# ======================================================
#                      Packed Map
# ======================================================

def test_packed_map_operations ():
	pm = PackedMap(20, 6, capacity=3)
	pm.insert(5, 1)
	pm.insert(900, 63)
	assert pm.get(5) == 1
	assert pm.get(6) is None
	assert pm.get(6, 0) == 0
	pm.update(5, 9)
	assert pm.get(5) == 9
	with pytest.raises(DuplicateKeyError):
		pm.insert(900, 2)
	pm.insert(7, 7)
	with pytest.raises(CapacityExceededError):
		pm.insert(8, 8)
	pm.delete(900)
	with pytest.raises(KeyAbsentError):
		pm.delete(900)
	with pytest.raises(KeyAbsentError):
		pm.update(900, 1)
	assert list(pm.items()) == [(5, 9), (7, 7)]


def test_packed_map_serialized_size ():
	pm = PackedMap(20, 6)
	assert pm.space_bits() == HEADER_BITS
	for k in range(0, 1000, 37):
		pm.insert(k, k % 64)
	assert len(pm.serialize()) == pm.space_bits()
