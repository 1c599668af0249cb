import numpy as np
import pytest
from sortedcontainers import SortedList

from wordram.errors import ConfigError
from wordram.predecessor import PredSet, YFastIndex



def _floor (oracle: SortedList, x: int):
	i = oracle.bisect_right(x)
	return oracle[i - 1] if i else None


def _ceil (oracle: SortedList, x: int):
	i = oracle.bisect_left(x)
	return oracle[i] if i < len(oracle) else None


@pytest.mark.parametrize('backend', ['yfast', 'sorted'])
@pytest.mark.parametrize('w', [8, 16, 64])
def test_against_sorted_list (rng, backend, w):
	ps = PredSet(w, backend)
	oracle = SortedList()
	universe = 1 << w
	draw = lambda: int(rng.integers(0, universe, dtype=np.uint64))
	for step in range(3000):
		x = draw()
		if rng.random() < 0.65:
			before, after, inserted = ps.insert(x)
			assert inserted == (x not in oracle)
			if inserted:
				oracle.add(x)
			i = oracle.index(x)
			assert before == (oracle[i - 1] if i else None)
			assert after == (oracle[i + 1] if i + 1 < len(oracle) else None)
		elif oracle:
			y = oracle[int(rng.integers(0, len(oracle)))]
			assert ps.delete(y)
			oracle.remove(y)
			assert not ps.delete(y)

		q = draw()
		assert ps.predQuery(q) == _floor(oracle, q)
		assert ps.succQuery(q) == _ceil(oracle, q)

	assert list(ps) == list(oracle)
	assert len(ps) == len(oracle)
	assert ps.head == (oracle[0] if oracle else None)
	assert ps.tail == (oracle[-1] if oracle else None)


def test_query_count_and_neighbors ():
	ps = PredSet(16)
	for x in (10, 20, 30):
		ps.insert(x)
	assert ps.queryCount == 0
	assert ps.neighbors(20) == (10, 30)
	assert ps.queryCount == 0
	assert ps.predQuery(25) == 20
	assert ps.succQuery(25) == 30
	assert ps.succQuery(20) == 20
	assert ps.predQuery(5) is None
	assert ps.succQuery(31) is None
	assert ps.queryCount == 5
	assert 20 in ps
	assert 21 not in ps


def test_duplicate_insert_keeps_links ():
	ps = PredSet(8)
	ps.insert(4)
	ps.insert(9)
	assert ps.insert(4) == (None, 9, False)
	assert list(ps) == [4, 9]


def test_unknown_backend ():
	with pytest.raises(ConfigError):
		PredSet(8, 'veb')


def test_yfast_buckets_split_and_merge ():
	idx = YFastIndex(8)
	for x in range(256):
		idx.add(x)
	reps = list(idx.representatives())
	assert reps[0] == 0
	assert len(reps) > 1
	assert reps == sorted(reps)
	for rep in reps:
		bucket = idx.buckets[rep]
		assert len(bucket) <= 2 * 8
		if rep:
			assert bucket[0] == rep
	for x in range(256):
		assert idx.floor(x) == x
		assert idx.floorRep(x) <= x

	for x in range(1, 256):
		idx.discard(x)
	assert list(idx.representatives()) == [0]
	assert idx.floor(200) == 0
	idx.discard(0)
	assert idx.floor(200) is None
