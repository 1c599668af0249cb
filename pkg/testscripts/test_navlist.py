import pytest
from sortedcontainers import SortedList

from wordram.errors import KeyAbsentError, OrderingError
from wordram.model_data_classes import EntryKind, NodeName, SBarEntry
from wordram.navlist import NavList, orderKey



W = 16


def _element (key: int) -> SBarEntry:
	coord = 2 * key + 1
	return SBarEntry(EntryKind.ELEMENT, coord, orderKey(EntryKind.ELEMENT, coord, W, W), key=key)


def _insertSorted (nav: NavList, placed: SortedList, handleOf: dict, entry: SBarEntry):
	i = placed.bisect_left(entry.order)
	if i == 0:
		h = nav.insertFirst(entry)
	else:
		h = nav.insertAfter(handleOf[placed[i - 1]], entry)
	placed.add(entry.order)
	handleOf[entry.order] = h
	return h


def _walk (nav: NavList):
	out = []
	h = nav.first()
	while h is not None:
		out.append(h)
		h = nav.next(h)
	return out


def test_order_key_tie_break ():
	coord = 40
	innerClose = orderKey(EntryKind.CLOSE, coord, 7, W)
	outerClose = orderKey(EntryKind.CLOSE, coord, 2, W)
	outerOpen = orderKey(EntryKind.OPEN, coord, 2, W)
	innerOpen = orderKey(EntryKind.OPEN, coord, 7, W)
	assert innerClose < outerClose < outerOpen < innerOpen
	assert orderKey(EntryKind.OPEN, coord, W, W) < orderKey(EntryKind.ELEMENT, coord + 1, W, W)


def test_random_inserts_and_deletes_stay_sorted (rng):
	nav = NavList(W, audit=True)
	placed = SortedList()
	handleOf = {}
	keys = rng.choice(1 << W, size=400, replace=False).tolist()
	for k in keys:
		_insertSorted(nav, placed, handleOf, _element(k))
	assert [nav.entry(h).key for h in nav.handles()] == sorted(keys)
	assert nav.auditProblems() == []
	assert _walk(nav) == list(nav.handles())

	for k in keys[::2]:
		order = _element(k).order
		nav.delete(handleOf.pop(order))
		placed.remove(order)
	assert [nav.entry(h).key for h in nav.handles()] == sorted(keys[1::2])
	assert len(nav) == len(keys) // 2
	assert nav.auditProblems() == []

	for k in keys[1::2]:
		order = _element(k).order
		nav.delete(handleOf.pop(order))
	assert nav.first() is None
	assert nav.last() is None
	assert nav.auditProblems() == []


def test_prev_walk_matches_reverse (rng):
	nav = NavList(W)
	placed = SortedList()
	handleOf = {}
	for k in rng.choice(1 << W, size=150, replace=False).tolist():
		_insertSorted(nav, placed, handleOf, _element(k))
	back = []
	h = nav.last()
	while h is not None:
		back.append(h)
		h = nav.prev(h)
	assert back == list(reversed(list(nav.handles())))


def test_nearest_element_queries (rng):
	nav = NavList(W)
	owner = NodeName(0, 1, 0)
	handles = []
	isElement = []
	h = None
	for i in range(300):
		element = rng.random() < 0.5
		kind = EntryKind.ELEMENT if element else EntryKind.OPEN
		entry = SBarEntry(kind, i, i * 10, owner=None if element else owner, key=i if element else None)
		h = nav.insertFirst(entry) if h is None else nav.insertAfter(h, entry)
		handles.append(h)
		isElement.append(element)

	for pos, h in enumerate(handles):
		left = next((handles[j] for j in range(pos, -1, -1) if isElement[j]), None)
		right = next((handles[j] for j in range(pos, len(handles)) if isElement[j]), None)
		assert nav.nearestElementLeft(h) == left
		assert nav.nearestElementRight(h) == right
	assert 6 >= nav.maxExamined >= nav.lastExamined >= 1


def test_longest_element_free_runs_stay_within_six_buckets ():
	# S-bar never has more than 2w entries between two Elements
	nav = NavList(W)
	owner = NodeName(0, 1, 0)
	handles = []
	isElement = []
	h = None
	for i in range(12 * (2 * W + 1)):
		element = i % (2 * W + 1) == 0
		kind = EntryKind.ELEMENT if element else EntryKind.OPEN
		entry = SBarEntry(kind, i, i * 10, owner=None if element else owner, key=i if element else None)
		h = nav.insertFirst(entry) if h is None else nav.insertAfter(h, entry)
		handles.append(h)
		isElement.append(element)

	for pos, h in enumerate(handles):
		left = max(j for j in range(pos + 1) if isElement[j])
		assert nav.nearestElementLeft(h) == handles[left]
		assert nav.lastExamined <= 6
		right = nav.nearestElementRight(h)
		assert nav.lastExamined <= 6
		if right is not None:
			assert nav.entry(right).kind is EntryKind.ELEMENT
	assert nav.maxExamined <= 6
	assert nav.auditProblems() == []


def test_audit_mode_rejects_out_of_order ():
	nav = NavList(W, audit=True)
	h5 = nav.insertFirst(_element(5))
	h9 = nav.insertAfter(h5, _element(9))
	with pytest.raises(OrderingError):
		nav.insertAfter(h5, _element(12))
	with pytest.raises(OrderingError):
		nav.insertBefore(h5, _element(7))
	with pytest.raises(OrderingError):
		nav.insertFirst(_element(6))
	nav.insertBefore(h9, _element(7))
	assert [nav.entry(h).key for h in nav.handles()] == [5, 7, 9]


def test_unknown_handle ():
	nav = NavList(W)
	with pytest.raises(KeyAbsentError):
		nav.entry(3)
	with pytest.raises(KeyAbsentError):
		nav.delete(3)
