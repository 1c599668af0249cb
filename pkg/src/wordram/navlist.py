'''
Navigation List

The ordered list over S-bar: the keys of S interleaved with the Open and
Close points of every branching node. Entries are addressed by handles
that survive bucket splits and merges.

Consecutive entries are grouped into buckets of sq..2sq entries, with
sq = ceil(sqrt(w)), and buckets into superbuckets of sq..2sq buckets.
Each bucket keeps
 - a summary word, bit i set iff the entry at list position i is an Element
 - a packed permutation word, field i naming the physical slot of position i
 - the physical slots themselves.
Each superbucket keeps a summary word with bit k set iff its k-th bucket
holds an Element. Finding the nearest Element then reads a few words
instead of walking the list, since no Element-free run is longer than 2w.
'''
import math
import sys
from typing import Dict, Iterator, List, Optional

from wordram.errors import KeyAbsentError, OrderingError
from wordram.model_data_classes import EntryKind, SBarEntry
from wordram.wordops import lsb, msb



def orderKey (kind: EntryKind, coord: int, depth: int, w: int) -> int:
	'''
	Position of an entry in the list. Parentheses of nested nodes can share
	a coordinate; at equal coordinates Closes come first, inner ones first,
	then Opens, outer ones first.
	'''
	scale = 2 * w + 2
	if kind is EntryKind.ELEMENT:
		return coord * scale
	if kind is EntryKind.CLOSE:
		return coord * scale + (w - depth)
	return coord * scale + w + 1 + depth


def _bitInsert (word: int, i: int, bit: int, width: int = 1) -> int:
	low = word & ((1 << (i * width)) - 1)
	high = word >> (i * width)
	return low | (bit << (i * width)) | (high << ((i + 1) * width))


def _bitRemove (word: int, i: int, width: int = 1) -> int:
	low = word & ((1 << (i * width)) - 1)
	high = word >> ((i + 1) * width)
	return low | (high << (i * width))



class Bucket:

	def __init__ (self, owner: 'SuperBucket', capacity: int, fieldBits: int):
		self.owner = owner
		self.fieldBits = fieldBits
		self.slots: List[Optional[int]] = [None] * capacity
		self.perm = 0
		self.summary = 0
		self.size = 0


	def slotAt (self, i: int) -> int:
		return (self.perm >> (i * self.fieldBits)) & ((1 << self.fieldBits) - 1)


	def handleAt (self, i: int) -> int:
		return self.slots[self.slotAt(i)]


	def positionOf (self, slot: int) -> int:
		for i in range(self.size):
			if self.slotAt(i) == slot:
				return i
		raise KeyAbsentError(f"slot {slot} not in bucket")


	def handles (self) -> List[int]:
		return [self.handleAt(i) for i in range(self.size)]


	def place (self, i: int, handle: int, isElement: bool) -> int:
		slot = self.slots.index(None)
		self.slots[slot] = handle
		self.perm = _bitInsert(self.perm, i, slot, self.fieldBits)
		self.summary = _bitInsert(self.summary, i, int(isElement))
		self.size += 1
		return slot


	def take (self, i: int):
		self.slots[self.slotAt(i)] = None
		self.perm = _bitRemove(self.perm, i, self.fieldBits)
		self.summary = _bitRemove(self.summary, i)
		self.size -= 1



class SuperBucket:

	def __init__ (self):
		self.buckets: List[Bucket] = []
		self.summary = 0
		self.prev: Optional['SuperBucket'] = None
		self.next: Optional['SuperBucket'] = None


	def refresh (self):
		self.summary = 0
		for k, b in enumerate(self.buckets):
			if b.summary:
				self.summary |= 1 << k


	def refreshOne (self, bucket: Bucket):
		k = self.buckets.index(bucket)
		if bucket.summary:
			self.summary |= 1 << k
		else:
			self.summary &= ~(1 << k)



class NavList:

	def __init__ (self, w: int, audit: bool = False):
		self.w = w
		self.audit = audit
		self.sq = max(2, math.isqrt(w - 1) + 1)
		self.capacity = 2 * self.sq + 1
		self.fieldBits = max(1, (self.capacity - 1).bit_length())

		self.entries: Dict[int, SBarEntry] = {}
		self.where: Dict[int, Bucket] = {}
		self.slotOf: Dict[int, int] = {}
		self.nextHandle = 0

		self.firstSuper = SuperBucket()
		self.firstSuper.buckets.append(self._newBucket(self.firstSuper))

		self.lastExamined = 0
		self.maxExamined = 0


	def __len__ (self) -> int:
		return len(self.entries)


	def _newBucket (self, owner: SuperBucket) -> Bucket:
		return Bucket(owner, self.capacity, self.fieldBits)


	def entry (self, h: int) -> SBarEntry:
		if h not in self.entries:
			raise KeyAbsentError(f"no entry with handle {h}")
		return self.entries[h]


	def _position (self, h: int) -> int:
		return self.where[h].positionOf(self.slotOf[h])



	# ======================================================
	#                      Traversal
	# ======================================================

	def _bucketAfter (self, bucket: Bucket) -> Optional[Bucket]:
		sup = bucket.owner
		k = sup.buckets.index(bucket)
		if k + 1 < len(sup.buckets):
			return sup.buckets[k + 1]
		return sup.next.buckets[0] if sup.next is not None else None


	def _bucketBefore (self, bucket: Bucket) -> Optional[Bucket]:
		sup = bucket.owner
		k = sup.buckets.index(bucket)
		if k > 0:
			return sup.buckets[k - 1]
		return sup.prev.buckets[-1] if sup.prev is not None else None


	def first (self) -> Optional[int]:
		b = self.firstSuper.buckets[0]
		return b.handleAt(0) if b.size else None


	def last (self) -> Optional[int]:
		sup = self.firstSuper
		while sup.next is not None:
			sup = sup.next
		b = sup.buckets[-1]
		return b.handleAt(b.size - 1) if b.size else None


	def next (self, h: int) -> Optional[int]:
		bucket = self.where[h]
		i = self._position(h)
		if i + 1 < bucket.size:
			return bucket.handleAt(i + 1)
		after = self._bucketAfter(bucket)
		return after.handleAt(0) if after is not None else None


	def prev (self, h: int) -> Optional[int]:
		bucket = self.where[h]
		i = self._position(h)
		if i > 0:
			return bucket.handleAt(i - 1)
		before = self._bucketBefore(bucket)
		return before.handleAt(before.size - 1) if before is not None else None


	def handles (self) -> Iterator[int]:
		sup = self.firstSuper
		while sup is not None:
			for b in sup.buckets:
				yield from b.handles()
			sup = sup.next



	# ======================================================
	#                 Nearest Element Queries
	# ======================================================

	def _record (self, examined: int):
		self.lastExamined = examined
		self.maxExamined = max(self.maxExamined, examined)


	def nearestElementLeft (self, h: int) -> Optional[int]:
		'''Nearest Element at or before h.'''
		bucket = self.where[h]
		i = self._position(h)
		examined = 1
		mask = bucket.summary & ((1 << (i + 1)) - 1)
		if mask:
			self._record(examined)
			return bucket.handleAt(msb(mask))

		sup = bucket.owner
		k = sup.buckets.index(bucket)
		mask = sup.summary & ((1 << k) - 1)
		examined += 1
		while not mask:
			sup = sup.prev
			if sup is None:
				self._record(examined)
				return None
			mask = sup.summary
			examined += 1
		found = sup.buckets[msb(mask)]
		examined += 1
		self._record(examined)
		return found.handleAt(msb(found.summary))


	def nearestElementRight (self, h: int) -> Optional[int]:
		'''Nearest Element at or after h.'''
		bucket = self.where[h]
		i = self._position(h)
		examined = 1
		mask = bucket.summary >> i
		if mask:
			self._record(examined)
			return bucket.handleAt(i + lsb(mask))

		sup = bucket.owner
		k = sup.buckets.index(bucket)
		mask = sup.summary >> (k + 1)
		offset = k + 1
		examined += 1
		while not mask:
			sup = sup.next
			if sup is None:
				self._record(examined)
				return None
			mask = sup.summary
			offset = 0
			examined += 1
		found = sup.buckets[offset + lsb(mask)]
		examined += 1
		self._record(examined)
		return found.handleAt(lsb(found.summary))



	# ======================================================
	#                       Updates
	# ======================================================

	def _checkOrder (self, before: Optional[int], entry: SBarEntry, after: Optional[int]):
		if before is not None and self.entries[before].order >= entry.order:
			raise OrderingError(f"{entry} does not come after {self.entries[before]}")
		if after is not None and self.entries[after].order <= entry.order:
			raise OrderingError(f"{entry} does not come before {self.entries[after]}")


	def _place (self, bucket: Bucket, i: int, entry: SBarEntry) -> int:
		h = self.nextHandle
		self.nextHandle += 1
		self.entries[h] = entry
		self.slotOf[h] = bucket.place(i, h, entry.kind is EntryKind.ELEMENT)
		self.where[h] = bucket
		bucket.owner.refreshOne(bucket)
		if bucket.size > 2 * self.sq:
			self._splitBucket(bucket)
		return h


	def insertFirst (self, entry: SBarEntry) -> int:
		'''Insert at the very front of the list.'''
		if self.audit:
			self._checkOrder(None, entry, self.first())
		return self._place(self.firstSuper.buckets[0], 0, entry)


	def insertBefore (self, h: int, entry: SBarEntry) -> int:
		if self.audit:
			self._checkOrder(self.prev(h), entry, h)
		return self._place(self.where[h], self._position(h), entry)


	def insertAfter (self, h: int, entry: SBarEntry) -> int:
		if self.audit:
			self._checkOrder(h, entry, self.next(h))
		return self._place(self.where[h], self._position(h) + 1, entry)


	def delete (self, h: int):
		if h not in self.entries:
			raise KeyAbsentError(f"no entry with handle {h}")
		bucket = self.where.pop(h)
		bucket.take(bucket.positionOf(self.slotOf.pop(h)))
		del self.entries[h]
		bucket.owner.refreshOne(bucket)
		self._shrinkBucket(bucket)



	# ======================================================
	#                   Split and Merge
	# ======================================================

	def _fill (self, bucket: Bucket, handles: List[int]):
		for i, h in enumerate(handles):
			self.slotOf[h] = bucket.place(i, h, self.entries[h].kind is EntryKind.ELEMENT)
			self.where[h] = bucket


	def _splitBucket (self, bucket: Bucket):
		sup = bucket.owner
		handles = bucket.handles()
		half = len(handles) // 2
		low = self._newBucket(sup)
		high = self._newBucket(sup)
		self._fill(low, handles[:half])
		self._fill(high, handles[half:])
		k = sup.buckets.index(bucket)
		sup.buckets[k:k + 1] = [low, high]
		sup.refresh()
		if len(sup.buckets) > 2 * self.sq:
			self._splitSuper(sup)


	def _shrinkBucket (self, bucket: Bucket):
		sup = bucket.owner
		if bucket.size >= self.sq or len(sup.buckets) == 1:
			if len(sup.buckets) == 1 and bucket.size == 0 and (sup.prev or sup.next):
				self._unlinkSuper(sup)
			return
		k = sup.buckets.index(bucket)
		if k + 1 < len(sup.buckets):
			left, right = bucket, sup.buckets[k + 1]
		else:
			left, right = sup.buckets[k - 1], bucket
		handles = left.handles() + right.handles()
		at = sup.buckets.index(left)
		if len(handles) > 2 * self.sq:
			# too many for one bucket, share them out evenly instead
			half = len(handles) // 2
			low = self._newBucket(sup)
			high = self._newBucket(sup)
			self._fill(low, handles[:half])
			self._fill(high, handles[half:])
			sup.buckets[at:at + 2] = [low, high]
			sup.refresh()
			return
		merged = self._newBucket(sup)
		self._fill(merged, handles)
		sup.buckets[at:at + 2] = [merged]
		sup.refresh()
		if len(sup.buckets) < self.sq:
			self._shrinkSuper(sup)


	def _splitSuper (self, sup: SuperBucket):
		half = len(sup.buckets) // 2
		fresh = SuperBucket()
		fresh.buckets = sup.buckets[half:]
		sup.buckets = sup.buckets[:half]
		for b in fresh.buckets:
			b.owner = fresh
		fresh.prev, fresh.next = sup, sup.next
		if sup.next is not None:
			sup.next.prev = fresh
		sup.next = fresh
		sup.refresh()
		fresh.refresh()


	def _unlinkSuper (self, sup: SuperBucket):
		if sup.prev is not None:
			sup.prev.next = sup.next
		else:
			self.firstSuper = sup.next
		if sup.next is not None:
			sup.next.prev = sup.prev


	def _shrinkSuper (self, sup: SuperBucket):
		if sup.next is not None:
			left, right = sup, sup.next
		elif sup.prev is not None:
			left, right = sup.prev, sup
		else:
			return
		for b in right.buckets:
			b.owner = left
		left.buckets.extend(right.buckets)
		self._unlinkSuper(right)
		left.refresh()
		if len(left.buckets) > 2 * self.sq:
			self._splitSuper(left)



	# ======================================================
	#                        Audit
	# ======================================================

	def auditProblems (self) -> List[str]:
		problems = []
		supers = 0
		sup = self.firstSuper
		lastOrder = None
		run = longest = 0
		while sup is not None:
			supers += 1
			expected = 0
			for k, b in enumerate(sup.buckets):
				if b.summary:
					expected |= 1 << k
				if b.size > 2 * self.sq:
					problems.append(f"bucket of size {b.size} above {2 * self.sq}")
				summary = 0
				for i, h in enumerate(b.handles()):
					e = self.entries[h]
					if self.where[h] is not b:
						problems.append(f"handle {h} points at the wrong bucket")
					if e.kind is EntryKind.ELEMENT:
						summary |= 1 << i
						run = 0
					else:
						run += 1
						longest = max(longest, run)
					if lastOrder is not None and e.order <= lastOrder:
						problems.append(f"order broken at handle {h}")
					lastOrder = e.order
				if summary != b.summary:
					problems.append(f"bucket summary {b.summary:b} should be {summary:b}")
			if expected != sup.summary:
				problems.append(f"superbucket summary {sup.summary:b} should be {expected:b}")
			if len(sup.buckets) > 2 * self.sq:
				problems.append(f"superbucket with {len(sup.buckets)} buckets")
			sup = sup.next

		if supers > 1:
			sup = self.firstSuper
			while sup is not None:
				if len(sup.buckets) < self.sq:
					problems.append(f"superbucket with only {len(sup.buckets)} buckets")
				for b in sup.buckets:
					if b.size < self.sq:
						problems.append(f"bucket of size {b.size} below {self.sq}")
				sup = sup.next
		if longest > 2 * self.w:
			problems.append(f"run of {longest} entries without an element")
		return problems



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
