'''
Predecessor

PredSet keeps a set of w-bit keys as a sorted doubly-linked list and
answers predecessor/successor queries through an index:

 - YFastIndex: keys grouped into buckets of about w keys (SortedList),
   each bucket named by a representative. Representatives live in an
   x-fast trie, one dict of prefixes per level holding the smallest and
   largest representative below that prefix. Representative 0 is always
   there so every key has a bucket.
 - SortedIndex: one SortedList, for audits.

pred/succ queries are counted in `queryCount`; list walks are not.
'''
import sys
from typing import Dict, Iterator, List, Optional, Tuple

from sortedcontainers import SortedList

from wordram.errors import ConfigError



# ======================================================
#                     Sorted Index
# ======================================================

class SortedIndex:

	def __init__ (self, w: int):
		self.w = w
		self.keys = SortedList()

	def add (self, x: int):
		self.keys.add(x)

	def discard (self, x: int):
		self.keys.discard(x)

	def floor (self, x: int) -> Optional[int]:
		i = self.keys.bisect_right(x)
		return self.keys[i - 1] if i > 0 else None



# ======================================================
#                   Y-fast Index
# ======================================================

class YFastIndex:

	def __init__ (self, w: int):
		self.w = w
		self.levels: List[Dict[int, List[int]]] = [dict() for _ in range(w + 1)]
		self.repPrev: Dict[int, Optional[int]] = {0: None}
		self.repNext: Dict[int, Optional[int]] = {0: None}
		self.buckets: Dict[int, SortedList] = {0: SortedList()}
		self._trieAdd(0)


	# --------------- x-fast trie over representatives ---------------

	def _trieAdd (self, rep: int):
		for l in range(self.w + 1):
			prefix = rep >> (self.w - l)
			node = self.levels[l].get(prefix)
			if node is None:
				self.levels[l][prefix] = [rep, rep]
			else:
				node[0] = min(node[0], rep)
				node[1] = max(node[1], rep)


	def _trieRemove (self, rep: int):
		del self.levels[self.w][rep]
		for l in range(self.w - 1, -1, -1):
			prefix = rep >> (self.w - l)
			left = self.levels[l + 1].get(prefix << 1)
			right = self.levels[l + 1].get((prefix << 1) | 1)
			if left is None and right is None:
				del self.levels[l][prefix]
				continue
			node = self.levels[l][prefix]
			node[0] = left[0] if left is not None else right[0]
			node[1] = right[1] if right is not None else left[1]


	def floorRep (self, x: int) -> int:
		'''Largest representative <= x, by binary search on prefix length.'''
		lo, hi = 0, self.w
		while lo < hi:
			mid = (lo + hi + 1) // 2
			if (x >> (self.w - mid)) in self.levels[mid]:
				lo = mid
			else:
				hi = mid - 1
		if lo == self.w:
			return x
		node = self.levels[lo][x >> (self.w - lo)]
		if (x >> (self.w - lo - 1)) & 1:
			return node[1]
		return self.repPrev[node[0]]


	def _addRep (self, rep: int, keys: SortedList):
		below = self.floorRep(rep)
		after = self.repNext[below]
		self.repNext[below] = rep
		self.repPrev[rep] = below
		self.repNext[rep] = after
		if after is not None:
			self.repPrev[after] = rep
		self.buckets[rep] = keys
		self._trieAdd(rep)


	def _dropRep (self, rep: int) -> SortedList:
		before = self.repPrev.pop(rep)
		after = self.repNext.pop(rep)
		self.repNext[before] = after
		if after is not None:
			self.repPrev[after] = before
		self._trieRemove(rep)
		return self.buckets.pop(rep)


	# --------------------- bucket maintenance ---------------------

	def _split (self, rep: int):
		bucket = self.buckets[rep]
		half = len(bucket) // 2
		upper = SortedList(bucket[half:])
		del bucket[half:]
		self._addRep(upper[0], upper)


	def _rebalance (self, rep: int):
		bucket = self.buckets[rep]
		if len(bucket) > 2 * self.w:
			self._split(rep)
			return
		if len(bucket) >= max(1, self.w // 2):
			return
		after = self.repNext[rep]
		if after is not None:
			bucket.update(self._dropRep(after))
			if len(bucket) > 2 * self.w:
				self._split(rep)
		elif rep != 0:
			before = self.repPrev[rep]
			self.buckets[before].update(self._dropRep(rep))
			if len(self.buckets[before]) > 2 * self.w:
				self._split(before)


	# -------------------------- interface --------------------------

	def add (self, x: int):
		rep = self.floorRep(x)
		self.buckets[rep].add(x)
		self._rebalance(rep)


	def discard (self, x: int):
		rep = self.floorRep(x)
		bucket = self.buckets[rep]
		bucket.discard(x)
		if rep != 0 and x == rep:
			# non-zero representatives are the minimum of their bucket
			self._dropRep(rep)
			if not bucket:
				return
			self._addRep(bucket[0], bucket)
			rep = bucket[0]
		self._rebalance(rep)


	def floor (self, x: int) -> Optional[int]:
		bucket = self.buckets[self.floorRep(x)]
		i = bucket.bisect_right(x)
		return bucket[i - 1] if i > 0 else None


	def representatives (self) -> Iterator[int]:
		rep = 0
		while rep is not None:
			yield rep
			rep = self.repNext[rep]



# ======================================================
#                       PredSet
# ======================================================

class PredSet:

	def __init__ (self, w: int, backend: str = 'yfast'):
		if backend == 'yfast':
			self.index = YFastIndex(w)
		elif backend == 'sorted':
			self.index = SortedIndex(w)
		else:
			raise ConfigError(f"unknown predecessor backend {backend!r}")
		self.w = w
		self.prevOf: Dict[int, Optional[int]] = {}
		self.nextOf: Dict[int, Optional[int]] = {}
		self.head: Optional[int] = None
		self.tail: Optional[int] = None
		self.queryCount = 0


	def __len__ (self) -> int:
		return len(self.prevOf)


	def __contains__ (self, x: int) -> bool:
		return x in self.prevOf


	def __iter__ (self) -> Iterator[int]:
		x = self.head
		while x is not None:
			yield x
			x = self.nextOf[x]


	def insert (self, x: int) -> Tuple[Optional[int], Optional[int], bool]:
		'''Returns (prev, next, inserted); a duplicate leaves everything as it was.'''
		if x in self.prevOf:
			return self.prevOf[x], self.nextOf[x], False
		before = self.index.floor(x)
		after = self.head if before is None else self.nextOf[before]
		self.index.add(x)

		self.prevOf[x] = before
		self.nextOf[x] = after
		if before is None:
			self.head = x
		else:
			self.nextOf[before] = x
		if after is None:
			self.tail = x
		else:
			self.prevOf[after] = x
		return before, after, True


	def delete (self, x: int) -> bool:
		if x not in self.prevOf:
			return False
		before = self.prevOf.pop(x)
		after = self.nextOf.pop(x)
		self.index.discard(x)
		if before is None:
			self.head = after
		else:
			self.nextOf[before] = after
		if after is None:
			self.tail = before
		else:
			self.prevOf[after] = before
		return True


	def neighbors (self, x: int) -> Tuple[Optional[int], Optional[int]]:
		return self.prevOf[x], self.nextOf[x]


	def predQuery (self, x: int) -> Optional[int]:
		'''Largest key <= x.'''
		self.queryCount += 1
		return self.index.floor(x)


	def succQuery (self, x: int) -> Optional[int]:
		'''Smallest key >= x.'''
		self.queryCount += 1
		if x in self.prevOf:
			return x
		below = self.index.floor(x)
		return self.head if below is None else self.nextOf[below]



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
