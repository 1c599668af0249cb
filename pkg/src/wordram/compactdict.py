'''
Compact Dictionaries

 - VacancyTracker: which of j slots are in use. One bit per slot plus a
   summary bit per block, set iff the block has an allocated slot.
   alloc() always hands out the lowest free slot.
 - SmallDict: up to j keys of s bits, each with a distinct slot value in
   [0, j). Records are packed into one bitarray, sorted by key, and
   found by binary search.
 - PackedMap: an exact key -> value dictionary with fixed key and value
   widths, used where only the bit accounting has to be exact.

All three report space_bits() from their packed layout.
'''
import sys
from typing import Dict, Iterator, Optional, Tuple

from bitarray import bitarray
from bitarray.util import ba2int, int2ba, zeros

from wordram.errors import BucketFullError, CapacityExceededError, DuplicateKeyError, KeyAbsentError



HEADER_BITS = 64
MIN_CAPACITY = 4
MIN_KEY_BITS = 4


def slotBits (j: int) -> int:
	return max(1, (j - 1).bit_length())



# ======================================================
#                   Vacancy Tracker
# ======================================================

class VacancyTracker:

	def __init__ (self, j: int, blockBits: Optional[int] = None):
		self.j = j
		self.blockBits = blockBits or max(MIN_KEY_BITS, j.bit_length())
		self.blocks = (j + self.blockBits - 1) // self.blockBits
		self.occupied = zeros(j)
		self.summary = zeros(self.blocks)
		self.used = 0


	@property
	def free (self) -> int:
		return self.j - self.used


	def isAllocated (self, slot: int) -> bool:
		return bool(self.occupied[slot])


	def alloc (self) -> int:
		if self.used >= self.j:
			raise BucketFullError("bucket full")
		for b in range(self.blocks):
			start = b * self.blockBits
			if not self.summary[b]:
				slot = start
			else:
				slot = self.occupied.find(0, start, min(start + self.blockBits, self.j))
				if slot < 0:
					continue
			self.occupied[slot] = 1
			self.summary[b] = 1
			self.used += 1
			return slot
		raise BucketFullError("bucket full")


	def release (self, slot: int):
		if not self.occupied[slot]:
			raise KeyAbsentError(f"slot {slot} is not allocated")
		self.occupied[slot] = 0
		self.used -= 1
		b = slot // self.blockBits
		start = b * self.blockBits
		if not self.occupied[start:min(start + self.blockBits, self.j)].any():
			self.summary[b] = 0


	def space_bits (self) -> int:
		return self.j + self.blocks



# ======================================================
#                      Small Dict
# ======================================================

class SmallDict:

	def __init__ (self, j: int, s: int, blockBits: Optional[int] = None):
		self.j = max(MIN_CAPACITY, j)
		self.s = max(MIN_KEY_BITS, s)
		self.valueBits = slotBits(self.j)
		self.recordBits = self.s + self.valueBits
		self.store = zeros(self.j * self.recordBits)
		self.count = 0
		self.vacancy = VacancyTracker(self.j, blockBits)


	def __len__ (self) -> int:
		return self.count


	def _keyAt (self, i: int) -> int:
		start = i * self.recordBits
		return ba2int(self.store[start:start + self.s])


	def _valueAt (self, i: int) -> int:
		start = i * self.recordBits + self.s
		return ba2int(self.store[start:start + self.valueBits])


	def _search (self, key: int) -> Tuple[int, bool]:
		'''Position of key, or where it would go.'''
		lo, hi = 0, self.count
		while lo < hi:
			mid = (lo + hi) // 2
			k = self._keyAt(mid)
			if k == key:
				return mid, True
			if k < key:
				lo = mid + 1
			else:
				hi = mid
		return lo, False


	def insert (self, key: int) -> int:
		pos, found = self._search(key)
		if found:
			raise DuplicateKeyError("duplicate")
		if self.count >= self.j:
			raise BucketFullError("bucket full")
		slot = self.vacancy.alloc()

		rb = self.recordBits
		tail = self.store[pos * rb:self.count * rb]
		self.store[(pos + 1) * rb:(self.count + 1) * rb] = tail
		self.store[pos * rb:(pos + 1) * rb] = int2ba(key, self.s) + int2ba(slot, self.valueBits)
		self.count += 1
		return slot


	def lookup (self, key: int) -> Optional[int]:
		pos, found = self._search(key)
		if not found:
			return None
		return self._valueAt(pos)


	def __contains__ (self, key: int) -> bool:
		return self._search(key)[1]


	def delete (self, key: int):
		pos, found = self._search(key)
		if not found:
			raise KeyAbsentError(f"key {key} not in bucket")
		self.vacancy.release(self._valueAt(pos))

		rb = self.recordBits
		tail = self.store[(pos + 1) * rb:self.count * rb]
		self.store[pos * rb:(self.count - 1) * rb] = tail
		self.store[(self.count - 1) * rb:self.count * rb] = 0
		self.count -= 1


	def items (self) -> Iterator[Tuple[int, int]]:
		for i in range(self.count):
			yield self._keyAt(i), self._valueAt(i)


	def space_bits (self) -> int:
		return len(self.store) + self.vacancy.space_bits() + HEADER_BITS



# ======================================================
#                      Packed Map
# ======================================================

class PackedMap:
	'''
	Exact dictionary with keyBits-bit keys and valueBits-bit values. Kept
	in a dict; space_bits() is the size of serialize(), the sorted packed
	records plus a header.
	'''

	def __init__ (self, keyBits: int, valueBits: int, capacity: Optional[int] = None):
		self.keyBits = keyBits
		self.valueBits = valueBits
		self.capacity = capacity
		self.entries: Dict[int, int] = {}


	def __len__ (self) -> int:
		return len(self.entries)


	def __contains__ (self, key: int) -> bool:
		return key in self.entries


	def insert (self, key: int, value: int):
		if key in self.entries:
			raise DuplicateKeyError("duplicate")
		if self.capacity is not None and len(self.entries) >= self.capacity:
			raise CapacityExceededError(f"capacity {self.capacity} exceeded")
		self.entries[key] = value


	def update (self, key: int, value: int):
		if key not in self.entries:
			raise KeyAbsentError(f"key {key} absent")
		self.entries[key] = value


	def get (self, key: int, default: Optional[int] = None) -> Optional[int]:
		return self.entries.get(key, default)


	def delete (self, key: int):
		if key not in self.entries:
			raise KeyAbsentError(f"key {key} absent")
		del self.entries[key]


	def items (self) -> Iterator[Tuple[int, int]]:
		return iter(sorted(self.entries.items()))


	def serialize (self) -> bitarray:
		out = int2ba(len(self.entries), HEADER_BITS)
		for key, value in self.items():
			out += int2ba(key, self.keyBits)
			out += int2ba(value, self.valueBits)
		return out


	def space_bits (self) -> int:
		return len(self.entries) * (self.keyBits + self.valueBits) + HEADER_BITS



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
