'''
Range Reporting

Dynamic one-dimensional range reporting over w-bit keys. findany(a, b)
returns some key of S in [a, b] (or None) without touching the
predecessor structure; report(a, b) walks the sorted list from there.

State, keyed by nodes of the binary trie T_0 over S:
 - predS: predecessor structure and sorted list over S
 - nav: the list over S-bar, S with the Open and Close points of every
   branching node
 - predBar: predecessor structure over S-bar ordering keys, updates only
 - table: branching node -> BranchingRecord (ancestor, the two highest
   branching descendants, and the handles of its Open/Close)
 - leaves: key -> LeafRecord
 - index: the AncestorIndex over tries of every order

The root of T_0 counts as branching whenever S is not empty. Variants:
core (B = 2), 5a (cheaper updates, query walks up the natural subtree),
5b (update writes the natural subtree, query reads two entries).
'''
import sys
from typing import Dict, Iterator, Optional

import wordram.ancestor_index as ancestor_index
import wordram.audit as audit
import wordram.wordops as wordops
from wordram.errors import CapacityExceededError, ConfigError, OrderingError
from wordram.model_data_classes import (Backend, BranchingRecord, EntryKind, LeafRecord, NodeName, ProbeCounters,
                                        RangeConfig, Role, SBarEntry, Variant)
from wordram.navlist import NavList, orderKey
from wordram.predecessor import PredSet



ROOT = NodeName(0, 0, 0)
DEFAULT_CAPACITY = 1 << 16


def makeRangeConfig (
		w: int,
		B: int = 2,
		variant: Variant = Variant.CORE,
		backend: Backend = Backend.EXACT,
		capacity: Optional[int] = None,
		audit: bool = False,
		seed: int = 0) -> RangeConfig:
	wordops.makeWordParams(w)
	if B < 2 or B > w or (B & (B - 1)):
		raise ConfigError(f"B must be a power of two in [2, w], got {B}")
	if variant is Variant.CORE and B != 2:
		raise ConfigError(f"the core variant uses B = 2, got {B}")
	if capacity is None:
		capacity = min(1 << w, DEFAULT_CAPACITY)
	if capacity < 1:
		raise ConfigError(f"capacity must be >= 1, got {capacity}")
	return RangeConfig(w=w, B=B, variant=variant, backend=backend, capacity=capacity, audit=audit, seed=seed)



class RangeReporter:

	def __init__ (self, config: RangeConfig):
		self.config = config
		self.w = config.w
		self.geom = wordops.makeGeometry(config.w, config.B)

		self.predS = PredSet(self.w, 'sorted' if config.audit else 'yfast')
		barBits = orderKey(EntryKind.OPEN, 1 << (self.w + 1), self.w, self.w).bit_length()
		self.predBar = PredSet(barBits, 'sorted' if config.audit else 'yfast')
		self.nav = NavList(self.w, config.audit)
		self.sbarHandles: Dict[int, int] = {}
		self.table: Dict[NodeName, BranchingRecord] = {}
		self.leaves: Dict[int, LeafRecord] = {}
		self.index = ancestor_index.AncestorIndex(config, self.geom)

		self.lastOp = ProbeCounters()
		self.totals = ProbeCounters()


	def __len__ (self) -> int:
		return len(self.predS)


	def __contains__ (self, x: int) -> bool:
		return x in self.leaves


	def keys (self) -> Iterator[int]:
		return iter(self.predS)


	def _begin (self):
		self.lastOp = ProbeCounters()
		self.index.counters = self.lastOp


	def _finish (self):
		self.totals.add(self.lastOp)



	# ======================================================
	#                    S-bar Entries
	# ======================================================

	def _entry (self, kind: EntryKind, node: Optional[NodeName] = None, key: Optional[int] = None) -> SBarEntry:
		if kind is EntryKind.ELEMENT:
			coord = 2 * key + 1
			return SBarEntry(kind, coord, orderKey(kind, coord, self.w, self.w), key=key)
		lo, hi = wordops.keyRange(node, 2, self.w)
		coord = 2 * lo if kind is EntryKind.OPEN else 2 * hi + 2
		return SBarEntry(kind, coord, orderKey(kind, coord, node.d, self.w), owner=node)


	def _register (self, h: int):
		order = self.nav.entry(h).order
		self.sbarHandles[order] = h
		self.predBar.insert(order)
		self.lastOp.predQueries += 1


	def _unregister (self, h: int):
		order = self.nav.entry(h).order
		del self.sbarHandles[order]
		self.predBar.delete(order)
		self.lastOp.predQueries += 1
		self.nav.delete(h)


	def _blockEnds (self, h: int):
		'''First and last handle of the block of the subtree whose edge entry is h.'''
		entry = self.nav.entry(h)
		if entry.kind is EntryKind.ELEMENT:
			return wordops.leafNode(entry.key, self.w), h, h
		rec = self.table[entry.owner]
		return rec.node, rec.open_h, rec.close_h



	# ======================================================
	#                       Updates
	# ======================================================

	def insert (self, x: int) -> bool:
		'''Add x to S. Returns False if it was already there.'''
		if not 0 <= x < (1 << self.w):
			raise ConfigError(f"key {x} does not fit in {self.w} bits")
		if x not in self.leaves and len(self.leaves) >= self.config.capacity:
			raise CapacityExceededError(f"range reporter holds at most {self.config.capacity} keys")
		self._begin()
		try:
			inserted = self._insert(x)
		finally:
			self._finish()
		if inserted and self.config.audit:
			audit.auditRange(self)
		return inserted


	def _insertRootSide (self, x: int, first: bool):
		if first:
			openH = self.nav.insertFirst(self._entry(EntryKind.OPEN, ROOT))
			closeH = self.nav.insertAfter(openH, self._entry(EntryKind.CLOSE, ROOT))
			self._register(openH)
			self._register(closeH)
			self.table[ROOT] = BranchingRecord(ROOT, None, None, None, openH, closeH)
		root = self.table[ROOT]
		side = wordops.bitAt(x, 0, self.w)
		assert root.desc(side) is None, "root side already active"

		elem = self._entry(EntryKind.ELEMENT, key=x)
		if side == 0:
			elemH = self.nav.insertAfter(root.open_h, elem)
		else:
			elemH = self.nav.insertBefore(root.close_h, elem)
		self._register(elemH)
		root.setDesc(side, wordops.leafNode(x, self.w))
		self.leaves[x] = LeafRecord(x, elemH)

		ancestor_index.refresh(
			self.index, self.geom, self.config.variant,
			dv=0, xKey=x, oldKey=None, dy=self.w, yInternal=False,
			before=(None, None), after=(None, [0]),
		)


	def _insert (self, x: int) -> bool:
		prev, nxt, inserted = self.predS.insert(x)
		self.lastOp.predQueries += 1
		if not inserted:
			return False
		if prev is None and nxt is None:
			self._insertRootSide(x, first=True)
			return True

		dv, oldKey = self._deeperLca(x, prev, nxt)
		if dv == 0:
			self._insertRootSide(x, first=False)
			return True
		v = wordops.nodeOnPath(x, 0, dv, 2, self.w)

		# where x goes in S-bar tells us the block of y, the old subtree under v
		elem = self._entry(EntryKind.ELEMENT, key=x)
		barPrev, barNext, _ = self.predBar.insert(elem.order)
		self.lastOp.predQueries += 1
		if x < oldKey:
			y, yFirst, yLast = self._blockEnds(self.sbarHandles[barNext])
			elemH = self.nav.insertBefore(yFirst, elem)
			openH = self.nav.insertBefore(elemH, self._entry(EntryKind.OPEN, v))
			closeH = self.nav.insertAfter(yLast, self._entry(EntryKind.CLOSE, v))
		else:
			y, yFirst, yLast = self._blockEnds(self.sbarHandles[barPrev])
			elemH = self.nav.insertAfter(yLast, elem)
			openH = self.nav.insertBefore(yFirst, self._entry(EntryKind.OPEN, v))
			closeH = self.nav.insertAfter(elemH, self._entry(EntryKind.CLOSE, v))
		self.sbarHandles[elem.order] = elemH
		self._register(openH)
		self._register(closeH)

		# one of the enclosing parentheses sits right next to the new pair
		left = self.nav.entry(self.nav.prev(openH))
		if left.kind is EntryKind.OPEN:
			A = left.owner
		else:
			right = self.nav.entry(self.nav.next(closeH))
			assert right.kind is EntryKind.CLOSE, "new pair is not enclosed"
			A = right.owner

		ancRec = self.table[A]
		sideA = wordops.bitAt(x, A.d, self.w)
		assert ancRec.desc(sideA) == y, f"{A} does not lead to {y}"
		ancRec.setDesc(sideA, v)
		rec = BranchingRecord(v, A, None, None, openH, closeH)
		side = wordops.bitAt(x, dv, self.w)
		rec.setDesc(side, wordops.leafNode(x, self.w))
		rec.setDesc(1 - side, y)
		self.table[v] = rec
		yInternal = y.d < self.w
		if yInternal:
			self.table[y].ancestor = v
		self.leaves[x] = LeafRecord(x, elemH)

		oldBefore = [A.d, y.d] if yInternal else [A.d]
		oldAfter = [A.d, dv, y.d] if yInternal else [A.d, dv]
		ancestor_index.refresh(
			self.index, self.geom, self.config.variant,
			dv=dv, xKey=x, oldKey=oldKey, dy=y.d, yInternal=yInternal,
			before=(oldBefore, None), after=(oldAfter, [A.d, dv]),
		)
		return True


	def _deeperLca (self, x: int, prev: Optional[int], nxt: Optional[int]):
		dPrev = wordops.lcaDepth(x, prev, self.w) if prev is not None else -1
		dNext = wordops.lcaDepth(x, nxt, self.w) if nxt is not None else -1
		if dPrev >= dNext:
			return dPrev, prev
		return dNext, nxt


	def delete (self, x: int) -> bool:
		'''Remove x from S. Returns False if it was not there.'''
		if x not in self.leaves:
			return False
		self._begin()
		try:
			self._delete(x)
		finally:
			self._finish()
		if self.config.audit:
			audit.auditRange(self)
		return True


	def _delete (self, x: int):
		prev, nxt = self.predS.neighbors(x)
		self.predS.delete(x)
		self.lastOp.predQueries += 1
		leaf = self.leaves.pop(x)

		if prev is None and nxt is None:
			root = self.table.pop(ROOT)
			self._unregister(leaf.element_h)
			self._unregister(root.open_h)
			self._unregister(root.close_h)
			self._refreshRootSide(x)
			return

		dv, oldKey = self._deeperLca(x, prev, nxt)
		if dv == 0:
			self.table[ROOT].setDesc(wordops.bitAt(x, 0, self.w), None)
			self._unregister(leaf.element_h)
			self._refreshRootSide(x)
			return

		v = wordops.nodeOnPath(x, 0, dv, 2, self.w)
		rec = self.table.pop(v)
		A = rec.ancestor
		y = rec.desc(1 - wordops.bitAt(x, dv, self.w))
		self.table[A].setDesc(wordops.bitAt(x, A.d, self.w), y)
		yInternal = y.d < self.w
		if yInternal:
			self.table[y].ancestor = A

		self._unregister(leaf.element_h)
		self._unregister(rec.open_h)
		self._unregister(rec.close_h)

		oldBefore = [A.d, dv, y.d] if yInternal else [A.d, dv]
		oldAfter = [A.d, y.d] if yInternal else [A.d]
		ancestor_index.refresh(
			self.index, self.geom, self.config.variant,
			dv=dv, xKey=x, oldKey=oldKey, dy=y.d, yInternal=yInternal,
			before=(oldBefore, [A.d, dv]), after=(oldAfter, None),
		)


	def _refreshRootSide (self, x: int):
		ancestor_index.refresh(
			self.index, self.geom, self.config.variant,
			dv=0, xKey=x, oldKey=None, dy=self.w, yInternal=False,
			before=(None, [0]), after=(None, None),
		)



	# ======================================================
	#                       Queries
	# ======================================================

	def testBranching (self, u: NodeName) -> bool:
		'''Is u a branching node of its trie? Roots always are.'''
		self.lastOp.testBranching += 1
		if u.d == 0:
			return True
		d0 = wordops.rootDepth0(u, self.geom.B, self.w)
		if d0 >= self.w:
			return False
		D = self.index.get(u)
		if D is None or D >= d0:
			return False
		anc = self.table.get(NodeName(0, D, u.p >> (d0 - D)))
		if anc is None:
			return False
		for desc in (anc.desc_left, anc.desc_right):
			if desc is not None and desc.d < self.w and wordops.mapNode(desc, u.t, self.geom.B, self.w) == u:
				return True
		return False


	def verifyLba (self, rec: BranchingRecord, v: NodeName) -> bool:
		if not wordops.isAncestor(rec.node, v, 2, self.w):
			return False
		side = (v.p >> (v.d - rec.node.d - 1)) & 1
		desc = rec.desc(side)
		return desc is not None and wordops.isPrefixOrSelf(v, desc, 2, self.w)


	def _maxUnder (self, node: NodeName) -> int:
		if node.d >= self.w:
			return node.p
		self.lastOp.navQueries += 1
		h = self.nav.nearestElementLeft(self.table[node].close_h)
		return self.nav.entry(h).key


	def _minUnder (self, node: NodeName) -> int:
		if node.d >= self.w:
			return node.p
		self.lastOp.navQueries += 1
		h = self.nav.nearestElementRight(self.table[node].open_h)
		return self.nav.entry(h).key


	def _indexDepth (self, node: NodeName) -> Optional[int]:
		if node.d == 0:
			return 0
		return self.index.get(node)


	def _ancestorDepths (self, u: NodeName, z: NodeName) -> Iterator[Optional[int]]:
		variant = self.config.variant
		if variant is Variant.CORE:
			if wordops.naturalSubtreeRole(z, self.geom.B) is Role.INTERIOR:
				yield self._indexDepth(z)
			else:
				yield self._indexDepth(u)
		elif variant is Variant.FAST_UPDATE_5A:
			yield self._indexDepth(u)
			base = z.d - z.d % self.geom.B
			node = z
			while node.d > base:
				yield self._indexDepth(node)
				node = wordops.parentNode(node, self.geom.B, self.w)
		else:
			yield self._indexDepth(u)
			if z.d > 0:
				yield self._indexDepth(z)


	def findany (self, a: int, b: int) -> Optional[int]:
		if a > b:
			raise OrderingError("empty interval")
		self._begin()
		try:
			return self._findany(a, b)
		finally:
			self._finish()


	def _findany (self, a: int, b: int) -> Optional[int]:
		if not self.leaves:
			return None
		if a == b:
			return a if a in self.leaves else None

		dv = wordops.lcaDepth(a, b, self.w)
		v = wordops.nodeOnPath(a, 0, dv, 2, self.w)
		rec = self.table.get(v)
		if rec is not None:
			if rec.desc_left is not None:
				found = self._maxUnder(rec.desc_left)
				if a <= found <= b:
					return found
			if rec.desc_right is not None:
				found = self._minUnder(rec.desc_right)
				if a <= found <= b:
					return found
			return None

		# smallest order where v's node is branching; the top order always is
		lo, hi = 1, self.geom.top
		while lo < hi:
			mid = (lo + hi) // 2
			if self.testBranching(wordops.mapNode(v, mid, self.geom.B, self.w)):
				hi = mid
			else:
				lo = mid + 1
		u = wordops.mapNode(v, lo, self.geom.B, self.w)
		z = wordops.mapNode(v, lo - 1, self.geom.B, self.w)

		for D in self._ancestorDepths(u, z):
			if D is None or D >= dv:
				continue
			cand = self.table.get(NodeName(0, D, v.p >> (dv - D)))
			if cand is None or not self.verifyLba(cand, v):
				continue
			desc = cand.desc((v.p >> (dv - D - 1)) & 1)
			found = self._maxUnder(desc)
			if a <= found <= b:
				return found
			found = self._minUnder(desc)
			if a <= found <= b:
				return found
			return None
		return None


	def report (self, a: int, b: int) -> Iterator[int]:
		'''Keys of S in [a, b], ascending.'''
		start = self.findany(a, b)
		return self._walk(start, a, b)


	def _walk (self, start: Optional[int], a: int, b: int) -> Iterator[int]:
		if start is None:
			return
		cur = start
		while True:
			before = self.predS.prevOf[cur]
			if before is None or before < a:
				break
			cur = before
		while cur is not None and cur <= b:
			yield cur
			cur = self.predS.nextOf[cur]



	# ======================================================
	#                        Dump
	# ======================================================

	def dump (self) -> str:
		'''One line per branching node: name, ancestor depth, descendants.'''
		def name (node: Optional[NodeName]) -> str:
			if node is None:
				return '-'
			if node.d >= self.w:
				return f"leaf:{node.p}"
			return f"{node.d}:{node.p:0{max(1, node.d)}b}" if node.d else "0:root"

		lines = []
		for node in sorted(self.table):
			rec = self.table[node]
			anc = '-' if rec.ancestor is None else str(rec.ancestor.d)
			lines.append(f"{name(node)} anc={anc} L={name(rec.desc_left)} R={name(rec.desc_right)}")
		return '\n'.join(lines)



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
