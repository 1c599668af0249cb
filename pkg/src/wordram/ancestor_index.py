'''
Ancestor Index

Maps trie nodes of every order below the top one to the depth of the
lowest branching strict ancestor of their order-0 root. Only the nodes
the queries need are kept exact:
 - branching nodes of T_t (roots excluded),
 - active children of branching nodes,
 - for the fast-query variant, active nodes with a branching ancestor in
   the same natural depth-B subtree.
Everything else may read back as garbage, which test_branching and
verify_lba filter out.

Two backends: a plain dict, and a Bloomier filter storing depth + 1.
'''
import math
import sys
from typing import Dict, FrozenSet, List, Optional, Tuple

import wordram.wordops as wordops
from wordram.bloomier import BloomierFilter, makeBloomierConfig
from wordram.model_data_classes import Backend, NodeName, ProbeCounters, RangeConfig, TrieGeometry, Variant



INDEX_EPSILON = 0.25

# None means the path is not active in that state
PathDepths = Optional[List[int]]



class AncestorIndex:

	def __init__ (self, config: RangeConfig, geom: TrieGeometry):
		self.config = config
		self.geom = geom
		self.counters = ProbeCounters()
		self.exact: Optional[Dict[int, int]] = None
		self.filter: Optional[BloomierFilter] = None
		self.stored = 0

		if config.backend is Backend.EXACT:
			self.exact = {}
		else:
			u_bits = wordops.encodedBits(geom)
			n = 4 * max(1, config.capacity) * (geom.top + 2)
			if config.variant is Variant.FAST_QUERY_5B:
				n *= config.B
			n = min(n, 1 << (u_bits - 1))
			r = max(1, math.ceil(math.log2(geom.w + 1)))
			bcfg = makeBloomierConfig(n, u_bits, r, INDEX_EPSILON)
			self.filter = BloomierFilter(bcfg, config.seed)


	def __len__ (self) -> int:
		return self.stored


	def get (self, node: NodeName) -> Optional[int]:
		self.counters.indexReads += 1
		code = wordops.encodeNode(node, self.geom)
		if self.exact is not None:
			return self.exact.get(code)
		value = self.filter.lookup(code)
		return value - 1 if value else None


	def add (self, node: NodeName, depth: int):
		self.counters.indexWrites += 1
		self.stored += 1
		code = wordops.encodeNode(node, self.geom)
		if self.exact is not None:
			self.exact[code] = depth
		else:
			self.filter.insert(code, depth + 1)


	def change (self, node: NodeName, depth: int):
		self.counters.indexWrites += 1
		code = wordops.encodeNode(node, self.geom)
		if self.exact is not None:
			self.exact[code] = depth
		else:
			self.filter.update(code, depth + 1)


	def discard (self, node: NodeName):
		self.counters.indexWrites += 1
		self.stored -= 1
		code = wordops.encodeNode(node, self.geom)
		if self.exact is not None:
			del self.exact[code]
		else:
			self.filter.delete(code)


	def space_bits (self) -> int:
		if self.filter is not None:
			return self.filter.space_bits()
		return len(self.exact) * (wordops.encodedBits(self.geom) + self.geom.depthBits)



# ======================================================
#                   Mandated Entries
# ======================================================

def pathChunks (depths: PathDepths, L: int) -> Optional[FrozenSet[int]]:
	'''Chunk numbers (depth // L) of the branching depths on a path. Chunk 0 always counts.'''
	if depths is None:
		return None
	return frozenset([0] + [b // L for b in depths])


def mandatedValue (
		node: NodeName,
		depths: PathDepths,
		chunks: Optional[FrozenSet[int]],
		L: int,
		geom: TrieGeometry,
		variant: Variant) -> Optional[int]:
	'''
	The value the index must hold for `node`, or None if the node is not
	mandated. `depths` are the order-0 branching depths along the node's
	path that can matter for it, `chunks` is pathChunks(depths, L).
	'''
	if depths is None or node.d == 0:
		return None
	r0 = node.d * L
	if r0 >= geom.w:
		return None

	d = node.d
	mandated = d in chunks or (d - 1) in chunks
	if not mandated and variant is Variant.FAST_QUERY_5B and d % geom.B:
		mandated = not chunks.isdisjoint(range(d - d % geom.B, d))
	if not mandated:
		return None

	best = None
	for b in depths:
		if b < r0 and (best is None or b > best):
			best = b
	return best


def refresh (
		index: AncestorIndex,
		geom: TrieGeometry,
		variant: Variant,
		dv: int,
		xKey: int,
		oldKey: Optional[int],
		dy: int,
		yInternal: bool,
		before: Tuple[PathDepths, PathDepths],
		after: Tuple[PathDepths, PathDepths]):
	'''
	Bring the index up to date after the branching node at depth dv on
	x's path appeared or disappeared. `oldKey` is any key below the old
	side descendant y at depth dy; the (old, x) path depth lists describe
	both states. Only entries whose mandated value differs get written.
	'''
	w, B = geom.w, geom.B
	fastQuery = variant is Variant.FAST_QUERY_5B
	# a path whose depth list did not change cannot change any entry
	oldMoves = oldKey is not None and before[0] != after[0]
	xMoves = before[1] != after[1]
	if not oldMoves and not xMoves:
		return

	L = 1
	for t in range(geom.top):
		if t:
			L *= B
		du = dv // L
		endD = du + 1
		if fastQuery:
			endD = max(du + 1, du - du % B + B - 1)

		candidates: Dict[NodeName, int] = {}
		if oldMoves:
			if du > 0:
				candidates[NodeName(t, du, oldKey >> (w - du * L))] = 0
			for d in range(du + 1, endD + 1):
				r0 = d * L
				if r0 <= dy and r0 < w:
					candidates[NodeName(t, d, oldKey >> (w - r0))] = 0
			if yInternal:
				dyT = dy // L
				if dyT > du and dyT * L < w:
					candidates[NodeName(t, dyT, oldKey >> (w - dyT * L))] = 0
		if xMoves:
			for d in range(du + 1, endD + 1):
				r0 = d * L
				if r0 < w:
					candidates.setdefault(NodeName(t, d, xKey >> (w - r0)), 1)
		if not candidates:
			continue

		chunksBefore = (pathChunks(before[0], L), pathChunks(before[1], L))
		chunksAfter = (pathChunks(after[0], L), pathChunks(after[1], L))
		for node, path in candidates.items():
			old = mandatedValue(node, before[path], chunksBefore[path], L, geom, variant)
			new = mandatedValue(node, after[path], chunksAfter[path], L, geom, variant)
			if old == new:
				continue
			if old is None:
				index.add(node, new)
			elif new is None:
				index.discard(node)
			else:
				index.change(node, new)



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
