'''
Audit

Brute-force recomputation of everything a RangeReporter keeps, compared
against what it actually holds. Every mismatch becomes an AuditError and
they are raised together in one ExceptionGroup.
'''
import sys
from typing import Dict, List, Optional, Set

from exceptiongroup import ExceptionGroup

import wordram.wordops as wordops
from wordram.errors import AuditError
from wordram.model_data_classes import EntryKind, NodeName, ProbeCounters, Variant



def branchingNodes (keys: List[int], w: int) -> Set[NodeName]:
	'''Branching nodes of the binary trie over sorted keys, root included.'''
	if not keys:
		return set()
	nodes = {NodeName(0, 0, 0)}
	for a, b in zip(keys, keys[1:]):
		nodes.add(wordops.lcaNode(a, b, w))
	return nodes


def _highestBelow (keys: List[int], lo: int, hi: int, w: int) -> Optional[NodeName]:
	inside = [k for k in keys if lo <= k <= hi]
	if not inside:
		return None
	if len(inside) == 1:
		return wordops.leafNode(inside[0], w)
	return wordops.lcaNode(inside[0], inside[-1], w)


def lbaDepth (node0: int, key: int, branching: Set[NodeName], w: int) -> Optional[int]:
	'''Depth of the lowest branching strict ancestor of the order-0 node at depth node0 on key's path.'''
	for d in range(node0 - 1, -1, -1):
		if NodeName(0, d, key >> (w - d)) in branching:
			return d
	return None


def mandatedKeys (rr, keys: List[int], branching: Set[NodeName]) -> Dict[NodeName, int]:
	geom = rr.geom
	w, B = geom.w, geom.B
	out: Dict[NodeName, int] = {}
	for t in range(geom.top):
		L = wordops.chunkLength(t, B)
		branchT = {wordops.mapNode(b, t, B, w) for b in branching}
		for x in keys:
			d = 1
			while d * L < w:
				node = wordops.nodeOnPath(x, t, d, B, w)
				if node not in out:
					onPath = lambda dd: wordops.nodeOnPath(x, t, dd, B, w) in branchT
					mandated = onPath(d) or onPath(d - 1)
					if not mandated and rr.config.variant is Variant.FAST_QUERY_5B and d % B:
						mandated = any(onPath(e) for e in range(d - d % B, d))
					if mandated:
						out[node] = lbaDepth(d * L, x, branching, w)
				d += 1
	return out


def auditRange (rr):
	problems: List[str] = []
	w = rr.w
	keys = list(rr.predS)
	if keys != sorted(keys):
		problems.append("predecessor list is not sorted")
	if set(keys) != set(rr.leaves):
		problems.append("leaf records differ from S")

	# branching table and its links
	branching = branchingNodes(keys, w)
	if set(rr.table) != branching:
		problems.append(f"branching table differs: extra {set(rr.table) - branching}, missing {branching - set(rr.table)}")
	for node in branching & set(rr.table):
		rec = rr.table[node]
		expectAnc = lbaDepth(node.d, node.p << (w - node.d), branching, w)
		gotAnc = None if rec.ancestor is None else rec.ancestor.d
		if gotAnc != expectAnc:
			problems.append(f"{node}: ancestor depth {gotAnc}, expected {expectAnc}")
		lo, hi = wordops.keyRange(node, 2, w)
		mid = lo + (hi - lo + 1) // 2
		if rec.desc_left != _highestBelow(keys, lo, mid - 1, w):
			problems.append(f"{node}: left descendant {rec.desc_left}")
		if rec.desc_right != _highestBelow(keys, mid, hi, w):
			problems.append(f"{node}: right descendant {rec.desc_right}")
		openE, closeE = rr.nav.entry(rec.open_h), rr.nav.entry(rec.close_h)
		if openE.kind is not EntryKind.OPEN or openE.owner != node:
			problems.append(f"{node}: open handle points at {openE}")
		if closeE.kind is not EntryKind.CLOSE or closeE.owner != node:
			problems.append(f"{node}: close handle points at {closeE}")
	for x, leaf in rr.leaves.items():
		e = rr.nav.entry(leaf.element_h)
		if e.kind is not EntryKind.ELEMENT or e.key != x:
			problems.append(f"leaf {x}: element handle points at {e}")

	# S-bar list: order, parentheses, summaries
	problems.extend(rr.nav.auditProblems())
	stack: List[List] = []
	orders = []
	for h in rr.nav.handles():
		e = rr.nav.entry(h)
		orders.append(e.order)
		if e.kind is EntryKind.OPEN:
			stack.append([e.owner, 0])
		elif e.kind is EntryKind.CLOSE:
			if not stack or stack[-1][0] != e.owner:
				problems.append(f"close of {e.owner} does not match")
				continue
			owner, inside = stack.pop()
			if inside == 0:
				problems.append(f"parentheses of {owner} enclose no element")
			if stack:
				stack[-1][1] += inside
		else:
			if stack:
				stack[-1][1] += 1
	if stack:
		problems.append(f"{len(stack)} unclosed parentheses")
	if set(orders) != set(rr.sbarHandles) or list(rr.predBar) != sorted(orders):
		problems.append("S-bar predecessor structure differs from the list")

	# ancestor index
	expected = mandatedKeys(rr, keys, branching)
	saved = rr.index.counters
	rr.index.counters = ProbeCounters()
	for node, depth in expected.items():
		got = rr.index.get(node)
		if got != depth:
			problems.append(f"index {node}: {got}, expected {depth}")
	rr.index.counters = saved
	if len(rr.index) != len(expected):
		problems.append(f"index holds {len(rr.index)} entries, {len(expected)} mandated")

	if problems:
		raise ExceptionGroup("range reporter audit failed", [AuditError(p) for p in problems])



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
