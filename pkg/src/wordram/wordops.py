'''
Word Operations

Bit tricks on w-bit keys and the naming of trie nodes.

A node of the order-t trie is named (t, d, p): its depth d in that trie
and the prefix p holding the first min(d * B**t, w) bits of any key
below it. Order 0 is the plain binary trie.
'''
import sys
from typing import Tuple

from wordram.errors import ConfigError
from wordram.model_data_classes import NodeName, Role, TrieGeometry, WordParams



WORD_SIZES = (8, 16, 32, 64)


def makeWordParams (w: int) -> WordParams:
	if w not in WORD_SIZES:
		raise ConfigError(f"w must be one of {', '.join(map(str, WORD_SIZES))}, got {w}")
	return WordParams(w=w, lgw=w.bit_length() - 1)


def makeGeometry (w: int, B: int) -> TrieGeometry:
	params = makeWordParams(w)
	if B < 2:
		raise ConfigError(f"B must be >= 2, got {B}")
	return TrieGeometry(
		w=w,
		B=B,
		top=topOrder(w, B),
		depthBits=w.bit_length(),
		orderBits=max(1, params.lgw.bit_length()),
	)



# ======================================================
#                   Single-word Bits
# ======================================================

def msb (x: int) -> int:
	if x <= 0:
		raise ValueError("msb of zero")
	return x.bit_length() - 1


def msbPortable (x: int) -> int:
	'''
	Same answer as msb() but only with shifts and compares, a binary
	search over the halves of the word.
	'''
	if x <= 0:
		raise ValueError("msb of zero")
	pos = 0
	shift = 1
	while (x >> shift) > 0:
		shift <<= 1
	while shift > 0:
		if (x >> shift) > 0:
			x >>= shift
			pos += shift
		shift >>= 1
	return pos


def lsb (x: int) -> int:
	if x <= 0:
		raise ValueError("lsb of zero")
	return (x & -x).bit_length() - 1


def lcaDepth (a: int, b: int, w: int) -> int:
	'''Depth in the binary trie of the deepest common ancestor of two leaves.'''
	if a == b:
		raise ValueError("identical keys have no proper LCA")
	return w - 1 - msb(a ^ b)


def lcaNode (a: int, b: int, w: int) -> NodeName:
	d = lcaDepth(a, b, w)
	return NodeName(0, d, a >> (w - d))


def bitAt (x: int, depth: int, w: int) -> int:
	'''The bit of x that picks the child at binary depth `depth`.'''
	return (x >> (w - 1 - depth)) & 1



# ======================================================
#                    Trie Geometry
# ======================================================

def chunkLength (t: int, B: int) -> int:
	return B ** t


def topOrder (w: int, B: int) -> int:
	t = 0
	while B ** t < w:
		t += 1
	return t


def rootDepth0 (node: NodeName, B: int, w: int) -> int:
	'''Depth of the node in the binary trie, capped at w.'''
	return min(node.d * chunkLength(node.t, B), w)


def nodeOnPath (key: int, t: int, d: int, B: int, w: int) -> NodeName:
	d0 = min(d * chunkLength(t, B), w)
	return NodeName(t, d, key >> (w - d0))


def parentNode (node: NodeName, B: int, w: int) -> NodeName:
	if node.d == 0:
		raise ValueError("root has no parent")
	d0 = rootDepth0(node, B, w)
	up0 = min((node.d - 1) * chunkLength(node.t, B), w)
	return NodeName(node.t, node.d - 1, node.p >> (d0 - up0))


def leafNode (key: int, w: int) -> NodeName:
	return NodeName(0, w, key)


def mapNode (node: NodeName, t: int, B: int, w: int) -> NodeName:
	'''
	The order-t node on the path of `node`, at or above it. Only maps
	upward, t >= node.t.
	'''
	if t < node.t:
		raise ValueError("can only map to a coarser order")
	d0 = rootDepth0(node, B, w)
	chunk = chunkLength(t, B)
	newD = d0 // chunk
	return NodeName(t, newD, node.p >> (d0 - newD * chunk))


def naturalSubtreeRole (node: NodeName, B: int) -> Role:
	if node.d % B == 0:
		return Role.ROOT
	return Role.INTERIOR


def isAncestor (anc: NodeName, node: NodeName, B: int, w: int) -> bool:
	da = rootDepth0(anc, B, w)
	dn = rootDepth0(node, B, w)
	if da >= dn:
		return False
	return (node.p >> (dn - da)) == anc.p


def isPrefixOrSelf (anc: NodeName, node: NodeName, B: int, w: int) -> bool:
	da = rootDepth0(anc, B, w)
	dn = rootDepth0(node, B, w)
	if da > dn:
		return False
	return (node.p >> (dn - da)) == anc.p


def keyRange (node: NodeName, B: int, w: int) -> Tuple[int, int]:
	'''Smallest and largest key in the subtree of `node`.'''
	d0 = rootDepth0(node, B, w)
	low = node.p << (w - d0)
	return low, low | ((1 << (w - d0)) - 1)



# ======================================================
#                     Node Encoding
# ======================================================

def encodeNode (node: NodeName, geom: TrieGeometry) -> int:
	'''
	Pack a node name into one integer of w + depthBits + orderBits bits:
	the prefix left-aligned in w bits, then d, then t.
	'''
	d0 = rootDepth0(node, geom.B, geom.w)
	aligned = node.p << (geom.w - d0)
	return (((aligned << geom.depthBits) | node.d) << geom.orderBits) | node.t


def decodeNode (code: int, geom: TrieGeometry) -> NodeName:
	t = code & ((1 << geom.orderBits) - 1)
	code >>= geom.orderBits
	d = code & ((1 << geom.depthBits) - 1)
	aligned = code >> geom.depthBits
	d0 = min(d * chunkLength(t, geom.B), geom.w)
	return NodeName(t, d, aligned >> (geom.w - d0))


def encodedBits (geom: TrieGeometry) -> int:
	return geom.w + geom.depthBits + geom.orderBits



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
