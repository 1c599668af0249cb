import pytest

import wordram.wordops as wordops
from wordram.errors import ConfigError
from wordram.model_data_classes import NodeName, Role



def test_msb_and_lsb ():
	assert wordops.msb(1) == 0
	assert wordops.msb(0x80) == 7
	assert wordops.msb((1 << 64) - 1) == 63
	assert wordops.lsb(12) == 2
	assert wordops.lsb(1 << 40) == 40
	with pytest.raises(ValueError, match="msb of zero"):
		wordops.msb(0)


def test_portable_msb_agrees (rng):
	values = list(range(1, 2048)) + [int(x) | 1 for x in rng.integers(1, 1 << 62, size=500)]
	for x in values:
		assert wordops.msbPortable(x) == wordops.msb(x)


def test_lca_depth ():
	assert wordops.lcaDepth(0b0100, 0b0111, 4) == 2
	assert wordops.lcaDepth(0, 255, 8) == 0
	assert wordops.lcaDepth(0b10110000, 0b10110001, 8) == 7
	with pytest.raises(ValueError, match="identical keys have no proper LCA"):
		wordops.lcaDepth(5, 5, 8)


def test_lca_node ():
	assert wordops.lcaNode(0b10110000, 0b10100000, 8) == NodeName(0, 3, 0b101)


def test_word_params ():
	params = wordops.makeWordParams(64)
	assert params.lgw == 6
	with pytest.raises(ConfigError):
		wordops.makeWordParams(48)
	with pytest.raises(ConfigError):
		wordops.makeWordParams(1)
	for w in (4, 128):
		with pytest.raises(ConfigError, match="8, 16, 32, 64"):
			wordops.makeWordParams(w)
	assert [wordops.makeWordParams(w).lgw for w in wordops.WORD_SIZES] == [3, 4, 5, 6]


def test_top_order ():
	assert wordops.topOrder(64, 2) == 6
	assert wordops.topOrder(64, 4) == 3
	assert wordops.topOrder(64, 8) == 2
	assert wordops.topOrder(8, 2) == 3
	assert wordops.makeGeometry(64, 4).top == 3


def test_node_on_path_and_mapping ():
	key = 0b10110110
	assert wordops.nodeOnPath(key, 1, 1, 2, 8) == NodeName(1, 1, 0b10)
	assert wordops.nodeOnPath(key, 0, 8, 2, 8) == NodeName(0, 8, key)

	node = wordops.nodeOnPath(key, 0, 5, 2, 8)
	assert wordops.mapNode(node, 1, 2, 8) == NodeName(1, 2, 0b1011)
	assert wordops.mapNode(node, 2, 2, 8) == NodeName(2, 1, 0b1011)
	assert wordops.mapNode(node, 0, 2, 8) == node
	with pytest.raises(ValueError):
		wordops.mapNode(NodeName(1, 1, 0b10), 0, 2, 8)


def test_root_depth_caps_at_w ():
	# order 2 edges of 16 bits overshoot an 8-bit key
	assert wordops.rootDepth0(NodeName(2, 1, 0b10110110), 4, 8) == 8
	assert wordops.rootDepth0(NodeName(1, 1, 0b10), 2, 8) == 2


def test_parent_node ():
	node = NodeName(0, 3, 0b101)
	assert wordops.parentNode(node, 2, 8) == NodeName(0, 2, 0b10)
	assert wordops.parentNode(NodeName(1, 2, 0b1011), 2, 8) == NodeName(1, 1, 0b10)
	with pytest.raises(ValueError):
		wordops.parentNode(NodeName(0, 0, 0), 2, 8)


def test_ancestry ():
	root = NodeName(0, 0, 0)
	node = NodeName(0, 3, 0b101)
	assert wordops.isAncestor(root, node, 2, 8)
	assert not wordops.isAncestor(node, node, 2, 8)
	assert wordops.isPrefixOrSelf(node, node, 2, 8)
	assert wordops.isAncestor(node, wordops.leafNode(0b10111111, 8), 2, 8)
	assert not wordops.isAncestor(node, wordops.leafNode(0b11111111, 8), 2, 8)


def test_key_range ():
	assert wordops.keyRange(NodeName(0, 2, 0b10), 2, 8) == (128, 191)
	assert wordops.keyRange(NodeName(0, 0, 0), 2, 8) == (0, 255)
	assert wordops.keyRange(wordops.leafNode(17, 8), 2, 8) == (17, 17)


def test_natural_subtree_role ():
	assert wordops.naturalSubtreeRole(NodeName(0, 4, 0), 4) is Role.ROOT
	assert wordops.naturalSubtreeRole(NodeName(0, 5, 0), 4) is Role.INTERIOR


def test_encoding_is_injective ():
	geom = wordops.makeGeometry(8, 2)
	nodes = set()
	for t in range(geom.top + 1):
		for d in range(0, 8 // (2 ** t) + 1):
			for key in (0, 0b10110110, 255):
				nodes.add(wordops.nodeOnPath(key, t, d, 2, 8))
	codes = {wordops.encodeNode(n, geom) for n in nodes}
	assert len(codes) == len(nodes)
	for n in nodes:
		code = wordops.encodeNode(n, geom)
		assert code < (1 << wordops.encodedBits(geom))
		assert wordops.decodeNode(code, geom) == n


@pytest.mark.parametrize('B', [2, 4, 8])
def test_every_byte_node_decodes_back (B):
	geom = wordops.makeGeometry(8, B)
	codes = set()
	for t in range(geom.top + 1):
		L = wordops.chunkLength(t, B)
		for d in range(-(-8 // L) + 1):
			for p in range(1 << min(d * L, 8)):
				node = NodeName(t, d, p)
				code = wordops.encodeNode(node, geom)
				assert code < (1 << wordops.encodedBits(geom))
				assert wordops.decodeNode(code, geom) == node
				codes.add(code)
	assert len(codes) == sum(
		1 << min(d * B ** t, 8)
		for t in range(geom.top + 1)
		for d in range(-(-8 // B ** t) + 1)
	)
