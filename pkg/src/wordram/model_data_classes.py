'''
Model Data Classes

These classes hold the configuration, records and reports of the
library as attrs classes instead of loose tuples and dicts. Configs
are validated by the factory functions in each module and then frozen;
records that the structures mutate in place are plain @define classes.

Reports are frozen too, and get turned into JSON/CSV by export.py
through cattrs, so field names here are the keys that show up in the
output. Keep them stable.
https://www.attrs.org/en/stable/
'''

import enum
import sys
from typing import Dict, Optional, Tuple
from attrs import define, frozen



# ======================================================
#                       Enums
# ======================================================

class Variant (enum.Enum):
	CORE = 'core'
	FAST_UPDATE_5A = '5a'
	FAST_QUERY_5B = '5b'


class Backend (enum.Enum):
	EXACT = 'exact'
	BLOOMIER = 'bloomier'


class EntryKind (enum.Enum):
	ELEMENT = 'element'
	OPEN = 'open'
	CLOSE = 'close'


class Role (enum.Enum):
	ROOT = 'root'
	INTERIOR = 'interior'


class Strategy (enum.Enum):
	QUERY_HEAVY = 'query-heavy'
	UPDATE_HEAVY = 'update-heavy'



# ======================================================
#                  Words and Trie Nodes
# ======================================================

@frozen
class WordParams:
	w: int
	lgw: int


@frozen(order=True)
class NodeName:
	'''
	A node of the trie of order t: depth d in that trie, and the
	prefix p made of the leading bits of every key under it.
	Depth counts edges, so roots sit at d = 0.
	'''
	t: int
	d: int
	p: int


@frozen
class TrieGeometry:
	'''
	Chunking of w-bit keys into tries of order 0..top, where one edge of
	the order-t trie covers B**t bits of a key.
	'''
	w: int
	B: int
	top: int
	depthBits: int
	orderBits: int



# ======================================================
#                  Structure Configs
# ======================================================

@frozen
class PerfectHashConfig:
	n: int
	u_bits: int
	c: int
	kappa: int
	v: int
	r: int
	s: int
	j: int
	spill_capacity: int
	clamped: Tuple[str, ...]

	@property
	def range_size (self) -> int:
		return self.r * self.j + self.spill_capacity


@frozen
class BloomierConfig:
	n: int
	u_bits: int
	r: int
	epsilon: float
	v_bits: int
	clamped: Tuple[str, ...]

	@property
	def v (self) -> int:
		return 1 << self.v_bits


@frozen
class RangeConfig:
	w: int
	B: int
	variant: Variant
	backend: Backend
	capacity: int
	audit: bool
	seed: int


@frozen
class GtScheme:
	'''
	Layout of the greater-than game over a B-ary tree with L levels.
	Level l (1..L) gets a contiguous block: on-path bits first, then
	(update-heavy only) the left-sibling bits.
	'''
	n: int
	B: int
	L: int
	strategy: Strategy
	on_offsets: Tuple[int, ...]
	sib_offsets: Tuple[int, ...]
	total_bits: int



# ======================================================
#                 Range Reporting Records
# ======================================================

@frozen
class SBarEntry:
	'''
	One entry of the list over S-bar. `coord` is the doubled-universe
	coordinate, `order` the full ordering key (coordinate plus the
	nesting tie-break), `owner` the branching node of a parenthesis.
	'''
	kind: EntryKind
	coord: int
	order: int
	owner: Optional[NodeName] = None
	key: Optional[int] = None


@define
class BranchingRecord:
	node: NodeName
	ancestor: Optional[NodeName]
	desc_left: Optional[NodeName]
	desc_right: Optional[NodeName]
	open_h: int
	close_h: int

	def desc (self, side: int) -> Optional[NodeName]:
		return self.desc_right if side else self.desc_left

	def setDesc (self, side: int, node: Optional[NodeName]):
		if side:
			self.desc_right = node
		else:
			self.desc_left = node


@define
class LeafRecord:
	key: int
	element_h: int


@define
class ProbeCounters:
	testBranching: int = 0
	navQueries: int = 0
	predQueries: int = 0
	indexReads: int = 0
	indexWrites: int = 0

	def add (self, other: 'ProbeCounters'):
		self.testBranching += other.testBranching
		self.navQueries += other.navQueries
		self.predQueries += other.predQueries
		self.indexReads += other.indexReads
		self.indexWrites += other.indexWrites

	def maxWith (self, other: 'ProbeCounters'):
		self.testBranching = max(self.testBranching, other.testBranching)
		self.navQueries = max(self.navQueries, other.navQueries)
		self.predQueries = max(self.predQueries, other.predQueries)
		self.indexReads = max(self.indexReads, other.indexReads)
		self.indexWrites = max(self.indexWrites, other.indexWrites)



# ======================================================
#                   CLI Run Spec
# ======================================================

@frozen
class RunSpec:
	command: str
	w: int = 64
	B: Tuple[int, ...] = (2,)
	variant: Variant = Variant.CORE
	backend: Backend = Backend.EXACT
	n: Optional[int] = None
	u_bits: int = 32
	r: int = 8
	epsilon: float = 2.0 ** -6
	ops: Optional[int] = None
	trials: int = 100000
	seed: int = 0
	audit: bool = False
	fmt: str = 'json'
	strategies: Tuple[Strategy, ...] = (Strategy.QUERY_HEAVY, Strategy.UPDATE_HEAVY)
	exhaustive: bool = False
	exhaustive_every: int = 0
	empty: bool = False
	out: Optional[str] = None



# ======================================================
#                      Reports
# ======================================================

@frozen
class FuzzReport:
	w: int
	B: int
	variant: Variant
	backend: Backend
	ops: int
	seed: int
	audit: bool
	inserts: int
	deletes: int
	queries: int
	reports: int
	mismatches: int
	final_size: int
	max_test_branching: int
	max_nav_queries: int
	max_pred_queries: int
	max_index_reads: int
	max_index_writes: int
	envelopes: Dict[str, bool]
	ok: bool


@frozen
class StructureSpace:
	name: str
	keys: int
	measured_bits: int
	reference_bits: float
	C_measured: float
	layout_bits: float
	C_layout: float
	limit_bits: float
	ok: bool


@frozen
class SpaceReport:
	n: int
	u_bits: int
	r: int
	epsilon: float
	seed: int
	perfect_hash: StructureSpace
	bloomier: StructureSpace
	ok: bool


@frozen
class FpRateReport:
	n: int
	u_bits: int
	r: int
	epsilon: float
	trials: int
	seed: int
	seed_used: int
	attempts: int
	stored_lookups: int
	stored_errors: int
	fp_rate: float
	space_bits: int
	C_measured: float
	ok: bool


@frozen
class PerfectHashReport:
	n: int
	u_bits: int
	ops: int
	seed: int
	seed_used: int
	attempts: int
	range: int
	spill_peak: int
	spill_limit: int
	space_bits: int
	injective: bool
	ok: bool


@frozen
class SweepRow:
	B: int
	strategy: Strategy
	Tu_max: int
	Tq_max: int
	Tu_mean: float
	Tq_mean: float
	correct: bool



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
