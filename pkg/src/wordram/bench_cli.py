'''
Bench CLI

Command line front end. Each subcommand builds a RunSpec from its
options, lints it, runs the matching function in bench and prints the
payload to stdout. Status goes to stderr.

Exit codes: 0 success, 1 a run failed its checks, 2 bad parameters.

	python3 -m wordram.bench_cli oracle-fuzz --w 8 --ops 200 --audit
	python3 -m wordram.bench_cli probe-bench --n 65536 --B 16 --strategy both
'''
import time
from typing import Any, Callable, List, Optional, Tuple

import click
from exceptiongroup import ExceptionGroup

import wordram.bench as bench
import wordram.bloomier as bloomier
import wordram.export as export
import wordram.gtgame as gtgame
import wordram.perfecthash as perfecthash
import wordram.rangereport as rangereport
import wordram.text as text
from wordram.errors import ConfigError
from wordram.model_data_classes import Backend, RunSpec, Strategy, Variant



EXHAUSTIVE_FUZZ_MAX_W = 8
EXHAUSTIVE_GT_MAX_N = 4096
SEED_LIMIT = 1 << 64

STRATEGY_CHOICES = {
	'query-heavy': (Strategy.QUERY_HEAVY,),
	'update-heavy': (Strategy.UPDATE_HEAVY,),
	'both': (Strategy.QUERY_HEAVY, Strategy.UPDATE_HEAVY),
}



# ======================================================
#                        Lint
# ======================================================

def _tryConfig (messages: List[str], make: Callable[[], Any]):
	try:
		make()
	except ConfigError as e:
		messages.append(str(e))


def lintRunSpec (spec: RunSpec) -> Tuple[Optional[RunSpec], List[str]]:
	'''
	Checks every parameter before anything gets built. Returns either
	(spec, []) or (None, [error messages]).
	'''
	messages: List[str] = []
	if not 0 <= spec.seed < SEED_LIMIT:
		messages.append(f"seed must be in [0, 2^64), got {spec.seed}")
	if spec.ops is not None and spec.ops < 0:
		messages.append(f"ops must be >= 0, got {spec.ops}")
	if spec.trials < 1:
		messages.append(f"trials must be >= 1, got {spec.trials}")
	if spec.fmt not in ('json', 'csv'):
		messages.append(f"unknown format {spec.fmt}")

	if spec.command == 'oracle-fuzz':
		if len(spec.B) != 1:
			messages.append("oracle-fuzz takes exactly one --B")
		for B in spec.B:
			_tryConfig(messages, lambda: rangereport.makeRangeConfig(spec.w, B, spec.variant, spec.backend))
		if spec.exhaustive_every < 0:
			messages.append(f"exhaustive-every must be >= 0, got {spec.exhaustive_every}")
		if spec.exhaustive_every and spec.w > EXHAUSTIVE_FUZZ_MAX_W:
			messages.append(f"exhaustive interval checks need w <= {EXHAUSTIVE_FUZZ_MAX_W}, got {spec.w}")

	elif spec.command in ('space-report', 'fp-rate'):
		_tryConfig(messages, lambda: bloomier.makeBloomierConfig(spec.n, spec.u_bits, spec.r, spec.epsilon))
		if spec.command == 'space-report':
			_tryConfig(messages, lambda: perfecthash.makePerfectHashConfig(spec.n, spec.u_bits))

	elif spec.command == 'perfect-hash-demo':
		_tryConfig(messages, lambda: perfecthash.makePerfectHashConfig(spec.n, spec.u_bits))

	elif spec.command == 'probe-bench':
		for B in spec.B:
			for strategy in spec.strategies:
				_tryConfig(messages, lambda: gtgame.makeGtScheme(spec.n, B, strategy))
		if spec.exhaustive and spec.n > EXHAUSTIVE_GT_MAX_N:
			messages.append(f"exhaustive probe-bench needs n <= {EXHAUSTIVE_GT_MAX_N}, got {spec.n}")

	else:
		messages.append(f"unknown command {spec.command}")

	if messages:
		# the same message can come from several B values
		return None, list(dict.fromkeys(messages))
	return spec, []



# ======================================================
#                      Plumbing
# ======================================================

def _lintOrExit (ctx: click.Context, spec: RunSpec) -> RunSpec:
	spec, messages = lintRunSpec(spec)
	if spec is None:
		click.echo(text.statusLint(messages), err=True)
		ctx.exit(2)
	return spec


def _emit (ctx: click.Context, spec: RunSpec, report: Any, ok: bool, status: str, fields=None):
	payload = export.formatReport(report, spec.fmt, fields)
	click.echo(payload)
	if spec.out:
		export.writeReport(payload, spec.out)
	click.echo(status, err=True)
	ctx.exit(0 if ok else 1)


def _auditFailed (ctx: click.Context, eg: ExceptionGroup):
	click.echo("XXXXXX\n[[ " + str(eg.message) + " ]]" + "\n\n[[ Error ]]\n".join([''] + [str(e) for e in eg.exceptions]), err=True)
	ctx.exit(1)


seedOption = click.option('--seed', type=int, default=0, show_default=True, help='Seed for every random choice of the run')
outOption = click.option('--out', type=click.Path(dir_okay=False), default=None, help='Also write the payload to this file')


def formatOption (default: str):
	return click.option('--format', 'fmt', type=click.Choice(['json', 'csv']), default=default, show_default=True)



# ======================================================
#                      Commands
# ======================================================

@click.group()
def cli ():
	'''
	Range reporting, Bloomier filter, perfect hashing and greater-than
	game benchmarks.
	'''


@cli.command('oracle-fuzz')
@click.option('--w', type=int, default=64, show_default=True, help='Word size in bits')
@click.option('--B', 'B', type=int, default=2, show_default=True, help='Branching factor of the trie orders')
@click.option('--variant', type=click.Choice([v.value for v in Variant]), default=Variant.CORE.value, show_default=True)
@click.option('--backend', type=click.Choice([b.value for b in Backend]), default=Backend.EXACT.value, show_default=True)
@click.option('--ops', type=int, default=1000, show_default=True)
@click.option('--audit', is_flag=True, help='Full structural audit after every update')
@click.option('--exhaustive-every', type=int, default=0, show_default=True, help='Check every interval after this many operations')
@seedOption
@formatOption('json')
@outOption
@click.pass_context
def oracleFuzz (ctx, w, B, variant, backend, ops, audit, exhaustive_every, seed, fmt, out):
	'''Random insert/delete/findany traffic checked against a sorted set.'''
	spec = _lintOrExit(ctx, RunSpec(
		command='oracle-fuzz', w=w, B=(B,), variant=Variant(variant), backend=Backend(backend),
		ops=ops, seed=seed, audit=audit, exhaustive_every=exhaustive_every, fmt=fmt, out=out,
	))
	start = time.perf_counter()
	try:
		report = bench.runOracleFuzz(
			spec.w, spec.B[0], spec.variant, spec.backend, spec.ops, spec.seed,
			audit=spec.audit, exhaustiveEvery=spec.exhaustive_every,
		)
	except ExceptionGroup as eg:
		_auditFailed(ctx, eg)
		return
	_emit(ctx, spec, report, report.ok, text.statusFuzz(report, time.perf_counter() - start))


@cli.command('space-report')
@click.option('--n', type=int, default=4096, show_default=True, help='Number of keys')
@click.option('--u-bits', type=int, default=32, show_default=True, help='Universe size as a power of two')
@click.option('--r', type=int, default=8, show_default=True, help='Bloomier value width in bits')
@click.option('--epsilon', type=float, default=2.0 ** -6, show_default=True, help='Bloomier false positive target')
@click.option('--empty', is_flag=True, help='Measure the structures without inserting keys')
@seedOption
@formatOption('json')
@outOption
@click.pass_context
def spaceReport (ctx, n, u_bits, r, epsilon, empty, seed, fmt, out):
	'''Measured bits of the perfect hash and the Bloomier filter against their bounds.'''
	spec = _lintOrExit(ctx, RunSpec(
		command='space-report', n=n, u_bits=u_bits, r=r, epsilon=epsilon,
		seed=seed, empty=empty, fmt=fmt, out=out,
	))
	start = time.perf_counter()
	report = bench.runSpaceReport(spec.n, spec.u_bits, spec.r, spec.epsilon, spec.seed, spec.empty)
	_emit(ctx, spec, report, report.ok, text.statusSpace(report, time.perf_counter() - start))


@cli.command('fp-rate')
@click.option('--n', type=int, default=4096, show_default=True, help='Number of stored keys')
@click.option('--u-bits', type=int, default=32, show_default=True, help='Universe size as a power of two')
@click.option('--r', type=int, default=8, show_default=True, help='Value width in bits')
@click.option('--epsilon', type=float, default=2.0 ** -6, show_default=True, help='False positive target')
@click.option('--trials', type=int, default=100000, show_default=True, help='Random non-keys to look up')
@seedOption
@formatOption('json')
@outOption
@click.pass_context
def fpRate (ctx, n, u_bits, r, epsilon, trials, seed, fmt, out):
	'''False positive rate of the Bloomier filter over random non-keys.'''
	spec = _lintOrExit(ctx, RunSpec(
		command='fp-rate', n=n, u_bits=u_bits, r=r, epsilon=epsilon,
		trials=trials, seed=seed, fmt=fmt, out=out,
	))
	start = time.perf_counter()
	report = bench.runFpRate(spec.n, spec.u_bits, spec.r, spec.epsilon, spec.trials, spec.seed)
	_emit(ctx, spec, report, report.ok, text.statusFpRate(report, time.perf_counter() - start))


@cli.command('perfect-hash-demo')
@click.option('--n', type=int, default=16384, show_default=True, help='Most keys live at once')
@click.option('--u-bits', type=int, default=64, show_default=True, help='Universe size as a power of two')
@click.option('--ops', type=int, default=None, help='Number of operations, 3n if not given')
@seedOption
@formatOption('json')
@outOption
@click.pass_context
def perfectHashDemo (ctx, n, u_bits, ops, seed, fmt, out):
	'''Mixed insert/delete traffic on the perfect hash with injectivity audits.'''
	spec = _lintOrExit(ctx, RunSpec(
		command='perfect-hash-demo', n=n, u_bits=u_bits, ops=ops, seed=seed, fmt=fmt, out=out,
	))
	start = time.perf_counter()
	report = bench.runPerfectHashDemo(spec.n, spec.u_bits, spec.ops, spec.seed)
	_emit(ctx, spec, report, report.ok, text.statusPerfectHash(report, time.perf_counter() - start))


@cli.command('probe-bench')
@click.option('--n', type=int, default=65536, show_default=True, help='Domain size of the greater-than game')
@click.option('--B', 'B', type=int, multiple=True, default=(2, 4, 16, 64), show_default=True, help='Branching factor, repeat for several')
@click.option('--strategy', type=click.Choice(list(STRATEGY_CHOICES)), default='both', show_default=True)
@click.option('--trials', type=int, default=100000, show_default=True, help='Random (a, b) pairs per row')
@click.option('--exhaustive', is_flag=True, help='Check every (a, b) pair instead of sampling')
@seedOption
@formatOption('csv')
@outOption
@click.pass_context
def probeBench (ctx, n, B, strategy, trials, exhaustive, seed, fmt, out):
	'''Write and read probes of the greater-than schemes.'''
	spec = _lintOrExit(ctx, RunSpec(
		command='probe-bench', n=n, B=tuple(B), strategies=STRATEGY_CHOICES[strategy],
		trials=trials, exhaustive=exhaustive, seed=seed, fmt=fmt, out=out,
	))
	start = time.perf_counter()
	rows = bench.runProbeBench(spec.n, list(spec.B), list(spec.strategies), spec.trials, spec.seed, spec.exhaustive)
	fields = export.SWEEP_FIELDS if spec.fmt == 'csv' else None
	_emit(ctx, spec, rows, all(row.correct for row in rows), text.statusSweep(rows, time.perf_counter() - start), fields)



if __name__ == '__main__':
	cli()
