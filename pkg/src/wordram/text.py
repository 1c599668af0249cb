'''
Text

Status messages for the command line. These go to stderr so stdout
only ever carries the JSON/CSV payload, which keeps payloads identical
between runs with the same seed. Wall time only shows up here.

Same banner convention throughout: [[ Success ]], [[ Warning ]] and
[[ Error ]] on their own line, details underneath.
'''
import sys
import time
from typing import Dict, List, Optional

from wordram.model_data_classes import FpRateReport, FuzzReport, PerfectHashReport, SpaceReport, SweepRow



def getTimestamp (when: Optional[float] = None) -> str:
	'''Local time as year-month-day-hour-min-sec, every field zero padded.'''
	return time.strftime("%Y-%m-%d-%H-%M-%S", time.localtime(when))


def _banner (ok: bool) -> str:
	return "[[ Success ]]\n" if ok else "[[ Error ]]\n"


def _footer (seconds: float) -> str:
	return f"\nFinished {getTimestamp()} in {seconds:.2f}s\n"


def statusLint (messages: List[str]) -> str:
	return "XXXXXX\n[[ Invalid Parameters ]]" + "\n\n[[ Error ]]\n".join([''] + messages) + "\n"


def statusFuzz (report: FuzzReport, seconds: float) -> str:
	rStr = _banner(report.ok)
	rStr += f"oracle-fuzz w={report.w} B={report.B} {report.variant.value}/{report.backend.value} seed={report.seed}\n"
	rStr += f" - ops: {report.ops} ({report.inserts} inserts, {report.deletes} deletes, {report.queries} queries)\n"
	rStr += f" - mismatches: {report.mismatches}\n"
	rStr += f" - final size: {report.final_size}\n"
	rStr += _envelopes(report.envelopes)
	return rStr + _footer(seconds)


def _envelopes (envelopes: Dict[str, bool]) -> str:
	failed = sorted(k for k, ok in envelopes.items() if not ok)
	if not failed:
		return " - all cost envelopes held\n"
	return "\n[[ Warning ]]\nCost envelopes exceeded: " + ", ".join(failed) + "\n"


def statusSpace (report: SpaceReport, seconds: float) -> str:
	rStr = _banner(report.ok)
	for part in (report.perfect_hash, report.bloomier):
		flag = '~' if part.ok else 'x'
		rStr += f" {flag} {part.name}: {part.measured_bits} bits for {part.keys} keys, " + \
				f"C = {part.C_measured:.2f} (layout {part.C_layout:.2f}), limit {part.limit_bits:.0f}\n"
	return rStr + _footer(seconds)


def statusFpRate (report: FpRateReport, seconds: float) -> str:
	rStr = _banner(report.ok)
	rStr += f"fp-rate n={report.n} eps={report.epsilon} over {report.trials} non-keys\n"
	rStr += f" - false positive rate: {report.fp_rate:.6f}\n"
	rStr += f" - stored key errors: {report.stored_errors} in {report.stored_lookups} lookups\n"
	rStr += f" - attempts: {report.attempts} (seed used {report.seed_used})\n"
	return rStr + _footer(seconds)


def statusPerfectHash (report: PerfectHashReport, seconds: float) -> str:
	rStr = _banner(report.ok)
	rStr += f"perfect-hash-demo n={report.n} u=2^{report.u_bits}, {report.ops} ops\n"
	rStr += f" - range: {report.range}\n"
	rStr += f" - spill peak: {report.spill_peak} (limit {report.spill_limit})\n"
	rStr += f" - injective: {report.injective}\n"
	rStr += f" - attempts: {report.attempts} (seed used {report.seed_used})\n"
	return rStr + _footer(seconds)


def statusSweep (rows: List[SweepRow], seconds: float) -> str:
	bad = [row for row in rows if not row.correct]
	rStr = _banner(not bad)
	for row in rows:
		flag = '~' if row.correct else 'x'
		rStr += f" {flag} B={row.B} {row.strategy.value}: Tu_max={row.Tu_max} Tq_max={row.Tq_max}\n"
	return rStr + _footer(seconds)



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
