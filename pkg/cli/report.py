"""
Rendering of LCAF results and harness reports for the command line.

Results go to standard output in text, JSON or CSV form; diagnostics are
echoed to standard error.
"""

import json
from typing import Dict, List, Optional

import click
import pandas as pd

from core.parikh import AlphabetMap
from models.experiment import ConjectureReport, OracleMismatch
from models.results import LcafResult, LcafResultAPI, SystemMessage


COMPARISON_COLUMNS = [
    'algorithm', 'length', 'p', 'q', 'witness',
    'rows_computed', 'first_vectors_computed', 'rows_skipped'
]


def display_system_messages(messages: List[SystemMessage]) -> None:
    """Echo diagnostics to standard error."""
    for msg in messages:
        if msg.level == 'error':
            click.echo(f"❌ Error: {msg.message}", err=True)
        elif msg.level == 'warning':
            click.echo(f"⚠️  Warning: {msg.message}", err=True)
        else:
            click.echo(f"ℹ️  {msg.message}", err=True)


def result_payload(result: LcafResult, audit: bool = False) -> dict:
    """JSON-ready mapping of a result; over-skips are included only when audited."""
    payload = LcafResultAPI.from_result(result).model_dump()
    if audit:
        payload['over_skips'] = [
            {
                'ell': o.ell,
                'sound_skip': o.sound_skip,
                'literal_skip': o.literal_skip,
                'jumps_past_answer': o.jumps_past_answer
            }
            for o in result.over_skips
        ]
    return payload


def render_json(results: Dict[str, LcafResult], audit: bool = False) -> str:
    """
    A single result as one JSON object; several as an object keyed by algorithm.
    """
    if len(results) == 1:
        (result,) = results.values()
        return json.dumps(result_payload(result, audit), indent=2)
    return json.dumps({name: result_payload(r, audit) for name, r in results.items()}, indent=2)


def _witness_text(result: LcafResult, alpha: AlphabetMap) -> str:
    if result.witness is None:
        return "none"
    return f"{list(result.witness.counts)} {alpha.describe(result.witness)}"


def _over_skip_lines(result: LcafResult) -> List[str]:
    if not result.over_skips:
        return ["over_skips: none"]
    lines = [f"over_skips: {len(result.over_skips)}"]
    for o in result.over_skips:
        marker = "  (would jump past the answer)" if o.jumps_past_answer else ""
        lines.append(f"  length {o.ell}: sound skip {o.sound_skip}, literal skip {o.literal_skip}{marker}")
    return lines


def render_text(results: Dict[str, LcafResult], alpha: AlphabetMap, audit: bool = False) -> str:
    """Key/value listing for one result, an aligned comparison table for several."""
    if len(results) == 1:
        (result,) = results.values()
        lines = [
            f"length: {result.length}",
            f"p: {result.p if result.p is not None else 'none'}",
            f"q: {result.q if result.q is not None else 'none'}",
            f"witness: {_witness_text(result, alpha)}",
            f"rows_computed: {result.stats.rows_computed}",
            f"first_vectors_computed: {result.stats.first_vectors_computed}",
            f"rows_skipped: {result.stats.rows_skipped}",
        ]
        if audit:
            lines.extend(_over_skip_lines(result))
        return "\n".join(lines)

    frame = _comparison_frame(results, alpha)
    text = frame.to_string(index=False)
    if audit:
        for name, result in results.items():
            if result.over_skips:
                text += "\n" + "\n".join([f"{name}:"] + _over_skip_lines(result))
    return text


def _comparison_frame(results: Dict[str, LcafResult], alpha: Optional[AlphabetMap]) -> pd.DataFrame:
    records = []
    for name, result in results.items():
        records.append({
            'algorithm': name,
            'length': result.length,
            'p': result.p if result.p is not None else '',
            'q': result.q if result.q is not None else '',
            'witness': alpha.describe(result.witness) if result.witness is not None else '',
            'rows_computed': result.stats.rows_computed,
            'first_vectors_computed': result.stats.first_vectors_computed,
            'rows_skipped': result.stats.rows_skipped,
        })
    return pd.DataFrame(records, columns=COMPARISON_COLUMNS)


def render_csv(results: Dict[str, LcafResult], alpha: AlphabetMap) -> str:
    """One CSV line per algorithm, header included; witness counts are ';'-separated."""
    frame = _comparison_frame(results, alpha)
    frame['witness'] = [
        ';'.join(str(c) for c in r.witness.counts) if r.witness is not None else ''
        for r in results.values()
    ]
    return frame.to_csv(index=False, lineterminator='\n')


def render_conjecture(report: ConjectureReport) -> str:
    """Desk-check report of the mean LCAF gap."""
    return "\n".join([
        f"n: {report.n}",
        f"trials: {report.trials}",
        f"seed: {report.seed}",
        f"mean_lcaf: {report.mean_lcaf:.6g}",
        f"gap (n - mean_lcaf): {report.gap:.6g}",
        f"log2_n: {report.log2_n:.6g}",
        f"gap / log2_n: {report.gap / report.log2_n:.6g}" if report.log2_n else "gap / log2_n: n/a",
        f"mean_rows (skip): {report.mean_rows:.6g}",
    ])


def render_mismatch(mismatch: OracleMismatch) -> str:
    """First oracle disagreement with a command line reproducing it."""
    reason = (
        f"expected length {mismatch.expected_length}, got {mismatch.actual_length}"
        if mismatch.expected_length != mismatch.actual_length
        else f"invalid witness p={mismatch.p} q={mismatch.q}"
    )
    return "\n".join([
        f"❌ Mismatch: {mismatch.algorithm} on n={mismatch.n}: {reason}",
        f"A: {mismatch.a!r}",
        f"B: {mismatch.b!r}",
        f"Reproduce with: python lcaf.py compute --algo {mismatch.algorithm} '{mismatch.a}' '{mismatch.b}'",
    ])
