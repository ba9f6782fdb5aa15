#!/usr/bin/env python3
"""
Audit the skip trick on every ordered pair of short strings.

For each pair the skip solver runs in audit mode and is compared with the
quadratic solver. The script reports pairs where the skip solver disagrees
(unsound skips) and the lengths at which the literal SKIP formula, with its
sigma-1 components and absolute gaps, would have skipped further than the
provable gap, including how often that jump would have passed the answer.
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.datasets import ConfigurationError, enumerate_pairs
from core.parikh import AlphabetMap
from core.solvers import lcaf_quadratic, lcaf_skip
from models.config import EXHAUSTIVE_CAP, parse_lengths


# examples kept per category in the report
MAX_EXAMPLES = 5


def parse_arguments(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Audit skip soundness and literal SKIP over-skips on exhaustive string pairs"
    )
    parser.add_argument(
        '-l', '--lengths',
        default='1..8',
        help="String lengths to enumerate, e.g. 1..8 or 4,6 (default: 1..8)"
    )
    parser.add_argument(
        '-a', '--alphabet',
        default='01',
        help="Symbols of the enumerated strings (default: 01); literal over-skips need 3 or more"
    )
    parser.add_argument(
        '-f', '--output-format',
        choices=['text', 'json'],
        default='text',
        help="Output format: text (default) or json"
    )
    return parser.parse_args(argv)


def audit_length(n, alpha):
    """
    Audit every ordered pair of length-n strings over alpha.

    Returns:
        Dict with pair counts, unsound pairs and over-skip statistics
    """
    pairs = 0
    unsound = []
    over_skip_pairs = 0
    past_answer = []

    for a, b in enumerate_pairs(n, alpha, EXHAUSTIVE_CAP):
        pairs += 1
        result = lcaf_skip(a, b, audit=True)
        expected = lcaf_quadratic(a, b).length
        if result.length != expected:
            unsound.append({'a': a, 'b': b, 'expected': expected, 'actual': result.length})
        if result.over_skips:
            over_skip_pairs += 1
        for o in result.over_skips:
            if o.jumps_past_answer:
                past_answer.append({
                    'a': a, 'b': b, 'ell': o.ell, 'sound_skip': o.sound_skip,
                    'literal_skip': o.literal_skip, 'answer': result.length
                })

    return {
        'n': n,
        'pairs': pairs,
        'unsound_count': len(unsound),
        'unsound': unsound[:MAX_EXAMPLES],
        'over_skip_pairs': over_skip_pairs,
        'past_answer_count': len(past_answer),
        'past_answer': past_answer[:MAX_EXAMPLES]
    }


def format_text_output(results):
    """Format results as concise text output."""
    lines = []
    for r in results:
        lines.append(
            f"n={r['n']}: {r['pairs']} pairs, unsound: {r['unsound_count']}, "
            f"literal over-skips: {r['over_skip_pairs']} pairs, past the answer: {r['past_answer_count']}"
        )
        for u in r['unsound']:
            lines.append(f"    UNSOUND {u['a']} {u['b']}: expected {u['expected']}, got {u['actual']}")
        for p in r['past_answer']:
            lines.append(
                f"    {p['a']} {p['b']}: at length {p['ell']} literal skip {p['literal_skip']} "
                f"(sound {p['sound_skip']}) passes the answer {p['answer']}"
            )
    return "\n".join(lines)


def main(argv=None):
    """Main function."""
    args = parse_arguments(argv)

    try:
        if not args.alphabet:
            raise ValueError("Alphabet must contain at least one symbol")
        alpha = AlphabetMap(tuple(sorted(set(args.alphabet))))
        lengths = parse_lengths(args.lengths)
        results = [audit_length(n, alpha) for n in lengths]
    except (ValueError, ConfigurationError) as e:
        if args.output_format == 'json':
            print(json.dumps({'error': str(e)}, indent=2))
        else:
            print(f"Error: {e}")
        return 2

    if args.output_format == 'json':
        print(json.dumps(results, indent=2))
    else:
        print(format_text_output(results))

    # Exit with code 1 if the skip solver disagreed anywhere, 0 otherwise
    return 1 if any(r['unsound_count'] for r in results) else 0


if __name__ == "__main__":
    sys.exit(main())
