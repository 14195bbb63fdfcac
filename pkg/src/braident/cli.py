"""Command-line report pipeline: parse, track stabilizers, classify, verify.

Exit codes: 0 success, 2 parse error, 3 oracle disagreement, 4 resource
limit exceeded.  Batch mode reports per-line diagnostics on stderr and
keeps going; its exit code is the most significant condition seen
(disagreement, then parse error, then resource error).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .braid import BraidSyntaxError, parse_word, permutation_of
from .classify import EntanglementPartition, predict_partition
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    ResourceLimitError,
    apply_word,
    finest_product_partition,
    stabilizer_residual,
)
from .stabilizer import conjugate_by_word, initial_stabilizers, majorana_pairing

__all__ = ["OracleRecord", "RunReport", "build_report", "main", "entry_point"]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREE = 3
EXIT_RESOURCE = 4


@dataclass(frozen=True)
class OracleRecord:
    partition: EntanglementPartition
    agreement: bool
    max_stabilizer_residual: float


@dataclass(frozen=True)
class RunReport:
    word_text: str
    n_qubits: int
    permutation: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    predicted_partition: EntanglementPartition
    stabilizers: tuple[str, ...]
    oracle: OracleRecord | None

    def as_dict(self) -> dict:
        return {
            "word": self.word_text,
            "n": self.n_qubits,
            "permutation": list(self.permutation),
            "cycles": [list(c) for c in self.cycles],
            "partition": [list(b) for b in self.predicted_partition.blocks],
            "stabilizers": list(self.stabilizers),
            "oracle": None if self.oracle is None else {
                "partition": [list(b) for b in self.oracle.partition.blocks],
                "agreement": self.oracle.agreement,
                "max_stabilizer_residual": self.oracle.max_stabilizer_residual,
            },
        }


def build_report(word_text: str, n_qubits: int, *, verify: bool = False,
                 oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> RunReport:
    """Run the full pipeline on one word."""
    word = parse_word(word_text, n_qubits)
    perm = permutation_of(word)
    decomposition = perm.cycles()
    predicted = predict_partition(decomposition)
    stabilizers = conjugate_by_word(initial_stabilizers(n_qubits), word)
    # cross-check: pairing extracted from the tableau must match the word
    if majorana_pairing(stabilizers).site_permutation() != perm:
        raise AssertionError("internal error: tableau pairing deviates from word")
    oracle = None
    if verify:
        state = apply_word(word, n_qubits, limit=oracle_limit)
        oracle_partition = finest_product_partition(state, limit=oracle_limit)
        oracle = OracleRecord(
            partition=oracle_partition,
            agreement=oracle_partition == predicted,
            max_stabilizer_residual=stabilizer_residual(state, stabilizers),
        )
    return RunReport(
        word_text=word_text,
        n_qubits=n_qubits,
        permutation=perm.image,
        cycles=decomposition.cycles,
        predicted_partition=predicted,
        stabilizers=tuple(str(g) for g in stabilizers.generators),
        oracle=oracle,
    )


def _format_text(report: RunReport, emit_stabilizers: bool) -> str:
    lines = [
        f"word: {report.word_text}",
        f"n: {report.n_qubits}",
        f"permutation: {list(report.permutation)}",
        "cycles: " + "".join("(" + " ".join(map(str, c)) + ")" for c in report.cycles),
        f"partition: {report.predicted_partition}",
    ]
    if emit_stabilizers:
        lines.append("stabilizers:")
        lines.extend(f"  {g}" for g in report.stabilizers)
    if report.oracle is not None:
        agree = "true" if report.oracle.agreement else "false"
        lines.append(
            f"oracle: agreement={agree} partition={report.oracle.partition} "
            f"max_stabilizer_residual={report.oracle.max_stabilizer_residual!r}"
        )
    return "\n".join(lines)


def _emit(report: RunReport, args, out) -> None:
    if args.format == "json":
        out.write(json.dumps(report.as_dict()) + "\n")
    else:
        out.write(_format_text(report, args.emit_stabilizers) + "\n")


def _iter_batch_lines(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braident",
        description="Classify which qubit sites a braid word entangles, "
                    "with optional brute-force verification.",
    )
    parser.add_argument("--qubits", type=int, required=True, metavar="N",
                        help="number of strands / qubits (N >= 2)")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--word", help="braid word, e.g. 's1 s2^-1'")
    source.add_argument("--batch", metavar="FILE",
                        help="file with one word per line; '#' starts a comment")
    parser.add_argument("--verify", action="store_true",
                        help="also run the dense oracle and compare partitions")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--emit-stabilizers", action="store_true",
                        help="include the final stabilizer set in text output")
    parser.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT,
                        metavar="N", help="max qubits for --verify (default 14)")
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved for randomized self-tests")
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = _build_parser().parse_args(argv)
    if args.qubits < 2:
        err.write("error: --qubits must be at least 2\n")
        return EXIT_PARSE
    if args.verify and args.qubits > args.oracle_limit:
        err.write(
            f"error: --verify needs {args.qubits} <= oracle limit "
            f"{args.oracle_limit}\n"
        )
        return EXIT_RESOURCE

    if args.word is not None:
        try:
            report = build_report(args.word, args.qubits, verify=args.verify,
                                  oracle_limit=args.oracle_limit)
        except BraidSyntaxError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_PARSE
        except ResourceLimitError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_RESOURCE
        _emit(report, args, out)
        if report.oracle is not None and not report.oracle.agreement:
            return EXIT_DISAGREE
        return EXIT_OK

    words = 0
    parsed = 0
    parse_errors = 0
    resource_errors = 0
    agreements = 0
    disagreements = 0
    try:
        batch = list(_iter_batch_lines(args.batch))
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    first = True
    for lineno, text in batch:
        words += 1
        try:
            report = build_report(text, args.qubits, verify=args.verify,
                                  oracle_limit=args.oracle_limit)
        except BraidSyntaxError as exc:
            parse_errors += 1
            err.write(f"line {lineno}: {exc}\n")
            continue
        except ResourceLimitError as exc:
            resource_errors += 1
            err.write(f"line {lineno}: {exc}\n")
            continue
        parsed += 1
        if not first and args.format == "text":
            out.write("\n")
        first = False
        _emit(report, args, out)
        if report.oracle is not None:
            if report.oracle.agreement:
                agreements += 1
            else:
                disagreements += 1
    summary = f"summary: words={words} parsed={parsed} errors={parse_errors + resource_errors}"
    if args.verify:
        summary += f" agreements={agreements} disagreements={disagreements}"
    target = err if args.format == "json" else out
    target.write(summary + "\n")
    if disagreements:
        return EXIT_DISAGREE
    if parse_errors:
        return EXIT_PARSE
    if resource_errors:
        return EXIT_RESOURCE
    return EXIT_OK


def entry_point() -> None:
    raise SystemExit(main())
