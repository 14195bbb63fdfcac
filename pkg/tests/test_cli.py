import io
import json
import subprocess
import sys

import pytest

import braident.cli as cli


def run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    code = cli.main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_bell_word_with_verification():
    code, out, err = run_cli(["--qubits", "2", "--word", "s1", "--verify"])
    assert code == 0
    assert "partition: {1,2}" in out
    assert "agreement=true" in out
    assert err == ""


def test_interleaved_two_cycle_word():
    code, out, _ = run_cli(
        ["--qubits", "4", "--word", "s2 s1 s3 s2", "--verify"]
    )
    assert code == 0
    assert "partition: {1,2,3,4}" in out
    assert "agreement=true" in out


def test_squared_generator_is_separable():
    code, out, _ = run_cli(["--qubits", "2", "--word", "s1 s1", "--verify"])
    assert code == 0
    assert "partition: {1}|{2}" in out
    assert "agreement=true" in out


def test_json_output_round_trips():
    code, out, _ = run_cli(
        ["--qubits", "4", "--word", "s2 s1 s3 s2", "--verify", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "s2 s1 s3 s2"
    assert data["n"] == 4
    assert data["permutation"] == [3, 4, 1, 2]
    assert data["cycles"] == [[1, 3], [2, 4]]
    assert data["partition"] == [[1, 2, 3, 4]]
    assert data["oracle"]["agreement"] is True
    assert data["oracle"]["max_stabilizer_residual"] < 1e-10
    assert data["oracle"]["partition"] == [[1, 2, 3, 4]]
    assert len(data["stabilizers"]) == 4
    # emitting the parsed dict again reproduces the bytes
    report = cli.build_report("s2 s1 s3 s2", 4, verify=True)
    assert json.dumps(report.as_dict()) + "\n" == out


def test_output_is_deterministic():
    args = ["--qubits", "3", "--word", "s1 s2^-1", "--verify", "--emit-stabilizers"]
    first = run_cli(args)
    second = run_cli(args)
    assert first == second


def test_verify_does_not_change_the_prediction():
    _, plain, _ = run_cli(["--qubits", "3", "--word", "s1 s2"])
    _, verified, _ = run_cli(["--qubits", "3", "--word", "s1 s2", "--verify"])
    line = next(l for l in plain.splitlines() if l.startswith("partition:"))
    assert line in verified.splitlines()
    assert "oracle:" not in plain


def test_emit_stabilizers_lists_generators():
    _, out, _ = run_cli(["--qubits", "2", "--word", "s1", "--emit-stabilizers"])
    assert "stabilizers:" in out
    assert "  +XX" in out
    assert "  -YY" in out
    _, without, _ = run_cli(["--qubits", "2", "--word", "s1"])
    assert "stabilizers:" not in without


def test_parse_error_exits_2():
    code, out, err = run_cli(["--qubits", "3", "--word", "s3"])
    assert code == 2
    assert out == ""
    assert "s3" in err
    code, _, err = run_cli(["--qubits", "3", "--word", "foo"])
    assert code == 2
    assert "column 1" in err


def test_qubits_below_two_rejected():
    code, _, err = run_cli(["--qubits", "1", "--word", "s1"])
    assert code == 2
    assert "at least 2" in err


def test_verify_beyond_oracle_limit_exits_4():
    code, _, err = run_cli(
        ["--qubits", "6", "--word", "s1", "--verify", "--oracle-limit", "5"]
    )
    assert code == 4
    assert "limit" in err
    # without --verify the engine alone handles large N fine
    code, out, _ = run_cli(["--qubits", "40", "--word", "s1 s39"])
    assert code == 0
    assert "partition: {1,2}" in out


def test_disagreement_exit_code(monkeypatch):
    real = cli.build_report

    def sabotaged(word_text, n_qubits, **kwargs):
        report = real(word_text, n_qubits, **kwargs)
        bad = cli.OracleRecord(
            partition=report.oracle.partition,
            agreement=False,
            max_stabilizer_residual=report.oracle.max_stabilizer_residual,
        )
        return cli.RunReport(
            word_text=report.word_text,
            n_qubits=report.n_qubits,
            permutation=report.permutation,
            cycles=report.cycles,
            predicted_partition=report.predicted_partition,
            stabilizers=report.stabilizers,
            oracle=bad,
        )

    monkeypatch.setattr(cli, "build_report", sabotaged)
    code, out, _ = run_cli(["--qubits", "2", "--word", "s1", "--verify"])
    assert code == 3
    assert "agreement=false" in out


def test_batch_reports_every_word(tmp_path):
    batch = tmp_path / "words.txt"
    batch.write_text("s1\n# a comment\n\ns1 s2\ns2^-1\n")
    code, out, err = run_cli(
        ["--qubits", "3", "--batch", str(batch), "--verify"]
    )
    assert code == 0
    assert out.count("word: ") == 3
    assert "summary: words=3 parsed=3 errors=0 agreements=3 disagreements=0" in out
    assert err == ""


def test_batch_empty_file(tmp_path):
    batch = tmp_path / "empty.txt"
    batch.write_text("")
    code, out, _ = run_cli(["--qubits", "3", "--batch", str(batch)])
    assert code == 0
    assert out.strip() == "summary: words=0 parsed=0 errors=0"


def test_batch_continues_past_bad_lines(tmp_path):
    batch = tmp_path / "words.txt"
    batch.write_text("s1\nbogus\ns2\n")
    code, out, err = run_cli(["--qubits", "3", "--batch", str(batch)])
    assert code == 2
    assert out.count("word: ") == 2
    assert "line 2:" in err
    assert "summary: words=3 parsed=2 errors=1" in out


def test_batch_json_lines(tmp_path):
    batch = tmp_path / "words.txt"
    batch.write_text("s1\ns1 s2\n")
    code, out, err = run_cli(
        ["--qubits", "3", "--batch", str(batch), "--format", "json"]
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["word"] for r in rows] == ["s1", "s1 s2"]
    assert "summary:" in err


def test_missing_batch_file():
    code, _, err = run_cli(["--qubits", "3", "--batch", "/nonexistent/words.txt"])
    assert code == 2
    assert "words.txt" in err


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "braident", "--qubits", "2", "--word", "s1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "partition: {1,2}" in proc.stdout


@pytest.mark.parametrize("flag", [["--word", "s1", "--batch", "x"], []])
def test_word_and_batch_are_mutually_exclusive(flag):
    with pytest.raises(SystemExit) as info:
        cli.main(["--qubits", "2", *flag])
    assert info.value.code == 2
