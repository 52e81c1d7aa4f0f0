import json

import kloosterman.verify as verify
from kloosterman.cli import main
from kloosterman.verify import CheckResult, run_all_checks


def test_every_check_passes():
    results = run_all_checks()
    assert len(results) == len(verify.ALL_CHECKS)
    failed = [r.name for r in results if not r.ok]
    assert not failed, failed


def test_verify_all_cli_reports_and_exits_zero(capsys):
    code = main(["verify-all"])
    captured = capsys.readouterr()
    assert code == 0
    payload = json.loads(captured.out)
    assert payload["ok"] is True
    assert payload["failed"] == 0
    assert payload["passed"] == len(payload["checks"])
    # one human-readable line per check on stderr
    assert captured.err.count("PASS") == len(payload["checks"])


def test_verify_all_cli_nonzero_on_failure(capsys, monkeypatch):
    def broken():
        return CheckResult(name="synthetic", ok=False, detail="forced")

    def raising():
        raise ArithmeticError("boom")

    monkeypatch.setattr(verify, "ALL_CHECKS", [broken, raising])
    code = main(["verify-all"])
    captured = capsys.readouterr()
    assert code == 1
    payload = json.loads(captured.out)
    assert payload["ok"] is False
    assert payload["failed"] == 2
    assert "FAIL" in captured.err
    assert "boom" in payload["checks"][1]["detail"]
