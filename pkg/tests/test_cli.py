import io
import json
import sys

from pencilorbits.cli import EXIT_BUDGET, EXIT_OK, EXIT_VALIDATION, run


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = run(argv)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_orbit_command():
    code, out, err = _run(["orbit", "--n", "4", "--form", "1,0,0,0,1", "--point", "0,1,1"])
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["payload"]["det_identity_holds"] is True
    assert rec["payload"]["invariant_form"] == ["1", "0", "0", "0", "1"]
    assert rec["schema_version"] == 1
    assert "elapsed" in err  # timing on stderr only


def test_orbit_determinism():
    _, out1, _ = _run(["orbit", "--n", "4", "--form", "2,3,-1,5,9", "--point", "0,1,3"])
    _, out2, _ = _run(["orbit", "--n", "4", "--form", "2,3,-1,5,9", "--point", "0,1,3"])
    assert out1 == out2


def test_orbit_validation_errors():
    code, _, _ = _run(["orbit", "--n", "4", "--form", "1,0,0,0,1", "--point", "0,1,2"])
    assert code == EXIT_VALIDATION
    code, _, _ = _run(["orbit", "--n", "4", "--form", "1,0,0,1", "--point", "0,1,1"])
    assert code == EXIT_VALIDATION
    code, _, _ = _run(["orbit", "--nonsense", "1"])
    assert code == EXIT_VALIDATION


def test_verify_command():
    pair = json.dumps({"A": [[-1, 0], [0, 3]], "B": [[0, 2], [2, -7]]})
    code, out, _ = _run(["verify", "--form", "3,7,4", "--pair", pair])
    assert code == EXIT_OK
    assert json.loads(out)["payload"]["matches_form"] is True
    code, _, _ = _run(["verify", "--form", "3,7,5", "--pair", pair])
    assert code == EXIT_VALIDATION


def test_count_fp_command():
    code, out, _ = _run(["count-fp", "--n", "2", "--p", "3", "--form", "1,0,2"])
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["payload"]["total_elements"] == 24 == rec["payload"]["sl_n_order"]
    code, _, _ = _run(["count-fp", "--n", "4", "--p", "3", "--form", "1,0,0,0,1"])
    assert code == EXIT_BUDGET


def test_densities_command_zero_samples():
    code, out, _ = _run(["densities", "--genus", "1", "--samples", "0"])
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["payload"][0]["archimedean_factor"] == 1.0


def test_densities_csv():
    code, out, _ = _run(["densities", "--genus", "1", "--samples", "2000", "--primes", "20", "--csv"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "genus,bound,bound_conservative"
    assert lines[1].startswith("1,")


def test_genus0_command():
    code, out, _ = _run(["genus0", "--primes", "5"])
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["payload"]["product"] == "119/225"


def test_survey_command_round_trip():
    code, out, _ = _run(["survey", "--n", "2", "--height", "8", "--count", "5", "--seed", "4", "--point-bound", "6"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 6  # 5 records + aggregate
    for line in lines[:-1]:
        rec = json.loads(line)["record"]
        assert len(rec["coeffs"]) == 3
    agg = json.loads(lines[-1])
    assert agg["payload"]["count"] == 5
    # byte determinism
    _, out2, _ = _run(["survey", "--n", "2", "--height", "8", "--count", "5", "--seed", "4", "--point-bound", "6"])
    assert out == out2


def test_orbit_output_feeds_verify():
    # the emitted pair re-parses and passes verification against the form
    code, out, _ = _run(["orbit", "--n", "4", "--form", "1,2,-3,1,9", "--point", "0,1,3"])
    assert code == EXIT_OK
    payload = json.loads(out)["payload"]
    pair = json.dumps({"A": payload["A"], "B": payload["B"]})
    code, out2, _ = _run(["verify", "--form", "1,2,-3,1,9", "--pair", pair])
    assert code == EXIT_OK
    assert json.loads(out2)["payload"]["matches_form"] is True
