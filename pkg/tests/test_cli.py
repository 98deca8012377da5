from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from holoconn.cli import dumps_machine, machine_document, main, parse_batch, parse_connection_file, run
from holoconn.cli.report import jet_expression
from holoconn.errors import AnalysisError, ArityError, InputSyntaxError, ParseError, UnknownVariable
from holoconn.expr import ChartPoint, Expr, jet, parse_expr

GOLDEN = Path(__file__).parent / "golden"
Z, XI = Expr.var(0), Expr.var(1)


def cli(*args, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(args), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# parsing

def test_inline_request():
    req = parse_connection_file('vars = z, xi\nG^1_11 = "1"\nG^2_12 = "xi"\n')
    assert req.source == "inline"
    assert req.connection.gamma[0][0][0] == 1
    assert req.connection.gamma[1][0][1] == XI
    assert req.connection.gamma[1][1][0].is_zero()


def test_inline_symmetric():
    req = parse_connection_file('G^2_12 = "xi"\nsymmetric = true\n')
    assert req.connection.gamma[1][1][0] == XI


def test_family_request():
    req = parse_connection_file('family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"')
    assert req.source == "elliptic"
    assert req.connection.gamma[0][0][1] == XI
    assert req.connection.gamma[0][0][0] == 1


def test_negative_exponent_is_syntax_error():
    with pytest.raises(InputSyntaxError) as info:
        parse_connection_file('G^1_11 = "xi ^ -1"')
    assert (info.value.line, info.value.column) == (1, 16)


def test_error_position_on_later_line():
    text = 'vars = z, xi\n\nG^1_11 = "1"; G^2_22 = "z + w"\n'
    with pytest.raises(UnknownVariable) as info:
        parse_connection_file(text)
    assert (info.value.line, info.value.column) == (3, 29)


def test_custom_variables():
    req = parse_connection_file('vars = u, v\nG^1_11 = "u*v"')
    assert req.connection.gamma[0][0][0] == Z * XI
    with pytest.raises(UnknownVariable):
        parse_connection_file('vars = u, v\nG^1_11 = "z"')


@pytest.mark.parametrize("text", [
    'family = elliptic; f12 = "xi"; g22 = "0"',
    'family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"; f11 = "1"',
    'family = standard; f12 = "1"',
    'family = translation; G^1_11 = "1"',
])
def test_family_arity(text):
    with pytest.raises(ArityError):
        parse_connection_file(text)


@pytest.mark.parametrize("text", [
    'G^1_11 = 1',                    # unquoted expression
    'G^3_11 = "1"',                  # index out of range
    'G^1_11 "1"',                     # missing =
    'G^1_11 = "1',                    # unterminated string
    'family = hopf',
    '[connection a',
    'report = flat, colour',
    'order = many',
    'vars = z, z',
    'vars = z, i',
    'family = translation; G^1_11 = "xi"; G^1_12 = "0"; G^1_22 = "0"; G^2_11 = "0"; G^2_12 = "0"; G^2_22 = "0"',
    'G^1_11 = "1"\nG^1_11 = "2"',
    '',
])
def test_syntax_errors(text):
    with pytest.raises(InputSyntaxError):
        parse_connection_file(text)


def test_killing_requires_point_and_order():
    with pytest.raises(ParseError):
        parse_connection_file('family = standard\nreport = killing')
    with pytest.raises(ParseError):
        parse_connection_file('family = standard\nreport = killing\npoint = "0, 0"\norder = 1')
    with pytest.raises(ParseError):
        parse_connection_file('family = standard\nreport = killing\npoint = "0, 0"\norder = 4\nwindow = 4')


def test_elliptic_family_rejects_z_dependence():
    with pytest.raises(InputSyntaxError):
        parse_connection_file('family = elliptic; f12 = "z"; g22 = "0"; g12 = "0"')


def test_batch_order_and_names():
    reqs = parse_batch((GOLDEN / "batch.conn").read_text())
    assert [r.name for r in reqs] == ["torus-witness", "inline-rational", "flat-member"]
    with pytest.raises(InputSyntaxError):
        parse_batch('[connection a]\nfamily = standard\n[connection a]\nfamily = standard\n')


def test_point_parsing():
    req = parse_connection_file('family = standard\npoint = "1/2, i"\nreport = killing')
    assert req.point == ChartPoint(parse_expr("1/2").constant_value(), parse_expr("i").constant_value())


# running

def test_run_elliptic_flat_projective():
    req = parse_connection_file('family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"\nreport = flat, projective')
    rep = run(req)
    assert set(rep["results"]) == {"flat", "projective"}
    assert rep["results"]["flat"]["flat"] is False
    assert rep["results"]["projective"]["projectively_flat"] is True
    assert rep["results"]["projective"]["L1"] == "0"
    assert rep["results"]["projective"]["L2"] == "0"


def test_run_standard_killing():
    rep = run(parse_connection_file('family = standard\nreport = killing\npoint = "0, 0"\norder = 6'))
    assert [d["dimension"] for d in rep["results"]["killing"]["dimensions"]] == [6] * 5


def test_run_elliptic_killing():
    req = parse_connection_file((GOLDEN / "elliptic_xi.conn").read_text())
    kl = run(req)["results"]["killing"]
    assert kl["dimension"] == 1 and kl["stabilized"] is True
    assert kl["basis"] == [{"a": "1", "b": "0"}]


def test_run_attaches_analysis_name():
    req = parse_connection_file('G^1_11 = "1/z"\nreport = torsion, killing\npoint = "0, 0"')
    with pytest.raises(AnalysisError) as info:
        run(req)
    assert info.value.analysis == "killing"
    req = parse_connection_file('G^1_12 = "1"\nreport = flat')
    with pytest.raises(AnalysisError) as info:
        run(req)
    assert info.value.analysis == "flat"


def test_jet_expression_offsets():
    base = ChartPoint(1, 2)
    e = Z * XI + Z ** 2
    assert jet_expression(jet(e, base, 2)) == e


# reports

@pytest.mark.parametrize("name", ["elliptic_xi", "standard", "batch"])
def test_golden_machine(name):
    code, out, _ = cli("analyze", str(GOLDEN / f"{name}.conn"), "--format", "machine")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("name", ["elliptic_xi", "standard", "batch"])
def test_golden_text(name):
    code, out, _ = cli("analyze", str(GOLDEN / f"{name}.conn"))
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name", ["elliptic_xi", "standard", "batch"])
def test_machine_round_trip_bytes(name):
    s = (GOLDEN / f"{name}.json").read_text()
    assert dumps_machine(json.loads(s)) == s


def _strings(node, path=()):
    if isinstance(node, dict):
        for k, v in node.items():
            yield from _strings(v, path + (k,))
    elif isinstance(node, list):
        for n, v in enumerate(node):
            yield from _strings(v, path + (n,))
    elif isinstance(node, str):
        yield path, node


def test_expressions_reparse():
    doc = json.loads((GOLDEN / "batch.json").read_text())
    reqs = parse_batch((GOLDEN / "batch.conn").read_text())
    checked = 0
    for rep, req in zip(doc["reports"], reqs):
        for path, s in _strings(rep["results"]):
            e = parse_expr(s, req.variables)
            assert parse_expr(e.to_string(req.variables), req.variables) == e
            checked += 1
        assert rep["request"]["variables"] == list(req.variables)
    # values agree with a direct computation
    from holoconn.projective import geodesic_ode, liouville_invariants
    rat = reqs[1]
    lv = liouville_invariants(geodesic_ode(rat.connection))
    assert (parse_expr(doc["reports"][1]["results"]["projective"]["L1"], rat.variables) - lv.l1).is_zero()
    assert checked > 20


def test_determinism_and_jobs():
    path = str(GOLDEN / "batch.conn")
    a = cli("analyze", path, "--format", "machine")[1]
    b = cli("analyze", path, "--format", "machine")[1]
    c = cli("analyze", path, "--format", "machine", "--jobs", "3")[1]
    assert a == b == c


def test_timing_is_opt_in():
    path = str(GOLDEN / "standard.conn")
    doc = json.loads(cli("analyze", path, "--format", "machine", "--timing")[1])
    assert set(doc["reports"][0]["timing"]) == {"killing"}
    assert "timing" not in json.loads(cli("analyze", path, "--format", "machine")[1])["reports"][0]


def test_command_line_overrides(tmp_path):
    f = tmp_path / "c.conn"
    f.write_text('family = elliptic; f12 = "xi"; g22 = "0"; g12 = "0"\n')
    code, out, _ = cli("analyze", str(f), "--report", "killing", "--point", "0,0", "--order", "5",
                       "--window", "2", "--format", "machine")
    assert code == 0
    kl = json.loads(out)["reports"][0]["results"]["killing"]
    assert [d["order"] for d in kl["dimensions"]] == [2, 3, 4, 5]
    assert kl["dimension"] == 1


# exit codes

def test_exit_codes(tmp_path):
    good = tmp_path / "good.conn"
    good.write_text('family = standard\n')
    bad = tmp_path / "bad.conn"
    bad.write_text('G^1_11 = "xi ^ -1"\n')
    pole = tmp_path / "pole.conn"
    pole.write_text('G^1_11 = "1/z"\nreport = killing\npoint = "0, 0"\n')
    assert cli("analyze", str(good))[0] == 0
    code, _, err = cli("analyze", str(bad))
    assert code == 1 and "line 1, column 16" in err
    code, _, err = cli("analyze", str(pole))
    assert code == 2 and "killing" in err and "PoleAtBase" in err
    assert cli("analyze", str(good), "--bogus")[0] == 1
    assert cli("analyze", str(tmp_path / "missing.conn"))[0] == 1
    assert cli("analyze", str(good), "--report", "killing")[0] == 1  # no point
    assert cli("analyze", str(good), "--point", "1,2,3", "--report", "killing")[0] == 1
    assert cli()[0] == 1


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "holoconn", "analyze", str(GOLDEN / "standard.conn"),
                           "--format", "machine"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "standard.json").read_text()


def test_machine_document_shape():
    doc = machine_document([])
    assert doc["engine"]["name"] == "holoconn"
    assert dumps_machine(doc).endswith("}\n")
