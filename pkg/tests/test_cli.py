import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import golden_lines
from sturmcert.cli import main
from sturmcert.expr import (
    ALGEBRAIC,
    TRIG,
    BinOp,
    ExprSyntaxError,
    Neg,
    Num,
    Pow,
    Trig,
    Var,
    parse_expr,
    print_expr,
    to_poly,
    to_trig,
)
from sturmcert.paperlib import build_eta, build_P_n
from sturmcert.sturm import count_roots

MU_TEXT = golden_lines("mu.txt")[0]
P2_TEXT = "1 - cos(10*y) + 1/2*cos(20*y) - 820/33*(1-cos(y))"


# --- parser ----------------------------------------------------------------


def test_parse_eta():
    e = parse_expr("10*x^6+6*x^5-12*x^4-11/2*x^3+29/8*x^2+11/8*x+9/16")
    assert to_poly(e) == build_eta()


def test_parse_lemma7_n2_trig():
    t = to_trig(parse_expr(P2_TEXT, TRIG))
    assert t == build_P_n(2)


def test_precedence():
    assert parse_expr("-x^2") == Neg(Pow(Var("x"), 2))
    assert parse_expr("1-2*x") == BinOp("-", Num(1), BinOp("*", Num(2), Var("x")))
    assert parse_expr("a-b-c") == BinOp("-", BinOp("-", Var("a"), Var("b")), Var("c"))
    assert to_poly(parse_expr("-x^2")).coeffs[-1] == -1


def test_decimals_are_exact():
    assert parse_expr("0.1229") == Num(Fraction(1229, 10000))


@pytest.mark.parametrize(
    "text, position",
    [("x^", 2), ("x^1.5", 2), ("2x", 1), ("(x", 2), ("x+*2", 2), ("x $ 1", 2)],
)
def test_syntax_errors(text, position):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr(text)
    assert exc.value.position == position


def test_mode_restrictions():
    with pytest.raises(ExprSyntaxError):
        parse_expr("cos(x)", ALGEBRAIC)
    with pytest.raises(ExprSyntaxError):
        parse_expr("x + cos(x)", TRIG)
    with pytest.raises(ExprSyntaxError):
        parse_expr("cos(1.5*x)", TRIG)


def test_division_by_polynomial_rejected():
    with pytest.raises(ValueError):
        to_poly(parse_expr("1/x"))


decimals = st.decimals(min_value=0, max_value=1000, places=3, allow_nan=False, allow_infinity=False)
num_leaf = decimals.map(lambda d: Num(Fraction(d)))


def _tree(leaves):
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            kids.map(Neg),
            st.builds(BinOp, st.sampled_from("+-*/"), kids, kids),
            st.builds(Pow, kids, st.integers(min_value=0, max_value=4)),
        ),
        max_leaves=12,
    )


alg_trees = _tree(st.one_of(num_leaf, st.just(Var("x"))))
trig_trees = _tree(
    st.one_of(num_leaf, st.builds(Trig, st.sampled_from(["cos", "sin"]), st.integers(0, 30), st.just("x")))
)


@given(alg_trees)
def test_print_parse_round_trip(e):
    assert parse_expr(print_expr(e), ALGEBRAIC) == e


@given(trig_trees)
def test_print_parse_round_trip_trig(e):
    assert parse_expr(print_expr(e), TRIG) == e


# --- count -----------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_count_mu(capsys):
    code, out, _ = run(capsys, "count", MU_TEXT, "--lo", "65/100", "--hi", "95/100")
    assert (code, out) == (0, "0")


def test_count_sqrt2(capsys):
    assert run(capsys, "count", "Y^2-2", "--lo", "0", "--hi", "2")[:2] == (0, "1")


def test_decimal_endpoints_match_fractions(capsys):
    a = run(capsys, "count", MU_TEXT, "--lo", "0.65", "--hi", "0.95")
    b = run(capsys, "count", MU_TEXT, "--lo", "65/100", "--hi", "95/100")
    assert a == b


def test_count_agrees_with_library(capsys, tmp_path):
    text = "(x-1/3)*(x-1/2)^2*(x+2)*(x^2+1)"
    out_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "count", text, "--lo", "-3", "--hi", "0.6", "--json", str(out_file))
    lib = count_roots(to_poly(parse_expr(text)), (-3, Fraction(3, 5)))
    assert code == 0 and int(out) == lib.count == 3
    data = json.loads(out_file.read_text())
    assert data["root_count"] == 3
    assert data["variations"] == [lib.variations_at_lo, lib.variations_at_hi]
    assert data["interval"] == {"lo": "-3/1", "hi": "3/5"}


def test_count_endpoint_root_exit_code(capsys):
    code, _, err = run(capsys, "count", "x^2-1", "--lo", "0", "--hi", "1")
    assert code == 2 and "hi endpoint" in err


def test_count_shrink_policy(capsys):
    code, out, err = run(capsys, "count", "x^2-1", "--lo", "0", "--hi", "1", "--endpoint-policy", "shrink")
    assert (code, out) == (0, "0") and "moved" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "x^", "--lo", "0", "--hi", "1"],
        ["count", "x", "--lo", "1", "--hi", "0"],
        ["count", "x", "--lo", "abc", "--hi", "1"],
        ["count", "x+y", "--lo", "0", "--hi", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


# --- convert / isolate -----------------------------------------------------


def test_convert_lemma7_n2(capsys):
    code, out, _ = run(capsys, "convert", P2_TEXT)
    assert code == 0 and out == golden_lines("lemma7_n2.txt")[0]


def test_convert_with_scale(capsys):
    code, out, _ = run(capsys, "convert", "1 - cos(x) + 1/2*cos(2*x)", "--scale", "10")
    assert out.startswith("262144*Y^20-1310720*Y^18")


def test_convert_examples(capsys):
    assert run(capsys, "convert", "cos(2*x)")[1] == "2*Y^2-1"
    assert run(capsys, "convert", "sin(3*x)")[1] == "sin(x)*(4*Y^2-1)"
    assert run(capsys, "convert", "2*sin(x)*cos(x)")[1] == "sin(x)*(2*Y)"


def test_convert_mixed_is_usage_error(capsys):
    code, _, err = run(capsys, "convert", "cos(x)+sin(x)")
    assert code == 1 and "mixed" in err


def test_isolate(capsys, tmp_path):
    out_file = tmp_path / "i.json"
    code, out, _ = run(capsys, "isolate", "x^2-2", "--lo", "-2", "--hi", "2", "--width", "0.001", "--json", str(out_file))
    assert code == 0 and len(out.splitlines()) == 2
    data = json.loads(out_file.read_text())
    for iv in data["intervals"]:
        lo, hi = Fraction(iv["lo"]), Fraction(iv["hi"])
        assert hi - lo <= Fraction(1, 1000)
        assert lo**2 < 2 <= hi**2 or hi**2 < 2 <= lo**2


# --- paper -----------------------------------------------------------------


def test_paper_lemma11(capsys, tmp_path):
    out_file = tmp_path / "l11.json"
    code, out, _ = run(capsys, "paper", "lemma11", "--json", str(out_file))
    assert code == 0
    assert out.splitlines() == [line for line in out.splitlines() if "POSITIVE" in line]
    assert len(out.splitlines()) == 1
    data = json.loads(out_file.read_text())
    assert [d["claim_id"] for d in data] == ["lemma11.I"]


def test_paper_lemma7(capsys):
    code, out, _ = run(capsys, "paper", "lemma7")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 20
    assert sum("POSITIVE" in line for line in lines) == 19
    assert [line.split()[0] for line in lines if "NOT-CERTIFIED" in line] == ["lemma07.n06"]


def test_paper_unexpected_failure_exit_code(capsys, monkeypatch):
    from sturmcert import cert

    monkeypatch.setattr(cert, "EXPECTED_FAILURES", frozenset())
    code, _, err = run(capsys, "paper", "lemma7")
    assert code == 3 and "lemma07.n06" in err
