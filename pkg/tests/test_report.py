from fractions import Fraction

from liewb._exceptions import BudgetExceeded, DomainError
from liewb.Characters import verify_char0, verify_char_identities
from liewb.ModularLab import verify_green_identities
from liewb.Report import ANCHORS, Check, Report, describe_difference, format_table
from liewb.Series import RationalCarrier, TruncSeries
from liewb.SymFunc import power_sum, schur


def test_check_json_uses_pass_key():
    check = Check("lie-decomposition", {"p": 2}, True)
    assert check.to_json() == {
        "identity": "lie-decomposition",
        "anchor": "L^(p^m k)(V) = sum_{i<=m} L^(p^i)(B_{p^(m-i) k})",
        "params": {"p": 2},
        "pass": True,
        "witness": None,
    }


def test_describe_difference_for_series():
    Q = RationalCarrier()
    a = TruncSeries(Q, 3, [0, 1, 2, 3])
    b = TruncSeries(Q, 3, [0, 1, 5, 3])
    assert describe_difference(a, a) == (True, None)
    assert describe_difference(a, b) == (False, "t^2: 2 != 5")


def test_describe_difference_for_characters():
    passed, witness = describe_difference(power_sum(1, 1), schur(2))
    assert not passed
    assert witness == "lhs - rhs has s[1,1] coefficient 1"


def test_run_records_outcomes():
    report = Report()
    report.run("ok", {}, lambda: True)
    report.run("witnessed", {}, lambda: (False, "t^1 differs"))

    def over_budget():
        raise BudgetExceeded("too big")

    def bad_domain():
        raise DomainError("not prime")

    report.run("budget", {}, over_budget)
    report.run("domain", {}, bad_domain)
    assert [c.passed for c in report.checks] == [True, False, None, False]
    assert report.checks[3].witness == "DomainError: not prime"
    assert len(report.failed) == 2
    assert report.exit_code() == 1


def test_exit_codes():
    assert Report().exit_code() == 0
    report = Report()
    report.add("a", {}, True)
    report.add("b", {}, None, "budget exceeded")
    assert report.exit_code() == 3


def test_seed_is_recorded():
    report = Report(seed=5)
    report.add("a", {"D": 4}, True)
    assert report.checks[0].params == {"D": 4, "seed": 5}


def test_renderings():
    report = Report()
    report.add("lie-decomposition", {"p": 2, "k": 3}, True)
    report.add("rho-vanishing", {"r": 3}, False, "J2 != 0")
    lines = report.render("json").splitlines()
    assert lines[0] == (
        '{"identity": "lie-decomposition", "params": {"k": 3, "p": 2}, "pass": true, "witness": null}'
    )
    csv_lines = report.render("csv").splitlines()
    assert csv_lines[0] == "identity,params,pass,witness"
    assert csv_lines[2] == 'rho-vanishing,"{""r"":3}",FAIL,J2 != 0'
    table = report.render("table").splitlines()
    assert table[0].split() == ["identity", "params", "pass", "witness"]
    assert "FAIL" in table[3]


def test_format_table_pads_columns():
    text = format_table(["a", "bb"], [["xyz", "1"]])
    assert text.splitlines() == ["a    bb", "---  --", "xyz  1"]


def test_fraction_witness():
    passed, witness = describe_difference(Fraction(1, 2), 1)
    assert (passed, witness) == (False, "1/2 != 1")


def test_running_out_of_memory_is_a_skip():
    def huge():
        raise MemoryError("Unable to allocate 2.89 GiB")

    report = Report()
    check = report.run("lie-decomposition", {"p": 3}, huge)
    assert check.passed is None
    assert check.witness == "out of memory"
    assert report.exit_code() == 3


def test_every_checked_identity_has_an_anchor():
    names = set()
    names |= {c.identity for c in verify_char_identities({"p": 2, "k": 1, "m": 1, "r": 2, "s": 3, "D": 3}).checks}
    names |= {c.identity for c in verify_char0(3, 0, 1).checks}
    names |= {c.identity for c in verify_green_identities({"p": 2, "a": 2, "k": 1, "m": 1, "D": 4}).checks}
    assert names <= set(ANCHORS)
    assert Check("unknown", {}, True).to_json()["anchor"] is None
