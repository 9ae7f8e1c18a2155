"""A module for verification reports and their json/csv/table renderings."""
import csv
import io
import json
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from ._exceptions import BudgetExceeded, LiewbError
from .Series import TruncSeries
from .SymFunc import SymFunc

report_logger = logging.getLogger("liewb")

FORMATS = ("json", "csv", "table")

# The statement each identity name checks, reported next to the name.
ANCHORS: Dict[str, str] = {
    "ghost-integrality": "b_i = (g_i - sum_{j<i} p^j b_j^(p^(i-j))) / p^i has integral coefficients",
    "witt-ghost-equation": "sum_{j<=i} p^j B_{p^j k}^(p^(i-j)) = L^k(V^(p^i))",
    "ghost-schur-positivity": "B_{p^i k} is a Schur-positive character",
    "lie-decomposition": "L^(p^m k)(V) = sum_{i<=m} L^(p^i)(B_{p^(m-i) k})",
    "restricted-decomposition": "R^(p^m k)(V) = sum_{i<=m} R^(p^i)(B_{p^(m-i) k})",
    "resolvent-factorisation": "Phi^(rs) = Phi^r o Phi^s for coprime r, s",
    "lie-character-series": "[t^r] script_L(V t) = L^r(V)",
    "lie-dimension-witt": "dim L^r(V) = (1/r) sum_{d|r} mu(d) (dim V)^(r/d)",
    "lie-schur-positivity": "L^r(V) is a Schur-positive character",
    "log-symmetric-series": "log sum_q h_q t^q = sum_q p_q t^q / q",
    "resolvent-divisor-sum": "Phi^q(V) = sum_{d|q} mu(q/d) d L^d(V^(q/d))",
    "exp-log-inverse": "log(exp(f)) = f",
    "log-exp-inverse": "exp(log(1 + f)) = 1 + f",
    "Exp-Log-inverse": "Exp(Log(f)) = f",
    "Log-Exp-inverse": "Log(Exp(f)) = f",
    "plus-op-linearity": "(f + c g)^+ = f^+ + c g^+",
    "plus-op-substitution": "(f(t^q))^+ = (f^+)(t^q)",
    "plus-op-filtration": "f in t^q R[[t]] implies f^+ in t^q R[[t]]",
    "plus-op-additivity": "(sum_i f_i)^+ = sum_i f_i^+ for f_i in t^i R[[t]]",
    "star-S-multiplicative": "S*(f + g) = S*(f) S*(g)",
    "star-L-additive": "L*(f g) = L*(f) + L*(g)",
    "script-L-functional-equation": "script_L(f) + script_L(g) = script_L(f + g - f g)",
    "star-L-star-S-equals-plus": "L*(S*(f)) = L+(S+(f))",
    "star-L-inverts-star-S": "L*(S*(f)) = f",
    "star-S-inverts-star-L": "S*(L*(1 + f)) = 1 + f",
    "pbw-geometric": "S*(script_L(f)) = 1 / (1 - f)",
    "b-classes-actual": "every B_{p^i k} is the class of a module",
    "b-tail-vanishes": "B_{p^i} = 0 for i >= 1 when k = 1",
    "rho-vanishing": "rho^r(V) = 0 unless r is a power of p",
    "rho-p-power-vanishing": "rho^(p^m)(V) = 0 for m >= 2",
    "p-typical": "L*(S*(V t)) has non-zero coefficients only at powers of p",
    "lie-star-sym-coefficients": "[t^r] L*(S*(V t)) = rho^r(V)",
    "resolvent-adams": "Phi^r(V) = mu(r) psi^r(V) for r coprime to p",
    "adams-composition": "psi^(rs) = psi^r o psi^s for r coprime to p",
    "phi-methods-agree": "direct and recursive Phi^r agree",
}


@dataclass
class Check:
    """Outcome of one identity at one parameter point.

    `passed` is None when the check was skipped (budget exceeded or not
    applicable); `witness` then says why.
    """

    identity: str
    params: Dict[str, Any]
    passed: Optional[bool]
    witness: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "anchor": ANCHORS.get(self.identity),
            "params": self.params,
            "pass": self.passed,
            "witness": self.witness,
        }


def describe_difference(lhs: Any, rhs: Any) -> Tuple[bool, Optional[str]]:
    """Compare two exact values and name the first discrepancy if any."""
    if lhs == rhs:
        return True, None
    if isinstance(lhs, TruncSeries) and isinstance(rhs, TruncSeries):
        r = lhs.first_difference(rhs)
        return False, "t^{}: {} != {}".format(r, lhs.coeff(r), rhs.coeff(r))
    if isinstance(lhs, SymFunc) and isinstance(rhs, SymFunc):
        difference = (lhs - rhs).to_basis("s")
        la, coeff = difference.items()[0]
        return False, "lhs - rhs has s[{}] coefficient {}".format(
            ",".join(str(x) for x in la), coeff
        )
    return False, "{} != {}".format(lhs, rhs)


class Report:
    """An ordered collection of `Check` results."""

    def __init__(self, checks: Optional[List[Check]] = None, seed: Optional[int] = None) -> None:
        self.checks: List[Check] = list(checks or [])
        self.seed = seed

    def add(
        self,
        identity: str,
        params: Dict[str, Any],
        passed: Optional[bool],
        witness: Optional[str] = None,
    ) -> Check:
        check = Check(identity, dict(params), passed, witness)
        if self.seed is not None and "seed" not in check.params:
            check.params["seed"] = self.seed
        self.checks.append(check)
        if passed is False:
            report_logger.info("FAIL %s %s: %s", identity, params, witness)
        return check

    def run(
        self,
        identity: str,
        params: Dict[str, Any],
        fn: Callable[[], Union[bool, Tuple[Optional[bool], Optional[str]]]],
    ) -> Check:
        """Record the outcome of `fn`, which returns a bool or (passed, witness).

        Library errors are recorded rather than raised: a `BudgetExceeded`
        or running out of memory marks the check as skipped, any other
        library error as failed.
        """
        try:
            outcome = fn()
        except BudgetExceeded as e:
            report_logger.info("skipped %s %s: %s", identity, params, e)
            return self.add(identity, params, None, "budget exceeded: {}".format(e))
        except MemoryError as e:
            report_logger.error("out of memory in %s %s", identity, params)
            report_logger.debug(e, exc_info=True)
            return self.add(identity, params, None, "out of memory")
        except LiewbError as e:
            report_logger.error(e)
            report_logger.debug(e, exc_info=True)
            return self.add(identity, params, False, "{}: {}".format(type(e).__name__, e))
        if isinstance(outcome, tuple):
            passed, witness = outcome
        else:
            passed, witness = bool(outcome), None
        return self.add(identity, params, passed, witness)

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def failed(self) -> List[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def skipped(self) -> List[Check]:
        return [c for c in self.checks if c.passed is None]

    @property
    def ok(self) -> bool:
        return not self.failed

    def exit_code(self) -> int:
        """0 when everything passed, 1 on any failure, 3 when only skips remain."""
        if self.failed:
            return 1
        if self.skipped:
            return 3
        return 0

    def by_identity(self, identity: str) -> List[Check]:
        return [c for c in self.checks if c.identity == identity]

    def render(self, fmt: str = "json") -> str:
        """Render as json lines, csv or an aligned plain-text table."""
        if fmt == "json":
            return "\n".join(json.dumps(c.to_json(), sort_keys=True) for c in self.checks)
        rows = [
            [
                c.identity,
                json.dumps(c.params, sort_keys=True, separators=(",", ":")),
                {True: "pass", False: "FAIL", None: "skip"}[c.passed],
                c.witness or "",
            ]
            for c in self.checks
        ]
        if fmt == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["identity", "params", "pass", "witness"])
            writer.writerows(rows)
            return buffer.getvalue().rstrip("\n")
        if fmt == "table":
            return format_table(["identity", "params", "pass", "witness"], rows)
        raise ValueError("unknown format {!r}".format(fmt))


def format_table(header: List[str], rows: List[List[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(str(cell))) for w, cell in zip(widths, row)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
