"""A module for the decomposition theorems checked in the Green ring of C_p.

Everything here is a consumer of `GreenRing`: the classes B_{p^i k} are
peeled off the Lie powers of a module, and the factorisation, Witt,
restricted-decomposition and p-typicality statements are checked against
explicit matrix computations.
"""
import logging
from typing import Any, Collection, Dict, List, Optional

from ._exceptions import DomainError, NegativeCoords
from .GreenRing import (
    GreenCarrier,
    GreenElement,
    adams_green,
    lie_power_green,
    phi_green,
    restricted_lie_power_green,
    rho_green,
)
from .Report import Report, describe_difference
from .Series import TruncSeries, is_p_typical, star_L, star_S
from .Utils import is_power_of, mobius, require_prime

modular_logger = logging.getLogger("modular")

B_CLASS_CHECKS = (
    "b-classes-actual",
    "witt-ghost-equation",
    "lie-decomposition",
    "restricted-decomposition",
    "b-tail-vanishes",
)


def extract_b_classes(V: GreenElement, k: int, m: int, method: str = "direct") -> List[GreenElement]:
    """The classes B_k, B_{pk}, ..., B_{p^m k} of a module V.

    Uses ``L^{p^i k}(V) = sum over j <= i of L^{p^j}(B_{p^(i-j) k})``:
    the j = 0 term is B_{p^i k} and every other term is already known.

    Raises
    ------
    NegativeCoords
        If a peeled class is not the class of a module.
    """
    p = V.p
    if k < 1 or k % p == 0:
        raise DomainError("extract_b_classes needs k >= 1 coprime to p={}, got {}".format(p, k))
    classes: List[GreenElement] = []
    for i in range(m + 1):
        B = lie_power_green(V, p**i * k, method)
        for j in range(1, i + 1):
            B = B - lie_power_green(classes[i - j], p**j, method)
        if not B.is_actual():
            raise NegativeCoords("B_{} came out as {}".format(p**i * k, B))
        modular_logger.debug("B_%d = %s", p**i * k, B)
        classes.append(B)
    return classes


def lie_star_sym_series(V: GreenElement, D: int) -> TruncSeries:
    """``L*(S*(V t))`` over the Green ring, truncated at D."""
    carrier = GreenCarrier(V.p)
    return star_L(star_S(TruncSeries.monomial(carrier, D, V)))


def verify_green_identities(config: Dict[str, Any], only: Optional[Collection[str]] = None) -> Report:
    """Check the modular decomposition theorems for V = J_a over C_p.

    Parameters
    ----------
    config : Dict[str, Any]
        ``p`` (prime), ``a`` (1 <= a <= p), ``D`` (largest degree for the
        per-degree checks), ``k`` (coprime to p) and ``m``.
    only : Collection[str], optional
        Restrict the run to these identity names.

    Returns
    -------
    Report
        Checks that hit the tensor-space budget are recorded as skipped.
    """
    p = require_prime(int(config.get("p", 2)))
    a = int(config.get("a", 2))
    D = int(config.get("D", 8))
    k = int(config.get("k", 1))
    m = int(config.get("m", 1))
    V = GreenElement.J(p, a)
    report = Report()
    base = {"p": p, "a": a}
    top = p**m * k

    def wanted(*names: str) -> bool:
        return only is None or any(name in only for name in names)

    if wanted("resolvent-factorisation"):
        report.run(
            "resolvent-factorisation",
            dict(base, k=k, m=m),
            lambda: describe_difference(
                phi_green(V, top, "direct"), phi_green(phi_green(V, k), p**m)
            ),
        )

    extracted: List[List[GreenElement]] = []

    def b_classes():
        classes = extract_b_classes(V, k, m)
        extracted.append(classes)
        return True, ", ".join("B_{}={}".format(p**i * k, B) for i, B in enumerate(classes))

    if wanted(*B_CLASS_CHECKS):
        report.run("b-classes-actual", dict(base, k=k, m=m), b_classes)

    if extracted:
        classes = extracted[0]

        def witt_equation():
            for i in range(m + 1):
                lhs = GreenElement.zero(p)
                for j in range(i + 1):
                    lhs = lhs + (classes[j] ** (p ** (i - j))) * p**j
                passed, witness = describe_difference(lhs, lie_power_green(V ** (p**i), k))
                if not passed:
                    return False, "i={}: {}".format(i, witness)
            return True

        def lie_decomposition():
            rhs = GreenElement.zero(p)
            for j in range(m + 1):
                rhs = rhs + lie_power_green(classes[m - j], p**j, "recursive")
            return describe_difference(lie_power_green(V, top, "recursive"), rhs)

        def restricted_decomposition():
            rhs = GreenElement.zero(p)
            for i in range(m + 1):
                rhs = rhs + restricted_lie_power_green(classes[m - i], p**i)
            return describe_difference(restricted_lie_power_green(V, top), rhs)

        if wanted("witt-ghost-equation"):
            report.run("witt-ghost-equation", dict(base, k=k, m=m), witt_equation)
        if wanted("lie-decomposition"):
            report.run("lie-decomposition", dict(base, k=k, m=m), lie_decomposition)
        if wanted("restricted-decomposition"):
            report.run("restricted-decomposition", dict(base, k=k, m=m), restricted_decomposition)
        if k == 1 and wanted("b-tail-vanishes"):
            report.run(
                "b-tail-vanishes",
                dict(base, m=m),
                lambda: all(B.is_zero() for B in classes[1:]),
            )

    if wanted("rho-vanishing"):
        for r in range(2, D + 1):
            if not is_power_of(r, p):
                report.run(
                    "rho-vanishing",
                    dict(base, r=r),
                    lambda r=r: describe_difference(rho_green(V, r), GreenElement.zero(p)),
                )

    if wanted("rho-p-power-vanishing"):
        power = p * p
        while power <= D:
            report.run(
                "rho-p-power-vanishing",
                dict(base, r=power),
                lambda r=power: describe_difference(rho_green(V, r), GreenElement.zero(p)),
            )
            power *= p

    series: List[TruncSeries] = []

    def p_typical():
        series.append(lie_star_sym_series(V, D))
        return is_p_typical(series[0], p)

    if wanted("p-typical", "lie-star-sym-coefficients"):
        report.run("p-typical", dict(base, D=D), p_typical)
    if series and wanted("lie-star-sym-coefficients"):

        def coefficients():
            for r in range(1, D + 1):
                passed, witness = describe_difference(series[0].coeff(r), rho_green(V, r))
                if not passed:
                    return False, "t^{}: {}".format(r, witness)
            return True

        report.run("lie-star-sym-coefficients", dict(base, D=D), coefficients)

    for r in range(2, D + 1):
        if r % p == 0:
            continue
        if wanted("resolvent-adams"):
            report.run(
                "resolvent-adams",
                dict(base, r=r),
                lambda r=r: describe_difference(phi_green(V, r), adams_green(V, r) * mobius(r)),
            )
        if wanted("adams-composition"):
            for s in range(2, D // r + 1):
                report.run(
                    "adams-composition",
                    dict(base, r=r, s=s),
                    lambda r=r, s=s: describe_difference(
                        adams_green(V, r * s), adams_green(adams_green(V, s), r)
                    ),
                )

    if wanted("phi-methods-agree"):
        for r in range(2, D + 1):
            report.run(
                "phi-methods-agree",
                dict(base, r=r),
                lambda r=r: describe_difference(
                    phi_green(V, r, "direct"), phi_green(V, r, "recursive")
                ),
            )

    modular_logger.info(
        "green identities p=%d a=%d: %d checks, %d failed, %d skipped",
        p,
        a,
        len(report.checks),
        len(report.failed),
        len(report.skipped),
    )
    return report
