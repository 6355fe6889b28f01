"""CSV emitters: figure-reproduction curves, zero tables and alpha sweeps.

All numeric cells are serialized with 15 significant digits, '.' decimal
separator, ',' field separator and '\\n' line terminator; the first
non-comment line is a header.  Identical inputs produce byte-identical
output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bessel import Order
from .errors import PreconditionViolated
from .functional import (
    Family,
    FunctionalParams,
    RatioForm,
    eval_functional,
    functional_domain_cap,
    radius_alpha_convexity,
)
from .zeros import ZeroKind, compute_zeros

__all__ = ["FigureSpec", "FIGURES", "figure_csv", "zeros_csv", "sweep_csv"]

_R_NEAR_ZERO = 1e-6
_CAP_FRACTION = 0.999


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    family: Family
    nu: float
    beta: float
    alphas: tuple[float, ...]
    r_end: float


FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(1, Family.F, 1.0, 0.45, (0.0, 0.1, 0.2, 0.5, 1.0), 1.8),
    2: FigureSpec(2, Family.G, 0.5, 0.37, (0.0, 0.5, 0.6, 0.7, 1.0), 1.5),
    3: FigureSpec(3, Family.H, -0.5, 0.29, (0.0, 0.3, 0.4, 0.8, 1.0), 1.1),
}


def _num(x: float) -> str:
    return format(float(x), ".15g")


def figure_csv(figure_id: int, r_points: int = 200) -> str:
    """Curve data r -> J(alpha, u(r)) for one figure, one column per alpha.

    The grid covers the figure's r interval (first sample nudged to 1e-6 so
    the limit at the origin is visible) plus one extra row at 0.999*cap,
    where the divergence of the alpha > 0 columns is numerically evident.
    Cells past 0.999*cap are left empty.
    """
    if figure_id not in FIGURES:
        raise PreconditionViolated(f"figure_id must be 1, 2 or 3, got {figure_id}")
    if r_points < 2:
        raise PreconditionViolated("need r_points >= 2")
    spec = FIGURES[figure_id]
    order = Order(spec.nu)
    cap = functional_domain_cap(spec.family, order)
    r_cap = _CAP_FRACTION * cap

    grid = [spec.r_end * k / (r_points - 1) for k in range(r_points)]
    grid[0] = _R_NEAR_ZERO
    if all(abs(r - r_cap) > 1e-12 for r in grid):
        grid.append(r_cap)
    grid = sorted(set(grid))

    lines = [
        f"# figure={spec.figure_id},family={spec.family.value},"
        f"nu={_num(spec.nu)},beta={_num(spec.beta)}",
        "r," + ",".join(f"alpha={_num(a)}" for a in spec.alphas),
    ]
    for r in grid:
        cells = [_num(r)]
        for alpha in spec.alphas:
            if r > r_cap * (1.0 + 1e-15):
                cells.append("")
            else:
                cells.append(_num(eval_functional(spec.family, order, alpha, r, RatioForm())))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def zeros_csv(kind: ZeroKind, order: Order, count: int, zero_tol: float = 1e-12) -> str:
    table = compute_zeros(kind, order, count, zero_tol)
    lines = [
        f"# kind={kind.value},nu={_num(order.nu)},zero_tol={_num(zero_tol)}",
        "n,zero",
    ]
    for n in range(1, count + 1):
        lines.append(f"{n},{_num(table[n])}")
    return "\n".join(lines) + "\n"


def sweep_csv(
    family: Family,
    order: Order,
    beta: float,
    alphas: tuple[float, ...],
    tol: float | None = None,
) -> str:
    """Radius of alpha-convexity for each alpha, at fixed family, nu, beta."""
    if not alphas:
        raise PreconditionViolated("sweep needs at least one alpha")
    lines = [
        f"# family={family.value},nu={_num(order.nu)},beta={_num(beta)}",
        "alpha,radius,cap,residual,iterations",
    ]
    for alpha in alphas:
        res = radius_alpha_convexity(family, order, FunctionalParams(alpha, beta), tol)
        lines.append(
            f"{_num(alpha)},{_num(res.radius)},{_num(res.domain_cap_value)},"
            f"{_num(res.residual)},{res.iterations}"
        )
    return "\n".join(lines) + "\n"
