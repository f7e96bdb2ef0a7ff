"""
lmpsquare.extension.simplex - Exact rational linear programming.

Two-phase tableau simplex over Fractions with Bland's rule (smallest
entering index, ties in the ratio test broken by smallest basic index), so
it never cycles and always returns the same vertex for the same input.
A brute-force vertex enumeration over exact sympy matrices is provided as an
independent oracle for small problems.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from lmpsquare.exceptions import Infeasible, ModelError, Unbounded
from lmpsquare.logging import logger
from lmpsquare.utils import ZERO, as_fraction, format_rational, rational_matrix, rsum


class Sense(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "=="


@dataclass(frozen=True)
class LinearConstraint:
    """Σ coefficient·variable (sense) rhs, with sparse integer-indexed terms."""

    terms: tuple[tuple[int, Fraction], ...]
    sense: Sense
    rhs: Fraction
    name: str = ""

    def lhs(self, solution: Sequence[Fraction]) -> Fraction:
        return rsum(c * solution[j] for j, c in self.terms)

    def holds(self, solution: Sequence[Fraction]) -> bool:
        value = self.lhs(solution)
        if self.sense is Sense.LE:
            return value <= self.rhs
        if self.sense is Sense.GE:
            return value >= self.rhs
        return value == self.rhs

    def __str__(self) -> str:
        terms = " + ".join(f"{format_rational(c)}*x{j}" for j, c in self.terms) or "0"
        label = f"{self.name}: " if self.name else ""
        return f"{label}{terms} {self.sense.value} {format_rational(self.rhs)}"


@dataclass
class LinearFeasibilityProblem:
    """Linear constraints over named rational unknowns, optionally minimizing a form.

    Unknowns are nonnegative unless listed in free.
    """

    variables: list[str]
    constraints: list[LinearConstraint] = field(default_factory=list)
    objective: dict[int, Fraction] = field(default_factory=dict)
    free: set[int] = field(default_factory=set)

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ModelError("Duplicate variable names")
        self._index = {name: j for j, name in enumerate(self.variables)}

    def index(self, variable: str | int) -> int:
        if isinstance(variable, int):
            if not 0 <= variable < len(self.variables):
                raise ModelError(f"Unknown variable index {variable}")
            return variable
        try:
            return self._index[variable]
        except KeyError:
            raise ModelError(f"Unknown variable {variable!r}") from None

    def _terms(self, coefficients: Mapping[str | int, Fraction | int]) -> dict[int, Fraction]:
        terms: dict[int, Fraction] = {}
        for variable, c in coefficients.items():
            j = self.index(variable)
            terms[j] = terms.get(j, ZERO) + Fraction(c)
        return {j: c for j, c in sorted(terms.items()) if c != 0}

    def add_constraint(
        self,
        coefficients: Mapping[str | int, Fraction | int],
        sense: Sense | str,
        rhs: Fraction | int,
        name: str = "",
    ) -> None:
        terms = self._terms(coefficients)
        self.constraints.append(
            LinearConstraint(tuple(terms.items()), Sense(sense), Fraction(rhs), name)
        )

    def set_objective(self, coefficients: Mapping[str | int, Fraction | int]) -> None:
        self.objective = self._terms(coefficients)

    def mark_free(self, *variables: str | int) -> None:
        self.free.update(self.index(v) for v in variables)

    def objective_value(self, solution: Sequence[Fraction]) -> Fraction:
        return rsum(c * solution[j] for j, c in self.objective.items())

    def check(self, solution: Sequence[Fraction]) -> list[str]:
        """Violated constraints (including sign constraints); empty when feasible."""
        if len(solution) != len(self.variables):
            return [f"solution has {len(solution)} values for {len(self.variables)} variables"]
        violated = [str(c) for c in self.constraints if not c.holds(solution)]
        violated.extend(
            f"{self.variables[j]} >= 0"
            for j, v in enumerate(solution)
            if j not in self.free and v < 0
        )
        return violated


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    solution: tuple[Fraction, ...] | None = None
    objective_value: Fraction | None = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status is not LPStatus.INFEASIBLE


@dataclass
class _StandardForm:
    """A x = b, x >= 0, b >= 0, minimize c·x; plus the map back to problem variables."""

    rows: list[list[Fraction]]
    rhs: list[Fraction]
    costs: list[Fraction]
    columns: list[tuple[int, int]]  # (problem variable, +1 or -1) per structural column
    n_structural: int

    def recover(self, x: Sequence[Fraction], n_variables: int) -> tuple[Fraction, ...]:
        values = [ZERO] * n_variables
        for col, (j, sign) in enumerate(self.columns):
            values[j] += sign * x[col]
        return tuple(values)


def _standard_form(problem: LinearFeasibilityProblem) -> _StandardForm:
    columns: list[tuple[int, int]] = []
    column_of: dict[int, list[tuple[int, int]]] = {}
    for j in range(len(problem.variables)):
        column_of[j] = [(len(columns), 1)]
        columns.append((j, 1))
        if j in problem.free:
            column_of[j].append((len(columns), -1))
            columns.append((j, -1))
    n_structural = len(columns)
    n_slack = sum(1 for c in problem.constraints if c.sense is not Sense.EQ)
    width = n_structural + n_slack

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack = n_structural
    for constraint in problem.constraints:
        row = [ZERO] * width
        for j, c in constraint.terms:
            for col, sign in column_of[j]:
                row[col] += sign * c
        if constraint.sense is Sense.LE:
            row[slack] = Fraction(1)
            slack += 1
        elif constraint.sense is Sense.GE:
            row[slack] = Fraction(-1)
            slack += 1
        b = constraint.rhs
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    costs = [ZERO] * width
    for j, c in problem.objective.items():
        for col, sign in column_of[j]:
            costs[col] += sign * c
    return _StandardForm(rows, rhs, costs, columns, n_structural)


class _Tableau:
    """Dense simplex tableau B⁻¹[A | b] with the current basis."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, c: int) -> None:
        p = self.rows[r][c]
        self.rows[r] = [v / p for v in self.rows[r]]
        self.rhs[r] /= p
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c
        self.pivots += 1

    def drop_row(self, r: int) -> None:
        del self.rows[r]
        del self.rhs[r]
        del self.basis[r]

    def reduced_cost(self, costs: Sequence[Fraction], j: int) -> Fraction:
        return costs[j] - rsum(costs[b] * row[j] for b, row in zip(self.basis, self.rows))

    def optimize(self, costs: Sequence[Fraction], allowed: int) -> LPStatus:
        """Minimize costs·x over columns < allowed using Bland's rule."""
        while True:
            basic = set(self.basis)
            entering = next(
                (
                    j
                    for j in range(allowed)
                    if j not in basic and self.reduced_cost(costs, j) < 0
                ),
                None,
            )
            if entering is None:
                return LPStatus.OPTIMAL
            leaving: tuple[tuple[Fraction, int], int] | None = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if leaving is None or key < leaving[0]:
                        leaving = (key, i)
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving[1], entering)

    def point(self, width: int) -> list[Fraction]:
        x = [ZERO] * width
        for b, value in zip(self.basis, self.rhs):
            if b < width:
                x[b] = value
        return x


def solve(problem: LinearFeasibilityProblem) -> LPResult:
    """Minimize the objective (zero if unset) subject to the constraints.

    Returns:
        LPResult; when OPTIMAL the solution satisfies every constraint exactly
    """
    form = _standard_form(problem)
    m = len(form.rows)
    width = len(form.costs)

    # Phase 1: one artificial column per row, basis = artificials.
    rows = [row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(form.rows)]
    tableau = _Tableau(rows, list(form.rhs), [width + i for i in range(m)])
    phase1_costs = [ZERO] * width + [Fraction(1)] * m
    tableau.optimize(phase1_costs, width + m)
    infeasibility = rsum(
        value for b, value in zip(tableau.basis, tableau.rhs) if b >= width
    )
    if infeasibility > 0:
        logger.debug("LP infeasible after %d phase-1 pivots", tableau.pivots)
        return LPResult(LPStatus.INFEASIBLE, pivots=tableau.pivots)

    # Drive remaining (zero-valued) artificials out; drop redundant rows.
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= width:
            col = next((j for j in range(width) if tableau.rows[r][j] != 0), None)
            if col is None:
                tableau.drop_row(r)
                continue
            tableau.pivot(r, col)
        r += 1

    phase2_costs = list(form.costs) + [ZERO] * m
    status = tableau.optimize(phase2_costs, width)
    if status is LPStatus.UNBOUNDED:
        logger.debug("LP unbounded after %d pivots", tableau.pivots)
        return LPResult(LPStatus.UNBOUNDED, pivots=tableau.pivots)

    solution = form.recover(tableau.point(width), len(problem.variables))
    logger.debug(
        "LP optimal after %d pivots (%d rows, %d columns)", tableau.pivots, m, width
    )
    return LPResult(
        LPStatus.OPTIMAL,
        solution=solution,
        objective_value=problem.objective_value(solution),
        pivots=tableau.pivots,
    )


def require_optimal(problem: LinearFeasibilityProblem, what: str = "linear program") -> LPResult:
    """Solve and insist on an exact optimal solution.

    Raises:
        Infeasible: If no solution satisfies the constraints
        Unbounded: If the objective is unbounded below
    """
    result = solve(problem)
    if result.status is LPStatus.INFEASIBLE:
        raise Infeasible(f"{what} is infeasible")
    if result.status is LPStatus.UNBOUNDED:
        raise Unbounded(f"{what} is unbounded")
    assert result.solution is not None
    violated = problem.check(result.solution)
    if violated:
        raise ModelError(f"{what}: solver output violates {violated[0]}")
    return result


def vertex_enumeration_optimum(problem: LinearFeasibilityProblem) -> LPResult:
    """Minimum of the objective over all basic feasible solutions.

    Exponential in the number of columns; meant as an oracle for tiny
    problems. Assumes the problem is bounded when feasible.
    """
    form = _standard_form(problem)
    width = len(form.costs)
    augmented = rational_matrix([row + [b] for row, b in zip(form.rows, form.rhs)])
    reduced, pivots = augmented.rref()
    if width in pivots:
        return LPResult(LPStatus.INFEASIBLE)
    m = len(pivots)
    matrix = reduced[:m, :width]
    rhs = reduced[:m, width]

    best: tuple[Fraction, ...] | None = None
    best_value: Fraction | None = None
    for chosen in combinations(range(width), m):
        square = matrix[:, list(chosen)]
        if m and square.det() == 0:
            continue
        values = [as_fraction(v) for v in square.LUsolve(rhs)] if m else []
        if any(v < 0 for v in values):
            continue
        x = [ZERO] * width
        for j, v in zip(chosen, values):
            x[j] = v
        solution = form.recover(x, len(problem.variables))
        value = problem.objective_value(solution)
        if best_value is None or value < best_value:
            best, best_value = solution, value
    if best is None:
        return LPResult(LPStatus.INFEASIBLE)
    return LPResult(LPStatus.OPTIMAL, solution=best, objective_value=best_value)
