"""CNF-style formulas in three flavours and a brute-force satisfiability oracle."""

from __future__ import annotations

import enum
import itertools
import random
from collections import Counter
from dataclasses import dataclass

from ..errors import FlavorMismatch, InvalidFormula, ParseError, TooManyVariables

MAX_BRUTE_VARS = 24


class Flavor(enum.Enum):
    STANDARD_3SAT = "Standard3Sat"
    ONE_IN_THREE = "OneInThreePositive3Bounded"
    NAE_POSITIVE = "NaePositive"

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        aliases = {
            "standard3sat": cls.STANDARD_3SAT,
            "3sat": cls.STANDARD_3SAT,
            "cnf": cls.STANDARD_3SAT,
            "oneinthreepositive3bounded": cls.ONE_IN_THREE,
            "1in3": cls.ONE_IN_THREE,
            "naepositive": cls.NAE_POSITIVE,
            "nae": cls.NAE_POSITIVE,
        }
        key = text.strip().lower().replace("-", "").replace("_", "")
        if key not in aliases:
            raise ParseError(f"unknown flavor {text!r}")
        return aliases[key]


# a literal is a signed 1-based variable id: 3 means x3, -3 means not x3
Clause = tuple[int, ...]


@dataclass(frozen=True)
class Formula:
    n_vars: int
    clauses: tuple[Clause, ...]
    flavor: Flavor
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(1, self.n_vars + 1)))
        validate(self)

    def name(self, var: int) -> str:
        return self.names[var - 1]

    def occurrences(self, var: int) -> list[int]:
        """Indices of clauses containing var (positively or negatively)."""
        return [j for j, c in enumerate(self.clauses) if var in c or -var in c]

    def satisfied_by(self, assignment) -> bool:
        """assignment maps variable id (1-based) to bool; a sequence is read as 0-based."""
        val = _lookup(assignment)
        for c in self.clauses:
            lits = [val(abs(l)) == (l > 0) for l in c]
            if self.flavor is Flavor.STANDARD_3SAT and not any(lits):
                return False
            if self.flavor is Flavor.ONE_IN_THREE and sum(lits) != 1:
                return False
            if self.flavor is Flavor.NAE_POSITIVE and (all(lits) or not any(lits)):
                return False
        return True

    def to_text(self) -> str:
        lines = [f"p {self.flavor.value} {self.n_vars} {len(self.clauses)}"]
        lines += [" ".join(str(l) for l in c) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def _lookup(assignment):
    if isinstance(assignment, dict):
        return lambda v: bool(assignment[v])
    return lambda v: bool(assignment[v - 1])


def validate(f: Formula):
    if f.n_vars < 1:
        raise InvalidFormula("a formula needs at least one variable")
    if len(f.names) != f.n_vars:
        raise InvalidFormula("one name per variable")
    for c in f.clauses:
        if not c:
            raise InvalidFormula("empty clause")
        if any(l == 0 or abs(l) > f.n_vars for l in c):
            raise InvalidFormula(f"literal out of range in clause {c}")
        if len({abs(l) for l in c}) != len(c):
            raise InvalidFormula(f"clause {c} repeats a variable")
        if len(c) != 3:
            raise InvalidFormula(f"clause {c} does not have exactly three literals")
    if f.flavor in (Flavor.ONE_IN_THREE, Flavor.NAE_POSITIVE):
        if any(l < 0 for c in f.clauses for l in c):
            raise InvalidFormula(f"{f.flavor.value} formulas are positive")
    if f.flavor is Flavor.ONE_IN_THREE:
        counts = Counter(abs(l) for c in f.clauses for l in c)
        bad = [v for v in range(1, f.n_vars + 1) if counts[v] != 3]
        if bad:
            raise InvalidFormula(f"variables {bad} do not occur in exactly three clauses")


def require_flavor(f: Formula, flavor: Flavor):
    if f.flavor is not flavor:
        raise FlavorMismatch(f"expected a {flavor.value} formula, got {f.flavor.value}")


def sat_bruteforce(f: Formula) -> tuple[bool, ...] | None:
    """First satisfying assignment in binary counting order, or None."""
    if f.n_vars > MAX_BRUTE_VARS:
        raise TooManyVariables(f"{f.n_vars} variables exceeds {MAX_BRUTE_VARS}")
    for bits in itertools.product((False, True), repeat=f.n_vars):
        if f.satisfied_by(bits):
            return bits
    return None


def all_satisfying(f: Formula) -> list[tuple[bool, ...]]:
    if f.n_vars > MAX_BRUTE_VARS:
        raise TooManyVariables(f"{f.n_vars} variables exceeds {MAX_BRUTE_VARS}")
    return [a for a in itertools.product((False, True), repeat=f.n_vars) if f.satisfied_by(a)]


# text format


def parse_formula(text: str) -> Formula:
    header = None
    clauses = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        if line.startswith("p "):
            parts = line.split()
            if len(parts) != 4 or header is not None:
                raise ParseError("header must be 'p <flavor> <#vars> <#clauses>'")
            try:
                header = (Flavor.parse(parts[1]), int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad header {line!r}") from None
            continue
        if header is None:
            raise ParseError("clause before header")
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"bad clause line {line!r}") from None
        for x in nums:
            if x == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(x)
    if header is None:
        raise ParseError("missing header")
    if pending:
        raise ParseError("last clause is not terminated by 0")
    flavor, n_vars, n_clauses = header
    if len(clauses) != n_clauses:
        raise ParseError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    if flavor is not Flavor.STANDARD_3SAT and any(l < 0 for c in clauses for l in c):
        raise ParseError(f"negative literal in a positive {flavor.value} formula")
    try:
        return Formula(n_vars, tuple(clauses), flavor)
    except InvalidFormula as exc:
        raise ParseError(str(exc)) from None


def load_formula(path: str) -> Formula:
    with open(path) as fh:
        return parse_formula(fh.read())


# random instances


def random_3sat(n_vars: int, n_clauses: int, rng: random.Random) -> Formula:
    clauses = []
    for _ in range(n_clauses):
        vs = rng.sample(range(1, n_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in sorted(vs)))
    return Formula(n_vars, tuple(clauses), Flavor.STANDARD_3SAT)


def random_nae(n_vars: int, n_clauses: int, rng: random.Random) -> Formula:
    clauses = [tuple(sorted(rng.sample(range(1, n_vars + 1), 3))) for _ in range(n_clauses)]
    return Formula(n_vars, tuple(clauses), Flavor.NAE_POSITIVE)


def random_one_in_three(n_vars: int, rng: random.Random, tries: int = 10_000) -> Formula:
    """Random positive formula where every variable occurs in exactly three clauses.

    Built by shuffling three copies of each variable into triples and
    rejecting shuffles that put a variable twice in one clause.
    """
    pool = [v for v in range(1, n_vars + 1) for _ in range(3)]
    for _ in range(tries):
        rng.shuffle(pool)
        clauses = [tuple(sorted(pool[i : i + 3])) for i in range(0, len(pool), 3)]
        if all(len(set(c)) == 3 for c in clauses):
            return Formula(n_vars, tuple(clauses), Flavor.ONE_IN_THREE)
    raise InvalidFormula(f"no valid 1-in-3 instance found for {n_vars} variables")
