"""CNF data model, DIMACS I/O, literal classification and bad-pair detection.

Literals are signed DIMACS-style integers: ``v`` is the positive literal of
variable ``v >= 1`` and ``-v`` its negation.  A clause holds at most one
literal per variable (no duplicates, no tautologies), so a clause is simply a
frozenset of nonzero ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import ContractViolation, ParseError

Literal = int
Clause = frozenset  # frozenset[Literal]
TruthAssignment = dict  # dict[int, bool], total on 1..num_vars


def variable(lit: Literal) -> int:
    return abs(lit)


def is_negated(lit: Literal) -> bool:
    return lit < 0


def negate(lit: Literal) -> Literal:
    return -lit


def lit_value(t: Mapping[int, bool], lit: Literal) -> bool:
    """Value of a literal under an assignment; t(-v) = not t(v)."""
    v = t[abs(lit)]
    return (not v) if lit < 0 else v


def make_clause(literals: Iterable[int]) -> Clause:
    """Build a clause, collapsing duplicates and rejecting tautologies."""
    lits = frozenset(int(l) for l in literals)
    if not lits:
        raise ContractViolation("empty clause")
    for l in lits:
        if l == 0:
            raise ContractViolation("literal 0 is not allowed")
        if -l in lits:
            raise ContractViolation(f"tautological clause: contains both {abs(l)} and its negation")
    return lits


def clause_key(clause: Clause) -> tuple:
    """Canonical literal order: ascending variable, negated after positive."""
    return tuple(sorted(clause, key=lambda l: (abs(l), l < 0)))


@dataclass(frozen=True)
class CnfFormula:
    """An immutable CNF formula: clause order is significant and preserved."""

    num_vars: int
    clauses: tuple  # tuple[Clause, ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise ContractViolation("num_vars must be nonnegative")
        for idx, c in enumerate(self.clauses):
            if not isinstance(c, frozenset) or not c:
                raise ContractViolation(f"clause {idx} is not a nonempty frozenset")
            for l in c:
                if abs(l) > self.num_vars or l == 0:
                    raise ContractViolation(f"clause {idx}: literal {l} out of range 1..{self.num_vars}")
                if -l in c:
                    raise ContractViolation(f"clause {idx} is tautological")

    @classmethod
    def from_lists(cls, num_vars: int, clause_lists: Iterable[Iterable[int]]) -> "CnfFormula":
        return cls(num_vars, tuple(make_clause(c) for c in clause_lists))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class LiteralClassification:
    """Occurrence counts per literal; a literal in >= 2 clauses is major.

    A literal and its negation are counted independently.
    """

    occurrence_count: Mapping[int, int]
    major: frozenset

    def count(self, lit: Literal) -> int:
        return self.occurrence_count.get(lit, 0)

    def is_major(self, lit: Literal) -> bool:
        return lit in self.major


class BadPair(NamedTuple):
    """Clauses a, b (0-based, a < b) with {lit1,lit2} in a and negations in b."""

    clause_a: int
    clause_b: int
    lit1: Literal
    lit2: Literal


def classify_literals(f: CnfFormula) -> LiteralClassification:
    counts: dict[int, int] = {}
    for c in f.clauses:
        for l in c:
            counts[l] = counts.get(l, 0) + 1
    major = frozenset(l for l, n in counts.items() if n >= 2)
    return LiteralClassification(counts, major)


def find_bad_pairs(f: CnfFormula) -> list:
    """All bad pairs, ordered by (clause_a, clause_b, var(lit1), var(lit2)).

    A single clause pair may contribute several entries, one per qualifying
    literal pair.
    """
    out = []
    m = len(f.clauses)
    for a in range(m):
        ca = f.clauses[a]
        lits_a = sorted(ca, key=abs)
        for b in range(a + 1, m):
            cb = f.clauses[b]
            for i in range(len(lits_a)):
                for j in range(i + 1, len(lits_a)):
                    l1, l2 = lits_a[i], lits_a[j]
                    if -l1 in cb and -l2 in cb:
                        out.append(BadPair(a, b, l1, l2))
    return out


def is_23sat_instance(f: CnfFormula) -> tuple:
    """(True, None) iff all clause sizes are 2 or 3 with at most one major literal.

    Otherwise (False, description-of-first-violation), scanning clauses in order.
    """
    cls = classify_literals(f)
    for idx, c in enumerate(f.clauses):
        if len(c) not in (2, 3):
            return False, f"clause {idx} has size {len(c)}, expected 2 or 3"
        majors = sorted((l for l in c if cls.is_major(l)), key=abs)
        if len(majors) > 1:
            return False, f"clause {idx} contains {len(majors)} major literals: {majors}"
    return True, None


def evaluate(f: CnfFormula, t: Mapping[int, bool]) -> bool:
    """True iff every clause has at least one true literal under t (t total)."""
    for v in range(1, f.num_vars + 1):
        if v not in t:
            raise ContractViolation(f"assignment is not total: variable {v} missing")
    return all(any(lit_value(t, l) for l in c) for c in f.clauses)


def parse_dimacs(text) -> CnfFormula:
    """Parse DIMACS CNF: 'p cnf n m' header, one 0-terminated clause per line.

    Duplicate literals inside a clause collapse silently; tautological or
    empty clauses, out-of-range variables and count mismatches are errors.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    num_vars = None
    num_clauses = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if num_vars < 0 or num_clauses < 0:
                raise ParseError("negative counts in header", lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        try:
            tokens = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in clause line {line!r}", lineno) from None
        if tokens[-1] != 0:
            raise ParseError("clause line not terminated by 0", lineno)
        if 0 in tokens[:-1]:
            raise ParseError("literal 0 inside clause", lineno)
        lits = tokens[:-1]
        if not lits:
            raise ParseError("empty clause", lineno)
        for l in lits:
            if abs(l) > num_vars:
                raise ParseError(f"variable {abs(l)} exceeds header count {num_vars}", lineno)
        if any(-l in lits for l in lits):
            raise ParseError("tautological clause", lineno)
        clauses.append(frozenset(lits))
    if num_vars is None:
        raise ParseError("missing 'p cnf' header")
    if len(clauses) != num_clauses:
        raise ParseError(f"header promises {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def emit_dimacs(f: CnfFormula) -> str:
    """Serialize; literals ascending by variable. parse(emit(f)) == f."""
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for c in f.clauses:
        lines.append(" ".join(str(l) for l in clause_key(c)) + " 0")
    return "\n".join(lines) + "\n"
