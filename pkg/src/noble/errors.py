"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 parse error, 3 validation error, 4 size cap, 5 inconclusive finding.
"""


class NobleError(Exception):
    exit_code = 1


class ParseError(NobleError):
    exit_code = 2

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NotInjective(ParseError):
    def __init__(self, line):
        super().__init__(line, "partial map is not one-to-one")


class ValidationError(NobleError):
    exit_code = 3


class NotAssociative(ValidationError):
    def __init__(self, s, t, u):
        self.witness = (s, t, u)
        super().__init__(f"(st)u != s(tu) for s={s}, t={t}, u={u}")


class NotRegular(ValidationError):
    def __init__(self, s):
        self.witness = (s,)
        super().__init__(f"element {s} has no inverse")


class InverseNotUnique(ValidationError):
    def __init__(self, s, t1, t2):
        self.witness = (s, t1, t2)
        super().__init__(f"element {s} has two inverses {t1} and {t2}")


class IdempotentsDontCommute(ValidationError):
    def __init__(self, e, f):
        self.witness = (e, f)
        super().__init__(f"idempotents {e} and {f} do not commute")


class EquivalentFormsDisagree(ValidationError):
    def __init__(self, s, t):
        self.witness = (s, t)
        super().__init__(f"natural order characterisations disagree on ({s}, {t})")


class MismatchedPointSets(ValidationError):
    def __init__(self, m1, m2):
        super().__init__(f"partial maps act on {m1} and {m2} points")


class EmptyGenerators(ValidationError):
    def __init__(self):
        super().__init__("no generators given")


class ZeroHasNoPrincipalFilter(ValidationError):
    def __init__(self, s):
        super().__init__(f"element {s} is the zero; its up-set is the whole semigroup")


class NotClosedInverseSubsemigroup(ValidationError):
    def __init__(self, carrier):
        super().__init__(f"filter {carrier} contains no idempotent")


class FamilyNotUniform(ValidationError):
    def __init__(self, i, j):
        self.witness = (i, j)
        super().__init__(f"family members {i} and {j} are not of the same magnitude")


class ActionNotFunctional(ValidationError):
    def __init__(self, s, detail=""):
        self.element = s
        super().__init__(f"element {s} does not act as a partial bijection on the family {detail}".rstrip())


class NotTransitive(ValidationError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"no member maps point {a} to point {b}")


class DegenerateSemigroup(ValidationError):
    def __init__(self):
        super().__init__("the one-element semigroup has no filters")


class NotAGroup(ValidationError):
    def __init__(self, count):
        super().__init__(f"semigroup has {count} idempotents, a group has exactly one")


class NotASubgroup(ValidationError):
    def __init__(self, carrier):
        super().__init__(f"{carrier} is not a subgroup")


class SizeCapExceeded(NobleError):
    exit_code = 4

    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class ExplosionCap(SizeCapExceeded):
    def __init__(self, limit):
        super().__init__("closure", limit + 1, limit)


class Inconclusive(NobleError):
    exit_code = 5

    def __init__(self, details):
        self.details = details
        super().__init__(f"engine and theorem disagree: {details}")
