"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""


class LSError(Exception):
    code = "error"


class PosetError(LSError):
    code = "poset"


class NotGraded(PosetError):
    code = "not-graded"


class NoUniqueExtremum(PosetError):
    code = "no-unique-extremum"


class NonPositiveBond(PosetError):
    code = "non-positive-bond"


class RedundantCover(PosetError):
    code = "redundant-cover"


class CyclicCovers(PosetError):
    code = "cyclic-covers"


class UnknownElement(PosetError):
    code = "unknown-element"


class NotComparable(PosetError):
    code = "not-comparable"


class NotAChain(PosetError):
    code = "not-a-chain"


class GcdConditionFailed(PosetError):
    code = "gcd-condition"


class SizeBoundExceeded(LSError):
    code = "size-bound"


class IntervalTooLarge(SizeBoundExceeded):
    code = "interval-too-large"


class TooManyChains(SizeBoundExceeded):
    code = "too-many-chains"


class TooLarge(SizeBoundExceeded):
    code = "too-large"


class PathError(LSError):
    code = "path"


class NotAnLSPath(PathError):
    code = "not-an-ls-path"


class NonComparableSupports(PathError):
    code = "non-comparable-supports"


class WidthOne(PathError):
    code = "width-one"


class ZeroPath(PathError):
    code = "zero-path"


class AlgebraError(LSError):
    code = "algebra"


class MissingEntry(AlgebraError):
    code = "missing-entry"


class NonStandardTarget(AlgebraError):
    code = "non-standard-target"


class ZeroElement(AlgebraError):
    code = "zero-element"


class ValuationError(LSError):
    code = "valuation"


class MissingValue(ValuationError):
    code = "missing-value"


class MissingChain(ValuationError):
    code = "missing-chain"


class NoSuchElement(ValuationError):
    code = "no-such-element"


class BoundExceeded(ValuationError):
    code = "bound-exceeded"


class NotInRing(ValuationError):
    code = "not-in-ring"


class SolveFailed(ValuationError):
    code = "solve-failed"


class WeylError(LSError):
    code = "weyl"


class UnsupportedType(WeylError):
    code = "unsupported-type"


class NotDominant(WeylError):
    code = "not-dominant"


class OrbitTooLarge(WeylError, SizeBoundExceeded):
    code = "orbit-too-large"


class MalformedPair(WeylError):
    code = "malformed-pair"


class ParseError(LSError):
    code = "parse-error"
