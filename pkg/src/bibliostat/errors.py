"""Exception hierarchy.

Errors split into two families so the CLI can map them to exit codes:
``InputError`` (bad or unparseable input, exit 1) and ``ComputationError``
(a metric is undefined for the given data, exit 2).
"""


class BibliostatError(Exception):
    exit_code = 2


class InputError(BibliostatError):
    exit_code = 1


class ComputationError(BibliostatError):
    exit_code = 2


# -- input -----------------------------------------------------------------

class EmptyName(InputError, ValueError):
    pass


class MissingColumn(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SchemaError(InputError, ValueError):
    pass


class ConsistencyError(InputError, ValueError):
    pass


class InvalidPeriods(InputError, ValueError):
    pass


# -- computation -----------------------------------------------------------

class DivisionByZero(ComputationError, ZeroDivisionError):
    pass


class InvalidCounts(ComputationError, ValueError):
    pass


class NonPositiveOutput(ComputationError, ValueError):
    pass


class UndefinedDoublingTime(ComputationError, ValueError):
    pass


class EmptyPeriod(ComputationError, ValueError):
    pass


class EmptyClass(ComputationError, ValueError):
    pass


class DegenerateScaling(ComputationError, ValueError):
    pass


class DegenerateFit(ComputationError, ValueError):
    pass


class DivergentSeries(ComputationError, ValueError):
    pass


class MismatchedSupport(ComputationError, ValueError):
    pass
