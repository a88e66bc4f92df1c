"""Exception hierarchy.

Exit-code mapping used by the CLI: input/parse problems -> 1,
precision or iteration budgets -> 2, certificate violations -> 3.
"""


class ToricdecError(Exception):
    exit_code = 1


class InputError(ToricdecError):
    """Malformed input: DSL text, automaton file, bad arguments."""

    exit_code = 1


class ParseError(InputError):
    """Syntax error with a location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + loc)


class PrecisionError(ToricdecError):
    """A comparison or search exhausted its precision/step budget.

    Soundness over completeness: we refuse rather than guess.
    """

    exit_code = 2


class BudgetError(PrecisionError):
    """Iteration/step budget exhausted (coverage search, hit search, ...)."""

    exit_code = 2


class CertificateError(ToricdecError):
    """A certified assumption was refuted (boundary hit past the
    transient prefix, false independence declaration, ...)."""

    exit_code = 3


class ClassificationUnavailableError(ToricdecError):
    """The word carries no almost-periodicity oracle, so recurrence
    classification is refused."""

    exit_code = 1
