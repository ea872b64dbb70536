"""Shared error types; the CLI maps these onto exit codes."""


class InputError(ValueError):
    """Malformed or inconsistent input: length mismatches, bad JSON, violated preconditions."""


class UndefinedValueError(ValueError):
    """An invariant is undefined for this argument (e.g. sdepth/depth of the zero module)."""


class BudgetExceededError(RuntimeError):
    """A search was truncated by its node budget.  Distinct from failure: no claim is made."""


class ContradictionError(RuntimeError):
    """A certified claim failed: a guaranteed search came up empty or an emitted
    certificate did not verify.  Always a bug or a genuine counterexample, never
    an operational condition."""
