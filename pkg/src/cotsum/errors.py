"""Shared exception types."""


class PreconditionError(Exception):
    """A documented mathematical hypothesis was violated.

    Distinct from ValueError so callers (and the CLI, which maps this to
    exit code 3) can tell "the formula does not apply here" apart from
    "the argument is malformed".
    """
