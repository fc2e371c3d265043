"""Exception taxonomy shared across the package.

Schema problems (malformed tables, unknown ids, missing entries) are raised as
exceptions and are deliberately distinct from mathematical law violations,
which are recorded as failed checks inside a Report and never raised.
"""


class SchemaError(ValueError):
    """Structurally malformed input: missing entry, unknown id, wiring mismatch."""


class CompositionError(ValueError):
    """Endpoint mismatch when composing walks, arrows, or bundle morphisms."""


class DomainError(ValueError):
    """Evaluation requested outside the domain of a local datum."""


class PreconditionError(ValueError):
    """An operation was invoked on data that failed a required upstream check."""


class InternalInvariantError(RuntimeError):
    """A derived structure violated a law that construction should guarantee."""
