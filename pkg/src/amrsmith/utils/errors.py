"""amrsmith error hierarchy with error codes.

Error code pattern: {component}_{error_type}
Components: config, amr, alignment, corpus, smatch, tokenize, wiki, silver, eval
Error types: not_found, invalid_value, unbalanced_parens, length_mismatch, ...

Examples:
- amr_unbalanced_parens
- corpus_length_mismatch
- wiki_gazetteer_unavailable
- config_invalid_value
"""

# Exit code constants
EXIT_SUCCESS = 0  # Success
EXIT_USAGE_ERROR = 1  # Bad command line (unknown subcommand, missing option)
EXIT_DATA_ERROR = 2  # Input data or configuration could not be processed


class AmrsmithError(Exception):
    """Base exception for amrsmith errors.

    Attributes:
        message: Human-readable error message
        code: Machine-readable error code following pattern {component}_{error_type}
        details: Dict with additional error context (block_index, path, line, ...)
    """

    def __init__(self, message: str, code: str, details: dict = None):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        """String representation with code and key details."""
        parts = [f"{self.message} (code: {self.code})"]
        if self.details:
            detail_items = list(self.details.items())[:3]
            detail_str = ", ".join(f"{k}={v}" for k, v in detail_items)
            parts.append(f"[{detail_str}]")
        return " ".join(parts)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"code={self.code!r}, "
            f"details={self.details!r})"
        )

    def add_context(self, **kwargs) -> "AmrsmithError":
        """Add context to error details and return self for re-raising.

        Example:
            try:
                graph = parse_amr(text)
            except AmrSyntaxError as e:
                raise e.add_context(block_index=3)
        """
        self.details.update(kwargs)
        return self

    @property
    def is_transient(self) -> bool:
        """Whether retrying the failed operation may succeed."""
        return False


class ConfigurationError(AmrsmithError):
    """Configuration file or option errors."""
    pass


class AmrSyntaxError(AmrsmithError):
    """AMR text could not be parsed.

    Carries the 1-based line and column of the offending token.
    """

    default_code = "amr_syntax_error"

    def __init__(self, message: str, line: int, column: int, code: str = None, details: dict = None):
        self.line = line
        self.column = column
        merged = {"line": line, "column": column}
        merged.update(details or {})
        super().__init__(
            f"{message} at line {line}, column {column}",
            code or self.default_code,
            merged,
        )


class UnbalancedParensError(AmrSyntaxError):
    default_code = "amr_unbalanced_parens"


class DuplicateVariableDefinitionError(AmrSyntaxError):
    default_code = "amr_duplicate_variable"


class DanglingRelationError(AmrSyntaxError):
    default_code = "amr_dangling_relation"


class UndefinedVariableReferenceError(AmrSyntaxError):
    default_code = "amr_undefined_variable"


class MissingConceptError(AmrSyntaxError):
    default_code = "amr_missing_concept"


class UnterminatedStringError(AmrSyntaxError):
    default_code = "amr_unterminated_string"


class InvalidGraphError(AmrsmithError):
    """A graph was constructed in violation of its structural invariants."""
    pass


class MalformedAlignmentError(AmrsmithError):
    """Alignment entries that cannot be parsed or resolved.

    Include in details: item (the offending entry) or path.
    """
    pass


class TagMismatchError(AmrsmithError):
    """POS tags that do not line up with sentence tokens."""
    pass


class LengthMismatchError(AmrsmithError):
    """Two corpora that must be aligned by position differ in length."""
    pass


class AlignmentMismatchError(LengthMismatchError):
    """Parser output or gold files disagree on sentence count."""
    pass


class EmptyCorpusError(AmrsmithError):
    """An operation that needs at least one record received none."""
    pass


class SearchSpaceTooLargeError(AmrsmithError):
    """Exhaustive mapping search requested for graphs that are too large."""
    pass


class InsufficientCandidatesError(AmrsmithError):
    """Fewer kept silver candidates than the requested sample size."""
    pass


class GazetteerUnavailableError(AmrsmithError):
    """The wikification backing store could not be opened."""
    pass


class TransientError(AmrsmithError):
    """Base class for errors that should be retried.

    Timeouts, connection failures, 429 and 5xx responses.
    """

    @property
    def is_transient(self) -> bool:
        return True


class IntegrationError(TransientError):
    """Entity-linking service failures.

    Include in details: endpoint, status_code, query.
    """
    pass
