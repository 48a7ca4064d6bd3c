"""Circuit breaker for the entity-linking service.

A dead endpoint would otherwise cost one full timeout per name in a corpus.
After `failure_threshold` consecutive failed lookups the breaker opens and
lookups are refused until `recovery_timeout` seconds have passed; then a
single trial lookup decides whether it closes again.
"""

import logging
import time
from enum import Enum
from typing import Any, Callable, Optional

from amrsmith.utils.errors import AmrsmithError

logger = logging.getLogger(__name__)


class CircuitState(Enum):
    CLOSED = "closed"
    OPEN = "open"
    HALF_OPEN = "half_open"  # one trial lookup allowed


class CircuitBreakerError(AmrsmithError):
    """A lookup was refused because the breaker is open."""

    def __init__(self, name: str, failure_count: int):
        super().__init__(
            message=f"Circuit breaker open for {name}",
            code=f"{name}_circuit_open",
            details={"failures": failure_count},
        )


class CircuitBreaker:
    def __init__(
        self,
        name: str,
        failure_threshold: int = 5,
        recovery_timeout: float = 60,
        clock: Callable[[], float] = time.monotonic,
    ):
        """
        Args:
            name: Backend name, used in log lines and error codes ("wiki_http")
            failure_threshold: Consecutive failures that open the breaker
            recovery_timeout: Seconds in OPEN before a trial lookup
            clock: Monotonic time source
        """
        self.name = name
        self.failure_threshold = failure_threshold
        self.recovery_timeout = recovery_timeout
        self._clock = clock

        self.state = CircuitState.CLOSED
        self.failure_count = 0
        self.refused = 0
        self.last_failure_time: Optional[float] = None

    def _move(self, state: CircuitState, reason: str, level: int = logging.INFO) -> None:
        logger.log(
            level,
            f"Circuit breaker {self.name}: {self.state.name} -> {state.name} ({reason})",
            extra={"breaker": self.name, "failures": self.failure_count},
        )
        self.state = state

    def _refresh(self) -> None:
        if self.state is not CircuitState.OPEN or self.last_failure_time is None:
            return
        elapsed = self._clock() - self.last_failure_time
        if elapsed >= self.recovery_timeout:
            self._move(CircuitState.HALF_OPEN, f"open for {elapsed:.1f}s")

    @property
    def is_open(self) -> bool:
        self._refresh()
        return self.state is CircuitState.OPEN

    def guard(self) -> None:
        """Refuse the next lookup while open; callers report its outcome.

        Raises:
            CircuitBreakerError: The breaker is open
        """
        if self.is_open:
            self.refused += 1
            raise CircuitBreakerError(self.name, self.failure_count)

    def call(self, func: Callable[..., Any], *args, **kwargs) -> Any:
        """Run func behind guard(), recording its outcome."""
        self.guard()
        try:
            result = func(*args, **kwargs)
        except Exception:
            self.record_failure()
            raise
        self.record_success()
        return result

    def record_success(self) -> None:
        if self.state is CircuitState.HALF_OPEN:
            self._move(CircuitState.CLOSED, "trial lookup succeeded")
            self.last_failure_time = None
        self.failure_count = 0

    def record_failure(self) -> None:
        self.failure_count += 1
        self.last_failure_time = self._clock()
        if self.state is CircuitState.HALF_OPEN:
            self._move(CircuitState.OPEN, "trial lookup failed", logging.WARNING)
        elif self.state is CircuitState.CLOSED and self.failure_count >= self.failure_threshold:
            self._move(CircuitState.OPEN, f"{self.failure_count} consecutive failures", logging.ERROR)

    def reset(self) -> None:
        self.state = CircuitState.CLOSED
        self.failure_count = 0
        self.refused = 0
        self.last_failure_time = None
