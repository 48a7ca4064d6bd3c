import pytest

from amrsmith.utils.circuit_breaker import CircuitBreaker, CircuitBreakerError, CircuitState


class FakeClock:
    def __init__(self):
        self.now = 100.0

    def __call__(self):
        return self.now


def failing_func():
    raise ValueError("Test error")


def test_circuit_breaker_initialization():
    """Test circuit breaker initialization"""
    cb = CircuitBreaker("wiki_http", failure_threshold=3, recovery_timeout=5)
    assert cb.name == "wiki_http"
    assert cb.failure_threshold == 3
    assert cb.recovery_timeout == 5
    assert cb.state == CircuitState.CLOSED
    assert cb.failure_count == 0


def test_circuit_breaker_successful_calls():
    """Test circuit remains closed on successful calls"""
    cb = CircuitBreaker("wiki_http")

    assert cb.call(lambda: "success") == "success"
    assert cb.state == CircuitState.CLOSED
    assert cb.failure_count == 0


def test_circuit_breaker_opens_after_failures():
    """Test circuit opens after failure threshold"""
    cb = CircuitBreaker("wiki_http", failure_threshold=3)

    for i in range(2):
        with pytest.raises(ValueError):
            cb.call(failing_func)
        assert cb.state == CircuitState.CLOSED
        assert cb.failure_count == i + 1

    with pytest.raises(ValueError):
        cb.call(failing_func)

    assert cb.state == CircuitState.OPEN
    assert cb.is_open


def test_circuit_breaker_fails_fast_when_open():
    cb = CircuitBreaker("wiki_http", failure_threshold=1)
    with pytest.raises(ValueError):
        cb.call(failing_func)

    with pytest.raises(CircuitBreakerError) as exc_info:
        cb.call(lambda: "never")
    with pytest.raises(CircuitBreakerError):
        cb.guard()

    assert exc_info.value.code == "wiki_http_circuit_open"
    assert cb.refused == 2


def test_success_resets_failure_count():
    cb = CircuitBreaker("wiki_http", failure_threshold=3)
    cb.record_failure()
    cb.record_failure()
    cb.record_success()

    assert cb.failure_count == 0
    assert cb.state == CircuitState.CLOSED


def test_half_open_after_recovery_timeout():
    """Test a trial call is allowed once the recovery timeout elapses"""
    clock = FakeClock()
    cb = CircuitBreaker("wiki_http", failure_threshold=1, recovery_timeout=30, clock=clock)
    cb.record_failure()
    assert cb.is_open

    clock.now += 29
    assert cb.is_open

    clock.now += 1
    cb.guard()
    assert cb.state == CircuitState.HALF_OPEN

    cb.record_success()
    assert cb.state == CircuitState.CLOSED


def test_failed_trial_reopens():
    clock = FakeClock()
    cb = CircuitBreaker("wiki_http", failure_threshold=1, recovery_timeout=10, clock=clock)
    cb.record_failure()
    clock.now += 10

    with pytest.raises(ValueError):
        cb.call(failing_func)

    assert cb.state == CircuitState.OPEN


def test_reset():
    cb = CircuitBreaker("wiki_http", failure_threshold=1)
    cb.record_failure()

    cb.reset()

    assert cb.state == CircuitState.CLOSED
    assert cb.refused == 0
    assert cb.last_failure_time is None
