"""HTTP entity-linking backend for wikification.

The service receives `{"query": name}` and answers `{"title": …}`. Any
failure is a miss: the graph simply keeps no `:wiki` link for that name.
Misses and failed lookups are cached like titles for the linker's lifetime;
only lookups refused by the open breaker are asked again.
"""

import asyncio
import logging
from typing import Dict, Iterable, Optional

import httpx
from tenacity import AsyncRetrying, Retrying, retry_if_exception, stop_after_attempt, wait_exponential

from amrsmith.utils.circuit_breaker import CircuitBreaker, CircuitBreakerError
from amrsmith.utils.errors import AmrsmithError, IntegrationError

logger = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 2.0
DEFAULT_RETRIES = 3
DEFAULT_CONCURRENCY = 8


def _is_transient(error: BaseException) -> bool:
    return isinstance(error, AmrsmithError) and error.is_transient


class HttpEntityLinker:
    """Entity linking over HTTP with retry, circuit breaker and a per-name cache."""

    def __init__(
        self,
        url: str,
        timeout: float = DEFAULT_TIMEOUT,
        retries: int = DEFAULT_RETRIES,
        backoff: float = 0.2,
        max_concurrency: int = DEFAULT_CONCURRENCY,
        circuit_breaker: Optional[CircuitBreaker] = None,
    ):
        """Initialize the linker.

        Args:
            url: Endpoint receiving the JSON query
            timeout: Per-request timeout in seconds
            retries: Attempts per name for transient failures
            backoff: Exponential backoff multiplier in seconds
            max_concurrency: Bound on in-flight requests during prefetch
            circuit_breaker: Shared breaker; one is created when omitted
        """
        self.url = url
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self.max_concurrency = max_concurrency
        self.circuit_breaker = circuit_breaker or CircuitBreaker(name="wiki_http", failure_threshold=5)
        self.cache: Dict[str, Optional[str]] = {}

    def _retry_options(self) -> dict:
        return dict(
            stop=stop_after_attempt(self.retries),
            wait=wait_exponential(multiplier=self.backoff, max=2),
            retry=retry_if_exception(_is_transient),
            reraise=True,
        )

    def _title(self, name: str, response: httpx.Response) -> Optional[str]:
        if response.status_code == 429 or response.status_code >= 500:
            raise IntegrationError(
                f"Entity linker returned {response.status_code}",
                code="wiki_http_status",
                details={"endpoint": self.url, "status_code": response.status_code, "query": name},
            )
        if response.status_code >= 400:
            return None
        try:
            title = response.json().get("title")
        except (ValueError, AttributeError):
            logger.warning(
                f"Entity linker sent an unreadable body for {name!r}",
                extra={"tool": "wiki_http", "operation": "lookup"},
            )
            return None
        return title if isinstance(title, str) and title.strip() else None

    def _transport_error(self, name: str, error: httpx.HTTPError) -> IntegrationError:
        return IntegrationError(
            f"Entity linker request failed: {error}",
            code="wiki_http_request",
            details={"endpoint": self.url, "query": name},
        )

    def _record(self, name: str, title: Optional[str]) -> Optional[str]:
        self.cache[name] = title
        return title

    def lookup(self, name: str) -> Optional[str]:
        """Title for a name, from cache or one blocking request."""
        if name in self.cache:
            return self.cache[name]
        try:
            self.circuit_breaker.guard()
        except CircuitBreakerError:
            return None

        def request() -> Optional[str]:
            try:
                with httpx.Client(timeout=self.timeout) as client:
                    response = client.post(self.url, json={"query": name})
            except httpx.HTTPError as e:
                raise self._transport_error(name, e) from e
            return self._title(name, response)

        try:
            title = Retrying(**self._retry_options())(request)
        except IntegrationError as e:
            self.circuit_breaker.record_failure()
            logger.warning(
                f"Entity lookup failed for {name!r}: {e.message}",
                extra={"tool": "wiki_http", "operation": "lookup", "error_code": e.code},
            )
            return self._record(name, None)
        self.circuit_breaker.record_success()
        return self._record(name, title)

    async def _lookup_async(self, client: httpx.AsyncClient, semaphore: asyncio.Semaphore, name: str) -> None:
        try:
            self.circuit_breaker.guard()
        except CircuitBreakerError:
            return

        async def request() -> Optional[str]:
            try:
                async with semaphore:
                    response = await client.post(self.url, json={"query": name})
            except httpx.HTTPError as e:
                raise self._transport_error(name, e) from e
            return self._title(name, response)

        try:
            title = await AsyncRetrying(**self._retry_options())(request)
        except IntegrationError as e:
            self.circuit_breaker.record_failure()
            logger.warning(
                f"Entity lookup failed for {name!r}: {e.message}",
                extra={"tool": "wiki_http", "operation": "prefetch", "error_code": e.code},
            )
            self._record(name, None)
            return
        self.circuit_breaker.record_success()
        self._record(name, title)

    async def prefetch(self, names: Iterable[str]) -> int:
        """Resolve many names concurrently into the cache; returns the hit count."""
        pending = sorted({n for n in names if n not in self.cache})
        if pending:
            logger.info(
                f"Prefetching {len(pending)} names",
                extra={"tool": "wiki_http", "operation": "prefetch"},
            )
            semaphore = asyncio.Semaphore(self.max_concurrency)
            async with httpx.AsyncClient(timeout=self.timeout) as client:
                await asyncio.gather(*(self._lookup_async(client, semaphore, n) for n in pending))
            if self.circuit_breaker.refused:
                logger.warning(
                    f"Circuit open: skipped {self.circuit_breaker.refused} lookups",
                    extra={"tool": "wiki_http", "operation": "prefetch"},
                )
        return sum(1 for title in self.cache.values() if title)
