"""Shared test configuration.

Registers a hypothesis profile suited to numerical property tests:
no deadline (adaptive quadrature calls have unpredictable latency) and
a moderate example budget so the full suite stays fast on one core.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "numeric",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numeric")
