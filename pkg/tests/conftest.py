import sys

from hypothesis import HealthCheck, settings

# frequent interpreter switches keep the multi-worker tests honest on
# few-core machines; per-example deadlines are meaningless under that
sys.setswitchinterval(0.001)

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("suite")
