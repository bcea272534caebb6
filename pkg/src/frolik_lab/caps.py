"""Size limits for the exhaustive searches.

Every search in the package checks its size against a :class:`Caps`
instance before starting, and raises ``SizeCapExceeded`` instead of
sampling. Functions take an optional ``caps`` argument; ``None`` means
:data:`DEFAULT_CAPS`.
"""

from dataclasses import dataclass, fields

from .errors import SizeCapExceeded


@dataclass(frozen=True)
class Caps:
    product_points: int = 64
    enumerate_points: int = 4
    homeomorphism_points: int = 8
    filter_index: int = 4
    sequences: int = 10**6

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"cap {f.name} must be positive")

    def check(self, name, size):
        cap = getattr(self, name)
        if size > cap:
            raise SizeCapExceeded(name, size, cap)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT_CAPS = Caps()


def resolve(caps):
    return DEFAULT_CAPS if caps is None else caps
