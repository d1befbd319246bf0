"""Base factory for creating test data in graphex-sim tests."""
from typing import Any, Dict, Optional

import numpy as np

from graphex_sim.rng import seeded


class BaseFactory:
    """Base factory class for creating test objects.

    Provides a seeded generator and a consistent create interface. Randomness
    comes from a per-call Philox generator so that factory output never
    depends on test order.
    """

    default_seed: int = 1234

    @classmethod
    def rng(cls, seed: Optional[int] = None) -> np.random.Generator:
        """Generator for one factory call.

        Args:
            seed: Seed to use (default: cls.default_seed)

        Returns:
            Seeded numpy Generator
        """
        return seeded(cls.default_seed if seed is None else seed)

    @classmethod
    def get_defaults(cls) -> Dict[str, Any]:
        """Get default values for the built object.

        Override in subclasses to provide object-specific defaults.

        Returns:
            Dictionary of default field values
        """
        return {}

    @classmethod
    def build(cls, **kwargs) -> Any:
        """Construct the object from merged defaults; subclasses implement this."""
        raise NotImplementedError("build must be implemented in factory subclass")

    @classmethod
    def create(cls, **kwargs) -> Any:
        """Create an object.

        Args:
            **kwargs: Field values to override defaults

        Returns:
            Created object
        """
        defaults = cls.get_defaults()
        defaults.update(kwargs)
        return cls.build(**defaults)
