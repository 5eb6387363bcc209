"""Block distribution adapters."""

from kcport.adapters.distributions.distribution_file_adapter import DistributionFileAdapter

__all__ = ["DistributionFileAdapter"]
