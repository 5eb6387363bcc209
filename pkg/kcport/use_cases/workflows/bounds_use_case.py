"""Closed-form regret bound values."""

from kcport.entities.artifacts import ArtifactBundle
from kcport.entities.errors import InputValidationError
from kcport.entities.run_config import RunConfig
from kcport.use_cases.base_use_case import BaseUseCase
from kcport.use_cases.computations.hindsight import regret_bound


class BoundsUseCase(BaseUseCase):
    """Prints the worst-case log-wealth regret for each requested k."""

    def build(self, config: RunConfig) -> ArtifactBundle:
        """One line per k, formatted with the report precision."""
        if config.m is None or config.n is None:
            msg = "bounds requires m and n"
            raise InputValidationError(msg)
        lines = [
            self.settings.report_float_format % regret_bound(k, config.m, config.n, config.density)
            for k in config.cycle_lengths()
        ]
        return ArtifactBundle(stdout="\n".join(lines))
