"""Chart renderer interface."""

from abc import ABC, abstractmethod
from collections.abc import Mapping

import numpy as np


class ChartRendererInterface(ABC):
    """Interface for rendering static line charts."""

    @abstractmethod
    def render_lines(
        self,
        title: str,
        x_label: str,
        y_label: str,
        series: Mapping[str, tuple[np.ndarray, np.ndarray]],
    ) -> str:
        """Render named (x, y) series as one line chart.

        Args:
            title: Chart title.
            x_label: Horizontal axis label.
            y_label: Vertical axis label.
            series: Line label mapped to its x and y values.

        Returns:
            Self-contained SVG document.
        """
