"""Static SVG line charts rendered with matplotlib."""

import io
from collections.abc import Mapping

import matplotlib as mpl
import numpy as np
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from kcport.use_cases.interfaces.chart_renderer_interface import ChartRendererInterface

# fixed ids and no timestamp keep repeated renders byte-identical
_SVG_RC = {"svg.hashsalt": "kcport", "svg.fonttype": "none"}


class SvgChartAdapter(ChartRendererInterface):
    """Renders charts without pyplot state, one Figure per call."""

    def __init__(self, width: float = 8.0, height: float = 4.5) -> None:
        """Initialize chart adapter.

        Args:
            width: Figure width in inches.
            height: Figure height in inches.
        """
        self.width = width
        self.height = height

    def render_lines(
        self,
        title: str,
        x_label: str,
        y_label: str,
        series: Mapping[str, tuple[np.ndarray, np.ndarray]],
    ) -> str:
        """Render one line per series into a self-contained SVG document."""
        with mpl.rc_context(_SVG_RC):
            figure = Figure(figsize=(self.width, self.height))
            FigureCanvasSVG(figure)
            axes = figure.add_subplot()
            for label, (x, y) in series.items():
                axes.plot(x, y, label=label, linewidth=1.0)
            axes.set_title(title)
            axes.set_xlabel(x_label)
            axes.set_ylabel(y_label)
            axes.grid(True, alpha=0.3)
            if series:
                axes.legend()
            figure.tight_layout()
            buffer = io.StringIO()
            figure.savefig(buffer, format="svg", metadata={"Date": None})
        return buffer.getvalue()
