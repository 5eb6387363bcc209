"""Chart rendering adapters."""

from kcport.adapters.charts.svg_chart_adapter import SvgChartAdapter

__all__ = ["SvgChartAdapter"]
