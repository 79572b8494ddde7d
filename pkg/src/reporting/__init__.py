"""
报告模块 - 把实验结果写成确定性的文本

包含：
- capacity: 容量曲线 CSV（以及可选的 PNG 曲线图）
- layout: 单位圆多边形布局
- svg: 高亮生成元的多边形图
- report: 生成元 JSON 报告

所有 emit_* 函数对相同输入逐字节输出相同内容。
"""

from .capacity import emit_capacity_csv, parse_capacity_csv, plot_capacity_curves, render_capacity_csv
from .layout import PolygonLayout
from .report import build_generator_report, emit_generator_report, render_generator_report
from .svg import PALETTE, emit_generator_svg, palette_for, render_generator_svg

__all__ = [
    "emit_capacity_csv",
    "render_capacity_csv",
    "parse_capacity_csv",
    "plot_capacity_curves",
    "PolygonLayout",
    "emit_generator_svg",
    "render_generator_svg",
    "PALETTE",
    "palette_for",
    "build_generator_report",
    "emit_generator_report",
    "render_generator_report",
]
