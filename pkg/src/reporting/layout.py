"""
layout.py - 多边形布局

把 n 个神经元放在单位圆上：第 i 个顶点（1 起始）位于角度 2π(i-1)/n。
像素坐标 = 画布中心 + scale · (cos, sin)，y 轴向下（SVG 坐标系）。
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from ..errors import SizingError


@dataclass(frozen=True)
class PolygonLayout:
    n: int
    scale: float = 360.0
    margin: float = 40.0

    def __post_init__(self) -> None:
        if self.n < 2:
            raise SizingError(f"布局至少需要 2 个顶点，实际: {self.n}")
        if self.scale <= 0:
            raise SizingError(f"画布半径必须为正，实际: {self.scale}")

    @property
    def size(self) -> float:
        """正方形画布边长"""
        return 2 * (self.scale + self.margin)

    def unit_position(self, i: int) -> Tuple[float, float]:
        angle = 2 * math.pi * (i - 1) / self.n
        return math.cos(angle), math.sin(angle)

    def position(self, i: int) -> Tuple[float, float]:
        ux, uy = self.unit_position(i)
        center = self.size / 2
        return center + self.scale * ux, center + self.scale * uy

    def positions(self) -> List[Tuple[float, float]]:
        return [self.position(i) for i in range(1, self.n + 1)]
