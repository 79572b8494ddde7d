"""
svg.py - 生成元多边形图（SVG 1.1 子集：circle、line 与 fill 属性）

- n 个顶点按 PolygonLayout 排在圆上
- n <= 64 时画出所有顶点对之间的弦（n 更大时弦数是平方级，画出来也看不清）
- 生成元顶点按生成的记忆（喂入顺序）取色，每条记忆一种颜色；非生成元不填充
- 两个极性生成不同记忆时，优先按 +1 极性的记录取色
- 坐标统一保留 3 位小数，相同输入逐字节相同
"""

from __future__ import annotations

import math
from typing import List, Optional

from ..errors import SizingError
from ..network import GeneratorMap
from ..tools.sink import Sink, write_text
from .layout import PolygonLayout

CHORD_LIMIT = 64

# 按喂入顺序取色，超过长度后循环
PALETTE = (
    "#e6194b",
    "#3cb44b",
    "#4363d8",
    "#f58231",
    "#911eb4",
    "#42d4f4",
    "#f032e6",
    "#bfef45",
    "#fabed4",
    "#469990",
    "#dcbeff",
    "#9a6324",
    "#fffac8",
    "#800000",
    "#aaffc3",
    "#808000",
    "#ffd8b1",
    "#000075",
    "#a9a9a9",
    "#ffe119",
)


# 超出固定调色板后，按色相均匀取色的饱和度与明度
EXTRA_SATURATION = 0.65
EXTRA_VALUE = 0.85


def palette_for(count: int) -> List[str]:
    """
    为 count 条记忆各分配一个互不相同的颜色

    前 len(PALETTE) 条用固定调色板，其余在色相环上均匀取色；
    量化成十六进制后若与已有颜色重复，就逐级压低明度直到不重复。
    """
    from matplotlib.colors import hsv_to_rgb, to_hex

    colors = list(PALETTE[:count])
    seen = set(colors)
    extra = count - len(colors)
    for j in range(extra):
        hue = j / extra
        value = EXTRA_VALUE
        color = to_hex(hsv_to_rgb((hue, EXTRA_SATURATION, value)))
        while color in seen:
            value -= 1 / 255
            color = to_hex(hsv_to_rgb((hue, EXTRA_SATURATION, value)))
        seen.add(color)
        colors.append(color)
    return colors


def vertex_memory(gmap: GeneratorMap, neuron: int) -> Optional[int]:
    """决定顶点颜色用哪条记忆：先看 +1 极性，再看 -1 极性"""
    for polarity in (1, -1):
        memory = gmap.memory_for(neuron, polarity)
        if memory is not None:
            return memory
    return None


def render_generator_svg(gmap: GeneratorMap, layout: PolygonLayout) -> str:
    if gmap.n != layout.n:
        raise SizingError(f"生成元图规模 {gmap.n} 与布局顶点数 {layout.n} 不一致")

    memories = [vertex_memory(gmap, k) for k in range(1, gmap.n + 1)]
    used = [m for m in memories if m is not None]
    colors = palette_for(max([gmap.memory_count, *(m + 1 for m in used)]))

    size = layout.size
    positions = layout.positions()
    radius = max(3.0, min(12.0, 0.6 * layout.scale * math.pi / layout.n))

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{size:.3f}" height="{size:.3f}" viewBox="0 0 {size:.3f} {size:.3f}">'
        ),
    ]

    if layout.n <= CHORD_LIMIT:
        for a in range(layout.n):
            x1, y1 = positions[a]
            for b in range(a + 1, layout.n):
                x2, y2 = positions[b]
                lines.append(
                    f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
                    f'stroke="#d0d0d0" stroke-width="0.5"/>'
                )

    for neuron, (x, y) in enumerate(positions, 1):
        memory = memories[neuron - 1]
        fill = colors[memory] if memory is not None else "none"
        lines.append(
            f'<circle id="neuron-{neuron}" cx="{x:.3f}" cy="{y:.3f}" r="{radius:.3f}" '
            f'fill="{fill}" stroke="#333333" stroke-width="1.5"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_generator_svg(gmap: GeneratorMap, layout: PolygonLayout, sink: Sink) -> str:
    return write_text(sink, render_generator_svg(gmap, layout))
