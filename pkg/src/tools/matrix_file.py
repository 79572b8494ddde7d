from __future__ import annotations

"""
matrix_file：邻近矩阵的纯文本格式

格式：
- 第一行是 n
- 之后 n 行，每行 n 个空白分隔的十进制数

写出时使用 repr(float)（最短可逆表示），读回后与原矩阵逐位相等。
"""

from pathlib import Path
from typing import Union

import numpy as np

from ..errors import SizingError
from ..network import ProximityMatrix
from .sink import Sink, write_text


def format_proximity(P: ProximityMatrix) -> str:
    lines = [str(P.n)]
    for row in P.entries:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_proximity(text: str) -> ProximityMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise SizingError("矩阵文件为空")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise SizingError(f"矩阵文件第一行必须是整数 n，实际: {lines[0]!r}")
    rows = lines[1:]
    if len(rows) != n:
        raise SizingError(f"矩阵文件声明 n={n}，但有 {len(rows)} 行数据")

    values = []
    for lineno, row in enumerate(rows, 2):
        parts = row.split()
        if len(parts) != n:
            raise SizingError(f"第 {lineno} 行有 {len(parts)} 个值，期望 {n} 个")
        try:
            values.append([float(v) for v in parts])
        except ValueError:
            raise SizingError(f"第 {lineno} 行包含非数字内容: {row!r}")
    return ProximityMatrix(np.array(values, dtype=np.float64))


def write_proximity(P: ProximityMatrix, sink: Sink) -> str:
    return write_text(sink, format_proximity(P))


def read_proximity(path: Union[str, Path]) -> ProximityMatrix:
    with open(path, "r", encoding="utf-8") as f:
        return parse_proximity(f.read())
