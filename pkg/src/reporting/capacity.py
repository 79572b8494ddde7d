"""
capacity.py - 容量曲线输出

- emit_capacity_csv：表头 fed,stored_avg,retrieved_avg，每个 k 一行，6 位小数，LF 换行
- parse_capacity_csv：读回 CSV（用于往返校验）
- plot_capacity_curves：把两条平均曲线画成 PNG（matplotlib，Agg 后端）
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Optional, Union

from ..errors import InvariantViolationError, ReportIOError
from ..logs import get_logger
from ..state import CapacityCurves
from ..tools.sink import Sink, write_text

_log = get_logger("Capacity")

CSV_HEADER = ("fed", "stored_avg", "retrieved_avg")


def render_capacity_csv(curves: CapacityCurves) -> str:
    if len(curves) == 0:
        raise InvariantViolationError("容量曲线为空，拒绝写出 CSV")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for k, stored, retrieved in curves.rows():
        writer.writerow([k, f"{stored:.6f}", f"{retrieved:.6f}"])
    return buffer.getvalue()


def emit_capacity_csv(curves: CapacityCurves, sink: Sink) -> str:
    """先完整生成文本再写出；前置条件不满足时不会留下半个文件"""
    return write_text(sink, render_capacity_csv(curves))


def parse_capacity_csv(text: str) -> CapacityCurves:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise InvariantViolationError(f"CSV 表头不正确: {header}")
    fed, stored, retrieved = [], [], []
    for row in reader:
        fed.append(int(row[0]))
        stored.append(float(row[1]))
        retrieved.append(float(row[2]))
    return CapacityCurves(tuple(fed), tuple(stored), tuple(retrieved))


def plot_capacity_curves(
    curves: CapacityCurves,
    path: Union[str, Path],
    title: Optional[str] = None,
) -> Path:
    """
    绘制"平均存储数 / 平均检索数 vs 喂入记忆数"两条曲线
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(curves.fed, curves.stored_avg, marker="o", markersize=3, label="Traditional (stored)")
    ax.plot(curves.fed, curves.retrieved_avg, marker="s", markersize=3, label="B-matrix (retrieved)")
    ax.set_xlabel("Memories fed")
    ax.set_ylabel("Average count")
    ax.set_title(title or f"{curves.iterations} iterations")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")
    fig.tight_layout()

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=120)
    except OSError as e:
        raise ReportIOError(path, str(e)) from e
    finally:
        plt.close(fig)

    _log(f"容量曲线图已写出: {path}")
    return path
