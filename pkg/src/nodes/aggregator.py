from __future__ import annotations

"""
aggregator 节点：试验汇聚与求平均

它在整个流程中的位置：
- 所有 trial 节点完成后汇聚到这里（Fan-in）
- 按 trial_index 顺序把计数求算术平均，得到 CapacityCurves
- 这是流程的最后一站
"""

from typing import List

import numpy as np

from ..errors import InvariantViolationError
from ..logs import get_logger
from ..state import CapacityCurves, ExperimentState, TrialRecord

_log = get_logger("Aggregator")


def average_records(records: List[TrialRecord], memories: int) -> CapacityCurves:
    """
    对所有试验记录逐 k 求算术平均

    记录先按 trial_index 排序再求和，浮点累加顺序固定，结果逐位可复现。
    """
    if not records:
        raise InvariantViolationError("没有任何试验记录可供汇聚")
    ordered = sorted(records, key=lambda r: r["trial_index"])
    for record in ordered:
        if len(record["stored"]) != memories or len(record["retrieved"]) != memories:
            raise InvariantViolationError(
                f"trial {record['trial_index']} 的记录长度与 M={memories} 不一致"
            )

    stored = np.array([r["stored"] for r in ordered], dtype=np.float64)
    retrieved = np.array([r["retrieved"] for r in ordered], dtype=np.float64)
    count = len(ordered)
    return CapacityCurves(
        fed=tuple(range(1, memories + 1)),
        stored_avg=tuple(float(v) for v in stored.sum(axis=0) / count),
        retrieved_avg=tuple(float(v) for v in retrieved.sum(axis=0) / count),
        iterations=count,
    )


def aggregator_node(state: ExperimentState) -> dict:
    """
    Aggregator 节点：写出容量曲线

    输入：state.trial_records
    输出：state.curves
    """
    config = state["config"]
    records = state["trial_records"]
    if len(records) != config.iterations:
        raise InvariantViolationError(
            f"期望 {config.iterations} 条试验记录，实际收到 {len(records)} 条"
        )

    curves = average_records(records, config.memories)
    peak = int(np.argmax(curves.retrieved_avg)) + 1
    _log(f"汇聚完成: {len(records)} 个 trial, 检索峰值出现在 k={peak}")
    return {
        "curves": curves,
        "trace": [f"aggregator 完成 (汇聚 {len(records)} 个 trial)"],
    }
