"""
LangGraph 状态契约与字段定义（容量曲线实验）

流程：
1) planner 校验配置，为每个 trial_index 分发一个 Send("trial", TrialTask)。
2) trial 节点彼此独立并行执行，各自只返回自己的 TrialRecord。
3) aggregator 在所有 trial 汇聚后按 trial_index 求平均，写出 CapacityCurves。

补充说明：
- ExperimentState 是跨节点共享的唯一数据载体，字段必须全量初始化。
- trial_records 使用自定义 merge_trial_records 合并：拼接后按 trial_index 排序，
  所以无论并行调度顺序如何，汇聚结果都一致。
- errors 与 trace 使用 Annotated + operator.add，支持并行节点安全地追加。
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Annotated, Any, Dict, List, Optional, Tuple, TypedDict, cast

from .errors import InvariantViolationError
from .settings import ExperimentConfig


class TrialRecord(TypedDict):
    trial_index: int
    # 第 k 个位置对应已喂入 k+1 条记忆
    stored: List[int]
    retrieved: List[int]


class TrialTask(TypedDict):
    config: ExperimentConfig
    trial_index: int


def merge_trial_records(left: List[TrialRecord], right: List[TrialRecord]) -> List[TrialRecord]:
    """
    试验记录合并函数

    多个 trial 节点在同一步并发写入时，LangGraph 会调用此函数合并。
    策略：拼接后按 trial_index 排序，结果与完成先后无关。
    """
    return sorted(list(left or []) + list(right or []), key=lambda r: r["trial_index"])


@dataclass(frozen=True)
class CapacityCurves:
    """
    容量曲线：对 k = 1..M，平均存储数（传统判定）与平均检索数（B 矩阵生成元）
    """

    fed: Tuple[int, ...]
    stored_avg: Tuple[float, ...]
    retrieved_avg: Tuple[float, ...]
    iterations: int = 1

    def __post_init__(self) -> None:
        if not (len(self.fed) == len(self.stored_avg) == len(self.retrieved_avg)):
            raise InvariantViolationError("容量曲线三列长度不一致")
        for k, s, r in zip(self.fed, self.stored_avg, self.retrieved_avg):
            if not (0 <= s <= k and 0 <= r <= k):
                raise InvariantViolationError(f"k={k} 处平均值越界: stored={s}, retrieved={r}")

    def __len__(self) -> int:
        return len(self.fed)

    def rows(self) -> List[Tuple[int, float, float]]:
        return list(zip(self.fed, self.stored_avg, self.retrieved_avg))


class ExperimentState(TypedDict):
    # 输入配置
    config: ExperimentConfig
    # 每个 trial 的原始计数（由 trial 节点写入）
    trial_records: Annotated[List[TrialRecord], merge_trial_records]
    # 汇聚结果（由 aggregator 写入）
    curves: Optional[CapacityCurves]
    # 控制与诊断（使用 Annotated 支持并发追加）
    errors: Annotated[List[str], operator.add]
    trace: Annotated[List[str], operator.add]


def make_initial_state(config: ExperimentConfig) -> ExperimentState:
    # 入参校验
    if not isinstance(config, ExperimentConfig):
        raise TypeError("config 必须是 ExperimentConfig。")
    state: Dict[str, Any] = {
        "config": config,
        "trial_records": [],
        "curves": None,
        "errors": [],
        "trace": [],
    }
    return cast(ExperimentState, state)
