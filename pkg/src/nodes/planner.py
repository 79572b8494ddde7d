from __future__ import annotations

"""
planner 节点：试验分发器

它在整个流程中的位置：
- 实验入口，读取 state.config
- 不做任何计算，只负责确认配置、记录 trace
- 分发逻辑 dispatch_trials 交给 graph.py 的条件边使用：
  每个 trial_index 生成一个 Send("trial", TrialTask)，LangGraph 会并行执行它们
"""

from typing import List

from langgraph.types import Send

from ..logs import get_logger
from ..state import ExperimentState, TrialTask

_log = get_logger("Planner")


def planner_node(state: ExperimentState) -> dict:
    """
    Planner 节点：记录本次实验的规模

    输入：state.config
    输出：只返回 trace（避免与后续节点的写入冲突）
    """
    config = state["config"]
    _log(
        f"实验规模: n={config.neurons}, M={config.memories}, iterations={config.iterations}, "
        f"seed={config.master_seed}, strategy={config.strategy}, polarity={config.polarity_policy}"
    )
    return {"trace": [f"planner 分发 -> {config.iterations} 个 trial"]}


def dispatch_trials(state: ExperimentState) -> List[Send]:
    """
    条件边：为每个试验生成一个 Send

    每个 trial 只拿到 (config, trial_index)，随机流完全由这两者决定。
    """
    config = state["config"]
    tasks: List[Send] = []
    for trial_index in range(config.iterations):
        task: TrialTask = {"config": config, "trial_index": trial_index}
        tasks.append(Send("trial", task))
    return tasks
