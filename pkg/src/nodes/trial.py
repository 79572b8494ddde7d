from __future__ import annotations

"""
trial 节点：单次增量喂入试验

它在整个流程中的位置：
- planner 为每个 trial_index 发来一个 TrialTask
- 本节点独立完成一次试验：生成邻近矩阵、逐条喂入随机记忆，
  每喂入一条就统计一次存储数（传统判定）和检索数（生成元扫描）
- 只返回自己的 TrialRecord，由 merge_trial_records 汇聚

随机流：
- 每个试验的 RNG 只由 (master_seed, trial_index) 派生，
  所以结果与并行调度、执行顺序都无关
- 先抽邻近矩阵，再抽 M 条记忆
"""

from typing import List

import numpy as np

from ..logs import get_logger
from ..network import (
    BipolarVector,
    TMatrix,
    accumulate_memory,
    count_stored,
    generate_fair_proximity,
    scan_generators,
    update_order,
)
from ..settings import ExperimentConfig
from ..state import TrialRecord, TrialTask

_log = get_logger("Trial")


def derive_trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """由 (master_seed, trial_index) 派生独立的随机流"""
    return np.random.default_rng(np.random.SeedSequence([master_seed, trial_index]))


def run_trial(config: ExperimentConfig, trial_index: int) -> TrialRecord:
    """
    执行一次试验

    返回 stored[k-1] / retrieved[k-1]：喂入 k 条记忆后的计数，k = 1..M
    """
    n = config.neurons
    rng = derive_trial_rng(config.master_seed, trial_index)
    P = generate_fair_proximity(n, rng, config.proximity_mode)
    memories = [BipolarVector.random(n, rng) for _ in range(config.memories)]

    # 同一个试验里邻近矩阵不变，每个神经元的更新顺序只算一次
    orders = [update_order(P, k, config.strategy) for k in range(1, n + 1)]

    T = TMatrix.zeros(n)
    stored: List[int] = []
    retrieved: List[int] = []
    for k, memory in enumerate(memories, 1):
        T = accumulate_memory(T, memory)
        fed = memories[:k]
        stored.append(count_stored(T, fed))
        gmap = scan_generators(
            T,
            P,
            fed,
            config.strategy,
            polarities=config.polarities,
            match_complement=config.match_complement,
            orders=orders,
        )
        retrieved.append(gmap.retrieved_count)

    _log(f"trial {trial_index} 完成: 最终 stored={stored[-1]}, retrieved={retrieved[-1]}", "DEBUG")
    return {"trial_index": trial_index, "stored": stored, "retrieved": retrieved}


def trial_node(task: TrialTask) -> dict:
    # 输入：Send 发来的 TrialTask
    # 输出：只返回本节点负责的字段（避免并发冲突）
    record = run_trial(task["config"], task["trial_index"])
    return {
        "trial_records": [record],
        "trace": [f"trial {task['trial_index']} done"],
    }
