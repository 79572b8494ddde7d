"""
节点包 - 实验流程里的各个"岗位"

把一次容量曲线实验想象成流水线：
- planner：第一道岗位，确认配置并把试验分发出去
- trial：并行岗位，每个试验独立喂记忆、数存储数与检索数
- aggregator：最后一道岗位，把所有试验的计数求平均

这些岗位之间传递的就是 ExperimentState "信封"
"""

from .aggregator import aggregator_node, average_records
from .planner import dispatch_trials, planner_node
from .trial import derive_trial_rng, run_trial, trial_node

__all__ = [
    "planner_node",
    "dispatch_trials",
    "trial_node",
    "run_trial",
    "derive_trial_rng",
    "aggregator_node",
    "average_records",
]
