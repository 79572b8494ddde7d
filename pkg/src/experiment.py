"""
experiment.py - 增量喂入蒙特卡洛实验

对外接口：
- run_experiment：通过 LangGraph 并行执行所有试验并求平均，得到容量曲线
- run_experiment_serial：不经过 graph 的串行参考实现，用来核对均值一致性
- generator_snapshot：训练一个网络并扫描生成元，给出生成元图和统计量
- generator_trend：多种子下各规模的平均"非生成元占比"
- build_network：按种子生成邻近矩阵与记忆（generators / retrieve 子命令共用）
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvariantViolationError, SizingError
from .graph import app as experiment_app
from .logs import get_logger
from .network import (
    BipolarVector,
    GeneratorMap,
    ProximityMatrix,
    TMatrix,
    generate_fair_proximity,
    scan_generators,
    train,
)
from .nodes.aggregator import average_records
from .nodes.trial import run_trial
from .settings import ExperimentConfig
from .state import CapacityCurves, make_initial_state

_log = get_logger("Experiment")


def run_experiment(config: ExperimentConfig) -> CapacityCurves:
    """
    执行完整实验（主入口函数）

    trial 之间相互独立，由 graph 并行执行，并发上限为 config.workers；
    汇聚按 trial_index 排序，结果与调度顺序无关。
    """
    total_start = time.time()
    _log("=" * 60)
    _log(f"开始容量曲线实验: n={config.neurons}, M={config.memories}, iterations={config.iterations}")
    _log("=" * 60)

    final_state = experiment_app.invoke(
        make_initial_state(config),
        config={"max_concurrency": config.workers},
    )
    curves = final_state["curves"]
    if curves is None:
        raise InvariantViolationError("实验结束但没有生成容量曲线")

    _log(f"实验完成, 总耗时 {time.time() - total_start:.2f}s")
    return curves


def run_experiment_serial(config: ExperimentConfig) -> CapacityCurves:
    """串行参考实现：逐个执行 trial，再用同一个求平均函数汇聚"""
    records = [run_trial(config, i) for i in range(config.iterations)]
    return average_records(records, config.memories)


def build_network(
    neurons: int,
    memories: int,
    seed: int,
    proximity_mode: str = "fair",
) -> Tuple[ProximityMatrix, List[BipolarVector]]:
    """按种子生成一个网络：先抽邻近矩阵，再抽 memories 条记忆"""
    if neurons < 2:
        raise SizingError(f"网络至少需要 2 个神经元，实际: {neurons}")
    if memories < 0:
        raise SizingError(f"记忆数不能为负: {memories}")
    rng = np.random.default_rng(seed)
    P = generate_fair_proximity(neurons, rng, proximity_mode)
    fed = [BipolarVector.random(neurons, rng) for _ in range(memories)]
    return P, fed


@dataclass(frozen=True)
class GeneratorSnapshot:
    """一次生成元扫描的全部产物：网络、生成元图与统计量"""

    proximity: ProximityMatrix
    memories: Tuple[BipolarVector, ...]
    T: TMatrix
    generator_map: GeneratorMap

    @property
    def non_generator_fraction(self) -> float:
        return self.generator_map.non_generator_fraction

    @property
    def per_memory_generator_fractions(self) -> List[float]:
        return self.generator_map.per_memory_generator_fractions()


def generator_snapshot(
    n: int,
    M: int,
    seed: int,
    strategy: str = "row-sort",
    *,
    polarities: Sequence[int] = (1, -1),
    match_complement: bool = False,
    proximity_mode: str = "fair",
    memories: Optional[Sequence[BipolarVector]] = None,
) -> GeneratorSnapshot:
    """
    训练一个网络并扫描生成元

    memories 给定时直接使用（例如来自记忆文件），此时邻近矩阵仍由 seed 生成。
    """
    if memories is None:
        P, fed = build_network(n, M, seed, proximity_mode)
    else:
        fed = list(memories)
        P, _ = build_network(n, 0, seed, proximity_mode)

    T = train(fed, n)
    gmap = scan_generators(
        T, P, fed, strategy, polarities=polarities, match_complement=match_complement
    )
    _log(
        f"生成元扫描: n={n}, M={len(fed)}, 非生成元占比={gmap.non_generator_fraction:.4f}, "
        f"检索到 {gmap.retrieved_count} 条记忆",
        "DEBUG",
    )
    return GeneratorSnapshot(P, tuple(fed), T, gmap)


def generator_trend(
    loads: Sequence[Tuple[int, int]],
    seeds: Sequence[int],
    strategy: str = "row-sort",
    *,
    polarities: Sequence[int] = (1, -1),
) -> Dict[Tuple[int, int], float]:
    """
    对每个 (n, M) 负载，在所有种子上求平均非生成元占比

    用来观察网络越大、不生成任何记忆的神经元占比越高的趋势。
    """
    if not seeds:
        raise SizingError("至少需要一个种子")
    result: Dict[Tuple[int, int], float] = {}
    for n, M in loads:
        fractions = [
            generator_snapshot(n, M, seed, strategy, polarities=polarities).non_generator_fraction
            for seed in seeds
        ]
        result[(n, M)] = float(np.mean(fractions))
        _log(f"负载 (n={n}, M={M}): 平均非生成元占比 {result[(n, M)]:.4f}")
    return result
