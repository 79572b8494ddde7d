"""
B 矩阵 Hebbian 网络模拟器核心包

这个包里装着：
- 网络核心：双极向量、T 矩阵训练、B 矩阵分解、邻近矩阵与单神经元扩散检索
- 实验：增量喂入的蒙特卡洛容量曲线、生成元快照
- 报告：容量曲线 CSV、生成元 SVG 多边形图、JSON 报告

你可以直接 import 这些东西来用，不用关心它们具体在哪个文件里实现的
"""

from src.experiment import generator_snapshot, generator_trend, run_experiment, run_experiment_serial
from src.network import (
    BipolarVector,
    BMatrix,
    GeneratorMap,
    ProximityMatrix,
    TMatrix,
    UpdateOrder,
    accumulate_memory,
    count_stored,
    generate_fair_proximity,
    is_stored,
    lower_triangular,
    permute_T,
    retrieve_from,
    scan_generators,
    sgn,
    spread,
    update_order,
)
from src.nodes.trial import run_trial
from src.settings import ExperimentConfig
from src.state import CapacityCurves

__all__ = [
    # 数据类型
    "BipolarVector",
    "TMatrix",
    "BMatrix",
    "ProximityMatrix",
    "UpdateOrder",
    "GeneratorMap",
    "CapacityCurves",
    "ExperimentConfig",
    # 网络核心
    "sgn",
    "accumulate_memory",
    "is_stored",
    "count_stored",
    "lower_triangular",
    "generate_fair_proximity",
    "update_order",
    "permute_T",
    "spread",
    "retrieve_from",
    "scan_generators",
    # 实验
    "run_trial",
    "run_experiment",
    "run_experiment_serial",
    "generator_snapshot",
    "generator_trend",
]
