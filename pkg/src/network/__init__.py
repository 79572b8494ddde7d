"""
网络核心包 - Hebbian 反馈网络与 B 矩阵生成式检索

包含：
- hebbian: 双极向量、T 矩阵训练、存储判定、B 矩阵分解
- proximity: 邻近矩阵合成与更新顺序
- generator: 单神经元扩散检索与生成元扫描

这些都是纯函数 + 只读对象，可以在并行的 trial 之间随意共享。
"""

from .generator import (
    GeneratorMap,
    SpreadTrace,
    permute_T,
    retrieve_from,
    scan_generators,
    spread,
    spread_instrumented,
)
from .hebbian import (
    BipolarVector,
    BMatrix,
    TMatrix,
    accumulate_memory,
    count_stored,
    is_stored,
    lower_triangular,
    sgn,
    sgn_array,
    train,
)
from .proximity import (
    STRATEGIES,
    ProximityMatrix,
    UpdateOrder,
    generate_fair_proximity,
    update_order,
)

__all__ = [
    "BipolarVector",
    "TMatrix",
    "BMatrix",
    "sgn",
    "sgn_array",
    "accumulate_memory",
    "train",
    "is_stored",
    "count_stored",
    "lower_triangular",
    "ProximityMatrix",
    "UpdateOrder",
    "STRATEGIES",
    "generate_fair_proximity",
    "update_order",
    "GeneratorMap",
    "SpreadTrace",
    "permute_T",
    "spread",
    "spread_instrumented",
    "retrieve_from",
    "scan_generators",
]
