"""
generator.py - 单神经元生成式检索（B 矩阵方法）

流程（retrieve_from）：
    update_order -> permute_T -> lower_triangular -> spread -> 逆排列回原编号

spread 的核心规则：
- f_1 = 起始极性
- 第 i 步只计算第 i 个分量：f_i = sgn(Σ_{j<i} B'_ij f_j)，sgn(0) = +1
- 已经确定的前 i-1 个分量被钳住，永远不再重算

scan_generators 对每个神经元、每个起始极性都跑一次检索，
记录输出与哪条喂入记忆完全一致（逐分量相等），得到 GeneratorMap。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConfigError, PermutationError, SizingError
from .hebbian import BipolarVector, BMatrix, TMatrix, lower_triangular
from .proximity import ProximityMatrix, UpdateOrder, update_order

RecordKey = Tuple[int, int]


def _check_polarity(polarity: int) -> int:
    if polarity not in (1, -1):
        raise ConfigError(f"起始极性只能是 +1 或 -1，实际: {polarity}")
    return int(polarity)


def permute_T(T: TMatrix, order: UpdateOrder) -> TMatrix:
    """重新标号：T'[a][b] = T[order[a]][order[b]]，对称性与零对角保持不变"""
    if not isinstance(order, UpdateOrder):
        order = UpdateOrder(tuple(order))
    if order.n != T.n:
        raise PermutationError(f"排列长度 {order.n} 与网络规模 {T.n} 不一致")
    idx = order.indices
    return TMatrix._trusted(T.entries[np.ix_(idx, idx)], T.memory_count)


def _spread_columns(B: np.ndarray, starts: np.ndarray) -> Tuple[np.ndarray, bool]:
    """
    对多个起始极性同时做扩散

    B: 严格下三角整数矩阵 (n, n)
    starts: 起始极性 (k,)
    返回 (f, zero_sum)，f 形状 (n, k)；zero_sum 表示是否出现过和为 0 的步骤
    """
    n = B.shape[0]
    f = np.empty((n, starts.shape[0]), dtype=np.int64)
    f[0] = starts
    zero_sum = False
    for i in range(1, n):
        sums = B[i, :i] @ f[:i]
        if not zero_sum and np.any(sums == 0):
            zero_sum = True
        f[i] = np.where(sums >= 0, 1, -1)
    return f, zero_sum


@dataclass(frozen=True)
class SpreadTrace:
    """带插桩的扩散结果：最终向量、每一步的片段、是否出现过零和"""

    vector: BipolarVector
    fragments: Tuple[Tuple[int, ...], ...]
    zero_sum: bool


def spread(B: BMatrix, start_polarity: int) -> BipolarVector:
    """按 B'（置换坐标系）从第 1 个分量开始逐步扩散，返回完整的 n 维向量"""
    start = _check_polarity(start_polarity)
    f, _ = _spread_columns(B.entries, np.array([start], dtype=np.int64))
    return BipolarVector(f[:, 0])


def spread_instrumented(B: BMatrix, start_polarity: int) -> SpreadTrace:
    """
    逐步记录片段 f^1, f^2, ..., f^n 的扩散

    每一步都断言前缀不变：f^i 的前 i-1 个分量与 f^{i-1} 完全相同。
    """
    start = _check_polarity(start_polarity)
    entries = B.entries
    n = entries.shape[0]
    fragment: List[int] = [start]
    fragments = [tuple(fragment)]
    zero_sum = False
    for i in range(1, n):
        total = int(entries[i, :i] @ np.asarray(fragment, dtype=np.int64))
        zero_sum = zero_sum or total == 0
        extended = fragment + [1 if total >= 0 else -1]
        assert tuple(extended[:i]) == fragments[-1], "扩散改写了已确定的前缀"
        fragment = extended
        fragments.append(tuple(fragment))
    return SpreadTrace(BipolarVector(np.asarray(fragment)), tuple(fragments), zero_sum)


def _retrieve_columns(
    T: TMatrix, order: UpdateOrder, polarities: Sequence[int]
) -> np.ndarray:
    """按给定顺序检索，返回原始编号下的输出矩阵 (n, k)"""
    B = lower_triangular(permute_T(T, order))
    f, _ = _spread_columns(B.entries, np.asarray(polarities, dtype=np.int64))
    out = np.empty_like(f)
    out[order.indices] = f
    return out


def retrieve_from(
    T: TMatrix,
    P: ProximityMatrix,
    neuron: int,
    polarity: int,
    strategy: str = "row-sort",
) -> BipolarVector:
    """
    从单个神经元出发检索记忆

    neuron 从 1 开始编号；输出在 neuron 位置上恒等于 polarity。
    """
    if P.n != T.n:
        raise SizingError(f"邻近矩阵规模 {P.n} 与网络规模 {T.n} 不一致")
    polarity = _check_polarity(polarity)
    order = update_order(P, neuron, strategy)
    out = _retrieve_columns(T, order, (polarity,))
    return BipolarVector(out[:, 0])


@dataclass(frozen=True)
class GeneratorMap:
    """
    生成元图：records[(神经元, 极性)] = 生成出的喂入记忆下标（0 起始），或 None

    神经元编号 1..n；记忆下标按喂入顺序。
    重复喂入的同一模式只记第一次出现的下标。
    """

    n: int
    memory_count: int
    polarities: Tuple[int, ...]
    records: Dict[RecordKey, Optional[int]] = field(default_factory=dict)

    def memory_for(self, neuron: int, polarity: int) -> Optional[int]:
        return self.records.get((neuron, polarity))

    def memories_of(self, neuron: int) -> List[int]:
        """该神经元在所有已尝试极性下生成的记忆（按极性顺序，去重）"""
        found: List[int] = []
        for polarity in self.polarities:
            m = self.records.get((neuron, polarity))
            if m is not None and m not in found:
                found.append(m)
        return found

    def generator_neurons(self) -> List[int]:
        return [k for k in range(1, self.n + 1) if self.memories_of(k)]

    @property
    def retrieved_count(self) -> int:
        """至少有一个生成元的不同记忆个数"""
        return len({m for m in self.records.values() if m is not None})

    @property
    def non_generator_fraction(self) -> float:
        """不生成任何记忆的神经元占比"""
        return (self.n - len(self.generator_neurons())) / self.n

    def per_memory_generator_fractions(self) -> List[float]:
        """对每条喂入记忆：能生成它的神经元占比"""
        counts = [0] * self.memory_count
        for k in range(1, self.n + 1):
            for m in self.memories_of(k):
                counts[m] += 1
        return [c / self.n for c in counts]


def _match_index(
    outputs: np.ndarray, fed_matrix: np.ndarray, match_complement: bool
) -> List[Optional[int]]:
    """每一列输出对应的第一条完全一致的记忆下标"""
    result: List[Optional[int]] = []
    for col in outputs.T:
        hits = np.flatnonzero(np.all(fed_matrix == col, axis=1))
        if hits.size == 0 and match_complement:
            hits = np.flatnonzero(np.all(fed_matrix == -col, axis=1))
        result.append(int(hits[0]) if hits.size else None)
    return result


def scan_generators(
    T: TMatrix,
    P: ProximityMatrix,
    fed: Sequence[BipolarVector],
    strategy: str = "row-sort",
    *,
    polarities: Sequence[int] = (1, -1),
    match_complement: bool = False,
    orders: Optional[Sequence[UpdateOrder]] = None,
) -> GeneratorMap:
    """
    穷举所有 (神经元, 极性) 组合，找出生成元

    orders 可以传入预先算好的每个神经元的更新顺序（下标 k-1 对应神经元 k），
    同一个试验里邻近矩阵不变，反复扫描时可以复用。
    """
    if P.n != T.n:
        raise SizingError(f"邻近矩阵规模 {P.n} 与网络规模 {T.n} 不一致")
    for x in fed:
        if x.n != T.n:
            raise SizingError(f"记忆长度 {x.n} 与网络规模 {T.n} 不一致")
    pols = tuple(_check_polarity(p) for p in polarities)
    if not pols:
        raise ConfigError("至少需要一个起始极性")
    if orders is not None and len(orders) != T.n:
        raise SizingError(f"预计算顺序个数 {len(orders)} 与网络规模 {T.n} 不一致")
    if orders is not None:
        for neuron, order in enumerate(orders, 1):
            if order.n != T.n or order.start != neuron:
                raise PermutationError(
                    f"第 {neuron} 个预计算顺序应从神经元 {neuron} 出发且长度为 {T.n}，"
                    f"实际起点 {order.start}、长度 {order.n}"
                )

    records: Dict[RecordKey, Optional[int]] = {}
    if not fed:
        return GeneratorMap(T.n, 0, pols, records)

    fed_matrix = np.stack([x.values for x in fed]).astype(np.int64)
    for neuron in range(1, T.n + 1):
        order = orders[neuron - 1] if orders is not None else update_order(P, neuron, strategy)
        outputs = _retrieve_columns(T, order, pols)
        for polarity, memory in zip(pols, _match_index(outputs, fed_matrix, match_complement)):
            records[(neuron, polarity)] = memory

    return GeneratorMap(T.n, len(fed), pols, records)
