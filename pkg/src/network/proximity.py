"""
proximity.py - 邻近矩阵与更新顺序

职责：
1. ProximityMatrix：神经元之间的几何邻近度（值越大越远），对称、零对角、非负
2. generate_fair_proximity：按"公平"方式合成邻近矩阵，保证从 1 号神经元出发的
   更新顺序恰好是 [1, 2, ..., n]，且这条链上的值都靠近 n/2
3. update_order：从指定起点出发得到一个排列（row-sort / greedy-chain 两种读法）

编号约定：对外一律 1..n，内部数组下标 0..n-1。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np

from ..errors import ConfigError, InvariantViolationError, NeuronIndexError, PermutationError, SizingError
from .hebbian import MIN_NEURONS

Strategy = Literal["row-sort", "greedy-chain"]
STRATEGIES: Tuple[str, ...] = ("row-sort", "greedy-chain")
ChainMode = Literal["fair", "naive"]


@dataclass(frozen=True, eq=False)
class ProximityMatrix:
    """
    邻近矩阵

    构造时只检查结构约束（方阵、对称、零对角、非负）；
    "公平矩阵"的额外约束用 is_fair() 单独检查，因为手工构造的矩阵不一定满足。
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        raw = np.asarray(self.entries, dtype=np.float64)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise SizingError(f"邻近矩阵必须是方阵，实际形状: {raw.shape}")
        if raw.shape[0] < MIN_NEURONS:
            raise SizingError(f"网络至少需要 {MIN_NEURONS} 个神经元，实际: {raw.shape[0]}")
        if not np.all(np.isfinite(raw)):
            raise InvariantViolationError("邻近矩阵包含非有限值")
        if np.any(np.diagonal(raw) != 0):
            raise InvariantViolationError("邻近矩阵对角线必须为 0")
        if not np.array_equal(raw, raw.T):
            raise InvariantViolationError("邻近矩阵必须对称")
        if np.any(raw < 0):
            raise InvariantViolationError("邻近矩阵不能有负值")
        entries = raw.copy()
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def is_fair(self) -> bool:
        """非对角元落在 (0, n-1]，且第 1 行升序恰好给出 2, 3, ..., n"""
        n = self.n
        off = ~np.eye(n, dtype=bool)
        values = self.entries[off]
        if np.any(values <= 0) or np.any(values > n - 1):
            return False
        return update_order(self, 1).order == tuple(range(1, n + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProximityMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class UpdateOrder:
    """活动扩散的顺序：1..n 的一个排列，第一个元素是起始神经元"""

    order: Tuple[int, ...]

    def __post_init__(self) -> None:
        order = tuple(int(v) for v in self.order)
        n = len(order)
        if sorted(order) != list(range(1, n + 1)):
            raise PermutationError(f"更新顺序不是 1..{n} 的排列: {list(order)}")
        object.__setattr__(self, "order", order)

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def start(self) -> int:
        return self.order[0]

    @property
    def indices(self) -> np.ndarray:
        """0 起始的下标数组，用于 numpy 花式索引"""
        return np.asarray(self.order, dtype=np.intp) - 1

    def inverse_indices(self) -> np.ndarray:
        """inv[原始下标] = 在排列中的位置"""
        inv = np.empty(self.n, dtype=np.intp)
        inv[self.indices] = np.arange(self.n)
        return inv

    @classmethod
    def identity(cls, n: int) -> "UpdateOrder":
        return cls(tuple(range(1, n + 1)))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.order)


def generate_fair_proximity(n: int, rng: np.random.Generator, mode: ChainMode = "fair") -> ProximityMatrix:
    """
    合成邻近矩阵

    mode="fair"（默认）：
      - 第 1 行（规范链）：P[1][j] = n/2 + (j-2)/n，j = 2..n，严格递增且都在 [n/2, n/2+1)
      - 其余非对角元：在 (0, n-1) 内均匀抽取并镜像保证对称
    mode="naive"：
      - 规范链的值也在 (0, n-1) 内随机抽取，排序后仍保持 [1, 2, ..., n] 的顺序；
        这种构造会让 1 号神经元可能离 2 号特别近，即"不公平"的版本
    """
    if n < MIN_NEURONS:
        raise SizingError(f"网络至少需要 {MIN_NEURONS} 个神经元，实际: {n}")
    if mode not in ("fair", "naive"):
        raise ConfigError(f"未知邻近矩阵构造方式: {mode!r}（可选 fair / naive）")

    # 下界取最小正浮点数，保证严格大于 0；uniform 的上界本身是开区间
    low = np.finfo(np.float64).tiny
    draws = rng.uniform(low, n - 1, size=(n, n))
    upper = np.triu(draws, k=1)
    entries = upper + upper.T

    if mode == "fair":
        chain = n / 2 + np.arange(n - 1) / n
    else:
        chain = np.sort(rng.uniform(low, n - 1, size=n - 1))
    entries[0, 1:] = chain
    entries[1:, 0] = chain
    np.fill_diagonal(entries, 0.0)
    return ProximityMatrix(entries)


def _check_start(P: ProximityMatrix, start: int) -> None:
    if not 1 <= start <= P.n:
        raise NeuronIndexError(f"起始神经元 {start} 越界，应在 1..{P.n} 之间")


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ConfigError(f"未知更新顺序策略: {strategy!r}（可选 {' / '.join(STRATEGIES)}）")


def update_order(P: ProximityMatrix, start: int, strategy: str = "row-sort") -> UpdateOrder:
    """
    从 start 出发的更新顺序

    - row-sort：start 之后按 P[start][·] 升序排列其余神经元
    - greedy-chain：每次追加离"最近加入的神经元"最近的未访问神经元
    两种策略的平局都按神经元编号从小到大打破，结果完全确定。
    """
    _check_start(P, start)
    _check_strategy(strategy)
    s = start - 1

    if strategy == "row-sort":
        others = np.array([j for j in range(P.n) if j != s], dtype=np.intp)
        # lexsort 以最后一个键为主键：先比邻近值，再比编号
        ranked = others[np.lexsort((others, P.entries[s, others]))]
        return UpdateOrder(tuple([start] + [int(j) + 1 for j in ranked]))

    visited = np.zeros(P.n, dtype=bool)
    visited[s] = True
    order = [s]
    current = s
    for _ in range(P.n - 1):
        candidates = np.flatnonzero(~visited)
        # argmin 返回第一个最小值的位置，candidates 本身升序，即编号小者优先
        nxt = int(candidates[np.argmin(P.entries[current, candidates])])
        visited[nxt] = True
        order.append(nxt)
        current = nxt
    return UpdateOrder(tuple(j + 1 for j in order))
