"""
hebbian.py - 双极模式、Hebbian 训练、存储判定与 B 矩阵分解

职责：
1. BipolarVector：长度为 n 的 {-1,+1} 模式（记忆和检索输出都用它）
2. TMatrix：对称、零对角的整数互连矩阵 T，记录已累积的记忆数
3. BMatrix：T 的严格下三角部分，满足 B + Bᵗ = T
4. accumulate_memory / is_stored / count_stored / lower_triangular

约定：
- sgn(0) = +1，任何位置都不会出现 0
- T 与 B 全部使用整数运算，每条记忆只贡献 ±1，比较是精确的
- 所有对象构造后只读（numpy 数组 writeable=False），可跨并行任务共享
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from ..errors import InvariantViolationError, SizingError

MIN_NEURONS = 2


def sgn(k: int) -> int:
    """符号函数，k >= 0 时返回 +1（包括 0），否则 -1"""
    return 1 if k >= 0 else -1


def sgn_array(values: np.ndarray) -> np.ndarray:
    """逐元素 sgn，结果为 int8，同样满足 sgn(0) = +1"""
    return np.where(np.asarray(values) >= 0, 1, -1).astype(np.int8)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _check_size(n: int) -> None:
    if n < MIN_NEURONS:
        raise SizingError(f"网络至少需要 {MIN_NEURONS} 个神经元，实际: {n}")


@dataclass(frozen=True, eq=False)
class BipolarVector:
    """
    双极向量：每个分量严格是 -1 或 +1

    内部下标从 0 开始；对外展示（报告、CLI）时神经元从 1 开始编号。
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        raw = np.asarray(self.values)
        if raw.ndim != 1:
            raise SizingError(f"双极向量必须是一维的，实际维度: {raw.ndim}")
        _check_size(raw.shape[0])
        if not np.all((raw == 1) | (raw == -1)):
            raise InvariantViolationError("双极向量只能包含 -1 和 +1")
        object.__setattr__(self, "values", _frozen(raw.astype(np.int8, copy=True)))

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, index: int) -> int:
        return int(self.values[index])

    def __iter__(self):
        return (int(v) for v in self.values)

    def __neg__(self) -> "BipolarVector":
        return BipolarVector(-self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipolarVector):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def __repr__(self) -> str:
        return f"BipolarVector({self.to_string()})"

    def to_string(self) -> str:
        """用 '+' / '-' 字符串表示，例如 '++-+'"""
        return "".join("+" if v > 0 else "-" for v in self.values)

    def tolist(self) -> List[int]:
        return [int(v) for v in self.values]

    @classmethod
    def from_string(cls, text: str) -> "BipolarVector":
        text = text.strip()
        bad = set(text) - {"+", "-"}
        if bad:
            raise InvariantViolationError(f"记忆字符串只能包含 '+' 和 '-'，发现: {''.join(sorted(bad))}")
        return cls(np.array([1 if c == "+" else -1 for c in text], dtype=np.int8))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "BipolarVector":
        """从 {-1,+1}^n 上均匀独立抽取一条记忆"""
        _check_size(n)
        return cls(rng.choice(np.array([-1, 1], dtype=np.int8), size=n))


@dataclass(frozen=True, eq=False)
class TMatrix:
    """
    互连矩阵 T = Σ x xᵗ（对角线置零）

    构造时校验：方阵、n >= 2、对称、零对角、|T_ij| <= memory_count、
    T_ij + memory_count 为偶数。
    """

    entries: np.ndarray
    memory_count: int = 0

    def __post_init__(self) -> None:
        raw = np.asarray(self.entries)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise SizingError(f"T 必须是方阵，实际形状: {raw.shape}")
        _check_size(raw.shape[0])
        if not np.issubdtype(raw.dtype, np.integer):
            if not np.array_equal(raw, np.round(raw)):
                raise InvariantViolationError("T 必须是整数矩阵")
        entries = raw.astype(np.int64, copy=True)
        if self.memory_count < 0:
            raise InvariantViolationError(f"memory_count 不能为负: {self.memory_count}")

        if not np.array_equal(entries, entries.T):
            raise InvariantViolationError("T 必须对称")
        if np.any(np.diagonal(entries) != 0):
            raise InvariantViolationError("T 的对角线必须为 0")
        off = ~np.eye(entries.shape[0], dtype=bool)
        if np.any(np.abs(entries[off]) > self.memory_count):
            raise InvariantViolationError(f"T 的非对角元绝对值超过记忆数 {self.memory_count}")
        if np.any((entries[off] + self.memory_count) % 2 != 0):
            raise InvariantViolationError("T 的非对角元与记忆数奇偶性不一致")

        object.__setattr__(self, "entries", _frozen(entries))

    @classmethod
    def zeros(cls, n: int) -> "TMatrix":
        _check_size(n)
        return cls(np.zeros((n, n), dtype=np.int64), 0)

    @classmethod
    def _trusted(cls, entries: np.ndarray, memory_count: int) -> "TMatrix":
        """内部快速通道：调用方保证 entries 是合法 T（例如合法 T 的重新标号）"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", _frozen(np.ascontiguousarray(entries, dtype=np.int64)))
        object.__setattr__(obj, "memory_count", memory_count)
        return obj

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TMatrix):
            return NotImplemented
        return self.memory_count == other.memory_count and np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class BMatrix:
    """T 的严格下三角部分：i <= j 时 B_ij = 0"""

    entries: np.ndarray

    def __post_init__(self) -> None:
        raw = np.asarray(self.entries)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise SizingError(f"B 必须是方阵，实际形状: {raw.shape}")
        _check_size(raw.shape[0])
        entries = raw.astype(np.int64, copy=True)
        if np.any(np.triu(entries) != 0):
            raise InvariantViolationError("B 必须严格下三角（对角线及以上全为 0）")
        object.__setattr__(self, "entries", _frozen(entries))

    @classmethod
    def _trusted(cls, entries: np.ndarray) -> "BMatrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", _frozen(entries))
        return obj

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def reconstruct(self) -> np.ndarray:
        """B + Bᵗ"""
        return self.entries + self.entries.T

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


def _check_match(T: TMatrix, x: BipolarVector) -> None:
    if x.n != T.n:
        raise SizingError(f"向量长度 {x.n} 与网络规模 {T.n} 不一致")


def accumulate_memory(T: TMatrix, x: BipolarVector) -> TMatrix:
    """
    Hebbian 增量训练：T' = T + x xᵗ，对角线保持为 0

    返回新的 TMatrix，原对象不变。
    """
    _check_match(T, x)
    v = x.values.astype(np.int64)
    entries = T.entries + np.outer(v, v)
    np.fill_diagonal(entries, 0)
    return TMatrix._trusted(entries, T.memory_count + 1)


def train(memories: Sequence[BipolarVector], n: Optional[int] = None) -> TMatrix:
    """从全零矩阵开始依次累积所有记忆；memories 为空时需要给出 n"""
    if n is None:
        if not memories:
            raise SizingError("没有记忆时必须显式给出网络规模 n")
        n = memories[0].n
    T = TMatrix.zeros(n)
    for x in memories:
        T = accumulate_memory(T, x)
    return T


def is_stored(T: TMatrix, x: BipolarVector) -> bool:
    """存储判定：对每个 i 都有 sgn(Σ_j T_ij x_j) = x_i（单次同步检查）"""
    _check_match(T, x)
    fields = T.entries @ x.values.astype(np.int64)
    return bool(np.array_equal(sgn_array(fields), x.values))


def count_stored(T: TMatrix, fed: Iterable[BipolarVector]) -> int:
    """
    统计喂入列表中满足存储判定的记忆数

    重复喂入的记忆按位置分别计数；空列表返回 0。
    """
    fed = list(fed)
    if not fed:
        return 0
    for x in fed:
        _check_match(T, x)
    X = np.stack([x.values for x in fed]).astype(np.int64)
    # 每行是一条记忆对应的局部场
    fields = X @ T.entries
    return int(np.sum(np.all(sgn_array(fields) == X, axis=1)))


def lower_triangular(T: Union[TMatrix, np.ndarray]) -> BMatrix:
    """
    B 矩阵分解：B_ij = T_ij (i > j)，其余为 0，保证 B + Bᵗ = T

    传入原始数组时同样检查对称与零对角。
    """
    if isinstance(T, TMatrix):
        entries = T.entries
    else:
        entries = np.asarray(T)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise SizingError(f"T 必须是方阵，实际形状: {entries.shape}")
        _check_size(entries.shape[0])
        if not np.array_equal(entries, entries.T):
            raise InvariantViolationError("T 不对称，无法分解为 B + Bᵗ")
        if np.any(np.diagonal(entries) != 0):
            raise InvariantViolationError("T 对角线非零，无法分解为 B + Bᵗ")
        entries = entries.astype(np.int64)
    return BMatrix._trusted(np.tril(entries, k=-1))
