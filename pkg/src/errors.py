"""
异常体系

核心模块只负责抛出，CLI 负责把异常翻译成退出码：
- 2：参数/校验类错误（SizingError、NeuronIndexError、ConfigError ...）
- 1：运行期或 I/O 错误（ReportIOError 以及其他 OSError）
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union


class BMatrixError(Exception):
    """本项目所有异常的基类"""


class SizingError(BMatrixError, ValueError):
    """维度不匹配，或网络规模 n < 2"""


class InvariantViolationError(BMatrixError, ValueError):
    """矩阵不满足结构约束（对称、零对角、严格下三角 ...）"""


class PermutationError(BMatrixError, ValueError):
    """更新顺序不是 1..n 上的合法排列"""


class NeuronIndexError(BMatrixError, IndexError):
    """神经元编号越界（对外编号从 1 开始）"""


class ConfigError(BMatrixError, ValueError):
    """未知策略、非法种子、预设缺失等配置问题"""


class ReportIOError(BMatrixError, OSError):
    """写出报告失败，带上目标路径方便排查"""

    def __init__(self, path: Optional[Union[str, Path]], reason: str):
        self.path = str(path) if path is not None else "<stream>"
        super().__init__(f"写入 {self.path} 失败: {reason}")
